#include "fst/conditions.hpp"

#include <algorithm>
#include <map>

#include "matching.hpp"

namespace fst {

namespace {

struct ColorCount {
  Color color;
  int mult;
};

/// One element per nested diagonal chain over a color support: the exponent
/// sum and the outermost color's row and column.
struct PathSum {
  int sum;
  int outer_row;
  int outer_col;
};

bool nested_inside(const Color& outer, const Color& inner) {
  return outer.row <= inner.row && inner.col <= outer.col;
}

/// Sorts a support so that containment chains are ascending: outer colors
/// come first.
void sort_support(std::vector<ColorCount>& support) {
  std::sort(support.begin(), support.end(), [](const ColorCount& a, const ColorCount& b) {
    if (a.color.row != b.color.row) return a.color.row < b.color.row;
    return a.color.col > b.color.col;
  });
}

void collect_paths(const std::vector<ColorCount>& support, std::size_t start, int last,
                   PathSum partial, std::vector<PathSum>& out) {
  for (std::size_t idx = start; idx < support.size(); ++idx) {
    if (last >= 0 && (!nested_inside(support[last].color, support[idx].color) ||
                      support[last].color == support[idx].color))
      continue;
    PathSum next = partial;
    next.sum += support[idx].mult;
    if (last < 0) {
      next.outer_row = support[idx].color.row;
      next.outer_col = support[idx].color.col;
    }
    out.push_back(next);
    collect_paths(support, idx + 1, static_cast<int>(idx), next, out);
  }
}

/// All nonempty nested chains over the support with full multiplicities.
std::vector<PathSum> nested_paths(std::vector<ColorCount> support) {
  sort_support(support);
  std::vector<PathSum> out;
  collect_paths(support, 0, -1, PathSum{0, 0, 0}, out);
  return out;
}

std::map<int, std::vector<ColorCount>> support_by_depth(const Monomial& m) {
  std::map<int, std::vector<ColorCount>> by_depth;
  for (const Variable& v : m.factors()) {
    auto& vec = by_depth[v.depth];
    if (!vec.empty() && vec.back().color == v.color)
      ++vec.back().mult;
    else
      vec.push_back({v.color, 1});
  }
  return by_depth;
}

int total_mult(const std::vector<ColorCount>& s) {
  int t = 0;
  for (const auto& cc : s) t += cc.mult;
  return t;
}

}  // namespace

DcReport satisfies_dc(const Monomial& m, int level) {
  if (static_cast<int>(m.size()) <= level) return {true, std::nullopt};
  detail::ChainPoset poset(m);
  if (poset.min_chain_cover() <= level) return {true, std::nullopt};
  std::vector<Variable> antichain = poset.max_antichain();
  antichain.resize(static_cast<std::size_t>(level) + 1);
  return {false, std::move(antichain)};
}

bool satisfies_dc_oracle(const Monomial& m, int level) {
  auto by_depth = support_by_depth(m);
  if (by_depth.empty()) return true;
  int max_depth = by_depth.rbegin()->first;
  for (int n = 0; n <= max_depth; ++n) {
    auto deep_it = by_depth.find(n + 1);
    auto shallow_it = by_depth.find(n);
    std::vector<ColorCount> deep =
        deep_it == by_depth.end() ? std::vector<ColorCount>{} : deep_it->second;
    std::vector<ColorCount> shallow =
        shallow_it == by_depth.end() ? std::vector<ColorCount>{} : shallow_it->second;
    if (total_mult(deep) + total_mult(shallow) <= level) continue;
    std::vector<PathSum> deep_paths = nested_paths(deep);
    std::vector<PathSum> shallow_paths = nested_paths(shallow);
    for (const PathSum& s : shallow_paths)
      if (s.sum > level) return false;
    for (const PathSum& d : deep_paths) {
      if (d.sum > level) return false;
      for (const PathSum& s : shallow_paths) {
        if (d.outer_col > s.outer_row) continue;  // paths not joinable
        if (d.sum + s.sum > level) return false;
      }
    }
  }
  return true;
}

bool satisfies_ic(const Monomial& m, const Weight& w) {
  std::vector<ColorCount> depth1;
  for (const Variable& v : m.factors()) {
    if (v.depth != 1) continue;
    if (!depth1.empty() && depth1.back().color == v.color)
      ++depth1.back().mult;
    else
      depth1.push_back({v.color, 1});
  }
  if (depth1.empty()) return true;
  // prefix[j] = k0 + ... + k_{j-1}
  std::vector<int> prefix(static_cast<std::size_t>(w.ell()) + 1, 0);
  for (int j = 1; j <= w.ell(); ++j)
    prefix[static_cast<std::size_t>(j)] =
        prefix[static_cast<std::size_t>(j) - 1] + w.coeff(static_cast<std::size_t>(j) - 1);
  for (const PathSum& p : nested_paths(depth1))
    if (p.sum > prefix[static_cast<std::size_t>(p.outer_col)]) return false;
  return true;
}

Monomial with_imaginary_part(const Monomial& m, const Weight& w) {
  std::vector<Variable> factors = m.factors();
  for (int i = 1; i <= w.ell(); ++i)
    for (int c = 0; c < w.coeff(static_cast<std::size_t>(i)); ++c)
      factors.emplace_back(Color(i, w.ell()), 0);
  return Monomial(std::move(factors));
}

bool satisfies_dc_ic(const Monomial& m, const Weight& w) {
  return satisfies_dc(with_imaginary_part(m, w), w.level()).satisfied;
}

Monomial LeadingShape::to_monomial() const {
  std::vector<Variable> factors;
  for (const auto& [color, exp] : deepPath)
    for (int e = 0; e < exp; ++e) factors.emplace_back(color, depth + 1);
  for (const auto& [color, exp] : shallowPath)
    for (int e = 0; e < exp; ++e) factors.emplace_back(color, depth);
  return Monomial(std::move(factors));
}

namespace {

using ColorPath = std::vector<std::pair<Color, int>>;

void collect_exponent_paths(const std::vector<Color>& colors, std::size_t start,
                            int last, int budget, ColorPath& current,
                            std::vector<ColorPath>& out) {
  if (budget == 0) {
    out.push_back(current);
    return;
  }
  for (std::size_t idx = start; idx < colors.size(); ++idx) {
    if (last >= 0 &&
        (!nested_inside(colors[static_cast<std::size_t>(last)], colors[idx]) ||
         colors[static_cast<std::size_t>(last)] == colors[idx]))
      continue;
    for (int e = 1; e <= budget; ++e) {
      current.emplace_back(colors[idx], e);
      collect_exponent_paths(colors, idx + 1, static_cast<int>(idx), budget - e,
                             current, out);
      current.pop_back();
    }
  }
}

std::vector<ColorPath> exponent_paths(const std::vector<Color>& colors, int budget) {
  std::vector<ColorPath> out;
  if (budget == 0) {
    out.push_back({});
    return out;
  }
  ColorPath current;
  collect_exponent_paths(colors, 0, -1, budget, current, out);
  return out;
}

}  // namespace

std::vector<LeadingShape> enumerate_leading_shapes(const Rank& rank, int level,
                                                   int degree) {
  std::vector<LeadingShape> out;
  int parts = level + 1;
  if (degree < parts) return out;
  int n = degree / parts;
  int m_deep = degree % parts;

  std::vector<Color> colors = all_colors(rank);
  std::sort(colors.begin(), colors.end(), [](const Color& a, const Color& b) {
    if (a.row != b.row) return a.row < b.row;
    return a.col > b.col;
  });

  std::vector<ColorPath> deep_paths = exponent_paths(colors, m_deep);
  std::vector<ColorPath> shallow_paths = exponent_paths(colors, parts - m_deep);
  for (const ColorPath& deep : deep_paths) {
    for (const ColorPath& shallow : shallow_paths) {
      if (!deep.empty() && !shallow.empty() &&
          deep.front().first.col > shallow.front().first.row)
        continue;
      out.push_back(LeadingShape{n, deep, shallow});
    }
  }
  return out;
}

std::vector<int> color_index_counts(const Monomial& m, const Rank& rank) {
  std::vector<int> counts(static_cast<std::size_t>(rank.ell()), 0);
  for (const Variable& v : m.factors()) {
    counts.at(static_cast<std::size_t>(v.color.row) - 1)++;
    counts.at(static_cast<std::size_t>(v.color.col) - 1)++;
  }
  return counts;
}

}  // namespace fst
