#include "fst/relations.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <sstream>

#include "fst/conditions.hpp"

namespace fst {

namespace {

bool reading_order(const Color& a, const Color& b) {
  if (a.row != b.row) return a.row < b.row;
  return a.col < b.col;
}

void add_term(ColorPolynomial& poly, std::vector<Color> colors, const Rational& c) {
  std::sort(colors.begin(), colors.end(), reading_order);
  auto [it, inserted] = poly.terms.try_emplace(std::move(colors), Rational(0));
  it->second += c;
  if (it->second == 0) poly.terms.erase(it);
}

/// Image of a single color under the p-th lowering, as (color, coefficient)
/// contributions.
std::vector<std::pair<Color, Rational>> lower_color(int p, const Color& c) {
  std::vector<std::pair<Color, Rational>> out;
  if (c.row == p && c.col == p) {
    out.emplace_back(Color(p, p + 1), Rational(2));
  } else {
    if (c.row == p && c.row < c.col) out.emplace_back(Color(p + 1, c.col), Rational(1));
    if (c.col == p && c.row < c.col) out.emplace_back(Color(c.row, p + 1), Rational(1));
  }
  return out;
}

}  // namespace

bool ColorTupleLess::operator()(const std::vector<Color>& a,
                                const std::vector<Color>& b) const {
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end(),
                                      reading_order);
}

ColorPolynomial lower(int p, const ColorPolynomial& poly, const Rank& rank) {
  if (p < 1 || p > rank.ell() - 1)
    throw std::invalid_argument("lower: simple root index out of range");
  ColorPolynomial out;
  for (const auto& [colors, coeff] : poly.terms) {
    std::size_t idx = 0;
    while (idx < colors.size()) {
      std::size_t run = idx;
      while (run < colors.size() && colors[run] == colors[idx]) ++run;
      int mult = static_cast<int>(run - idx);
      for (const auto& [image, factor] : lower_color(p, colors[idx])) {
        std::vector<Color> next = colors;
        next[idx] = image;
        add_term(out, std::move(next), coeff * factor * mult);
      }
      idx = run;
    }
  }
  return out;
}

RelationKey relation_key(const ColorPolynomial& poly, const Rank& rank) {
  if (poly.empty()) throw std::invalid_argument("relation_key: empty polynomial");
  RelationKey key(static_cast<std::size_t>(rank.ell()), 0);
  for (const Color& c : poly.terms.begin()->first) {
    key.at(static_cast<std::size_t>(c.row) - 1)++;
    key.at(static_cast<std::size_t>(c.col) - 1)++;
  }
  return key;
}

namespace {

/// True when a == t * b for one scalar t (both nonzero maps with equal keys).
bool proportional(const ColorPolynomial& a, const ColorPolynomial& b) {
  if (a.terms.size() != b.terms.size()) return false;
  Rational ratio = 0;
  for (auto ita = a.terms.begin(), itb = b.terms.begin(); ita != a.terms.end();
       ++ita, ++itb) {
    if (ita->first != itb->first) return false;
    Rational r = ita->second / itb->second;
    if (ratio == 0)
      ratio = r;
    else if (r != ratio)
      return false;
  }
  return true;
}

}  // namespace

std::map<RelationKey, ColorPolynomial> generate_relation_family(const Rank& rank,
                                                                int level) {
  ColorPolynomial top;
  top.terms[std::vector<Color>(static_cast<std::size_t>(level) + 1, Color(1, 1))] =
      Rational(1);

  std::map<RelationKey, ColorPolynomial> family;
  std::deque<RelationKey> queue;
  RelationKey top_key = relation_key(top, rank);
  family[top_key] = std::move(top);
  queue.push_back(top_key);

  while (!queue.empty()) {
    RelationKey key = queue.front();
    queue.pop_front();
    for (int p = 1; p <= rank.ell() - 1; ++p) {
      ColorPolynomial lowered = lower(p, family.at(key), rank);
      if (lowered.empty()) continue;
      RelationKey lowered_key = relation_key(lowered, rank);
      auto it = family.find(lowered_key);
      if (it == family.end()) {
        family[lowered_key] = std::move(lowered);
        queue.push_back(lowered_key);
      } else if (!proportional(lowered, it->second)) {
        // Weight spaces of the relation module are one-dimensional; a
        // non-proportional revisit means the lowering rules are broken.
        throw std::logic_error("generate_relation_family: weight space collision");
      }
    }
  }
  return family;
}

namespace {

void compositions(const std::vector<Color>& colors, std::size_t idx, int remaining,
                  std::vector<Variable>& current,
                  const std::function<void(const Monomial&)>& visit) {
  if (idx + 1 == colors.size()) {
    current.emplace_back(colors[idx], remaining);
    visit(Monomial(current));
    current.pop_back();
    return;
  }
  int tail = static_cast<int>(colors.size() - idx - 1);  // each later factor needs >= 1
  for (int n = 1; remaining - n >= tail; ++n) {
    current.emplace_back(colors[idx], n);
    compositions(colors, idx + 1, remaining - n, current, visit);
    current.pop_back();
  }
}

}  // namespace

GradedRelation expand_graded(const ColorPolynomial& poly, int degree,
                             const Rank& rank) {
  GradedRelation rel;
  rel.key = relation_key(poly, rank);
  rel.degree = degree;
  for (const auto& [colors, coeff] : poly.terms) {
    if (degree < static_cast<int>(colors.size())) continue;
    std::vector<Variable> current;
    compositions(colors, 0, degree, current,
                 [&](const Monomial& m) { rel.terms[m] += coeff; });
  }
  for (auto it = rel.terms.begin(); it != rel.terms.end();)
    it = it->second == 0 ? rel.terms.erase(it) : std::next(it);
  if (!rel.terms.empty()) {
    Rational lead = rel.terms.begin()->second;
    for (auto& [m, c] : rel.terms) c /= lead;
  }
  return rel;
}

Monomial leading_term(const GradedRelation& rel) {
  if (rel.terms.empty()) throw std::invalid_argument("leading_term: empty relation");
  return rel.terms.begin()->first;
}

VerificationReport verify_leading_terms(const Rank& rank, int level, int maxDegree) {
  VerificationReport report;
  auto family = generate_relation_family(rank, level);
  for (int degree = level + 1; degree <= maxDegree; ++degree) {
    std::map<RelationKey, Monomial> predicted;
    for (const LeadingShape& shape : enumerate_leading_shapes(rank, level, degree)) {
      Monomial m = shape.to_monomial();
      RelationKey key(static_cast<std::size_t>(rank.ell()), 0);
      for (const Variable& v : m.factors()) {
        key.at(static_cast<std::size_t>(v.color.row) - 1)++;
        key.at(static_cast<std::size_t>(v.color.col) - 1)++;
      }
      auto [it, inserted] = predicted.emplace(key, m);
      if (!inserted)
        report.failures.push_back("duplicate shape for a multiset at degree " +
                                  std::to_string(degree));
    }
    for (const auto& [key, poly] : family) {
      ++report.checked;
      GradedRelation rel = expand_graded(poly, degree, rank);
      auto it = predicted.find(key);
      if (it == predicted.end()) {
        report.failures.push_back("no predicted shape for a multiset at degree " +
                                  std::to_string(degree));
        continue;
      }
      if (rel.terms.empty()) {
        report.failures.push_back("empty graded relation at degree " +
                                  std::to_string(degree));
        continue;
      }
      if (leading_term(rel) != it->second)
        report.failures.push_back("leading term mismatch at degree " +
                                  std::to_string(degree) + ": got " +
                                  format_monomial(leading_term(rel)) + ", predicted " +
                                  format_monomial(it->second));
    }
    if (predicted.size() != family.size())
      report.failures.push_back("shape count differs from relation count at degree " +
                                std::to_string(degree));
  }
  return report;
}

std::string relation_to_json(const GradedRelation& rel) {
  std::ostringstream os;
  os << "{\"multiset\":[";
  for (std::size_t i = 0; i < rel.key.size(); ++i) {
    if (i) os << ',';
    os << rel.key[i];
  }
  os << "],\"degree\":" << rel.degree << ",\"terms\":[";
  bool first = true;
  for (const auto& [m, c] : rel.terms) {
    if (!first) os << ',';
    first = false;
    os << "{\"monomial\":\"" << format_monomial(m) << "\",\"coeff\":\"" << to_string(c)
       << "\"}";
  }
  os << "]}";
  return os.str();
}

}  // namespace fst
