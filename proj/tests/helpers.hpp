#ifndef FST_TESTS_HELPERS_HPP
#define FST_TESTS_HELPERS_HPP

#include <algorithm>
#include <functional>
#include <string>
#include <vector>

#include "fst/conditions.hpp"
#include "fst/core.hpp"
#include "fst/relations.hpp"

namespace fst::testing {

/// All variables with 1 <= depth <= maxDepth, ascending in the variable order.
inline std::vector<Variable> variable_domain(const Rank& rank, int maxDepth) {
  std::vector<Variable> vars;
  for (const Color& c : all_colors(rank))
    for (int n = 1; n <= maxDepth; ++n) vars.emplace_back(c, n);
  std::sort(vars.begin(), vars.end(), VariableLess{});
  return vars;
}

/// Visits every multiset of the variables with minSize <= size <= maxSize.
inline void for_each_multiset(const std::vector<Variable>& vars, int minSize,
                              int maxSize,
                              const std::function<void(const Monomial&)>& visit) {
  std::vector<Variable> current;
  std::function<void(std::size_t)> rec = [&](std::size_t idx) {
    if (static_cast<int>(current.size()) >= minSize) visit(Monomial(current));
    if (static_cast<int>(current.size()) == maxSize || idx == vars.size()) return;
    for (std::size_t next = idx; next < vars.size(); ++next) {
      current.push_back(vars[next]);
      rec(next);
      current.pop_back();
    }
  };
  rec(0);
}

/// Number of partitions of n whose parts differ by at least minDiff and are
/// all >= minPart. Brute force over partitions.
inline long long restricted_partitions(int n, int minPart, int minDiff) {
  std::function<long long(int, int)> count = [&](int remaining, int smallest) {
    if (remaining == 0) return 1LL;
    long long total = 0;
    for (int part = smallest; part <= remaining; ++part)
      total += count(remaining - part, part + minDiff);
    return total;
  };
  return count(n, minPart);
}

/// Deterministic generator of random monomials for property tests.
class MonomialGen {
 public:
  MonomialGen(const Rank& rank, int maxDepth, unsigned seed)
      : vars_(variable_domain(rank, maxDepth)), state_(seed) {}

  Monomial next(int size) {
    std::vector<Variable> factors;
    factors.reserve(static_cast<std::size_t>(size));
    for (int i = 0; i < size; ++i) factors.push_back(vars_[next_index()]);
    return Monomial(std::move(factors));
  }

 private:
  std::size_t next_index() {
    state_ = state_ * 6364136223846793005ull + 1442695040888963407ull;
    return static_cast<std::size_t>((state_ >> 33) % vars_.size());
  }
  std::vector<Variable> vars_;
  unsigned long long state_;
};

/// Maximum antichain size by exhaustive subset search; independent of the
/// matching implementation.
inline int brute_force_max_antichain(const Monomial& m) {
  const auto& f = m.factors();
  int n = static_cast<int>(f.size());
  int best = 0;
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    int size = 0;
    bool antichain = true;
    for (int i = 0; i < n && antichain; ++i) {
      if (!(mask >> i & 1)) continue;
      ++size;
      for (int j = 0; j < n && antichain; ++j)
        if (i != j && (mask >> j & 1) && precedes(f[i], f[j])) antichain = false;
    }
    if (antichain) best = std::max(best, size);
  }
  return best;
}

/// Checks the quadratic-relation catalogue for level 1 at degree 2: each
/// weight multiset of size four determines the support of its relation. The
/// returned string is empty on success.
inline std::string check_quadratic_catalogue(const Rank& rank) {
  auto family = generate_relation_family(rank, 1);
  auto pair_monomial = [](Color a, Color b) {
    return Monomial({Variable(a, 1), Variable(b, 1)});
  };
  for (const auto& [key, poly] : family) {
    std::vector<int> values;  // the multiset as a sorted list of indices
    for (std::size_t i = 0; i < key.size(); ++i)
      for (int c = 0; c < key[i]; ++c) values.push_back(static_cast<int>(i) + 1);

    std::vector<Monomial> expected;
    int a = values[0], b = values[1], c = values[2], d = values[3];
    if (a == b && b == c && c == d) {  // {i^4}
      expected = {pair_monomial(Color(a, a), Color(a, a))};
    } else if (a == b && b == c) {  // {i^3, j}
      expected = {pair_monomial(Color(a, a), Color(a, d))};
    } else if (b == c && c == d) {  // {i, j^3}
      expected = {pair_monomial(Color(a, b), Color(b, b))};
    } else if (a == b && c == d) {  // {i^2, j^2}
      expected = {pair_monomial(Color(a, c), Color(a, c)),
                  pair_monomial(Color(a, a), Color(c, c))};
    } else if (a == b) {  // {i^2, j, k}
      expected = {pair_monomial(Color(a, a), Color(c, d)),
                  pair_monomial(Color(a, c), Color(a, d))};
    } else if (b == c) {  // {i, j^2, k}
      expected = {pair_monomial(Color(a, b), Color(b, d)),
                  pair_monomial(Color(b, b), Color(a, d))};
    } else if (c == d) {  // {i, j, k^2}
      expected = {pair_monomial(Color(a, b), Color(c, c)),
                  pair_monomial(Color(a, c), Color(b, c))};
    } else {  // {i, j, k, l}
      expected = {pair_monomial(Color(a, b), Color(c, d)),
                  pair_monomial(Color(a, c), Color(b, d)),
                  pair_monomial(Color(a, d), Color(b, c))};
    }
    std::sort(expected.begin(), expected.end(), MonomialLess{});

    GradedRelation rel = expand_graded(poly, 2, rank);
    std::vector<Monomial> support;
    for (const auto& [m, coeff] : rel.terms) {
      if (coeff == 0) return "stored zero coefficient";
      support.push_back(m);
    }
    if (support != expected) {
      std::string keytext;
      for (int v : values) keytext += std::to_string(v);
      return "support mismatch for multiset {" + keytext + "}";
    }
  }
  return "";
}

}  // namespace fst::testing

#endif  // FST_TESTS_HELPERS_HPP
