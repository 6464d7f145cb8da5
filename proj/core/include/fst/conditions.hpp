#ifndef FST_CONDITIONS_HPP
#define FST_CONDITIONS_HPP

#include <optional>
#include <utility>
#include <vector>

#include "fst/core.hpp"

namespace fst {

/// Verdict of a difference-condition check. When the conditions fail the
/// report carries a witness: level+1 factors of the monomial that are
/// pairwise incomparable under the `precedes` order.
struct DcReport {
  bool satisfied = true;
  std::optional<std::vector<Variable>> witness;
};

/// Difference conditions at the given level, decided by computing a maximum
/// antichain of the factor multiset under `precedes` (minimum chain cover via
/// bipartite matching). Equal factors count as mutually incomparable.
DcReport satisfies_dc(const Monomial& m, int level);

/// Independent ground truth for satisfies_dc: enumerates, for every depth n,
/// the admissible diagonal index chains over the factors of depths n+1 and n
/// and checks that every chain's multiplicity sum stays <= level. Makes no
/// use of the `precedes` order.
bool satisfies_dc_oracle(const Monomial& m, int level);

/// Initial conditions for W(Lambda): every nested chain of depth-1 colors
/// with outermost column j1 has multiplicity sum <= k0 + ... + k_{j1-1}.
bool satisfies_ic(const Monomial& m, const Weight& w);

/// Appends the imaginary part x_{1l}(0)^{k1} x_{2l}(0)^{k2} ... x_{ll}(0)^{kl}.
Monomial with_imaginary_part(const Monomial& m, const Weight& w);

/// Combined difference and initial conditions, computed as the difference
/// conditions of m times the imaginary part at level k. Equals
/// satisfies_dc(m, k) && satisfies_ic(m, w); the redundancy is exercised by
/// the test suite.
bool satisfies_dc_ic(const Monomial& m, const Weight& w);

/// Shape of a leading term: for degree N = (level+1)*n + m_deep, `deepPath`
/// holds the colors and exponents at depth n+1 and `shallowPath` those at
/// depth n. Both paths are nested diagonal chains, the outermost color first,
/// and the outermost deep column does not exceed the outermost shallow row.
struct LeadingShape {
  int depth = 1;  // n
  std::vector<std::pair<Color, int>> deepPath;     // exponents b, sum = m_deep
  std::vector<std::pair<Color, int>> shallowPath;  // exponents a

  Monomial to_monomial() const;
};

/// All leading-term shapes of the given total degree. Empty when
/// N < level + 1. Exactly one shape exists per weight multiset of size
/// 2(level+1); the relation engine checks that prediction.
std::vector<LeadingShape> enumerate_leading_shapes(const Rank& rank, int level,
                                                   int degree);

/// Weight multiset of a monomial's colors as counts per index 1..ell: every
/// factor (i,j) contributes both i and j.
std::vector<int> color_index_counts(const Monomial& m, const Rank& rank);

}  // namespace fst

#endif  // FST_CONDITIONS_HPP
