#ifndef FST_RELATIONS_HPP
#define FST_RELATIONS_HPP

#include <map>
#include <string>
#include <vector>

#include "fst/core.hpp"
#include "fst/decompose.hpp"
#include "fst/scalar.hpp"

namespace fst {

struct ColorTupleLess {
  bool operator()(const std::vector<Color>& a, const std::vector<Color>& b) const;
};

/// A rational linear combination of degree-(level+1) color multisets; the
/// z-level form of one relation. Term keys are sorted ascending in (row, col).
struct ColorPolynomial {
  std::map<std::vector<Color>, Rational, ColorTupleLess> terms;

  bool empty() const { return terms.empty(); }
};

/// Weight multiset (m_1, ..., m_ell) labeling one relation: counts of each
/// index among the rows and columns of any of its terms; the counts sum to
/// 2(level+1).
using RelationKey = std::vector<int>;

/// One relation restricted to a total degree: a normalized rational
/// combination of monomials, all of the given degree and with all factor
/// depths >= 1. The smallest monomial carries coefficient 1.
struct GradedRelation {
  RelationKey key;
  int degree = 0;
  std::map<Monomial, Rational, MonomialLess> terms;
};

/// Image of a color polynomial under the lowering operator for the simple
/// root index p (1 <= p <= ell-1): x_{pj} -> x_{p+1,j}, x_{ip} -> x_{i,p+1},
/// x_{pp} -> 2 x_{p,p+1}, extended as a derivation over products.
ColorPolynomial lower(int p, const ColorPolynomial& poly, const Rank& rank);

/// Closure of x_{11}^{level+1} under all lowerings: exactly one color
/// polynomial per multiset of size 2(level+1) over {1..ell}. Weight spaces
/// are one-dimensional; revisits are checked for proportionality and any
/// disagreement throws.
std::map<RelationKey, ColorPolynomial> generate_relation_family(const Rank& rank,
                                                                int level);

RelationKey relation_key(const ColorPolynomial& poly, const Rank& rank);

/// Expands a relation at total degree N over all compositions with every
/// factor depth >= 1 (the truncation that holds on W(Lambda)), collecting
/// canonical monomials and normalizing the leading coefficient to 1.
GradedRelation expand_graded(const ColorPolynomial& poly, int degree,
                             const Rank& rank);

/// The smallest monomial of the relation; throws on an empty relation.
Monomial leading_term(const GradedRelation& rel);

/// Checks, for every relation key and every degree <= maxDegree, that the
/// expanded relation's leading term is the monomial predicted by the leading
/// shape of that key and degree, and that exactly one shape exists per key.
VerificationReport verify_leading_terms(const Rank& rank, int level, int maxDegree);

/// JSON text {"multiset":[...],"degree":N,"terms":[{"monomial":...,"coeff":...}]}.
std::string relation_to_json(const GradedRelation& rel);

}  // namespace fst

#endif  // FST_RELATIONS_HPP
