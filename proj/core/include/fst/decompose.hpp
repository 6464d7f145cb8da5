#ifndef FST_DECOMPOSE_HPP
#define FST_DECOMPOSE_HPP

#include <optional>
#include <string>
#include <vector>

#include "fst/core.hpp"

namespace fst {

/// Factorization of a level-k monomial into k level-1 monomials together with
/// the fundamental weight index assigned to each part.
struct Factorization {
  std::vector<Monomial> parts;
  std::vector<int> assignments;  // fundamental indices i_j in 0..ell
};

/// Partition of the factor multiset into exactly `level` chains of the
/// `precedes` order (padded with empty chains), or nullopt when the maximum
/// antichain exceeds `level`. Chains are listed deterministically and each is
/// ascending.
std::optional<std::vector<std::vector<Variable>>> chain_cover(const Monomial& m,
                                                              int level);

/// Constructive level-1 factorization: appends the imaginary part, covers by
/// chains, assigns each chain holding x_{il}(0) the weight Lambda_i and the
/// remaining chains Lambda_0, then strips the depth-0 factors. Present iff
/// the monomial satisfies difference and initial conditions for w.
std::optional<Factorization> factorize(const Monomial& m, const Weight& w);

struct VerificationReport {
  long long checked = 0;
  std::vector<std::string> failures;
  bool ok() const { return failures.empty(); }
};

/// Exhaustive check over all monomials of total degree <= maxDegree that
/// factorize succeeds exactly on the monomials satisfying DC and IC, with all
/// factorization invariants holding on success.
VerificationReport verify_factorization_theorem(const Rank& rank, const Weight& w,
                                                int maxDegree);

/// JSON text {"parts":[...],"weights":[...]} for a factorization.
std::string factorization_to_json(const Factorization& f);

}  // namespace fst

#endif  // FST_DECOMPOSE_HPP
