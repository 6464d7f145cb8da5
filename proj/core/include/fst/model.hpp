#ifndef FST_MODEL_HPP
#define FST_MODEL_HPP

#include <map>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

#include "fst/core.hpp"
#include "fst/relations.hpp"
#include "fst/scalar.hpp"

namespace fst {

/// Thrown when a degree slice of a quotient model does not split as
/// (row space of the relation ideal) + (span of the DC/IC monomials).
struct DimensionMismatch : std::runtime_error {
  DimensionMismatch(int degree_, long long expected_, long long got_)
      : std::runtime_error("dimension mismatch at degree " + std::to_string(degree_) +
                           ": expected " + std::to_string(expected_) + ", got " +
                           std::to_string(got_)),
        degree(degree_),
        expected(expected_),
        got(got_) {}
  int degree;
  long long expected;
  long long got;
};

/// Sparse coordinate vector over the DC/IC basis monomials of one degree.
template <class S>
using Coordinates = std::vector<std::pair<int, S>>;

/// The level-1 quotient model Q(Lambda_r) = C[x_gamma(-n) : n >= 1] / I_r up
/// to a degree cutoff, with normal forms over the DC/IC monomial basis of
/// each degree. Construction verifies, degree by degree, that the relation
/// ideal's row space is exactly the span of the non-basis monomials and
/// throws DimensionMismatch otherwise. Immutable once built.
template <class S>
class QuotientModel {
 public:
  QuotientModel(const Rank& rank, int fundamental, int cutoff, int jobs = 1);

  const Rank& rank() const { return rank_; }
  int fundamental() const { return fundamental_; }
  int cutoff() const { return cutoff_; }

  /// Graded dimensions dim Q(Lambda_r)_N for N = 0..cutoff.
  std::vector<long long> dims() const;

  const std::vector<Monomial>& basis(int degree) const;
  const std::vector<Monomial>& monomials(int degree) const;

  /// Coordinates of the class of m over the basis of its degree. Basis
  /// monomials map to their own unit vector; for any other monomial every
  /// support monomial is strictly greater.
  Coordinates<S> normal_form(const Monomial& m) const;

  /// Multiplication by x_color(-depth) followed by normal form, extended
  /// linearly from degree N to degree N + depth.
  Coordinates<S> act(const Variable& v, int degree, const Coordinates<S>& vec) const;

 private:
  struct DegreeSlice {
    std::vector<Monomial> monomials;  // ascending monomial order
    std::vector<Monomial> basis;      // the DC/IC monomials, ascending
    std::vector<int> basis_col;       // monomial index -> basis column or -1
    // For each non-basis monomial index: class(m) as basis coordinates.
    std::map<int, Coordinates<S>> reduced;
  };

  void build_degree(int degree, const std::map<RelationKey, ColorPolynomial>& family);
  const DegreeSlice& slice(int degree) const;
  int index_of(const DegreeSlice& s, const Monomial& m) const;

  Rank rank_;
  int fundamental_;
  int cutoff_;
  std::vector<DegreeSlice> slices_;
};

/// Vector in the degree-N slice of the tensor product of level-1 quotient
/// models, with one slot per level of the weight. Keys list each slot's
/// (degree, basis index) pair.
template <class S>
struct TensorVector {
  using Key = std::vector<std::pair<int, int>>;
  int degree = 0;
  std::map<Key, S> coords;
};

/// The embedding of W(Lambda) into the tensor product of level-1 models:
/// Q(Lambda_0)^{k0} x ... x Q(Lambda_l)^{kl}. Monomials act by the iterated
/// coproduct, each variable as the sum of its one-slot actions.
template <class S>
class TensorModel {
 public:
  TensorModel(const Rank& rank, const Weight& w, int cutoff, int jobs = 1);

  const Weight& weight() const { return weight_; }
  int cutoff() const { return cutoff_; }
  const std::vector<int>& slots() const { return slots_; }

  /// The class of the highest weight vector: every slot in its degree-0
  /// basis class.
  TensorVector<S> vacuum() const;

  TensorVector<S> apply(const Variable& v, const TensorVector<S>& vec) const;
  TensorVector<S> apply(const Monomial& m, const TensorVector<S>& base) const;

 private:
  Rank rank_;
  Weight weight_;
  int cutoff_;
  std::vector<int> slots_;  // fundamental index per tensor slot
  std::map<int, std::shared_ptr<const QuotientModel<S>>> models_;
};

struct IndependenceDegree {
  int degree = 0;
  long long count = 0;
  long long rankBasis = 0;
  long long rankAll = 0;
  bool ok() const { return rankBasis == count && rankAll == count; }
};

struct IndependenceReport {
  std::string weight;
  ScalarMode mode = ScalarMode::Rational;
  std::vector<IndependenceDegree> degrees;
  bool ok() const {
    for (const auto& d : degrees)
      if (!d.ok()) return false;
    return true;
  }
};

/// For each degree N <= maxDegree: applies every DC/IC basis monomial to the
/// highest weight vector in the tensor model and checks that the images have
/// full rank = count, then does the same for all monomials of degree N
/// (spanning + independence = dimension).
IndependenceReport verify_independence(const Rank& rank, const Weight& w,
                                       int maxDegree, ScalarMode mode, int jobs = 1);

/// JSON text for the report:
/// {"weight":...,"degrees":[{"N":..,"count":..,"rankBasis":..,"rankAll":..,"ok":..}],
///  "mode":...}.
std::string independence_to_json(const IndependenceReport& report);

/// Graded dimensions of Q(Lambda_r) built at the given cutoff; throws
/// DimensionMismatch when the defining invariant fails.
std::vector<long long> level1_dims(const Rank& rank, int fundamental, int cutoff,
                                   ScalarMode mode, int jobs = 1);

extern template class QuotientModel<Rational>;
extern template class QuotientModel<Fp>;
extern template class TensorModel<Rational>;
extern template class TensorModel<Fp>;

}  // namespace fst

#endif  // FST_MODEL_HPP
