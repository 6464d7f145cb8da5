#ifndef FST_ENUMERATE_HPP
#define FST_ENUMERATE_HPP

#include <functional>
#include <string>
#include <vector>

#include "fst/core.hpp"

namespace fst {

/// Graded dimensions of W(Lambda) as a truncated integer q-series.
struct QSeries {
  int cutoff = 0;
  std::vector<long long> coeffs;  // c_0 .. c_cutoff
};

/// All monomials of the given total degree, ascending in the monomial order.
/// No difference- or initial-condition filtering.
std::vector<Monomial> all_monomials(const Rank& rank, int degree);

/// Streams every monomial of the given total degree satisfying difference
/// and initial conditions for w. Generation backtracks over variables and
/// prunes as soon as a partial monomial violates the (hereditary) conditions;
/// emission order is unspecified.
void enumerate_basis(const Rank& rank, const Weight& w, int degree,
                     const std::function<void(const Monomial&)>& visit);

/// List form of the streaming enumeration, ascending in the monomial order.
std::vector<Monomial> enumerate_basis(const Rank& rank, const Weight& w, int degree);

/// c_N = number of DC/IC monomials of degree N, for N <= cutoff. Degrees are
/// independent; `jobs` bounds worker threads.
QSeries graded_series(const Rank& rank, const Weight& w, int cutoff, int jobs = 1);

/// "1 + q^2 + q^3 + q^4 + 2q^5" style rendering.
std::string format_qseries(const QSeries& s);

/// Runs fn(0), ..., fn(count-1), on up to `jobs` threads.
void parallel_for(int jobs, int count, const std::function<void(int)>& fn);

}  // namespace fst

#endif  // FST_ENUMERATE_HPP
