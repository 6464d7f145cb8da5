// Acceptance suite: runs every advertised guarantee end to end and prints
// one PASS/FAIL line per criterion. Exit code 0 only when all pass.

#include <chrono>
#include <cstdio>
#include <functional>
#include <numeric>
#include <sstream>
#include <string>
#include <vector>

#include "fst/conditions.hpp"
#include "fst/core.hpp"
#include "fst/decompose.hpp"
#include "fst/enumerate.hpp"
#include "fst/model.hpp"
#include "fst/relations.hpp"
#include "helpers.hpp"

using namespace fst;

namespace {

struct Criterion {
  bool pass = true;
  std::string detail;

  void fail(const std::string& why) {
    pass = false;
    if (!detail.empty()) detail += "; ";
    detail += why;
  }
  void note(const std::string& text) {
    if (detail.empty()) detail = text;
  }
};

// 1. Total-order axioms for <, strict-partial-order axioms for the chain
//    order, and its two characterizations; exhaustive for l <= 3, depth <= 4.
Criterion order_poset_suite() {
  Criterion c;
  Rank rank(3);
  auto vars = testing::variable_domain(rank, 4);
  int n = static_cast<int>(vars.size());

  for (int i = 0; i < n; ++i) {
    if (compare_variables(vars[i], vars[i]) != 0) c.fail("variable order not reflexive");
    if (precedes(vars[i], vars[i])) c.fail("chain order not irreflexive");
  }
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      auto ij = compare_variables(vars[i], vars[j]);
      auto ji = compare_variables(vars[j], vars[i]);
      if ((ij == 0) != (vars[i] == vars[j])) c.fail("variable order not antisymmetric");
      if ((ij < 0) != (ji > 0)) c.fail("variable order not total");
      if (precedes(vars[i], vars[j]) && precedes(vars[j], vars[i]))
        c.fail("chain order not antisymmetric");
      bool expected = variable_less(vars[i], vars[j]) &&
                      satisfies_dc_oracle(Monomial({vars[i], vars[j]}), 1);
      if (precedes(vars[i], vars[j]) != expected)
        c.fail("chain order disagrees with level-1 DC characterization");
      for (int k = 0; k < n; ++k) {
        if (ij < 0 && compare_variables(vars[j], vars[k]) < 0 &&
            compare_variables(vars[i], vars[k]) >= 0)
          c.fail("variable order not transitive");
        if (precedes(vars[i], vars[j]) && precedes(vars[j], vars[k]) &&
            !precedes(vars[i], vars[k]))
          c.fail("chain order not transitive");
      }
    }

  std::vector<Monomial> monomials;
  testing::for_each_multiset(vars, 0, 3,
                             [&](const Monomial& m) { monomials.push_back(m); });
  std::sort(monomials.begin(), monomials.end(), MonomialLess{});
  for (std::size_t i = 0; i < monomials.size() && c.pass; ++i)
    for (std::size_t j = i; j < monomials.size(); ++j) {
      auto cmp = compare_monomials(monomials[i], monomials[j]);
      if ((i == j && cmp != 0) || (i != j && cmp >= 0)) {
        c.fail("monomial order axioms broken");
        break;
      }
    }

  std::ostringstream os;
  os << n << " variables, " << monomials.size() << " monomials";
  c.note(os.str());
  return c;
}

// 2. The three routes to difference conditions agree: maximum antichain via
//    matching, the path-shape oracle, and chain-cover feasibility.
Criterion dc_equivalence() {
  Criterion c;
  Rank rank(3);
  auto vars = testing::variable_domain(rank, 4);
  long long checked = 0;
  testing::for_each_multiset(vars, 0, 6, [&](const Monomial& m) {
    ++checked;
    for (int level = 1; level <= 3 && c.pass; ++level) {
      bool matching = satisfies_dc(m, level).satisfied;
      if (matching != satisfies_dc_oracle(m, level))
        c.fail("matching vs oracle disagree on " + format_monomial(m) + " at level " +
               std::to_string(level));
      if (matching != chain_cover(m, level).has_value())
        c.fail("matching vs chain cover disagree on " + format_monomial(m) +
               " at level " + std::to_string(level));
    }
  });
  std::ostringstream os;
  os << checked << " monomials x levels 1..3, 0 disagreements";
  c.note(os.str());
  return c;
}

// 3. Leading terms of every relation match the predicted shapes, and the
//    level-1 degree-2 relations reproduce the quadratic catalogue.
Criterion leading_term_theorem() {
  Criterion c;
  long long checked = 0;
  for (int ell = 1; ell <= 3; ++ell)
    for (int level = 1; level <= 2; ++level) {
      VerificationReport report = verify_leading_terms(Rank(ell), level, 6);
      checked += report.checked;
      for (const std::string& f : report.failures) c.fail(f);
    }
  for (int ell = 2; ell <= 4; ++ell) {
    std::string err = testing::check_quadratic_catalogue(Rank(ell));
    if (!err.empty()) c.fail("quadratic catalogue (rank " + std::to_string(ell) +
                             "): " + err);
  }
  std::ostringstream os;
  os << checked << " (key, degree) pairs and quadratic catalogues for ranks 2..4";
  c.note(os.str());
  return c;
}

// 4. Factorization theorem, exhaustive: existence iff DC/IC, with all part
//    and assignment invariants.
Criterion factorization_theorem() {
  Criterion c;
  long long checked = 0;
  for (int ell = 1; ell <= 2; ++ell) {
    Rank rank(ell);
    std::vector<Weight> weights;
    std::vector<int> coeffs(static_cast<std::size_t>(ell) + 1, 0);
    std::function<void(std::size_t, int)> build = [&](std::size_t idx, int rest) {
      if (idx == coeffs.size()) {
        if (rest == 0 && std::accumulate(coeffs.begin(), coeffs.end(), 0) >= 1)
          weights.push_back(Weight(coeffs));
        return;
      }
      for (int v = 0; v <= rest; ++v) {
        coeffs[idx] = v;
        build(idx + 1, rest - v);
      }
      coeffs[idx] = 0;
    };
    for (int level = 1; level <= 3; ++level) build(0, level);
    for (const Weight& w : weights) {
      VerificationReport report = verify_factorization_theorem(rank, w, 5);
      checked += report.checked;
      for (const std::string& f : report.failures)
        c.fail("weight " + w.str() + ": " + f);
    }
  }
  std::ostringstream os;
  os << checked << " (monomial, weight) pairs, 0 counterexamples";
  c.note(os.str());
  return c;
}

// 5. Rank-1 graded dimensions against the brute-force partition oracle up to
//    degree 20: the Rogers-Ramanujan counts.
Criterion rogers_ramanujan_anchor() {
  Criterion c;
  Rank rank(1);
  QSeries vacuum = graded_series(rank, Weight::fundamental(rank, 0), 20);
  QSeries charged = graded_series(rank, Weight::fundamental(rank, 1), 20);
  for (int n = 0; n <= 20; ++n) {
    if (vacuum.coeffs[static_cast<std::size_t>(n)] !=
        testing::restricted_partitions(n, 1, 2))
      c.fail("Lambda_0 coefficient differs at q^" + std::to_string(n));
    if (charged.coeffs[static_cast<std::size_t>(n)] !=
        testing::restricted_partitions(n, 2, 2))
      c.fail("Lambda_1 coefficient differs at q^" + std::to_string(n));
  }
  c.note("both series match the partition oracle to q^20");
  return c;
}

// 6. Per-degree dimension equality of the level-1 quotient models; rational
//    to the stated cutoffs, prime for the rank-3 cutoff-6 run. Dimensions are
//    also pinned to the enumerator's counts.
Criterion quotient_dimensions() {
  Criterion c;
  long long slices = 0;
  auto check_dims = [&](int ell, int r, int cutoff, ScalarMode mode) {
    Rank rank(ell);
    try {
      std::vector<long long> dims = level1_dims(rank, r, cutoff, mode);
      QSeries series = graded_series(rank, Weight::fundamental(rank, r), cutoff);
      if (dims != series.coeffs)
        c.fail("dims differ from enumerator for ell=" + std::to_string(ell) +
               " r=" + std::to_string(r));
      slices += cutoff + 1;
    } catch (const DimensionMismatch& e) {
      c.fail("ell=" + std::to_string(ell) + " r=" + std::to_string(r) + " " +
             to_string(mode) + ": " + e.what());
    }
  };
  for (int ell = 1; ell <= 2; ++ell)
    for (int r = 0; r <= ell; ++r) {
      check_dims(ell, r, 6, ScalarMode::Rational);
      check_dims(ell, r, 6, ScalarMode::Prime);
    }
  for (int r = 0; r <= 3; ++r) {
    check_dims(3, r, 5, ScalarMode::Rational);
    check_dims(3, r, 6, ScalarMode::Prime);
  }
  std::ostringstream os;
  os << slices << " degree slices, dimension equality exact";
  c.note(os.str());
  return c;
}

// 7. Higher-level independence: rank of basis-monomial images and of
//    all-monomial images both equal the enumerator count; prime mode for the
//    whole grid, rational certification on two instances.
Criterion independence_higher_level() {
  Criterion c;
  long long degrees = 0;
  auto run = [&](int ell, const std::vector<int>& coeffs, int maxDegree,
                 ScalarMode mode) -> IndependenceReport {
    Rank rank(ell);
    IndependenceReport report =
        verify_independence(rank, Weight(coeffs), maxDegree, mode);
    degrees += static_cast<long long>(report.degrees.size());
    for (const IndependenceDegree& d : report.degrees)
      if (!d.ok())
        c.fail("weight " + report.weight + " (" + to_string(mode) + ") N=" +
               std::to_string(d.degree) + ": count " + std::to_string(d.count) +
               ", rankBasis " + std::to_string(d.rankBasis) + ", rankAll " +
               std::to_string(d.rankAll));
    return report;
  };

  for (const std::vector<int>& w :
       {std::vector<int>{2, 0}, {1, 1}, {0, 2}, {3, 0}})
    run(1, w, 8, ScalarMode::Prime);
  for (const std::vector<int>& w :
       {std::vector<int>{2, 0, 0}, {1, 1, 0}, {1, 0, 1}, {0, 1, 1}, {0, 0, 2}})
    run(2, w, 5, ScalarMode::Prime);

  // Rational certification; the prime ranks must reproduce exactly.
  IndependenceReport prime1 = run(1, {1, 1}, 8, ScalarMode::Prime);
  IndependenceReport rational1 = run(1, {1, 1}, 8, ScalarMode::Rational);
  IndependenceReport prime2 = run(2, {0, 0, 2}, 5, ScalarMode::Prime);
  IndependenceReport rational2 = run(2, {0, 0, 2}, 5, ScalarMode::Rational);
  auto same = [&](const IndependenceReport& a, const IndependenceReport& b) {
    for (std::size_t i = 0; i < a.degrees.size(); ++i)
      if (a.degrees[i].rankBasis != b.degrees[i].rankBasis ||
          a.degrees[i].rankAll != b.degrees[i].rankAll)
        c.fail("prime and rational ranks differ for weight " + a.weight);
  };
  same(prime1, rational1);
  same(prime2, rational2);

  std::ostringstream os;
  os << degrees << " degree checks, ranks equal counts";
  c.note(os.str());
  return c;
}

// 8. Rewriting direction: the normal form of every inadmissible monomial is
//    supported on strictly greater basis monomials.
Criterion rewriting_direction() {
  Criterion c;
  long long checked = 0;
  for (int ell = 1; ell <= 2; ++ell) {
    Rank rank(ell);
    for (int r = 0; r <= ell; ++r) {
      QuotientModel<Rational> model(rank, r, 5);
      for (int degree = 0; degree <= 5; ++degree) {
        const auto& basis = model.basis(degree);
        for (const Monomial& m : model.monomials(degree)) {
          auto nf = model.normal_form(m);
          bool is_basis =
              std::binary_search(basis.begin(), basis.end(), m, MonomialLess{});
          if (is_basis) continue;
          ++checked;
          for (const auto& [col, coeff] : nf) {
            if (coeff == 0) c.fail("zero coefficient stored");
            if (!monomial_less(m, basis[static_cast<std::size_t>(col)]))
              c.fail("support of " + format_monomial(m) + " not strictly greater");
          }
        }
      }
    }
  }
  std::ostringstream os;
  os << checked << " inadmissible monomials, 0 violations";
  c.note(os.str());
  return c;
}

int run_all() {
  struct Entry {
    const char* name;
    std::function<Criterion()> fn;
  };
  const std::vector<Entry> entries = {
      {"ORDER/POSET SUITE", order_poset_suite},
      {"DC EQUIVALENCE", dc_equivalence},
      {"LEADING-TERM THEOREM", leading_term_theorem},
      {"FACTORIZATION THEOREM", factorization_theorem},
      {"ROGERS-RAMANUJAN ANCHOR", rogers_ramanujan_anchor},
      {"QUOTIENT DIMENSIONS", quotient_dimensions},
      {"INDEPENDENCE AT HIGHER LEVEL", independence_higher_level},
      {"REWRITING DIRECTION", rewriting_direction},
  };
  bool all_pass = true;
  for (std::size_t i = 0; i < entries.size(); ++i) {
    auto start = std::chrono::steady_clock::now();
    Criterion result = entries[i].fn();
    double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
            .count();
    std::printf("%s criterion %zu: %s (%.1fs) - %s\n",
                result.pass ? "PASS" : "FAIL", i + 1, entries[i].name, seconds,
                result.detail.c_str());
    std::fflush(stdout);
    all_pass = all_pass && result.pass;
  }
  return all_pass ? 0 : 1;
}

}  // namespace

int main() { return run_all(); }
