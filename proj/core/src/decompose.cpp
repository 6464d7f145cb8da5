#include "fst/decompose.hpp"

#include <algorithm>
#include <sstream>

#include "fst/conditions.hpp"
#include "fst/enumerate.hpp"
#include "matching.hpp"

namespace fst {

std::optional<std::vector<std::vector<Variable>>> chain_cover(const Monomial& m,
                                                              int level) {
  detail::ChainPoset poset(m);
  if (poset.min_chain_cover() > level) return std::nullopt;
  std::vector<std::vector<Variable>> chains = poset.chains();
  chains.resize(static_cast<std::size_t>(level));
  return chains;
}

std::optional<Factorization> factorize(const Monomial& m, const Weight& w) {
  Monomial extended = with_imaginary_part(m, w);
  auto chains = chain_cover(extended, w.level());
  if (!chains) return std::nullopt;
  Factorization out;
  for (auto& chain : *chains) {
    int fundamental = 0;
    std::vector<Variable> part;
    for (const Variable& v : chain) {
      if (v.depth == 0)
        fundamental = v.color.row;  // the x_{il}(0) marker
      else
        part.push_back(v);
    }
    out.parts.emplace_back(std::move(part));
    out.assignments.push_back(fundamental);
  }
  return out;
}

VerificationReport verify_factorization_theorem(const Rank& rank, const Weight& w,
                                                int maxDegree) {
  VerificationReport report;
  for (int degree = 0; degree <= maxDegree; ++degree) {
    for (const Monomial& m : all_monomials(rank, degree)) {
      ++report.checked;
      bool admissible = satisfies_dc_ic(m, w);
      auto fact = factorize(m, w);
      if (fact.has_value() != admissible) {
        report.failures.push_back("existence mismatch for " + format_monomial(m) +
                                  " at weight " + w.str());
        continue;
      }
      if (!fact) continue;

      if (static_cast<int>(fact->parts.size()) != w.level()) {
        report.failures.push_back("wrong part count for " + format_monomial(m));
        continue;
      }
      Monomial product;
      std::vector<int> used(static_cast<std::size_t>(w.ell()) + 1, 0);
      bool parts_ok = true;
      for (std::size_t j = 0; j < fact->parts.size(); ++j) {
        product = product.times(fact->parts[j]);
        int r = fact->assignments[j];
        ++used.at(static_cast<std::size_t>(r));
        if (!satisfies_dc_ic(fact->parts[j], Weight::fundamental(rank, r))) {
          report.failures.push_back("part " + format_monomial(fact->parts[j]) +
                                    " fails DC/IC for fundamental " +
                                    std::to_string(r) + " (from " +
                                    format_monomial(m) + ")");
          parts_ok = false;
        }
      }
      if (!parts_ok) continue;
      if (product != m)
        report.failures.push_back("parts do not multiply back to " +
                                  format_monomial(m));
      if (used != w.coeffs())
        report.failures.push_back("assignments do not match the weight for " +
                                  format_monomial(m));
    }
  }
  return report;
}

std::string factorization_to_json(const Factorization& f) {
  std::ostringstream os;
  os << "{\"parts\":[";
  for (std::size_t i = 0; i < f.parts.size(); ++i) {
    if (i) os << ',';
    os << '"' << format_monomial(f.parts[i]) << '"';
  }
  os << "],\"weights\":[";
  for (std::size_t i = 0; i < f.assignments.size(); ++i) {
    if (i) os << ',';
    os << f.assignments[i];
  }
  os << "]}";
  return os.str();
}

}  // namespace fst
