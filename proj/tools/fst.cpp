// Command-line front end for the W(Lambda) basis toolkit: difference and
// initial condition checks, basis enumeration and graded dimensions,
// relation dumps, leading-term and factorization verification, and the
// quotient/tensor rank verification of the basis theorem.

#include <cstdio>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "fst/conditions.hpp"
#include "fst/core.hpp"
#include "fst/decompose.hpp"
#include "fst/enumerate.hpp"
#include "fst/model.hpp"
#include "fst/relations.hpp"

namespace {

struct Options {
  int ell = 1;
  std::string weight;
  std::string monomial;
  int degree = 0;
  int maxDegree = 0;
  int cutoff = 0;
  std::string mode = "rational";
  std::string format = "text";
  int jobs = 1;
};

fst::ScalarMode parse_mode(const std::string& mode) {
  if (mode == "rational") return fst::ScalarMode::Rational;
  if (mode == "prime") return fst::ScalarMode::Prime;
  throw std::invalid_argument("unknown mode: " + mode);
}

fst::Weight weight_for(const Options& opt, const fst::Rank& rank) {
  fst::Weight w = fst::parse_weight(opt.weight);
  if (w.ell() != rank.ell())
    throw std::invalid_argument("weight must list ell+1 coefficients k0,...,kl");
  return w;
}

bool json_output(const Options& opt) {
  if (opt.format == "json") return true;
  if (opt.format == "text") return false;
  throw std::invalid_argument("unknown format: " + opt.format);
}

std::string json_string_array(const std::vector<std::string>& items) {
  std::string out = "[";
  for (std::size_t i = 0; i < items.size(); ++i) {
    if (i) out += ',';
    out += '"' + items[i] + '"';
  }
  return out + "]";
}

int run_check(const Options& opt) {
  fst::Rank rank(opt.ell);
  fst::Weight w = weight_for(opt, rank);
  fst::Monomial m = fst::parse_monomial(opt.monomial, rank);
  for (const fst::Variable& v : m.factors())
    if (v.depth < 1) throw std::invalid_argument("check: factor depths must be >= 1");

  fst::DcReport dc = fst::satisfies_dc(m, w.level());
  bool ic = fst::satisfies_ic(m, w);
  bool combined = fst::satisfies_dc_ic(m, w);
  std::string reason = combined ? "" : (!dc.satisfied ? "DC" : "IC");

  std::vector<std::string> witness;
  if (dc.witness)
    for (const fst::Variable& v : *dc.witness) witness.push_back(fst::format_variable(v));

  if (json_output(opt)) {
    std::cout << "{\"monomial\":\"" << fst::format_monomial(m) << "\",\"weight\":\""
              << w.str() << "\",\"dc\":" << (dc.satisfied ? "true" : "false")
              << ",\"ic\":" << (ic ? "true" : "false")
              << ",\"satisfied\":" << (combined ? "true" : "false") << ",\"reason\":"
              << (reason.empty() ? "null" : '"' + reason + '"')
              << ",\"witness\":" << json_string_array(witness) << "}\n";
  } else {
    std::cout << "verdict: " << (combined ? "true" : "false") << "\n";
    if (!combined) std::cout << "reason: " << reason << "\n";
    if (!witness.empty()) {
      std::cout << "witness:";
      for (const std::string& s : witness) std::cout << ' ' << s;
      std::cout << "\n";
    }
  }
  return combined ? 0 : 1;
}

int run_enumerate(const Options& opt) {
  fst::Rank rank(opt.ell);
  fst::Weight w = weight_for(opt, rank);
  std::vector<fst::Monomial> basis = fst::enumerate_basis(rank, w, opt.degree);
  if (json_output(opt)) {
    std::vector<std::string> items;
    items.reserve(basis.size());
    for (const fst::Monomial& m : basis) items.push_back(fst::format_monomial(m));
    std::cout << json_string_array(items) << "\n";
  } else {
    for (const fst::Monomial& m : basis) std::cout << fst::format_monomial(m) << "\n";
  }
  return 0;
}

int run_series(const Options& opt) {
  fst::Rank rank(opt.ell);
  fst::Weight w = weight_for(opt, rank);
  fst::QSeries series = fst::graded_series(rank, w, opt.cutoff, opt.jobs);
  if (json_output(opt)) {
    std::string out = "[";
    for (std::size_t i = 0; i < series.coeffs.size(); ++i) {
      if (i) out += ',';
      out += std::to_string(series.coeffs[i]);
    }
    std::cout << out << "]\n";
  } else {
    std::cout << "coefficients: ";
    for (std::size_t i = 0; i < series.coeffs.size(); ++i) {
      if (i) std::cout << ',';
      std::cout << series.coeffs[i];
    }
    std::cout << "\nseries: " << fst::format_qseries(series) << "\n";
  }
  return 0;
}

int run_relations(const Options& opt) {
  fst::Rank rank(opt.ell);
  fst::Weight w = weight_for(opt, rank);
  auto family = fst::generate_relation_family(rank, w.level());
  bool json = json_output(opt);
  if (json) std::cout << "[";
  bool first = true;
  for (const auto& [key, poly] : family) {
    fst::GradedRelation rel = fst::expand_graded(poly, opt.degree, rank);
    if (json) {
      if (!first) std::cout << ',';
      std::cout << fst::relation_to_json(rel);
    } else {
      std::cout << "multiset";
      for (std::size_t i = 0; i < key.size(); ++i) std::cout << ' ' << key[i];
      std::cout << ":";
      for (const auto& [m, c] : rel.terms)
        std::cout << " + (" << fst::to_string(c) << ")*" << fst::format_monomial(m);
      std::cout << "\n";
    }
    first = false;
  }
  if (json) std::cout << "]\n";
  return 0;
}

int run_leading_terms(const Options& opt) {
  fst::Rank rank(opt.ell);
  fst::Weight w = weight_for(opt, rank);
  int level = w.level();
  fst::VerificationReport report = fst::verify_leading_terms(rank, level, opt.maxDegree);
  if (json_output(opt)) {
    std::cout << "{\"level\":" << level << ",\"maxDegree\":" << opt.maxDegree
              << ",\"shapes\":[";
    bool first = true;
    for (int n = level + 1; n <= opt.maxDegree; ++n) {
      for (const fst::LeadingShape& shape : fst::enumerate_leading_shapes(rank, level, n)) {
        if (!first) std::cout << ',';
        first = false;
        std::cout << "{\"degree\":" << n << ",\"monomial\":\""
                  << fst::format_monomial(shape.to_monomial()) << "\"}";
      }
    }
    std::cout << "],\"checked\":" << report.checked
              << ",\"ok\":" << (report.ok() ? "true" : "false")
              << ",\"failures\":" << json_string_array(report.failures) << "}\n";
  } else {
    for (int n = level + 1; n <= opt.maxDegree; ++n)
      for (const fst::LeadingShape& shape : fst::enumerate_leading_shapes(rank, level, n))
        std::cout << "degree " << n << ": " << fst::format_monomial(shape.to_monomial())
                  << "\n";
    std::cout << "checked: " << report.checked << "\n";
    for (const std::string& f : report.failures) std::cout << "mismatch: " << f << "\n";
    std::cout << "leading terms: " << (report.ok() ? "ok" : "FAILED") << "\n";
  }
  return report.ok() ? 0 : 1;
}

int run_factorize(const Options& opt) {
  fst::Rank rank(opt.ell);
  fst::Weight w = weight_for(opt, rank);
  fst::Monomial m = fst::parse_monomial(opt.monomial, rank);
  for (const fst::Variable& v : m.factors())
    if (v.depth < 1)
      throw std::invalid_argument("factorize: factor depths must be >= 1");
  auto fact = fst::factorize(m, w);
  if (!fact) {
    if (json_output(opt))
      std::cout << "{\"parts\":null,\"weights\":null}\n";
    else
      std::cout << "not factorizable: monomial violates DC/IC for weight " << w.str()
                << "\n";
    return 1;
  }
  if (json_output(opt)) {
    std::cout << fst::factorization_to_json(*fact) << "\n";
  } else {
    for (std::size_t j = 0; j < fact->parts.size(); ++j)
      std::cout << "part " << j << " (Lambda_" << fact->assignments[j]
                << "): " << fst::format_monomial(fact->parts[j]) << "\n";
  }
  return 0;
}

int run_verify(const Options& opt) {
  fst::Rank rank(opt.ell);
  fst::Weight w = weight_for(opt, rank);
  fst::ScalarMode mode = parse_mode(opt.mode);
  try {
    fst::IndependenceReport report =
        fst::verify_independence(rank, w, opt.maxDegree, mode, opt.jobs);
    if (json_output(opt)) {
      std::cout << fst::independence_to_json(report) << "\n";
    } else {
      std::cout << "weight: " << report.weight << " (level " << w.level()
                << "), mode: " << fst::to_string(report.mode) << "\n";
      for (const fst::IndependenceDegree& d : report.degrees)
        std::cout << "N=" << d.degree << ": count=" << d.count
                  << " rankBasis=" << d.rankBasis << " rankAll=" << d.rankAll << ' '
                  << (d.ok() ? "ok" : "MISMATCH") << "\n";
      std::cout << "verify: " << (report.ok() ? "ok" : "FAILED") << "\n";
    }
    return report.ok() ? 0 : 1;
  } catch (const fst::DimensionMismatch& e) {
    std::cerr << "verify: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace

int main(int argc, char** argv) {
  Options opt;
  CLI::App app{"Monomial bases of Feigin-Stoyanovsky-type subspaces for C_l^(1)"};
  app.require_subcommand(1);

  auto add_common = [&](CLI::App* cmd, bool needs_weight) {
    cmd->add_option("--ell", opt.ell, "rank l of C_l")->required()->check(CLI::PositiveNumber);
    auto* weight =
        cmd->add_option("--weight", opt.weight, "weight coefficients k0,k1,...,kl");
    if (needs_weight) weight->required();
    cmd->add_option("--format", opt.format, "output format: text|json")
        ->check(CLI::IsMember({"text", "json"}));
    cmd->add_option("--jobs", opt.jobs, "worker threads for per-degree work")
        ->check(CLI::PositiveNumber);
  };

  CLI::App* check = app.add_subcommand("check", "DC/IC verdict for one monomial");
  add_common(check, true);
  check->add_option("--monomial", opt.monomial, "monomial text")->required();

  CLI::App* enumerate = app.add_subcommand("enumerate", "basis monomials of one degree");
  add_common(enumerate, true);
  enumerate->add_option("--degree", opt.degree, "total degree")
      ->required()
      ->check(CLI::NonNegativeNumber);

  CLI::App* series = app.add_subcommand("series", "graded dimension q-series");
  add_common(series, true);
  series->add_option("--cutoff", opt.cutoff, "series cutoff")
      ->required()
      ->check(CLI::NonNegativeNumber);

  CLI::App* relations = app.add_subcommand("relations", "graded relation dump");
  add_common(relations, true);
  relations->add_option("--degree", opt.degree, "total degree")
      ->required()
      ->check(CLI::NonNegativeNumber);

  CLI::App* leading =
      app.add_subcommand("leading-terms", "leading-term shapes and verification");
  add_common(leading, true);
  leading->add_option("--max-degree", opt.maxDegree, "largest degree to verify")
      ->required()
      ->check(CLI::NonNegativeNumber);

  CLI::App* factorize =
      app.add_subcommand("factorize", "level-1 factorization witness");
  add_common(factorize, true);
  factorize->add_option("--monomial", opt.monomial, "monomial text")->required();

  CLI::App* verify =
      app.add_subcommand("verify", "quotient dimensions and tensor independence");
  add_common(verify, true);
  verify->add_option("--max-degree", opt.maxDegree, "largest degree to verify")
      ->required()
      ->check(CLI::NonNegativeNumber);
  verify->add_option("--mode", opt.mode, "scalar mode: rational|prime")
      ->check(CLI::IsMember({"rational", "prime"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (app.got_subcommand(check)) return run_check(opt);
    if (app.got_subcommand(enumerate)) return run_enumerate(opt);
    if (app.got_subcommand(series)) return run_series(opt);
    if (app.got_subcommand(relations)) return run_relations(opt);
    if (app.got_subcommand(leading)) return run_leading_terms(opt);
    if (app.got_subcommand(factorize)) return run_factorize(opt);
    if (app.got_subcommand(verify)) return run_verify(opt);
  } catch (const fst::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
