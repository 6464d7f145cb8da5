#include "fst/enumerate.hpp"

#include <algorithm>
#include <atomic>
#include <sstream>
#include <thread>

#include "fst/conditions.hpp"

namespace fst {

namespace {

/// Variables with depth 1..degree in generation order: by depth, then by the
/// (row, col) reading order of colors.
std::vector<Variable> generation_alphabet(const Rank& rank, int degree) {
  std::vector<Variable> vars;
  for (int depth = 1; depth <= degree; ++depth)
    for (const Color& c : all_colors(rank)) vars.emplace_back(c, depth);
  return vars;
}

void gen_all(const std::vector<Variable>& vars, std::size_t idx, int remaining,
             std::vector<Variable>& current,
             const std::function<void(const Monomial&)>& visit) {
  if (remaining == 0) {
    visit(Monomial(current));
    return;
  }
  if (idx == vars.size()) return;
  const Variable& v = vars[idx];
  gen_all(vars, idx + 1, remaining, current, visit);
  int copies = 0;
  for (int used = v.depth; used <= remaining; used += v.depth) {
    current.push_back(v);
    ++copies;
    gen_all(vars, idx + 1, remaining - used, current, visit);
  }
  current.resize(current.size() - static_cast<std::size_t>(copies));
}

}  // namespace

std::vector<Monomial> all_monomials(const Rank& rank, int degree) {
  std::vector<Monomial> out;
  std::vector<Variable> current;
  gen_all(generation_alphabet(rank, degree), 0, degree, current,
          [&](const Monomial& m) { out.push_back(m); });
  std::sort(out.begin(), out.end(), MonomialLess{});
  return out;
}

namespace {

void gen_basis(const std::vector<Variable>& vars, std::size_t idx, int remaining,
               const Weight& w, std::vector<Variable>& current,
               const std::function<void(const Monomial&)>& visit) {
  if (remaining == 0) {
    visit(Monomial(current));
    return;
  }
  if (idx == vars.size()) return;
  const Variable& v = vars[idx];
  gen_basis(vars, idx + 1, remaining, w, current, visit);
  int copies = 0;
  for (int used = v.depth; used <= remaining; used += v.depth) {
    current.push_back(v);
    ++copies;
    // DC/IC are hereditary under sub-multisets, so a violating partial
    // monomial can never extend to an admissible one.
    if (!satisfies_dc_ic(Monomial(current), w)) break;
    gen_basis(vars, idx + 1, remaining - used, w, current, visit);
  }
  current.resize(current.size() - static_cast<std::size_t>(copies));
}

}  // namespace

void enumerate_basis(const Rank& rank, const Weight& w, int degree,
                     const std::function<void(const Monomial&)>& visit) {
  if (degree < 0) throw std::invalid_argument("enumerate_basis: degree must be >= 0");
  std::vector<Variable> current;
  gen_basis(generation_alphabet(rank, degree), 0, degree, w, current, visit);
}

std::vector<Monomial> enumerate_basis(const Rank& rank, const Weight& w, int degree) {
  std::vector<Monomial> out;
  enumerate_basis(rank, w, degree, [&](const Monomial& m) { out.push_back(m); });
  std::sort(out.begin(), out.end(), MonomialLess{});
  return out;
}

QSeries graded_series(const Rank& rank, const Weight& w, int cutoff, int jobs) {
  if (cutoff < 0) throw std::invalid_argument("graded_series: cutoff must be >= 0");
  QSeries series;
  series.cutoff = cutoff;
  series.coeffs.assign(static_cast<std::size_t>(cutoff) + 1, 0);
  parallel_for(jobs, cutoff + 1, [&](int degree) {
    long long count = 0;
    enumerate_basis(rank, w, degree, [&](const Monomial&) { ++count; });
    series.coeffs[static_cast<std::size_t>(degree)] = count;
  });
  return series;
}

std::string format_qseries(const QSeries& s) {
  std::ostringstream os;
  bool first = true;
  for (int n = 0; n <= s.cutoff; ++n) {
    long long c = s.coeffs[static_cast<std::size_t>(n)];
    if (c == 0) continue;
    if (!first) os << " + ";
    first = false;
    if (n == 0) {
      os << c;
      continue;
    }
    if (c != 1) os << c;
    os << 'q';
    if (n > 1) os << '^' << n;
  }
  if (first) os << '0';
  return os.str();
}

void parallel_for(int jobs, int count, const std::function<void(int)>& fn) {
  if (jobs <= 1 || count <= 1) {
    for (int i = 0; i < count; ++i) fn(i);
    return;
  }
  std::atomic<int> next{0};
  int workers = std::min(jobs, count);
  std::vector<std::thread> pool;
  std::vector<std::exception_ptr> errors(static_cast<std::size_t>(workers));
  pool.reserve(static_cast<std::size_t>(workers));
  for (int t = 0; t < workers; ++t)
    pool.emplace_back([&, t] {
      try {
        for (int i = next.fetch_add(1); i < count; i = next.fetch_add(1)) fn(i);
      } catch (...) {
        errors[static_cast<std::size_t>(t)] = std::current_exception();
        next.store(count);  // drain remaining work
      }
    });
  for (auto& th : pool) th.join();
  for (const auto& err : errors)
    if (err) std::rethrow_exception(err);
}

}  // namespace fst
