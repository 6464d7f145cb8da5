#include "fst/model.hpp"

#include <algorithm>
#include <sstream>

#include "fst/conditions.hpp"
#include "fst/enumerate.hpp"

namespace fst {

namespace {

/// Level-1 initial conditions are literal annihilation: a depth-1 factor
/// x_{ij}(-1) with j <= r kills the highest weight vector of L(Lambda_r).
bool violates_level1_ic(const Monomial& m, int fundamental) {
  for (const Variable& v : m.factors())
    if (v.depth == 1 && v.color.col <= fundamental) return true;
  return false;
}

template <class S>
void add_scaled(std::map<int, S>& acc, int col, const S& c) {
  auto [it, inserted] = acc.try_emplace(col, S(0));
  it->second += c;
  if (scalar_is_zero(it->second)) acc.erase(it);
}

template <class S>
Coordinates<S> to_coordinates(const std::map<int, S>& acc) {
  return Coordinates<S>(acc.begin(), acc.end());
}

}  // namespace

template <class S>
QuotientModel<S>::QuotientModel(const Rank& rank, int fundamental, int cutoff,
                                int jobs)
    : rank_(rank), fundamental_(fundamental), cutoff_(cutoff) {
  if (fundamental < 0 || fundamental > rank.ell())
    throw std::invalid_argument("QuotientModel: fundamental index out of range");
  if (cutoff < 0) throw std::invalid_argument("QuotientModel: cutoff must be >= 0");
  auto family = generate_relation_family(rank_, 1);
  slices_.resize(static_cast<std::size_t>(cutoff_) + 1);
  parallel_for(jobs, cutoff_ + 1,
               [&](int degree) { build_degree(degree, family); });
}

template <class S>
void QuotientModel<S>::build_degree(
    int degree, const std::map<RelationKey, ColorPolynomial>& family) {
  DegreeSlice& s = slices_[static_cast<std::size_t>(degree)];
  s.monomials = all_monomials(rank_, degree);
  Weight wr = Weight::fundamental(rank_, fundamental_);
  int count = static_cast<int>(s.monomials.size());
  s.basis_col.assign(static_cast<std::size_t>(count), -1);
  for (int i = 0; i < count; ++i) {
    if (satisfies_dc_ic(s.monomials[static_cast<std::size_t>(i)], wr)) {
      s.basis_col[static_cast<std::size_t>(i)] = static_cast<int>(s.basis.size());
      s.basis.push_back(s.monomials[static_cast<std::size_t>(i)]);
    }
  }

  std::map<std::pair<RelationKey, int>, GradedRelation> expansions;
  auto graded = [&](const RelationKey& key, int n) -> const GradedRelation& {
    auto it = expansions.find({key, n});
    if (it == expansions.end())
      it = expansions.emplace(std::make_pair(key, n),
                              expand_graded(family.at(key), n, rank_))
               .first;
    return it->second;
  };

  // Every non-basis monomial gets one ideal row with itself as the smallest
  // term, reduced on the spot. Descending order keeps every larger pivot
  // already available.
  for (int i = count - 1; i >= 0; --i) {
    if (s.basis_col[static_cast<std::size_t>(i)] >= 0) continue;
    const Monomial& m = s.monomials[static_cast<std::size_t>(i)];
    if (violates_level1_ic(m, fundamental_)) {
      s.reduced.emplace(i, Coordinates<S>{});  // x(mu) x_{ij}(-1) = m, so m = 0
      continue;
    }
    DcReport dc = satisfies_dc(m, 1);
    if (dc.satisfied)
      throw std::logic_error("QuotientModel: non-basis monomial satisfies DC and IC");
    Monomial head(*dc.witness);
    Monomial cofactor = m.minus(head);
    const GradedRelation& rel =
        graded(color_index_counts(head, rank_), head.degree());
    if (rel.terms.empty() || leading_term(rel) != head)
      throw std::logic_error("QuotientModel: leading term does not match witness");
    std::map<int, S> acc;
    for (const auto& [term, coeff] : rel.terms) {
      if (term == head) continue;
      Monomial full = term.times(cofactor);
      int j = index_of(s, full);
      S c = scalar_from_rational<S>(-coeff);  // class(m) = -sum of the tail
      int col = s.basis_col[static_cast<std::size_t>(j)];
      if (col >= 0) {
        add_scaled(acc, col, c);
      } else {
        for (const auto& [tc, tv] : s.reduced.at(j)) add_scaled(acc, tc, S(c * tv));
      }
    }
    s.reduced.emplace(i, to_coordinates(acc));
  }

  // Completeness: every multiple of every graded relation must reduce to
  // zero against the rows above, otherwise the quotient is smaller than the
  // DC/IC count and the dimension equality fails.
  std::vector<std::map<int, S>> extras;
  for (const auto& [key, poly] : family) {
    for (int reldeg = 2; reldeg <= degree; ++reldeg) {
      const GradedRelation& rel = graded(key, reldeg);
      if (rel.terms.empty()) continue;
      for (const Monomial& mu : all_monomials(rank_, degree - reldeg)) {
        std::map<int, S> acc;
        for (const auto& [term, coeff] : rel.terms) {
          Monomial full = term.times(mu);
          int j = index_of(s, full);
          S c = scalar_from_rational<S>(coeff);
          int col = s.basis_col[static_cast<std::size_t>(j)];
          if (col >= 0) {
            add_scaled(acc, col, c);
          } else {
            for (const auto& [tc, tv] : s.reduced.at(j)) add_scaled(acc, tc, S(c * tv));
          }
        }
        if (!acc.empty()) extras.push_back(std::move(acc));
      }
    }
  }
  if (!extras.empty()) {
    // The surplus rank measures how far the slice falls short.
    std::map<int, std::map<int, S>> echelon;
    for (auto& row : extras) {
      while (!row.empty()) {
        auto pivot = row.begin()->first;
        auto found = echelon.find(pivot);
        if (found == echelon.end()) {
          S lead = row.begin()->second;
          for (auto& [c, v] : row) v /= lead;
          echelon.emplace(pivot, std::move(row));
          break;
        }
        S factor = row.begin()->second;
        for (const auto& [c, v] : found->second) {
          auto [it, inserted] = row.try_emplace(c, S(0));
          it->second -= factor * v;
          if (scalar_is_zero(it->second)) row.erase(it);
        }
      }
    }
    long long expected = static_cast<long long>(s.basis.size());
    throw DimensionMismatch(degree, expected,
                            expected - static_cast<long long>(echelon.size()));
  }
}

template <class S>
const typename QuotientModel<S>::DegreeSlice& QuotientModel<S>::slice(
    int degree) const {
  if (degree < 0 || degree > cutoff_)
    throw std::out_of_range("QuotientModel: degree exceeds cutoff");
  return slices_[static_cast<std::size_t>(degree)];
}

template <class S>
int QuotientModel<S>::index_of(const DegreeSlice& s, const Monomial& m) const {
  auto it = std::lower_bound(s.monomials.begin(), s.monomials.end(), m,
                             MonomialLess{});
  if (it == s.monomials.end() || !(*it == m))
    throw std::logic_error("QuotientModel: monomial not found in its degree slice");
  return static_cast<int>(it - s.monomials.begin());
}

template <class S>
std::vector<long long> QuotientModel<S>::dims() const {
  std::vector<long long> out;
  out.reserve(slices_.size());
  for (const DegreeSlice& s : slices_)
    out.push_back(static_cast<long long>(s.basis.size()));
  return out;
}

template <class S>
const std::vector<Monomial>& QuotientModel<S>::basis(int degree) const {
  return slice(degree).basis;
}

template <class S>
const std::vector<Monomial>& QuotientModel<S>::monomials(int degree) const {
  return slice(degree).monomials;
}

template <class S>
Coordinates<S> QuotientModel<S>::normal_form(const Monomial& m) const {
  const DegreeSlice& s = slice(m.degree());
  int idx = index_of(s, m);
  int col = s.basis_col[static_cast<std::size_t>(idx)];
  if (col >= 0) return {{col, S(1)}};
  return s.reduced.at(idx);
}

template <class S>
Coordinates<S> QuotientModel<S>::act(const Variable& v, int degree,
                                     const Coordinates<S>& vec) const {
  if (v.depth < 1)
    throw std::invalid_argument("QuotientModel::act: depth must be >= 1");
  const DegreeSlice& src = slice(degree);
  std::map<int, S> acc;
  for (const auto& [col, c] : vec) {
    Monomial shifted = src.basis.at(static_cast<std::size_t>(col)).times(v);
    for (const auto& [ncol, nc] : normal_form(shifted)) add_scaled(acc, ncol, S(c * nc));
  }
  return to_coordinates(acc);
}

template <class S>
TensorModel<S>::TensorModel(const Rank& rank, const Weight& w, int cutoff, int jobs)
    : rank_(rank), weight_(w), cutoff_(cutoff) {
  if (w.ell() != rank.ell())
    throw std::invalid_argument("TensorModel: weight length does not match rank");
  for (int i = 0; i <= w.ell(); ++i)
    for (int c = 0; c < w.coeff(static_cast<std::size_t>(i)); ++c) slots_.push_back(i);
  for (int fundamental : slots_)
    if (!models_.count(fundamental))
      models_.emplace(fundamental, std::make_shared<const QuotientModel<S>>(
                                       rank_, fundamental, cutoff_, jobs));
}

template <class S>
TensorVector<S> TensorModel<S>::vacuum() const {
  TensorVector<S> out;
  out.degree = 0;
  typename TensorVector<S>::Key key(slots_.size(), {0, 0});
  out.coords.emplace(std::move(key), S(1));
  return out;
}

template <class S>
TensorVector<S> TensorModel<S>::apply(const Variable& v,
                                      const TensorVector<S>& vec) const {
  TensorVector<S> out;
  out.degree = vec.degree + v.depth;
  if (out.degree > cutoff_)
    throw std::out_of_range("TensorModel::apply: cutoff exceeded");
  for (const auto& [key, c] : vec.coords) {
    for (std::size_t slot = 0; slot < slots_.size(); ++slot) {
      const auto& model = models_.at(slots_[slot]);
      auto [d, b] = key[slot];
      Coordinates<S> image = model->act(v, d, {{b, S(1)}});
      for (const auto& [col, ic] : image) {
        typename TensorVector<S>::Key moved = key;
        moved[slot] = {d + v.depth, col};
        auto [it, inserted] = out.coords.try_emplace(std::move(moved), S(0));
        it->second += c * ic;
        if (scalar_is_zero(it->second)) out.coords.erase(it);
      }
    }
  }
  return out;
}

template <class S>
TensorVector<S> TensorModel<S>::apply(const Monomial& m,
                                      const TensorVector<S>& base) const {
  TensorVector<S> cur = base;
  for (const Variable& v : m.factors()) cur = apply(v, cur);
  return cur;
}

namespace {

template <class S>
long long rank_of(std::vector<TensorVector<S>> vectors) {
  using Key = typename TensorVector<S>::Key;
  std::map<Key, std::map<Key, S>> echelon;
  long long rank = 0;
  for (auto& vec : vectors) {
    std::map<Key, S> row(vec.coords.begin(), vec.coords.end());
    while (!row.empty()) {
      const Key& pivot = row.begin()->first;
      auto found = echelon.find(pivot);
      if (found == echelon.end()) {
        S lead = row.begin()->second;
        for (auto& [k, val] : row) val /= lead;
        echelon.emplace(pivot, std::move(row));
        ++rank;
        break;
      }
      S factor = row.begin()->second;
      for (const auto& [k, val] : found->second) {
        auto [it, inserted] = row.try_emplace(k, S(0));
        it->second -= factor * val;
        if (scalar_is_zero(it->second)) row.erase(it);
      }
    }
  }
  return rank;
}

template <class S>
IndependenceReport verify_independence_impl(const Rank& rank, const Weight& w,
                                            int maxDegree, ScalarMode mode,
                                            int jobs) {
  TensorModel<S> tensor(rank, w, maxDegree, jobs);
  IndependenceReport report;
  report.weight = w.str();
  report.mode = mode;
  report.degrees.resize(static_cast<std::size_t>(maxDegree) + 1);
  parallel_for(jobs, maxDegree + 1, [&](int degree) {
    IndependenceDegree entry;
    entry.degree = degree;
    TensorVector<S> vac = tensor.vacuum();

    std::vector<TensorVector<S>> images;
    for (const Monomial& m : enumerate_basis(rank, w, degree))
      images.push_back(tensor.apply(m, vac));
    entry.count = static_cast<long long>(images.size());
    entry.rankBasis = rank_of(std::move(images));

    std::vector<TensorVector<S>> all_images;
    for (const Monomial& m : all_monomials(rank, degree))
      all_images.push_back(tensor.apply(m, vac));
    entry.rankAll = rank_of(std::move(all_images));

    report.degrees[static_cast<std::size_t>(degree)] = entry;
  });
  return report;
}

}  // namespace

IndependenceReport verify_independence(const Rank& rank, const Weight& w,
                                       int maxDegree, ScalarMode mode, int jobs) {
  if (maxDegree < 0)
    throw std::invalid_argument("verify_independence: maxDegree must be >= 0");
  return mode == ScalarMode::Rational
             ? verify_independence_impl<Rational>(rank, w, maxDegree, mode, jobs)
             : verify_independence_impl<Fp>(rank, w, maxDegree, mode, jobs);
}

std::string independence_to_json(const IndependenceReport& report) {
  std::ostringstream os;
  os << "{\"weight\":\"" << report.weight << "\",\"degrees\":[";
  for (std::size_t i = 0; i < report.degrees.size(); ++i) {
    const IndependenceDegree& d = report.degrees[i];
    if (i) os << ',';
    os << "{\"N\":" << d.degree << ",\"count\":" << d.count
       << ",\"rankBasis\":" << d.rankBasis << ",\"rankAll\":" << d.rankAll
       << ",\"ok\":" << (d.ok() ? "true" : "false") << '}';
  }
  os << "],\"mode\":\"" << to_string(report.mode) << "\"}";
  return os.str();
}

std::vector<long long> level1_dims(const Rank& rank, int fundamental, int cutoff,
                                   ScalarMode mode, int jobs) {
  if (mode == ScalarMode::Rational)
    return QuotientModel<Rational>(rank, fundamental, cutoff, jobs).dims();
  return QuotientModel<Fp>(rank, fundamental, cutoff, jobs).dims();
}

template class QuotientModel<Rational>;
template class QuotientModel<Fp>;
template class TensorModel<Rational>;
template class TensorModel<Fp>;

}  // namespace fst
