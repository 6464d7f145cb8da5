#include "fst/core.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>

namespace fst {

std::strong_ordering compare_colors(const Color& a, const Color& b) {
  // (i',j') < (i,j) iff i' > i, or i' = i and j' > j.
  if (a.row != b.row) return b.row <=> a.row;
  return b.col <=> a.col;
}

std::strong_ordering compare_variables(const Variable& a, const Variable& b) {
  if (a.depth != b.depth) return b.depth <=> a.depth;  // degree -n
  return compare_colors(a.color, b.color);
}

bool precedes(const Variable& a, const Variable& b) {
  int gap = a.depth - b.depth;  // -n = -n' - gap
  if (gap >= 2) return true;
  if (gap == 1) return a.color.col > b.color.row;
  if (gap == 0) return a.color.row > b.color.row && a.color.col > b.color.col;
  return false;
}

Monomial::Monomial(std::vector<Variable> factors) : factors_(std::move(factors)) {
  std::sort(factors_.begin(), factors_.end(), VariableLess{});
}

int Monomial::degree() const {
  return std::accumulate(factors_.begin(), factors_.end(), 0,
                         [](int acc, const Variable& v) { return acc + v.depth; });
}

Monomial Monomial::times(const Variable& v) const {
  Monomial out;
  out.factors_.reserve(factors_.size() + 1);
  auto it = std::upper_bound(factors_.begin(), factors_.end(), v, VariableLess{});
  out.factors_.assign(factors_.begin(), it);
  out.factors_.push_back(v);
  out.factors_.insert(out.factors_.end(), it, factors_.end());
  return out;
}

Monomial Monomial::times(const Monomial& other) const {
  Monomial out;
  out.factors_.resize(factors_.size() + other.factors_.size());
  std::merge(factors_.begin(), factors_.end(), other.factors_.begin(),
             other.factors_.end(), out.factors_.begin(), VariableLess{});
  return out;
}

Monomial Monomial::minus(const Monomial& sub) const {
  Monomial out;
  out.factors_.reserve(factors_.size());
  std::size_t i = 0;
  for (const Variable& v : factors_) {
    if (i < sub.factors_.size() && sub.factors_[i] == v) {
      ++i;
    } else {
      out.factors_.push_back(v);
    }
  }
  if (i != sub.factors_.size())
    throw std::invalid_argument("Monomial::minus: not a sub-multiset");
  return out;
}

bool Monomial::contains(const Monomial& sub) const {
  return std::includes(factors_.begin(), factors_.end(), sub.factors_.begin(),
                       sub.factors_.end(), VariableLess{});
}

int Monomial::min_depth() const { return factors_.empty() ? 0 : factors_.back().depth; }

int Monomial::max_depth() const { return factors_.empty() ? 0 : factors_.front().depth; }

std::strong_ordering compare_monomials(const Monomial& a, const Monomial& b) {
  std::size_t na = a.size(), nb = b.size();
  std::size_t common = std::min(na, nb);
  for (std::size_t i = 0; i < common; ++i) {
    auto c = compare_variables(a.factor(na - 1 - i), b.factor(nb - 1 - i));
    if (c != 0) return c;
  }
  if (na == nb) return std::strong_ordering::equal;
  // A proper prefix (by greatest factors) is the greater monomial.
  return na < nb ? std::strong_ordering::greater : std::strong_ordering::less;
}

Weight::Weight(std::vector<int> coeffs) : coeffs_(std::move(coeffs)) {
  if (coeffs_.size() < 2) throw std::invalid_argument("Weight: need k0..kl with l >= 1");
  for (int c : coeffs_)
    if (c < 0) throw std::invalid_argument("Weight: coefficients must be >= 0");
  level_ = std::accumulate(coeffs_.begin(), coeffs_.end(), 0);
  if (level_ < 1) throw std::invalid_argument("Weight: level must be >= 1");
}

Weight Weight::fundamental(const Rank& rank, int r) {
  if (r < 0 || r > rank.ell())
    throw std::invalid_argument("Weight::fundamental: r out of range");
  std::vector<int> c(static_cast<std::size_t>(rank.ell()) + 1, 0);
  c[static_cast<std::size_t>(r)] = 1;
  return Weight(std::move(c));
}

std::string Weight::str() const {
  std::string s;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(coeffs_[i]);
  }
  return s;
}

namespace {

class Cursor {
 public:
  explicit Cursor(const std::string& text) : text_(text) {}

  bool done() const { return pos_ == text_.size(); }
  std::size_t pos() const { return pos_; }

  void expect(char c) {
    if (pos_ >= text_.size() || text_[pos_] != c)
      throw ParseError(pos_, std::string("expected '") + c + "'");
    ++pos_;
  }

  int integer() {
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
      ++pos_;
    if (pos_ == start) throw ParseError(start, "expected integer");
    if (pos_ - start > 9) throw ParseError(start, "integer too large");
    return std::stoi(text_.substr(start, pos_ - start));
  }

 private:
  const std::string& text_;
  std::size_t pos_ = 0;
};

}  // namespace

Monomial parse_monomial(const std::string& text, const Rank& rank) {
  std::vector<Variable> factors;
  if (text.empty()) return Monomial{};
  Cursor cur(text);
  for (;;) {
    std::size_t term_start = cur.pos();
    cur.expect('x');
    cur.expect('[');
    int i = cur.integer();
    cur.expect(',');
    int j = cur.integer();
    cur.expect(']');
    cur.expect('(');
    cur.expect('-');
    int n = cur.integer();
    cur.expect(')');
    if (i < 1 || i > j) throw ParseError(term_start, "color indices need 1 <= i <= j");
    if (j > rank.ell()) throw ParseError(term_start, "color index exceeds rank");
    factors.emplace_back(Color(i, j), n);
    if (cur.done()) break;
    cur.expect('*');
  }
  return Monomial(std::move(factors));
}

std::string format_variable(const Variable& v) {
  std::ostringstream os;
  os << "x[" << v.color.row << ',' << v.color.col << "](-" << v.depth << ')';
  return os.str();
}

std::string format_monomial(const Monomial& m) {
  std::string s;
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (i) s += '*';
    s += format_variable(m.factor(i));
  }
  return s;
}

Weight parse_weight(const std::string& text) {
  std::vector<int> coeffs;
  std::size_t pos = 0;
  while (true) {
    std::size_t comma = text.find(',', pos);
    std::string part = text.substr(pos, comma == std::string::npos ? std::string::npos
                                                                   : comma - pos);
    if (part.empty() || part.find_first_not_of("0123456789") != std::string::npos)
      throw ParseError(pos, "expected non-negative integer weight coefficient");
    if (part.size() > 9) throw ParseError(pos, "weight coefficient too large");
    coeffs.push_back(std::stoi(part));
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  return Weight(std::move(coeffs));
}

std::vector<Color> all_colors(const Rank& rank) {
  std::vector<Color> out;
  out.reserve(static_cast<std::size_t>(rank.ell()) * (rank.ell() + 1) / 2);
  for (int i = 1; i <= rank.ell(); ++i)
    for (int j = i; j <= rank.ell(); ++j) out.emplace_back(i, j);
  return out;
}

}  // namespace fst
