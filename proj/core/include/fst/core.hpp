#ifndef FST_CORE_HPP
#define FST_CORE_HPP

#include <compare>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace fst {

/// Rank of the symplectic algebra; the triangular color grid has rows and
/// columns 1..ell.
class Rank {
 public:
  explicit Rank(int ell) : ell_(ell) {
    if (ell < 1) throw std::invalid_argument("Rank: ell must be >= 1");
  }
  int ell() const { return ell_; }

 private:
  int ell_;
};

/// A color (i,j), 1 <= i <= j, a cell of the triangular grid. Colors label
/// the commuting raising vectors x_{ij}.
struct Color {
  int row = 1;
  int col = 1;

  Color() = default;
  Color(int i, int j) : row(i), col(j) {
    if (i < 1 || i > j) throw std::invalid_argument("Color: need 1 <= i <= j");
  }
  bool valid_for(const Rank& rank) const { return col <= rank.ell(); }

  friend bool operator==(const Color&, const Color&) = default;
};

/// The total order on colors: (i',j') < (i,j) iff i' > i, or i' = i and
/// j' > j. Larger indices sort lower; (1,1) is the maximum.
std::strong_ordering compare_colors(const Color& a, const Color& b);

inline bool color_less(const Color& a, const Color& b) {
  return compare_colors(a, b) < 0;
}

/// x_color(-depth). Depth 0 is reserved for the imaginary factors used to
/// translate initial conditions into difference conditions.
struct Variable {
  Color color;
  int depth = 1;

  Variable() = default;
  Variable(Color c, int n) : color(c), depth(n) {
    if (n < 0) throw std::invalid_argument("Variable: depth must be >= 0");
  }
  Variable(int i, int j, int n) : Variable(Color(i, j), n) {}

  /// Degree of x(-n) is -n: deeper variables are smaller.
  int degree() const { return -depth; }

  friend bool operator==(const Variable&, const Variable&) = default;
};

/// The total order on variables: by degree first (deeper = smaller), then by
/// the color order.
std::strong_ordering compare_variables(const Variable& a, const Variable& b);

inline bool variable_less(const Variable& a, const Variable& b) {
  return compare_variables(a, b) < 0;
}

struct VariableLess {
  bool operator()(const Variable& a, const Variable& b) const {
    return variable_less(a, b);
  }
};

/// The strict partial order on variables used by the chain/antichain
/// combinatorics: x_{ij}(-n) comes before x_{i'j'}(-n') when
///   -n <= -n' - 2, or
///   -n  = -n' - 1 and j > i', or
///   -n  = -n'     and i > i' and j > j'.
/// Equivalently: a < b in the variable order and the two-factor monomial ab
/// satisfies level-1 difference conditions.
bool precedes(const Variable& a, const Variable& b);

/// A commutative monomial in the variables, stored canonically as a multiset
/// sorted ascending (the last factor is the greatest). The empty monomial is
/// the identity.
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::vector<Variable> factors);

  bool empty() const { return factors_.empty(); }
  std::size_t size() const { return factors_.size(); }
  /// Total degree: the sum of factor depths.
  int degree() const;
  const std::vector<Variable>& factors() const { return factors_; }
  const Variable& factor(std::size_t i) const { return factors_[i]; }

  Monomial times(const Variable& v) const;
  Monomial times(const Monomial& other) const;
  /// Multiset difference; throws if `sub` is not a sub-multiset.
  Monomial minus(const Monomial& sub) const;

  bool contains(const Monomial& sub) const;
  int min_depth() const;  // 0 for the empty monomial
  int max_depth() const;

  friend bool operator==(const Monomial&, const Monomial&) = default;

 private:
  std::vector<Variable> factors_;
};

/// The monomial order: compare factors from the greatest down (lexicographic
/// right to left in the display convention). When one monomial runs out with
/// all compared factors equal, the shorter monomial is the greater one; the
/// empty monomial is the maximum.
std::strong_ordering compare_monomials(const Monomial& a, const Monomial& b);

inline bool monomial_less(const Monomial& a, const Monomial& b) {
  return compare_monomials(a, b) < 0;
}

struct MonomialLess {
  bool operator()(const Monomial& a, const Monomial& b) const {
    return monomial_less(a, b);
  }
};

/// Dominant integral weight k0*L0 + ... + kl*Ll given by its coefficient
/// vector; the level k = k0 + ... + kl is always derived, never stored
/// separately.
class Weight {
 public:
  explicit Weight(std::vector<int> coeffs);
  static Weight fundamental(const Rank& rank, int r);

  int ell() const { return static_cast<int>(coeffs_.size()) - 1; }
  int level() const { return level_; }
  int coeff(std::size_t i) const { return coeffs_.at(i); }
  const std::vector<int>& coeffs() const { return coeffs_; }

  std::string str() const;  // "k0,k1,...,kl"

  friend bool operator==(const Weight&, const Weight&) = default;

 private:
  std::vector<int> coeffs_;
  int level_ = 0;
};

struct ParseError : std::runtime_error {
  ParseError(std::size_t position, const std::string& what)
      : std::runtime_error(what + " (at position " + std::to_string(position) + ")"),
        pos(position) {}
  std::size_t pos;
};

/// Parses the monomial grammar
///   term = "x[" i "," j "](-" n ")", monomial = term ("*" term)* | ""
/// with decimal integers and no whitespace. Factors are canonicalized.
/// Throws ParseError on syntax errors and on indices outside 1 <= i <= j <= ell.
Monomial parse_monomial(const std::string& text, const Rank& rank);

/// Inverse of parse_monomial on canonical monomials.
std::string format_monomial(const Monomial& m);

std::string format_variable(const Variable& v);

/// Parses "k0,k1,...,kl". The rank is implied by the coefficient count.
Weight parse_weight(const std::string& text);

/// All colors of the rank, ascending in (row, col).
std::vector<Color> all_colors(const Rank& rank);

}  // namespace fst

#endif  // FST_CORE_HPP
