#ifndef FST_SCALAR_HPP
#define FST_SCALAR_HPP

#include <cstdint>
#include <stdexcept>
#include <string>

#include <gmpxx.h>

namespace fst {

/// Exact rational scalar. All linear algebra in rational mode runs on these;
/// there is no floating point anywhere in the library.
using Rational = mpq_class;

inline std::string to_string(const Rational& q) { return q.get_str(); }

/// Element of the prime field F_p with p = 2^31 - 1. Used as the fast
/// exploration mode for rank computations; results are advisory unless
/// reproduced in rational mode.
class Fp {
 public:
  static constexpr std::uint32_t modulus = 2147483647u;  // 2^31 - 1

  Fp() : v_(0) {}
  explicit Fp(long long n) {
    long long r = n % static_cast<long long>(modulus);
    if (r < 0) r += modulus;
    v_ = static_cast<std::uint32_t>(r);
  }
  explicit Fp(const Rational& q) {
    Fp num(mpz_fdiv_ui(q.get_num().get_mpz_t(), modulus));
    Fp den(mpz_fdiv_ui(q.get_den().get_mpz_t(), modulus));
    if (den.v_ == 0) throw std::domain_error("Fp: denominator divisible by modulus");
    *this = num / den;
  }

  std::uint32_t value() const { return v_; }
  bool is_zero() const { return v_ == 0; }

  Fp operator-() const { return raw(v_ == 0 ? 0 : modulus - v_); }
  Fp& operator+=(Fp o) {
    std::uint64_t s = static_cast<std::uint64_t>(v_) + o.v_;
    v_ = static_cast<std::uint32_t>(s >= modulus ? s - modulus : s);
    return *this;
  }
  Fp& operator-=(Fp o) { return *this += -o; }
  Fp& operator*=(Fp o) {
    v_ = static_cast<std::uint32_t>(static_cast<std::uint64_t>(v_) * o.v_ % modulus);
    return *this;
  }
  Fp& operator/=(Fp o) { return *this *= o.inverse(); }

  friend Fp operator+(Fp a, Fp b) { return a += b; }
  friend Fp operator-(Fp a, Fp b) { return a -= b; }
  friend Fp operator*(Fp a, Fp b) { return a *= b; }
  friend Fp operator/(Fp a, Fp b) { return a /= b; }
  friend bool operator==(Fp a, Fp b) { return a.v_ == b.v_; }
  friend bool operator!=(Fp a, Fp b) { return a.v_ != b.v_; }

  Fp inverse() const {
    if (v_ == 0) throw std::domain_error("Fp: division by zero");
    // Fermat: a^(p-2) = a^-1.
    std::uint64_t base = v_, acc = 1;
    std::uint32_t e = modulus - 2;
    while (e) {
      if (e & 1) acc = acc * base % modulus;
      base = base * base % modulus;
      e >>= 1;
    }
    return raw(static_cast<std::uint32_t>(acc));
  }

 private:
  static Fp raw(std::uint32_t v) {
    Fp f;
    f.v_ = v;
    return f;
  }
  std::uint32_t v_;
};

inline std::string to_string(const Fp& x) { return std::to_string(x.value()); }

enum class ScalarMode { Rational, Prime };

inline std::string to_string(ScalarMode m) {
  return m == ScalarMode::Rational ? "rational" : "prime";
}

template <class S>
inline S scalar_from_rational(const Rational& q);

template <>
inline Rational scalar_from_rational<Rational>(const Rational& q) {
  return q;
}
template <>
inline Fp scalar_from_rational<Fp>(const Rational& q) {
  return Fp(q);
}

template <class S>
inline bool scalar_is_zero(const S& s);

template <>
inline bool scalar_is_zero<Rational>(const Rational& q) {
  return q == 0;
}
template <>
inline bool scalar_is_zero<Fp>(const Fp& x) {
  return x.is_zero();
}

}  // namespace fst

#endif  // FST_SCALAR_HPP
