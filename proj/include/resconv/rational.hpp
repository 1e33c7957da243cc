#ifndef RESCONV_RATIONAL_HPP_
#define RESCONV_RATIONAL_HPP_

#include <compare>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>

#include <Eigen/Core>

namespace resconv {

/// Exact rational number with 64-bit numerator and denominator.
///
/// Values are kept in lowest terms with a positive denominator. Every
/// arithmetic operation is carried out in 128-bit intermediates and throws
/// std::overflow_error if the reduced result does not fit, so a result is
/// either exact or absent.
class Rational {
 public:
  constexpr Rational() = default;
  constexpr Rational(std::int64_t value) : num_(value) {}  // NOLINT(google-explicit-constructor)
  Rational(std::int64_t num, std::int64_t den);

  /// Parses "p/q", "p" or a finite decimal such as "0.25".
  static Rational parse(std::string_view text);

  std::int64_t num() const { return num_; }
  std::int64_t den() const { return den_; }

  double to_double() const { return static_cast<double>(num_) / static_cast<double>(den_); }
  std::string str() const;

  bool is_zero() const { return num_ == 0; }
  bool is_integer() const { return den_ == 1; }

  Rational &operator+=(const Rational &o);
  Rational &operator-=(const Rational &o);
  Rational &operator*=(const Rational &o);
  Rational &operator/=(const Rational &o);

  friend Rational operator+(Rational a, const Rational &b) { return a += b; }
  friend Rational operator-(Rational a, const Rational &b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational &b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational &b) { return a /= b; }
  friend Rational operator-(const Rational &a) { return Rational::make_unchecked(-a.num_, a.den_); }

  friend bool operator==(const Rational &a, const Rational &b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend std::strong_ordering operator<=>(const Rational &a, const Rational &b) {
    const __int128 l = static_cast<__int128>(a.num_) * b.den_;
    const __int128 r = static_cast<__int128>(b.num_) * a.den_;
    return l < r ? std::strong_ordering::less
                 : (l > r ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

 private:
  static Rational make_unchecked(std::int64_t num, std::int64_t den) {
    Rational r;
    r.num_ = num;
    r.den_ = den;
    return r;
  }
  static Rational reduce(__int128 num, __int128 den);

  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

std::ostream &operator<<(std::ostream &os, const Rational &r);

inline Rational abs(const Rational &r) { return r < Rational(0) ? -r : r; }

}  // namespace resconv

template <>
struct std::hash<resconv::Rational> {
  std::size_t operator()(const resconv::Rational &r) const noexcept {
    return std::hash<std::int64_t>{}(r.num()) * 1000003u ^ std::hash<std::int64_t>{}(r.den());
  }
};

namespace Eigen {

template <>
struct NumTraits<resconv::Rational> : GenericNumTraits<resconv::Rational> {
  using Real = resconv::Rational;
  using NonInteger = resconv::Rational;
  using Literal = resconv::Rational;
  using Nested = resconv::Rational;

  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 1,
    AddCost = 4,
    MulCost = 4
  };

  static inline Real epsilon() { return Real(0); }
  static inline Real dummy_precision() { return Real(0); }
  static inline int digits10() { return 0; }
  static inline Real highest() { return Real(INT64_MAX); }
  static inline Real lowest() { return Real(-INT64_MAX); }
};

}  // namespace Eigen

#endif  // RESCONV_RATIONAL_HPP_
