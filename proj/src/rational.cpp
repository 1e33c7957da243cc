#include "resconv/rational.hpp"

#include <charconv>
#include <limits>
#include <numeric>
#include <ostream>

namespace resconv {

namespace {

__int128 gcd128(__int128 a, __int128 b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b != 0) {
    const __int128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

bool fits(__int128 v) {
  return v <= std::numeric_limits<std::int64_t>::max() &&
         v >= -std::numeric_limits<std::int64_t>::max();
}

std::int64_t parse_int(std::string_view text) {
  std::int64_t v = 0;
  const char *first = text.data();
  const char *last = text.data() + text.size();
  if (first != last && *first == '+') ++first;
  auto [ptr, ec] = std::from_chars(first, last, v);
  if (ec != std::errc() || ptr != last || first == last) {
    throw std::invalid_argument("malformed rational literal: '" + std::string(text) + "'");
  }
  return v;
}

}  // namespace

Rational::Rational(std::int64_t num, std::int64_t den) {
  if (den == 0) throw std::domain_error("rational with zero denominator");
  *this = reduce(num, den);
}

Rational Rational::reduce(__int128 num, __int128 den) {
  if (den == 0) throw std::domain_error("division by zero");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  const __int128 g = gcd128(num, den);
  if (g > 1) {
    num /= g;
    den /= g;
  }
  if (!fits(num) || !fits(den)) throw std::overflow_error("rational overflow");
  return make_unchecked(static_cast<std::int64_t>(num), static_cast<std::int64_t>(den));
}

Rational Rational::parse(std::string_view text) {
  while (!text.empty() && text.front() == ' ') text.remove_prefix(1);
  while (!text.empty() && text.back() == ' ') text.remove_suffix(1);
  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    return Rational(parse_int(text.substr(0, slash)), parse_int(text.substr(slash + 1)));
  }
  if (auto dot = text.find('.'); dot != std::string_view::npos) {
    const std::string_view whole = text.substr(0, dot);
    const std::string_view frac = text.substr(dot + 1);
    if (frac.size() > 17) throw std::invalid_argument("decimal literal too long: '" + std::string(text) + "'");
    std::int64_t scale = 1;
    for (std::size_t i = 0; i < frac.size(); ++i) scale *= 10;
    const bool negative = !whole.empty() && whole.front() == '-';
    const Rational w = (whole.empty() || whole == "-" || whole == "+") ? Rational(0) : Rational(parse_int(whole));
    const Rational f = frac.empty() ? Rational(0) : Rational(parse_int(frac), scale);
    return negative ? w - f : w + f;
  }
  return Rational(parse_int(text));
}

std::string Rational::str() const {
  if (den_ == 1) return std::to_string(num_);
  return std::to_string(num_) + "/" + std::to_string(den_);
}

Rational &Rational::operator+=(const Rational &o) {
  if (den_ == o.den_) {
    *this = reduce(static_cast<__int128>(num_) + o.num_, den_);
  } else {
    *this = reduce(static_cast<__int128>(num_) * o.den_ + static_cast<__int128>(o.num_) * den_,
                   static_cast<__int128>(den_) * o.den_);
  }
  return *this;
}

Rational &Rational::operator-=(const Rational &o) { return *this += -o; }

Rational &Rational::operator*=(const Rational &o) {
  if (num_ == 0 || o.num_ == 0) {
    *this = Rational();
    return *this;
  }
  *this = reduce(static_cast<__int128>(num_) * o.num_, static_cast<__int128>(den_) * o.den_);
  return *this;
}

Rational &Rational::operator/=(const Rational &o) {
  if (o.num_ == 0) throw std::domain_error("division by zero");
  *this = reduce(static_cast<__int128>(num_) * o.den_, static_cast<__int128>(den_) * o.num_);
  return *this;
}

std::ostream &operator<<(std::ostream &os, const Rational &r) { return os << r.str(); }

}  // namespace resconv
