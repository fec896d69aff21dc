#include "mhw/rational.hpp"

#include <numeric>
#include <stdexcept>

namespace mhw {

namespace {

int64_t narrow(__int128 v, const char* what) {
  if (v > INT64_MAX || v < INT64_MIN) throw std::overflow_error(what);
  return static_cast<int64_t>(v);
}

__int128 gcd128(__int128 a, __int128 b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b != 0) {
    __int128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

ExactRatio make(__int128 num, __int128 den, const char* what) {
  if (den == 0) throw std::invalid_argument("ExactRatio: zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  __int128 g = gcd128(num, den);
  if (g > 1) {
    num /= g;
    den /= g;
  }
  return ExactRatio(narrow(num, what), narrow(den, what));
}

}  // namespace

ExactRatio::ExactRatio(int64_t n, int64_t d) {
  if (d == 0) throw std::invalid_argument("ExactRatio: zero denominator");
  if (d < 0) {
    n = -n;
    d = -d;
  }
  int64_t g = std::gcd(n < 0 ? -n : n, d);
  if (g > 1) {
    n /= g;
    d /= g;
  }
  num = n;
  den = d;
}

ExactRatio ExactRatio::operator+(const ExactRatio& o) const {
  return make(static_cast<__int128>(num) * o.den + static_cast<__int128>(o.num) * den,
              static_cast<__int128>(den) * o.den, "ExactRatio: overflow in +");
}

ExactRatio ExactRatio::operator-(const ExactRatio& o) const {
  return make(static_cast<__int128>(num) * o.den - static_cast<__int128>(o.num) * den,
              static_cast<__int128>(den) * o.den, "ExactRatio: overflow in -");
}

ExactRatio ExactRatio::operator*(const ExactRatio& o) const {
  return make(static_cast<__int128>(num) * o.num, static_cast<__int128>(den) * o.den,
              "ExactRatio: overflow in *");
}

bool ExactRatio::operator<(const ExactRatio& o) const {
  return static_cast<__int128>(num) * o.den < static_cast<__int128>(o.num) * den;
}

std::string ExactRatio::to_fraction() const {
  if (den == 1) return std::to_string(num);
  return std::to_string(num) + "/" + std::to_string(den);
}

std::string ExactRatio::to_decimal(int significant) const {
  if (significant < 1) throw std::invalid_argument("to_decimal: need at least one digit");
  if (num == 0) return "0";
  bool negative = num < 0;
  __int128 n = negative ? -static_cast<__int128>(num) : num;
  __int128 d = den;

  // decimal places needed so that `significant` digits survive
  int places;
  if (n >= d) {
    int int_digits = 0;
    for (__int128 v = n / d; v > 0; v /= 10) ++int_digits;
    places = significant > int_digits ? significant - int_digits : 0;
  } else {
    places = 0;
    __int128 v = n;
    while (v < d) {
      v *= 10;
      ++places;
    }
    places += significant - 1;
  }

  __int128 scale = 1;
  for (int i = 0; i < places; ++i) scale *= 10;
  __int128 scaled = (n * scale * 2 + d) / (2 * d);  // round half up

  std::string digits;
  for (__int128 v = scaled; v > 0; v /= 10) digits.insert(digits.begin(), '0' + static_cast<char>(v % 10));
  if (digits.empty()) digits = "0";
  while (static_cast<int>(digits.size()) <= places) digits.insert(digits.begin(), '0');

  std::string out = digits.substr(0, digits.size() - places);
  if (places > 0) {
    std::string frac = digits.substr(digits.size() - places);
    while (!frac.empty() && frac.back() == '0') frac.pop_back();
    if (!frac.empty()) out += "." + frac;
  }
  return negative ? "-" + out : out;
}

}  // namespace mhw
