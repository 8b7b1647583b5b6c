#ifndef CYCLIN_SCALAR_HPP
#define CYCLIN_SCALAR_HPP

#include <cmath>
#include <complex>
#include <cstdint>
#include <gmpxx.h>
#include <stdexcept>
#include <string>

namespace cyclin {

// Gaussian rational: exact complex scalar for the exact arithmetic mode.
struct GaussQ {
  mpq_class re, im;

  GaussQ() : re(0), im(0) {}
  GaussQ(long r) : re(r), im(0) {}
  GaussQ(mpq_class r, mpq_class i) : re(std::move(r)), im(std::move(i)) {}
  static GaussQ i() { return GaussQ{mpq_class(0), mpq_class(1)}; }

  friend GaussQ operator+(const GaussQ& a, const GaussQ& b) { return {a.re + b.re, a.im + b.im}; }
  friend GaussQ operator-(const GaussQ& a, const GaussQ& b) { return {a.re - b.re, a.im - b.im}; }
  friend GaussQ operator-(const GaussQ& a) { return {-a.re, -a.im}; }
  friend GaussQ operator*(const GaussQ& a, const GaussQ& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
  }
  GaussQ& operator+=(const GaussQ& b) { re += b.re; im += b.im; return *this; }
  GaussQ& operator-=(const GaussQ& b) { re -= b.re; im -= b.im; return *this; }
  GaussQ& operator*=(const GaussQ& b) { *this = *this * b; return *this; }
  friend bool operator==(const GaussQ& a, const GaussQ& b) { return a.re == b.re && a.im == b.im; }
  friend bool operator!=(const GaussQ& a, const GaussQ& b) { return !(a == b); }

  GaussQ inv() const {
    mpq_class n = re * re + im * im;
    if (n == 0) throw std::domain_error("GaussQ: division by zero");
    return {re / n, -im / n};
  }
  friend GaussQ operator/(const GaussQ& a, const GaussQ& b) { return a * b.inv(); }
};

// Scalar traits shared by the two arithmetic modes. K = GaussQ is the exact
// mode, K = std::complex<double> the float mode. abs_val is only used for
// norm reports and certificates, never inside algebraic identities.
template <class K>
struct scalar_traits;

template <>
struct scalar_traits<GaussQ> {
  using real = mpq_class;
  static constexpr bool exact = true;
  static GaussQ zero() { return GaussQ(); }
  static GaussQ one() { return GaussQ(1); }
  static GaussQ from_int(long n) { return GaussQ(n); }
  static GaussQ from_ratio(long n, long d) { return GaussQ{mpq_class(n, d), mpq_class(0)}; }
  static bool is_zero(const GaussQ& x) { return x.re == 0 && x.im == 0; }
  static GaussQ inv(const GaussQ& x) { return x.inv(); }
  static GaussQ conj(const GaussQ& x) { return {x.re, -x.im}; }
  static double abs_val(const GaussQ& x) {
    return std::hypot(x.re.get_d(), x.im.get_d());
  }
  static std::complex<double> to_cd(const GaussQ& x) { return {x.re.get_d(), x.im.get_d()}; }
};

template <>
struct scalar_traits<std::complex<double>> {
  using real = double;
  static constexpr bool exact = false;
  using K = std::complex<double>;
  static K zero() { return {0.0, 0.0}; }
  static K one() { return {1.0, 0.0}; }
  static K from_int(long n) { return {static_cast<double>(n), 0.0}; }
  static K from_ratio(long n, long d) { return {static_cast<double>(n) / d, 0.0}; }
  static bool is_zero(const K& x) { return x.real() == 0.0 && x.imag() == 0.0; }
  static K inv(const K& x) { return 1.0 / x; }
  static K conj(const K& x) { return std::conj(x); }
  static double abs_val(const K& x) { return std::abs(x); }
  static std::complex<double> to_cd(const K& x) { return x; }
};

using CD = std::complex<double>;

// Parse "a/b" or a decimal string like "-3.25" into an exact rational.
inline mpq_class parse_rational(const std::string& s) {
  if (s.find('/') != std::string::npos) {
    mpq_class q(s);
    q.canonicalize();
    return q;
  }
  auto epos = s.find_first_of("eE");
  std::string mant = epos == std::string::npos ? s : s.substr(0, epos);
  long exp10 = epos == std::string::npos ? 0 : std::stol(s.substr(epos + 1));
  auto dot = mant.find('.');
  std::string digits = mant;
  if (dot != std::string::npos) {
    exp10 -= static_cast<long>(mant.size() - dot - 1);
    digits = mant.substr(0, dot) + mant.substr(dot + 1);
  }
  if (digits.empty() || digits == "-" || digits == "+") digits += "0";
  mpq_class q(mpz_class(digits), 1);
  for (long k = 0; k < exp10; ++k) q *= 10;
  for (long k = 0; k > exp10; --k) q /= 10;
  q.canonicalize();
  return q;
}

// Decimal string when the denominator is 2^a 5^b, otherwise "num/den".
inline std::string rational_to_string(const mpq_class& q) {
  mpz_class den = q.get_den();
  int twos = 0, fives = 0;
  mpz_class d = den;
  while (d % 2 == 0) { d /= 2; ++twos; }
  while (d % 5 == 0) { d /= 5; ++fives; }
  if (d != 1) return q.get_str();
  int shift = std::max(twos, fives);
  mpz_class scaled = q.get_num();
  for (int k = 0; k < shift; ++k) scaled *= 10;
  scaled /= den;
  std::string s = scaled.get_str();
  if (shift == 0) return s;
  bool neg = !s.empty() && s[0] == '-';
  std::string body = neg ? s.substr(1) : s;
  while (static_cast<int>(body.size()) <= shift) body.insert(body.begin(), '0');
  body.insert(body.end() - shift, '.');
  return (neg ? "-" : "") + body;
}

}  // namespace cyclin

#endif
