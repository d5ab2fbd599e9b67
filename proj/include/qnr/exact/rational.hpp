#pragma once

#include <gmpxx.h>

#include <cmath>
#include <cstdint>
#include <ostream>
#include <stdexcept>
#include <string>

namespace qnr::exact {

// Arbitrary-precision rational, always kept canonical: denominator positive,
// gcd(numerator, denominator) = 1.  Backed by GMP's mpq.
class Rational {
public:
  Rational() : v_(0) {}
  Rational(long long n) : v_(static_cast<long>(n)) {}
  Rational(int n) : v_(n) {}
  Rational(long long num, long long den) {
    if (den == 0) throw std::invalid_argument("Rational: zero denominator");
    v_ = mpq_class(static_cast<long>(num), static_cast<long>(den));
    v_.canonicalize();
  }
  explicit Rational(const mpq_class& v) : v_(v) { v_.canonicalize(); }

  // Nearest rational with denominator 10^digits to the given finite double;
  // ties round away from zero.
  static Rational from_decimal_scaled(double x, unsigned digits = 12) {
    if (!std::isfinite(x)) throw std::invalid_argument("Rational: non-finite value");
    mpz_class scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, digits);
    mpq_class scaled = mpq_class(x) * mpq_class(scale);
    scaled.canonicalize();
    mpz_class q, r;
    mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), scaled.get_num_mpz_t(), scaled.get_den_mpz_t());
    const int cmp2 = mpz_cmp(mpz_class(2 * r).get_mpz_t(), scaled.get_den_mpz_t());
    if (cmp2 > 0 || (cmp2 == 0 && sgn(scaled) > 0)) q += 1;
    mpq_class out(q, scale);
    out.canonicalize();
    return Rational(out);
  }

  // Parses "a/b" fractions and plain decimal text ("-3", "1.25", "2.5e-3").
  static Rational parse(const std::string& text);

  Rational operator-() const { return Rational(mpq_class(-v_)); }
  Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
  Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
  Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
  Rational& operator/=(const Rational& o) {
    if (o.is_zero()) throw std::invalid_argument("Rational: division by zero");
    v_ /= o.v_;
    return *this;
  }

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
  friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
  friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }
  friend bool operator<=(const Rational& a, const Rational& b) { return a.v_ <= b.v_; }
  friend bool operator>(const Rational& a, const Rational& b) { return a.v_ > b.v_; }
  friend bool operator>=(const Rational& a, const Rational& b) { return a.v_ >= b.v_; }

  bool is_zero() const { return sgn(v_) == 0; }
  int sign() const { return sgn(v_); }
  Rational abs() const { return Rational(mpq_class(::abs(v_))); }
  Rational reciprocal() const {
    if (is_zero()) throw std::invalid_argument("Rational: reciprocal of zero");
    mpq_class r;
    mpq_inv(r.get_mpq_t(), v_.get_mpq_t());
    return Rational(r);
  }

  double to_double() const { return v_.get_d(); }

  std::string numerator_str() const { return v_.get_num().get_str(); }
  std::string denominator_str() const { return v_.get_den().get_str(); }

  // "num/den", or just "num" for integers.
  std::string str() const {
    if (v_.get_den() == 1) return v_.get_num().get_str();
    return v_.get_num().get_str() + "/" + v_.get_den().get_str();
  }

  friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

private:
  mpq_class v_;
};

inline Rational Rational::parse(const std::string& text) {
  std::size_t begin = text.find_first_not_of(" \t");
  std::size_t end = text.find_last_not_of(" \t");
  if (begin == std::string::npos) throw std::invalid_argument("Rational: empty text");
  const std::string s = text.substr(begin, end - begin + 1);

  if (const auto slash = s.find('/'); slash != std::string::npos) {
    try {
      mpz_class num(s.substr(0, slash));
      mpz_class den(s.substr(slash + 1));
      if (den == 0) throw std::invalid_argument("Rational: zero denominator");
      mpq_class q(num, den);
      q.canonicalize();
      return Rational(q);
    } catch (const std::invalid_argument&) {
      throw std::invalid_argument("Rational: cannot parse '" + s + "'");
    }
  }

  // sign, integer digits, optional fraction digits, optional exponent
  std::size_t i = 0;
  bool neg = false;
  if (i < s.size() && (s[i] == '+' || s[i] == '-')) neg = (s[i++] == '-');
  std::string digits;
  long frac_len = 0;
  while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) digits += s[i++];
  if (i < s.size() && s[i] == '.') {
    ++i;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
      digits += s[i++];
      ++frac_len;
    }
  }
  if (digits.empty()) throw std::invalid_argument("Rational: cannot parse '" + s + "'");
  long exponent = 0;
  if (i < s.size() && (s[i] == 'e' || s[i] == 'E')) {
    ++i;
    bool eneg = false;
    if (i < s.size() && (s[i] == '+' || s[i] == '-')) eneg = (s[i++] == '-');
    std::string edigits;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) edigits += s[i++];
    if (edigits.empty() || edigits.size() > 6)
      throw std::invalid_argument("Rational: cannot parse '" + s + "'");
    exponent = std::stol(edigits) * (eneg ? -1 : 1);
  }
  if (i != s.size()) throw std::invalid_argument("Rational: cannot parse '" + s + "'");

  mpz_class mantissa(digits);
  if (neg) mantissa = -mantissa;
  const long net = exponent - frac_len;
  mpz_class pow10;
  mpz_ui_pow_ui(pow10.get_mpz_t(), 10, static_cast<unsigned long>(net < 0 ? -net : net));
  mpq_class q = (net >= 0) ? mpq_class(mantissa * pow10) : mpq_class(mantissa, pow10);
  q.canonicalize();
  return Rational(q);
}

}  // namespace qnr::exact
