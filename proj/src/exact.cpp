#include "dsp/exact.hpp"

#include <cctype>
#include <ostream>
#include <stdexcept>

namespace dsp {

namespace {

bool is_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

} // namespace

Rational parse_rational(std::string_view text) {
  std::string_view body = text;
  bool negative = false;
  if (!body.empty() && (body.front() == '-' || body.front() == '+')) {
    negative = body.front() == '-';
    body.remove_prefix(1);
  }
  auto slash = body.find('/');
  std::string_view num = body.substr(0, slash);
  std::string_view den = slash == std::string_view::npos ? std::string_view("1") : body.substr(slash + 1);
  if (!is_digits(num) || !is_digits(den))
    throw InputError("malformed rational '" + std::string(text) + "' (expected p/q)");
  mpz_class p(std::string(num), 10);
  mpz_class q(std::string(den), 10);
  if (q == 0) throw InputError("zero denominator in rational '" + std::string(text) + "'");
  Rational r(p, q);
  r.canonicalize();
  if (negative) r = -r;
  return r;
}

std::string to_string(const Rational& q) { return q.get_str(10); }

double to_double(const Rational& q) { return q.get_d(); }

std::strong_ordering compare(const Rational& a, const Rational& b) {
  int c = cmp(a, b);
  if (c < 0) return std::strong_ordering::less;
  if (c > 0) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

GaussianRational& GaussianRational::operator+=(const GaussianRational& o) {
  re += o.re;
  im += o.im;
  return *this;
}

GaussianRational& GaussianRational::operator-=(const GaussianRational& o) {
  re -= o.re;
  im -= o.im;
  return *this;
}

GaussianRational& GaussianRational::operator*=(const GaussianRational& o) {
  if (sgn(im) == 0 && sgn(o.im) == 0) {
    re *= o.re;
    return *this;
  }
  Rational r = re * o.re - im * o.im;
  Rational i = re * o.im + im * o.re;
  re = std::move(r);
  im = std::move(i);
  return *this;
}

GaussianRational& GaussianRational::operator/=(const GaussianRational& o) {
  if (o.is_zero()) throw std::domain_error("division by zero in Q(i)");
  if (sgn(im) == 0 && sgn(o.im) == 0) {
    re /= o.re;
    return *this;
  }
  Rational n = o.norm2();
  *this *= o.conj();
  re /= n;
  im /= n;
  return *this;
}

std::strong_ordering operator<=>(const GaussianRational& a, const GaussianRational& b) {
  if (auto c = compare(a.re, b.re); c != 0) return c;
  return compare(a.im, b.im);
}

std::string to_string(const GaussianRational& z) {
  if (sgn(z.im) == 0) return to_string(z.re);
  if (sgn(z.re) == 0) return to_string(z.im) + "i";
  std::string s = to_string(z.re);
  if (sgn(z.im) > 0) s += "+";
  return s + to_string(z.im) + "i";
}

std::ostream& operator<<(std::ostream& os, const GaussianRational& z) { return os << to_string(z); }

Rational frac_part(const Rational& q) {
  mpz_class fl;
  mpz_fdiv_q(fl.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  Rational r = q - Rational(fl);
  return r;
}

PolarValue::PolarValue(Rational angle, Rational magnitude)
    : angle_(frac_part(angle)), magnitude_(std::move(magnitude)) {
  if (sgn(magnitude_) <= 0) throw InputError("polar magnitude must be positive");
}

PolarValue PolarValue::inverse() const { return {-angle_, 1 / magnitude_}; }

PolarValue PolarValue::pow(long k) const {
  Rational mag = 1;
  Rational base = k >= 0 ? magnitude_ : Rational(1 / magnitude_);
  for (long e = k >= 0 ? k : -k; e > 0; --e) mag *= base;
  return {angle_ * k, mag};
}

bool PolarValue::is_gaussian() const {
  Rational four = angle_ * 4;
  return four.get_den() == 1;
}

GaussianRational PolarValue::to_gaussian() const {
  if (!is_gaussian())
    throw std::domain_error("eigenvalue " + to_string(*this) + " is not a Gaussian rational");
  long quarter = Rational(angle_ * 4).get_num().get_si();
  switch (quarter) {
  case 0: return {magnitude_, 0};
  case 1: return {0, magnitude_};
  case 2: return {-magnitude_, 0};
  default: return {0, -magnitude_};
  }
}

PolarValue operator*(const PolarValue& a, const PolarValue& b) {
  return {a.angle_ + b.angle_, a.magnitude_ * b.magnitude_};
}

std::strong_ordering operator<=>(const PolarValue& a, const PolarValue& b) {
  if (auto c = compare(a.angle_, b.angle_); c != 0) return c;
  return compare(a.magnitude_, b.magnitude_);
}

std::string to_string(const PolarValue& v) {
  return to_string(v.magnitude()) + "*exp(2pi i*" + to_string(v.angle()) + ")";
}

std::ostream& operator<<(std::ostream& os, const PolarValue& v) { return os << to_string(v); }

} // namespace dsp
