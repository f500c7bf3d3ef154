#pragma once

#include <compare>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace dsp {

using Rational = mpq_class;

/// Thrown for malformed user-supplied data (documents, rationals, shapes).
class InputError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

/// Parses "p/q" or "p" with an optional sign. The result is canonical.
Rational parse_rational(std::string_view text);
std::string to_string(const Rational& q);
double to_double(const Rational& q);
std::strong_ordering compare(const Rational& a, const Rational& b);

/// Element of Q(i). Arithmetic is exact; division throws on zero.
struct GaussianRational {
  Rational re;
  Rational im;

  GaussianRational() = default;
  GaussianRational(Rational r) : re(std::move(r)) {}
  GaussianRational(Rational r, Rational i) : re(std::move(r)), im(std::move(i)) {}
  GaussianRational(long r) : re(r) {}

  [[nodiscard]] bool is_zero() const { return sgn(re) == 0 && sgn(im) == 0; }
  [[nodiscard]] GaussianRational conj() const { return {re, -im}; }
  [[nodiscard]] Rational norm2() const { return re * re + im * im; }

  GaussianRational& operator+=(const GaussianRational& o);
  GaussianRational& operator-=(const GaussianRational& o);
  GaussianRational& operator*=(const GaussianRational& o);
  GaussianRational& operator/=(const GaussianRational& o);

  friend GaussianRational operator+(GaussianRational a, const GaussianRational& b) { return a += b; }
  friend GaussianRational operator-(GaussianRational a, const GaussianRational& b) { return a -= b; }
  friend GaussianRational operator*(GaussianRational a, const GaussianRational& b) { return a *= b; }
  friend GaussianRational operator/(GaussianRational a, const GaussianRational& b) { return a /= b; }
  friend GaussianRational operator-(const GaussianRational& a) { return {-a.re, -a.im}; }

  friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
    return a.re == b.re && a.im == b.im;
  }
  /// Lexicographic on (re, im); only used for ordered containers.
  friend std::strong_ordering operator<=>(const GaussianRational& a, const GaussianRational& b);
};

std::string to_string(const GaussianRational& z);
std::ostream& operator<<(std::ostream& os, const GaussianRational& z);

/// magnitude * exp(2*pi*i*angle), angle kept reduced into [0, 1).
/// Closed under products, which is all the multiplicative mode needs.
class PolarValue {
public:
  PolarValue() : magnitude_(1) {}
  PolarValue(Rational angle, Rational magnitude);

  [[nodiscard]] const Rational& angle() const { return angle_; }
  [[nodiscard]] const Rational& magnitude() const { return magnitude_; }
  [[nodiscard]] bool is_one() const { return sgn(angle_) == 0 && magnitude_ == 1; }

  [[nodiscard]] PolarValue inverse() const;
  [[nodiscard]] PolarValue pow(long k) const;

  /// Exact conversion when 4*angle is an integer; throws std::domain_error otherwise.
  [[nodiscard]] GaussianRational to_gaussian() const;
  [[nodiscard]] bool is_gaussian() const;

  friend PolarValue operator*(const PolarValue& a, const PolarValue& b);
  friend bool operator==(const PolarValue& a, const PolarValue& b) {
    return a.angle_ == b.angle_ && a.magnitude_ == b.magnitude_;
  }
  friend std::strong_ordering operator<=>(const PolarValue& a, const PolarValue& b);

private:
  Rational angle_;
  Rational magnitude_;
};

std::string to_string(const PolarValue& v);
std::ostream& operator<<(std::ostream& os, const PolarValue& v);

/// Reduces q into [0, 1).
Rational frac_part(const Rational& q);

// Group laws used by the relation search: addition on Q(i), multiplication on polar values.
inline GaussianRational group_identity(const GaussianRational&) { return {}; }
inline GaussianRational group_combine(const GaussianRational& a, const GaussianRational& b) { return a + b; }
inline GaussianRational group_inverse(const GaussianRational& a) { return -a; }
inline GaussianRational group_power(const GaussianRational& a, long k) { return a * GaussianRational(Rational(k)); }
inline bool group_is_identity(const GaussianRational& a) { return a.is_zero(); }

inline PolarValue group_identity(const PolarValue&) { return {}; }
inline PolarValue group_combine(const PolarValue& a, const PolarValue& b) { return a * b; }
inline PolarValue group_inverse(const PolarValue& a) { return a.inverse(); }
inline PolarValue group_power(const PolarValue& a, long k) { return a.pow(k); }
inline bool group_is_identity(const PolarValue& a) { return a.is_one(); }

} // namespace dsp
