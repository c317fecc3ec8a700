#ifndef VZHU_SERIES_HPP
#define VZHU_SERIES_HPP

#include <string>
#include <vector>

#include "vzhu/rational.hpp"

namespace vzhu {

// Truncated formal Laurent series over Q.
//
// Coefficients are known for exponents valuation()..order(); anything above
// order() is unknown and every operation propagates the largest order it can
// certify. Exact Laurent polynomials carry order() == kExact, meaning all
// coefficients past the stored ones are zero.
class LaurentSeries {
 public:
  static constexpr int kExact = 1 << 28;

  // The exact zero series.
  LaurentSeries();
  LaurentSeries(int valuation, std::vector<Rational> coeffs, int order);

  static LaurentSeries zero(int order = kExact);
  static LaurentSeries monomial(int exponent, const Rational& coeff = 1);
  static LaurentSeries polynomial(int valuation, std::vector<Rational> coeffs);

  // e^{wx}, known through x^order.
  static LaurentSeries exp(const Rational& w, int order);
  // e^x - 1
  static LaurentSeries expm1(int order);
  // log(1+x)
  static LaurentSeries log1p(int order);
  // (1+x)^r; exact when r is a nonnegative integer.
  static LaurentSeries binomial_series(const Rational& r, int order);

  // Lowest exponent with a nonzero known coefficient; order()+1 for a series
  // known to vanish up to order() (kExact for the exact zero series).
  int valuation() const { return valuation_; }
  int order() const { return order_; }
  bool is_exact() const { return order_ >= kExact; }
  bool is_zero() const { return coeffs_.empty(); }

  // Throws UnknownCoefficient past order().
  Rational coeff(int exponent) const;
  Rational residue() const { return coeff(-1); }
  // Highest exponent that is stored (or valuation()-1 when empty).
  int last_stored() const { return valuation_ + static_cast<int>(coeffs_.size()) - 1; }

  LaurentSeries truncated(int order) const;

  LaurentSeries operator-() const;
  LaurentSeries& operator+=(const LaurentSeries& other);
  LaurentSeries& operator-=(const LaurentSeries& other);
  LaurentSeries& operator*=(const Rational& scalar);

  friend LaurentSeries operator+(LaurentSeries a, const LaurentSeries& b) { return a += b; }
  friend LaurentSeries operator-(LaurentSeries a, const LaurentSeries& b) { return a -= b; }
  friend LaurentSeries operator*(const LaurentSeries& a, const LaurentSeries& b);
  friend LaurentSeries operator*(LaurentSeries a, const Rational& s) { return a *= s; }
  friend LaurentSeries operator*(const Rational& s, LaurentSeries a) { return a *= s; }

  // Multiplicative inverse. For exact non-monomial input the result is an
  // infinite series, so `order` must bound it; otherwise the result carries
  // the certifiable order (further capped by `order`).
  LaurentSeries inverse(int order = kExact) const;

  // Integer power; negative powers go through inverse(order).
  LaurentSeries pow(long k, int order = kExact) const;

  // d/dx
  LaurentSeries derivative() const;
  // x d/dx
  LaurentSeries euler() const;

  // this(inner(z)). Needs inner.valuation() >= 1 unless this is an exact
  // Laurent polynomial without negative powers. `order` caps the result and
  // bounds internal inversions of exact inner series.
  LaurentSeries compose(const LaurentSeries& inner, int order = kExact) const;

  // Coefficientwise equality on all exponents both series certify.
  bool agrees_with(const LaurentSeries& other) const;

  // Same certified data (valuation, order, coefficients).
  friend bool operator==(const LaurentSeries& a, const LaurentSeries& b);

  std::string to_string() const;

 private:
  void normalize();

  int valuation_ = kExact;
  int order_ = kExact;
  std::vector<Rational> coeffs_;
};

// d/dx or x d/dx.
inline LaurentSeries derive(const LaurentSeries& s, bool euler) {
  return euler ? s.euler() : s.derivative();
}

}  // namespace vzhu

#endif  // VZHU_SERIES_HPP
