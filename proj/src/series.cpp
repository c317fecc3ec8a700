#include "vzhu/series.hpp"

#include <algorithm>
#include <sstream>

#include "vzhu/errors.hpp"

namespace vzhu {

namespace {

constexpr int kExact = LaurentSeries::kExact;

int shift_order(int order, int delta) {
  if (order >= kExact) return kExact;
  return std::min(order + delta, kExact);
}

}  // namespace

LaurentSeries::LaurentSeries() = default;

LaurentSeries::LaurentSeries(int valuation, std::vector<Rational> coeffs, int order)
    : valuation_(valuation), order_(std::min(order, kExact)), coeffs_(std::move(coeffs)) {
  if (!is_exact()) {
    long span = static_cast<long>(order_) - valuation_ + 1;
    if (span < 0) span = 0;
    coeffs_.resize(static_cast<std::size_t>(span));
  }
  normalize();
}

void LaurentSeries::normalize() {
  std::size_t lead = 0;
  while (lead < coeffs_.size() && coeffs_[lead] == 0) ++lead;
  if (lead == coeffs_.size()) {
    coeffs_.clear();
    valuation_ = is_exact() ? kExact : order_ + 1;
    return;
  }
  if (lead > 0) {
    coeffs_.erase(coeffs_.begin(), coeffs_.begin() + static_cast<long>(lead));
    valuation_ += static_cast<int>(lead);
  }
  if (is_exact()) {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
  }
}

LaurentSeries LaurentSeries::zero(int order) { return LaurentSeries(order + 1, {}, order); }

LaurentSeries LaurentSeries::monomial(int exponent, const Rational& coeff) {
  return LaurentSeries(exponent, {coeff}, kExact);
}

LaurentSeries LaurentSeries::polynomial(int valuation, std::vector<Rational> coeffs) {
  return LaurentSeries(valuation, std::move(coeffs), kExact);
}

LaurentSeries LaurentSeries::exp(const Rational& w, int order) {
  std::vector<Rational> c;
  Rational term = 1;
  for (int k = 0; k <= order; ++k) {
    c.push_back(term);
    term *= w;
    term /= (k + 1);
  }
  return LaurentSeries(0, std::move(c), order);
}

LaurentSeries LaurentSeries::expm1(int order) {
  std::vector<Rational> c;
  Rational term = 1;
  for (int k = 1; k <= order; ++k) {
    term /= k;
    c.push_back(term);
  }
  return LaurentSeries(1, std::move(c), order);
}

LaurentSeries LaurentSeries::log1p(int order) {
  std::vector<Rational> c;
  for (int k = 1; k <= order; ++k) c.push_back(make_rational(sign_pow(k - 1), k));
  return LaurentSeries(1, std::move(c), order);
}

LaurentSeries LaurentSeries::binomial_series(const Rational& r, int order) {
  bool finite = is_integer(r) && r >= 0;
  int top = finite ? static_cast<int>(to_long(r)) : order;
  std::vector<Rational> c;
  for (int k = 0; k <= top; ++k) c.push_back(binomial(r, k));
  return LaurentSeries(0, std::move(c), finite ? kExact : order);
}

Rational LaurentSeries::coeff(int exponent) const {
  if (exponent > order_)
    throw UnknownCoefficient("coefficient of x^" + std::to_string(exponent) +
                             " is beyond the certified order " + std::to_string(order_));
  if (exponent < valuation_) return 0;
  auto idx = static_cast<std::size_t>(exponent - valuation_);
  return idx < coeffs_.size() ? coeffs_[idx] : Rational(0);
}

LaurentSeries LaurentSeries::truncated(int order) const {
  if (order >= order_) return *this;
  std::vector<Rational> c;
  for (int k = valuation_; k <= std::min(order, last_stored()); ++k) c.push_back(coeff(k));
  return LaurentSeries(std::min(valuation_, order + 1), std::move(c), order);
}

LaurentSeries LaurentSeries::operator-() const {
  LaurentSeries r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

LaurentSeries& LaurentSeries::operator+=(const LaurentSeries& other) {
  if (other.is_zero() && other.is_exact()) return *this;
  if (is_zero() && is_exact()) return *this = other;
  int order = std::min(order_, other.order_);
  int val = std::min(valuation_, other.valuation_);
  int upper = order >= kExact ? std::max(last_stored(), other.last_stored()) : order;
  std::vector<Rational> c;
  if (upper >= val) c.reserve(static_cast<std::size_t>(upper - val + 1));
  for (int k = val; k <= upper; ++k) {
    Rational s = 0;
    if (k >= valuation_ && k <= last_stored()) s += coeffs_[static_cast<std::size_t>(k - valuation_)];
    if (k >= other.valuation_ && k <= other.last_stored())
      s += other.coeffs_[static_cast<std::size_t>(k - other.valuation_)];
    c.push_back(std::move(s));
  }
  *this = LaurentSeries(val, std::move(c), order);
  return *this;
}

LaurentSeries& LaurentSeries::operator-=(const LaurentSeries& other) { return *this += -other; }

LaurentSeries& LaurentSeries::operator*=(const Rational& scalar) {
  if (scalar == 0) {
    *this = LaurentSeries(valuation_, {}, order_);
    return *this;
  }
  for (auto& c : coeffs_) c *= scalar;
  return *this;
}

LaurentSeries operator*(const LaurentSeries& a, const LaurentSeries& b) {
  if ((a.is_zero() && a.is_exact()) || (b.is_zero() && b.is_exact())) return LaurentSeries();
  int order = std::min(shift_order(a.order_, b.valuation_), shift_order(b.order_, a.valuation_));
  int val = a.valuation_ + b.valuation_;
  if (a.is_zero() || b.is_zero()) return LaurentSeries::zero(order);
  int upper = order >= kExact ? a.last_stored() + b.last_stored() : order;
  std::vector<Rational> c;
  if (upper >= val) c.reserve(static_cast<std::size_t>(upper - val + 1));
  for (int k = val; k <= upper; ++k) {
    Rational s = 0;
    int lo = std::max(a.valuation_, k - b.last_stored());
    int hi = std::min(a.last_stored(), k - b.valuation_);
    for (int i = lo; i <= hi; ++i)
      s += a.coeffs_[static_cast<std::size_t>(i - a.valuation_)] *
           b.coeffs_[static_cast<std::size_t>(k - i - b.valuation_)];
    c.push_back(std::move(s));
  }
  return LaurentSeries(val, std::move(c), order);
}

LaurentSeries LaurentSeries::inverse(int order) const {
  if (is_zero())
    throw ZeroLeadingCoefficient("cannot invert: no nonzero coefficient certified up to order " +
                                 std::to_string(order_));
  int va = valuation_;
  if (is_exact() && coeffs_.size() == 1) {
    LaurentSeries r = monomial(-va, Rational(1) / coeffs_.front());
    return order < kExact ? r.truncated(order) : r;
  }
  int certifiable = is_exact() ? kExact : order_ - 2 * va;
  int target = std::min(certifiable, order);
  if (target >= kExact)
    throw std::invalid_argument("inverse of an exact non-monomial series needs an explicit order");
  int terms = target + va + 1;  // relative exponents 0..target+va
  std::vector<Rational> b;
  if (terms > 0) {
    b.reserve(static_cast<std::size_t>(terms));
    Rational inv_lead = Rational(1) / coeffs_.front();
    b.push_back(inv_lead);
    for (int j = 1; j < terms; ++j) {
      Rational s = 0;
      int lim = std::min<int>(j, static_cast<int>(coeffs_.size()) - 1);
      for (int i = 1; i <= lim; ++i) s += coeffs_[static_cast<std::size_t>(i)] * b[static_cast<std::size_t>(j - i)];
      b.push_back(-s * inv_lead);
    }
  }
  return LaurentSeries(-va, std::move(b), target);
}

LaurentSeries LaurentSeries::pow(long k, int order) const {
  if (k == 0) return monomial(0, 1).truncated(order);
  if (k < 0) {
    long j = -k;
    int inv_order = order;
    if (order < kExact && !is_zero()) inv_order = order + static_cast<int>((j - 1) * valuation_);
    return inverse(inv_order).pow(j, order);
  }
  LaurentSeries result = monomial(0, 1);
  LaurentSeries base = *this;
  while (k > 0) {
    if (k & 1) result = (result * base).truncated(order);
    k >>= 1;
    if (k) base = (base * base).truncated(order);
  }
  return result;
}

LaurentSeries LaurentSeries::derivative() const {
  if (is_zero()) return LaurentSeries(valuation_ - 1, {}, shift_order(order_, -1));
  std::vector<Rational> c;
  c.reserve(coeffs_.size());
  for (std::size_t i = 0; i < coeffs_.size(); ++i) c.push_back(coeffs_[i] * (valuation_ + static_cast<int>(i)));
  return LaurentSeries(valuation_ - 1, std::move(c), shift_order(order_, -1));
}

LaurentSeries LaurentSeries::euler() const {
  LaurentSeries r = *this;
  for (std::size_t i = 0; i < r.coeffs_.size(); ++i) r.coeffs_[i] *= (valuation_ + static_cast<int>(i));
  r.normalize();
  return r;
}

LaurentSeries LaurentSeries::compose(const LaurentSeries& inner, int order) const {
  if (is_zero() && is_exact()) return LaurentSeries();
  int top = is_exact() ? last_stored() : order_;

  if (inner.valuation() >= 1 && !(inner.is_zero() && inner.is_exact())) {
    int iv = inner.valuation();
    int bound = is_exact() ? kExact : shift_order((order_ + 1) * iv, -1);
    int target = std::min(bound, order);
    LaurentSeries result = zero(target);
    if (valuation_ < 0) {
      long jmax = -valuation_;
      int inv_order = target >= kExact ? kExact : target + static_cast<int>((jmax - 1) * iv);
      LaurentSeries inv = inner.inverse(inv_order);
      LaurentSeries p = inv;
      for (int k = -1; k >= valuation_; --k) {
        if (k <= top) result += (p * coeff(k)).truncated(target);
        if (k > valuation_) p = (p * inv).truncated(target);
      }
    }
    LaurentSeries p = monomial(0, 1);
    for (int k = 0; k <= top; ++k) {
      if (target < kExact && static_cast<long>(k) * iv > target) break;
      if (k >= valuation_) {
        Rational c = coeff(k);
        if (c != 0) result += (p * c).truncated(target);
      }
      p = (p * inner).truncated(target);
    }
    return result.truncated(target);
  }

  if (!is_exact() || valuation_ < 0)
    throw InvalidComposition(
        "composition needs an inner series of positive valuation unless the outer series is an exact "
        "polynomial");
  LaurentSeries result;
  LaurentSeries p = monomial(0, 1);
  for (int k = 0; k <= top; ++k) {
    if (k >= valuation_) {
      Rational c = coeff(k);
      if (c != 0) result += (p * c).truncated(order);
    }
    if (k < top) p = (p * inner).truncated(order);
  }
  return result.truncated(order);
}

bool LaurentSeries::agrees_with(const LaurentSeries& other) const {
  int upto = std::min(order_, other.order_);
  int lo = std::min(valuation_, other.valuation_);
  if (upto >= kExact) {
    if (is_zero() || other.is_zero()) return is_zero() && other.is_zero();
    upto = std::max(last_stored(), other.last_stored());
  }
  if (lo >= kExact) return true;
  for (int k = lo; k <= upto; ++k)
    if (coeff(k) != other.coeff(k)) return false;
  return true;
}

bool operator==(const LaurentSeries& a, const LaurentSeries& b) {
  return a.valuation_ == b.valuation_ && a.order_ == b.order_ && a.coeffs_ == b.coeffs_;
}

std::string LaurentSeries::to_string() const {
  std::ostringstream out;
  bool first = true;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    const Rational& c = coeffs_[i];
    if (c == 0) continue;
    int e = valuation_ + static_cast<int>(i);
    Rational mag = abs(c);
    if (first) {
      if (c < 0) out << "-";
    } else {
      out << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (e == 0) {
      out << vzhu::to_string(mag);
      continue;
    }
    if (mag != 1) out << vzhu::to_string(mag) << "*";
    out << "x";
    if (e != 1) out << "^" << e;
  }
  if (first) out << "0";
  if (!is_exact()) out << " + O(x^" << order_ + 1 << ")";
  return out.str();
}

}  // namespace vzhu
