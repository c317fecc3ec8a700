#include "vzhu/kernels.hpp"

#include <map>
#include <mutex>
#include <tuple>

namespace vzhu {

namespace {

struct PowerCache {
  std::mutex mu;
  // (w, j) -> e^{wx} h^j with h = (e^x-1)/x, at the largest order built so far
  std::map<std::pair<Rational, int>, LaurentSeries> exp_h;
  // j -> (log(1+z)/z)^j
  std::map<int, LaurentSeries> log_ratio;
  std::map<std::pair<std::string, int>, LaurentSeries> kernels;
};

PowerCache& cache() {
  static PowerCache c;
  return c;
}

LaurentSeries h_series(int order) {
  std::vector<Rational> c;
  Rational term = 1;
  for (int i = 0; i <= order; ++i) {
    term /= (i + 1);
    c.push_back(term);
  }
  return LaurentSeries(0, std::move(c), order);
}

LaurentSeries ratio_power(const LaurentSeries& base, int j, int order) {
  if (j >= 0) return base.pow(j, order);
  return base.inverse(order).pow(-j, order);
}

// e^{wx} h^j through x^order (order >= 0).
LaurentSeries exp_h_power(const Rational& w, int j, int order) {
  auto& c = cache();
  {
    std::lock_guard<std::mutex> lock(c.mu);
    auto it = c.exp_h.find({w, j});
    if (it != c.exp_h.end() && it->second.order() >= order) return it->second.truncated(order);
  }
  LaurentSeries s = LaurentSeries::exp(w, order) * ratio_power(h_series(order), j, order);
  s = s.truncated(order);
  std::lock_guard<std::mutex> lock(c.mu);
  auto it = c.exp_h.find({w, j});
  if (it == c.exp_h.end() || it->second.order() < order) c.exp_h.insert_or_assign({w, j}, s);
  return s;
}

LaurentSeries shift(const LaurentSeries& s, int by) {
  std::vector<Rational> c;
  for (int e = s.valuation(); e <= s.last_stored(); ++e) c.push_back(s.coeff(e));
  if (s.is_zero()) return LaurentSeries::zero(s.order() + by);
  return LaurentSeries(s.valuation() + by, std::move(c), s.order() + by);
}

LaurentSeries build_kernel(const KernelId& id, int order) {
  switch (id.tag) {
    case KernelTag::f: {
      LaurentSeries total = LaurentSeries::zero(order);
      for (int i = 0; i <= id.n; ++i)
        total += exp_power(0, id.n + 1, -(i + id.n + 1), order) * binomial(-id.n - 1, i);
      return total;
    }
    case KernelTag::g:
      return exp_power(0, id.n + 1, -(2 * id.n + 2), order);
    case KernelTag::huang_f:
      return exp_power(0, 1, -1, order);
    case KernelTag::huang_g:
      return exp_power(0, 1, -2, order);
    case KernelTag::exp_mode:
      return exp_power(id.k, id.w, -id.m - 1, order);
    case KernelTag::custom:
      return id.series->truncated(order);
  }
  return LaurentSeries::zero(order);
}

}  // namespace

KernelId KernelId::custom(LaurentSeries s) {
  KernelId id;
  id.tag = KernelTag::custom;
  id.series = std::make_shared<const LaurentSeries>(std::move(s));
  return id;
}

int KernelId::valuation() const {
  switch (tag) {
    case KernelTag::f:
      return -(2 * n + 1);
    case KernelTag::g:
      return -(2 * n + 2);
    case KernelTag::huang_f:
      return -1;
    case KernelTag::huang_g:
      return -2;
    case KernelTag::exp_mode:
      return k - m - 1;
    case KernelTag::custom:
      return series->valuation();
  }
  return 0;
}

std::string KernelId::name() const {
  switch (tag) {
    case KernelTag::f:
      return "f" + std::to_string(n);
    case KernelTag::g:
      return "g" + std::to_string(n);
    case KernelTag::huang_f:
      return "huang_f";
    case KernelTag::huang_g:
      return "huang_g";
    case KernelTag::exp_mode:
      return "exp_mode(" + std::to_string(k) + "," + to_string(w) + "," + std::to_string(m) + ")";
    case KernelTag::custom:
      return "custom";
  }
  return "?";
}

LaurentSeries exp_power(int a, const Rational& w, int j, int order) {
  int base = a + j;
  int rel = order - base;
  if (rel < 0) return LaurentSeries::zero(order);
  return shift(exp_h_power(w, j, rel), base);
}

Rational exp_mode_coeff(int k, const Rational& w, int m) {
  if (m < k) return 0;
  return exp_h_power(w, -m - 1, m - k).coeff(m - k);
}

LaurentSeries log_ratio_power(int j, int order) {
  auto& c = cache();
  {
    std::lock_guard<std::mutex> lock(c.mu);
    auto it = c.log_ratio.find(j);
    if (it != c.log_ratio.end() && it->second.order() >= order) return it->second.truncated(order);
  }
  std::vector<Rational> coeffs;
  for (int i = 0; i <= order; ++i) coeffs.push_back(make_rational(sign_pow(i), i + 1));
  LaurentSeries ell(0, std::move(coeffs), order);
  LaurentSeries s = ratio_power(ell, j, order).truncated(order);
  std::lock_guard<std::mutex> lock(c.mu);
  auto it = c.log_ratio.find(j);
  if (it == c.log_ratio.end() || it->second.order() < order) c.log_ratio.insert_or_assign(j, s);
  return s;
}

LaurentSeries expand_kernel(const KernelId& id, int order) {
  if (id.tag == KernelTag::custom) return build_kernel(id, order);
  auto& c = cache();
  std::string key = id.name();
  {
    std::lock_guard<std::mutex> lock(c.mu);
    auto it = c.kernels.find({key, order});
    if (it != c.kernels.end()) return it->second;
  }
  LaurentSeries s = build_kernel(id, order);
  std::lock_guard<std::mutex> lock(c.mu);
  c.kernels.emplace(std::make_pair(key, order), s);
  return s;
}

Rational kappa(int n) { return -(2 * n + 1) * binomial(-n - 1, n); }

void clear_kernel_cache() {
  auto& c = cache();
  std::lock_guard<std::mutex> lock(c.mu);
  c.exp_h.clear();
  c.log_ratio.clear();
  c.kernels.clear();
}

}  // namespace vzhu
