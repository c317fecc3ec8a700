#ifndef VZHU_KERNELS_HPP
#define VZHU_KERNELS_HPP

#include <memory>
#include <string>

#include "vzhu/rational.hpp"
#include "vzhu/series.hpp"

namespace vzhu {

enum class KernelTag { f, g, huang_f, huang_g, exp_mode, custom };

// Named kernel series.
//   f_n      = sum_{i=0}^n binom(-n-1,i) e^{(n+1)x} / (e^x-1)^{i+n+1}
//   g_n      = e^{(n+1)x} / (e^x-1)^{2n+2}
//   huang_f  = e^x/(e^x-1),  huang_g = e^x/(e^x-1)^2
//   exp_mode = x^k e^{wx} / (e^x-1)^{m+1}
//   custom   = an explicit series supplied by the caller
struct KernelId {
  KernelTag tag = KernelTag::huang_f;
  int n = 0;
  int k = 0;
  Rational w = 0;
  int m = 0;
  std::shared_ptr<const LaurentSeries> series;

  static KernelId f(int n) { return {KernelTag::f, n, 0, 0, 0, nullptr}; }
  static KernelId g(int n) { return {KernelTag::g, n, 0, 0, 0, nullptr}; }
  static KernelId huang_f() { return {KernelTag::huang_f, 0, 0, 0, 0, nullptr}; }
  static KernelId huang_g() { return {KernelTag::huang_g, 0, 0, 0, 0, nullptr}; }
  static KernelId exp_mode(int k, const Rational& w, int m) { return {KernelTag::exp_mode, 0, k, w, m, nullptr}; }
  static KernelId custom(LaurentSeries s);

  // Exact lower bound on the valuation (the true valuation for every tag but
  // custom with cancelling terms).
  int valuation() const;
  std::string name() const;
};

// Coefficients valuation..order, exact. Memoized; safe to call concurrently.
LaurentSeries expand_kernel(const KernelId& id, int order);

// x^a e^{wx} (e^x-1)^j through x^order.
LaurentSeries exp_power(int a, const Rational& w, int j, int order);

// Res_x x^k e^{wx} (e^x-1)^{-m-1}; zero unless m >= k.
Rational exp_mode_coeff(int k, const Rational& w, int m);

// (log(1+z)/z)^j through z^order.
LaurentSeries log_ratio_power(int j, int order);

// f_n' = kappa_n g_n, with kappa_n = -(2n+1) binom(-n-1, n).
Rational kappa(int n);

// Drops every memoized expansion (used by cold-cache determinism checks).
void clear_kernel_cache();

}  // namespace vzhu

#endif  // VZHU_KERNELS_HPP
