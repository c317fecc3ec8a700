#ifndef VZHU_ZHU_HPP
#define VZHU_ZHU_HPP

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "vzhu/kernels.hpp"
#include "vzhu/linalg.hpp"
#include "vzhu/view.hpp"

namespace vzhu {

// Res_x K(x) Y(u,x) v = sum_m [x^m]K * u_m v, a finite exact sum.
Vec star_kernel(const View& view, const KernelId& kernel, const Vec& u, const Vec& v);

// Res_z K(z) Y(u, log(1+z)) v for an exact Laurent polynomial K.
Vec star_log_form(const View& view, const LaurentSeries& kz, const Vec& u, const Vec& v);

// The z-side kernels obtained from f_n and g_n by x = log(1+z):
//   sum_i binom(-n-1,i) (1+z)^n / z^{n+1+i}   and   (1+z)^n / z^{2n+2}.
LaurentSeries f_log_kernel(int n);
LaurentSeries g_log_kernel(int n);

// u *~_n v through f_n in x.
Vec tilde_star_x(const View& view, const Vec& u, const Vec& v, int n);
// u *~_n v through the log(1+z) form.
Vec tilde_star_z(const View& view, const Vec& u, const Vec& v, int n);
// Both forms; throws InternalMismatch if they disagree.
Vec tilde_star_n(const View& view, const Vec& u, const Vec& v, int n);
// u o~_n v = Res_x g_n(x) Y(u,x) v
Vec tilde_circ_n(const View& view, const Vec& u, const Vec& v, int n);

// Dong-Li-Mason products, u split into L(0)-eigencomponents:
//   u *_n v = sum_{k=0}^n (-1)^k binom(n+k,n) Res (1+x)^{wt u+n}/x^{n+k+1} Y(u,x)v
//   u o_n v = Res (1+x)^{wt u+n}/x^{2n+2} Y(u,x)v
struct ClassicalProducts {
  Vec star;
  Vec circ;
};
ClassicalProducts classical_products(const ConformalVector& omega, const Vec& u, const Vec& v, int n);
Vec classical_star(const ConformalVector& omega, const Vec& u, const Vec& v, int n);
Vec classical_circ(const ConformalVector& omega, const Vec& u, const Vec& v, int n);

// phi(v) = e^{L(1)} (-1)^{L(0)} v
Vec phi_involution(const ConformalVector& omega, const Vec& v);

struct SpanRequest {
  int n = 0;
  Rational D = 4;
  Rational D_gen = 4;
  bool include_DV = true;
  // Generators use basis pairs with wt u, wt v <= D_gen and their top
  // weight wt u + wt v + 2n + 1 <= top_cap when set; D w is added for every
  // basis w whose image stays within the ambient.
  std::optional<Rational> top_cap;
};

struct SpanBasis {
  SpanRequest request;
  const Algebra* algebra = nullptr;
  std::size_t generator_count = 0;
  Rational ambient_max_weight = 0;
  std::shared_ptr<Echelon> echelon;

  bool contains(const Vec& x) const;
  Vec reduce(const Vec& x) const { return echelon->reduce(x); }
};

// Kernel family of the span: g_n products (tilde) on any view.
SpanBasis span_build(const View& view, const SpanRequest& req);
// Span of the classical O_n generators u o_n v together with (L(-1)+L(0))V.
SpanBasis classical_span_build(const ConformalVector& omega, const SpanRequest& req);

// Exact membership; throws OutOfAmbient past the ambient weight.
bool membership(const Vec& x, const SpanBasis& span);

struct QuotientPresentation {
  std::string view;
  int n = 0;
  Rational D = 0;
  Rational D_gen = 0;
  bool stabilized = false;
  std::vector<std::size_t> dimension_history;  // class count per D_gen tried
  std::vector<Monomial> classes;
  // table[i][j] = coordinates of classes[i] *~_n classes[j] in the class basis
  std::vector<std::vector<std::vector<Rational>>> table;
  std::size_t identity = 0;
  // "i*j" for products whose reduction leaves V_{<=D} (structure constants undefined)
  std::vector<std::string> escapes;
  std::vector<std::vector<bool>> defined;
  SpanBasis span;
};

struct QuotientRequest {
  int n = 0;
  Rational D = 4;
  // First D_gen tried and the cap of the stabilization loop.
  Rational D_gen_start = 4;
  Rational D_gen_max = 8;
  std::optional<Rational> top_cap;
  // Throw TruncationEscape on the first escaping product.
  bool strict = false;
};

// Reruns span_build with increasing D_gen until the class dimension has been
// the same three times in a row (reported, not certified).
QuotientPresentation quotient_build(const View& view, const QuotientRequest& req);
// Same, for fixed D_gen.
QuotientPresentation quotient_at(const View& view, int n, const Rational& D, const SpanBasis& span,
                                 bool strict = false);

// Coordinates of x (reduced) in the class basis; nullopt if it escapes.
std::optional<std::vector<Rational>> class_coordinates(const QuotientPresentation& q, const Vec& x);

}  // namespace vzhu

#endif  // VZHU_ZHU_HPP
