#include "vzhu/zhu.hpp"

#include <algorithm>
#include <functional>

#include "vzhu/errors.hpp"

namespace vzhu {

Vec star_kernel(const View& view, const KernelId& kernel, const Vec& u, const Vec& v) {
  if (u.empty() || v.empty()) return {};
  int bound = view.cutoff_bound(u, v);
  int val = kernel.valuation();
  if (bound - 1 < val) return {};
  LaurentSeries k = expand_kernel(kernel, bound - 1);
  Vec out;
  for (int m = val; m < bound; ++m) {
    Rational c = k.coeff(m);
    if (c != 0) add_scaled(out, view.mode(u, m, v), c);
  }
  return out;
}

Vec star_log_form(const View& view, const LaurentSeries& kz, const Vec& u, const Vec& v) {
  if (u.empty() || v.empty() || kz.is_zero()) return {};
  int bound = view.cutoff_bound(u, v);
  int val = kz.valuation();
  int top = kz.last_stored();
  Vec out;
  // coefficient of u_m v: Res_z K(z) z^{-m-1} (log(1+z)/z)^{-m-1} = sum_t K_t [z^{m-t}] ratio^{-m-1}
  for (int m = val; m < bound; ++m) {
    LaurentSeries r = log_ratio_power(-m - 1, m - val);
    Rational c = 0;
    for (int t = val; t <= std::min(top, m); ++t) c += kz.coeff(t) * r.coeff(m - t);
    if (c != 0) add_scaled(out, view.mode(u, m, v), c);
  }
  return out;
}

LaurentSeries f_log_kernel(int n) {
  LaurentSeries one_plus_z_n = LaurentSeries::binomial_series(n, 0);
  LaurentSeries total;
  for (int i = 0; i <= n; ++i)
    total += one_plus_z_n * LaurentSeries::monomial(-(n + 1 + i), binomial(-n - 1, i));
  return total;
}

LaurentSeries g_log_kernel(int n) {
  return LaurentSeries::binomial_series(n, 0) * LaurentSeries::monomial(-(2 * n + 2));
}

Vec tilde_star_x(const View& view, const Vec& u, const Vec& v, int n) {
  return star_kernel(view, KernelId::f(n), u, v);
}

Vec tilde_star_z(const View& view, const Vec& u, const Vec& v, int n) {
  return star_log_form(view, f_log_kernel(n), u, v);
}

Vec tilde_star_n(const View& view, const Vec& u, const Vec& v, int n) {
  Vec x = tilde_star_x(view, u, v, n);
  Vec z = tilde_star_z(view, u, v, n);
  if (x != z)
    throw InternalMismatch("x-form and log(1+z)-form of *~_" + std::to_string(n) + " disagree on " +
                           format_vector(view.algebra(), u) + " , " + format_vector(view.algebra(), v));
  return x;
}

Vec tilde_circ_n(const View& view, const Vec& u, const Vec& v, int n) {
  return star_kernel(view, KernelId::g(n), u, v);
}

namespace {

// Res (1+x)^N x^{-s} Y(u,x) v = sum_m binom(N, m+s) u_m v
Vec binomial_pairing(const Module& mod, const Vec& u, const Vec& v, const Rational& N, int s) {
  Vec out;
  int bound = mod.structural_cutoff(u, v);
  for (int m = -s; m < bound; ++m) {
    Rational c = binomial(N, m + s);
    if (c != 0) add_scaled(out, mod.mode(u, m, v), c);
  }
  return out;
}

void require_integral(const Rational& w) {
  if (!is_integer(w)) throw NonHomogeneous("classical products need integral L(0)-weights");
}

}  // namespace

Vec classical_star(const ConformalVector& omega, const Vec& u, const Vec& v, int n) {
  const Module& mod = omega.algebra().vacuum_module();
  Vec out;
  for (const auto& [w, piece] : omega.split(u)) {
    require_integral(w);
    for (int k = 0; k <= n; ++k)
      add_scaled(out, binomial_pairing(mod, piece, v, w + n, n + k + 1), binomial(-n - 1, k));
  }
  return out;
}

Vec classical_circ(const ConformalVector& omega, const Vec& u, const Vec& v, int n) {
  const Module& mod = omega.algebra().vacuum_module();
  Vec out;
  for (const auto& [w, piece] : omega.split(u)) {
    require_integral(w);
    add_scaled(out, binomial_pairing(mod, piece, v, w + n, 2 * n + 2), 1);
  }
  return out;
}

ClassicalProducts classical_products(const ConformalVector& omega, const Vec& u, const Vec& v, int n) {
  return {classical_star(omega, u, v, n), classical_circ(omega, u, v, n)};
}

Vec phi_involution(const ConformalVector& omega, const Vec& v) {
  Vec signed_v;
  for (const auto& [w, piece] : omega.split(v)) {
    require_integral(w);
    add_scaled(signed_v, piece, sign_pow(to_long(w)));
  }
  Vec out = signed_v;
  Vec term = signed_v;
  for (long k = 1; !term.empty(); ++k) {
    term = scaled(omega.L(1, term), Rational(1) / k);
    add_scaled(out, term, 1);
  }
  return out;
}

bool SpanBasis::contains(const Vec& x) const { return membership(x, *this); }

bool membership(const Vec& x, const SpanBasis& span) {
  if (x.empty()) return true;
  if (span.algebra->max_degree(x) > span.ambient_max_weight)
    throw OutOfAmbient("vector reaches weight " + to_string(span.algebra->max_degree(x)) +
                       " beyond the ambient weight " + to_string(span.ambient_max_weight));
  return span.echelon->contains(x);
}

namespace {

SpanBasis assemble(const Algebra& alg, const SpanRequest& req, std::vector<Vec> generators,
                   const std::function<Vec(const Vec&)>& derivation) {
  SpanBasis span;
  span.request = req;
  span.algebra = &alg;
  span.echelon = std::make_shared<Echelon>(alg);
  Rational top = req.D;
  for (const Vec& g : generators)
    if (!g.empty()) top = std::max(top, alg.max_degree(g));
  span.ambient_max_weight = top;
  if (req.include_DV) {
    for (const Monomial& w : alg.basis_up_to(top - 1)) {
      Vec d = derivation(monomial_vec(w));
      span.echelon->add(d);
      ++span.generator_count;
    }
  }
  for (const Vec& g : generators) {
    span.echelon->add(g);
    ++span.generator_count;
  }
  return span;
}

bool within_cap(const Algebra& alg, const SpanRequest& req, const Monomial& u, const Monomial& v) {
  if (!req.top_cap) return true;
  return alg.degree(u) + alg.degree(v) + 2 * req.n + 1 <= *req.top_cap;
}

}  // namespace

SpanBasis span_build(const View& view, const SpanRequest& req) {
  if (req.D > req.D_gen) throw std::invalid_argument("span_build needs D <= D_gen");
  const Algebra& alg = view.algebra();
  auto basis = alg.basis_up_to(req.D_gen);
  std::vector<Vec> gens;
  for (const Monomial& u : basis)
    for (const Monomial& v : basis)
      if (within_cap(alg, req, u, v)) gens.push_back(tilde_circ_n(view, monomial_vec(u), monomial_vec(v), req.n));
  return assemble(alg, req, std::move(gens), [&](const Vec& w) { return view.derivative(w); });
}

SpanBasis classical_span_build(const ConformalVector& omega, const SpanRequest& req) {
  if (req.D > req.D_gen) throw std::invalid_argument("span_build needs D <= D_gen");
  const Algebra& alg = omega.algebra();
  auto basis = alg.basis_up_to(req.D_gen);
  std::vector<Vec> gens;
  for (const Monomial& u : basis)
    for (const Monomial& v : basis)
      if (within_cap(alg, req, u, v))
        gens.push_back(classical_circ(omega, monomial_vec(u), monomial_vec(v), req.n));
  return assemble(alg, req, std::move(gens),
                  [&](const Vec& w) { return omega.L(-1, w) + omega.L(0, w); });
}

std::optional<std::vector<Rational>> class_coordinates(const QuotientPresentation& q, const Vec& x) {
  Vec r = q.span.reduce(x);
  std::vector<Rational> coords(q.classes.size());
  for (const auto& [m, c] : r) {
    auto it = std::lower_bound(q.classes.begin(), q.classes.end(), m);
    if (it == q.classes.end() || *it != m) return std::nullopt;
    coords[static_cast<std::size_t>(it - q.classes.begin())] = c;
  }
  return coords;
}

QuotientPresentation quotient_at(const View& view, int n, const Rational& D, const SpanBasis& span, bool strict) {
  const Algebra& alg = view.algebra();
  QuotientPresentation q;
  q.view = view.name();
  q.n = n;
  q.D = D;
  q.D_gen = span.request.D_gen;
  q.span = span;
  for (const Monomial& m : alg.basis_up_to(D))
    if (!span.echelon->is_pivot(m)) q.classes.push_back(m);
  std::sort(q.classes.begin(), q.classes.end());
  auto id = std::lower_bound(q.classes.begin(), q.classes.end(), Monomial{});
  q.identity = (id != q.classes.end() && id->empty()) ? static_cast<std::size_t>(id - q.classes.begin())
                                                       : q.classes.size();
  std::size_t k = q.classes.size();
  q.table.assign(k, std::vector<std::vector<Rational>>(k));
  q.defined.assign(k, std::vector<bool>(k, false));
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) {
      Vec x = tilde_star_x(view, monomial_vec(q.classes[i]), monomial_vec(q.classes[j]), n);
      auto coords = class_coordinates(q, x);
      if (!coords) {
        std::string name = format_monomial(alg, q.classes[i]) + " * " + format_monomial(alg, q.classes[j]);
        if (strict) throw TruncationEscape(name);
        q.escapes.push_back(name);
        continue;
      }
      q.table[i][j] = std::move(*coords);
      q.defined[i][j] = true;
    }
  return q;
}

QuotientPresentation quotient_build(const View& view, const QuotientRequest& req) {
  std::vector<std::size_t> history;
  std::optional<QuotientPresentation> last;
  for (Rational dg = std::max(req.D_gen_start, req.D); dg <= req.D_gen_max; dg += 1) {
    SpanRequest sr{req.n, req.D, dg, true, req.top_cap};
    SpanBasis span = span_build(view, sr);
    std::size_t dim = 0;
    for (const Monomial& m : view.algebra().basis_up_to(req.D))
      if (!span.echelon->is_pivot(m)) ++dim;
    history.push_back(dim);
    std::size_t h = history.size();
    bool stable = h >= 3 && history[h - 1] == history[h - 2] && history[h - 2] == history[h - 3];
    if (stable || dg + 1 > req.D_gen_max) {
      QuotientPresentation q = quotient_at(view, req.n, req.D, span, req.strict);
      q.stabilized = stable;
      q.dimension_history = history;
      return q;
    }
  }
  throw std::invalid_argument("quotient_build needs D_gen_start <= D_gen_max");
}

}  // namespace vzhu
