#include "vzhu/view.hpp"

#include "vzhu/errors.hpp"
#include "vzhu/kernels.hpp"

namespace vzhu {

ConformalVector::ConformalVector(const Algebra& alg, Vec omega) : alg_(&alg), omega_(std::move(omega)) {}

ConformalVector ConformalVector::canonical(const Algebra& alg) {
  switch (alg.spec().kind) {
    case AlgebraKind::heisenberg:
      return ConformalVector(alg, scaled(monomial_vec({-1, -1}), make_rational(1, 2)));
    case AlgebraKind::virasoro:
      return ConformalVector(alg, monomial_vec({-1}));
    case AlgebraKind::free_fermion:
      return ConformalVector(alg, scaled(monomial_vec({-2, -1}), make_rational(1, 2)));
  }
  return ConformalVector(alg, {});
}

Vec ConformalVector::L(int n, const Vec& v) const { return L(n, v, alg_->vacuum_module()); }

Vec ConformalVector::L(int n, const Vec& v, const Module& mod) const { return mod.mode(omega_, n + 1, v); }

Rational ConformalVector::eigenvalue(const Monomial& m) const {
  {
    std::lock_guard<std::mutex> lock(mu_);
    auto it = eigen_.find(m);
    if (it != eigen_.end()) return it->second;
  }
  Vec image = L(0, monomial_vec(m));
  Rational value = 0;
  if (!image.empty()) {
    auto it = image.find(m);
    if (image.size() != 1 || it == image.end())
      throw NonHomogeneous(format_monomial(*alg_, m) + " is not an L(0)-eigenvector");
    value = it->second;
  }
  std::lock_guard<std::mutex> lock(mu_);
  eigen_.emplace(m, value);
  return value;
}

std::map<Rational, Vec> ConformalVector::split(const Vec& v) const {
  std::map<Rational, Vec> out;
  for (const auto& [m, c] : v) out[eigenvalue(m)].emplace(m, c);
  return out;
}

Rational ConformalVector::weight(const Vec& v) const {
  auto parts = split(v);
  if (parts.size() != 1) throw NonHomogeneous("vector is not L(0)-homogeneous");
  return parts.begin()->first;
}

int View::cutoff_bound(const Vec& u, const Vec& v) const {
  return algebra().vacuum_module().structural_cutoff(u, v);
}

int View::cutoff(const Vec& u, const Vec& v) const {
  int n = cutoff_bound(u, v);
  if (u.empty() || v.empty()) return n;
  const Algebra& alg = algebra();
  int floor_m = n - 1 - 2 * static_cast<int>(floor_rational(alg.max_degree(u) + alg.max_degree(v))) - 8;
  while (n > floor_m && mode(u, n - 1, v).empty()) --n;
  return n;
}

Vec BaseView::mode(const Vec& u, int k, const Vec& v) const { return alg_->vacuum_module().mode(u, k, v); }

Vec ExpView::mode(const Vec& u, int k, const Vec& v) const {
  const Module& mod = algebra().vacuum_module();
  Vec out;
  for (const auto& [w, piece] : omega_->split(u)) {
    int top = mod.structural_cutoff(piece, v);
    for (int m = k; m < top; ++m) {
      Rational c = exp_mode_coeff(k, w, m);
      if (c == 0) continue;
      add_scaled(out, mod.mode(piece, m, v), c);
    }
  }
  return out;
}

Vec ExpView::tilde_omega(const Rational& central_charge) const {
  Vec r = omega_->omega();
  add_term(r, Monomial{}, -central_charge / 24);
  return r;
}

}  // namespace vzhu
