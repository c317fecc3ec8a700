#ifndef VZHU_VIEW_HPP
#define VZHU_VIEW_HPP

#include <map>
#include <mutex>
#include <string>

#include "vzhu/algebra.hpp"

namespace vzhu {

// A candidate conformal vector with L(n) = omega_{n+1}.
class ConformalVector {
 public:
  ConformalVector(const Algebra& alg, Vec omega);

  // heisenberg 1/2 a(-1)^2, virasoro L(-2), free_fermion 1/2 psi(-2)psi(-1).
  static ConformalVector canonical(const Algebra& alg);

  const Algebra& algebra() const { return *alg_; }
  const Vec& omega() const { return omega_; }

  // L(n) v on a module (V by default).
  Vec L(int n, const Vec& v) const;
  Vec L(int n, const Vec& v, const Module& mod) const;

  // L(0)-eigenvalue of a monomial of V; throws NonHomogeneous when the
  // monomial is not an eigenvector.
  Rational eigenvalue(const Monomial& m) const;
  // Decomposition of v into L(0)-eigencomponents.
  std::map<Rational, Vec> split(const Vec& v) const;
  // Common eigenvalue, or throws NonHomogeneous.
  Rational weight(const Vec& v) const;

 private:
  const Algebra* alg_;
  Vec omega_;
  mutable std::mutex mu_;
  mutable std::map<Monomial, Rational> eigen_;
};

// An algebra engine seen through some vertex operator map.
class View {
 public:
  virtual ~View() = default;
  virtual const Algebra& algebra() const = 0;
  virtual std::string name() const = 0;
  // u_k v in the view's vertex operator map (v in V).
  virtual Vec mode(const Vec& u, int k, const Vec& v) const = 0;
  // Every k >= bound gives mode(u,k,v) = 0.
  virtual int cutoff_bound(const Vec& u, const Vec& v) const;
  // Smallest such bound (checked by evaluating trailing modes).
  int cutoff(const Vec& u, const Vec& v) const;
  // D v = v_{-2} 1
  Vec derivative(const Vec& v) const { return mode(v, -2, algebra().vacuum()); }
};

class BaseView : public View {
 public:
  explicit BaseView(const Algebra& alg) : alg_(&alg) {}
  const Algebra& algebra() const override { return *alg_; }
  std::string name() const override { return alg_->spec().name(); }
  Vec mode(const Vec& u, int k, const Vec& v) const override;

 private:
  const Algebra* alg_;
};

// exp(V, omega): Y[u,x] = Y(e^{x L(0)} u, e^x - 1), so
// u[k]v = sum_{m>=k} Res_x x^k e^{(wt u)x} (e^x-1)^{-m-1} u_m v.
class ExpView : public View {
 public:
  explicit ExpView(const ConformalVector& omega) : omega_(&omega) {}
  const Algebra& algebra() const override { return omega_->algebra(); }
  std::string name() const override { return "exp(" + omega_->algebra().spec().name() + ")"; }
  Vec mode(const Vec& u, int k, const Vec& v) const override;
  const ConformalVector& conformal() const { return *omega_; }
  // omega - (c/24) 1, the conformal vector of the exp view.
  Vec tilde_omega(const Rational& central_charge) const;

 private:
  const ConformalVector* omega_;
};

}  // namespace vzhu

#endif  // VZHU_VIEW_HPP
