#ifndef VZHU_PHI_HPP
#define VZHU_PHI_HPP

#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "vzhu/linalg.hpp"
#include "vzhu/report.hpp"
#include "vzhu/view.hpp"

namespace vzhu {

// The Fock module M(1, lambda) (or V itself for lambda = 0) with
// X_W(v,x) = Y_W(x^{L(0)} v, x), i.e. v_[m] = v_{wt v - 1 + m}.
// It is a phi-coordinated module for exp(V, omega): the vertex operations
// entering its identities are the exp-view ones.
class PhiModule {
 public:
  PhiModule(const ConformalVector& omega, Rational lambda);

  const Algebra& algebra() const { return omega_->algebra(); }
  const ConformalVector& conformal() const { return *omega_; }
  const ExpView& exp_view() const { return exp_; }
  const Module& module() const { return *module_; }
  const Rational& lambda() const { return lambda_; }

  // Depth below the lowest-weight vector.
  int depth(const Monomial& w) const { return static_cast<int>(to_long(algebra().degree(w))); }
  std::vector<Monomial> basis_of_depth(int d) const { return algebra().basis_of_weight(d); }
  std::vector<Monomial> basis_up_to_depth(int d) const { return algebra().basis_up_to(d); }

  // "a(-1)|lambda>"-style text for module vectors.
  std::string format(const Vec& w) const;
  std::string format(const Monomial& w) const;

 private:
  const ConformalVector* omega_;
  ExpView exp_;
  Rational lambda_;
  const Module* module_;
};

// v_[m] w
Vec phi_mode(const PhiModule& W, const Vec& v, int m, const Vec& w);

struct PhiSampling {
  std::size_t samples = 500;
  std::uint64_t seed = 42;
  Rational max_weight = 3;  // of u, v in V
  int max_depth = 6;        // of w
  int mode_range = 4;       // |m|, |n|
  int operator_depth = 8;   // exhaustive operator identities
};

// u_[m] v_[n] - eps v_[n] u_[m] = sum_j m^j/j! (u[j]v)_[m+n] on sampled
// tuples, depth grading of v_[m], and for heisenberg the operator statement
// [a_[m], a_[n]] = m delta_{m+n,0} on all of W up to max_depth.
VerificationReport phi_commutator_check(const PhiModule& W, const PhiSampling& s);

struct OmegaSpace {
  int n = 0;
  int probe_depth = 0;
  Rational probe_weight = 0;
  std::vector<Vec> basis;  // homogeneous in depth
};

// {w : v_[m] w = 0 for basis v of V with wt v <= probe_weight, m >= n+1}
// within depth <= probe_depth.
OmegaSpace omega_space(const PhiModule& W, int n, int probe_depth, const Rational& probe_weight);

// On Omega~_n: u_[0] v_[0] w = (u *~_n v)_[0] w and
// (u o~_n v)_[0] w = 0 for basis u, v with wt <= D, plus v_[0]-stability.
VerificationReport atilde_action_check(const PhiModule& W, int n, const Rational& D, int probe_depth = 8,
                                       const Rational& probe_weight = 4);

// U~(V) relations under u[n] -> u_[n]: vacuum, D-law, commutator; and the
// skew congruence u*v - eps v*u = u_0 v mod DV for pairs with wt <= 3.
VerificationReport relation_check_U(const PhiModule& W, const PhiSampling& s);

// Elements of L_phi(V): (v, n) -> coefficient of v (x) t^n.
using LPhiKey = std::pair<Monomial, int>;
using LPhiElement = std::map<LPhiKey, Rational>;

class LPhi {
 public:
  explicit LPhi(const Algebra& alg) : alg_(&alg) {}

  const Algebra& algebra() const { return *alg_; }

  static LPhiElement term(const Vec& v, int t);
  // [u (x) t^m, v (x) t^n] = sum_j m^j/j! u_j v (x) t^{m+n}, reduced.
  LPhiElement bracket(const LPhiElement& x, const LPhiElement& y) const;
  // Canonical representative modulo I = span{Dv (x) t^n + n v (x) t^n}.
  LPhiElement reduce(const LPhiElement& x) const;
  // Generator Dv (x) t^n + n v (x) t^n of I.
  LPhiElement ideal_generator(const Vec& v, int t) const;
  std::optional<int> parity(const LPhiElement& x) const;
  std::string format(const LPhiElement& x) const;

 private:
  const Echelon& image(int t, const Rational& top) const;

  const Algebra* alg_;
  struct Slice {
    Rational top = -1;
    std::unique_ptr<Echelon> echelon;
  };
  mutable std::mutex mu_;
  mutable std::map<int, Slice> images_;
};

LPhiElement operator+(const LPhiElement& a, const LPhiElement& b);
LPhiElement operator-(const LPhiElement& a, const LPhiElement& b);
LPhiElement scaled(const LPhiElement& a, const Rational& s);

struct LPhiSampling {
  std::size_t samples = 300;
  std::size_t reduce_samples = 200;
  std::uint64_t seed = 42;
  Rational max_weight = 4;
  int t_range = 3;
};

// Idempotence and projection of reduce_mod_I, super skew symmetry and super
// Jacobi modulo I, on seeded samples.
VerificationReport lphi_axiom_check(const LPhi& L, const LPhiSampling& s);

}  // namespace vzhu

#endif  // VZHU_PHI_HPP
