#ifndef VZHU_CONFORMAL_HPP
#define VZHU_CONFORMAL_HPP

#include <cstdint>
#include <optional>

#include "vzhu/report.hpp"
#include "vzhu/view.hpp"

namespace vzhu {

struct VirasoroAuditOptions {
  Rational bound = 6;  // weight of the basis vectors acted on
  int mode_range = 4;
};

// Virasoro bracket for |m|,|n| <= mode_range on basis vectors of weight
// <= bound with c extracted from [L(2), L(-2)]1 = (c/2)1; L(-1) = D; L(0)
// semisimple on V_{<=bound}. data carries central_charge and the weight table.
VerificationReport virasoro_audit(const ConformalVector& omega, const VirasoroAuditOptions& opt = {});

// The central charge recorded by a virasoro_audit report, if extracted.
std::optional<Rational> audited_central_charge(const VerificationReport& rep);

// omega - D h = omega - h(-2)1
Vec shift_conformal(const ConformalVector& omega, const Vec& h);
// heisenberg: omega - lambda a(-2)1
Vec heisenberg_shift(const Algebra& heis, const Rational& lambda);

// virasoro_audit of omega_h plus L_h(n) = L(n) + (n+1) lambda a_n on weight
// <= 5, |n| <= 3 and L_h(-1) = L(-1) on weight <= 6 (heisenberg).
VerificationReport shift_check(const Algebra& heis, const Rational& lambda);

// u[k]v in exp(V, omega)
Vec exp_mode(const ExpView& view, const Vec& u, int k, const Vec& v);

// Y[1,x] = id, creation, D_exp = L(-1) + L(0), D_exp law, cutoff and the
// engine axioms read through the exp view.
VerificationReport exp_view_audit(const ConformalVector& omega, const Rational& bound, std::size_t samples,
                                  std::uint64_t seed);

// Scalar by which a_0 acts on the lowest-weight space of `module`. Throws
// PreconditionFailed unless a_0 = 0 on V_{<=bound}; NotScalar if the action
// is not scalar.
Rational zero_mode_scalar(const Module& module, const Vec& a, const Rational& bound = 6);

// e^{-alpha x} S'(x) = (e^{-alpha x} S)' + alpha e^{-alpha x} S through
// x^{order-1} on seeded truncated Laurent series S, plus linearity in S.
VerificationReport twist_lemma_check(const Rational& alpha, int order, std::uint64_t seed = 0, std::size_t samples = 3);

}  // namespace vzhu

#endif  // VZHU_CONFORMAL_HPP
