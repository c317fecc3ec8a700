#ifndef VZHU_ZHU_AUDIT_HPP
#define VZHU_ZHU_AUDIT_HPP

#include <functional>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "vzhu/report.hpp"
#include "vzhu/zhu.hpp"

namespace vzhu {

// Spans for increasing D_gen, built on demand and kept.
class SpanLadder {
 public:
  using Builder = std::function<SpanBasis(const Rational& D_gen)>;
  SpanLadder(Builder build, Rational start, Rational limit)
      : build_(std::move(build)), start_(std::move(start)), limit_(std::move(limit)) {}

  const SpanBasis& at(const Rational& D_gen);

  // Records one sample per item: pass when some D_gen in [start, limit]
  // certifies membership. Returns the largest D_gen that was needed.
  Rational certify(Check& check, const std::vector<std::pair<std::string, Vec>>& items);

  const Rational& start() const { return start_; }
  const Rational& limit() const { return limit_; }

 private:
  Builder build_;
  Rational start_;
  Rational limit_;
  std::map<Rational, SpanBasis> spans_;
};

// Identity, associativity, ideal and DV-ideal audits of a quotient built on
// `view`: every class triple, every basis triple <= D.
VerificationReport quotient_audit(const View& view, const QuotientPresentation& q, const Rational& dgen_limit);

// x-form against log(1+z)-form of *~_n on all basis pairs with weight <= D.
VerificationReport huang_two_form_check(const View& view, int n, const Rational& D);

// u*v - eps v*u - u_0 v in DV (Huang product, view's D), all basis pairs <= D.
VerificationReport skew_congruence_check(const View& view, const Rational& D);

// Classical (DLM) products against f_n/g_n pairings in exp(V, omega), plus
// the two-form check on the base view and the n = 0 skew congruence.
VerificationReport cross_validate(const ConformalVector& omega, int n, const Rational& D);

// phi(u *_n v) = phi(v) *_n phi(u) and omega *_n u = u *_n omega modulo the
// classical O_n span, basis pairs with weight <= D.
VerificationReport phi_involution_check(const ConformalVector& omega, int n, const Rational& D,
                                        const Rational& dgen_start, const Rational& dgen_limit);

// Class representatives, structure constants as [i, j, k, "p/q"] triples and
// the (D, D_gen, stabilized) provenance.
Json quotient_json(const Algebra& alg, const QuotientPresentation& q);

}  // namespace vzhu

#endif  // VZHU_ZHU_AUDIT_HPP
