#include <doctest.h>

#include "heisenberg_oracle.hpp"
#include "oracles.hpp"
#include "vzhu/conformal.hpp"
#include "vzhu/errors.hpp"
#include "vzhu/parse.hpp"

using namespace vzhu;

namespace {

Rational q(long n, long d = 1) { return make_rational(n, d); }

// omega_h = 1/2 a(-1)^2 - lambda a(-2), read off from free fields:
// L(2)L(-2)|0> = (c/2)|0>.
Rational oracle_charge(const Rational& lambda) {
  std::vector<std::pair<oracle::Parts, Rational>> omega = {{{1, 1}, q(1, 2)}, {{2}, -lambda}};
  auto L = [&](int n, const oracle::State& s) {
    oracle::State out;
    for (auto& [u, cu] : omega)
      for (auto& [p, cp] : s)
        for (auto& [r, cr] : oracle::mode(u, n + 1, p, 0)) oracle::add(out, r, cu * cp * cr);
    return out;
  };
  oracle::State vac;
  oracle::add(vac, {}, 1);
  oracle::State x = L(2, L(-2, vac));
  return 2 * (x.count({}) ? x.at({}) : Rational(0));
}

}  // namespace

TEST_CASE("central charges") {
  Algebra h(AlgebraSpec::heisenberg());
  for (const Rational& lambda : {q(0), q(1), q(-1), q(1, 3), q(5, 2)}) {
    ConformalVector w(h, heisenberg_shift(h, lambda));
    VerificationReport r = virasoro_audit(w, {4, 3});
    CHECK(r.passed());
    auto c = audited_central_charge(r);
    REQUIRE(c.has_value());
    CHECK(*c == oracle_charge(lambda));
    CHECK(*c == 1 - 12 * lambda * lambda);
  }
  for (const Rational& c : {q(1, 2), q(-22, 5), q(0)}) {
    Algebra vir(AlgebraSpec::virasoro(c));
    CHECK(audited_central_charge(virasoro_audit(ConformalVector::canonical(vir), {4, 3})) == c);
  }
  Algebra f(AlgebraSpec::free_fermion());
  VerificationReport rf = virasoro_audit(ConformalVector::canonical(f), {3, 3});
  CHECK(rf.passed());
  CHECK(audited_central_charge(rf) == q(1, 2));
  CHECK(rf.data["weights"]["3/2"] == 1);
}

TEST_CASE("a non-conformal vector fails the audit") {
  Algebra h(AlgebraSpec::heisenberg());
  ConformalVector bad(h, parse_vector("a(-1)^2|0>", h));
  VerificationReport r = virasoro_audit(bad, {3, 2});
  CHECK_FALSE(r.passed());
  CHECK(r.check("virasoro_bracket").first_failure.has_value());
}

TEST_CASE("shifted Virasoro modes") {
  Algebra h(AlgebraSpec::heisenberg());
  for (const Rational& lambda : {q(1), q(-1), q(1, 3)}) {
    VerificationReport r = shift_check(h, lambda);
    for (const Check& c : r.checks) CHECK_MESSAGE(c.failures == 0, c.name << " " << c.first_failure.value_or(""));
    CHECK(r.data["central_charge"] == to_string(1 - 12 * lambda * lambda));
    CHECK(r.data["negative_weights"] == "absent");
  }
  CHECK(heisenberg_shift(h, q(2)) == parse_vector("1/2*a(-1)^2|0> - 2*a(-2)|0>", h));
}

TEST_CASE("zero mode scalars") {
  Algebra h(AlgebraSpec::heisenberg());
  Vec a = h.generator();
  for (const Rational& lambda : {q(0), q(1), q(-1, 2)}) {
    CHECK(zero_mode_scalar(h.fock(lambda), a) == lambda);
    CHECK(zero_mode_scalar(h.fock(lambda), h.derivative(a)) == 0);
    CHECK(zero_mode_scalar(h.fock(lambda), h.derivative(parse_vector("a(-1)^2|0>", h))) == 0);
  }
  CHECK_THROWS_AS(zero_mode_scalar(h.fock(1), parse_vector("a(-1)^2|0>", h)), PreconditionFailed);
  Algebra vir(AlgebraSpec::virasoro(q(1, 2)));
  CHECK_THROWS_AS(zero_mode_scalar(vir.vacuum_module(), vir.generator()), PreconditionFailed);
}

TEST_CASE("twist identity") {
  for (const Rational& alpha : {q(0), q(2, 3), q(-3), q(7, 5)}) {
    VerificationReport r = twist_lemma_check(alpha, 12, 3, 4);
    CHECK(r.passed());
    CHECK(r.check("twist_identity").samples == 4);
  }
  // e^{-x} d/dx (1/x) = -e^{-x}/x^2, through naive multiplication
  oracle::Trunc e = oracle::exp_w(-1, 8);
  oracle::Trunc d{{{-2, -1}}, 8};
  oracle::Trunc lhs = oracle::mul(e, d, 6);
  LaurentSeries S = LaurentSeries::monomial(-1);
  LaurentSeries got = LaurentSeries::exp(-1, 8) * S.derivative();
  for (int k = -2; k <= 6; ++k) CHECK(got.coeff(k) == lhs.at(k));
}

TEST_CASE("exp view") {
  Algebra h(AlgebraSpec::heisenberg());
  ConformalVector omega = ConformalVector::canonical(h);
  ExpView ev(omega);
  Vec a = h.generator();
  // a[0]a = Res e^x/(e^x-1) a_0 a + Res e^x/(e^x-1)^2 a_1 a = 0
  CHECK(exp_mode(ev, a, 0, a).empty());
  // a[1]a = Res x e^x/(e^x-1)^2 a_1 a = |0>
  CHECK(exp_mode(ev, a, 1, a) == h.vacuum());
  CHECK(ev.derivative(a) == parse_vector("a(-2)|0> + a(-1)|0>", h));
  VerificationReport r = exp_view_audit(omega, 3, 60, 1);
  for (const Check& c : r.checks) CHECK_MESSAGE(c.failures == 0, c.name << " " << c.first_failure.value_or(""));
}
