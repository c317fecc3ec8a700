#include <doctest.h>

#include "vzhu/parse.hpp"
#include "vzhu/phi.hpp"

using namespace vzhu;

namespace {

Rational q(long n, long d = 1) { return make_rational(n, d); }

void check_report(const VerificationReport& r) {
  for (const Check& c : r.checks) {
    CHECK_MESSAGE(c.failures == 0, c.name << ": " << c.first_failure.value_or(""));
    CHECK_MESSAGE(c.samples > 0, c.name);
  }
}

}  // namespace

TEST_CASE("phi modes on the lowest vector") {
  Algebra h(AlgebraSpec::heisenberg());
  ConformalVector omega = ConformalVector::canonical(h);
  for (const Rational& lambda : {q(0), q(1), q(-1, 2), q(3, 7)}) {
    PhiModule W(omega, lambda);
    Vec low = vacuum_vec();
    CHECK(phi_mode(W, h.generator(), 0, low) == scaled(low, lambda));
    for (int m = 1; m <= 3; ++m) CHECK(phi_mode(W, h.generator(), m, low).empty());
    CHECK(phi_mode(W, h.generator(), -1, low) == monomial_vec({-1}));
    for (auto& w : W.basis_up_to_depth(3))
      for (int m = -3; m <= 3; ++m) {
        Vec got = phi_mode(W, h.vacuum(), m, monomial_vec(w));
        CHECK(got == (m == 0 ? monomial_vec(w) : Vec{}));
      }
  }
  PhiModule W(omega, 1);
  CHECK(W.format(monomial_vec({-1})) == "a(-1)|1>");
}

TEST_CASE("derivative law (D_exp v)_[m] = -m v_[m]") {
  for (const AlgebraSpec& spec : {AlgebraSpec::heisenberg(), AlgebraSpec::virasoro(q(1, 2))}) {
    Algebra alg(spec);
    ConformalVector omega = ConformalVector::canonical(alg);
    PhiModule W(omega, 0);
    auto vs = alg.basis_up_to(3);
    auto ws = alg.basis_up_to(3);
    for (auto& v : vs) {
      Vec dv = W.exp_view().derivative(monomial_vec(v));
      CHECK(dv == omega.L(-1, monomial_vec(v)) + omega.L(0, monomial_vec(v)));
      for (auto& w : ws)
        for (int m = -3; m <= 3; ++m)
          CHECK(phi_mode(W, dv, m, monomial_vec(w)) == scaled(phi_mode(W, monomial_vec(v), m, monomial_vec(w)), -m));
    }
  }
}

TEST_CASE("heisenberg phi modes commute like the Heisenberg algebra") {
  Algebra h(AlgebraSpec::heisenberg());
  ConformalVector omega = ConformalVector::canonical(h);
  PhiModule W(omega, q(2, 3));
  Vec a = h.generator();
  for (auto& w : W.basis_up_to_depth(4))
    for (int m = -3; m <= 3; ++m)
      for (int n = -3; n <= 3; ++n) {
        Vec wv = monomial_vec(w);
        Vec lhs = phi_mode(W, a, m, phi_mode(W, a, n, wv)) - phi_mode(W, a, n, phi_mode(W, a, m, wv));
        CHECK(lhs == (m + n == 0 ? scaled(wv, m) : Vec{}));
      }
}

TEST_CASE("Omega~_n by probes") {
  Algebra h(AlgebraSpec::heisenberg());
  ConformalVector omega = ConformalVector::canonical(h);
  for (const Rational& lambda : {q(0), q(1), q(-1, 2)}) {
    PhiModule W(omega, lambda);
    OmegaSpace s0 = omega_space(W, 0, 4, 4);
    REQUIRE(s0.basis.size() == 1);
    CHECK(s0.basis[0] == vacuum_vec());
    OmegaSpace s1 = omega_space(W, 1, 4, 4);
    CHECK(s1.basis.size() == 2);
  }
}

TEST_CASE("L_phi brackets") {
  Algebra h(AlgebraSpec::heisenberg());
  LPhi L(h);
  Vec a = h.generator();
  LPhiElement one0 = LPhi::term(h.vacuum(), 0);
  for (int m = -3; m <= 3; ++m)
    for (int n = -3; n <= 3; ++n) {
      LPhiElement b = L.bracket(LPhi::term(a, m), LPhi::term(a, n));
      CHECK(b == (m + n == 0 ? scaled(one0, m) : LPhiElement{}));
    }
  for (int n = -3; n <= 3; ++n) {
    LPhiElement r = L.reduce(LPhi::term(h.vacuum(), n));
    CHECK(r == (n == 0 ? one0 : LPhiElement{}));
  }
  CHECK(L.reduce(LPhi::term(a, 0)) == LPhi::term(a, 0));
  // D a (x) t^2 = -2 a (x) t^2 mod I
  CHECK(L.reduce(LPhi::term(h.derivative(a), 2)) == scaled(LPhi::term(a, 2), -2));
  for (auto& v : h.basis_up_to(3))
    for (int t = -2; t <= 2; ++t) CHECK(L.bracket(one0, LPhi::term(monomial_vec(v), t)).empty());

  Algebra f(AlgebraSpec::free_fermion());
  LPhi F(f);
  Vec psi = f.generator();
  LPhiElement f0 = LPhi::term(f.vacuum(), 0);
  for (int m = -2; m <= 2; ++m)
    for (int n = -2; n <= 2; ++n) {
      LPhiElement b = F.bracket(LPhi::term(psi, m), LPhi::term(psi, n));
      CHECK(b == (m + n == 0 ? f0 : LPhiElement{}));
    }
  CHECK(F.parity(LPhi::term(psi, 1)) == 1);
  CHECK(F.format(LPhi::term(psi, 1)) == "psi(-1)|0> t^1");
}

TEST_CASE("seeded module reports pass") {
  Algebra h(AlgebraSpec::heisenberg());
  ConformalVector omega = ConformalVector::canonical(h);
  PhiModule W(omega, 1);
  PhiSampling s;
  s.samples = 120;
  s.max_depth = 4;
  s.operator_depth = 4;
  check_report(phi_commutator_check(W, s));
  check_report(relation_check_U(W, s));
  check_report(atilde_action_check(W, 0, 3));

  Algebra f(AlgebraSpec::free_fermion());
  LPhi F(f);
  LPhiSampling ls;
  ls.samples = 100;
  ls.reduce_samples = 100;
  ls.max_weight = 3;
  check_report(lphi_axiom_check(F, ls));
}

TEST_CASE("dropping the super sign breaks the fermion L_phi checks") {
  EngineOptions bad;
  bad.drop_super_sign = true;
  Algebra f(AlgebraSpec::free_fermion(), bad);
  LPhi F(f);
  LPhiSampling ls;
  ls.samples = 100;
  ls.reduce_samples = 50;
  ls.max_weight = 3;
  CHECK_FALSE(lphi_axiom_check(F, ls).passed());
}
