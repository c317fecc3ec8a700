#include <doctest.h>

#include <algorithm>

#include "heisenberg_oracle.hpp"
#include "oracles.hpp"
#include "vzhu/errors.hpp"
#include "vzhu/parse.hpp"
#include "vzhu/zhu.hpp"
#include "vzhu/zhu_audit.hpp"

using namespace vzhu;

namespace {

Rational q(long n, long d = 1) { return make_rational(n, d); }

oracle::Parts to_parts(const Monomial& m) {
  oracle::Parts p;
  for (int x : m) p.push_back(-x);
  std::sort(p.rbegin(), p.rend());
  return p;
}

oracle::State to_state(const Vec& v) {
  oracle::State s;
  for (auto& [m, c] : v) oracle::add(s, to_parts(m), c);
  return s;
}

}  // namespace

TEST_CASE("u *~_0 v against Bernoulli coefficients and free fields") {
  Algebra h(AlgebraSpec::heisenberg());
  BaseView view(h);
  // e^x/(e^x-1) = sum_k B+_k x^{k-1}/k!
  auto b = oracle::bernoulli(16);
  b[1] = -b[1];
  auto basis = h.basis_up_to(3);
  for (auto& u : basis)
    for (auto& v : basis) {
      oracle::State expect;
      oracle::Parts up = to_parts(u), vp = to_parts(v);
      for (int m = -1; m <= 14; ++m) {
        Rational c = b[m + 1] / factorial(m + 1);
        for (auto& [p, d] : oracle::mode(up, m, vp, 0)) oracle::add(expect, p, c * d);
      }
      Vec got = tilde_star_n(view, monomial_vec(u), monomial_vec(v), 0);
      CHECK_MESSAGE(to_state(got) == expect, format_monomial(h, u) << " *~_0 " << format_monomial(h, v));
    }
  Vec a = h.generator();
  CHECK(tilde_star_n(view, a, a, 0) == parse_vector("a(-1)^2|0> + 1/12*|0>", h));
}

TEST_CASE("classical products") {
  Algebra h(AlgebraSpec::heisenberg());
  ConformalVector omega = ConformalVector::canonical(h);
  Vec a = h.generator();
  CHECK(classical_star(omega, a, a, 0) == parse_vector("a(-1)^2|0>", h));
  // Res (1+x)/x^2 Y(a,x)a = a_{-2}a + a_{-1}a
  CHECK(classical_circ(omega, a, a, 0) == parse_vector("a(-2)a(-1)|0> + a(-1)^2|0>", h));
  for (auto& m : h.basis_up_to(4)) {
    Vec v = monomial_vec(m);
    for (int n = 0; n <= 2; ++n) CHECK(classical_star(omega, h.vacuum(), v, n) == v);
    CHECK(classical_star(omega, v, h.vacuum(), 0) == v);
  }
}

TEST_CASE("vacuum identities of the kernel products") {
  for (const AlgebraSpec& spec :
       {AlgebraSpec::heisenberg(), AlgebraSpec::virasoro(q(1, 2)), AlgebraSpec::free_fermion()}) {
    Algebra alg(spec);
    BaseView view(alg);
    for (auto& m : alg.basis_up_to(3)) {
      Vec v = monomial_vec(m);
      for (int n = 0; n <= 2; ++n) CHECK(tilde_star_n(view, alg.vacuum(), v, n) == v);
      CHECK(tilde_circ_n(view, v, alg.vacuum(), 0) == alg.derivative(v));
    }
  }
}

TEST_CASE("two forms of *~_n agree") {
  Algebra vir(AlgebraSpec::virasoro(q(-22, 5)));
  BaseView view(vir);
  auto basis = vir.basis_up_to(4);
  for (auto& u : basis)
    for (auto& v : basis)
      for (int n = 0; n <= 1; ++n) {
        Vec x = tilde_star_x(view, monomial_vec(u), monomial_vec(v), n);
        CHECK(x == tilde_star_z(view, monomial_vec(u), monomial_vec(v), n));
      }
}

TEST_CASE("phi involution on low vectors") {
  Algebra h(AlgebraSpec::heisenberg());
  ConformalVector omega = ConformalVector::canonical(h);
  Vec a = h.generator();
  CHECK(phi_involution(omega, a) == scaled(a, -1));
  CHECK(phi_involution(omega, h.vacuum()) == h.vacuum());
  CHECK(phi_involution(omega, omega.omega()) == omega.omega());
  // L(1) a(-2)|0> = 2 a(-1)|0>
  Vec a2 = parse_vector("a(-2)|0>", h);
  CHECK(phi_involution(omega, a2) == parse_vector("a(-2)|0> + 2*a(-1)|0>", h));
  for (auto& m : h.basis_up_to(4)) {
    Vec v = monomial_vec(m);
    CHECK(phi_involution(omega, phi_involution(omega, v)) == v);
  }
}

TEST_CASE("span membership") {
  Algebra h(AlgebraSpec::heisenberg());
  BaseView view(h);
  SpanRequest req;
  req.n = 0;
  req.D = 4;
  req.D_gen = 4;
  SpanBasis span = span_build(view, req);
  CHECK_FALSE(membership(h.vacuum(), span));
  CHECK_FALSE(membership(h.generator(), span));
  Vec a = h.generator();
  CHECK(membership(tilde_circ_n(view, a, a, 0), span));
  CHECK(membership(h.derivative(a), span));
  CHECK_THROWS_AS(membership(monomial_vec({-30}), span), OutOfAmbient);
}

TEST_CASE("quotient class counts") {
  struct Case {
    AlgebraSpec spec;
    int n;
    std::size_t classes;
  };
  // C[x] truncated at weight 4 for n = 0; C[x] with the extra weight-1 class for n = 1
  for (const Case& c : {Case{AlgebraSpec::heisenberg(), 0, 5}, Case{AlgebraSpec::heisenberg(), 1, 6},
                        Case{AlgebraSpec::virasoro(q(1, 2)), 0, 3}}) {
    Algebra alg(c.spec);
    BaseView view(alg);
    QuotientRequest req;
    req.n = c.n;
    req.D = 4;
    req.D_gen_start = 4;
    req.D_gen_max = 8;
    QuotientPresentation qp = quotient_build(view, req);
    CHECK_MESSAGE(qp.classes.size() == c.classes, c.spec.name() << " n=" << c.n);
    CHECK(qp.stabilized);
    CHECK(qp.classes[qp.identity].empty());
    VerificationReport audit = quotient_audit(view, qp, 10 + 4 * c.n);
    for (const Check& ck : audit.checks) CHECK_MESSAGE(ck.failures == 0, ck.name << " " << ck.first_failure.value_or(""));
  }
}

TEST_CASE("quotient json carries provenance") {
  Algebra vir(AlgebraSpec::virasoro(q(1, 2)));
  BaseView view(vir);
  QuotientRequest req;
  QuotientPresentation qp = quotient_build(view, req);
  Json j = quotient_json(vir, qp);
  CHECK(j["provenance"]["D"] == "4");
  CHECK(j["classes"].size() == 3);
  CHECK(j["classes"][0] == "|0>");
}

TEST_CASE("cross validation and involution reports pass") {
  Algebra vir(AlgebraSpec::virasoro(q(1, 2)));
  ConformalVector omega = ConformalVector::canonical(vir);
  for (int n = 0; n <= 1; ++n) CHECK(cross_validate(omega, n, 4).passed());
  Algebra h(AlgebraSpec::heisenberg());
  ConformalVector oh = ConformalVector::canonical(h);
  CHECK(phi_involution_check(oh, 0, 3, 3, 9).passed());
}
