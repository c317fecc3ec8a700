#include <doctest.h>

#include "heisenberg_oracle.hpp"
#include "vzhu/algebra.hpp"
#include "vzhu/errors.hpp"
#include "vzhu/parse.hpp"

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

TEST_CASE("heisenberg mode products match the free-field oracle") {
  Algebra h(AlgebraSpec::heisenberg());
  for (const Rational& lambda : {q(0), q(1), q(-1, 2)}) {
    const Module& mod = h.fock(lambda);
    auto us = h.basis_up_to(4);
    auto ws = h.basis_up_to(3);
    for (auto& u : us)
      for (auto& w : ws)
        for (int m = -4; m <= 5; ++m) {
          Vec got = mod.mode(u, m, w);
          auto expect = oracle::mode(to_parts(u), m, to_parts(w), lambda);
          CHECK_MESSAGE(to_state(got) == expect,
                        format_monomial(h, u) << " mode " << m << " on " << format_monomial(h, w));
        }
  }
}

TEST_CASE("documented mode products") {
  Algebra h(AlgebraSpec::heisenberg());
  const Module& v = h.vacuum_module();
  Vec a = h.generator();
  CHECK(v.mode(a, 1, a) == h.vacuum());
  CHECK(v.mode(a, 0, a).empty());
  Vec omega = scaled(parse_vector("a(-1)^2|0>", h), q(1, 2));
  CHECK(v.mode(omega, 3, omega) == scaled(h.vacuum(), q(1, 2)));
  for (auto& u : h.basis_up_to(3)) CHECK(v.mode(monomial_vec(u), -1, h.vacuum()) == monomial_vec(u));
  CHECK(v.cutoff(a, a) == 2);
  CHECK(v.cutoff(h.vacuum(), a) == 0);

  for (const Rational& c : {q(1, 2), q(-22, 5), q(3)}) {
    Algebra vir(AlgebraSpec::virasoro(c));
    Vec w = vir.generator();
    CHECK(format_vector(vir, w) == "L(-2)|0>");
    CHECK(vir.vacuum_module().mode(w, 3, w) == scaled(vir.vacuum(), c / 2));
    CHECK(vir.vacuum_module().cutoff(w, w) == 4);
  }
}

TEST_CASE("vacuum acts as identity") {
  for (auto spec : {AlgebraSpec::heisenberg(), AlgebraSpec::virasoro(q(1, 2)), AlgebraSpec::free_fermion()}) {
    Algebra alg(spec);
    for (auto& v : alg.basis_up_to(3))
      for (int m = -5; m <= 5; ++m) {
        Vec r = alg.vacuum_module().mode(alg.vacuum(), m, monomial_vec(v));
        CHECK(r == (m == -1 ? monomial_vec(v) : Vec{}));
      }
  }
}

TEST_CASE("derivative and weights") {
  Algebra h(AlgebraSpec::heisenberg());
  CHECK(h.derivative(h.vacuum()).empty());
  CHECK(h.derivative(h.generator()) == parse_vector("a(-2)|0>", h));
  for (auto& v : h.basis_up_to(4)) {
    if (v.empty()) continue;
    Vec dd = h.derivative(h.derivative(monomial_vec(v)));
    CHECK(h.weight(dd) == h.degree(v) + 2);
  }
  CHECK(h.weight(h.generator()) == Rational(1));
  CHECK(h.weight(h.vacuum()) == Rational(0));
  CHECK_FALSE(h.weight(parse_vector("a(-1)|0> + a(-2)|0>", h)).has_value());

  Algebra f(AlgebraSpec::free_fermion());
  CHECK(f.weight(parse_vector("psi(-2)psi(-1)|0>", f)) == Rational(2));
}

TEST_CASE("basis sizes") {
  Algebra h(AlgebraSpec::heisenberg());
  std::vector<std::size_t> partitions = {1, 1, 2, 3, 5, 7, 11, 15, 22};
  for (int w = 0; w <= 8; ++w) CHECK(h.basis_of_weight(w).size() == partitions[w]);
  Algebra vir(AlgebraSpec::virasoro(q(1, 2)));
  // partitions into parts >= 2
  std::vector<std::size_t> vir_dims = {1, 0, 1, 1, 2, 2, 4, 4, 7};
  for (int w = 0; w <= 8; ++w) CHECK(vir.basis_of_weight(w).size() == vir_dims[w]);
  Algebra f(AlgebraSpec::free_fermion());
  // partitions into distinct half-odd parts: 1, 1/2, 3/2, 2, 5/2, 3, 7/2, 4, 9/2
  std::vector<std::size_t> f_dims = {1, 1, 0, 1, 1, 1, 1, 1, 2, 2};
  for (int k = 0; k <= 9; ++k) CHECK(f.basis_of_weight(q(k, 2)).size() == f_dims[k]);
}

TEST_CASE("super signs") {
  Algebra f(AlgebraSpec::free_fermion());
  Vec psi = f.generator();
  Vec even = parse_vector("psi(-2)psi(-1)|0>", f);
  CHECK(f.smap_sign(psi, psi) == -1);
  CHECK(f.smap_sign(even, psi) == 1);
  CHECK(f.smap_sign(even, even) == 1);
  CHECK_THROWS_AS(f.smap_sign(psi + even, psi), NonHomogeneousParity);
  Algebra h(AlgebraSpec::heisenberg());
  CHECK(h.smap_sign(h.generator(), h.generator()) == 1);
  // {psi_p, psi_q} = delta_{p+q,-1}
  const Module& v = f.vacuum_module();
  CHECK(v.mode(psi, 0, psi) == f.vacuum());
  Vec ab = parse_vector("psi(-1)psi(-2)|0>", f);
  CHECK(ab == scaled(parse_vector("psi(-2)psi(-1)|0>", f), -1));
  CHECK(parse_vector("psi(-1)psi(-1)|0>", f).empty());
}

TEST_CASE("parser and formatter") {
  Algebra h(AlgebraSpec::heisenberg());
  Vec x = parse_vector("a(-1)^2|0>", h);
  CHECK(x == monomial_vec({-1, -1}));
  CHECK(parse_vector("a(-1)a(-2)|0>", h) == monomial_vec({-2, -1}));
  CHECK(format_vector(h, parse_vector(" 3/2 * a(-2)|0>-a(-3)|0> ", h)) == "3/2*a(-2)|0> - a(-3)|0>");
  CHECK(parse_vector("0", h).empty());
  CHECK(format_vector(h, {}) == "0");

  Algebra vir(AlgebraSpec::virasoro(q(1, 2)));
  Vec y = parse_vector("3/2*L(-2)|0> - L(-3)|0>", vir);
  CHECK(y.size() == 2);
  CHECK(y.at({-1}) == q(3, 2));
  CHECK(y.at({-2}) == -1);
  // L(-2)L(-3)|0> = L(-3)L(-2)|0> + L(-5)|0>
  Vec z = parse_vector("L(-2)L(-3)|0>", vir);
  CHECK(z == parse_vector("L(-3)L(-2)|0> + L(-5)|0>", vir));

  for (auto& m : vir.basis_up_to(7)) {
    Vec v = scaled(monomial_vec(m), q(-7, 3));
    CHECK(parse_vector(format_vector(vir, v), vir) == v);
  }

  try {
    parse_vector("a(-1)|0> + b", h);
    FAIL("expected parse error");
  } catch (const ParseError& e) {
    CHECK(e.position == 11);
    CHECK(e.expected == std::vector<std::string>{"'a'", "'|0>'"});
  }
  CHECK_THROWS_AS(parse_vector("L(-2)|0>", h), ParseError);
  CHECK_THROWS_AS(parse_vector("1/0*a(-1)|0>", h), ParseError);
  CHECK_THROWS_AS(parse_vector("a(-1)", h), ParseError);
}

TEST_CASE("cold caches give identical results") {
  Algebra h(AlgebraSpec::heisenberg());
  Vec u = parse_vector("a(-2)a(-1)^2|0>", h);
  Vec w = parse_vector("a(-3)a(-1)|0>", h);
  std::vector<Vec> warm;
  for (int m = -3; m <= 4; ++m) warm.push_back(h.vacuum_module().mode(u, m, w));
  h.clear_caches();
  for (int m = -3; m <= 4; ++m) CHECK(h.vacuum_module().mode(u, m, w) == warm[m + 3]);
}
