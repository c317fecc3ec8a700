#include "vzhu/zhu_audit.hpp"

#include <algorithm>

#include "vzhu/errors.hpp"

namespace vzhu {

const SpanBasis& SpanLadder::at(const Rational& D_gen) {
  auto it = spans_.find(D_gen);
  if (it == spans_.end()) it = spans_.emplace(D_gen, build_(D_gen)).first;
  return it->second;
}

Rational SpanLadder::certify(Check& check, const std::vector<std::pair<std::string, Vec>>& items) {
  std::vector<std::size_t> pending;
  for (std::size_t i = 0; i < items.size(); ++i) {
    if (items[i].second.empty())
      check.pass();
    else
      pending.push_back(i);
  }
  Rational used = start_;
  for (Rational dg = start_; dg <= limit_ && !pending.empty(); dg += 1) {
    const SpanBasis& span = at(dg);
    std::vector<std::size_t> next;
    for (std::size_t i : pending) {
      const Vec& x = items[i].second;
      if (span.algebra->max_degree(x) <= span.ambient_max_weight && span.echelon->contains(x)) {
        check.pass();
        used = std::max(used, dg);
      } else {
        next.push_back(i);
      }
    }
    pending = std::move(next);
  }
  for (std::size_t i : pending) check.fail(items[i].first);
  return used;
}

namespace {

std::string pair_name(const Algebra& alg, const Monomial& u, const Monomial& v) {
  return format_monomial(alg, u) + " , " + format_monomial(alg, v);
}

std::string triple_name(const Algebra& alg, const Monomial& u, const Monomial& v, const Monomial& w) {
  return format_monomial(alg, u) + " , " + format_monomial(alg, v) + " , " + format_monomial(alg, w);
}

std::vector<Rational> unit(std::size_t k, std::size_t i) {
  std::vector<Rational> e(k);
  e[i] = 1;
  return e;
}

}  // namespace

VerificationReport quotient_audit(const View& view, const QuotientPresentation& q, const Rational& dgen_limit) {
  const Algebra& alg = view.algebra();
  int n = q.n;
  VerificationReport rep;
  rep.command = "zhu ideal-audit";
  rep.provenance = Provenance{q.D, q.D_gen, q.stabilized};
  SpanLadder ladder(
      [&](const Rational& dg) { return span_build(view, SpanRequest{n, q.D, dg, true, std::nullopt}); },
      q.D_gen, std::max(q.D_gen, dgen_limit));

  std::size_t k = q.classes.size();
  std::vector<Vec> cls;
  for (const Monomial& m : q.classes) cls.push_back(monomial_vec(m));

  Check& identity = rep.check("identity");
  if (q.identity >= k) {
    identity.fail("vacuum class missing");
  } else {
    for (std::size_t j = 0; j < k; ++j) {
      std::string name = format_monomial(alg, q.classes[j]);
      identity.record(q.defined[q.identity][j] && q.table[q.identity][j] == unit(k, j), "1 * " + name);
      identity.record(q.defined[j][q.identity] && q.table[j][q.identity] == unit(k, j), name + " * 1");
    }
  }

  // Structure constants where every product involved stays inside the classes.
  Check& assoc_table = rep.check("associativity_table");
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j)
      for (std::size_t l = 0; l < k; ++l) {
        if (!q.defined[i][j] || !q.defined[j][l]) continue;
        std::vector<Rational> left(k), right(k);
        bool ok = true;
        for (std::size_t s = 0; s < k && ok; ++s) {
          if (q.table[i][j][s] != 0) {
            if (!q.defined[s][l]) ok = false;
            else
              for (std::size_t t = 0; t < k; ++t) left[t] += q.table[i][j][s] * q.table[s][l][t];
          }
          if (ok && q.table[j][l][s] != 0) {
            if (!q.defined[i][s]) ok = false;
            else
              for (std::size_t t = 0; t < k; ++t) right[t] += q.table[j][l][s] * q.table[i][s][t];
          }
        }
        if (!ok) continue;
        assoc_table.record(left == right, triple_name(alg, q.classes[i], q.classes[j], q.classes[l]));
      }

  // (u*v)*w - u*(v*w) in the span, for every class triple.
  std::vector<std::pair<std::string, Vec>> items;
  std::vector<std::vector<Vec>> prod(k, std::vector<Vec>(k));
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) prod[i][j] = tilde_star_x(view, cls[i], cls[j], n);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j)
      for (std::size_t l = 0; l < k; ++l)
        items.emplace_back(triple_name(alg, q.classes[i], q.classes[j], q.classes[l]),
                           tilde_star_x(view, prod[i][j], cls[l], n) - tilde_star_x(view, cls[i], prod[j][l], n));
  Rational need = ladder.certify(rep.check("associativity"), items);

  auto basis = alg.basis_up_to(q.D);
  std::vector<Vec> bvec;
  for (const Monomial& m : basis) bvec.push_back(monomial_vec(m));

  items.clear();
  for (std::size_t a = 0; a < basis.size(); ++a)
    for (std::size_t b = 0; b < basis.size(); ++b) {
      Vec c = tilde_circ_n(view, bvec[a], bvec[b], n);
      if (c.empty()) {
        for (std::size_t w = 0; w < basis.size(); ++w) {
          items.emplace_back("", Vec{});
          items.emplace_back("", Vec{});
        }
        continue;
      }
      for (std::size_t w = 0; w < basis.size(); ++w) {
        std::string name = triple_name(alg, basis[a], basis[b], basis[w]);
        items.emplace_back("(u o v) * w: " + name, tilde_star_x(view, c, bvec[w], n));
        items.emplace_back("w * (u o v): " + name, tilde_star_x(view, bvec[w], c, n));
      }
    }
  need = std::max(need, ladder.certify(rep.check("ideal"), items));

  items.clear();
  for (std::size_t a = 0; a < basis.size(); ++a) {
    Vec du = view.derivative(bvec[a]);
    for (std::size_t b = 0; b < basis.size(); ++b) {
      std::string name = pair_name(alg, basis[a], basis[b]);
      items.emplace_back("(Du) * v: " + name, tilde_star_x(view, du, bvec[b], n));
      items.emplace_back("u * (Dv): " + name, tilde_star_x(view, bvec[b], du, n));
    }
  }
  need = std::max(need, ladder.certify(rep.check("dv_ideal"), items));

  rep.data["view"] = q.view;
  rep.data["n"] = n;
  rep.data["classes"] = k;
  rep.data["escapes"] = q.escapes.size();
  rep.data["certifying_D_gen"] = rational_json(need);
  rep.data["D_gen_limit"] = rational_json(ladder.limit());
  return rep;
}

VerificationReport huang_two_form_check(const View& view, int n, const Rational& D) {
  const Algebra& alg = view.algebra();
  VerificationReport rep;
  rep.command = "zhu compare";
  Check& check = rep.check("two_form_n" + std::to_string(n));
  auto basis = alg.basis_up_to(D);
  LaurentSeries kz = f_log_kernel(n);
  for (const Monomial& u : basis)
    for (const Monomial& v : basis) {
      Vec uv = monomial_vec(u), vv = monomial_vec(v);
      check.record(tilde_star_x(view, uv, vv, n) == star_log_form(view, kz, uv, vv), pair_name(alg, u, v));
    }
  return rep;
}

VerificationReport skew_congruence_check(const View& view, const Rational& D) {
  const Algebra& alg = view.algebra();
  VerificationReport rep;
  rep.command = "zhu compare";
  Check& check = rep.check("skew_congruence");
  auto basis = alg.basis_up_to(D);
  // DV alone: no product generator passes a negative cap.
  Rational top = 2 * D;
  SpanBasis dv = span_build(view, SpanRequest{0, top, top, true, Rational(-1)});
  for (const Monomial& u : basis)
    for (const Monomial& v : basis) {
      Vec uv = monomial_vec(u), vv = monomial_vec(v);
      Vec x = tilde_star_x(view, uv, vv, 0);
      add_scaled(x, tilde_star_x(view, vv, uv, 0), -alg.smap_sign(uv, vv));
      add_scaled(x, view.mode(uv, 0, vv), -1);
      check.record(membership(x, dv), pair_name(alg, u, v));
    }
  return rep;
}

VerificationReport cross_validate(const ConformalVector& omega, int n, const Rational& D) {
  const Algebra& alg = omega.algebra();
  ExpView ev(omega);
  BaseView base(alg);
  VerificationReport rep;
  rep.command = "zhu compare";
  Check& star = rep.check("star_n" + std::to_string(n));
  Check& circ = rep.check("circ_n" + std::to_string(n));
  auto basis = alg.basis_up_to(D);
  for (const Monomial& u : basis)
    for (const Monomial& v : basis) {
      Vec uv = monomial_vec(u), vv = monomial_vec(v);
      ClassicalProducts cp = classical_products(omega, uv, vv, n);
      std::string name = pair_name(alg, u, v);
      star.record(cp.star == star_kernel(ev, KernelId::f(n), uv, vv), name);
      circ.record(cp.circ == star_kernel(ev, KernelId::g(n), uv, vv), name);
    }
  rep.absorb(huang_two_form_check(base, n, D), "base");
  if (n == 0) rep.absorb(skew_congruence_check(base, D), "base");
  rep.data["n"] = n;
  rep.data["D"] = rational_json(D);
  rep.data["pairs"] = basis.size() * basis.size();
  return rep;
}

VerificationReport phi_involution_check(const ConformalVector& omega, int n, const Rational& D,
                                        const Rational& dgen_start, const Rational& dgen_limit) {
  const Algebra& alg = omega.algebra();
  VerificationReport rep;
  rep.command = "zhu involution";
  SpanLadder ladder(
      [&](const Rational& dg) { return classical_span_build(omega, SpanRequest{n, D, dg, true, std::nullopt}); },
      std::max(D, dgen_start), std::max({D, dgen_start, dgen_limit}));
  auto basis = alg.basis_up_to(D);
  std::vector<Vec> bvec, phis;
  for (const Monomial& m : basis) {
    bvec.push_back(monomial_vec(m));
    phis.push_back(phi_involution(omega, bvec.back()));
  }

  Check& vac = rep.check("phi_vacuum");
  vac.record(phi_involution(omega, alg.vacuum()) == alg.vacuum(), "phi(1)");
  Check& invol = rep.check("phi_squared");
  for (std::size_t i = 0; i < basis.size(); ++i)
    invol.record(phi_involution(omega, phis[i]) == bvec[i], format_monomial(alg, basis[i]));

  std::vector<std::pair<std::string, Vec>> items;
  for (std::size_t a = 0; a < basis.size(); ++a)
    for (std::size_t b = 0; b < basis.size(); ++b) {
      Vec x = phi_involution(omega, classical_star(omega, bvec[a], bvec[b], n));
      add_scaled(x, classical_star(omega, phis[b], phis[a], n), -1);
      items.emplace_back(pair_name(alg, basis[a], basis[b]), std::move(x));
    }
  Rational need = ladder.certify(rep.check("anti_automorphism"), items);

  items.clear();
  for (std::size_t a = 0; a < basis.size(); ++a)
    items.emplace_back(format_monomial(alg, basis[a]), classical_star(omega, omega.omega(), bvec[a], n) -
                                                           classical_star(omega, bvec[a], omega.omega(), n));
  need = std::max(need, ladder.certify(rep.check("omega_central"), items));

  rep.provenance = Provenance{D, need, false};
  rep.data["n"] = n;
  rep.data["certifying_D_gen"] = rational_json(need);
  return rep;
}

Json quotient_json(const Algebra& alg, const QuotientPresentation& q) {
  Json j;
  j["view"] = q.view;
  j["n"] = q.n;
  Json prov;
  prov["D"] = rational_json(q.D);
  prov["D_gen"] = rational_json(q.D_gen);
  prov["stabilized"] = q.stabilized;
  j["provenance"] = std::move(prov);
  Json hist = Json::array();
  for (std::size_t h : q.dimension_history) hist.push_back(h);
  j["dimension_history"] = std::move(hist);
  Json cls = Json::array();
  for (const Monomial& m : q.classes) cls.push_back(format_monomial(alg, m));
  j["classes"] = std::move(cls);
  j["identity"] = q.identity;
  Json table = Json::array();
  for (std::size_t a = 0; a < q.classes.size(); ++a)
    for (std::size_t b = 0; b < q.classes.size(); ++b) {
      if (!q.defined[a][b]) continue;
      for (std::size_t k = 0; k < q.classes.size(); ++k)
        if (q.table[a][b][k] != 0) table.push_back(Json::array({a, b, k, to_string(q.table[a][b][k])}));
    }
  j["structure_constants"] = std::move(table);
  j["escapes"] = q.escapes;
  return j;
}

}  // namespace vzhu
