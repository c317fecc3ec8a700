#include "vzhu/conformal.hpp"

#include <algorithm>
#include <set>

#include "vzhu/axioms.hpp"
#include "vzhu/errors.hpp"
#include "vzhu/rng.hpp"
#include "vzhu/series.hpp"

namespace vzhu {

VerificationReport virasoro_audit(const ConformalVector& omega, const VirasoroAuditOptions& opt) {
  const Algebra& alg = omega.algebra();
  VerificationReport rep;
  rep.command = "conformal audit";
  Check& charge = rep.check("central_charge");
  Check& bracket = rep.check("virasoro_bracket");
  Check& lm1 = rep.check("l_minus_one_is_d");
  Check& semisimple = rep.check("l0_semisimple");

  const Vec one = alg.vacuum();
  Vec x = omega.L(2, omega.L(-2, one)) - omega.L(-2, omega.L(2, one));
  add_scaled(x, omega.L(0, one), -4);
  std::optional<Rational> c;
  if (x.empty())
    c = 0;
  else if (x.size() == 1 && x.begin()->first.empty())
    c = 2 * x.begin()->second;
  charge.record(c.has_value(), "[L(2),L(-2)]1 - 4L(0)1 = " + format_vector(alg, x));

  auto basis = alg.basis_up_to(opt.bound);
  int R = opt.mode_range;
  for (const Monomial& b : basis) {
    Vec v = monomial_vec(b);
    std::string vs = format_monomial(alg, b);
    lm1.record(omega.L(-1, v) == alg.derivative(v), vs);
    std::vector<Vec> Lv;
    for (int m = -R; m <= R; ++m) Lv.push_back(omega.L(m, v));
    for (int m = -R; m <= R; ++m)
      for (int n = -R; n <= R; ++n) {
        std::string name = "[L(" + std::to_string(m) + "),L(" + std::to_string(n) + ")] " + vs;
        if (!c) {
          bracket.fail(name);
          continue;
        }
        Vec lhs = omega.L(m, Lv[n + R]) - omega.L(n, Lv[m + R]);
        Vec rhs = scaled(omega.L(m + n, v), m - n);
        if (m + n == 0) add_scaled(rhs, v, make_rational(m * m * m - m, 12) * *c);
        bracket.record(lhs == rhs, name);
      }
  }

  // L(0) on V_{<=bound}: closed, triangular in the (weight, monomial) order,
  // and annihilated by the product of (L(0) - mu) over its diagonal values.
  std::vector<Monomial> order = basis;
  std::map<Monomial, std::size_t> index;
  for (std::size_t i = 0; i < order.size(); ++i) index[order[i]] = i;
  std::vector<Rational> diag(order.size());
  bool triangular = true;
  std::string bad;
  for (std::size_t i = 0; i < order.size() && triangular; ++i) {
    Vec l0 = omega.L(0, monomial_vec(order[i]));
    for (const auto& [m, coef] : l0) {
      auto it = index.find(m);
      if (it == index.end() || it->second > i) {
        triangular = false;
        bad = format_monomial(alg, order[i]);
        break;
      }
    }
    auto self = l0.find(order[i]);
    diag[i] = self == l0.end() ? Rational(0) : self->second;
  }
  std::map<Rational, std::size_t> table;
  if (!triangular) {
    semisimple.fail("L(0) leaves the triangular range at " + bad);
  } else {
    std::set<Rational> mus(diag.begin(), diag.end());
    for (std::size_t i = 0; i < order.size(); ++i) {
      Vec v = monomial_vec(order[i]);
      for (const Rational& mu : mus) {
        Vec next = omega.L(0, v);
        add_scaled(next, v, -mu);
        v = std::move(next);
      }
      semisimple.record(v.empty(), format_monomial(alg, order[i]));
    }
    if (semisimple.failures == 0)
      for (const Rational& d : diag) ++table[d];
  }

  rep.data["omega"] = format_vector(alg, omega.omega());
  rep.data["central_charge"] = c ? Json(to_string(*c)) : Json(nullptr);
  Json weights = Json::object();
  Json negative = Json::array();
  for (const auto& [w, k] : table) {
    weights[to_string(w)] = k;
    if (w < 0) negative.push_back(to_string(w));
  }
  rep.data["weights"] = std::move(weights);
  rep.data["negative_weights"] = negative.empty() ? Json("absent") : negative;
  rep.data["bound"] = rational_json(opt.bound);
  return rep;
}

std::optional<Rational> audited_central_charge(const VerificationReport& rep) {
  auto it = rep.data.find("central_charge");
  if (it == rep.data.end() || it->is_null()) return std::nullopt;
  return parse_rational(it->get<std::string>());
}

Vec shift_conformal(const ConformalVector& omega, const Vec& h) {
  return omega.omega() - omega.algebra().derivative(h);
}

Vec heisenberg_shift(const Algebra& heis, const Rational& lambda) {
  ConformalVector omega = ConformalVector::canonical(heis);
  return shift_conformal(omega, scaled(heis.generator(), lambda));
}

VerificationReport shift_check(const Algebra& heis, const Rational& lambda) {
  ConformalVector base = ConformalVector::canonical(heis);
  ConformalVector shifted(heis, heisenberg_shift(heis, lambda));
  VerificationReport rep;
  rep.command = "conformal shift";
  VerificationReport audit = virasoro_audit(shifted);
  rep.absorb(audit, "audit");

  const Module& V = heis.vacuum_module();
  const Vec a = heis.generator();
  Check& lh = rep.check("l_h_identity");
  for (const Monomial& b : heis.basis_up_to(5)) {
    Vec v = monomial_vec(b);
    for (int n = -3; n <= 3; ++n) {
      Vec rhs = base.L(n, v);
      add_scaled(rhs, V.mode(a, n, v), lambda * (n + 1));
      lh.record(shifted.L(n, v) == rhs, "n=" + std::to_string(n) + " v=" + format_monomial(heis, b));
    }
  }
  Check& lm1 = rep.check("l_h_minus_one");
  for (const Monomial& b : heis.basis_up_to(6)) {
    Vec v = monomial_vec(b);
    lm1.record(shifted.L(-1, v) == base.L(-1, v), format_monomial(heis, b));
  }
  rep.data["lambda"] = rational_json(lambda);
  rep.data["omega_h"] = format_vector(heis, shifted.omega());
  rep.data["central_charge"] = audit.data["central_charge"];
  rep.data["negative_weights"] = audit.data["negative_weights"];
  return rep;
}

Vec exp_mode(const ExpView& view, const Vec& u, int k, const Vec& v) { return view.mode(u, k, v); }

VerificationReport exp_view_audit(const ConformalVector& omega, const Rational& bound, std::size_t samples,
                                  std::uint64_t seed) {
  const Algebra& alg = omega.algebra();
  ExpView ev(omega);
  VerificationReport rep;
  rep.command = "conformal expmode";
  Check& vac = rep.check("vacuum_identity");
  Check& dexp = rep.check("d_exp");
  Check& cut = rep.check("cutoff");
  const Vec one = alg.vacuum();
  auto basis = alg.basis_up_to(bound);
  for (const Monomial& b : basis) {
    Vec v = monomial_vec(b);
    std::string vs = format_monomial(alg, b);
    for (int k = -5; k <= 5; ++k)
      vac.record(ev.mode(one, k, v) == (k == -1 ? v : Vec{}), "k=" + std::to_string(k) + " v=" + vs);
    dexp.record(ev.derivative(v) == omega.L(-1, v) + omega.L(0, v), vs);
  }
  SplitMix64 rng(seed);
  for (std::size_t i = 0; i < samples; ++i) {
    const Monomial& um = rng.pick(basis);
    const Monomial& vm = rng.pick(basis);
    Vec u = monomial_vec(um), v = monomial_vec(vm);
    int b = ev.cutoff_bound(u, v);
    bool ok = true;
    for (int k = b; k < b + 3; ++k) ok = ok && ev.mode(u, k, v).empty();
    cut.record(ok, "u=" + format_monomial(alg, um) + " v=" + format_monomial(alg, vm));
  }
  AxiomSampling s;
  s.max_weight = bound;
  s.samples = samples;
  s.seed = seed;
  rep.absorb(axiom_audit(ev, s), "axioms");
  return rep;
}

Rational zero_mode_scalar(const Module& module, const Vec& a, const Rational& bound) {
  const Algebra& alg = module.algebra();
  const Module& V = alg.vacuum_module();
  for (const Monomial& b : alg.basis_up_to(bound)) {
    Vec r = V.mode(a, 0, monomial_vec(b));
    if (!r.empty())
      throw PreconditionFailed("a_0 does not vanish on V: a_0 " + format_monomial(alg, b) + " = " + format_vector(alg, r));
  }
  Vec low = vacuum_vec();
  Vec r = module.mode(a, 0, low);
  if (r.empty()) return 0;
  if (r.size() == 1 && r.begin()->first.empty()) return r.begin()->second;
  throw NotScalar("a_0 on the lowest-weight vector gives " + format_vector(alg, r));
}

namespace {

struct TwistSides {
  LaurentSeries lhs;
  LaurentSeries rhs;
};

TwistSides twist_sides(const Rational& alpha, const LaurentSeries& S, int order) {
  LaurentSeries E = LaurentSeries::exp(-alpha, order + 4);
  LaurentSeries ES = E * S;
  return {E * S.derivative(), ES.derivative() + alpha * ES};
}

bool equal_through(const LaurentSeries& a, const LaurentSeries& b, int lo, int hi) {
  try {
    for (int k = lo; k <= hi; ++k)
      if (a.coeff(k) != b.coeff(k)) return false;
    return true;
  } catch (const UnknownCoefficient&) {
    return false;
  }
}

}  // namespace

VerificationReport twist_lemma_check(const Rational& alpha, int order, std::uint64_t seed, std::size_t samples) {
  VerificationReport rep;
  rep.command = "conformal twist";
  Check& id = rep.check("twist_identity");
  Check& lin = rep.check("linearity");
  SplitMix64 rng(seed);
  const int val = -3;
  auto random_series = [&] {
    std::vector<Rational> cs;
    for (int k = val; k <= order; ++k) cs.push_back(make_rational(rng.range(-9, 9), rng.range(1, 5)));
    return LaurentSeries(val, std::move(cs), order);
  };
  int lo = val - 1, hi = order - 1;
  std::vector<LaurentSeries> pool;
  for (std::size_t i = 0; i < samples; ++i) {
    LaurentSeries S = random_series();
    TwistSides t = twist_sides(alpha, S, order);
    id.record(equal_through(t.lhs, t.rhs, lo, hi), "sample " + std::to_string(i));
    pool.push_back(std::move(S));
  }
  for (std::size_t i = 0; i + 1 < pool.size(); ++i) {
    TwistSides a = twist_sides(alpha, pool[i], order);
    TwistSides b = twist_sides(alpha, pool[i + 1], order);
    TwistSides s = twist_sides(alpha, pool[i] + pool[i + 1], order);
    std::string name = "samples " + std::to_string(i) + "+" + std::to_string(i + 1);
    lin.record(equal_through(s.lhs, a.lhs + b.lhs, lo, hi) && equal_through(s.rhs, a.rhs + b.rhs, lo, hi), name);
  }
  rep.data["alpha"] = rational_json(alpha);
  rep.data["order"] = order;
  rep.data["seed"] = seed;
  return rep;
}

}  // namespace vzhu
