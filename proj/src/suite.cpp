#include "vzhu/suite.hpp"

#include <chrono>
#include <cstdio>

#include "vzhu/axioms.hpp"
#include "vzhu/errors.hpp"
#include "vzhu/conformal.hpp"
#include "vzhu/kernels.hpp"
#include "vzhu/phi.hpp"
#include "vzhu/zhu_audit.hpp"

namespace vzhu {

namespace {

const char* kTitles[] = {"",
                         "kernel expansions",
                         "derivative identity",
                         "engine axioms",
                         "huang two-form identity",
                         "cross-pipeline products",
                         "quotient audits",
                         "involution and centrality",
                         "zero-mode action on Omega",
                         "phi commutator",
                         "L_phi axioms",
                         "U relations and skew congruence",
                         "conformal shifts",
                         "determinism and mutation"};

struct Params {
  bool quick;
  Rational half(const Rational& x) const { return quick ? x / 2 : x; }
  std::size_t half(std::size_t x) const { return quick ? x / 2 : x; }
};

std::vector<Rational> bernoulli_plus(int count) {
  std::vector<Rational> b(count);
  b[0] = 1;
  for (int m = 1; m < count; ++m) {
    Rational s = 0;
    for (int j = 0; j < m; ++j) s += binomial(Rational(m + 1), j) * b[j];
    b[m] = -s / (m + 1);
  }
  if (count > 1) b[1] = -b[1];
  return b;
}

VerificationReport c1_kernels() {
  VerificationReport rep;
  Check& f0 = rep.check("f0_bernoulli");
  const int order = 20;
  LaurentSeries f = expand_kernel(KernelId::f(0), order);
  auto b = bernoulli_plus(order + 2);
  for (int k = 0; k <= order + 1; ++k)
    f0.record(f.coeff(k - 1) == b[k] / factorial(k), "x^" + std::to_string(k - 1));
  Check& val = rep.check("g_valuation");
  for (int n = 0; n <= 4; ++n)
    val.record(expand_kernel(KernelId::g(n), 4).valuation() == -(2 * n + 2), "g_" + std::to_string(n));
  return rep;
}

VerificationReport c2_derivative() {
  VerificationReport rep;
  Check& id = rep.check("derivative_identity");
  Check& mag = rep.check("kappa_magnitude");
  Json kappas = Json::object();
  const int order = 24;
  for (int n = 0; n <= 4; ++n) {
    LaurentSeries df = expand_kernel(KernelId::f(n), order + 1).derivative();
    LaurentSeries g = expand_kernel(KernelId::g(n), order);
    int lead = -(2 * n + 2);
    Rational k = df.coeff(lead) / g.coeff(lead);
    bool ok = true;
    for (int e = lead; e <= order; ++e) ok = ok && df.coeff(e) == k * g.coeff(e);
    std::string name = "n=" + std::to_string(n);
    id.record(ok && k == kappa(n), name);
    Rational expected = (2 * n + 1) * binomial(Rational(2 * n), n);
    mag.record(abs(k) == expected, name);
    kappas[std::to_string(n)] = to_string(k);
  }
  rep.data["kappa"] = std::move(kappas);
  return rep;
}

VerificationReport c3_axioms(const Params& p, const SuiteOptions& opt) {
  VerificationReport rep;
  struct Case {
    AlgebraSpec spec;
    Rational weight;
  };
  Case cases[] = {{AlgebraSpec::heisenberg(), 6},
                  {AlgebraSpec::virasoro(make_rational(1, 2)), 8},
                  {AlgebraSpec::free_fermion(), make_rational(9, 2)}};
  for (const Case& c : cases) {
    Algebra alg(c.spec, opt.engine);
    AxiomSampling s;
    s.max_weight = p.half(c.weight);
    s.samples = p.half(std::size_t{500});
    s.seed = opt.seed;
    rep.absorb(axiom_audit(BaseView(alg), s), c.spec.name());
  }
  return rep;
}

VerificationReport c4_two_form(const Params& p, const SuiteOptions& opt) {
  VerificationReport rep;
  for (const AlgebraSpec& spec :
       {AlgebraSpec::heisenberg(), AlgebraSpec::virasoro(make_rational(1, 2)), AlgebraSpec::free_fermion()}) {
    Algebra alg(spec, opt.engine);
    rep.absorb(huang_two_form_check(BaseView(alg), 0, p.half(Rational(6))), spec.name());
  }
  return rep;
}

VerificationReport c5_cross(const Params& p, const SuiteOptions& opt) {
  VerificationReport rep;
  for (const AlgebraSpec& spec : {AlgebraSpec::heisenberg(), AlgebraSpec::virasoro(make_rational(1, 2))}) {
    Algebra alg(spec, opt.engine);
    ConformalVector omega = ConformalVector::canonical(alg);
    for (int n = 0; n <= 2; ++n)
      rep.absorb(cross_validate(omega, n, p.half(Rational(6))), spec.name() + ".n" + std::to_string(n));
  }
  return rep;
}

VerificationReport c6_quotients(const Params& p, const SuiteOptions& opt) {
  VerificationReport rep;
  Rational D = p.half(Rational(4));
  for (const AlgebraSpec& spec : {AlgebraSpec::heisenberg(), AlgebraSpec::virasoro(make_rational(1, 2))}) {
    Algebra alg(spec, opt.engine);
    BaseView view(alg);
    for (int n = 0; n <= 1; ++n) {
      QuotientRequest req;
      req.n = n;
      req.D = D;
      req.D_gen_start = D;
      req.D_gen_max = D + 4;
      QuotientPresentation q = quotient_build(view, req);
      std::string key = spec.name() + ".n" + std::to_string(n);
      VerificationReport audit = quotient_audit(view, q, D + 4 * n + 6);
      audit.data["stabilized"] = q.stabilized;
      Json hist = Json::array();
      for (std::size_t h : q.dimension_history) hist.push_back(h);
      audit.data["dimension_history"] = std::move(hist);
      rep.absorb(audit, key);
    }
  }
  return rep;
}

VerificationReport c7_involution(const Params& p, const SuiteOptions& opt) {
  VerificationReport rep;
  Algebra alg(AlgebraSpec::heisenberg(), opt.engine);
  ConformalVector omega = ConformalVector::canonical(alg);
  Rational D = p.half(Rational(4));
  for (int n = 0; n <= 1; ++n)
    rep.absorb(phi_involution_check(omega, n, D, D, D + 4 * n + 6), "heisenberg.n" + std::to_string(n));
  return rep;
}

VerificationReport c8_action(const Params& p, const SuiteOptions& opt) {
  VerificationReport rep;
  Algebra alg(AlgebraSpec::heisenberg(), opt.engine);
  ConformalVector omega = ConformalVector::canonical(alg);
  for (const Rational& lambda : {Rational(0), Rational(1), make_rational(-1, 2)}) {
    PhiModule W(omega, lambda);
    rep.absorb(atilde_action_check(W, 0, p.half(Rational(4))), "lambda=" + to_string(lambda));
  }
  return rep;
}

VerificationReport c9_commutator(const Params& p, const SuiteOptions& opt) {
  Algebra alg(AlgebraSpec::heisenberg(), opt.engine);
  ConformalVector omega = ConformalVector::canonical(alg);
  PhiModule W(omega, 1);
  PhiSampling s;
  s.samples = p.half(std::size_t{500});
  s.seed = opt.seed;
  s.max_depth = 6;
  VerificationReport rep;
  rep.absorb(phi_commutator_check(W, s), "fock1");
  return rep;
}

VerificationReport c10_lphi(const Params& p, const SuiteOptions& opt) {
  VerificationReport rep;
  struct Case {
    AlgebraSpec spec;
    Rational weight;
  };
  Case cases[] = {{AlgebraSpec::heisenberg(), 4}, {AlgebraSpec::free_fermion(), make_rational(7, 2)}};
  for (const Case& c : cases) {
    Algebra alg(c.spec, opt.engine);
    LPhi L(alg);
    LPhiSampling s;
    s.samples = p.half(std::size_t{300});
    s.reduce_samples = p.half(std::size_t{200});
    s.seed = opt.seed;
    s.max_weight = p.half(c.weight);
    rep.absorb(lphi_axiom_check(L, s), c.spec.name());
  }
  return rep;
}

VerificationReport c11_relations(const Params& p, const SuiteOptions& opt) {
  Algebra alg(AlgebraSpec::heisenberg(), opt.engine);
  ConformalVector omega = ConformalVector::canonical(alg);
  PhiModule W(omega, 1);
  PhiSampling s;
  s.samples = p.half(std::size_t{500});
  s.seed = opt.seed;
  s.operator_depth = p.quick ? 4 : 8;
  VerificationReport rep;
  rep.absorb(relation_check_U(W, s), "fock1");
  return rep;
}

VerificationReport c12_conformal(const Params& p, const SuiteOptions& opt) {
  VerificationReport rep;
  Algebra heis(AlgebraSpec::heisenberg(), opt.engine);
  VirasoroAuditOptions vo;
  vo.bound = p.half(Rational(6));
  rep.absorb(virasoro_audit(ConformalVector::canonical(heis), vo), "omega");
  Json charges = Json::object();
  for (const Rational& lambda : {Rational(1), Rational(-1), make_rational(1, 3)}) {
    VerificationReport r = shift_check(heis, lambda);
    charges[to_string(lambda)] = r.data["central_charge"];
    rep.absorb(r, "shift.lambda=" + to_string(lambda));
  }
  rep.data["shift_central_charges"] = std::move(charges);

  Check& alpha = rep.check("zero_mode_scalar");
  for (const Rational& lambda : {Rational(1), Rational(-1), make_rational(1, 3)}) {
    Vec a = heis.derivative(scaled(heis.generator(), lambda));
    for (const Rational& mu : {Rational(0), Rational(1), make_rational(-1, 2)}) {
      bool ok = false;
      try {
        ok = zero_mode_scalar(heis.fock(mu), a) == 0;
      } catch (const Error&) {
        ok = false;
      }
      alpha.record(ok, "h=" + to_string(lambda) + "a on Fock(" + to_string(mu) + ")");
    }
  }
  for (const Rational& a : {Rational(0), make_rational(2, 3), Rational(-3)})
    rep.absorb(twist_lemma_check(a, 12, opt.seed), "twist.alpha=" + to_string(a));
  return rep;
}

VerificationReport c13_determinism(const SuiteOptions& opt) {
  VerificationReport rep;
  SuiteOptions base = opt;
  base.only.clear();
  for (int id = 1; id <= 12; ++id) base.only.insert(id);
  base.timing = false;
  base.engine = EngineOptions{};
  clear_kernel_cache();
  std::string first = emit_report(suite_report(run_criteria(base), base));
  clear_kernel_cache();
  std::string second = emit_report(suite_report(run_criteria(base), base));
  rep.check("rerun_identical").record(first == second, "suite reports differ");
  rep.data["report_bytes"] = first.size();

  SuiteOptions mutated = base;
  mutated.only = {3, 10};
  mutated.engine.drop_super_sign = true;
  Check& mut = rep.check("mutation_detected");
  Json caught = Json::array();
  for (const CriterionResult& r : run_criteria(mutated))
    for (const Check& c : r.report.checks)
      if (c.failures > 0 && c.name.rfind("free_fermion.", 0) == 0) caught.push_back("c" + std::to_string(r.id) + "." + c.name);
  mut.record(!caught.empty(), "no fermion check failed under drop_super_sign");
  rep.data["mutation_failures"] = std::move(caught);
  return rep;
}

}  // namespace

std::string criterion_title(int id) { return id >= 1 && id <= 13 ? kTitles[id] : ""; }

std::vector<CriterionResult> run_criteria(const SuiteOptions& opt) {
  Params p{opt.level == SuiteLevel::quick};
  std::vector<CriterionResult> out;
  for (int id = 1; id <= 13; ++id) {
    if (!opt.only.empty() && !opt.only.count(id)) continue;
    auto t0 = std::chrono::steady_clock::now();
    VerificationReport r;
    switch (id) {
      case 1: r = c1_kernels(); break;
      case 2: r = c2_derivative(); break;
      case 3: r = c3_axioms(p, opt); break;
      case 4: r = c4_two_form(p, opt); break;
      case 5: r = c5_cross(p, opt); break;
      case 6: r = c6_quotients(p, opt); break;
      case 7: r = c7_involution(p, opt); break;
      case 8: r = c8_action(p, opt); break;
      case 9: r = c9_commutator(p, opt); break;
      case 10: r = c10_lphi(p, opt); break;
      case 11: r = c11_relations(p, opt); break;
      case 12: r = c12_conformal(p, opt); break;
      case 13: r = c13_determinism(opt); break;
    }
    auto t1 = std::chrono::steady_clock::now();
    out.push_back(CriterionResult{id, criterion_title(id), std::move(r), std::chrono::duration<double>(t1 - t0).count()});
  }
  return out;
}

VerificationReport suite_report(const std::vector<CriterionResult>& results, const SuiteOptions& opt) {
  VerificationReport rep;
  rep.command = std::string("suite run --level ") + (opt.level == SuiteLevel::quick ? "quick" : "full") +
                " --seed " + std::to_string(opt.seed);
  double total = 0;
  Json timings = Json::object();
  for (const CriterionResult& c : results) {
    char key[8];
    std::snprintf(key, sizeof key, "c%02d", c.id);
    rep.absorb(c.report, key);
    rep.data[key]["title"] = c.title;
    rep.data[key]["status"] = c.report.passed() ? "pass" : "fail";
    timings[key] = c.seconds * 1000;
    total += c.seconds;
  }
  if (opt.timing) {
    rep.data["criterion_ms"] = std::move(timings);
    rep.timing_ms = total * 1000;
  }
  return rep;
}

}  // namespace vzhu
