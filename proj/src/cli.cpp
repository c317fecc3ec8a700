#include "vzhu/cli.hpp"

#include <CLI11.hpp>
#include <chrono>
#include <fstream>
#include <functional>
#include <iostream>
#include <memory>
#include <optional>
#include <regex>

#include "vzhu/axioms.hpp"
#include "vzhu/conformal.hpp"
#include "vzhu/errors.hpp"
#include "vzhu/kernels.hpp"
#include "vzhu/parse.hpp"
#include "vzhu/phi.hpp"
#include "vzhu/report.hpp"
#include "vzhu/suite.hpp"
#include "vzhu/zhu_audit.hpp"

namespace vzhu {

namespace {

struct UsageError : Error {
  using Error::Error;
};

int int_arg(const std::smatch& m, int i) { return std::stoi(m[i].str()); }

Rational rational_flag(const std::string& flag, const std::string& text) {
  try {
    return parse_rational(text);
  } catch (const std::invalid_argument&) {
    throw UsageError(flag + ": not a rational: '" + text + "'");
  }
}

// Flag values as given; every verb reads only the flags it registered.
struct Flags {
  std::string algebra = "heisenberg";
  std::string c = "1/2";
  std::string lambda = "0";
  int n = 0;
  std::string dmax = "4";
  std::string dgen;
  std::string max_weight;
  std::optional<std::size_t> samples;
  std::uint64_t seed = 0;
  int order = 12;
  std::string out;
  bool timing = false;

  std::string kernel = "f0";
  std::string inner = "log1p";
  bool euler = false;
  std::string u;
  std::string v;
  int m = 0;
  int t = 0;
  std::string omega;
  std::string alpha = "0";
  std::string a;
  std::string level = "quick";
  std::string view = "base";
};

AlgebraSpec algebra_spec(const Flags& f) {
  if (f.algebra == "heisenberg") return AlgebraSpec::heisenberg();
  if (f.algebra == "virasoro") return AlgebraSpec::virasoro(rational_flag("--c", f.c));
  if (f.algebra == "free_fermion" || f.algebra == "fermion") return AlgebraSpec::free_fermion();
  throw UsageError("--algebra: unknown algebra '" + f.algebra + "'");
}

Vec vector_flag(const std::string& flag, const std::string& text, const Algebra& alg) {
  if (text.empty()) throw UsageError(flag + " is required");
  try {
    return parse_vector(text, alg);
  } catch (const ParseError& e) {
    throw UsageError(flag + ": " + e.what());
  }
}

// Result of one command: a report (exit code from its status) or a payload.
struct Outcome {
  std::optional<VerificationReport> report;
  Json payload;
};

Outcome payload(Json j) { return Outcome{std::nullopt, std::move(j)}; }
Outcome report(VerificationReport r) { return Outcome{std::move(r), Json()}; }

struct Context {
  Flags f;
  std::unique_ptr<Algebra> alg;

  const Algebra& algebra() {
    if (!alg) alg = std::make_unique<Algebra>(algebra_spec(f));
    return *alg;
  }
  const Algebra& heisenberg() {
    if (algebra().spec().kind != AlgebraKind::heisenberg) throw UsageError("--algebra: this command needs heisenberg");
    return algebra();
  }
  ConformalVector conformal() {
    const Algebra& A = algebra();
    if (f.omega.empty()) return ConformalVector::canonical(A);
    return ConformalVector(A, vector_flag("--omega", f.omega, A));
  }
  Rational dmax() { return rational_flag("--dmax", f.dmax); }
  Rational dgen() { return f.dgen.empty() ? dmax() : rational_flag("--dgen", f.dgen); }
  Rational max_weight(const char* fallback) {
    return rational_flag("--max-weight", f.max_weight.empty() ? fallback : f.max_weight);
  }
  std::size_t samples(std::size_t fallback) { return f.samples.value_or(fallback); }
};

using Handler = std::function<Outcome(Context&)>;

void add_algebra(CLI::App* c, Flags& f) {
  c->add_option("--algebra", f.algebra, "heisenberg | virasoro | free_fermion");
  c->add_option("--c", f.c, "virasoro central charge");
}
void add_seed(CLI::App* c, Flags& f) {
  c->add_option("--seed", f.seed, "PRNG seed (SplitMix64)");
  c->add_option("--samples", f.samples, "number of seeded samples");
}

// ---- series

LaurentSeries kernel_flag(const std::string& spec, int order) {
  try {
    return series_from_spec(spec, order);
  } catch (const std::invalid_argument& e) {
    throw UsageError(std::string("--kernel/--inner: ") + e.what());
  }
}

Outcome series_expand(Context& cx) { return payload(series_json(kernel_flag(cx.f.kernel, cx.f.order))); }

Outcome series_compose(Context& cx) {
  LaurentSeries outer = kernel_flag(cx.f.kernel, cx.f.order);
  LaurentSeries inner = kernel_flag(cx.f.inner, cx.f.order);
  return payload(series_json(outer.compose(inner, cx.f.order)));
}

Outcome series_derive(Context& cx) {
  return payload(series_json(derive(kernel_flag(cx.f.kernel, cx.f.order + 1), cx.f.euler)));
}

// ---- va

Outcome va_mode(Context& cx) {
  const Algebra& A = cx.algebra();
  Vec u = vector_flag("--u", cx.f.u, A);
  Vec v = vector_flag("--v", cx.f.v, A);
  return payload(format_vector(A, A.vacuum_module().mode(u, cx.f.m, v)));
}

Outcome va_parse(Context& cx) {
  const Algebra& A = cx.algebra();
  return payload(format_vector(A, vector_flag("--v", cx.f.v, A)));
}

Outcome va_audit(Context& cx) {
  AxiomSampling s;
  s.max_weight = cx.max_weight("4");
  s.samples = cx.samples(500);
  s.seed = cx.f.seed;
  const Algebra& A = cx.algebra();
  if (cx.f.view == "exp") {
    ConformalVector omega = cx.conformal();
    return report(axiom_audit(ExpView(omega), s));
  }
  if (cx.f.view != "base") throw UsageError("--view: base | exp");
  return report(axiom_audit(BaseView(A), s));
}

// ---- zhu

QuotientPresentation build_quotient(Context& cx, const View& view) {
  QuotientRequest req;
  req.n = cx.f.n;
  req.D = cx.dmax();
  req.D_gen_start = cx.dgen();
  req.D_gen_max = req.D_gen_start + 4;
  return quotient_build(view, req);
}

Outcome zhu_build(Context& cx) {
  BaseView view(cx.algebra());
  return payload(quotient_json(cx.algebra(), build_quotient(cx, view)));
}

Outcome zhu_compare(Context& cx) { return report(cross_validate(cx.conformal(), cx.f.n, cx.dmax())); }

Outcome zhu_ideal_audit(Context& cx) {
  BaseView view(cx.algebra());
  QuotientPresentation q = build_quotient(cx, view);
  Rational D = cx.dmax();
  return report(quotient_audit(view, q, D + 4 * cx.f.n + 6));
}

Outcome zhu_involution(Context& cx) {
  Rational D = cx.dmax();
  Rational start = cx.dgen();
  return report(phi_involution_check(cx.conformal(), cx.f.n, D, start, D + 4 * cx.f.n + 6));
}

// ---- phimod

PhiSampling phi_sampling(Context& cx) {
  PhiSampling s;
  s.samples = cx.samples(500);
  s.seed = cx.f.seed;
  if (!cx.f.max_weight.empty()) s.max_weight = cx.max_weight("3");
  return s;
}

Outcome phimod_verify(Context& cx) {
  ConformalVector omega = ConformalVector::canonical(cx.heisenberg());
  PhiModule W(omega, rational_flag("--lambda", cx.f.lambda));
  PhiSampling s = phi_sampling(cx);
  VerificationReport rep;
  rep.absorb(phi_commutator_check(W, s), "commutator");
  rep.absorb(relation_check_U(W, s), "relations");
  return report(std::move(rep));
}

Outcome phimod_omega(Context& cx) {
  ConformalVector omega = ConformalVector::canonical(cx.heisenberg());
  PhiModule W(omega, rational_flag("--lambda", cx.f.lambda));
  Rational dmax = cx.dmax();
  if (!is_integer(dmax)) throw UsageError("--dmax: probe depth must be an integer");
  int depth = static_cast<int>(to_long(dmax));
  OmegaSpace sp = omega_space(W, cx.f.n, depth, cx.max_weight("4"));
  Json j;
  j["lambda"] = rational_json(W.lambda());
  j["n"] = sp.n;
  j["probe_depth"] = sp.probe_depth;
  j["probe_weight"] = rational_json(sp.probe_weight);
  j["dimension"] = sp.basis.size();
  Json basis = Json::array();
  for (const Vec& w : sp.basis) basis.push_back(W.format(w));
  j["basis"] = std::move(basis);
  return payload(std::move(j));
}

Outcome phimod_action(Context& cx) {
  ConformalVector omega = ConformalVector::canonical(cx.heisenberg());
  PhiModule W(omega, rational_flag("--lambda", cx.f.lambda));
  return report(atilde_action_check(W, cx.f.n, cx.dmax(), 8, cx.max_weight("4")));
}

// ---- lie

Outcome lie_bracket(Context& cx) {
  const Algebra& A = cx.algebra();
  LPhi L(A);
  LPhiElement x = LPhi::term(vector_flag("--u", cx.f.u, A), cx.f.m);
  LPhiElement y = LPhi::term(vector_flag("--v", cx.f.v, A), cx.f.t);
  return payload(L.format(L.bracket(x, y)));
}

Outcome lie_reduce(Context& cx) {
  const Algebra& A = cx.algebra();
  LPhi L(A);
  return payload(L.format(L.reduce(LPhi::term(vector_flag("--u", cx.f.u, A), cx.f.t))));
}

Outcome lie_jacobi(Context& cx) {
  LPhi L(cx.algebra());
  LPhiSampling s;
  s.samples = cx.samples(300);
  s.reduce_samples = s.samples;
  s.seed = cx.f.seed;
  s.max_weight = cx.max_weight("3");
  return report(lphi_axiom_check(L, s));
}

// ---- conformal

Outcome conformal_audit(Context& cx) {
  VirasoroAuditOptions o;
  o.bound = cx.max_weight("6");
  return report(virasoro_audit(cx.conformal(), o));
}

Outcome conformal_shift(Context& cx) {
  return report(shift_check(cx.heisenberg(), rational_flag("--lambda", cx.f.lambda)));
}

Outcome conformal_expmode(Context& cx) {
  ConformalVector omega = cx.conformal();
  if (cx.f.u.empty() && cx.f.v.empty())
    return report(exp_view_audit(omega, cx.max_weight("4"), cx.samples(200), cx.f.seed));
  const Algebra& A = cx.algebra();
  ExpView ev(omega);
  Vec u = vector_flag("--u", cx.f.u, A);
  Vec v = vector_flag("--v", cx.f.v, A);
  return payload(format_vector(A, exp_mode(ev, u, cx.f.m, v)));
}

Outcome conformal_alpha(Context& cx) {
  const Algebra& A = cx.heisenberg();
  Vec a = cx.f.a.empty() ? A.derivative(A.generator()) : vector_flag("--a", cx.f.a, A);
  Rational lambda = rational_flag("--lambda", cx.f.lambda);
  Json j;
  j["a"] = format_vector(A, a);
  j["lambda"] = rational_json(lambda);
  j["scalar"] = rational_json(zero_mode_scalar(A.fock(lambda), a, cx.max_weight("6")));
  return payload(std::move(j));
}

Outcome conformal_twist(Context& cx) {
  return report(twist_lemma_check(rational_flag("--alpha", cx.f.alpha), cx.f.order, cx.f.seed, cx.samples(3)));
}

// ---- suite

Outcome suite_run(Context& cx) {
  SuiteOptions o;
  if (cx.f.level == "quick")
    o.level = SuiteLevel::quick;
  else if (cx.f.level == "full")
    o.level = SuiteLevel::full;
  else
    throw UsageError("--level: quick | full");
  o.seed = cx.f.seed;
  o.timing = cx.f.timing;
  return report(suite_report(run_criteria(o), o));
}

// Command echo without the output destination.
std::string join(const std::vector<std::string>& args) {
  std::string s;
  for (std::size_t i = 0; i < args.size(); ++i) {
    if (args[i] == "--out") {
      ++i;
      continue;
    }
    if (args[i].rfind("--out=", 0) == 0) continue;
    if (!s.empty()) s += ' ';
    s += args[i];
  }
  return s;
}

}  // namespace

LaurentSeries series_from_spec(const std::string& spec, int order) {
  static const std::regex fn(R"(([fg])(\d+))");
  static const std::regex em(R"(exp_mode\((-?\d+),([-\d/]+),(\d+)\))");
  static const std::regex ex(R"(exp\(([-\d/]+)\))");
  static const std::regex bi(R"(binom\(([-\d/]+)\))");
  std::smatch m;
  if (std::regex_match(spec, m, fn)) {
    int n = int_arg(m, 2);
    return expand_kernel(m[1] == "f" ? KernelId::f(n) : KernelId::g(n), order);
  }
  if (spec == "huang_f") return expand_kernel(KernelId::huang_f(), order);
  if (spec == "huang_g") return expand_kernel(KernelId::huang_g(), order);
  if (std::regex_match(spec, m, em))
    return expand_kernel(KernelId::exp_mode(int_arg(m, 1), parse_rational(m[2].str()), int_arg(m, 3)), order);
  if (std::regex_match(spec, m, ex)) return LaurentSeries::exp(parse_rational(m[1].str()), order);
  if (std::regex_match(spec, m, bi)) return LaurentSeries::binomial_series(parse_rational(m[1].str()), order);
  if (spec == "expm1") return LaurentSeries::expm1(order);
  if (spec == "log1p") return LaurentSeries::log1p(order);
  if (spec == "x") return LaurentSeries::monomial(1);
  if (!spec.empty() && spec.front() == '{') {
    Json j = Json::parse(spec, nullptr, false);
    if (j.is_discarded() || !j.contains("valuation") || !j.contains("coeffs") || !j["valuation"].is_number_integer() ||
        !j["coeffs"].is_array())
      throw std::invalid_argument("bad series literal '" + spec + "'");
    std::vector<Rational> cs;
    for (const Json& c : j["coeffs"]) {
      if (!c.is_string()) throw std::invalid_argument("series coefficients must be \"p/q\" strings");
      cs.push_back(parse_rational(c.get<std::string>()));
    }
    return LaurentSeries::polynomial(j["valuation"].get<int>(), std::move(cs));
  }
  throw std::invalid_argument("unknown series '" + spec + "'");
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Context cx;
  Flags& f = cx.f;
  CLI::App app{"Exact checks for vertex algebras, Zhu-type algebras and phi-coordinated modules", "vzhu"};
  app.require_subcommand(1);
  std::vector<std::pair<CLI::App*, Handler>> leaves;

  auto verb = [&](const char* name, const char* help) {
    CLI::App* v = app.add_subcommand(name, help);
    v->require_subcommand(1);
    return v;
  };
  auto leaf = [&](CLI::App* parent, const char* name, const char* help, Handler h) {
    CLI::App* c = parent->add_subcommand(name, help);
    c->add_option("--out", f.out, "write the output to FILE");
    leaves.emplace_back(c, std::move(h));
    return c;
  };
  auto reporting = [&](CLI::App* c) { c->add_flag("--timing", f.timing, "add timing_ms to the report"); };

  CLI::App* series = verb("series", "kernel series");
  struct Leaf {
    const char* name;
    const char* help;
    Handler h;
  };
  for (const Leaf& l : {Leaf{"expand", "coefficients through --order", series_expand},
                        Leaf{"compose", "kernel(inner(x))", series_compose},
                        Leaf{"derive", "d/dx or x d/dx", series_derive}}) {
    std::string name = l.name;
    CLI::App* c = leaf(series, l.name, l.help, l.h);
    c->add_option("--kernel", f.kernel, "f<n> | g<n> | huang_f | huang_g | exp_mode(k,w,m) | ...");
    c->add_option("--order", f.order, "highest exponent");
    if (name == "compose") c->add_option("--inner", f.inner, "inner series (valuation >= 1)");
    if (name == "derive") c->add_flag("--euler", f.euler, "x d/dx instead of d/dx");
  }

  CLI::App* va = verb("va", "vertex algebra engine");
  CLI::App* c = leaf(va, "mode", "u_m v", va_mode);
  add_algebra(c, f);
  c->add_option("--u", f.u)->required();
  c->add_option("--v", f.v)->required();
  c->add_option("--m", f.m)->required();
  c = leaf(va, "parse", "normal form of --v", va_parse);
  add_algebra(c, f);
  c->add_option("--v", f.v)->required();
  c = leaf(va, "audit", "vertex algebra axioms on seeded samples", va_audit);
  add_algebra(c, f);
  add_seed(c, f);
  c->add_option("--max-weight", f.max_weight);
  c->add_option("--view", f.view, "base | exp");
  c->add_option("--omega", f.omega, "conformal vector for --view exp");
  reporting(c);

  CLI::App* zhu = verb("zhu", "A~_n(V) and A_n(V, omega)");
  for (const Leaf& l : {Leaf{"build", "quotient presentation of A~_n(V)", zhu_build},
                        Leaf{"compare", "classical products against kernel pairings", zhu_compare},
                        Leaf{"ideal-audit", "identity, associativity and ideal audits", zhu_ideal_audit},
                        Leaf{"involution", "phi anti-automorphism and omega centrality", zhu_involution}}) {
    std::string name = l.name;
    c = leaf(zhu, l.name, l.help, l.h);
    add_algebra(c, f);
    c->add_option("--n", f.n);
    c->add_option("--dmax", f.dmax, "weight bound D");
    if (name != "compare") c->add_option("--dgen", f.dgen, "first generator bound D_gen");
    if (name == "compare" || name == "involution") c->add_option("--omega", f.omega);
    if (name != "build") reporting(c);
  }

  CLI::App* phimod = verb("phimod", "phi-coordinated Fock modules");
  c = leaf(phimod, "verify", "commutator and U~ relations", phimod_verify);
  add_algebra(c, f);
  add_seed(c, f);
  c->add_option("--lambda", f.lambda);
  c->add_option("--max-weight", f.max_weight);
  reporting(c);
  c = leaf(phimod, "omega", "Omega~_n by exact probes", phimod_omega);
  add_algebra(c, f);
  c->add_option("--lambda", f.lambda);
  c->add_option("--n", f.n);
  c->add_option("--dmax", f.dmax, "probe depth");
  c->add_option("--max-weight", f.max_weight, "probe weight");
  c = leaf(phimod, "action", "A~_n action on Omega~_n", phimod_action);
  add_algebra(c, f);
  c->add_option("--lambda", f.lambda);
  c->add_option("--n", f.n);
  c->add_option("--dmax", f.dmax);
  c->add_option("--max-weight", f.max_weight, "probe weight");
  reporting(c);

  CLI::App* lie = verb("lie", "L_phi(V)");
  c = leaf(lie, "bracket", "[u (x) t^m, v (x) t^t]", lie_bracket);
  add_algebra(c, f);
  c->add_option("--u", f.u)->required();
  c->add_option("--v", f.v)->required();
  c->add_option("--m", f.m);
  c->add_option("--t", f.t);
  c = leaf(lie, "reduce", "u (x) t^t modulo I", lie_reduce);
  add_algebra(c, f);
  c->add_option("--u", f.u)->required();
  c->add_option("--t", f.t);
  c = leaf(lie, "jacobi", "skew symmetry and Jacobi modulo I", lie_jacobi);
  add_algebra(c, f);
  add_seed(c, f);
  c->add_option("--max-weight", f.max_weight);
  reporting(c);

  CLI::App* conf = verb("conformal", "conformal vectors and shifts");
  c = leaf(conf, "audit", "Virasoro relations of omega", conformal_audit);
  add_algebra(c, f);
  c->add_option("--omega", f.omega);
  c->add_option("--max-weight", f.max_weight);
  reporting(c);
  c = leaf(conf, "shift", "omega - lambda a(-2)|0>", conformal_shift);
  add_algebra(c, f);
  c->add_option("--lambda", f.lambda);
  reporting(c);
  c = leaf(conf, "expmode", "u[m]v in exp(V, omega), or the exp-view audit", conformal_expmode);
  add_algebra(c, f);
  add_seed(c, f);
  c->add_option("--omega", f.omega);
  c->add_option("--u", f.u);
  c->add_option("--v", f.v);
  c->add_option("--m", f.m);
  c->add_option("--max-weight", f.max_weight);
  reporting(c);
  c = leaf(conf, "alpha", "scalar of a_0 on the lowest weight of Fock(lambda)", conformal_alpha);
  add_algebra(c, f);
  c->add_option("--lambda", f.lambda);
  c->add_option("--a", f.a, "default a(-2)|0>");
  c->add_option("--max-weight", f.max_weight, "bound for a_0 = 0 on V");
  c = leaf(conf, "twist", "e^{-alpha x} twist identity", conformal_twist);
  c->add_option("--alpha", f.alpha);
  c->add_option("--order", f.order);
  add_seed(c, f);
  reporting(c);

  CLI::App* suite = verb("suite", "acceptance suite");
  c = leaf(suite, "run", "criteria 1..13", suite_run);
  c->add_option("--level", f.level, "quick | full");
  c->add_option("--seed", f.seed);
  reporting(c);

  try {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    app.parse(rev);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitPass;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitPass;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n";
    return kExitUsage;
  }

  Handler handler;
  for (auto& [app_ptr, h] : leaves)
    if (app_ptr->parsed()) handler = h;
  if (!handler) {
    err << "usage error: no command\n";
    return kExitUsage;
  }

  Outcome result;
  auto t0 = std::chrono::steady_clock::now();
  try {
    result = handler(cx);
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitCheckFailed;
  } catch (const std::logic_error& e) {
    err << "usage error: " << e.what() << "\n";
    return kExitUsage;
  }
  auto t1 = std::chrono::steady_clock::now();

  std::string text;
  int code = kExitPass;
  if (result.report) {
    VerificationReport& r = *result.report;
    r.command = join(args);
    if (f.timing && !r.timing_ms) r.timing_ms = std::chrono::duration<double, std::milli>(t1 - t0).count();
    if (!f.timing) r.timing_ms.reset();
    text = emit_report(r);
    code = r.passed() ? kExitPass : kExitCheckFailed;
  } else {
    text = emit_json(result.payload);
  }
  if (f.out.empty()) {
    out << text;
  } else {
    std::ofstream file(f.out, std::ios::binary);
    file << text;
    if (!file) {
      err << "error: cannot write " << f.out << "\n";
      return kExitUsage;
    }
  }
  return code;
}

}  // namespace vzhu
