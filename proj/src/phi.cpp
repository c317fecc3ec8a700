#include "vzhu/phi.hpp"

#include <algorithm>

#include "vzhu/errors.hpp"
#include "vzhu/rng.hpp"
#include "vzhu/zhu.hpp"
#include "vzhu/zhu_audit.hpp"

namespace vzhu {

PhiModule::PhiModule(const ConformalVector& omega, Rational lambda)
    : omega_(&omega), exp_(omega), lambda_(std::move(lambda)) {
  const Algebra& alg = omega.algebra();
  module_ = lambda_ == 0 ? &alg.vacuum_module() : &alg.fock(lambda_);
}

std::string PhiModule::format(const Vec& w) const {
  std::string s = format_vector(algebra(), w);
  std::string ket = "|" + to_string(lambda_) + ">";
  for (std::size_t pos = s.find("|0>"); pos != std::string::npos; pos = s.find("|0>", pos + ket.size()))
    s.replace(pos, 3, ket);
  return s;
}

std::string PhiModule::format(const Monomial& w) const { return format(monomial_vec(w)); }

Vec phi_mode(const PhiModule& W, const Vec& v, int m, const Vec& w) {
  if (v.empty() || w.empty()) return {};
  Vec out;
  for (const auto& [wt, piece] : W.conformal().split(v)) {
    if (!is_integer(wt)) throw NonHomogeneous("phi modes need integral L(0)-weights");
    add_scaled(out, W.module().mode(piece, static_cast<int>(to_long(wt)) - 1 + m, w), 1);
  }
  return out;
}

namespace {

Rational power_over_factorial(int m, int j) { return pow(Rational(m), j) / factorial(j); }

// sum_j m^j/j! (u[j]v)_[k] w with exp-view modes u[j]v
Vec commutator_rhs(const PhiModule& W, const Vec& u, int m, const Vec& v, int k, const Vec& w) {
  const ExpView& ev = W.exp_view();
  int bound = ev.cutoff_bound(u, v);
  Vec out;
  for (int j = 0; j < bound; ++j) {
    Rational c = power_over_factorial(m, j);
    if (c == 0) continue;
    Vec uj = ev.mode(u, j, v);
    if (!uj.empty()) add_scaled(out, phi_mode(W, uj, k, w), c);
  }
  return out;
}

std::string tuple_name(const PhiModule& W, const Monomial& u, int m, const Monomial& v, int n, const Monomial& w) {
  const Algebra& alg = W.algebra();
  return "u=" + format_monomial(alg, u) + " m=" + std::to_string(m) + " v=" + format_monomial(alg, v) +
         " n=" + std::to_string(n) + " w=" + W.format(w);
}

void sample_commutators(const PhiModule& W, const PhiSampling& s, Check& comm, Check* grading) {
  const Algebra& alg = W.algebra();
  SplitMix64 rng(s.seed);
  auto vbasis = alg.basis_up_to(s.max_weight);
  for (std::size_t i = 0; i < s.samples; ++i) {
    const Monomial& u = rng.pick(vbasis);
    const Monomial& v = rng.pick(vbasis);
    int m = rng.range(-s.mode_range, s.mode_range);
    int n = rng.range(-s.mode_range, s.mode_range);
    auto wb = W.basis_of_depth(rng.range(0, s.max_depth));
    const Monomial& w = rng.pick(wb);
    Vec uv = monomial_vec(u), vv = monomial_vec(v), wv = monomial_vec(w);
    Vec vn_w = phi_mode(W, vv, n, wv);
    Vec lhs = phi_mode(W, uv, m, vn_w);
    add_scaled(lhs, phi_mode(W, vv, n, phi_mode(W, uv, m, wv)), -alg.smap_sign(uv, vv));
    std::string name = tuple_name(W, u, m, v, n, w);
    comm.record(lhs == commutator_rhs(W, uv, m, vv, m + n, wv), name);
    if (grading) {
      bool ok = true;
      for (const auto& [mono, c] : vn_w) ok = ok && W.depth(mono) == W.depth(w) - n;
      grading->record(ok, name);
    }
  }
}

}  // namespace

VerificationReport phi_commutator_check(const PhiModule& W, const PhiSampling& s) {
  const Algebra& alg = W.algebra();
  VerificationReport rep;
  rep.command = "phimod verify";
  Check& comm = rep.check("commutator");
  Check& grading = rep.check("depth_grading");
  sample_commutators(W, s, comm, &grading);
  if (alg.spec().kind == AlgebraKind::heisenberg) {
    Check& op = rep.check("heisenberg_operator");
    Vec a = alg.generator();
    for (const Monomial& w : W.basis_up_to_depth(s.max_depth)) {
      Vec wv = monomial_vec(w);
      for (int m = -s.mode_range; m <= s.mode_range; ++m)
        for (int n = -s.mode_range; n <= s.mode_range; ++n) {
          Vec lhs = phi_mode(W, a, m, phi_mode(W, a, n, wv)) - phi_mode(W, a, n, phi_mode(W, a, m, wv));
          Vec rhs = m + n == 0 ? scaled(wv, m) : Vec{};
          op.record(lhs == rhs, "m=" + std::to_string(m) + " n=" + std::to_string(n) + " w=" + W.format(w));
        }
    }
  }
  rep.data["lambda"] = rational_json(W.lambda());
  rep.data["seed"] = s.seed;
  rep.data["samples"] = s.samples;
  return rep;
}

OmegaSpace omega_space(const PhiModule& W, int n, int probe_depth, const Rational& probe_weight) {
  OmegaSpace out;
  out.n = n;
  out.probe_depth = probe_depth;
  out.probe_weight = probe_weight;
  std::vector<Vec> probes;
  for (const Monomial& v : W.algebra().basis_up_to(probe_weight))
    if (!v.empty()) probes.push_back(monomial_vec(v));
  for (int d = 0; d <= probe_depth; ++d) {
    auto kernel = nullspace(W.basis_of_depth(d), [&](const Monomial& w) {
      std::vector<Vec> blocks;
      Vec wv = monomial_vec(w);
      for (const Vec& v : probes)
        for (int m = n + 1; m <= d; ++m) blocks.push_back(phi_mode(W, v, m, wv));
      return blocks;
    });
    for (Vec& k : kernel) out.basis.push_back(std::move(k));
  }
  return out;
}

VerificationReport atilde_action_check(const PhiModule& W, int n, const Rational& D, int probe_depth,
                                       const Rational& probe_weight) {
  const Algebra& alg = W.algebra();
  const ExpView& ev = W.exp_view();
  VerificationReport rep;
  rep.command = "phimod action";
  OmegaSpace om = omega_space(W, n, probe_depth, probe_weight);
  Echelon span(alg);
  for (const Vec& b : om.basis) span.add(b);

  if (n == 0) {
    Check& line = rep.check("lowest_weight_line");
    line.record(om.basis.size() == 1 && om.basis[0] == vacuum_vec(), "Omega~_0 basis size " + std::to_string(om.basis.size()));
  }

  auto basis = alg.basis_up_to(D);
  Check& stable = rep.check("zero_mode_stable");
  for (const Monomial& v : basis)
    for (std::size_t i = 0; i < om.basis.size(); ++i)
      stable.record(span.contains(phi_mode(W, monomial_vec(v), 0, om.basis[i])),
                    "v=" + format_monomial(alg, v) + " w=" + W.format(om.basis[i]));

  Check& star = rep.check("star_action");
  Check& circ = rep.check("circ_annihilates");
  for (const Monomial& u : basis)
    for (const Monomial& v : basis) {
      Vec uv = monomial_vec(u), vv = monomial_vec(v);
      Vec st = tilde_star_n(ev, uv, vv, n);
      Vec ci = tilde_circ_n(ev, uv, vv, n);
      for (const Vec& w : om.basis) {
        std::string name = "u=" + format_monomial(alg, u) + " v=" + format_monomial(alg, v) + " w=" + W.format(w);
        star.record(phi_mode(W, uv, 0, phi_mode(W, vv, 0, w)) == phi_mode(W, st, 0, w), name);
        circ.record(phi_mode(W, ci, 0, w).empty(), name);
      }
    }

  rep.data["lambda"] = rational_json(W.lambda());
  rep.data["n"] = n;
  rep.data["probe"] = "basis";
  rep.data["probe_weight"] = rational_json(probe_weight);
  rep.data["probe_depth"] = probe_depth;
  Json dims = Json::array();
  for (int d = 0; d <= probe_depth; ++d) {
    std::size_t c = 0;
    for (const Vec& b : om.basis)
      if (alg.max_degree(b) == d) ++c;
    dims.push_back(c);
  }
  rep.data["omega_dims_by_depth"] = std::move(dims);
  return rep;
}

VerificationReport relation_check_U(const PhiModule& W, const PhiSampling& s) {
  const Algebra& alg = W.algebra();
  const ExpView& ev = W.exp_view();
  const ConformalVector& om = W.conformal();
  VerificationReport rep;
  rep.command = "phimod verify";
  auto wbasis = W.basis_up_to_depth(s.operator_depth);
  auto vbasis = alg.basis_up_to(s.max_weight);

  Check& vac = rep.check("vacuum");
  for (const Monomial& w : wbasis) {
    Vec wv = monomial_vec(w);
    for (int m = -s.mode_range; m <= s.mode_range; ++m)
      vac.record(phi_mode(W, alg.vacuum(), m, wv) == (m == 0 ? wv : Vec{}),
                 "m=" + std::to_string(m) + " w=" + W.format(w));
  }

  Check& dexp = rep.check("exp_derivative");
  Check& dlaw = rep.check("derivative_law");
  for (const Monomial& v : vbasis) {
    Vec vv = monomial_vec(v);
    Vec d = ev.derivative(vv);
    dexp.record(d == om.L(-1, vv) + om.L(0, vv), format_monomial(alg, v));
    for (const Monomial& w : wbasis) {
      Vec wv = monomial_vec(w);
      for (int m = -s.mode_range; m <= s.mode_range; ++m)
        dlaw.record(phi_mode(W, d, m, wv) == scaled(phi_mode(W, vv, m, wv), -m),
                    "v=" + format_monomial(alg, v) + " m=" + std::to_string(m) + " w=" + W.format(w));
    }
  }

  sample_commutators(W, s, rep.check("commutator"), nullptr);

  rep.absorb(skew_congruence_check(ev, 3), "exp");
  rep.absorb(skew_congruence_check(BaseView(alg), 3), "base");
  rep.data["lambda"] = rational_json(W.lambda());
  rep.data["seed"] = s.seed;
  return rep;
}

LPhiElement operator+(const LPhiElement& a, const LPhiElement& b) {
  LPhiElement r = a;
  for (const auto& [k, c] : b) {
    Rational& x = r[k];
    x += c;
    if (x == 0) r.erase(k);
  }
  return r;
}

LPhiElement scaled(const LPhiElement& a, const Rational& s) {
  if (s == 0) return {};
  LPhiElement r = a;
  for (auto& [k, c] : r) c *= s;
  return r;
}

LPhiElement operator-(const LPhiElement& a, const LPhiElement& b) { return a + scaled(b, -1); }

LPhiElement LPhi::term(const Vec& v, int t) {
  LPhiElement r;
  for (const auto& [m, c] : v) r.emplace(LPhiKey{m, t}, c);
  return r;
}

LPhiElement LPhi::ideal_generator(const Vec& v, int t) const {
  return term(alg_->derivative(v), t) + term(scaled(v, t), t);
}

const Echelon& LPhi::image(int t, const Rational& top) const {
  Slice& slice = images_[t];
  if (!slice.echelon) slice.echelon = std::make_unique<Echelon>(*alg_);
  if (top > slice.top) {
    // Rows (D + t) b for basis b with wt b <= top span I_t within V_{<=top}.
    for (const Monomial& b : alg_->basis_up_to(top)) {
      if (alg_->degree(b) <= slice.top) continue;
      Vec bv = monomial_vec(b);
      slice.echelon->add(alg_->derivative(bv) + scaled(bv, t));
    }
    slice.top = top;
  }
  return *slice.echelon;
}

LPhiElement LPhi::reduce(const LPhiElement& x) const {
  std::map<int, Vec> by_t;
  for (const auto& [k, c] : x) add_term(by_t[k.second], k.first, c);
  LPhiElement out;
  std::lock_guard<std::mutex> lock(mu_);
  for (const auto& [t, v] : by_t) {
    if (v.empty()) continue;
    Vec r = image(t, alg_->max_degree(v)).reduce(v);
    for (const auto& [m, c] : r) out.emplace(LPhiKey{m, t}, c);
  }
  return out;
}

LPhiElement LPhi::bracket(const LPhiElement& x, const LPhiElement& y) const {
  const Module& mod = alg_->vacuum_module();
  LPhiElement out;
  for (const auto& [kx, cx] : x)
    for (const auto& [ky, cy] : y) {
      Vec u = monomial_vec(kx.first), v = monomial_vec(ky.first);
      int m = kx.second;
      int bound = mod.structural_cutoff(u, v);
      Vec sum;
      for (int j = 0; j < bound; ++j) {
        Rational c = power_over_factorial(m, j);
        if (c != 0) add_scaled(sum, mod.mode(kx.first, j, ky.first), c);
      }
      out = out + term(scaled(sum, cx * cy), m + ky.second);
    }
  return reduce(out);
}

std::optional<int> LPhi::parity(const LPhiElement& x) const {
  std::optional<int> p;
  for (const auto& [k, c] : x) {
    int q = alg_->parity(k.first);
    if (p && *p != q) return std::nullopt;
    p = q;
  }
  return p ? p : std::optional<int>(0);
}

std::string LPhi::format(const LPhiElement& x) const {
  if (x.empty()) return "0";
  std::string out;
  for (const auto& [k, c] : x) {
    Vec single;
    single.emplace(k.first, c);
    std::string s = format_vector(*alg_, single) + " t^" + std::to_string(k.second);
    if (out.empty())
      out = s;
    else if (s[0] == '-')
      out += " - " + s.substr(1);
    else
      out += " + " + s;
  }
  return out;
}

VerificationReport lphi_axiom_check(const LPhi& L, const LPhiSampling& s) {
  const Algebra& alg = L.algebra();
  VerificationReport rep;
  rep.command = "lie jacobi";
  SplitMix64 rng(s.seed);
  auto basis = alg.basis_up_to(s.max_weight);
  auto random_term = [&] {
    const Monomial& m = rng.pick(basis);
    return LPhi::term(monomial_vec(m), rng.range(-s.t_range, s.t_range));
  };
  auto small = [&] {
    int c = rng.range(1, 3);
    return rng.below(2) ? c : -c;
  };

  Check& idem = rep.check("reduce_idempotent");
  Check& proj = rep.check("reduce_projection");
  for (std::size_t i = 0; i < s.reduce_samples; ++i) {
    LPhiElement x;
    int terms = rng.range(1, 3);
    for (int k = 0; k < terms; ++k) x = x + scaled(random_term(), small());
    const Monomial& g = rng.pick(basis);
    int t = rng.range(-s.t_range, s.t_range);
    LPhiElement gen = L.ideal_generator(monomial_vec(g), t);
    LPhiElement r = L.reduce(x);
    std::string name = L.format(x);
    idem.record(L.reduce(r) == r, name);
    proj.record(L.reduce(x + scaled(gen, small())) == r, name + " ; " + L.format(gen));
  }

  Check& skew = rep.check("skew");
  Check& jacobi = rep.check("jacobi");
  for (std::size_t i = 0; i < s.samples; ++i) {
    LPhiElement x = random_term(), y = random_term(), z = random_term();
    int px = *L.parity(x), py = *L.parity(y);
    int exy = alg.super_sign(px, py);
    std::string name = L.format(x) + " , " + L.format(y) + " , " + L.format(z);
    skew.record(L.reduce(L.bracket(x, y) + scaled(L.bracket(y, x), exy)).empty(), name);
    LPhiElement lhs = L.bracket(x, L.bracket(y, z));
    LPhiElement rhs = L.bracket(L.bracket(x, y), z) + scaled(L.bracket(y, L.bracket(x, z)), exy);
    jacobi.record(L.reduce(lhs - rhs).empty(), name);
  }
  rep.data["seed"] = s.seed;
  rep.data["max_weight"] = rational_json(s.max_weight);
  rep.data["t_range"] = s.t_range;
  return rep;
}

}  // namespace vzhu
