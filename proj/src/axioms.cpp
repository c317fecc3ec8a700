#include "vzhu/axioms.hpp"

#include "vzhu/rng.hpp"

namespace vzhu {

VerificationReport axiom_audit(const View& view, const AxiomSampling& s) {
  const Algebra& alg = view.algebra();
  VerificationReport rep;
  rep.command = "va audit";
  Check& comm = rep.check("commutator");
  Check& skew = rep.check("skew_symmetry");
  Check& vac = rep.check("vacuum");
  Check& creation = rep.check("creation");
  Check& dbr = rep.check("d_bracket");
  Check& dlaw = rep.check("d_derivative");

  SplitMix64 rng(s.seed);
  auto basis = alg.basis_up_to(s.max_weight);
  const Vec one = alg.vacuum();
  int R = s.mode_range;
  auto fm = [&](const Monomial& x) { return format_monomial(alg, x); };

  for (std::size_t i = 0; i < s.samples; ++i) {
    const Monomial& um = rng.pick(basis);
    const Monomial& vm = rng.pick(basis);
    const Monomial& wm = rng.pick(basis);
    int m = rng.range(-R, R);
    int n = rng.range(-R, R);
    Vec u = monomial_vec(um), v = monomial_vec(vm), w = monomial_vec(wm);
    int eps = alg.smap_sign(u, v);

    // [u_m, v_n] w = sum_j binom(m,j) (u_j v)_{m+n-j} w
    {
      Vec lhs = view.mode(u, m, view.mode(v, n, w));
      add_scaled(lhs, view.mode(v, n, view.mode(u, m, w)), -eps);
      Vec rhs;
      int bound = view.cutoff_bound(u, v);
      for (int j = 0; j < bound; ++j) {
        Rational c = binomial(Rational(m), j);
        if (c == 0) continue;
        Vec uj = view.mode(u, j, v);
        if (!uj.empty()) add_scaled(rhs, view.mode(uj, m + n - j, w), c);
      }
      comm.record(lhs == rhs, "u=" + fm(um) + " m=" + std::to_string(m) + " v=" + fm(vm) +
                                  " n=" + std::to_string(n) + " w=" + fm(wm));
    }

    // u_m v = eps sum_j (-1)^{m+1+j} D^j (v_{m+j} u) / j!
    {
      Vec rhs;
      int bound = view.cutoff_bound(v, u);
      for (int j = 0; m + j < bound; ++j) {
        Vec term = view.mode(v, m + j, u);
        for (int k = 0; k < j && !term.empty(); ++k) term = view.derivative(term);
        if (!term.empty()) add_scaled(rhs, term, Rational(eps * sign_pow(m + 1 + j)) / factorial(j));
      }
      skew.record(view.mode(u, m, v) == rhs, "u=" + fm(um) + " m=" + std::to_string(m) + " v=" + fm(vm));
    }

    // 1_k w = delta_{k,-1} w and w_k 1 = delta_{k,-1} w for k >= -1
    {
      int k = rng.range(-R - 1, R + 1);
      vac.record(view.mode(one, k, w) == (k == -1 ? w : Vec{}), "k=" + std::to_string(k) + " w=" + fm(wm));
      int kc = rng.range(-1, R);
      creation.record(view.mode(w, kc, one) == (kc == -1 ? w : Vec{}), "k=" + std::to_string(kc) + " w=" + fm(wm));
    }

    // D v_n w - v_n D w = (Dv)_n w = -n v_{n-1} w
    {
      Vec dv = view.derivative(v);
      Vec lhs = view.derivative(view.mode(v, n, w));
      add_scaled(lhs, view.mode(v, n, view.derivative(w)), -1);
      Vec dvn = view.mode(dv, n, w);
      std::string name = "v=" + fm(vm) + " n=" + std::to_string(n) + " w=" + fm(wm);
      dbr.record(lhs == dvn, name);
      dlaw.record(dvn == scaled(view.mode(v, n - 1, w), -n), name);
    }
  }
  rep.data["view"] = view.name();
  rep.data["max_weight"] = rational_json(s.max_weight);
  rep.data["seed"] = s.seed;
  return rep;
}

}  // namespace vzhu
