#ifndef VZHU_ALGEBRA_HPP
#define VZHU_ALGEBRA_HPP

#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "vzhu/rational.hpp"

namespace vzhu {

enum class AlgebraKind { heisenberg, virasoro, free_fermion };

// One strong generator X per algebra, Y(X,x) = sum_p X_p x^{-p-1}:
//   heisenberg    X = a,   wt 1,   [a_p, a_q] = p delta_{p+q,0}
//   virasoro(c)   X = w,   wt 2,   L(n) = w_{n+1}
//   free_fermion  X = psi, wt 1/2, {psi_p, psi_q} = delta_{p+q,-1}
struct AlgebraSpec {
  AlgebraKind kind = AlgebraKind::heisenberg;
  Rational c = 0;  // central charge; virasoro only

  static AlgebraSpec heisenberg() { return {AlgebraKind::heisenberg, 0}; }
  static AlgebraSpec virasoro(const Rational& c) { return {AlgebraKind::virasoro, c}; }
  static AlgebraSpec free_fermion() { return {AlgebraKind::free_fermion, 0}; }

  bool is_super() const { return kind == AlgebraKind::free_fermion; }
  Rational generator_weight() const;
  std::string name() const;

  friend bool operator==(const AlgebraSpec& a, const AlgebraSpec& b) {
    return a.kind == b.kind && a.c == b.c;
  }
};

// Field modes of the generator applied to the lowest vector, ascending
// (most negative leftmost). Fermionic modes are strictly ascending.
using Monomial = std::vector<int>;

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const noexcept;
};

// Finite combination of monomials; zero coefficients are never stored.
using Vec = std::map<Monomial, Rational>;

void add_scaled(Vec& dst, const Vec& src, const Rational& s);
void add_term(Vec& dst, const Monomial& m, const Rational& s);
Vec scaled(const Vec& v, const Rational& s);
Vec operator+(Vec a, const Vec& b);
Vec operator-(Vec a, const Vec& b);
Vec vacuum_vec();
Vec monomial_vec(Monomial m);

struct EngineOptions {
  // Test-only mutation: drop the super sign in the iterate formula and in
  // smap_sign. Never set outside mutation tests.
  bool drop_super_sign = false;
};

class Algebra;

// The algebra V itself (lambda = 0) or, for heisenberg, the Fock module
// M(1, lambda) with a_0 = lambda on the lowest vector. Monomials index the
// same PBW basis in both cases; degree() is the V-weight resp. the depth.
class Module {
 public:
  Module(const Algebra& algebra, Rational lambda);
  Module(const Module&) = delete;
  Module& operator=(const Module&) = delete;

  const Algebra& algebra() const { return *algebra_; }
  const Rational& lambda() const { return lambda_; }

  // X_p w
  Vec act(int p, const Monomial& w) const;
  Vec act(int p, const Vec& w) const;

  // u_m w for u in V.
  Vec mode(const Monomial& u, int m, const Monomial& w) const;
  Vec mode(const Vec& u, int m, const Vec& w) const;

  // All m >= bound give u_m w = 0.
  int structural_cutoff(const Vec& u, const Vec& w) const;
  // Smallest N with u_m w = 0 for every m >= N (structural bound tightened
  // by inspecting trailing modes).
  int cutoff(const Vec& u, const Vec& w) const;

  void clear_cache() const;

 private:
  Vec compute_act(int p, const Monomial& w) const;
  Vec compute_mode(const Monomial& u, int m, const Monomial& w) const;

  const Algebra* algebra_;
  Rational lambda_;

  struct ModeKey {
    Monomial u;
    int m;
    Monomial w;
    bool operator==(const ModeKey& o) const { return m == o.m && u == o.u && w == o.w; }
  };
  struct ModeKeyHash {
    std::size_t operator()(const ModeKey& k) const noexcept;
  };
  struct ActKey {
    int p;
    Monomial w;
    bool operator==(const ActKey& o) const { return p == o.p && w == o.w; }
  };
  struct ActKeyHash {
    std::size_t operator()(const ActKey& k) const noexcept;
  };

  mutable std::mutex mu_;
  mutable std::unordered_map<ActKey, Vec, ActKeyHash> act_memo_;
  mutable std::unordered_map<ModeKey, Vec, ModeKeyHash> mode_memo_;
};

class Algebra {
 public:
  explicit Algebra(AlgebraSpec spec, EngineOptions options = {});
  Algebra(const Algebra&) = delete;
  Algebra& operator=(const Algebra&) = delete;

  const AlgebraSpec& spec() const { return spec_; }
  const EngineOptions& options() const { return options_; }
  bool is_super() const { return spec_.is_super(); }

  // V as a module over itself.
  const Module& vacuum_module() const { return *vacuum_; }
  // Fock module M(1, lambda); heisenberg only (lambda = 0 returns V).
  const Module& fock(const Rational& lambda) const;

  // Weight contribution of the field mode X_p: wt X - p - 1.
  Rational mode_weight(int p) const;
  Rational degree(const Monomial& m) const;
  // Common weight, or nullopt for a non-homogeneous (or zero) vector.
  std::optional<Rational> weight(const Vec& v) const;
  Rational max_degree(const Vec& v) const;
  // 0 or 1 for monomials.
  int parity(const Monomial& m) const;
  std::optional<int> parity(const Vec& v) const;

  // eps(|u|,|v|): -1 only for two odd fermionic vectors.
  int smap_sign(const Vec& u, const Vec& v) const;
  int super_sign(int pu, int pv) const;

  // Basis monomials of weight exactly w / at most w, sorted by (weight, monomial).
  std::vector<Monomial> basis_of_weight(const Rational& w) const;
  std::vector<Monomial> basis_up_to(const Rational& w) const;
  // Weights that occur in V up to w, ascending.
  std::vector<Rational> weights_up_to(const Rational& w) const;

  // Brackets of generator modes, as a vector in a module: [X_p, X_q]_+- w.
  Vec bracket(int p, int q, const Monomial& w, const Module& module) const;

  // Label convention used by the text format: a(p), L(p-1), psi(p).
  std::string generator_symbol() const;
  int label_offset() const;

  Vec vacuum() const { return vacuum_vec(); }
  Vec generator() const { return monomial_vec({-1}); }

  // D v = v_{-2} 1
  Vec derivative(const Vec& v) const;

  void clear_caches() const;

 private:
  AlgebraSpec spec_;
  EngineOptions options_;
  std::unique_ptr<Module> vacuum_;
  mutable std::mutex fock_mu_;
  mutable std::map<Rational, std::unique_ptr<Module>> fock_;
};

std::string format_monomial(const Algebra& alg, const Monomial& m);
std::string format_vector(const Algebra& alg, const Vec& v);

// Integer part rounded toward -infinity.
long floor_rational(const Rational& r);

}  // namespace vzhu

#endif  // VZHU_ALGEBRA_HPP
