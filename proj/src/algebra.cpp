#include "vzhu/algebra.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

#include "vzhu/errors.hpp"

namespace vzhu {

long floor_rational(const Rational& r) {
  Integer q;
  mpz_fdiv_q(q.get_mpz_t(), r.get_num_mpz_t(), r.get_den_mpz_t());
  return q.get_si();
}

Rational AlgebraSpec::generator_weight() const {
  switch (kind) {
    case AlgebraKind::heisenberg:
      return 1;
    case AlgebraKind::virasoro:
      return 2;
    case AlgebraKind::free_fermion:
      return make_rational(1, 2);
  }
  return 0;
}

std::string AlgebraSpec::name() const {
  switch (kind) {
    case AlgebraKind::heisenberg:
      return "heisenberg";
    case AlgebraKind::virasoro:
      return "virasoro(" + to_string(c) + ")";
    case AlgebraKind::free_fermion:
      return "free_fermion";
  }
  return "?";
}

std::size_t MonomialHash::operator()(const Monomial& m) const noexcept {
  std::size_t h = 0x9e3779b97f4a7c15ULL ^ m.size();
  for (int x : m) h = (h ^ static_cast<std::size_t>(x + 0x1000)) * 0x100000001b3ULL;
  return h;
}

std::size_t Module::ModeKeyHash::operator()(const ModeKey& k) const noexcept {
  MonomialHash mh;
  return mh(k.u) * 31 + mh(k.w) * 131 + static_cast<std::size_t>(k.m + 0x4000);
}

std::size_t Module::ActKeyHash::operator()(const ActKey& k) const noexcept {
  return MonomialHash{}(k.w) * 131 + static_cast<std::size_t>(k.p + 0x4000);
}

void add_term(Vec& dst, const Monomial& m, const Rational& s) {
  if (s == 0) return;
  auto [it, inserted] = dst.try_emplace(m, s);
  if (!inserted) {
    it->second += s;
    if (it->second == 0) dst.erase(it);
  }
}

void add_scaled(Vec& dst, const Vec& src, const Rational& s) {
  if (s == 0) return;
  for (const auto& [m, c] : src) add_term(dst, m, c * s);
}

Vec scaled(const Vec& v, const Rational& s) {
  if (s == 0) return {};
  Vec r = v;
  for (auto& [m, c] : r) c *= s;
  return r;
}

Vec operator+(Vec a, const Vec& b) {
  add_scaled(a, b, 1);
  return a;
}

Vec operator-(Vec a, const Vec& b) {
  add_scaled(a, b, -1);
  return a;
}

Vec vacuum_vec() { return Vec{{Monomial{}, Rational(1)}}; }

Vec monomial_vec(Monomial m) { return Vec{{std::move(m), Rational(1)}}; }

// ---------------------------------------------------------------------------
// Algebra

Algebra::Algebra(AlgebraSpec spec, EngineOptions options)
    : spec_(std::move(spec)), options_(options), vacuum_(std::make_unique<Module>(*this, Rational(0))) {}

const Module& Algebra::fock(const Rational& lambda) const {
  if (lambda == 0) return *vacuum_;
  if (spec_.kind != AlgebraKind::heisenberg)
    throw MixedAlgebra("Fock modules with nonzero lambda exist only for heisenberg");
  std::lock_guard<std::mutex> lock(fock_mu_);
  auto it = fock_.find(lambda);
  if (it == fock_.end()) it = fock_.emplace(lambda, std::make_unique<Module>(*this, lambda)).first;
  return *it->second;
}

Rational Algebra::mode_weight(int p) const { return spec_.generator_weight() - p - 1; }

Rational Algebra::degree(const Monomial& m) const {
  Rational d = 0;
  for (int p : m) d += mode_weight(p);
  return d;
}

std::optional<Rational> Algebra::weight(const Vec& v) const {
  std::optional<Rational> w;
  for (const auto& [m, c] : v) {
    Rational d = degree(m);
    if (w && *w != d) return std::nullopt;
    w = d;
  }
  return w;
}

Rational Algebra::max_degree(const Vec& v) const {
  Rational best = 0;
  bool first = true;
  for (const auto& [m, c] : v) {
    Rational d = degree(m);
    if (first || d > best) best = d;
    first = false;
  }
  return best;
}

int Algebra::parity(const Monomial& m) const { return is_super() ? static_cast<int>(m.size() % 2) : 0; }

std::optional<int> Algebra::parity(const Vec& v) const {
  std::optional<int> p;
  for (const auto& [m, c] : v) {
    int q = parity(m);
    if (p && *p != q) return std::nullopt;
    p = q;
  }
  return p.value_or(0);
}

int Algebra::super_sign(int pu, int pv) const {
  if (!is_super() || options_.drop_super_sign) return 1;
  return (pu & pv) ? -1 : 1;
}

int Algebra::smap_sign(const Vec& u, const Vec& v) const {
  auto pu = parity(u);
  auto pv = parity(v);
  if (!pu || !pv) throw NonHomogeneousParity("smap_sign needs parity-homogeneous vectors");
  return super_sign(*pu, *pv);
}

std::vector<Monomial> Algebra::basis_of_weight(const Rational& w) const {
  std::vector<Monomial> out;
  Monomial cur;
  bool strict = is_super();
  // Choose modes left to right in ascending order, so each next mode is >= the last.
  std::function<void(int, Rational)> rec = [&](int min_p, Rational left) {
    if (left == 0) {
      out.push_back(cur);
      return;
    }
    // mode_weight(p) = wt X - p - 1 decreases as p grows; smallest p has the largest weight
    for (int p = min_p; p <= -1; ++p) {
      Rational mw = mode_weight(p);
      if (mw > left) continue;
      if (spec_.kind == AlgebraKind::virasoro && p > -1) break;
      cur.push_back(p);
      rec(strict ? p + 1 : p, left - mw);
      cur.pop_back();
    }
  };
  if (w < 0) return out;
  int lowest = -static_cast<int>(floor_rational(w)) - 2;
  rec(lowest, w);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Rational> Algebra::weights_up_to(const Rational& w) const {
  std::vector<Rational> out;
  Rational step = is_super() ? make_rational(1, 2) : Rational(1);
  for (Rational x = 0; x <= w; x += step)
    if (!basis_of_weight(x).empty()) out.push_back(x);
  return out;
}

std::vector<Monomial> Algebra::basis_up_to(const Rational& w) const {
  std::vector<Monomial> out;
  for (const Rational& x : weights_up_to(w)) {
    auto b = basis_of_weight(x);
    out.insert(out.end(), b.begin(), b.end());
  }
  return out;
}

Vec Algebra::bracket(int p, int q, const Monomial& w, const Module& module) const {
  switch (spec_.kind) {
    case AlgebraKind::heisenberg:
      if (p + q == 0 && p != 0) return scaled(monomial_vec(w), p);
      return {};
    case AlgebraKind::virasoro: {
      Vec r = scaled(module.act(p + q - 1, w), p - q);
      if (p + q == 2) {
        long k = p - 1;
        add_term(r, w, spec_.c * (k * k * k - k) / 12);
      }
      return r;
    }
    case AlgebraKind::free_fermion:
      if (p + q == -1) return monomial_vec(w);
      return {};
  }
  return {};
}

std::string Algebra::generator_symbol() const {
  switch (spec_.kind) {
    case AlgebraKind::heisenberg:
      return "a";
    case AlgebraKind::virasoro:
      return "L";
    case AlgebraKind::free_fermion:
      return "psi";
  }
  return "?";
}

int Algebra::label_offset() const { return spec_.kind == AlgebraKind::virasoro ? 1 : 0; }

Vec Algebra::derivative(const Vec& v) const { return vacuum_->mode(v, -2, vacuum_vec()); }

void Algebra::clear_caches() const {
  vacuum_->clear_cache();
  std::lock_guard<std::mutex> lock(fock_mu_);
  for (auto& [l, m] : fock_) m->clear_cache();
}

// ---------------------------------------------------------------------------
// Module

Module::Module(const Algebra& algebra, Rational lambda) : algebra_(&algebra), lambda_(std::move(lambda)) {}

void Module::clear_cache() const {
  std::lock_guard<std::mutex> lock(mu_);
  act_memo_.clear();
  mode_memo_.clear();
}

Vec Module::act(int p, const Vec& w) const {
  Vec out;
  for (const auto& [m, c] : w) add_scaled(out, act(p, m), c);
  return out;
}

Vec Module::act(int p, const Monomial& w) const {
  ActKey key{p, w};
  {
    std::lock_guard<std::mutex> lock(mu_);
    auto it = act_memo_.find(key);
    if (it != act_memo_.end()) return it->second;
  }
  Vec r = compute_act(p, w);
  std::lock_guard<std::mutex> lock(mu_);
  act_memo_.emplace(std::move(key), r);
  return r;
}

Vec Module::compute_act(int p, const Monomial& w) const {
  const Algebra& alg = *algebra_;
  bool fermion = alg.is_super();
  if (w.empty()) {
    if (p <= -1) return monomial_vec({p});
    if (p == 0 && alg.spec().kind == AlgebraKind::heisenberg) return scaled(monomial_vec({}), lambda_);
    return {};
  }
  int q = w.front();
  if (p < q || (p == q && !fermion)) {
    Monomial r;
    r.reserve(w.size() + 1);
    r.push_back(p);
    r.insert(r.end(), w.begin(), w.end());
    return monomial_vec(std::move(r));
  }
  if (p == q) return {};  // psi_p^2 = 0
  // X_p X_q w' = eps X_q (X_p w') + [X_p, X_q]_{+-} w'
  Monomial rest(w.begin() + 1, w.end());
  Vec inner = act(p, rest);
  Vec out = act(q, inner);
  if (fermion) out = scaled(out, -1);
  add_scaled(out, alg.bracket(p, q, rest, *this), 1);
  return out;
}

Vec Module::mode(const Vec& u, int m, const Vec& w) const {
  Vec out;
  for (const auto& [mu, cu] : u)
    for (const auto& [mw, cw] : w) add_scaled(out, mode(mu, m, mw), cu * cw);
  return out;
}

Vec Module::mode(const Monomial& u, int m, const Monomial& w) const {
  if (u.empty()) return m == -1 ? monomial_vec(w) : Vec{};
  const Algebra& alg = *algebra_;
  if (alg.degree(u) + alg.degree(w) - m - 1 < 0) return {};
  if (u.size() == 1 && u.front() == -1) return act(m, w);
  ModeKey key{u, m, w};
  {
    std::lock_guard<std::mutex> lock(mu_);
    auto it = mode_memo_.find(key);
    if (it != mode_memo_.end()) return it->second;
  }
  Vec r = compute_mode(u, m, w);
  std::lock_guard<std::mutex> lock(mu_);
  mode_memo_.emplace(std::move(key), r);
  return r;
}

// (X_p u')_m w = sum_{i>=0} (-1)^i binom(p,i) [X_{p-i} u'_{m+i} w - (-1)^p eps u'_{p+m-i} X_i w]
Vec Module::compute_mode(const Monomial& u, int m, const Monomial& w) const {
  const Algebra& alg = *algebra_;
  int p = u.front();
  Monomial rest(u.begin() + 1, u.end());
  Rational wt_rest = alg.degree(rest);
  Rational deg_w = alg.degree(w);
  Rational wt_x = alg.spec().generator_weight();
  int eps = alg.super_sign(1, alg.parity(rest));
  long top_a = floor_rational(wt_rest + deg_w - 1) - m;
  long top_b = floor_rational(wt_x + deg_w - 1);
  long top = std::max(top_a, top_b);
  Vec out;
  Vec wv = monomial_vec(w);
  for (long i = 0; i <= top; ++i) {
    Rational coef = binomial(p, i) * sign_pow(i);
    if (i <= top_a) {
      Vec inner = mode(rest, m + static_cast<int>(i), w);
      if (!inner.empty()) add_scaled(out, act(p - static_cast<int>(i), inner), coef);
    }
    if (i <= top_b) {
      Vec xi = act(static_cast<int>(i), w);
      if (!xi.empty()) {
        Vec rv = monomial_vec(rest);
        add_scaled(out, mode(rv, p + m - static_cast<int>(i), xi), -coef * sign_pow(p) * eps);
      }
    }
  }
  return out;
}

int Module::structural_cutoff(const Vec& u, const Vec& w) const {
  if (u.empty() || w.empty()) return 0;
  const Algebra& alg = *algebra_;
  return static_cast<int>(floor_rational(alg.max_degree(u) + alg.max_degree(w) - 1)) + 1;
}

int Module::cutoff(const Vec& u, const Vec& w) const {
  int n = structural_cutoff(u, w);
  if (u.empty() || w.empty()) return n;
  int floor_m = n - 1 - 2 * static_cast<int>(floor_rational(algebra_->max_degree(u) + algebra_->max_degree(w))) - 8;
  while (n > floor_m && mode(u, n - 1, w).empty()) --n;
  return n;
}

// ---------------------------------------------------------------------------
// formatting

std::string format_monomial(const Algebra& alg, const Monomial& m) {
  std::ostringstream out;
  std::string g = alg.generator_symbol();
  int off = alg.label_offset();
  for (std::size_t i = 0; i < m.size();) {
    std::size_t j = i;
    while (j < m.size() && m[j] == m[i]) ++j;
    out << g << "(" << (m[i] - off) << ")";
    if (j - i > 1) out << "^" << (j - i);
    i = j;
  }
  out << "|0>";
  return out.str();
}

std::string format_vector(const Algebra& alg, const Vec& v) {
  if (v.empty()) return "0";
  std::vector<std::pair<Rational, const Monomial*>> order;
  for (const auto& [m, c] : v) order.emplace_back(alg.degree(m), &m);
  std::stable_sort(order.begin(), order.end(),
                   [](const auto& a, const auto& b) { return a.first < b.first; });
  std::ostringstream out;
  bool first = true;
  for (const auto& [d, mp] : order) {
    const Rational& c = v.at(*mp);
    Rational mag = abs(c);
    if (first) {
      if (c < 0) out << "-";
    } else {
      out << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (mag != 1) out << to_string(mag) << "*";
    out << format_monomial(alg, *mp);
  }
  return out.str();
}

}  // namespace vzhu
