// Free-field reference for the Heisenberg vertex algebra: Y(u,x) for
// u = a(-k_1)...a(-k_r)|0> is the normal-ordered product of the divided
// derivatives a^{(k_i-1)}(x). Independent of the engine's iterate recursion.
#pragma once

#include <algorithm>
#include <functional>
#include <map>
#include <vector>

#include "vzhu/rational.hpp"

namespace oracle {

using vzhu::Rational;

// Partition of positive parts, sorted descending; Fock state basis.
using Parts = std::vector<int>;
using State = std::map<Parts, Rational>;

inline void add(State& s, const Parts& p, const Rational& c) {
  if (c == 0) return;
  s[p] += c;
  if (s[p] == 0) s.erase(p);
}

// a_n on a basis state of M(1, lambda).
inline State apply(int n, const Parts& p, const Rational& lambda) {
  State out;
  if (n < 0) {
    Parts q = p;
    q.push_back(-n);
    std::sort(q.rbegin(), q.rend());
    add(out, q, 1);
  } else if (n == 0) {
    add(out, p, lambda);
  } else {
    long count = std::count(p.begin(), p.end(), n);
    if (count == 0) return out;
    Parts q = p;
    q.erase(std::find(q.begin(), q.end(), n));
    add(out, q, Rational(n * count));
  }
  return out;
}

inline State apply(int n, const State& s, const Rational& lambda) {
  State out;
  for (auto& [p, c] : s)
    for (auto& [q, d] : apply(n, p, lambda)) add(out, q, c * d);
  return out;
}

inline int depth(const Parts& p) {
  int d = 0;
  for (int x : p) d += x;
  return d;
}

// u_m w for u = prod a(-k_i)|0> (parts k), w a basis state.
inline State mode(const Parts& u, int m, const Parts& w, const Rational& lambda) {
  int r = static_cast<int>(u.size());
  int ksum = depth(u);
  int target = m + 1 - ksum;  // sum of n_i
  int dw = depth(w);
  State out;
  if (r == 0) {
    if (m == -1) add(out, w, 1);
    return out;
  }
  std::vector<int> ns(r);
  // annihilators are at most dw; a creator a_n adds -n to the depth, which
  // ends at dw - target after at most dw was removed, so n >= target - 2 dw
  int lo = target - 2 * dw - 1;
  std::function<void(int, int)> rec = [&](int i, int sum) {
    if (i == r - 1) {
      ns[i] = target - sum;
      if (ns[i] > dw || ns[i] < lo) return;
      Rational coef = 1;
      for (int j = 0; j < r; ++j) coef *= vzhu::binomial(-ns[j] - 1, u[j] - 1);
      if (coef == 0) return;
      State s;
      add(s, w, 1);
      for (int j = 0; j < r; ++j)
        if (ns[j] >= 0) s = apply(ns[j], s, lambda);
      for (int j = 0; j < r; ++j)
        if (ns[j] < 0) s = apply(ns[j], s, lambda);
      for (auto& [p, c] : s) add(out, p, c * coef);
      return;
    }
    for (int n = lo; n <= dw; ++n) {
      ns[i] = n;
      rec(i + 1, sum + n);
    }
  };
  rec(0, 0);
  return out;
}

}  // namespace oracle
