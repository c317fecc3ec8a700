// Independent reference computations for the test suites. Nothing here calls
// into the library's series code.
#pragma once

#include <map>
#include <vector>

#include "vzhu/rational.hpp"

namespace oracle {

using vzhu::Rational;

// Bernoulli numbers B_0..B_n with B_1 = -1/2, from sum_{k<=m} binom(m+1,k) B_k = 0.
inline std::vector<Rational> bernoulli(int n) {
  std::vector<Rational> b(n + 1);
  b[0] = 1;
  for (int m = 1; m <= n; ++m) {
    Rational s = 0;
    for (int k = 0; k < m; ++k) s += vzhu::binomial(m + 1, k) * b[k];
    b[m] = -s / (m + 1);
  }
  return b;
}

// Truncated Laurent data as exponent -> coefficient, kept to exponents <= top.
struct Trunc {
  std::map<int, Rational> c;
  int top;

  Rational at(int e) const {
    auto it = c.find(e);
    return it == c.end() ? Rational(0) : it->second;
  }
};

inline Trunc mul(const Trunc& a, const Trunc& b, int top) {
  Trunc r{{}, top};
  for (auto& [ea, ca] : a.c)
    for (auto& [eb, cb] : b.c)
      if (ea + eb <= top) r.c[ea + eb] += ca * cb;
  return r;
}

// 1/(e^x - 1) = sum_k B_k x^{k-1}/k!
inline Trunc inv_expm1(int top) {
  auto b = bernoulli(top + 2);
  Trunc r{{}, top};
  for (int k = 0; k <= top + 1; ++k) r.c[k - 1] = b[k] / vzhu::factorial(k);
  return r;
}

// e^{wx}
inline Trunc exp_w(const Rational& w, int top) {
  Trunc r{{}, top};
  for (int k = 0; k <= top; ++k) r.c[k] = vzhu::pow(w, k) / vzhu::factorial(k);
  return r;
}

// e^{wx}/(e^x-1)^j by repeated naive multiplication; valuation is -j, so each
// factor carries enough extra terms to certify exponents <= top.
inline Trunc exp_over_expm1_power(const Rational& w, int j, int top) {
  int slack = top + j + 2;
  Trunc acc = exp_w(w, slack);
  Trunc inv = inv_expm1(slack);
  for (int i = 0; i < j; ++i) acc = mul(acc, inv, slack);
  Trunc r{{}, top};
  for (auto& [e, c] : acc.c)
    if (e <= top) r.c[e] = c;
  return r;
}

}  // namespace oracle
