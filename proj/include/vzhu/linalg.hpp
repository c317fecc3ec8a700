#ifndef VZHU_LINALG_HPP
#define VZHU_LINALG_HPP

#include <cstddef>
#include <functional>
#include <map>
#include <optional>
#include <vector>

#include "vzhu/algebra.hpp"

namespace vzhu {

// Column of the graded monomial basis. Ordered by weight descending, then by
// monomial, so the leading entry of a row is one of its highest-weight terms.
struct ColKey {
  int w2;  // twice the weight
  Monomial m;

  friend bool operator<(const ColKey& a, const ColKey& b) {
    if (a.w2 != b.w2) return a.w2 > b.w2;
    return a.m < b.m;
  }
  friend bool operator==(const ColKey& a, const ColKey& b) { return a.w2 == b.w2 && a.m == b.m; }
};

using Row = std::map<ColKey, Rational>;

// Sparse semi-echelon basis over Q: every stored row has a distinct leading
// column and leading coefficient 1.
class Echelon {
 public:
  explicit Echelon(const Algebra& alg) : alg_(&alg) {}

  Row to_row(const Vec& v) const;
  Vec to_vec(const Row& r) const;

  // Inserts v; returns true when the rank grew.
  bool add(const Vec& v);
  // Remainder of v after eliminating all pivot columns (canonical modulo the span).
  Vec reduce(const Vec& v) const;
  Row reduce_row(Row r) const;
  bool contains(const Vec& v) const { return reduce(v).empty(); }

  std::size_t rank() const { return rows_.size(); }
  bool is_pivot(const Monomial& m) const;
  // Rows whose leading weight is <= w; they span the intersection of the span with V_{<=w}.
  std::size_t rank_up_to(const Rational& w) const;
  // Highest weight of any inserted vector (nullopt before the first insertion).
  std::optional<Rational> ambient_weight() const { return ambient_; }

 private:
  const Algebra* alg_;
  std::vector<Row> rows_;
  std::map<ColKey, std::size_t> pivots_;
  std::optional<Rational> ambient_;
};

// Basis of the kernel of the linear map sending d to image(d), an element of
// a direct sum of copies of V given block by block.
std::vector<Vec> nullspace(const std::vector<Monomial>& domain,
                           const std::function<std::vector<Vec>(const Monomial&)>& image);

}  // namespace vzhu

#endif  // VZHU_LINALG_HPP
