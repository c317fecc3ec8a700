#include "vzhu/linalg.hpp"

namespace vzhu {

Row Echelon::to_row(const Vec& v) const {
  Row r;
  for (const auto& [m, c] : v) r.emplace(ColKey{static_cast<int>(to_long(alg_->degree(m) * 2)), m}, c);
  return r;
}

Vec Echelon::to_vec(const Row& r) const {
  Vec v;
  for (const auto& [k, c] : r) v.emplace(k.m, c);
  return v;
}

Row Echelon::reduce_row(Row r) const {
  auto it = r.begin();
  while (it != r.end()) {
    auto p = pivots_.find(it->first);
    if (p == pivots_.end()) {
      ++it;
      continue;
    }
    const Row& row = rows_[p->second];
    Rational factor = it->second;
    ColKey lead = it->first;
    // row's entries all sit at or after lead in column order
    for (const auto& [k, c] : row) {
      if (k == lead) continue;
      auto [jt, inserted] = r.try_emplace(k, -factor * c);
      if (!inserted) {
        jt->second -= factor * c;
        if (jt->second == 0) r.erase(jt);
      }
    }
    it = r.erase(it);
  }
  return r;
}

Vec Echelon::reduce(const Vec& v) const { return to_vec(reduce_row(to_row(v))); }

bool Echelon::add(const Vec& v) {
  if (v.empty()) return false;
  Rational top = alg_->max_degree(v);
  if (!ambient_ || top > *ambient_) ambient_ = top;
  Row r = reduce_row(to_row(v));
  if (r.empty()) return false;
  Rational inv = Rational(1) / r.begin()->second;
  for (auto& [k, c] : r) c *= inv;
  pivots_.emplace(r.begin()->first, rows_.size());
  rows_.push_back(std::move(r));
  return true;
}

bool Echelon::is_pivot(const Monomial& m) const {
  return pivots_.count(ColKey{static_cast<int>(to_long(alg_->degree(m) * 2)), m}) > 0;
}

std::size_t Echelon::rank_up_to(const Rational& w) const {
  int w2 = static_cast<int>(floor_rational(w * 2));
  std::size_t n = 0;
  for (const auto& [k, idx] : pivots_)
    if (k.w2 <= w2) ++n;
  return n;
}

std::vector<Vec> nullspace(const std::vector<Monomial>& domain,
                           const std::function<std::vector<Vec>(const Monomial&)>& image) {
  using Key = std::pair<std::size_t, Monomial>;
  using SparseRow = std::map<Key, Rational>;
  struct Reduced {
    SparseRow row;
    Vec combo;  // in the domain basis
  };
  std::vector<Reduced> rows;
  std::map<Key, std::size_t> pivots;
  std::vector<Vec> kernel;
  for (const Monomial& d : domain) {
    SparseRow r;
    std::vector<Vec> blocks = image(d);
    for (std::size_t b = 0; b < blocks.size(); ++b)
      for (const auto& [m, c] : blocks[b]) r.emplace(Key{b, m}, c);
    Vec combo = monomial_vec(d);
    auto it = r.begin();
    while (it != r.end()) {
      auto p = pivots.find(it->first);
      if (p == pivots.end()) {
        ++it;
        continue;
      }
      const Reduced& red = rows[p->second];
      Rational factor = it->second;
      Key lead = it->first;
      for (const auto& [k, c] : red.row) {
        if (k == lead) continue;
        auto [jt, inserted] = r.try_emplace(k, -factor * c);
        if (!inserted) {
          jt->second -= factor * c;
          if (jt->second == 0) r.erase(jt);
        }
      }
      add_scaled(combo, red.combo, -factor);
      it = r.erase(it);
    }
    if (r.empty()) {
      kernel.push_back(std::move(combo));
      continue;
    }
    Rational inv = Rational(1) / r.begin()->second;
    for (auto& [k, c] : r) c *= inv;
    pivots.emplace(r.begin()->first, rows.size());
    rows.push_back(Reduced{std::move(r), scaled(combo, inv)});
  }
  return kernel;
}

}  // namespace vzhu
