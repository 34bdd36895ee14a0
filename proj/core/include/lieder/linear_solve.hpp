#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <utility>
#include <vector>

namespace lieder {

template <class F>
using SparseVector = std::map<std::size_t, F>;

/// v += c * w, dropping entries that cancel.
template <class F>
void axpy(SparseVector<F>& v, const F& c, const SparseVector<F>& w) {
  if (c.is_zero()) return;
  for (const auto& [col, x] : w) {
    auto [it, inserted] = v.try_emplace(col, c * x);
    if (!inserted) {
      it->second += c * x;
      if (it->second.is_zero()) v.erase(it);
    }
  }
}

template <class F>
F dot(const SparseVector<F>& a, const SparseVector<F>& b) {
  F total{};
  auto p = a.begin();
  auto q = b.begin();
  while (p != a.end() && q != b.end()) {
    if (p->first < q->first) {
      ++p;
    } else if (q->first < p->first) {
      ++q;
    } else {
      total += p->second * q->second;
      ++p;
      ++q;
    }
  }
  return total;
}

/// Incrementally maintained reduced row-echelon form over an exact field F.
/// Every stored row has leading coefficient one and is zero at the pivot
/// columns of all other rows. With tracking enabled, each stored row also
/// carries its expression as a combination of the inserted rows' ids.
template <class F>
class Echelon {
 public:
  using Vector = SparseVector<F>;

  explicit Echelon(bool track = false) : track_(track) {}

  /// Returns true if the row raised the rank.
  bool insert(Vector row, std::size_t id = 0) {
    Vector combo;
    if (track_) combo.emplace(id, F(1));
    reduce_in_place(row, track_ ? &combo : nullptr, F(-1));
    if (row.empty()) return false;
    const std::size_t pivot = row.begin()->first;
    const F inv = F(1) / row.begin()->second;
    for (auto& [col, x] : row) x *= inv;
    for (auto& [col, x] : combo) x *= inv;
    for (auto& stored : rows_) {
      auto it = stored.v.find(pivot);
      if (it == stored.v.end()) continue;
      const F c = -it->second;
      axpy(stored.v, c, row);
      if (track_) axpy(stored.combo, c, combo);
    }
    pivot_row_.emplace(pivot, rows_.size());
    rows_.push_back({std::move(row), std::move(combo)});
    return true;
  }

  /// Residual of v after elimination against the stored rows. If
  /// `combination` is given, v = residual + sum of combination[id] * row(id).
  Vector reduce(Vector v, Vector* combination = nullptr) const {
    if (combination) combination->clear();
    reduce_in_place(v, combination, F(1));
    return v;
  }

  bool contains(const Vector& v) const { return reduce(v).empty(); }
  std::size_t rank() const { return rows_.size(); }
  bool is_pivot(std::size_t col) const { return pivot_row_.count(col) != 0; }

  /// Given a nonzero residual r (as returned by `reduce`), a vector k with
  /// dot(row, k) = 0 for every inserted row and dot(r, k) != 0.
  Vector separating_vector(const Vector& residual) const {
    const std::size_t free_col = residual.begin()->first;
    Vector k;
    k.emplace(free_col, F(1));
    for (const auto& stored : rows_) {
      auto it = stored.v.find(free_col);
      if (it != stored.v.end()) k.emplace(stored.v.begin()->first, -it->second);
    }
    return k;
  }

  /// Solution of the system whose rows are [coefficients | rhs] with the
  /// right-hand side stored in column `rhs_col`, free unknowns set to zero;
  /// nullopt when inconsistent.
  std::optional<Vector> solve(std::size_t rhs_col) const {
    if (is_pivot(rhs_col)) return std::nullopt;
    Vector x;
    for (const auto& stored : rows_) {
      const std::size_t p = stored.v.begin()->first;
      auto it = stored.v.find(rhs_col);
      if (it != stored.v.end()) x.emplace(p, it->second);
    }
    return x;
  }

  /// Basis of {k : dot(row, k) = 0 for all inserted rows} restricted to
  /// columns [0, columns).
  std::vector<Vector> kernel_basis(std::size_t columns) const {
    std::vector<Vector> out;
    for (std::size_t f = 0; f < columns; ++f) {
      if (is_pivot(f)) continue;
      Vector k;
      k.emplace(f, F(1));
      for (const auto& stored : rows_) {
        auto it = stored.v.find(f);
        if (it != stored.v.end()) k.emplace(stored.v.begin()->first, -it->second);
      }
      out.push_back(std::move(k));
    }
    return out;
  }

 private:
  struct Row {
    Vector v;
    Vector combo;
  };

  // Eliminates every pivot column of v. `sign` is the factor applied to a
  // stored row's combination per unit of that row removed from v.
  void reduce_in_place(Vector& v, Vector* combination, const F& sign) const {
    std::vector<std::pair<std::size_t, F>> hits;
    for (const auto& [col, x] : v) {
      auto pr = pivot_row_.find(col);
      if (pr != pivot_row_.end()) hits.emplace_back(pr->second, x);
    }
    // Stored rows vanish at each other's pivots, so the coefficients read
    // before elimination are final.
    for (const auto& [row, x] : hits) {
      axpy(v, -x, rows_[row].v);
      if (combination) axpy(*combination, sign * x, rows_[row].combo);
    }
  }

  bool track_;
  std::vector<Row> rows_;
  std::map<std::size_t, std::size_t> pivot_row_;
};

}  // namespace lieder
