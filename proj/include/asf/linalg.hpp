#pragma once

#include <cstddef>
#include <vector>

#include "asf/lie_elt.hpp"
#include "asf/root_system.hpp"

namespace asf {

/// Flat coordinates over the full basis: slots [0, num_roots) are the root
/// vectors in index order, slots [num_roots, num_roots + rank) the Cartan
/// generators.
inline std::vector<Rat> to_dense(const RootSystem& rs, const LieElt& x) {
  std::vector<Rat> v(static_cast<std::size_t>(rs.num_roots() + rs.rank()));
  for (const auto& [k, c] : x.terms()) {
    int slot = k >= 0 ? k : rs.num_roots() + (-1 - k);
    v[static_cast<std::size_t>(slot)] = c;
  }
  return v;
}

/// Incremental row echelon form over Q, exact arithmetic throughout. Every
/// row is zero before its own pivot and rows are ordered by pivot column, so
/// reducing a vector is a single left-to-right elimination pass.
class RowEchelon {
 public:
  explicit RowEchelon(std::size_t width) : width_(width) {}

  std::vector<Rat> reduce(std::vector<Rat> v) const {
    internal_check(v.size() == width_, "row width mismatch");
    for (std::size_t i = 0; i < rows_.size(); ++i) {
      Rat f = v[pivots_[i]];
      if (f == 0) continue;
      for (std::size_t j = pivots_[i]; j < width_; ++j)
        if (rows_[i][j] != 0) v[j] -= f * rows_[i][j];
    }
    return v;
  }

  /// Returns true when v was independent of the rows seen so far.
  bool insert(std::vector<Rat> v) {
    v = reduce(std::move(v));
    std::size_t p = width_;
    for (std::size_t j = 0; j < width_; ++j)
      if (v[j] != 0) {
        p = j;
        break;
      }
    if (p == width_) return false;
    Rat inv = Rat(1) / v[p];
    for (std::size_t j = p; j < width_; ++j)
      if (v[j] != 0) v[j] *= inv;
    std::size_t at = 0;
    while (at < pivots_.size() && pivots_[at] < p) ++at;
    pivots_.insert(pivots_.begin() + static_cast<std::ptrdiff_t>(at), p);
    rows_.insert(rows_.begin() + static_cast<std::ptrdiff_t>(at), std::move(v));
    return true;
  }

  bool contains(const std::vector<Rat>& v) const {
    std::vector<Rat> r = reduce(v);
    for (const Rat& c : r)
      if (c != 0) return false;
    return true;
  }

  std::size_t rank() const { return rows_.size(); }
  std::size_t width() const { return width_; }

 private:
  std::size_t width_;
  std::vector<std::vector<Rat>> rows_;
  std::vector<std::size_t> pivots_;
};

}  // namespace asf
