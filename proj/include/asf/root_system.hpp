#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <vector>

#include "asf/cartan.hpp"
#include "asf/rational.hpp"

namespace asf {

/// A root in simple-root coordinates.
using RootCoords = std::vector<int>;

/// The full root system of a simple type.
///
/// Roots are indexed 0 .. 2*nu-1: positions [0, nu) hold the positive roots
/// sorted by (height, lexicographic coordinates), and position nu + i holds
/// the negative of positive root i. This index order is the canonical basis
/// order used everywhere, including serialization.
class RootSystem {
 public:
  explicit RootSystem(CartanType type)
      : type_(type), cartan_(type.cartan_matrix()), d_(type.symmetrizer()) {
    generate_roots();
    build_simple_reflections();
  }

  const CartanType& type() const { return type_; }
  int rank() const { return type_.rank; }
  int nu() const { return nu_; }
  int num_roots() const { return 2 * nu_; }
  int max_height() const { return max_height_; }
  const std::vector<std::vector<int>>& cartan_matrix() const { return cartan_; }
  const std::vector<int>& sym_d() const { return d_; }

  const RootCoords& root(int idx) const { return roots_[idx]; }
  const std::vector<RootCoords>& roots() const { return roots_; }

  bool is_positive(int idx) const { return idx < nu_; }

  /// Index of -root(idx).
  int negate(int idx) const { return idx < nu_ ? idx + nu_ : idx - nu_; }

  /// Height = sum of simple-root coordinates (negative for negative roots).
  int height(int idx) const { return heights_[idx]; }

  std::optional<int> index_of(const RootCoords& c) const {
    auto it = index_.find(c);
    if (it == index_.end()) return std::nullopt;
    return it->second;
  }

  bool is_root(const RootCoords& c) const { return index_.contains(c); }

  /// (x, y) under the W-invariant form with short roots of squared length 2.
  long long inner(const RootCoords& x, const RootCoords& y) const {
    long long s = 0;
    for (int i = 0; i < rank(); ++i)
      for (int j = 0; j < rank(); ++j)
        s += static_cast<long long>(x[i]) * y[j] * cartan_[i][j] * d_[j];
    return s;
  }

  long long norm2(int idx) const { return norm2_[idx]; }

  /// <x, alpha_j^vee> for x in the root lattice.
  int pairing_with_simple_coroot(const RootCoords& x, int j) const {
    int s = 0;
    for (int i = 0; i < rank(); ++i) s += x[i] * cartan_[i][j];
    return s;
  }

  /// Index of s_j(root(idx)).
  int simple_reflect(int j, int idx) const { return simple_perm_[j][idx]; }
  const std::vector<int>& simple_reflection_perm(int j) const { return simple_perm_[j]; }

  /// Positive roots are closed under addition whenever the sum is a root;
  /// convenience lookup for alpha + beta.
  std::optional<int> sum_index(int a, int b) const {
    RootCoords s = roots_[a];
    for (int i = 0; i < rank(); ++i) s[i] += roots_[b][i];
    return index_of(s);
  }

 private:
  void generate_roots() {
    const int n = rank();
    std::map<RootCoords, bool> seen;  // value: processed
    std::vector<RootCoords> queue;
    for (int i = 0; i < n; ++i) {
      RootCoords a(n, 0);
      a[i] = 1;
      seen.emplace(a, false);
      queue.push_back(a);
    }
    // Closure under the simple reflections s_j(x) = x - <x, alpha_j^vee> alpha_j.
    while (!queue.empty()) {
      RootCoords x = queue.back();
      queue.pop_back();
      for (int j = 0; j < n; ++j) {
        RootCoords y = x;
        y[j] -= pairing_with_simple_coroot(x, j);
        if (seen.emplace(y, false).second) queue.push_back(y);
      }
    }

    std::vector<RootCoords> pos;
    for (const auto& [c, _] : seen) {
      bool nonneg = std::all_of(c.begin(), c.end(), [](int v) { return v >= 0; });
      if (nonneg) pos.push_back(c);
    }
    auto ht = [](const RootCoords& c) {
      int s = 0;
      for (int v : c) s += v;
      return s;
    };
    std::sort(pos.begin(), pos.end(), [&](const RootCoords& a, const RootCoords& b) {
      int ha = ht(a), hb = ht(b);
      if (ha != hb) return ha < hb;
      return a < b;
    });

    nu_ = static_cast<int>(pos.size());
    internal_check(static_cast<int>(seen.size()) == 2 * nu_,
                   "root generation produced an asymmetric set");
    roots_ = pos;
    for (const RootCoords& c : pos) {
      RootCoords neg(c);
      for (int& v : neg) v = -v;
      roots_.push_back(neg);
    }
    heights_.resize(roots_.size());
    norm2_.resize(roots_.size());
    max_height_ = 0;
    for (std::size_t i = 0; i < roots_.size(); ++i) {
      heights_[i] = ht(roots_[i]);
      norm2_[i] = inner(roots_[i], roots_[i]);
      max_height_ = std::max(max_height_, heights_[i]);
      index_.emplace(roots_[i], static_cast<int>(i));
    }
  }

  void build_simple_reflections() {
    simple_perm_.assign(rank(), std::vector<int>(roots_.size()));
    for (int j = 0; j < rank(); ++j)
      for (std::size_t i = 0; i < roots_.size(); ++i) {
        RootCoords y = roots_[i];
        y[j] -= pairing_with_simple_coroot(roots_[i], j);
        auto idx = index_of(y);
        internal_check(idx.has_value(), "simple reflection left the root set");
        simple_perm_[j][i] = *idx;
      }
  }

  CartanType type_;
  std::vector<std::vector<int>> cartan_;
  std::vector<int> d_;
  std::vector<RootCoords> roots_;
  std::vector<int> heights_;
  std::vector<long long> norm2_;
  std::map<RootCoords, int> index_;
  std::vector<std::vector<int>> simple_perm_;
  int nu_ = 0;
  int max_height_ = 0;
};

inline RootSystem build(CartanType type) { return RootSystem(type); }

/// A Cartan element h given by its pairings v_i = alpha_i(h) with the simple
/// roots. This is the minimal data every formula below needs: alpha(h) extends
/// linearly to all roots.
struct CartanElt {
  std::vector<Rat> simple_values;

  Rat alpha_value(const RootSystem& rs, int root_idx) const {
    const RootCoords& c = rs.root(root_idx);
    Rat s = 0;
    for (int i = 0; i < rs.rank(); ++i) s += Rat(c[i]) * simple_values[i];
    return s;
  }

  bool operator==(const CartanElt&) const = default;
};

inline bool is_regular(const CartanElt& h, const RootSystem& rs) {
  for (int i = 0; i < rs.nu(); ++i)
    if (h.alpha_value(rs, i) == 0) return false;
  return true;
}

/// First positive root with alpha(h) = 0, if any. Used for error reporting.
inline std::optional<int> vanishing_root(const CartanElt& h, const RootSystem& rs) {
  for (int i = 0; i < rs.nu(); ++i)
    if (h.alpha_value(rs, i) == 0) return i;
  return std::nullopt;
}

}  // namespace asf
