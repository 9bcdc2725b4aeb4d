#pragma once

#include <map>

#include "asf/rational.hpp"

namespace asf {

/// Sparse element of the Lie algebra in its Chevalley basis
/// {e_alpha : alpha a root} union {h_i = alpha_i^vee : i < rank}.
///
/// Basis keys: key >= 0 is the root index of e_alpha; key < 0 encodes the
/// Cartan generator h_i as -1 - i. Zero coefficients are never stored, so
/// equality of maps is equality of elements.
class LieElt {
 public:
  LieElt() = default;

  static int e_key(int root_idx) { return root_idx; }
  static int h_key(int cartan_idx) { return -1 - cartan_idx; }
  static bool is_e_key(int key) { return key >= 0; }
  static int root_index(int key) { return key; }
  static int cartan_index(int key) { return -1 - key; }

  static LieElt e(int root_idx, Rat c = 1) {
    LieElt x;
    x.add(e_key(root_idx), c);
    return x;
  }
  static LieElt h(int cartan_idx, Rat c = 1) {
    LieElt x;
    x.add(h_key(cartan_idx), c);
    return x;
  }

  bool is_zero() const { return coeffs_.empty(); }
  std::size_t support_size() const { return coeffs_.size(); }
  const std::map<int, Rat>& terms() const { return coeffs_; }

  Rat coeff(int key) const {
    auto it = coeffs_.find(key);
    return it == coeffs_.end() ? Rat(0) : it->second;
  }

  void add(int key, const Rat& c) {
    if (c == 0) return;
    auto [it, inserted] = coeffs_.emplace(key, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) coeffs_.erase(it);
    }
  }

  LieElt& operator+=(const LieElt& o) {
    for (const auto& [k, c] : o.coeffs_) add(k, c);
    return *this;
  }
  LieElt& operator-=(const LieElt& o) {
    for (const auto& [k, c] : o.coeffs_) add(k, -c);
    return *this;
  }
  LieElt& operator*=(const Rat& s) {
    if (s == 0) {
      coeffs_.clear();
    } else {
      for (auto& [k, c] : coeffs_) c *= s;
    }
    return *this;
  }

  friend LieElt operator+(LieElt a, const LieElt& b) { return a += b; }
  friend LieElt operator-(LieElt a, const LieElt& b) { return a -= b; }
  friend LieElt operator*(LieElt a, const Rat& s) { return a *= s; }
  friend LieElt operator*(const Rat& s, LieElt a) { return a *= s; }
  friend LieElt operator-(LieElt a) { return a *= Rat(-1); }

  bool operator==(const LieElt&) const = default;

 private:
  std::map<int, Rat> coeffs_;
};

/// True when every term is some e_alpha with alpha > 0 (an element of the
/// nilradical n).
inline bool supported_in_n(const LieElt& x, int nu) {
  for (const auto& [k, c] : x.terms())
    if (!LieElt::is_e_key(k) || LieElt::root_index(k) >= nu) return false;
  return true;
}

}  // namespace asf
