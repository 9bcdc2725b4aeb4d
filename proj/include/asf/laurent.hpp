#pragma once

#include <map>

#include "asf/chevalley.hpp"
#include "asf/lie_elt.hpp"

namespace asf {

/// Finite-support Laurent element of g((eps)): a map from integer eps-exponents
/// to nonzero Lie algebra coefficients.
class LaurentLie {
 public:
  LaurentLie() = default;

  static LaurentLie term(int exponent, LieElt coeff) {
    LaurentLie x;
    x.add(exponent, std::move(coeff));
    return x;
  }

  bool is_zero() const { return terms_.empty(); }
  const std::map<int, LieElt>& terms() const { return terms_; }

  LieElt coefficient(int k) const {
    auto it = terms_.find(k);
    return it == terms_.end() ? LieElt{} : it->second;
  }

  void add(int exponent, const LieElt& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.emplace(exponent, c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  LaurentLie& operator+=(const LaurentLie& o) {
    for (const auto& [k, c] : o.terms_) add(k, c);
    return *this;
  }
  LaurentLie& operator-=(const LaurentLie& o) {
    for (const auto& [k, c] : o.terms_) add(k, -c);
    return *this;
  }
  LaurentLie& operator*=(const Rat& s) {
    if (s == 0) {
      terms_.clear();
    } else {
      for (auto& [k, c] : terms_) c *= s;
    }
    return *this;
  }
  friend LaurentLie operator+(LaurentLie a, const LaurentLie& b) { return a += b; }
  friend LaurentLie operator-(LaurentLie a, const LaurentLie& b) { return a -= b; }
  friend LaurentLie operator*(LaurentLie a, const Rat& s) { return a *= s; }

  bool operator==(const LaurentLie&) const = default;

 private:
  std::map<int, LieElt> terms_;
};

/// Exponent-wise convolution of the Lie bracket.
inline LaurentLie l_bracket(const StructureTable& st, const LaurentLie& x, const LaurentLie& y) {
  LaurentLie out;
  for (const auto& [i, xi] : x.terms())
    for (const auto& [j, yj] : y.terms()) out.add(i + j, st.bracket(xi, yj));
  return out;
}

/// Membership in L = A (x) g: no negative eps-exponents.
inline bool in_L(const LaurentLie& x) {
  return x.is_zero() || x.terms().begin()->first >= 0;
}

inline LieElt coefficient(const LaurentLie& x, int k) { return x.coefficient(k); }

/// x lies in n(F)' = the strictly-negative-exponent part with coefficients
/// in the nilradical.
inline bool in_n_F_neg(const RootSystem& rs, const LaurentLie& x) {
  for (const auto& [k, c] : x.terms())
    if (k >= 0 || !supported_in_n(c, rs.nu())) return false;
  return true;
}

/// exp(ad x)(y) for x in n(F)'. Every application of ad x strictly raises the
/// height grading of the coefficients, so the series is finite; the bound is
/// asserted, never used to truncate.
inline LaurentLie exp_ad_apply(const StructureTable& st, const LaurentLie& x,
                               const LaurentLie& y) {
  require(in_n_F_neg(st.rs(), x), "exp_ad_apply: x must lie in n(F)'");
  const int bound = 2 * st.rs().max_height() + 1;
  LaurentLie acc = y;
  LaurentLie term = y;
  for (int k = 1; ; ++k) {
    term = l_bracket(st, x, term);
    if (term.is_zero()) break;
    internal_check(k <= bound, "exp_ad_apply series failed to terminate");
    term *= Rat(1, k);
    acc += term;
  }
  return acc;
}

/// The element eps*h of L.
inline LaurentLie eps_h(const RootSystem& rs, const CartanElt& h) {
  return LaurentLie::term(1, cartan_to_lie(rs, h));
}

}  // namespace asf
