#pragma once

#include <algorithm>
#include <optional>
#include <vector>

#include "asf/laurent.hpp"
#include "asf/weyl.hpp"

namespace asf {

/// The solved correction sequence E_1, E_2, ..., E_m (m = max_height,
/// zero-padded) attached to a regular h. Its defining property: the principal
/// part sum_r eps^{-r} E_r conjugates eps*h into L, i.e. exp(ad .) cancels
/// every pole.
struct ESequence {
  CartanElt h;
  std::vector<LieElt> e_terms;  // e_terms[r-1] = E_r

  const LieElt& term(int r) const { return e_terms[r - 1]; }
  bool operator==(const ESequence&) const = default;
};

namespace detail {

inline void check_solver_inputs(const RootSystem& rs, const CartanElt& h, const LieElt& e1) {
  require(static_cast<int>(h.simple_values.size()) == rs.rank(), "h has wrong rank");
  if (auto bad = vanishing_root(h, rs))
    throw std::invalid_argument("h is not regular: alpha(h) = 0 for positive root index " +
                                std::to_string(*bad));
  require(supported_in_n(e1, rs.nu()), "E must be supported in n");
}

/// Nested-bracket sums B_m(s) = sum over compositions i_1+...+i_m = s of
/// [E_{i_1}, [E_{i_2}, [... [E_{i_m}, h] ...]]], computed by the recursion
/// B_1(s) = [E_s, h], B_m(s) = sum_i [E_i, B_{m-1}(s-i)]. Memoized so the
/// whole recursion costs O(depth^3) brackets instead of one term per
/// composition.
class BracketSums {
 public:
  BracketSums(const StructureTable& st, LieElt h_lie, const std::vector<LieElt>& e_terms)
      : st_(st), h_lie_(std::move(h_lie)), e_terms_(e_terms) {}

  const LieElt& get(int m, int s) {
    auto& slot = memo_[{m, s}];
    if (slot) return *slot;
    LieElt v;
    if (m == 1) {
      if (s <= static_cast<int>(e_terms_.size())) v = st_.bracket(e_terms_[s - 1], h_lie_);
    } else {
      for (int i = 1; i <= s - (m - 1); ++i) {
        if (i <= static_cast<int>(e_terms_.size()) && !e_terms_[i - 1].is_zero()) {
          const LieElt& inner = get(m - 1, s - i);
          if (!inner.is_zero()) v += st_.bracket(e_terms_[i - 1], inner);
        }
      }
    }
    slot = std::move(v);
    return *slot;
  }

  /// Right-hand side of the depth-r step:
  ///   [E_r, h] = - sum_{k >= 2} (1/k!) B_k(r).
  LieElt rhs(int r) {
    LieElt out;
    Rat inv_fact = 1;  // 1/k!
    for (int k = 2; k <= r; ++k) {
      inv_fact /= k;
      const LieElt& b = get(k, r);
      if (!b.is_zero()) out += b * inv_fact;
    }
    out *= Rat(-1);
    return out;
  }

 private:
  const StructureTable& st_;
  LieElt h_lie_;
  // Aliases the caller's sequence on purpose: solve_direct fills terms in
  // while the memo grows, and entry (m, s) only ever reads E_i with i < s,
  // all of which are final before (m, s) is first computed.
  const std::vector<LieElt>& e_terms_;
  std::map<std::pair<int, int>, std::optional<LieElt>> memo_;
};

}  // namespace detail

/// Solves the pole-cancellation recursion term by term: E_1 = E and, for each
/// r >= 2, [E_r, h] equals minus the full multilinear tail
/// sum_{k>=2} (1/k!) sum_{i_1+...+i_k=r} [E_{i_1}, [... [E_{i_k}, h]]],
/// recovered through ad_h_inverse. The recursion provably dies at
/// r = max_height; the window beyond is asserted to vanish.
inline ESequence solve_direct(const StructureTable& st, const CartanElt& h, const LieElt& e1) {
  const RootSystem& rs = st.rs();
  detail::check_solver_inputs(rs, h, e1);
  const int mh = rs.max_height();
  ESequence seq{h, std::vector<LieElt>(static_cast<std::size_t>(mh))};
  seq.e_terms[0] = e1;
  LieElt h_lie = cartan_to_lie(rs, h);
  detail::BracketSums sums(st, h_lie, seq.e_terms);
  for (int r = 2; r <= mh; ++r) seq.e_terms[r - 1] = ad_h_inverse(rs, h, sums.rhs(r));
  for (int r = mh + 1; r <= 2 * mh; ++r)
    internal_check(sums.rhs(r).is_zero(), "recursion fails to terminate at depth " +
                                              std::to_string(r));
  return seq;
}

/// Same output as solve_direct, computed differently: maintain the partial
/// principal part EE = sum_{i<r} eps^{-i} E_i, read the eps^{-r+1} coefficient
/// c of exp(ad EE)(eps h), and cancel it with E_r = ad_h_inverse(-c).
inline ESequence solve_incremental(const StructureTable& st, const CartanElt& h,
                                   const LieElt& e1) {
  const RootSystem& rs = st.rs();
  detail::check_solver_inputs(rs, h, e1);
  const int mh = rs.max_height();
  ESequence seq{h, std::vector<LieElt>(static_cast<std::size_t>(mh))};
  seq.e_terms[0] = e1;
  LaurentLie ee = LaurentLie::term(-1, e1);
  const LaurentLie eh = eps_h(rs, h);
  for (int r = 2; r <= mh; ++r) {
    LieElt c = exp_ad_apply(st, ee, eh).coefficient(-r + 1);
    LieElt er = ad_h_inverse(rs, h, -c);
    seq.e_terms[r - 1] = er;
    ee.add(-r, er);
  }
  // One final conjugation: every pole beyond depth max_height must already be
  // cancelled, so no further corrections exist.
  internal_check(in_L(exp_ad_apply(st, ee, eh)),
                 "solved sequence leaves poles beyond max_height");
  return seq;
}

/// The principal part EE = sum_r eps^{-r} E_r built from the solved sequence.
/// Its eps^{-1} coefficient is E again, and exp(ad EE)(eps h) lies in L.
inline LaurentLie principal_part(const ESequence& seq) {
  LaurentLie ee;
  for (std::size_t r = 1; r <= seq.e_terms.size(); ++r)
    ee.add(-static_cast<int>(r), seq.e_terms[r - 1]);
  return ee;
}

inline LaurentLie phi_inverse(const StructureTable& st, const CartanElt& h, const LieElt& e1) {
  return principal_part(solve_incremental(st, h, e1));
}

/// Membership in omega = {EE in n(F)' : exp(ad EE)(eps h) has no poles}.
inline bool verify_omega(const StructureTable& st, const CartanElt& h, const LaurentLie& x) {
  require(in_n_F_neg(st.rs(), x), "verify_omega: x must lie in n(F)'");
  return in_L(exp_ad_apply(st, x, eps_h(st.rs(), h)));
}

/// The eps^0 coefficient of exp(ad phi_inverse(E))(eps h). All lower
/// coefficients vanish, and the result equals [E, h] under this library's
/// convention [e_alpha, h] = -alpha(h) e_alpha; in particular E can be
/// recovered from it with ad_h_inverse.
inline LieElt leading_term(const StructureTable& st, const CartanElt& h, const LieElt& e1) {
  LaurentLie img = exp_ad_apply(st, phi_inverse(st, h, e1), eps_h(st.rs(), h));
  internal_check(in_L(img), "leading_term: conjugated element has poles");
  return img.coefficient(0);
}

/// A point of the Steinberg fibre: a nilpotent element together with the
/// Bruhat-cell label w of a Borel containing it, normalized so the nilpotent
/// is supported on the coinversion roots of w.
struct SteinbergPoint {
  LieElt nilpotent;
  WeylElem w;
  bool operator==(const SteinbergPoint&) const = default;
};

/// Either an accepted point or the list of positive roots in supp(-[E,h])
/// that escape n intersected with the T-fixed Borel of cell w.
struct SteinbergImage {
  std::optional<SteinbergPoint> point;
  std::vector<int> violating_roots;

  bool accepted() const { return point.has_value(); }
};

inline SteinbergImage steinberg_image(const StructureTable& st, const CartanElt& h,
                                      const LieElt& e1, const WeylElem& w) {
  const RootSystem& rs = st.rs();
  detail::check_solver_inputs(rs, h, e1);
  LieElt n = -st.bracket(e1, cartan_to_lie(rs, h));
  InversionData inv = inversion_data(rs, w);
  std::vector<int> violating;
  for (const auto& [k, c] : n.terms()) {
    bool ok = std::binary_search(inv.coinversions.begin(), inv.coinversions.end(), k);
    if (!ok) violating.push_back(k);
  }
  SteinbergImage out;
  if (violating.empty())
    out.point = SteinbergPoint{std::move(n), w};
  else
    out.violating_roots = std::move(violating);
  return out;
}

}  // namespace asf
