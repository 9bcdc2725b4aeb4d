#pragma once

#include <set>
#include <vector>

#include "asf/chevalley.hpp"
#include "asf/linalg.hpp"
#include "asf/weyl.hpp"

namespace asf {

/// Label of one irreducible component: a Weyl element together with a
/// translation t in the coroot lattice, identified with Z^rank.
struct CellLabel {
  WeylElem w;
  std::vector<int> t;
  bool operator==(const CellLabel&) const = default;
};

struct CellReport {
  WeylElem w;
  int length = 0;
  int fibre_dim = 0;
  int cell_dim = 0;
  bool operator==(const CellReport&) const = default;
};

/// The positive roots spanning the fibre over the T-fixed point of the cell
/// of w: exactly the coinversions, nu - length(w) of them.
inline std::vector<int> fibre_roots(const RootSystem& rs, const WeylElem& w) {
  return inversion_data(rs, w).coinversions;
}

/// Chart of the Bruhat cell of w: the Borel subalgebra
/// exp(ad u)(t + span{e_{w(beta)} : beta > 0}) with u supported on the
/// inversion roots of w with the given coordinates. Returns a spanning list
/// of nu + rank elements.
inline std::vector<LieElt> borel_from_cell(const StructureTable& st, const WeylElem& w,
                                           const std::vector<Rat>& coords) {
  const RootSystem& rs = st.rs();
  InversionData inv = inversion_data(rs, w);
  require(coords.size() == inv.inversions.size(),
          "borel_from_cell: expected " + std::to_string(inv.inversions.size()) +
              " coordinates, got " + std::to_string(coords.size()));
  LieElt u;
  for (std::size_t i = 0; i < coords.size(); ++i)
    if (coords[i] != 0) u += LieElt::e(inv.inversions[i], coords[i]);

  std::vector<LieElt> basis;
  basis.reserve(static_cast<std::size_t>(rs.rank() + rs.nu()));
  for (int k = 0; k < rs.rank(); ++k) basis.push_back(LieElt::h(k, 1));
  for (int b = 0; b < rs.nu(); ++b) basis.push_back(LieElt::e(w.apply(b), 1));
  for (LieElt& v : basis) v = exp_ad_nilpotent(st, u, v);
  return basis;
}

/// dim(n int span(basis)), by exact ranks: dim(V) + dim(n) - dim(V + n).
inline int intersection_dim(const RootSystem& rs, const std::vector<LieElt>& basis) {
  RowEchelon re(static_cast<std::size_t>(rs.num_roots() + rs.rank()));
  for (const LieElt& b : basis) re.insert(to_dense(rs, b));
  int dim_v = static_cast<int>(re.rank());
  for (int a = 0; a < rs.nu(); ++a) {
    std::vector<Rat> unit(re.width());
    unit[static_cast<std::size_t>(a)] = 1;
    re.insert(std::move(unit));
  }
  return dim_v + rs.nu() - static_cast<int>(re.rank());
}

/// Exact check that span(basis) is closed under the bracket.
inline bool is_bracket_closed(const StructureTable& st, const std::vector<LieElt>& basis) {
  const RootSystem& rs = st.rs();
  RowEchelon re(static_cast<std::size_t>(rs.num_roots() + rs.rank()));
  for (const LieElt& b : basis) re.insert(to_dense(rs, b));
  for (std::size_t i = 0; i < basis.size(); ++i)
    for (std::size_t j = i + 1; j < basis.size(); ++j)
      if (!re.contains(to_dense(rs, st.bracket(basis[i], basis[j])))) return false;
  return true;
}

/// One report per Weyl element: length, fibre dimension nu - length, and
/// their sum (always nu).
inline std::vector<CellReport> cell_census(const RootSystem& rs, int cap = 10000) {
  std::vector<CellReport> out;
  for (WeylElem& w : weyl_enumerate(rs, cap)) {
    CellReport r;
    r.length = w.length();
    r.fibre_dim = rs.nu() - r.length;
    r.cell_dim = r.length + r.fibre_dim;
    r.w = std::move(w);
    out.push_back(std::move(r));
  }
  return out;
}

/// All labels (w, t) with t ranging over the box [-box, box]^rank, w over the
/// given elements; |ws| * (2*box+1)^rank labels in deterministic order.
inline std::vector<CellLabel> label_box(const RootSystem& rs, const std::vector<WeylElem>& ws,
                                        int box) {
  require(box >= 0, "label_box: box radius must be nonnegative");
  std::vector<std::vector<int>> ts;
  std::vector<int> t(static_cast<std::size_t>(rs.rank()), -box);
  for (;;) {
    ts.push_back(t);
    int k = 0;
    while (k < rs.rank() && t[static_cast<std::size_t>(k)] == box)
      t[static_cast<std::size_t>(k++)] = -box;
    if (k == rs.rank()) break;
    ++t[static_cast<std::size_t>(k)];
  }
  std::vector<CellLabel> labels;
  labels.reserve(ws.size() * ts.size());
  for (const WeylElem& w : ws)
    for (const std::vector<int>& tv : ts) labels.push_back(CellLabel{w, tv});
  return labels;
}

/// Orbit count of the translation action t0 : (w, t) -> (w, t + t0): orbits
/// are in bijection with the distinct w appearing among the labels.
inline int component_orbits(const std::vector<CellLabel>& labels) {
  std::set<std::vector<int>> ws;
  for (const CellLabel& l : labels) ws.insert(l.w.perm);
  return static_cast<int>(ws.size());
}

/// The base copy of the finite fibre inside the label set: w goes to (w, 0).
inline CellLabel steinberg_embedding(const RootSystem& rs, const WeylElem& w) {
  return CellLabel{w, std::vector<int>(static_cast<std::size_t>(rs.rank()), 0)};
}

}  // namespace asf
