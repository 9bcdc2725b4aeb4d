#pragma once

#include <cstdlib>
#include <utility>
#include <vector>

#include "asf/lie_elt.hpp"
#include "asf/root_system.hpp"

namespace asf {

/// Chevalley-basis structure constants of the simple Lie algebra attached to a
/// root system, with all brackets exact over the rationals.
///
/// Signs follow the extraspecial-pair convention: positive roots are totally
/// ordered by (height, lex), and for each non-simple positive root gamma the
/// decomposition gamma = alpha + beta with alpha minimal gets
/// N_{alpha,beta} = +(p+1). Every other constant is forced from these by
/// antisymmetry, negation, and the cyclic identity
/// N_{a,b}/(c,c) = N_{b,c}/(a,a) = N_{c,a}/(b,b) for a+b+c = 0.
class StructureTable {
 public:
  explicit StructureTable(RootSystem rs) : rs_(std::move(rs)) {
    build_positive_constants();
    build_table();
  }

  const RootSystem& rs() const { return rs_; }

  /// Basis size of g: 2*nu root vectors plus rank Cartan generators.
  int dim() const { return rs_.num_roots() + rs_.rank(); }

  /// [basis(ka), basis(kb)] as a (usually very sparse) element.
  const LieElt& basis_bracket(int ka, int kb) const {
    return table_[slot(ka) * dim() + slot(kb)];
  }

  /// Bilinear extension of the basis table.
  LieElt bracket(const LieElt& x, const LieElt& y) const {
    LieElt out;
    for (const auto& [kx, cx] : x.terms())
      for (const auto& [ky, cy] : y.terms()) {
        const LieElt& e = basis_bracket(kx, ky);
        if (e.is_zero()) continue;
        Rat s = cx * cy;
        for (const auto& [k, c] : e.terms()) out.add(k, c * s);
      }
    return out;
  }

  /// N_{alpha,beta} for root indices with alpha + beta a root (0 otherwise;
  /// the beta = -alpha case is a coroot, not an N).
  long long structure_constant(int i, int j) const {
    if (!rs_.sum_index(i, j)) return 0;
    return n_of(i, j);
  }

  /// Largest k >= 0 with beta - k*alpha still a root (the string length above
  /// beta in direction -alpha). |N_{alpha,beta}| = p+1 whenever alpha+beta is
  /// a root.
  int p_value(int i, int j) const {
    RootCoords c = rs_.root(j);
    int k = 0;
    while (true) {
      for (int t = 0; t < rs_.rank(); ++t) c[t] -= rs_.root(i)[t];
      if (!rs_.is_root(c)) return k;
      ++k;
    }
  }

  /// Test hook: replaces one table entry (and nothing else), so verification
  /// layers can prove they detect inconsistent tables.
  void override_basis_bracket(int ka, int kb, LieElt value) {
    table_[slot(ka) * dim() + slot(kb)] = std::move(value);
  }

 private:
  int slot(int key) const {
    return LieElt::is_e_key(key) ? key : rs_.num_roots() + LieElt::cartan_index(key);
  }

  // a/b * n with exact divisibility.
  static long long scaled(long long a, long long b, long long n) {
    long long num = a * n;
    internal_check(num % b == 0, "structure constant scaling is not integral");
    return num / b;
  }

  /// N_{xi,eta} for arbitrary root indices whose sum is a root. Reduces to the
  /// stored positive-pair constants.
  long long n_of(int i, int j) const {
    bool pi = rs_.is_positive(i), pj = rs_.is_positive(j);
    if (pi && pj) return pos_n_[i][j];
    if (!pi && !pj) return -n_of(rs_.negate(i), rs_.negate(j));
    int s = *rs_.sum_index(i, j);
    int z = rs_.negate(s);  // xi + eta + zeta = 0
    if (rs_.is_positive(j) == rs_.is_positive(z))
      return scaled(rs_.norm2(z), rs_.norm2(i), n_of(j, z));
    return scaled(rs_.norm2(z), rs_.norm2(j), n_of(z, i));
  }

  void build_positive_constants() {
    const int nu = rs_.nu();
    pos_n_.assign(nu, std::vector<long long>(nu, 0));
    // Positive roots come sorted by (height, lex), so iterating by index
    // processes sums only after both summands.
    for (int g = 0; g < nu; ++g) {
      if (rs_.height(g) == 1) continue;
      std::vector<std::pair<int, int>> pairs;  // a < b with root(a)+root(b) = root(g)
      for (int a = 0; a < nu; ++a) {
        RootCoords diff = rs_.root(g);
        for (int t = 0; t < rs_.rank(); ++t) diff[t] -= rs_.root(a)[t];
        auto b = rs_.index_of(diff);
        if (b && *b < nu && a < *b) pairs.emplace_back(a, *b);
      }
      internal_check(!pairs.empty(), "non-simple positive root with no decomposition");

      // Extraspecial pair: minimal first member. Sign fixed to +.
      auto [a1, b1] = pairs.front();
      pos_n_[a1][b1] = p_value(a1, b1) + 1;
      pos_n_[b1][a1] = -pos_n_[a1][b1];

      // Remaining special pairs, from the Jacobi identity on (e_a, e_b, e_{-a1}):
      //   N_{a,b} N_{g,-a1} + N_{b,-a1} N_{b-a1,a} + N_{-a1,a} N_{a-a1,b} = 0.
      for (std::size_t t = 1; t < pairs.size(); ++t) {
        auto [a, b] = pairs[t];
        long long den = n_of(g, rs_.negate(a1));
        internal_check(den != 0, "degenerate extraspecial constant");
        long long t2 = 0, t3 = 0;
        RootCoords bma = rs_.root(b), ama = rs_.root(a);
        for (int q = 0; q < rs_.rank(); ++q) {
          bma[q] -= rs_.root(a1)[q];
          ama[q] -= rs_.root(a1)[q];
        }
        if (auto r = rs_.index_of(bma)) t2 = n_of(b, rs_.negate(a1)) * n_of(*r, a);
        if (auto r = rs_.index_of(ama)) t3 = n_of(rs_.negate(a1), a) * n_of(*r, b);
        long long num = -(t2 + t3);
        internal_check(num % den == 0, "special-pair constant is not integral");
        long long nab = num / den;
        internal_check(std::llabs(nab) == p_value(a, b) + 1,
                       "special-pair constant has wrong magnitude");
        pos_n_[a][b] = nab;
        pos_n_[b][a] = -nab;
      }
    }
  }

  // Coroot of root(i) in the basis h_k = alpha_k^vee; always has integer
  // coordinates.
  LieElt coroot(int i) const {
    LieElt out;
    long long di = rs_.norm2(i) / 2;
    for (int k = 0; k < rs_.rank(); ++k) {
      long long num = static_cast<long long>(rs_.root(i)[k]) * rs_.sym_d()[k];
      internal_check(num % di == 0, "coroot has non-integral coordinates");
      out.add(LieElt::h_key(k), Rat(num / di));
    }
    return out;
  }

  void build_table() {
    const int d = dim();
    const int nr = rs_.num_roots();
    table_.assign(static_cast<std::size_t>(d) * d, LieElt{});
    auto at = [&](int sa, int sb) -> LieElt& {
      return table_[static_cast<std::size_t>(sa) * d + sb];
    };
    for (int i = 0; i < nr; ++i) {
      for (int j = 0; j < nr; ++j) {
        if (j == rs_.negate(i)) {
          at(i, j) = coroot(i);
        } else if (auto s = rs_.sum_index(i, j)) {
          at(i, j) = LieElt::e(*s, Rat(n_of(i, j)));
        }
      }
      // [e_alpha, h_k] = -<alpha, alpha_k^vee> e_alpha
      for (int k = 0; k < rs_.rank(); ++k) {
        int pairing = rs_.pairing_with_simple_coroot(rs_.root(i), k);
        if (pairing == 0) continue;
        at(i, nr + k) = LieElt::e(i, Rat(-pairing));
        at(nr + k, i) = LieElt::e(i, Rat(pairing));
      }
    }
    // [h, h'] = 0: already zero-initialized.
  }

  RootSystem rs_;
  std::vector<std::vector<long long>> pos_n_;
  std::vector<LieElt> table_;
};

inline StructureTable structure_constants(const RootSystem& rs) { return StructureTable(rs); }

/// The unique E in n with [E, h] = x, for regular h and x supported in n.
/// Coefficientwise this divides by -alpha(h).
inline LieElt ad_h_inverse(const RootSystem& rs, const CartanElt& h, const LieElt& x) {
  if (auto bad = vanishing_root(h, rs))
    throw std::invalid_argument("ad_h_inverse: h is not regular, alpha(h) = 0 for root index " +
                                std::to_string(*bad));
  LieElt out;
  for (const auto& [k, c] : x.terms()) {
    require(LieElt::is_e_key(k) && k < rs.nu(), "ad_h_inverse: support outside n");
    out.add(k, c / -h.alpha_value(rs, k));
  }
  return out;
}

/// Depth of x in the lower central series of n: the minimum root height over
/// the support. By convention the zero element reports max_height + 1, which
/// acts as +infinity in every filtration inequality.
inline int filtration_degree(const RootSystem& rs, const LieElt& x) {
  int deg = rs.max_height() + 1;
  for (const auto& [k, c] : x.terms()) {
    require(LieElt::is_e_key(k) && k < rs.nu(), "filtration_degree: support outside n");
    deg = std::min(deg, rs.height(k));
  }
  return deg;
}

/// exp(ad x)(y) for x supported in n, summed exactly; the series terminates
/// because ad x strictly raises the height grading of g.
inline LieElt exp_ad_nilpotent(const StructureTable& st, const LieElt& x, const LieElt& y) {
  require(supported_in_n(x, st.rs().nu()), "exp_ad_nilpotent: x must be supported in n");
  const int bound = 2 * st.rs().max_height() + 1;
  LieElt acc = y;
  LieElt term = y;
  for (int k = 1; ; ++k) {
    term = st.bracket(x, term);
    if (term.is_zero()) break;
    internal_check(k <= bound, "exp_ad series failed to terminate");
    term *= Rat(1, k);
    acc += term;
  }
  return acc;
}

/// h as an element of the Cartan subalgebra in the basis h_k = alpha_k^vee;
/// solves the rank-sized linear system A x = v given by the Cartan matrix.
inline LieElt cartan_to_lie(const RootSystem& rs, const CartanElt& h) {
  const int n = rs.rank();
  require(static_cast<int>(h.simple_values.size()) == n, "CartanElt has wrong rank");
  std::vector<std::vector<Rat>> m(n, std::vector<Rat>(n + 1));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) m[i][j] = Rat(rs.cartan_matrix()[i][j]);
    m[i][n] = h.simple_values[i];
  }
  // Gauss-Jordan; the Cartan matrix is invertible over Q.
  for (int col = 0; col < n; ++col) {
    int piv = -1;
    for (int r = col; r < n; ++r)
      if (m[r][col] != 0) {
        piv = r;
        break;
      }
    internal_check(piv >= 0, "Cartan matrix is singular");
    std::swap(m[col], m[piv]);
    Rat inv = Rat(1) / m[col][col];
    for (int c = col; c <= n; ++c) m[col][c] *= inv;
    for (int r = 0; r < n; ++r) {
      if (r == col || m[r][col] == 0) continue;
      Rat f = m[r][col];
      for (int c = col; c <= n; ++c) m[r][c] -= f * m[col][c];
    }
  }
  LieElt out;
  for (int i = 0; i < n; ++i) out.add(LieElt::h_key(i), m[i][n]);
  return out;
}

}  // namespace asf
