#pragma once

#include <map>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

#include "asf/root_system.hpp"

namespace asf {

struct group_too_large : std::runtime_error {
  explicit group_too_large(const std::string& msg) : std::runtime_error(msg) {}
};

/// A Weyl group element, stored both as its action on the root list (perm) and
/// as the lexicographically smallest reduced word in simple reflections.
struct WeylElem {
  std::vector<int> perm;  // perm[i] = index of w(root_i)
  std::vector<int> word;  // 0-based simple reflection indices

  int length() const { return static_cast<int>(word.size()); }
  int apply(int root_idx) const { return perm[root_idx]; }

  std::vector<int> inverse_perm() const {
    std::vector<int> inv(perm.size());
    for (std::size_t i = 0; i < perm.size(); ++i) inv[perm[i]] = static_cast<int>(i);
    return inv;
  }

  /// "e" for the identity, otherwise e.g. "s1*s3*s2" (1-based generators).
  std::string word_str() const {
    if (word.empty()) return "e";
    std::string s;
    for (std::size_t i = 0; i < word.size(); ++i) {
      if (i) s += '*';
      s += 's' + std::to_string(word[i] + 1);
    }
    return s;
  }

  bool operator==(const WeylElem& o) const { return perm == o.perm; }
};

inline WeylElem weyl_identity(const RootSystem& rs) {
  WeylElem w;
  w.perm.resize(rs.num_roots());
  std::iota(w.perm.begin(), w.perm.end(), 0);
  return w;
}

/// Breadth-first closure of {identity} under right multiplication by simple
/// reflections. Output is sorted by (length, lexicographic word); each element
/// carries its lex-smallest reduced word. Throws group_too_large when more
/// than `cap` elements appear.
inline std::vector<WeylElem> weyl_enumerate(const RootSystem& rs, std::size_t cap = 10000) {
  std::vector<WeylElem> out;
  std::map<std::vector<int>, int> seen;

  WeylElem id = weyl_identity(rs);
  seen.emplace(id.perm, 0);
  out.push_back(std::move(id));

  std::size_t level_begin = 0;
  while (level_begin < out.size()) {
    std::size_t level_end = out.size();
    for (std::size_t i = level_begin; i < level_end; ++i)
      for (int j = 0; j < rs.rank(); ++j) {
        // (w s_j)(root) = w(s_j(root))
        std::vector<int> p(rs.num_roots());
        const std::vector<int>& sj = rs.simple_reflection_perm(j);
        for (int r = 0; r < rs.num_roots(); ++r) p[r] = out[i].perm[sj[r]];
        if (seen.contains(p)) continue;
        if (out.size() >= cap)
          throw group_too_large("group too large: Weyl enumeration exceeds cap " +
                                std::to_string(cap));
        WeylElem w;
        w.perm = std::move(p);
        w.word = out[i].word;
        w.word.push_back(j);
        seen.emplace(w.perm, static_cast<int>(out.size()));
        out.push_back(std::move(w));
      }
    level_begin = level_end;
  }
  return out;
}

struct InversionData {
  std::vector<int> inversions;    // positive root indices alpha with w^-1(alpha) < 0
  std::vector<int> coinversions;  // positive root indices alpha with w^-1(alpha) > 0
};

inline InversionData inversion_data(const RootSystem& rs, const WeylElem& w) {
  InversionData d;
  std::vector<int> inv = w.inverse_perm();
  for (int a = 0; a < rs.nu(); ++a) {
    if (rs.is_positive(inv[a]))
      d.coinversions.push_back(a);
    else
      d.inversions.push_back(a);
  }
  return d;
}

/// |W| from the positive-root heights alone: the product of (ht+1)/ht over all
/// positive roots. Independent of the breadth-first enumeration, so the two
/// routes cross-check each other.
inline Int weyl_order_from_heights(const RootSystem& rs) {
  Rat prod = 1;
  for (int i = 0; i < rs.nu(); ++i) {
    int ht = rs.height(i);
    prod *= Rat(ht + 1, ht);
  }
  internal_check(denominator(prod) == 1, "height product for |W| is not an integer");
  return numerator(prod);
}

}  // namespace asf
