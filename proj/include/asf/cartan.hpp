#pragma once

#include <string>
#include <vector>

#include "asf/rational.hpp"

namespace asf {

/// A simple Cartan type such as A3, B2 or G2 (Bourbaki numbering throughout).
struct CartanType {
  char family = 'A';  // one of A B C D E F G
  int rank = 1;

  static bool admissible(char family, int rank) {
    switch (family) {
      case 'A': return rank >= 1;
      case 'B': return rank >= 2;
      case 'C': return rank >= 2;
      case 'D': return rank >= 4;
      case 'E': return rank == 6 || rank == 7 || rank == 8;
      case 'F': return rank == 4;
      case 'G': return rank == 2;
      default: return false;
    }
  }

  /// Parses "X<rank>", e.g. "G2" or "A12".
  static CartanType parse(const std::string& s) {
    require(s.size() >= 2, "Cartan type must look like \"A2\": \"" + s + "\"");
    char fam = s[0];
    int rk = 0;
    for (std::size_t i = 1; i < s.size(); ++i) {
      require(s[i] >= '0' && s[i] <= '9', "bad rank in Cartan type \"" + s + "\"");
      rk = rk * 10 + (s[i] - '0');
      require(rk <= 64, "rank out of range in \"" + s + "\"");
    }
    require(admissible(fam, rk), "inadmissible Cartan type \"" + s + "\"");
    return CartanType{fam, rk};
  }

  std::string str() const { return std::string(1, family) + std::to_string(rank); }

  bool operator==(const CartanType&) const = default;

  /// Cartan matrix A[i][j] = <alpha_i, alpha_j^vee>.
  std::vector<std::vector<int>> cartan_matrix() const {
    const int n = rank;
    std::vector<std::vector<int>> a(n, std::vector<int>(n, 0));
    for (int i = 0; i < n; ++i) a[i][i] = 2;
    auto edge = [&](int i, int j) { a[i][j] = -1; a[j][i] = -1; };
    switch (family) {
      case 'A':
        for (int i = 0; i + 1 < n; ++i) edge(i, i + 1);
        break;
      case 'B':  // alpha_n short
        for (int i = 0; i + 1 < n; ++i) edge(i, i + 1);
        a[n - 2][n - 1] = -2;
        break;
      case 'C':  // alpha_n long
        for (int i = 0; i + 1 < n; ++i) edge(i, i + 1);
        a[n - 1][n - 2] = -2;
        break;
      case 'D':
        for (int i = 0; i + 1 < n - 1; ++i) edge(i, i + 1);
        edge(n - 3, n - 1);
        break;
      case 'E':  // chain 1-3-4-5-6[-7[-8]], node 2 attached to node 4
        edge(0, 2);
        edge(2, 3);
        edge(3, 4);
        edge(4, 5);
        edge(1, 3);
        if (n >= 7) edge(5, 6);
        if (n == 8) edge(6, 7);
        break;
      case 'F':  // alpha_1, alpha_2 long; alpha_3, alpha_4 short
        edge(0, 1);
        edge(1, 2);
        edge(2, 3);
        a[1][2] = -2;
        break;
      case 'G':  // alpha_1 short, alpha_2 long
        a[0][1] = -1;
        a[1][0] = -3;
        break;
    }
    return a;
  }

  /// Symmetrizer d_i = (alpha_i, alpha_i)/2, normalized so short roots have
  /// squared length 2. (alpha_i, alpha_j) = A[i][j] * d_j is symmetric.
  std::vector<int> symmetrizer() const {
    std::vector<int> d(rank, 1);
    switch (family) {
      case 'B':
        for (int i = 0; i + 1 < rank; ++i) d[i] = 2;
        break;
      case 'C':
        d[rank - 1] = 2;
        break;
      case 'F':
        d[0] = d[1] = 2;
        break;
      case 'G':
        d[1] = 3;
        break;
      default:
        break;
    }
    return d;
  }
};

}  // namespace asf
