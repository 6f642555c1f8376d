#pragma once

#include <utility>
#include <vector>

#include "klsb/poly.hpp"
#include "klsb/weyl_group.hpp"

namespace klsb {

// Kazhdan-Lusztig polynomials P_{x,w} in the classical variable q, for all
// pairs x <= w, plus the mu coefficients. Degrees obey
// deg P_{x,w} <= (len(w) - len(x) - 1)/2 for x < w; violation aborts.
struct KLTable {
  const WeylGroup* W = nullptr;
  std::vector<std::vector<PolyZ>> P;  // P[w][x]; zero unless x <= w

  long long mu(int x, int w) const {
    int d = W->len[w] - W->len[x];
    if (d <= 0 || (d & 1) == 0) return 0;
    return P[w][x].coeff((d - 1) / 2);
  }

  // z with mu(z, w) != 0, z < w, precomputed per w.
  std::vector<std::vector<std::pair<int, long long>>> mu_list;
};

KLTable kl_table(const WeylGroup& W, bool parallel = true);

// Change of basis between the canonical basis at v = 1 and the standard
// basis of the group algebra: to_std[w] lists (x, P_{x,w}(1)) over x <= w,
// and from_std is its (integer, unitriangular) inverse in the same layout.
struct BasisChange {
  std::vector<std::vector<std::pair<int, long long>>> to_std;
  std::vector<std::vector<std::pair<int, long long>>> from_std;
};

BasisChange canonical_basis_change(const KLTable& kl);

}  // namespace klsb
