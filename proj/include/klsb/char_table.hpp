#pragma once

#include <vector>

#include "klsb/rational.hpp"
#include "klsb/weyl_group.hpp"

namespace klsb {

// Exact character table of the Weyl group. All irreducible characters of a
// Weyl group are rational (in fact integer) valued, so the Burnside-Dixon
// class-algebra method runs entirely over the rationals: the class-sum
// matrices have integer eigenvalues |C_j| chi(g_j) / chi(1), found by an
// integer scan, and the joint eigenspaces are split by exact kernels.
// Verified against both orthogonality relations on construction.
struct CharTable {
  int k = 0;                          // number of classes = number of irreducibles
  int identity_class = 0;
  std::vector<long long> class_size;  // |C_j|, class order as in WeylGroup
  std::vector<std::vector<Rat>> chi;  // chi[r][j], rows sorted by (degree, values)

  long long degree(int r) const { return chi[r][identity_class].as_ll(); }
};

CharTable character_table(const WeylGroup& W);

}  // namespace klsb
