#pragma once

#include <vector>

#include "klsb/kl.hpp"

namespace klsb {

// Left, right and two-sided cells, computed from the multiplication action of
// the canonical basis elements C'_s on both sides (strongly connected
// components of the resulting preorder graphs).
struct CellData {
  std::vector<int> left_id;
  std::vector<int> right_id;
  std::vector<int> two_id;
  std::vector<std::vector<int>> left_cells;   // members sorted ascending
  std::vector<std::vector<int>> right_cells;
  std::vector<std::vector<int>> two_cells;

  // two_leq[c][d] iff c <=_LR d.
  std::vector<std::vector<char>> two_leq;

  std::vector<int> duflo;        // per left cell: its Duflo involution
  std::vector<int> a_two;        // per two-sided cell: Lusztig's a-value
  std::vector<int> a_elt;        // per element
  std::vector<char> in_jset;     // w with w ~L w^{-1}
  std::vector<int> jset;         // sorted list of those w
};

CellData cells(const WeylGroup& W, const KLTable& kl);

}  // namespace klsb
