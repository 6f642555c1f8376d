#pragma once

#include <vector>

#include "klsb/cells.hpp"
#include "klsb/kl.hpp"
#include "klsb/poly.hpp"

namespace klsb {

// Structure constants of a product C'_x C'_y in the canonical basis, for all
// x at a fixed y: h[x][z] = coefficient of C'_z. Convention: the quadratic
// relation is H_s^2 = (v^{-1} - v) H_s + 1 and C'_s = H_s + v, so
// C'_s C'_w = (v + v^{-1}) C'_w when s w < w.
struct CprimeRows {
  int y = 0;
  std::vector<std::vector<LaurentZ>> h;  // indexed [x][z]
};

CprimeRows cprime_products_fixed_y(const WeylGroup& W, const KLTable& kl, int y);

// Multiply two canonical basis elements; returns the row h[z] of C'_x C'_y.
std::vector<LaurentZ> hecke_multiply(const WeylGroup& W, const KLTable& kl, int x, int y);

// The based ring of a two-sided cell: gamma[.] are the structure constants
// t_x t_y = sum_z gamma_{x,y,z} t_{z^{-1}}, extracted as the coefficient of
// v^{-a} in h_{x,y,z^{-1}}. Extraction aborts if any product coefficient
// violates the valuation bound min_exp >= -a(cell of z), or fails to be
// symmetric under v -> v^{-1}.
struct JCellAlgebra {
  int cell = 0;                  // two-sided cell id
  int a = 0;                     // common a-value
  std::vector<int> elems;        // members, ascending
  std::vector<int> pos;          // global index -> local position (or -1)
  // right_mat[wi][xi * m + ui] = gamma_{x, w, u^{-1}}, the coefficient of t_u
  // in t_x t_w; all indices local.
  std::vector<std::vector<long long>> right_mat;

  int m() const { return int(elems.size()); }
};

JCellAlgebra j_cell_algebra(const WeylGroup& W, const KLTable& kl, const CellData& cd,
                            int two_cell_id, bool parallel = true);

// Generator action on the subquotient spanned by a two-sided cell.
// cprime: matrices of s acting on {C'_y(1) : y in cell} mod lower cells.
// cbasis: same for {C_y(1)}; entries differ by the sign (-1)^{len z + len y + 1}.
// Layout: mat[z * m + y] is the coefficient of basis element z in s . y.
struct CellModuleMatrices {
  int cell = 0;
  std::vector<int> elems;
  std::vector<int> pos;
  std::vector<std::vector<long long>> gen;  // one m x m matrix per simple reflection

  int m() const { return int(elems.size()); }
  // Matrix of an arbitrary group element, as the word product of generators.
  std::vector<long long> element_matrix(const WeylGroup& W, int w) const;
};

CellModuleMatrices cell_module_cprime(const WeylGroup& W, const KLTable& kl, const CellData& cd,
                                      int two_cell_id);
CellModuleMatrices cell_module_cbasis(const WeylGroup& W, const KLTable& kl, const CellData& cd,
                                      int two_cell_id);

}  // namespace klsb
