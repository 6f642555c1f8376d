#pragma once

#include <utility>
#include <vector>

#include "klsb/char_table.hpp"
#include "klsb/kls_basis.hpp"

namespace klsb {

// Virtual characters M_w = <[q]* f_{w0 d}, f*_{w0 w}> with d the Duflo
// involution of the left cell of w, their dimension polynomials, the
// Phi-matrices of the right J-action, the trace coefficients c_{w,chi} and
// the assembled reductions Vbar_chi.

// M_w for every group element (the table proper restricts to w ~L w^{-1}).
struct MwAll {
  std::vector<VCombo> m;
  std::vector<PolyQ> dim;
};

VCombo compute_mw_one(KLSBasis& B, int w);
VCombo compute_mw_tilde_one(KLSBasis& B, int w);  // f^{w0 w} in the second slot

MwAll compute_mw_all(KLSBasis& B, bool parallel = true);

// Same values via the inverted Gram matrix, avoiding explicit f*:
// M_w = sum_u D_{u, w0 w} <[q]* f_{w0 d}, f^u>, one pairing batch per left
// cell. Used for large smoke types; cross-checked against the direct route
// on the golden types.
MwAll compute_mw_all_bilinear(KLSBasis& B, bool parallel = true);

// Normalization of a near-involution row: every key of m must be
// (q-1) omega_{I(w)} + lambda with lambda q-free and an integer coefficient,
// and the dominant representative of each lambda must lie below k rho,
// k = 2 (rho, rho) + 2, in the rational dominance order. Aborts otherwise;
// returns the (lambda, coefficient) list sorted by weight.
std::vector<std::pair<Weight, Rat>> normalize_mw(const RootSystem& rs, const WeylGroup& W, int w,
                                                 const VCombo& m);

// Termwise Weyl dimension polynomial in q.
PolyQ dimension_polynomial(const RootSystem& rs, const VCombo& m);

// Table rows over {w : w ~L w^{-1}}, ordered by (length, lex word).
struct MwRow {
  int w = 0;
  unsigned imask = 0;
  int duflo = 0;
  int a = 0;  // a-value of the two-sided cell
  VCombo m;
  std::vector<std::pair<Weight, Rat>> offsets;
  PolyQ dim;
  long long q0 = 1;
};

struct MwTable {
  std::vector<MwRow> rows;
};

MwTable mw_table(KLSBasis& B, const MwAll& all);

// Phi_{x,z} = <[q]* f_{w0 x}, f*_{w0 z}> over a two-sided cell, flattened
// [xi * m + zi] in the order of J.elems.
std::vector<VCombo> phi_matrix_on_cell(KLSBasis& B, const JCellAlgebra& J, bool parallel = true);

// Phi_{x,z} = sum_w gamma_{x,w,z^{-1}} M_w for every pair, plus the Duflo
// rows Phi_{d,z} = M_z over the left cell of each d; aborts with the pair.
void verify_phi_identity(const WeylGroup& W, const CellData& cd, const JCellAlgebra& J,
                         const MwAll& all, const std::vector<VCombo>& phi);

// Based-ring sanity on one cell: the Duflo rows of the right action sum to
// the identity matrix, and gamma is invariant under cyclic rotation.
void verify_gamma_identities(const WeylGroup& W, const CellData& cd, const JCellAlgebra& J);

// The unique two-sided cell whose subquotient contains each irreducible,
// via cell-module traces at v = 1; aborts unless the cells partition the
// irreducibles. mult_out[r][c], if requested, is the multiplicity matrix.
std::vector<int> cell_of_irreducible(const WeylGroup& W, const KLTable& kl, const CellData& cd,
                                     const CharTable& T,
                                     std::vector<std::vector<Rat>>* mult_out = nullptr);

// Trace coefficients c_{w,chi} on one cell: the class function
// y -> tr(L_y R_w) expanded over the irreducible characters.
struct CwChi {
  int cell = 0;
  std::vector<int> elems;           // J.elems
  std::vector<std::vector<Rat>> c;  // c[wi][r], r over all character rows
  std::vector<Rat> left_mult;       // multiplicity of each character row in the module
};
CwChi cw_chi(const WeylGroup& W, const CellData& cd, const JCellAlgebra& J,
             const CellModuleMatrices& mod, const CharTable& T);

// Route 1: Vbar_chi = sum_{w in cell} c_{w,chi} M_w.
VCombo vbar_from_cmatrix(const MwAll& all, const CwChi& C, int chi_row);

// Route 2: the central-idempotent trace through the left action,
// Vbar_chi = 1/|W| sum_i |C_i| chi(g_i) sum_{x,u} (L_{g_i})_{x,u} Phi_{x,u}.
VCombo vbar_from_idempotent(const WeylGroup& W, const CellModuleMatrices& mod, const CharTable& T,
                            const std::vector<VCombo>& phi, int chi_row);

// Route 3 (type A): the diagonal involution sum sum_y <[q]* f_y, f*_y> over
// the involutions y of one two-sided cell.
VCombo vbar_involution_sum(KLSBasis& B, const std::vector<int>& members);

// Dimension-polynomial symmetry scan over (element, polynomial) rows:
// partner[i] = j when row j has the reversed coefficient sequence of row i
// (up to a global sign when allow_sign) and complementary left descents;
// -1 when none exists.
struct SymmetryScan {
  std::vector<int> partner;
  std::vector<int> unpaired;  // element indices without a partner
};
SymmetryScan symmetry_scan(const WeylGroup& W, const std::vector<std::pair<int, PolyQ>>& rows,
                           bool allow_sign = true);

}  // namespace klsb
