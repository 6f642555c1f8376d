#pragma once

#include <vector>

#include "klsb/cells.hpp"
#include "klsb/char_ring.hpp"
#include "klsb/hecke.hpp"
#include "klsb/kl.hpp"

namespace klsb {

// The filtered basis of the character ring attached to the canonical basis:
//   f_w  = 1/|W_{I(w)}| . (C'_w(1) acting on exp(omega_{Ibar(w)}))
//   f^w  = 1/|W_{Ibar(w)}| . w0 . (C'_{w0 w}(1) acting on exp(omega_{I(w)}))
// where I(w) is the right descent set of w and Ibar its complement. The
// f_w have integer coefficients (violation aborts); the f^w are rational.
// Together with:
//   h(w) = (rho, omega_{I(w)}), the filtration height,
//   G_{w,v} = <f_w, f^v>, the Gram matrix, unitriangular in h-order,
//   D = G^{-1} and the dual basis f*_w = sum_u theta(D_{u,w}) f^u with
//   theta the dual twist on invariants,
//   E_w = exp(w . omega_{I(w)}), the Steinberg monomials.
struct KLSOptions {
  bool build_duals = true;  // Gram inversion and f*; off for large smoke runs
  bool parallel = true;
};

struct KLSBasis {
  const RootSystem* rs = nullptr;
  const WeylGroup* W = nullptr;
  const CellData* cd = nullptr;
  CharCaches* cc = nullptr;
  int n = 0;

  std::vector<CharElt> f, fup, fstar, stein;
  std::vector<PackedElt> pf, pfup;  // packed forms for the pairing kernels
  std::vector<Rat> h;
  std::vector<int> horder;  // element indices sorted by (h, index) ascending
  std::vector<int> hpos;    // inverse permutation of horder

  // Row-major n x n: G[w*n+v] = <f_w, f^v>, D its inverse. Entries are
  // q-free invariant combinations.
  std::vector<VCombo> G, D;
  bool duals_built = false;

  const VCombo& gram(int w, int v) const { return G[w * n + v]; }
  const VCombo& ginv(int u, int w) const { return D[u * n + w]; }
};

KLSBasis build_kls_basis(const RootSystem& rs, const WeylGroup& W, const BasisChange& canon,
                         const CellData& cd, CharCaches& cc, const KLSOptions& opts = {});

// Coefficients a_v with x = sum_v a_v f_v, via a_v = sum_u <x, f^u> D_{u,v}.
// For q-free x the reconstruction is re-multiplied and compared exactly
// (abort on mismatch); q-carrying x skips the reconstruction check.
std::vector<VCombo> expand_in_f(KLSBasis& B, const CharElt& x);

// Filtration checks: every simple reflection maps span{f_y : cell(y) <= c}
// into itself, and the induced matrix on the subquotient gr_c equals the
// cell-module matrix of the canonical basis at v = 1 (integer entries).
// Aborts with the offending generator and element.
void filtration_checks(KLSBasis& B, const KLTable& kl);

// Compare f*_w with f^w, elementwise and in the subquotient gr_{cell(w)}.
// "Graded" equality means: expanding f*_w - f^w in the f-basis, every
// coefficient on an element whose cell is not strictly below cell(w) has
// zero constant term, i.e. the difference vanishes after reducing
// coefficients modulo positive-degree invariants.
struct PseudoDualReport {
  std::vector<char> exact;
  std::vector<char> graded;
};
PseudoDualReport pseudo_dual_scan(KLSBasis& B);

// Exhaustive <f_v, f*_w> = delta check over all pairs; aborts on failure.
// Rebuilds the straightening box for the f/f* supports.
void verify_dual_contract(KLSBasis& B, bool parallel = true);

}  // namespace klsb
