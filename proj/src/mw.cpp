#include "klsb/mw.hpp"

#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <set>
#include <string>

namespace klsb {

namespace {

[[noreturn]] void mw_abort(const std::string& msg) {
  std::fprintf(stderr, "mw: %s\n", msg.c_str());
  std::abort();
}

void vadd_scaled(VCombo& a, const VCombo& b, const Rat& s) {
  if (s.is_zero()) return;
  for (const auto& [w, c] : b.t) a.add(w, c * s);
  a.q0 = std::max(a.q0, b.q0);
}

}  // namespace

VCombo compute_mw_one(KLSBasis& B, int w) {
  const WeylGroup& W = *B.W;
  const CellData& cd = *B.cd;
  if (!B.duals_built) mw_abort("M_w needs the dual basis");
  const int d = cd.duflo[cd.left_id[w]];
  const PackedElt lhs = pack(B.f[W.mult(W.w0, d)].frobenius());
  const PackedElt rhs = pack(B.fstar[W.mult(W.w0, w)]);
  return weyl_pairing_packed(*B.rs, *B.cc, lhs, rhs, false);
}

VCombo compute_mw_tilde_one(KLSBasis& B, int w) {
  const WeylGroup& W = *B.W;
  const CellData& cd = *B.cd;
  const int d = cd.duflo[cd.left_id[w]];
  const PackedElt lhs = pack(B.f[W.mult(W.w0, d)].frobenius());
  return weyl_pairing_packed(*B.rs, *B.cc, lhs, B.pfup[W.mult(W.w0, w)], false);
}

MwAll compute_mw_all(KLSBasis& B, bool parallel) {
  (void)parallel;
  const WeylGroup& W = *B.W;
  const CellData& cd = *B.cd;
  const RootSystem& rs = *B.rs;
  if (!B.duals_built) mw_abort("M_w needs the dual basis");
  const int n = B.n;

  std::vector<PackedElt> pstar(n);
  for (int w = 0; w < n; ++w) pstar[w] = pack(B.fstar[w]);

  MwAll out;
  out.m.assign(n, VCombo(W.rank));
  const int nlc = int(cd.left_cells.size());
#ifdef KLSB_HAVE_OPENMP
#pragma omp parallel for schedule(dynamic) if (parallel)
#endif
  for (int lc = 0; lc < nlc; ++lc) {
    const int d = cd.duflo[lc];
    const PackedElt lhs = pack(B.f[W.mult(W.w0, d)].frobenius());
    for (int w : cd.left_cells[lc])
      out.m[w] = weyl_pairing_packed(rs, *B.cc, lhs, pstar[W.mult(W.w0, w)], false);
  }

  out.dim.resize(n);
  for (int w = 0; w < n; ++w) out.dim[w] = dimension_polynomial(rs, out.m[w]);
  return out;
}

MwAll compute_mw_all_bilinear(KLSBasis& B, bool parallel) {
  (void)parallel;
  const WeylGroup& W = *B.W;
  const CellData& cd = *B.cd;
  const RootSystem& rs = *B.rs;
  if (B.D.empty()) mw_abort("the bilinear M_w route needs the inverted Gram matrix");
  const int n = B.n;

  MwAll out;
  out.m.assign(n, VCombo(W.rank));
  const int nlc = int(cd.left_cells.size());
  for (int lc = 0; lc < nlc; ++lc) {
    const int d = cd.duflo[lc];
    const PackedElt lhs = pack(B.f[W.mult(W.w0, d)].frobenius());
    std::vector<VCombo> b(n, VCombo(W.rank));
#ifdef KLSB_HAVE_OPENMP
#pragma omp parallel for schedule(dynamic) if (parallel)
#endif
    for (int u = 0; u < n; ++u) b[u] = weyl_pairing_packed(rs, *B.cc, lhs, B.pfup[u], false);
    for (int w : cd.left_cells[lc]) {
      const int z = W.mult(W.w0, w);
      VCombo acc(W.rank);
      for (int u = 0; u < n; ++u) {
        if (b[u].is_zero()) continue;
        const VCombo& duz = B.ginv(u, z);
        if (duz.is_zero()) continue;
        acc += vmul(rs, *B.cc, duz, b[u]);
      }
      out.m[w] = std::move(acc);
    }
  }

  out.dim.resize(n);
  for (int w = 0; w < n; ++w) out.dim[w] = dimension_polynomial(rs, out.m[w]);
  return out;
}

std::vector<std::pair<Weight, Rat>> normalize_mw(const RootSystem& rs, const WeylGroup& W, int w,
                                                 const VCombo& m) {
  const unsigned iw = W.imask(w);
  std::vector<std::pair<Weight, Rat>> out;
  for (const auto& [key, r] : m.t) {
    for (int i = 0; i < rs.rank; ++i) {
      const int want = int((iw >> i) & 1u);
      if (key.a[i] != want)
        mw_abort("M_" + W.word_str(w) + " term " + key.str() +
                 " does not sit over (q-1) omega_{I(w)}");
    }
    if (!r.is_integer())
      mw_abort("M_" + W.word_str(w) + " has non-integer coefficient " + r.str());
    Weight lam;
    lam.r = rs.rank;
    for (int i = 0; i < rs.rank; ++i) lam.c[i] = key.b[i] + int((iw >> i) & 1u);

    // Dominant representative must lie below k rho in the dominance order.
    const Weight dom = dominant_rep(rs, lam);
    for (int t = 0; t < rs.rank; ++t) {
      Rat coord(0);
      for (int j = 0; j < rs.rank; ++j)
        coord = coord + rs.cartan_inv[t][j] * (rs.kbound - Rat(dom.c[j]));
      if (!coord.is_nonneg())
        mw_abort("M_" + W.word_str(w) + " offset escapes the k rho ball at " + key.str());
    }
    out.emplace_back(lam, r);
  }
  return out;
}

PolyQ dimension_polynomial(const RootSystem& rs, const VCombo& m) {
  PolyQ p;
  for (const auto& [key, r] : m.t) p.add_scaled(r, weyl_dim_poly(rs, key));
  return p;
}

MwTable mw_table(KLSBasis& B, const MwAll& all) {
  const WeylGroup& W = *B.W;
  const CellData& cd = *B.cd;
  std::vector<int> idx = cd.jset;
  std::sort(idx.begin(), idx.end(), [&](int a, int b) {
    if (W.len[a] != W.len[b]) return W.len[a] < W.len[b];
    return W.words[a] < W.words[b];
  });

  MwTable tab;
  for (int w : idx) {
    MwRow row;
    row.w = w;
    row.imask = W.imask(w);
    row.duflo = cd.duflo[cd.left_id[w]];
    row.a = cd.a_elt[w];
    row.m = all.m[w];
    row.offsets = normalize_mw(*B.rs, W, w, all.m[w]);
    row.dim = all.dim[w];
    row.q0 = all.m[w].q0;
    tab.rows.push_back(std::move(row));
  }
  return tab;
}

std::vector<VCombo> phi_matrix_on_cell(KLSBasis& B, const JCellAlgebra& J, bool parallel) {
  (void)parallel;
  const WeylGroup& W = *B.W;
  const RootSystem& rs = *B.rs;
  const int m = J.m();
  if (!B.duals_built) mw_abort("Phi needs the dual basis");

  std::vector<PackedElt> pstar(m);
  for (int zi = 0; zi < m; ++zi) pstar[zi] = pack(B.fstar[W.mult(W.w0, J.elems[zi])]);

  std::vector<VCombo> phi(size_t(m) * m, VCombo(W.rank));
#ifdef KLSB_HAVE_OPENMP
#pragma omp parallel for schedule(dynamic) if (parallel)
#endif
  for (int xi = 0; xi < m; ++xi) {
    const PackedElt lhs = pack(B.f[W.mult(W.w0, J.elems[xi])].frobenius());
    for (int zi = 0; zi < m; ++zi)
      phi[size_t(xi) * m + zi] = weyl_pairing_packed(rs, *B.cc, lhs, pstar[zi], false);
  }
  return phi;
}

void verify_phi_identity(const WeylGroup& W, const CellData& cd, const JCellAlgebra& J,
                         const MwAll& all, const std::vector<VCombo>& phi) {
  const int m = J.m();
  for (int xi = 0; xi < m; ++xi)
    for (int zi = 0; zi < m; ++zi) {
      VCombo want(W.rank);
      for (int wi = 0; wi < m; ++wi) {
        const long long g = J.right_mat[wi][size_t(xi) * m + zi];
        if (g != 0) vadd_scaled(want, all.m[J.elems[wi]], Rat(g));
      }
      if (!(want == phi[size_t(xi) * m + zi]))
        mw_abort("Phi identity fails at (" + W.word_str(J.elems[xi]) + ", " +
                 W.word_str(J.elems[zi]) + ")");
    }

  // Duflo rows reproduce M_z across the Duflo's left cell.
  for (size_t lc = 0; lc < cd.left_cells.size(); ++lc) {
    const int d = cd.duflo[lc];
    if (J.pos[d] < 0) continue;
    const int xi = J.pos[d];
    for (int z : cd.left_cells[lc]) {
      if (J.pos[z] < 0) mw_abort("left cell leaks out of its two-sided cell");
      if (!(phi[size_t(xi) * m + J.pos[z]] == all.m[z]))
        mw_abort("Duflo row of Phi differs from M at (" + W.word_str(d) + ", " + W.word_str(z) +
                 ")");
    }
  }
}

void verify_gamma_identities(const WeylGroup& W, const CellData& cd, const JCellAlgebra& J) {
  const int m = J.m();

  std::set<int> duflos;
  for (int x : J.elems) duflos.insert(cd.duflo[cd.left_id[x]]);
  std::vector<long long> total(size_t(m) * m, 0);
  for (int d : duflos) {
    if (J.pos[d] < 0) mw_abort("Duflo involution missing from its own cell");
    const auto& mat = J.right_mat[J.pos[d]];
    for (size_t i = 0; i < total.size(); ++i) total[i] += mat[i];
  }
  for (int x = 0; x < m; ++x)
    for (int u = 0; u < m; ++u)
      if (total[size_t(x) * m + u] != (x == u ? 1 : 0))
        mw_abort("Duflo rows do not sum to the identity on cell " + std::to_string(J.cell));

  // gamma_{x,y,z} = gamma_{y,z,x}; gamma_{x,y,z} is the coefficient of
  // t_{z^{-1}} in t_x t_y, i.e. right_mat[y][x * m + pos(z^{-1})].
  std::vector<int> ipos(m);
  for (int zi = 0; zi < m; ++zi) {
    const int z = J.elems[zi];
    if (J.pos[W.inv[z]] < 0) mw_abort("cell is not closed under inversion");
    ipos[zi] = J.pos[W.inv[z]];
  }
  for (int xi = 0; xi < m; ++xi)
    for (int yi = 0; yi < m; ++yi)
      for (int zi = 0; zi < m; ++zi) {
        const long long g1 = J.right_mat[yi][size_t(xi) * m + ipos[zi]];
        const long long g2 = J.right_mat[zi][size_t(yi) * m + ipos[xi]];
        if (g1 != g2)
          mw_abort("gamma cyclicity fails on cell " + std::to_string(J.cell) + " at (" +
                   W.word_str(J.elems[xi]) + ", " + W.word_str(J.elems[yi]) + ", " +
                   W.word_str(J.elems[zi]) + ")");
      }
}

std::vector<int> cell_of_irreducible(const WeylGroup& W, const KLTable& kl, const CellData& cd,
                                     const CharTable& T,
                                     std::vector<std::vector<Rat>>* mult_out) {
  const int k = T.k;
  const int ncells = int(cd.two_cells.size());
  std::vector<std::vector<Rat>> mult(k, std::vector<Rat>(ncells, Rat(0)));

  for (int c = 0; c < ncells; ++c) {
    const CellModuleMatrices mod = cell_module_cprime(W, kl, cd, c);
    const int m = mod.m();
    std::vector<Rat> tr(k, Rat(0));
    for (int i = 0; i < k; ++i) {
      const std::vector<long long> L = mod.element_matrix(W, W.class_rep[i]);
      long long t = 0;
      for (int x = 0; x < m; ++x) t += L[size_t(x) * m + x];
      tr[i] = Rat(t);
    }
    for (int r = 0; r < k; ++r) {
      Rat acc(0);
      for (int i = 0; i < k; ++i) acc = acc + Rat(T.class_size[i]) * T.chi[r][i] * tr[i];
      acc = acc / Rat(W.n);
      if (!acc.is_integer() || !acc.is_nonneg())
        mw_abort("cell-module multiplicity is not a nonnegative integer");
      mult[r][c] = acc;
    }
  }

  std::vector<int> home(k, -1);
  for (int r = 0; r < k; ++r) {
    for (int c = 0; c < ncells; ++c) {
      if (mult[r][c].is_zero()) continue;
      if (home[r] >= 0) mw_abort("character row " + std::to_string(r) + " lives in two cells");
      home[r] = c;
    }
    if (home[r] < 0) mw_abort("character row " + std::to_string(r) + " lives in no cell");
  }
  if (mult_out) *mult_out = std::move(mult);
  return home;
}

CwChi cw_chi(const WeylGroup& W, const CellData& cd, const JCellAlgebra& J,
             const CellModuleMatrices& mod, const CharTable& T) {
  const int m = J.m();
  const int k = T.k;
  if (mod.elems != J.elems) mw_abort("cell module and J-ring use different element orders");

  CwChi out;
  out.cell = J.cell;
  out.elems = J.elems;
  out.c.assign(m, std::vector<Rat>(k, Rat(0)));
  out.left_mult.assign(k, Rat(0));

  // Class functions F_w(y) = tr(L_y R_w) via the elementwise dot of the two
  // flat matrices (derivation: tr(L R) = sum_{x,u} L[x*m+u] rm[x*m+u]).
  std::vector<std::vector<long long>> L(k);
  for (int i = 0; i < k; ++i) L[i] = mod.element_matrix(W, W.class_rep[i]);

  std::vector<std::vector<Rat>> F(m, std::vector<Rat>(k, Rat(0)));
  for (int wi = 0; wi < m; ++wi) {
    const auto& rm = J.right_mat[wi];
    for (int i = 0; i < k; ++i) {
      long long acc = 0;
      for (size_t idx = 0; idx < rm.size(); ++idx) acc += L[i][idx] * rm[idx];
      F[wi][i] = Rat(acc);
    }
  }

  for (int i = 0; i < k; ++i) {
    long long tr = 0;
    for (int x = 0; x < m; ++x) tr += L[i][size_t(x) * m + x];
    for (int r = 0; r < k; ++r)
      out.left_mult[r] = out.left_mult[r] + Rat(T.class_size[i]) * T.chi[r][i] * Rat(tr) / Rat(W.n);
  }

  for (int wi = 0; wi < m; ++wi) {
    for (int r = 0; r < k; ++r) {
      Rat acc(0);
      for (int i = 0; i < k; ++i) acc = acc + Rat(T.class_size[i]) * T.chi[r][i] * F[wi][i];
      out.c[wi][r] = acc / Rat(W.n);
    }
    // The expansion must reproduce the class function exactly.
    for (int i = 0; i < k; ++i) {
      Rat acc(0);
      for (int r = 0; r < k; ++r) acc = acc + out.c[wi][r] * T.chi[r][i];
      if (acc != F[wi][i]) mw_abort("c_{w,chi} expansion does not reproduce its class function");
    }
    if (!cd.in_jset[J.elems[wi]]) {
      for (int r = 0; r < k; ++r)
        if (!out.c[wi][r].is_zero())
          mw_abort("c_{w,chi} does not vanish at the non-near-involution " +
                   W.word_str(J.elems[wi]));
    }
  }

  // The identity of the based ring is the sum of the Duflo elements, so the
  // Duflo rows of c must sum to the left multiplicities.
  std::set<int> duflos;
  for (int x : J.elems) duflos.insert(cd.duflo[cd.left_id[x]]);
  for (int r = 0; r < k; ++r) {
    Rat acc(0);
    for (int d : duflos) acc = acc + out.c[J.pos[d]][r];
    if (acc != out.left_mult[r]) mw_abort("Duflo rows of c_{w,chi} do not sum to the multiplicity");
  }
  return out;
}

VCombo vbar_from_cmatrix(const MwAll& all, const CwChi& C, int chi_row) {
  VCombo acc;
  if (!C.elems.empty()) acc = VCombo(all.m[C.elems[0]].rank);
  for (size_t wi = 0; wi < C.elems.size(); ++wi)
    vadd_scaled(acc, all.m[C.elems[wi]], C.c[wi][chi_row]);
  return acc;
}

VCombo vbar_from_idempotent(const WeylGroup& W, const CellModuleMatrices& mod, const CharTable& T,
                            const std::vector<VCombo>& phi, int chi_row) {
  VCombo acc(W.rank);
  for (int i = 0; i < T.k; ++i) {
    const Rat s = T.chi[chi_row][i] * Rat(T.class_size[i]) / Rat(W.n);
    if (s.is_zero()) continue;
    const std::vector<long long> L = mod.element_matrix(W, W.class_rep[i]);
    VCombo inner(W.rank);
    for (size_t idx = 0; idx < phi.size(); ++idx)
      if (L[idx] != 0) vadd_scaled(inner, phi[idx], Rat(L[idx]));
    vadd_scaled(acc, inner, s);
  }
  return acc;
}

VCombo vbar_involution_sum(KLSBasis& B, const std::vector<int>& members) {
  const WeylGroup& W = *B.W;
  VCombo acc(W.rank);
  for (int y : members) {
    if (W.inv[y] != y) continue;
    const PackedElt lhs = pack(B.f[y].frobenius());
    const PackedElt rhs = pack(B.fstar[y]);
    acc += weyl_pairing_packed(*B.rs, *B.cc, lhs, rhs, false);
  }
  return acc;
}

SymmetryScan symmetry_scan(const WeylGroup& W, const std::vector<std::pair<int, PolyQ>>& rows,
                           bool allow_sign) {
  const int nr = int(rows.size());
  const unsigned full = (1u << W.rank) - 1u;

  auto seq_of = [](const PolyQ& p) {
    std::vector<Rat> s;
    const int lo = p.low_degree();
    for (int d = lo; d <= p.degree(); ++d) s.push_back(p.coeff(d));
    return s;
  };

  SymmetryScan out;
  out.partner.assign(nr, -1);
  for (int i = 0; i < nr; ++i) {
    std::vector<Rat> rev = seq_of(rows[i].second);
    std::reverse(rev.begin(), rev.end());
    std::vector<Rat> negrev(rev.size());
    for (size_t t = 0; t < rev.size(); ++t) negrev[t] = -rev[t];
    const unsigned want = full ^ unsigned(W.ldesc[rows[i].first]);
    for (int j = 0; j < nr; ++j) {
      if (unsigned(W.ldesc[rows[j].first]) != want) continue;
      const std::vector<Rat> s = seq_of(rows[j].second);
      if (s == rev || (allow_sign && s == negrev)) {
        out.partner[i] = j;
        break;
      }
    }
    if (out.partner[i] < 0) out.unpaired.push_back(rows[i].first);
  }
  return out;
}

}  // namespace klsb
