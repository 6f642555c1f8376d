#include "klsb/hecke.hpp"

#include <cstdio>

namespace klsb {

namespace {

[[noreturn]] void hecke_abort(const char* msg) {
  std::fprintf(stderr, "klsb: hecke product error: %s\n", msg);
  std::abort();
}

// out += C'_s . (row), using C'_s C'_u = (v + v^{-1}) C'_u when s u < u and
// C'_s C'_u = C'_{su} + sum_{t < u, st < t} mu(t,u) C'_t otherwise.
void apply_cprime_s_rule(const WeylGroup& W, const KLTable& kl, int s,
                         const std::vector<LaurentZ>& row, std::vector<LaurentZ>& out) {
  static const LaurentZ vpv = LaurentZ::monomial(1, 1) + LaurentZ::monomial(1, -1);
  for (int u = 0; u < W.n; ++u) {
    const LaurentZ& cu = row[u];
    if (cu.is_zero()) continue;
    if (W.has_ldesc(u, s)) {
      out[u] += cu * vpv;
    } else {
      out[W.lmul[u][s]] += cu;
      for (const auto& [t, m] : kl.mu_list[u])
        if (W.has_ldesc(t, s)) out[t].add_scaled_shifted(m, 0, cu);
    }
  }
}

}  // namespace

CprimeRows cprime_products_fixed_y(const WeylGroup& W, const KLTable& kl, int y) {
  CprimeRows rows;
  rows.y = y;
  rows.h.assign(W.n, {});
  rows.h[0].assign(W.n, LaurentZ());
  rows.h[0][y] = LaurentZ::monomial(1, 0);
  // C'_x = C'_s C'_{x'} - sum_{z < x', sz < z} mu(z, x') C'_z with x = s x',
  // multiplied through on the right by C'_y.
  for (int x = 1; x < W.n; ++x) {
    int s = 0;
    while (!W.has_ldesc(x, s)) ++s;
    int xp = W.lmul[x][s];
    auto& out = rows.h[x];
    out.assign(W.n, LaurentZ());
    apply_cprime_s_rule(W, kl, s, rows.h[xp], out);
    for (const auto& [z, m] : kl.mu_list[xp]) {
      if (!W.has_ldesc(z, s)) continue;
      const auto& rz = rows.h[z];
      for (int u = 0; u < W.n; ++u)
        if (!rz[u].is_zero()) out[u].add_scaled_shifted(-m, 0, rz[u]);
    }
  }
  return rows;
}

std::vector<LaurentZ> hecke_multiply(const WeylGroup& W, const KLTable& kl, int x, int y) {
  // Same recursion as above, but keeping only the rows needed for x would
  // save little; products are normally needed for a whole batch of x anyway.
  CprimeRows rows = cprime_products_fixed_y(W, kl, y);
  return std::move(rows.h[x]);
}

JCellAlgebra j_cell_algebra(const WeylGroup& W, const KLTable& kl, const CellData& cd,
                            int two_cell_id, bool parallel) {
  JCellAlgebra J;
  J.cell = two_cell_id;
  J.a = cd.a_two[two_cell_id];
  J.elems = cd.two_cells[two_cell_id];
  J.pos.assign(W.n, -1);
  int m = J.m();
  for (int i = 0; i < m; ++i) J.pos[J.elems[i]] = i;
  J.right_mat.assign(m, std::vector<long long>(size_t(m) * m, 0));

  auto run_one = [&](int wi) {
    int y = J.elems[wi];
    CprimeRows rows = cprime_products_fixed_y(W, kl, y);
    for (int xi = 0; xi < m; ++xi) {
      const auto& hx = rows.h[J.elems[xi]];
      // Valuation and bar-symmetry audit across the whole product, not just
      // the cell: h_{x,y,u} must lie in v^{-a(u)} Z[v] and be fixed by
      // v -> v^{-1}.
      for (int u = 0; u < W.n; ++u) {
        const LaurentZ& h = hx[u];
        if (h.is_zero()) continue;
        int au = cd.a_two[cd.two_id[u]];
        if (h.min_exp() < -au || h.max_exp() > au)
          hecke_abort("valuation bound violated in C' product");
        if (h != h.bar()) hecke_abort("C' product coefficient not bar-symmetric");
      }
      for (int ui = 0; ui < m; ++ui) {
        long long g = hx[J.elems[ui]].coeff(-J.a);
        J.right_mat[wi][size_t(xi) * m + ui] = g;
      }
    }
  };

#ifdef _OPENMP
  if (parallel) {
#pragma omp parallel for schedule(dynamic)
    for (int wi = 0; wi < m; ++wi) run_one(wi);
  } else {
    for (int wi = 0; wi < m; ++wi) run_one(wi);
  }
#else
  (void)parallel;
  for (int wi = 0; wi < m; ++wi) run_one(wi);
#endif
  return J;
}

namespace {

CellModuleMatrices cell_module_common(const WeylGroup& W, const KLTable& kl, const CellData& cd,
                                      int two_cell_id, bool cbasis) {
  CellModuleMatrices M;
  M.cell = two_cell_id;
  M.elems = cd.two_cells[two_cell_id];
  M.pos.assign(W.n, -1);
  int m = M.m();
  for (int i = 0; i < m; ++i) M.pos[M.elems[i]] = i;
  M.gen.assign(W.rank, std::vector<long long>(size_t(m) * m, 0));
  for (int s = 0; s < W.rank; ++s) {
    auto& mat = M.gen[s];
    for (int yi = 0; yi < m; ++yi) {
      int y = M.elems[yi];
      // s . C'_y(1) = (C'_s C'_y - C'_y)(1) restricted to the cell.
      if (W.has_ldesc(y, s)) {
        mat[size_t(yi) * m + yi] += 1;  // (v + v^{-1} - 1) at v = 1
        continue;
      }
      mat[size_t(yi) * m + yi] -= 1;
      int sy = W.lmul[y][s];
      if (M.pos[sy] >= 0) mat[size_t(M.pos[sy]) * m + yi] += 1;
      for (const auto& [z, mu] : kl.mu_list[y])
        if (W.has_ldesc(z, s) && M.pos[z] >= 0) mat[size_t(M.pos[z]) * m + yi] += mu;
    }
    if (cbasis) {
      // C_y(1) = (-1)^{len y} sigma(C'_y(1)) spans the same cell filtration;
      // conjugating the action by that sign character twists each entry by
      // (-1)^{len z + len y + 1}.
      for (int zi = 0; zi < m; ++zi)
        for (int yi = 0; yi < m; ++yi) {
          int sgn = ((W.len[M.elems[zi]] + W.len[M.elems[yi]] + 1) & 1) ? -1 : 1;
          mat[size_t(zi) * m + yi] *= sgn;
        }
    }
  }
  return M;
}

}  // namespace

std::vector<long long> CellModuleMatrices::element_matrix(const WeylGroup& W, int w) const {
  int n = m();
  std::vector<long long> acc(size_t(n) * n, 0);
  for (int i = 0; i < n; ++i) acc[size_t(i) * n + i] = 1;
  // w = s_{i1} ... s_{ik} acts as the composition of the generator actions,
  // leftmost letter applied last.
  for (auto it = W.words[w].rbegin(); it != W.words[w].rend(); ++it) {
    const auto& g = gen[*it];
    std::vector<long long> next(size_t(n) * n, 0);
    for (int i = 0; i < n; ++i)
      for (int k = 0; k < n; ++k) {
        long long gik = g[size_t(i) * n + k];
        if (gik == 0) continue;
        for (int j = 0; j < n; ++j)
          next[size_t(i) * n + j] = checked_add_ll(
              next[size_t(i) * n + j],
              checked_mul_ll(gik, acc[size_t(k) * n + j], "cell module matrix"),
              "cell module matrix");
      }
    acc = std::move(next);
  }
  return acc;
}

CellModuleMatrices cell_module_cprime(const WeylGroup& W, const KLTable& kl, const CellData& cd,
                                      int two_cell_id) {
  return cell_module_common(W, kl, cd, two_cell_id, false);
}

CellModuleMatrices cell_module_cbasis(const WeylGroup& W, const KLTable& kl, const CellData& cd,
                                      int two_cell_id) {
  return cell_module_common(W, kl, cd, two_cell_id, true);
}

}  // namespace klsb
