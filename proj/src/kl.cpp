#include "klsb/kl.hpp"

#include <cstdio>

namespace klsb {

namespace {

[[noreturn]] void kl_abort(const char* msg) {
  std::fprintf(stderr, "klsb: KL recursion error: %s\n", msg);
  std::abort();
}

// One row of the table: P_{x,w} for all x, given all shorter rows.
void kl_row(const WeylGroup& W, KLTable& kl, int w) {
  auto& row = kl.P[w];
  row.assign(W.n, PolyZ());
  if (w == 0) {
    row[0] = PolyZ(1);
    return;
  }
  int s = 0;
  while (!W.has_ldesc(w, s)) ++s;
  int v = W.lmul[w][s];
  const auto& rv = kl.P[v];
  int lw = W.len[w];
  // Decreasing length so that P_{sx,w} is available when s x > x.
  for (int x = w; x >= 0; --x) {
    if (!W.leq(x, w)) continue;
    int sx = W.lmul[x][s];
    if (W.len[sx] > W.len[x]) {
      row[x] = row[sx];
    } else {
      // P_{x,w} = P_{sx,v} + q P_{x,v} - sum_z mu(z,v) q^{(len(w)-len(z))/2} P_{x,z}
      PolyZ p = rv[sx];
      p.add_scaled_shifted(1, 1, rv[x]);
      for (const auto& [z, m] : kl.mu_list[v]) {
        if (!W.has_ldesc(z, s)) continue;
        if (!W.leq(x, z)) continue;
        int e = lw - W.len[z];
        if (e & 1) kl_abort("odd exponent in mu correction");
        p.add_scaled_shifted(-m, e / 2, kl.P[z][x]);
      }
      row[x] = std::move(p);
    }
    int bound = x == w ? 0 : (lw - W.len[x] - 1) / 2;
    if (x == w) {
      if (!(row[x] == PolyZ(1))) kl_abort("P_{w,w} != 1");
    } else if (row[x].degree() > bound) {
      kl_abort("degree bound violated");
    }
  }
}

}  // namespace

KLTable kl_table(const WeylGroup& W, bool parallel) {
  KLTable kl;
  kl.W = &W;
  kl.P.assign(W.n, {});
  kl.mu_list.assign(W.n, {});

  // Rows within a common length depend only on strictly shorter rows, so each
  // length layer can be filled independently.
  int maxlen = W.len[W.w0];
  int begin = 0;
  for (int L = 0; L <= maxlen; ++L) {
    int end = begin;
    while (end < W.n && W.len[end] == L) ++end;
#ifdef _OPENMP
    if (parallel) {
#pragma omp parallel for schedule(dynamic)
      for (int w = begin; w < end; ++w) kl_row(W, kl, w);
    } else {
      for (int w = begin; w < end; ++w) kl_row(W, kl, w);
    }
#else
    (void)parallel;
    for (int w = begin; w < end; ++w) kl_row(W, kl, w);
#endif
    for (int w = begin; w < end; ++w) {
      for (int z = 0; z < w; ++z) {
        long long m = kl.mu(z, w);
        if (m != 0) kl.mu_list[w].push_back({z, m});
      }
    }
    begin = end;
  }
  return kl;
}

BasisChange canonical_basis_change(const KLTable& kl) {
  const WeylGroup& W = *kl.W;
  BasisChange bc;
  bc.to_std.resize(W.n);
  bc.from_std.resize(W.n);
  for (int w = 0; w < W.n; ++w)
    for (int x = 0; x <= w; ++x)
      if (W.leq(x, w)) bc.to_std[w].push_back({x, kl.P[w][x].eval_one()});

  // Unitriangular inversion: from_std[w] = e_w - sum_{x < w} P_{x,w}(1) from_std[x].
  std::vector<long long> acc(W.n);
  for (int w = 0; w < W.n; ++w) {
    std::fill(acc.begin(), acc.begin() + w + 1, 0);
    acc[w] = 1;
    for (const auto& [x, p] : bc.to_std[w]) {
      if (x == w) continue;
      for (const auto& [y, c] : bc.from_std[x])
        acc[y] = checked_add_ll(acc[y], checked_mul_ll(-p, c, "basis inv"), "basis inv");
    }
    for (int y = 0; y <= w; ++y)
      if (acc[y] != 0) bc.from_std[w].push_back({y, acc[y]});
  }
  return bc;
}

}  // namespace klsb
