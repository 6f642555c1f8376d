#include "klsb/kls_basis.hpp"

#include <algorithm>
#include <atomic>
#include <cstdio>
#include <cstdlib>
#include <string>
#include <utility>

namespace klsb {

namespace {

[[noreturn]] void kls_abort(const std::string& msg) {
  std::fprintf(stderr, "kls_basis: %s\n", msg.c_str());
  std::abort();
}

int identity_index(const WeylGroup& W) {
  for (int w = 0; w < W.n; ++w)
    if (W.len[w] == 0) return w;
  kls_abort("group has no identity element");
}

}  // namespace

KLSBasis build_kls_basis(const RootSystem& rs, const WeylGroup& W, const BasisChange& canon,
                         const CellData& cd, CharCaches& cc, const KLSOptions& opts) {
  KLSBasis B;
  B.rs = &rs;
  B.W = &W;
  B.cd = &cd;
  B.cc = &cc;
  const int n = W.n;
  B.n = n;
  B.f.assign(n, CharElt(W.rank));
  B.fup.assign(n, CharElt(W.rank));
  B.stein.assign(n, CharElt(W.rank));
  B.h.assign(n, Rat(0));

  // Descent sets are constant on left cells; everything downstream (h, the
  // triangular order, the block structure of G) relies on that.
  for (const auto& cell : cd.left_cells)
    for (int w : cell)
      if (W.imask(w) != W.imask(cell[0]))
        kls_abort("right descent set is not constant on a left cell (at " + W.word_str(w) + ")");

  for (int w = 0; w < n; ++w) {
    const unsigned iw = W.imask(w);
    const unsigned ibar = W.imask_bar(w);

    {
      const Weight lam = rs.omega(ibar);
      const long long par = W.parabolic_order(iw);
      CharElt e(W.rank);
      for (const auto& [x, c] : canon.to_std[w]) e.add(QWeight::constant(W.act(x, lam)), Rat(c, par));
      for (const auto& [k, c] : e.t)
        if (!c.is_integer())
          kls_abort("f_" + W.word_str(w) + " has non-integer coefficient " + c.str() +
                    "; the canonical-basis orbit sums failed to clear the stabilizer order");
      B.f[w] = std::move(e);
    }

    {
      // Stored form: (-1)^{l(w)} times the weight-negated upper element, which
      // is the normalization that makes <f_v, fup_w> = delta_{v,w} V_0 under
      // the literal bilinear pairing used throughout.
      const Weight lam = rs.omega(iw);
      const long long par = W.parabolic_order(ibar);
      const int y = W.mult(W.w0, w);
      CharElt e(W.rank);
      for (const auto& [x, c] : canon.to_std[y])
        e.add(QWeight::constant(-W.act(W.mult(W.w0, x), lam)), Rat(c * W.sign(w), par));
      B.fup[w] = std::move(e);
    }

    B.stein[w] = CharElt::monomial(W.rank, QWeight::constant(W.act(w, rs.omega(iw))));
    B.h[w] = rs.height_of_mask(iw);
  }

  B.horder.resize(n);
  B.hpos.resize(n);
  for (int i = 0; i < n; ++i) B.horder[i] = i;
  std::sort(B.horder.begin(), B.horder.end(), [&](int a, int b) {
    if (B.h[a] < B.h[b]) return true;
    if (B.h[b] < B.h[a]) return false;
    return a < b;
  });
  for (int i = 0; i < n; ++i) B.hpos[B.horder[i]] = i;

  B.pf.resize(n);
  B.pfup.resize(n);
  for (int w = 0; w < n; ++w) {
    B.pf[w] = pack(B.f[w]);
    B.pfup[w] = pack(B.fup[w]);
  }

  {
    std::vector<const CharElt*> as, bs;
    as.reserve(n);
    bs.reserve(n);
    for (int w = 0; w < n; ++w) {
      as.push_back(&B.f[w]);
      bs.push_back(&B.fup[w]);
    }
    cc.build_box_for(as, bs);
  }

  B.G.assign(size_t(n) * n, VCombo(W.rank));
  {
    (void)opts;
    const long long total = (long long)n * n;
#ifdef KLSB_HAVE_OPENMP
#pragma omp parallel for schedule(dynamic, 64) if (opts.parallel)
#endif
    for (long long idx = 0; idx < total; ++idx) {
      const int w = int(idx / n), v = int(idx % n);
      B.G[idx] = weyl_pairing_packed(rs, cc, B.pf[w], B.pfup[v], false);
    }
  }

  const VCombo one = VCombo::single(W.rank, QWeight::constant(rs.zero()));
  for (int w = 0; w < n; ++w)
    for (int v = 0; v < n; ++v) {
      if (B.h[w] < B.h[v]) continue;  // triangularity constrains h(v) <= h(w) only
      const VCombo& g = B.gram(w, v);
      const bool ok = (v == w) ? (g == one) : g.is_zero();
      if (!ok)
        kls_abort("Gram triangularity violated: <f_" + W.word_str(w) + ", f^" + W.word_str(v) +
                  "> = " + g.str());
    }

  if (opts.build_duals) {
    // Invert the unitriangular Gram matrix by back-substitution in h-order.
    B.D.assign(size_t(n) * n, VCombo(W.rank));
    const auto& p = B.horder;
    for (int j = 0; j < n; ++j) {
      B.D[size_t(p[j]) * n + p[j]] = one;
      for (int i = j - 1; i >= 0; --i) {
        VCombo s(W.rank);
        for (int k = i + 1; k <= j; ++k) {
          const VCombo& gik = B.gram(p[i], p[k]);
          if (gik.is_zero()) continue;
          const VCombo& dkj = B.D[size_t(p[k]) * n + p[j]];
          if (dkj.is_zero()) continue;
          s += vmul(rs, cc, gik, dkj);
        }
        if (!s.is_zero()) {
          s.scale(Rat(-1));
          B.D[size_t(p[i]) * n + p[j]] = std::move(s);
        }
      }
    }

    // f*_w = sum_u theta(D_{u,w}) f^u; the dual twist on the coefficient
    // compensates the twisted linearity of the pairing in its second slot.
    B.fstar.assign(n, CharElt(W.rank));
    for (int w = 0; w < n; ++w) {
      CharElt acc(W.rank);
      for (int u = 0; u < n; ++u) {
        const VCombo& duw = B.ginv(u, w);
        if (duw.is_zero()) continue;
        const CharElt coef = contract(rs, cc, dual_twist(rs, W, duw));
        acc += coef.mul(B.fup[u]);
      }
      B.fstar[w] = std::move(acc);
    }
    B.duals_built = true;
  }

  return B;
}

std::vector<VCombo> expand_in_f(KLSBasis& B, const CharElt& x) {
  const RootSystem& rs = *B.rs;
  CharCaches& cc = *B.cc;
  const int n = B.n;
  if (!B.duals_built) kls_abort("expand_in_f needs the inverted Gram matrix");

  const PackedElt px = pack(x);
  std::vector<VCombo> b(n, VCombo(rs.rank));
  for (int u = 0; u < n; ++u) b[u] = weyl_pairing_packed(rs, cc, px, B.pfup[u], false);

  std::vector<VCombo> a(n, VCombo(rs.rank));
  for (int v = 0; v < n; ++v) {
    VCombo s(rs.rank);
    for (int u = 0; u < n; ++u) {
      if (b[u].is_zero()) continue;
      const VCombo& duv = B.ginv(u, v);
      if (duv.is_zero()) continue;
      s += vmul(rs, cc, b[u], duv);
    }
    a[v] = std::move(s);
  }

  if (x.is_qfree()) {
    CharElt recon(rs.rank);
    for (int v = 0; v < n; ++v) {
      if (a[v].is_zero()) continue;
      recon += contract(rs, cc, a[v]).mul(B.f[v]);
    }
    if (!(recon == x)) kls_abort("f-basis expansion does not reconstruct its input");
  }
  return a;
}

void filtration_checks(KLSBasis& B, const KLTable& kl) {
  const WeylGroup& W = *B.W;
  const CellData& cd = *B.cd;
  const RootSystem& rs = *B.rs;
  const int n = B.n;
  const int e = identity_index(W);
  const QWeight qzero = QWeight::constant(rs.zero());

  std::vector<CellModuleMatrices> mods;
  mods.reserve(cd.two_cells.size());
  for (int c = 0; c < int(cd.two_cells.size()); ++c) mods.push_back(cell_module_cprime(W, kl, cd, c));

  // One straightening box covering all the translated supports at once.
  std::vector<CharElt> translated(size_t(W.rank) * n, CharElt(W.rank));
  for (int i = 0; i < W.rank; ++i) {
    const int s = W.smul(i, e);
    for (int y = 0; y < n; ++y) translated[size_t(i) * n + y] = B.f[y].applied(W, s);
  }
  {
    std::vector<const CharElt*> as, bs;
    for (const auto& t : translated) as.push_back(&t);
    for (int u = 0; u < n; ++u) bs.push_back(&B.fup[u]);
    B.cc->build_box_for(as, bs);
  }

  for (int i = 0; i < W.rank; ++i) {
    for (int y = 0; y < n; ++y) {
      const std::vector<VCombo> a = expand_in_f(B, translated[size_t(i) * n + y]);
      const int cy = cd.two_id[y];
      const CellModuleMatrices& M = mods[cy];
      const int m = M.m();
      const int yloc = M.pos[y];
      for (int v = 0; v < n; ++v) {
        const int cv = cd.two_id[v];
        if (a[v].is_zero()) {
          if (cv == cy && M.gen[i][size_t(M.pos[v]) * m + yloc] != 0)
            kls_abort("s" + std::to_string(i + 1) + " . f_" + W.word_str(y) +
                      " misses the cell-module component on f_" + W.word_str(v));
          continue;
        }
        if (!cd.two_leq[cv][cy])
          kls_abort("s" + std::to_string(i + 1) + " . f_" + W.word_str(y) +
                    " leaves the filtration: component on f_" + W.word_str(v));
        if (cv == cy) {
          const long long entry = M.gen[i][size_t(M.pos[v]) * m + yloc];
          const VCombo want = VCombo::single(W.rank, qzero, Rat(entry));
          if (!(a[v] == want))
            kls_abort("subquotient action of s" + std::to_string(i + 1) + " on f_" + W.word_str(y) +
                      " disagrees with the cell module at f_" + W.word_str(v) + ": got " +
                      a[v].str() + ", want " + want.str());
        }
      }
    }
  }
}

PseudoDualReport pseudo_dual_scan(KLSBasis& B) {
  const CellData& cd = *B.cd;
  const int n = B.n;
  const QWeight qzero = QWeight::constant(B.rs->zero());
  if (!B.duals_built) kls_abort("pseudo-dual scan needs f*");

  {
    std::vector<const CharElt*> as, bs;
    for (int w = 0; w < n; ++w) {
      as.push_back(&B.fstar[w]);
      as.push_back(&B.fup[w]);
      bs.push_back(&B.fup[w]);
    }
    B.cc->build_box_for(as, bs);
  }

  PseudoDualReport rep;
  rep.exact.assign(n, 0);
  rep.graded.assign(n, 0);
  for (int w = 0; w < n; ++w) {
    const CharElt diff = B.fstar[w] - B.fup[w];
    if (diff.is_zero()) {
      rep.exact[w] = 1;
      rep.graded[w] = 1;
      continue;
    }
    const std::vector<VCombo> a = expand_in_f(B, diff);
    const int cw = cd.two_id[w];
    bool ok = true;
    for (int v = 0; v < n && ok; ++v) {
      if (a[v].is_zero()) continue;
      const int cv = cd.two_id[v];
      if (cd.two_leq[cv][cw] && cv != cw) continue;  // strictly lower: invisible in gr
      const auto it = a[v].t.find(qzero);
      if (it != a[v].t.end() && !it->second.is_zero()) ok = false;
    }
    rep.graded[w] = ok ? 1 : 0;
  }
  return rep;
}

void verify_dual_contract(KLSBasis& B, bool parallel) {
  const RootSystem& rs = *B.rs;
  const WeylGroup& W = *B.W;
  CharCaches& cc = *B.cc;
  const int n = B.n;
  if (!B.duals_built) kls_abort("dual contract needs f*");

  std::vector<PackedElt> pstar(n);
  for (int w = 0; w < n; ++w) pstar[w] = pack(B.fstar[w]);
  {
    std::vector<const CharElt*> as, bs;
    for (int w = 0; w < n; ++w) {
      as.push_back(&B.f[w]);
      bs.push_back(&B.fstar[w]);
    }
    cc.build_box_for(as, bs);
  }

  (void)parallel;
  const VCombo one = VCombo::single(W.rank, QWeight::constant(rs.zero()));
  const long long total = (long long)n * n;
  std::atomic<long long> fail(-1);
#ifdef KLSB_HAVE_OPENMP
#pragma omp parallel for schedule(dynamic, 16) if (parallel)
#endif
  for (long long idx = 0; idx < total; ++idx) {
    if (fail.load(std::memory_order_relaxed) >= 0) continue;
    const int v = int(idx / n), w = int(idx % n);
    const VCombo r = weyl_pairing_packed(rs, cc, B.pf[v], pstar[w], false);
    const bool ok = (v == w) ? (r == one) : r.is_zero();
    if (!ok) fail.store(idx, std::memory_order_relaxed);
  }
  const long long bad = fail.load();
  if (bad >= 0)
    kls_abort("dual contract failed at <f_" + W.word_str(int(bad / n)) + ", f*_" +
              W.word_str(int(bad % n)) + ">");
}

}  // namespace klsb
