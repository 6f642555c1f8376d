#include "klsb/char_ring.hpp"

#include <algorithm>
#include <cstdio>
#include <stdexcept>
#include <unordered_set>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace klsb {

namespace {

[[noreturn]] void cr_abort(const std::string& msg) {
  std::fprintf(stderr, "klsb: character ring error: %s\n", msg.c_str());
  std::abort();
}

Rat weight_ip(const RootSystem& rs, const Weight& x, const Weight& y) {
  Rat s(0);
  for (int i = 0; i < rs.rank; ++i) {
    if (x.c[i] == 0) continue;
    for (int j = 0; j < rs.rank; ++j) {
      if (y.c[j] == 0) continue;
      s += rs.fund_ip[i][j] * Rat(checked_mul_ll(x.c[i], y.c[j], "weight_ip"));
    }
  }
  return s;
}

}  // namespace

void CharElt::scale(const Rat& c) {
  if (c.is_zero()) {
    t.clear();
    return;
  }
  for (auto& [w, x] : t) x *= c;
}

CharElt CharElt::mul(const CharElt& o) const {
  CharElt r(rank);
  if (t.empty() || o.t.empty()) return r;
  // Iterate the smaller operand on the outside for better locality.
  const CharElt* a = this;
  const CharElt* b = &o;
  if (a->t.size() > b->t.size()) std::swap(a, b);
  for (const auto& [wa, ca] : a->t)
    for (const auto& [wb, cb] : b->t) r.add(wa + wb, ca * cb);
  return r;
}

CharElt CharElt::inv_weights() const {
  CharElt r(rank);
  for (const auto& [w, c] : t) r.t.emplace(-w, c);
  return r;
}

CharElt CharElt::applied(const WeylGroup& W, int w) const {
  CharElt r(rank);
  for (const auto& [x, c] : t) r.add(W.act(w, x), c);
  return r;
}

bool CharElt::is_qfree() const {
  for (const auto& [w, c] : t)
    if (!w.is_qfree()) return false;
  return true;
}

CharElt CharElt::frobenius() const {
  CharElt r(rank);
  for (const auto& [w, c] : t) {
    if (!w.is_qfree())
      throw std::domain_error("frobenius twist is only defined on q-free elements");
    QWeight nw;
    nw.r = w.r;
    nw.a = w.b;
    r.add(nw, c);
  }
  return r;
}

bool CharElt::is_invariant(const WeylGroup& W) const {
  for (int i = 0; i < W.rank; ++i) {
    int si = W.smul(i, 0);
    if (!(applied(W, si) == *this)) return false;
  }
  return true;
}

bool CharElt::operator==(const CharElt& o) const {
  if (t.size() != o.t.size()) return false;
  for (const auto& [w, c] : t) {
    auto it = o.t.find(w);
    if (it == o.t.end() || it->second != c) return false;
  }
  return true;
}

std::vector<std::pair<QWeight, Rat>> CharElt::sorted() const {
  std::vector<std::pair<QWeight, Rat>> v(t.begin(), t.end());
  std::sort(v.begin(), v.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  return v;
}

PackedElt pack(const CharElt& e) {
  PackedElt p;
  p.rank = e.rank;
  int128 lcm = 1;
  for (const auto& [w, c] : e.t) {
    int128 d = c.den;
    int128 g = d;
    int128 l = lcm;
    while (l != 0) {
      int128 tmp = g % l;
      g = l;
      l = tmp;
    }
    lcm = checked_mul(lcm / g, d, "pack lcm");
  }
  if (lcm > int128(INT64_MAX)) arithmetic_abort("pack: denominator too large");
  p.den = (long long)lcm;
  p.terms.reserve(e.t.size());
  for (const auto& [w, c] : e.t) {
    int128 n = checked_mul(c.num, lcm / c.den, "pack num");
    if (n > int128(INT64_MAX) || n < int128(INT64_MIN))
      arithmetic_abort("pack: coefficient too large");
    p.terms.emplace_back(w, (long long)n);
  }
  std::sort(p.terms.begin(), p.terms.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  return p;
}

std::string VCombo::str() const {
  if (t.empty()) return "0";
  std::string s;
  for (const auto& [w, c] : t) {
    Rat a = c;
    if (s.empty()) {
      if (a.num < 0) {
        s += "-";
        a = -a;
      }
    } else {
      s += a.num < 0 ? " - " : " + ";
      if (a.num < 0) a = -a;
    }
    if (a != Rat(1)) s += a.str() + "*";
    s += "V_{" + w.str() + "}";
  }
  return s;
}

void CharCaches::build_box_for(const std::vector<const CharElt*>& as,
                               const std::vector<const CharElt*>& bs, int pad) {
  box_ready = false;
  box.clear();
  const int r = rs->rank;
  bool have_a = false, have_b = false;
  int alo[kMaxRank], ahi[kMaxRank], blo2[kMaxRank], bhi2[kMaxRank];
  for (int k = 0; k < r; ++k) {
    alo[k] = blo2[k] = INT32_MAX;
    ahi[k] = bhi2[k] = INT32_MIN;
  }
  auto scan = [&](const std::vector<const CharElt*>& es, int* lo, int* hi, bool& have) {
    for (const CharElt* e : es)
      for (const auto& [w, c] : e->t) {
        if (!w.is_qfree()) continue;
        have = true;
        for (int k = 0; k < r; ++k) {
          lo[k] = std::min(lo[k], w.b[k]);
          hi[k] = std::max(hi[k], w.b[k]);
        }
      }
  };
  scan(as, alo, ahi, have_a);
  scan(bs, blo2, bhi2, have_b);
  if (!have_a || !have_b) return;

  long long total = 1;
  for (int k = 0; k < r; ++k) {
    blo[k] = alo[k] - bhi2[k] - pad;
    bhi[k] = ahi[k] - blo2[k] + pad;
    total = checked_mul_ll(total, bhi[k] - blo[k] + 1, "box size");
  }
  constexpr long long kBoxCap = 32000000;
  if (total > kBoxCap) return;

  box.resize(size_t(total));
  // Fill eagerly; the straightening walk is cheap and the result is then
  // shared read-only by all threads.
  std::array<int, kMaxRank> idx{};
  QWeight nu;
  nu.r = r;
  for (long long pos = 0; pos < total; ++pos) {
    long long rem = pos;
    for (int k = r - 1; k >= 0; --k) {
      idx[k] = int(rem % (bhi[k] - blo[k] + 1));
      rem /= (bhi[k] - blo[k] + 1);
    }
    for (int k = 0; k < r; ++k) nu.b[k] = blo[k] + idx[k];
    Straightened st = straighten(*rs, nu);
    BoxEntry& be = box[size_t(pos)];
    if (st.sign == 0) {
      be.state = 2;
    } else {
      be.state = int8_t(st.sign);
      for (int k = 0; k < r; ++k) {
        int v = st.lam.b[k];
        if (v > INT16_MAX || v < INT16_MIN) cr_abort("box entry out of int16 range");
        be.lam[k] = int16_t(v);
      }
    }
  }
  box_ready = true;
}

Straightened CharCaches::straighten_shared(const QWeight& nu) const {
  if (box_ready && nu.is_qfree()) {
    const int r = rs->rank;
    long long pos = 0;
    bool in = true;
    for (int k = 0; k < r; ++k) {
      int v = nu.b[k];
      if (v < blo[k] || v > bhi[k]) {
        in = false;
        break;
      }
      pos = pos * (bhi[k] - blo[k] + 1) + (v - blo[k]);
    }
    if (in) {
      const BoxEntry& be = box[size_t(pos)];
      Straightened st;
      if (be.state == 2) {
        st.sign = 0;
        return st;
      }
      st.sign = be.state;
      st.lam.r = r;
      for (int k = 0; k < r; ++k) st.lam.b[k] = be.lam[k];
      st.q0 = 1;
      return st;
    }
  }
  return straighten(*rs, nu);
}

Straightened CharCaches::straighten_memo(const QWeight& nu) {
  auto it = smemo.find(nu);
  if (it != smemo.end()) return it->second;
  Straightened st = straighten_shared(nu);
  smemo.emplace(nu, st);
  return st;
}

const std::map<Weight, long long>& CharCaches::freudenthal(const Weight& lam) {
  auto it = freud.find(lam);
  if (it != freud.end()) return it->second;
  const int r = rs->rank;
  for (int i = 0; i < r; ++i)
    if (lam.c[i] < 0) cr_abort("freudenthal needs a dominant weight");

  // c_k bounds: mu = lam - sum c_k alpha_k dominant forces
  // c_k = (C^{-1}(lam - mu))_k <= (C^{-1} lam)_k (inverse Cartan entries are
  // nonnegative in finite type).
  int cmax[kMaxRank] = {};
  for (int k = 0; k < r; ++k) {
    Rat b(0);
    for (int j = 0; j < r; ++j) b += rs->cartan_inv[k][j] * Rat(lam.c[j]);
    long long f = b.num / b.den;  // floor for nonnegative values
    if (b.num < 0) cr_abort("freudenthal: negative coordinate bound");
    cmax[k] = int(f);
  }

  // Enumerate dominant mu <= lam together with the height distance sum(c).
  std::vector<std::pair<int, Weight>> doms;
  std::array<int, kMaxRank> cc{};
  while (true) {
    Weight mu = lam;
    int hsum = 0;
    for (int k = 0; k < r; ++k) {
      hsum += cc[k];
      if (cc[k] == 0) continue;
      for (int j = 0; j < r; ++j) mu.c[j] -= cc[k] * rs->cartan[j][k];
    }
    bool dom = true;
    for (int j = 0; j < r; ++j)
      if (mu.c[j] < 0) {
        dom = false;
        break;
      }
    if (dom) doms.emplace_back(hsum, mu);
    int k = r - 1;
    while (k >= 0 && cc[k] == cmax[k]) {
      cc[k] = 0;
      --k;
    }
    if (k < 0) break;
    ++cc[k];
  }
  std::sort(doms.begin(), doms.end(), [](const auto& a, const auto& b) {
    if (a.first != b.first) return a.first < b.first;
    return a.second < b.second;
  });

  std::map<Weight, long long> mult;
  std::unordered_map<Weight, long long, WeightHash> lookup;
  Weight rho = rs->rho();
  Rat norm_lam = weight_ip(*rs, lam + rho, lam + rho);

  // Positive roots in fundamental coordinates.
  std::vector<Weight> posf(rs->positive.size());
  for (size_t b = 0; b < rs->positive.size(); ++b) {
    Weight f;
    f.r = r;
    for (int k = 0; k < r; ++k) {
      int s = 0;
      for (int j = 0; j < r; ++j) s += rs->cartan[k][j] * rs->positive[b].rc[j];
      f.c[k] = s;
    }
    posf[b] = f;
  }

  auto mult_of = [&](const Weight& nu) -> long long {
    Weight d = dominant_rep(*rs, nu);
    auto jt = lookup.find(d);
    return jt == lookup.end() ? 0 : jt->second;
  };

  for (const auto& [hsum, mu] : doms) {
    if (hsum == 0) {
      mult[mu] = 1;
      lookup[mu] = 1;
      continue;
    }
    Rat rhs(0);
    for (size_t b = 0; b < posf.size(); ++b) {
      for (int k = 1;; ++k) {
        Weight nu = mu;
        for (int j = 0; j < r; ++j) nu.c[j] += k * posf[b].c[j];
        long long m = mult_of(nu);
        // Weights of a module form unbroken strings along each root
        // direction, and mu itself is a weight, so the first gap ends the
        // string.
        if (m == 0) break;
        rhs += Rat(2) * Rat(m) * weight_ip(*rs, nu, posf[b]);
      }
    }
    Rat denom = norm_lam - weight_ip(*rs, mu + rho, mu + rho);
    if (denom.is_zero()) cr_abort("freudenthal: singular denominator");
    Rat m = rhs / denom;
    if (!m.is_integer() || m.num < 0) cr_abort("freudenthal: non-integral multiplicity");
    long long mv = m.as_ll("freudenthal");
    if (mv > 0) {
      mult[mu] = mv;
      lookup[mu] = mv;
    }
  }

  auto [jt, fresh] = freud.emplace(lam, std::move(mult));
  (void)fresh;
  return jt->second;
}

const CharElt& CharCaches::ch_monomials(const Weight& lam) {
  auto it = chmono.find(lam);
  if (it != chmono.end()) return it->second;
  const auto& mult = freudenthal(lam);
  CharElt e(rs->rank);
  int128 count = 0;
  for (const auto& [mu, m] : mult) {
    // Expand the W-orbit of mu by closing under simple reflections.
    std::unordered_set<Weight, WeightHash> orbit;
    std::vector<Weight> stack{mu};
    orbit.insert(mu);
    while (!stack.empty()) {
      Weight w = stack.back();
      stack.pop_back();
      for (int i = 0; i < rs->rank; ++i) {
        Weight v = w;
        rs->apply_simple(i, v);
        if (orbit.insert(v).second) stack.push_back(v);
      }
    }
    for (const Weight& w : orbit) e.add(QWeight::constant(w), Rat(m));
    count = checked_add(count, checked_mul(int128(m), int128(orbit.size()), "chmono"), "chmono");
  }
  // Cross-check the total against the Weyl dimension formula.
  Rat dim = weyl_dim_poly(*rs, QWeight::constant(lam)).eval(Rat(0));
  if (dim != Rat(count, 1)) cr_abort("character support does not match the dimension formula");
  auto [jt, fresh] = chmono.emplace(lam, std::move(e));
  (void)fresh;
  return jt->second;
}

namespace {

VCombo pairing_impl(const RootSystem& rs, const CharCaches& cc, const PackedElt& f,
                    const PackedElt& g, bool invert_second, bool parallel) {
  using Acc = std::unordered_map<QWeight, int128, QWeightHash>;
  Acc acc;
  long long q0 = 1;

  auto body = [&](const std::pair<QWeight, long long>& tf, Acc& a, long long& lq0) {
    for (const auto& [wg, cg] : g.terms) {
      QWeight nu = invert_second ? tf.first - wg : tf.first + wg;
      Straightened st = cc.straighten_shared(nu);
      if (st.sign == 0) continue;
      lq0 = std::max(lq0, st.q0);
      int128 add = int128(tf.second) * int128(cg);
      if (st.sign < 0) add = -add;
      auto [it, fresh] = a.try_emplace(st.lam, add);
      if (!fresh) it->second = checked_add(it->second, add, "pairing acc");
    }
  };

#ifdef _OPENMP
  if (parallel && f.terms.size() > 1) {
    int nt = omp_get_max_threads();
    std::vector<Acc> parts(nt);
    std::vector<long long> q0s(nt, 1);
#pragma omp parallel for schedule(dynamic, 8)
    for (size_t i = 0; i < f.terms.size(); ++i) {
      int tid = omp_get_thread_num();
      body(f.terms[i], parts[tid], q0s[tid]);
    }
    for (int tpos = 0; tpos < nt; ++tpos) {
      q0 = std::max(q0, q0s[tpos]);
      for (const auto& [w, v] : parts[tpos]) {
        auto [it, fresh] = acc.try_emplace(w, v);
        if (!fresh) it->second = checked_add(it->second, v, "pairing merge");
      }
    }
  } else
#endif
  {
    (void)parallel;
    for (const auto& tf : f.terms) body(tf, acc, q0);
  }

  VCombo out(rs.rank);
  out.q0 = q0;
  int128 den = checked_mul(int128(f.den), int128(g.den), "pairing den");
  for (const auto& [w, v] : acc) {
    if (v == 0) continue;
    out.t.emplace(w, Rat(v, den));
  }
  return out;
}

}  // namespace

VCombo weyl_pairing(const RootSystem& rs, CharCaches& cc, const CharElt& f, const CharElt& g) {
  return pairing_impl(rs, cc, pack(f), pack(g), true, false);
}

VCombo weyl_pairing_naive(const RootSystem& rs, CharCaches& cc, const CharElt& f,
                          const CharElt& g) {
  return pairing_impl(rs, cc, pack(f), pack(g), false, false);
}

VCombo weyl_pairing_packed(const RootSystem& rs, const CharCaches& cc, const PackedElt& f,
                           const PackedElt& g, bool parallel) {
  return pairing_impl(rs, cc, f, g, true, parallel);
}

VCombo expand_invariant(const RootSystem& rs, const WeylGroup& W, CharCaches& cc,
                        const CharElt& f) {
  if (!f.is_qfree()) cr_abort("expand_invariant needs a q-free element");
  if (!f.is_invariant(W)) cr_abort("expand_invariant: element is not W-invariant");
  CharElt rem = f;
  VCombo out(rs.rank);
  for (int iter = 0; !rem.t.empty(); ++iter) {
    if (iter > 200000) cr_abort("expand_invariant did not terminate");
    // The support is W-stable, so its height-maximal member is dominant.
    bool first = true;
    Weight lead;
    Rat lead_h(0);
    Rat lead_c(0);
    for (const auto& [w, c] : rem.t) {
      Weight cp = w.cpart();
      Rat h(0);
      for (int k = 0; k < rs.rank; ++k)
        for (int j = 0; j < rs.rank; ++j) h += rs.cartan_inv[k][j] * Rat(cp.c[j]);
      if (first || lead_h < h || (lead_h == h && lead < cp)) {
        first = false;
        lead = cp;
        lead_h = h;
        lead_c = c;
      }
    }
    for (int k = 0; k < rs.rank; ++k)
      if (lead.c[k] < 0) cr_abort("expand_invariant: leading weight is not dominant");
    out.add(QWeight::constant(lead), lead_c);
    CharElt sub = cc.ch_monomials(lead);
    sub.scale(lead_c);
    rem -= sub;
  }
  return out;
}

CharElt contract(const RootSystem& rs, CharCaches& cc, const VCombo& v) {
  CharElt out(rs.rank);
  for (const auto& [w, c] : v.t) {
    if (!w.is_qfree()) cr_abort("contract needs q-free highest weights");
    CharElt ch = cc.ch_monomials(w.cpart());
    ch.scale(c);
    out += ch;
  }
  return out;
}

VCombo vmul(const RootSystem& rs, CharCaches& cc, const VCombo& A, const VCombo& B) {
  VCombo out(rs.rank);
  out.q0 = std::max(A.q0, B.q0);
  Weight rho = rs.rho();
  for (const auto& [la, ca] : A.t) {
    for (const auto& [mu, cb] : B.t) {
      // Expand the side with the smaller module over its weights and
      // straighten against the other.
      const QWeight* big = &la;
      const Weight* small_dom = nullptr;
      Weight la_c, mu_c;
      if (la.is_qfree() && mu.is_qfree()) {
        la_c = la.cpart();
        mu_c = mu.cpart();
        Rat da = weyl_dim_poly(rs, la).eval(Rat(0));
        Rat db = weyl_dim_poly(rs, mu).eval(Rat(0));
        if (da < db) {
          big = &mu;
          small_dom = &la_c;
        } else {
          small_dom = &mu_c;
        }
      } else if (mu.is_qfree()) {
        mu_c = mu.cpart();
        small_dom = &mu_c;
      } else if (la.is_qfree()) {
        la_c = la.cpart();
        big = &mu;
        small_dom = &la_c;
      } else {
        cr_abort("vmul: both factors carry q in their highest weights");
      }
      Rat cab = ca * cb;
      const CharElt& ch = cc.ch_monomials(*small_dom);
      for (const auto& [nu, m] : ch.t) {
        QWeight arg = *big;
        for (int k = 0; k < rs.rank; ++k) arg.b[k] += nu.b[k] + rho.c[k];
        Straightened st = cc.straighten_memo(arg);
        if (st.sign == 0) continue;
        out.q0 = std::max(out.q0, st.q0);
        Rat term = cab * m;
        if (st.sign < 0) term = -term;
        out.add(st.lam, term);
      }
    }
  }
  return out;
}

VCombo dual_twist(const RootSystem& rs, const WeylGroup& W, const VCombo& v) {
  (void)rs;
  VCombo out(v.rank);
  out.q0 = v.q0;
  for (const auto& [w, c] : v.t) out.add(-W.act(W.w0, w), c);
  return out;
}

}  // namespace klsb
