#pragma once

#include <map>
#include <string>
#include <unordered_map>
#include <vector>

#include "klsb/root_system.hpp"
#include "klsb/weyl_group.hpp"

namespace klsb {

// Element of the character ring of the torus: a finite rational linear
// combination of formal exponentials exp(lambda), with lambda allowed to have
// coordinates linear in the symbolic parameter q.
struct CharElt {
  int rank = 0;
  std::unordered_map<QWeight, Rat, QWeightHash> t;

  explicit CharElt(int r = 0) : rank(r) {}

  static CharElt monomial(int rank, const QWeight& w, const Rat& c = Rat(1)) {
    CharElt e(rank);
    e.add(w, c);
    return e;
  }

  size_t size() const { return t.size(); }
  bool is_zero() const { return t.empty(); }

  void add(const QWeight& w, const Rat& c) {
    if (c.is_zero()) return;
    auto [it, fresh] = t.try_emplace(w, c);
    if (!fresh) {
      it->second += c;
      if (it->second.is_zero()) t.erase(it);
    }
  }

  CharElt& operator+=(const CharElt& o) {
    for (const auto& [w, c] : o.t) add(w, c);
    return *this;
  }
  CharElt& operator-=(const CharElt& o) {
    for (const auto& [w, c] : o.t) add(w, -c);
    return *this;
  }
  CharElt operator+(const CharElt& o) const { CharElt r = *this; r += o; return r; }
  CharElt operator-(const CharElt& o) const { CharElt r = *this; r -= o; return r; }

  void scale(const Rat& c);
  CharElt mul(const CharElt& o) const;           // convolution product
  CharElt inv_weights() const;                   // exp(lambda) -> exp(-lambda)
  CharElt applied(const WeylGroup& W, int w) const;
  bool is_qfree() const;
  // exp(mu) -> exp(q mu); requires a q-free element, else std::domain_error.
  CharElt frobenius() const;
  bool is_invariant(const WeylGroup& W) const;
  bool operator==(const CharElt& o) const;

  std::vector<std::pair<QWeight, Rat>> sorted() const;
};

// Integer-cleared form of a CharElt for the pairing kernels: all coefficients
// times den are integers.
struct PackedElt {
  int rank = 0;
  long long den = 1;
  std::vector<std::pair<QWeight, long long>> terms;
};

PackedElt pack(const CharElt& e);

// A rational combination of Weyl characters V_lambda, possibly with highest
// weights depending on q. q0 records the threshold from which every
// straightening decision made while producing it is numerically valid.
struct VCombo {
  int rank = 0;
  std::map<QWeight, Rat> t;
  long long q0 = 1;

  explicit VCombo(int r = 0) : rank(r) {}

  static VCombo single(int rank, const QWeight& w, const Rat& c = Rat(1)) {
    VCombo v(rank);
    if (!c.is_zero()) v.t.emplace(w, c);
    return v;
  }

  bool is_zero() const { return t.empty(); }

  void add(const QWeight& w, const Rat& c) {
    if (c.is_zero()) return;
    auto [it, fresh] = t.try_emplace(w, c);
    if (!fresh) {
      it->second += c;
      if (it->second.is_zero()) t.erase(it);
    }
  }

  VCombo& operator+=(const VCombo& o) {
    for (const auto& [w, c] : o.t) add(w, c);
    q0 = std::max(q0, o.q0);
    return *this;
  }
  VCombo& operator-=(const VCombo& o) {
    for (const auto& [w, c] : o.t) add(w, -c);
    q0 = std::max(q0, o.q0);
    return *this;
  }
  VCombo operator+(const VCombo& o) const { VCombo r = *this; r += o; return r; }
  VCombo operator-(const VCombo& o) const { VCombo r = *this; r -= o; return r; }

  void scale(const Rat& c) {
    if (c.is_zero()) { t.clear(); return; }
    for (auto& [w, x] : t) x *= c;
  }

  bool is_integral() const {
    for (const auto& [w, c] : t)
      if (!c.is_integer()) return false;
    return true;
  }
  bool is_qfree() const {
    for (const auto& [w, c] : t)
      if (!w.is_qfree()) return false;
    return true;
  }

  // Equality of the combinations themselves (q0 is metadata, not compared).
  bool operator==(const VCombo& o) const { return t == o.t; }
  bool operator!=(const VCombo& o) const { return !(*this == o); }

  // "V_{q-1,0} - V_{q-3,0}"
  std::string str() const;
};

// Memoization shared by the character-ring algorithms for one root system.
// The dense straightening box is read-only once built and safe to share
// across threads; the hash-map caches are for single-threaded use.
struct CharCaches {
  const RootSystem* rs = nullptr;

  bool box_ready = false;
  int blo[kMaxRank] = {};
  int bhi[kMaxRank] = {};
  struct BoxEntry {
    int8_t state = 0;  // 0 unset, 1 regular, -1 regular negative sign, 2 singular
    std::array<int16_t, kMaxRank> lam{};
  };
  std::vector<BoxEntry> box;

  std::unordered_map<QWeight, Straightened, QWeightHash> smemo;
  std::unordered_map<Weight, std::map<Weight, long long>, WeightHash> freud;
  std::unordered_map<Weight, CharElt, WeightHash> chmono;

  explicit CharCaches(const RootSystem& r) : rs(&r) {}

  // Cover all differences a - b of q-free monomials of the given elements,
  // with padding, by the dense box; call once before heavy pairing batches.
  void build_box_for(const std::vector<const CharElt*>& as,
                     const std::vector<const CharElt*>& bs, int pad = 2);

  // Thread-safe straightening: dense box for q-free in-range arguments,
  // direct computation otherwise (no memo writes).
  Straightened straighten_shared(const QWeight& nu) const;
  // Memoizing straightening for single-threaded call sites.
  Straightened straighten_memo(const QWeight& nu);

  const std::map<Weight, long long>& freudenthal(const Weight& dominant_lambda);
  const CharElt& ch_monomials(const Weight& dominant_lambda);
};

// The contravariant form pairing <f, g>: antisymmetrize f * inv(g) against
// the Weyl denominator and express the result in Weyl characters. The weight
// negation on the second argument makes the pairing A-linear in the first
// slot and twisted-linear in the second, and normalizes <f_w, f^w> = +1.
VCombo weyl_pairing(const RootSystem& rs, CharCaches& cc, const CharElt& f, const CharElt& g);

// Audit variant without the weight negation on g (the literal
// antisymmetrization of f * g). Not used by the engine proper.
VCombo weyl_pairing_naive(const RootSystem& rs, CharCaches& cc, const CharElt& f,
                          const CharElt& g);

// Hot-path pairing on packed operands; parallelizes over the first operand.
VCombo weyl_pairing_packed(const RootSystem& rs, const CharCaches& cc, const PackedElt& f,
                           const PackedElt& g, bool parallel = false);

// Expand a q-free W-invariant element in Weyl characters by repeated
// subtraction of leading terms. Aborts if the element is not invariant.
VCombo expand_invariant(const RootSystem& rs, const WeylGroup& W, CharCaches& cc,
                        const CharElt& f);

// Monomial expansion of a q-free Weyl-character combination.
CharElt contract(const RootSystem& rs, CharCaches& cc, const VCombo& v);

// Product of two q-free Weyl-character combinations via the Brauer-Klimyk
// rule, expanding the side with fewer weights.
VCombo vmul(const RootSystem& rs, CharCaches& cc, const VCombo& A, const VCombo& B);

// Entrywise dual twist lambda -> -w0 lambda on highest weights; this is how
// weight negation acts on invariants.
VCombo dual_twist(const RootSystem& rs, const WeylGroup& W, const VCombo& v);

}  // namespace klsb
