#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "klsb/poly.hpp"
#include "klsb/rational.hpp"

namespace klsb {

constexpr int kMaxRank = 4;

// Weight written in the basis of fundamental weights.
struct Weight {
  int r = 0;
  std::array<int, kMaxRank> c{};

  bool operator==(const Weight& o) const { return r == o.r && c == o.c; }
  bool operator!=(const Weight& o) const { return !(*this == o); }
  bool operator<(const Weight& o) const { return c < o.c; }

  Weight operator+(const Weight& o) const {
    Weight w = *this;
    for (int i = 0; i < r; ++i) w.c[i] += o.c[i];
    return w;
  }
  Weight operator-(const Weight& o) const {
    Weight w = *this;
    for (int i = 0; i < r; ++i) w.c[i] -= o.c[i];
    return w;
  }
  Weight operator-() const {
    Weight w = *this;
    for (int i = 0; i < r; ++i) w.c[i] = -w.c[i];
    return w;
  }
};

// Weight whose coordinates are degree <= 1 polynomials in the symbolic
// parameter q: coordinate i is a[i] q + b[i]. Plain weights have a = 0.
struct QWeight {
  int r = 0;
  std::array<int, kMaxRank> a{};
  std::array<int, kMaxRank> b{};

  static QWeight constant(const Weight& w) {
    QWeight q;
    q.r = w.r;
    q.b = w.c;
    return q;
  }

  bool is_qfree() const {
    for (int i = 0; i < r; ++i)
      if (a[i] != 0) return false;
    return true;
  }
  Weight qpart() const { Weight w; w.r = r; w.c = a; return w; }
  Weight cpart() const { Weight w; w.r = r; w.c = b; return w; }

  bool operator==(const QWeight& o) const { return r == o.r && a == o.a && b == o.b; }
  bool operator!=(const QWeight& o) const { return !(*this == o); }
  bool operator<(const QWeight& o) const {
    if (a != o.a) return a < o.a;
    return b < o.b;
  }

  QWeight operator+(const QWeight& o) const {
    QWeight w = *this;
    for (int i = 0; i < r; ++i) {
      w.a[i] += o.a[i];
      w.b[i] += o.b[i];
    }
    return w;
  }
  QWeight operator-(const QWeight& o) const {
    QWeight w = *this;
    for (int i = 0; i < r; ++i) {
      w.a[i] -= o.a[i];
      w.b[i] -= o.b[i];
    }
    return w;
  }
  QWeight operator-() const {
    QWeight w = *this;
    for (int i = 0; i < r; ++i) {
      w.a[i] = -w.a[i];
      w.b[i] = -w.b[i];
    }
    return w;
  }

  // "q-1,0" style, matching the usual table notation for highest weights.
  std::string str() const;
};

struct QWeightHash {
  size_t operator()(const QWeight& w) const {
    uint64_t h = 0x9e3779b97f4a7c15ull;
    for (int i = 0; i < w.r; ++i) {
      h ^= uint64_t(uint32_t(w.a[i])) + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
      h ^= uint64_t(uint32_t(w.b[i])) + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    }
    return size_t(h);
  }
};

struct WeightHash {
  size_t operator()(const Weight& w) const {
    uint64_t h = 0x9e3779b97f4a7c15ull;
    for (int i = 0; i < w.r; ++i)
      h ^= uint64_t(uint32_t(w.c[i])) + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    return size_t(h);
  }
};

// Value of a coroot pairing against a QWeight: first * q + second.
struct QPair {
  long long qc = 0;
  long long cc = 0;
};

struct RootSystem {
  char letter = 'A';
  int rank = 0;

  // cartan[i][j] = <alpha_j, alpha_i^vee>; columns are the simple roots in
  // fundamental-weight coordinates.
  int cartan[kMaxRank][kMaxRank] = {};
  // (alpha_i, alpha_i) in the W-invariant form normalized so short roots
  // have squared length 2.
  int len2[kMaxRank] = {};

  struct PosRoot {
    std::array<int, kMaxRank> rc{};  // coordinates in the simple-root basis
    int len2 = 0;                    // (beta, beta)
  };
  std::vector<PosRoot> positive;  // positive[i] = alpha_i for i < rank

  Rat cartan_inv[kMaxRank][kMaxRank];  // exact inverse of cartan
  Rat fund_ip[kMaxRank][kMaxRank];     // (omega_i, omega_j)
  Rat rho_omega[kMaxRank];             // (rho, omega_i)
  Rat rho_rho;                         // (rho, rho)
  Rat kbound;                          // 2 (rho, rho) + 2

  std::string name() const { return std::string(1, letter) + std::to_string(rank); }

  Weight zero() const { Weight w; w.r = rank; return w; }
  Weight rho() const {
    Weight w;
    w.r = rank;
    for (int i = 0; i < rank; ++i) w.c[i] = 1;
    return w;
  }
  // Sum of the fundamental weights indexed by the bits of mask.
  Weight omega(unsigned mask) const {
    Weight w;
    w.r = rank;
    for (int i = 0; i < rank; ++i) w.c[i] = (mask >> i) & 1u;
    return w;
  }

  // s_i acting on fundamental coordinates: c_k -> c_k - c_i * cartan[k][i].
  void apply_simple(int i, Weight& w) const {
    int ci = w.c[i];
    if (ci == 0) return;
    for (int k = 0; k < rank; ++k) w.c[k] -= ci * cartan[k][i];
  }
  void apply_simple(int i, QWeight& w) const {
    int ai = w.a[i], bi = w.b[i];
    if (ai == 0 && bi == 0) return;
    for (int k = 0; k < rank; ++k) {
      w.a[k] -= ai * cartan[k][i];
      w.b[k] -= bi * cartan[k][i];
    }
  }

  // (rho, omega_I) for a descent mask; the triangularity height h(w).
  Rat height_of_mask(unsigned mask) const {
    Rat h(0);
    for (int i = 0; i < rank; ++i)
      if ((mask >> i) & 1u) h += rho_omega[i];
    return h;
  }
};

// Supported types: A1..A4, B2..B4, C3, D4, G2. Aborts on anything else.
RootSystem build_root_system(char letter, int rank);

// <lambda, beta^vee> for the positive root with the given index, as a linear
// polynomial in q. Always integral on (q-)weights; aborts otherwise.
QPair coroot_pairing(const RootSystem& rs, const QWeight& lambda, int posroot_index);

// Result of moving nu into the (strictly) dominant cone by simple
// reflections, in the large-q sense: coordinates a q + b are compared by the
// sign of a first, then b. sign = 0 means nu is singular (a wall pairing is
// identically zero), in which case lam is unspecified.
//
// q0 is the smallest integer q for which every lexicographic sign decision
// taken along the walk is the true numeric sign; results quantified over
// "large q" hold for all q >= q0.
struct Straightened {
  int sign = 0;
  QWeight lam;  // y nu - rho, strictly dominant shifted back by rho
  long long q0 = 1;
};

Straightened straighten(const RootSystem& rs, const QWeight& nu);

// Dominant representative of the W-orbit (plain dominance walk, no rho
// shift), for plain weights.
Weight dominant_rep(const RootSystem& rs, const Weight& w);

// True if lambda - mu is a nonnegative rational combination of simple roots.
bool dominance_leq(const RootSystem& rs, const Weight& mu, const Weight& lam);

// Weyl dimension formula for highest weight lambda with coordinates linear
// in q, as a polynomial in q.
PolyQ weyl_dim_poly(const RootSystem& rs, const QWeight& lambda);

}  // namespace klsb
