#include "klsb/root_system.hpp"

#include <algorithm>
#include <cstdio>
#include <set>

namespace klsb {

std::string QWeight::str() const {
  std::string s;
  for (int i = 0; i < r; ++i) {
    if (i) s.push_back(',');
    int qa = a[i], cb = b[i];
    if (qa == 0) {
      s += std::to_string(cb);
      continue;
    }
    if (qa == 1) s += "q";
    else if (qa == -1) s += "-q";
    else s += std::to_string(qa) + "q";
    if (cb > 0) s += "+" + std::to_string(cb);
    else if (cb < 0) s += std::to_string(cb);
  }
  return s;
}

namespace {

[[noreturn]] void rs_abort(const std::string& msg) {
  std::fprintf(stderr, "klsb: root system error: %s\n", msg.c_str());
  std::abort();
}

void invert_matrix(const int m[kMaxRank][kMaxRank], int n, Rat out[kMaxRank][kMaxRank]) {
  Rat aug[kMaxRank][2 * kMaxRank];
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      aug[i][j] = Rat(m[i][j]);
      aug[i][n + j] = Rat(i == j ? 1 : 0);
    }
  for (int col = 0; col < n; ++col) {
    int piv = -1;
    for (int i = col; i < n; ++i)
      if (!aug[i][col].is_zero()) { piv = i; break; }
    if (piv < 0) rs_abort("singular Cartan matrix");
    if (piv != col)
      for (int j = 0; j < 2 * n; ++j) std::swap(aug[piv][j], aug[col][j]);
    Rat d = aug[col][col];
    for (int j = 0; j < 2 * n; ++j) aug[col][j] /= d;
    for (int i = 0; i < n; ++i) {
      if (i == col || aug[i][col].is_zero()) continue;
      Rat f = aug[i][col];
      for (int j = 0; j < 2 * n; ++j) aug[i][j] -= f * aug[col][j];
    }
  }
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) out[i][j] = aug[i][n + j];
}

int expected_positive_count(char letter, int rank) {
  switch (letter) {
    case 'A': return rank * (rank + 1) / 2;
    case 'B':
    case 'C': return rank * rank;
    case 'D': return rank * (rank - 1);
    case 'G': return 6;
  }
  return -1;
}

}  // namespace

RootSystem build_root_system(char letter, int rank) {
  RootSystem rs;
  rs.letter = letter;
  rs.rank = rank;

  bool ok = (letter == 'A' && rank >= 1 && rank <= 4) ||
            (letter == 'B' && rank >= 2 && rank <= 4) ||
            (letter == 'C' && rank == 3) ||
            (letter == 'D' && rank == 4) ||
            (letter == 'G' && rank == 2);
  if (!ok) rs_abort("unsupported type " + std::string(1, letter) + std::to_string(rank));

  // cartan[i][j] = <alpha_j, alpha_i^vee>, Bourbaki numbering.
  for (int i = 0; i < rank; ++i) rs.cartan[i][i] = 2;
  auto bond = [&](int i, int j, int cij, int cji) {
    rs.cartan[i][j] = cij;  // <alpha_j, alpha_i^vee>
    rs.cartan[j][i] = cji;
  };
  switch (letter) {
    case 'A':
      for (int i = 0; i + 1 < rank; ++i) bond(i, i + 1, -1, -1);
      for (int i = 0; i < rank; ++i) rs.len2[i] = 2;
      break;
    case 'B':
      // alpha_rank is the short root.
      for (int i = 0; i + 2 < rank; ++i) bond(i, i + 1, -1, -1);
      bond(rank - 2, rank - 1, -1, -2);
      for (int i = 0; i < rank; ++i) rs.len2[i] = (i == rank - 1) ? 2 : 4;
      break;
    case 'C':
      // alpha_rank is the long root.
      for (int i = 0; i + 2 < rank; ++i) bond(i, i + 1, -1, -1);
      bond(rank - 2, rank - 1, -2, -1);
      for (int i = 0; i < rank; ++i) rs.len2[i] = (i == rank - 1) ? 4 : 2;
      break;
    case 'D':
      // Central node alpha_2 bonded to alpha_1, alpha_3, alpha_4.
      bond(0, 1, -1, -1);
      bond(1, 2, -1, -1);
      bond(1, 3, -1, -1);
      for (int i = 0; i < rank; ++i) rs.len2[i] = 2;
      break;
    case 'G':
      // alpha_1 short, alpha_2 long.
      bond(0, 1, -3, -1);
      rs.len2[0] = 2;
      rs.len2[1] = 6;
      break;
  }

  // Positive roots: close the simple roots under simple reflections, keeping
  // those with nonnegative simple-root coordinates.
  {
    std::set<std::array<int, kMaxRank>> seen;
    std::vector<RootSystem::PosRoot> frontier;
    for (int i = 0; i < rank; ++i) {
      RootSystem::PosRoot p;
      p.rc[i] = 1;
      p.len2 = rs.len2[i];
      seen.insert(p.rc);
      frontier.push_back(p);
      rs.positive.push_back(p);
    }
    while (!frontier.empty()) {
      std::vector<RootSystem::PosRoot> next;
      for (const auto& p : frontier) {
        // fundamental coordinates of this root
        int f[kMaxRank] = {};
        for (int k = 0; k < rank; ++k)
          for (int j = 0; j < rank; ++j) f[k] += rs.cartan[k][j] * p.rc[j];
        for (int i = 0; i < rank; ++i) {
          RootSystem::PosRoot q = p;
          q.rc[i] -= f[i];  // s_i beta = beta - <beta, alpha_i^vee> alpha_i
          bool positive = true;
          for (int j = 0; j < rank; ++j)
            if (q.rc[j] < 0) { positive = false; break; }
          if (!positive || seen.count(q.rc)) continue;
          seen.insert(q.rc);
          next.push_back(q);
          rs.positive.push_back(q);
        }
      }
      frontier = std::move(next);
    }
    std::sort(rs.positive.begin(), rs.positive.end(),
              [](const RootSystem::PosRoot& x, const RootSystem::PosRoot& y) {
                int hx = 0, hy = 0;
                for (int i = 0; i < kMaxRank; ++i) { hx += x.rc[i]; hy += y.rc[i]; }
                if (hx != hy) return hx < hy;
                return x.rc < y.rc;
              });
    if (int(rs.positive.size()) != expected_positive_count(letter, rank))
      rs_abort("positive root closure produced the wrong count for " + rs.name());
  }

  invert_matrix(rs.cartan, rank, rs.cartan_inv);

  // (omega_i, omega_j) = (C^{-1})_{ji} d_j, with d_j = (alpha_j, alpha_j)/2.
  for (int i = 0; i < rank; ++i)
    for (int j = 0; j < rank; ++j)
      rs.fund_ip[i][j] = rs.cartan_inv[j][i] * Rat::frac(rs.len2[j], 2);
  for (int i = 0; i < rank; ++i)
    for (int j = 0; j < rank; ++j)
      if (rs.fund_ip[i][j] != rs.fund_ip[j][i]) rs_abort("fundamental form is not symmetric");

  rs.rho_rho = Rat(0);
  for (int i = 0; i < rank; ++i) {
    Rat s(0);
    for (int j = 0; j < rank; ++j) s += rs.fund_ip[j][i];
    rs.rho_omega[i] = s;
    rs.rho_rho += s;
  }
  rs.kbound = Rat(2) * rs.rho_rho + Rat(2);
  return rs;
}

QPair coroot_pairing(const RootSystem& rs, const QWeight& lambda, int posroot_index) {
  const auto& beta = rs.positive.at(posroot_index);
  long long nq = 0, nc = 0;
  for (int j = 0; j < rs.rank; ++j) {
    long long w = checked_mul_ll(beta.rc[j], rs.len2[j], "coroot_pairing");
    nq = checked_add_ll(nq, checked_mul_ll(w, lambda.a[j], "coroot_pairing"), "coroot_pairing");
    nc = checked_add_ll(nc, checked_mul_ll(w, lambda.b[j], "coroot_pairing"), "coroot_pairing");
  }
  if (nq % beta.len2 != 0 || nc % beta.len2 != 0)
    rs_abort("non-integral coroot pairing");
  return QPair{nq / beta.len2, nc / beta.len2};
}

namespace {

// Sign of a q + b for large q, recording in q0 the first integer q from which
// the sign is numerically correct.
int lex_sign(long long a, long long b, long long& q0) {
  if (a == 0) return b > 0 ? 1 : (b < 0 ? -1 : 0);
  if (a > 0) {
    if (b < 0) q0 = std::max(q0, (-b) / a + 1);
    return 1;
  }
  if (b > 0) q0 = std::max(q0, b / (-a) + 1);
  return -1;
}

}  // namespace

Straightened straighten(const RootSystem& rs, const QWeight& nu) {
  Straightened res;
  QWeight lam = nu;
  int sign = 1;
  long long q0 = 1;
  for (int iter = 0;; ++iter) {
    if (iter > 100000) rs_abort("straighten did not terminate");
    int neg = -1;
    bool singular = false;
    for (int i = 0; i < rs.rank; ++i) {
      int s = lex_sign(lam.a[i], lam.b[i], q0);
      if (s == 0) { singular = true; break; }
      if (s < 0) { neg = i; break; }
    }
    if (singular) {
      res.sign = 0;
      res.q0 = q0;
      return res;
    }
    if (neg < 0) break;
    rs.apply_simple(neg, lam);
    sign = -sign;
  }
  res.sign = sign;
  for (int i = 0; i < rs.rank; ++i) lam.b[i] -= 1;  // subtract rho
  res.lam = lam;
  res.q0 = q0;
  return res;
}

Weight dominant_rep(const RootSystem& rs, const Weight& w) {
  Weight v = w;
  for (int iter = 0;; ++iter) {
    if (iter > 100000) rs_abort("dominant_rep did not terminate");
    int neg = -1;
    for (int i = 0; i < rs.rank; ++i)
      if (v.c[i] < 0) { neg = i; break; }
    if (neg < 0) return v;
    rs.apply_simple(neg, v);
  }
}

bool dominance_leq(const RootSystem& rs, const Weight& mu, const Weight& lam) {
  // lam - mu in root-basis coordinates must be componentwise >= 0.
  for (int k = 0; k < rs.rank; ++k) {
    Rat rk(0);
    for (int j = 0; j < rs.rank; ++j) rk += rs.cartan_inv[k][j] * Rat(lam.c[j] - mu.c[j]);
    if (rk < Rat(0)) return false;
  }
  return true;
}

PolyQ weyl_dim_poly(const RootSystem& rs, const QWeight& lambda) {
  PolyQ num = PolyQ::constant(Rat(1));
  Rat den(1);
  QWeight shifted = lambda;
  for (int i = 0; i < rs.rank; ++i) shifted.b[i] += 1;  // lambda + rho
  QWeight rho_q = QWeight::constant(rs.rho());
  for (int idx = 0; idx < int(rs.positive.size()); ++idx) {
    QPair p = coroot_pairing(rs, shifted, idx);
    QPair r = coroot_pairing(rs, rho_q, idx);
    num = num * PolyQ::linear(Rat(p.qc), Rat(p.cc));
    den *= Rat(r.cc);
  }
  return num.scaled(Rat(1) / den);
}

}  // namespace klsb
