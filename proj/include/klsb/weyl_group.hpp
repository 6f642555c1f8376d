#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "klsb/root_system.hpp"

namespace klsb {

// A finite Weyl group, enumerated completely. Elements are identified by
// their integer action matrix on fundamental-weight coordinates and indexed
// in a canonical order: by length, then lexicographically by the least
// reduced word. Index 0 is the identity.
struct WeylGroup {
  const RootSystem* rs = nullptr;
  int rank = 0;
  int n = 0;
  int w0 = 0;  // index of the longest element

  // Row-major rank x rank action matrices: (w lambda)_k = sum_j m[k][j] lambda_j.
  std::vector<std::array<int8_t, kMaxRank * kMaxRank>> mats;
  std::vector<int> len;
  std::vector<std::vector<uint8_t>> words;  // lexicographically least reduced word, 0-based letters
  std::vector<int> inv;
  std::vector<std::array<int16_t, kMaxRank>> lmul;  // lmul[w][i] = s_i w
  std::vector<std::array<int16_t, kMaxRank>> rmul;  // rmul[w][i] = w s_i
  std::vector<uint8_t> ldesc;                       // left descent bitmask
  std::vector<uint8_t> rdesc;                       // right descent bitmask

  // Bruhat order, one bitset row per element: bit x of row w set iff x <= w.
  int bru_words_ = 0;
  std::vector<uint64_t> bruhat_;

  // Conjugacy classes, ordered by least member; class_rep is that member.
  std::vector<int> class_of;
  std::vector<std::vector<int>> classes;
  std::vector<int> class_rep;
  std::vector<int> class_of_inverse;  // class id of rep^{-1}

  bool leq(int x, int w) const {
    return (bruhat_[size_t(w) * bru_words_ + (x >> 6)] >> (x & 63)) & 1u;
  }
  int smul(int i, int w) const { return lmul[w][i]; }
  int muls(int w, int i) const { return rmul[w][i]; }
  bool has_ldesc(int w, int i) const { return (ldesc[w] >> i) & 1u; }
  bool has_rdesc(int w, int i) const { return (rdesc[w] >> i) & 1u; }

  // I(w): the right descent mask, indexing omega_{I(w)}.
  unsigned imask(int w) const { return rdesc[w]; }
  unsigned imask_bar(int w) const { return (~unsigned(rdesc[w])) & ((1u << rank) - 1); }

  int mult(int x, int y) const {
    int r = x;
    for (uint8_t i : words[y]) r = rmul[r][i];
    return r;
  }

  Weight act(int w, const Weight& v) const {
    const auto& m = mats[w];
    Weight out;
    out.r = rank;
    for (int k = 0; k < rank; ++k) {
      int s = 0;
      for (int j = 0; j < rank; ++j) s += m[k * kMaxRank + j] * v.c[j];
      out.c[k] = s;
    }
    return out;
  }

  QWeight act(int w, const QWeight& v) const {
    const auto& m = mats[w];
    QWeight out;
    out.r = rank;
    for (int k = 0; k < rank; ++k) {
      int sa = 0, sb = 0;
      for (int j = 0; j < rank; ++j) {
        sa += m[k * kMaxRank + j] * v.a[j];
        sb += m[k * kMaxRank + j] * v.b[j];
      }
      out.a[k] = sa;
      out.b[k] = sb;
    }
    return out;
  }

  int sign(int w) const { return (len[w] & 1) ? -1 : 1; }

  // 1-based word, the canonical serialization of an element: "s2 s3 s2".
  std::string word_str(int w) const {
    if (w == 0) return "1";
    std::string s;
    for (uint8_t i : words[w]) s += "s" + std::to_string(i + 1);
    return s;
  }

  // Parse "1", "s2s3s2", "s2 s3 s2" or "2,3,2" into an element index;
  // returns -1 on malformed input.
  int parse_word(const std::string& s) const;

  // Order of the parabolic subgroup generated by the simple reflections in
  // the mask.
  long long parabolic_order(unsigned mask) const;
};

WeylGroup build_weyl_group(const RootSystem& rs);

}  // namespace klsb
