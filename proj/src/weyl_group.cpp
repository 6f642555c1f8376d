#include "klsb/weyl_group.hpp"

#include <algorithm>
#include <cctype>
#include <cstdio>
#include <map>
#include <numeric>

namespace klsb {

namespace {

[[noreturn]] void wg_abort(const std::string& msg) {
  std::fprintf(stderr, "klsb: weyl group error: %s\n", msg.c_str());
  std::abort();
}

using Mat = std::array<int8_t, kMaxRank * kMaxRank>;

Mat identity_mat(int rank) {
  Mat m{};
  for (int i = 0; i < rank; ++i) m[i * kMaxRank + i] = 1;
  return m;
}

Mat simple_mat(const RootSystem& rs, int i) {
  // s_i: c_k -> c_k - c_i cartan[k][i]
  Mat m = identity_mat(rs.rank);
  for (int k = 0; k < rs.rank; ++k) {
    int v = m[k * kMaxRank + i] - rs.cartan[k][i];
    if (v < INT8_MIN || v > INT8_MAX) wg_abort("matrix entry out of range");
    m[k * kMaxRank + i] = int8_t(v);
  }
  return m;
}

Mat mat_mul(int rank, const Mat& a, const Mat& b) {
  Mat r{};
  for (int i = 0; i < rank; ++i)
    for (int j = 0; j < rank; ++j) {
      int s = 0;
      for (int k = 0; k < rank; ++k) s += int(a[i * kMaxRank + k]) * int(b[k * kMaxRank + j]);
      if (s < INT8_MIN || s > INT8_MAX) wg_abort("matrix entry out of range");
      r[i * kMaxRank + j] = int8_t(s);
    }
  return r;
}

}  // namespace

WeylGroup build_weyl_group(const RootSystem& rs) {
  WeylGroup W;
  W.rs = &rs;
  W.rank = rs.rank;

  std::vector<Mat> smat(rs.rank);
  for (int i = 0; i < rs.rank; ++i) smat[i] = simple_mat(rs, i);

  // Breadth-first enumeration by length.
  std::map<Mat, int> index_of;
  std::vector<Mat> mats;
  std::vector<int> len;
  std::vector<std::array<int16_t, kMaxRank>> rmul;
  mats.push_back(identity_mat(rs.rank));
  index_of[mats[0]] = 0;
  len.push_back(0);
  rmul.push_back({});
  std::vector<int> frontier{0};
  while (!frontier.empty()) {
    std::vector<int> next;
    for (int w : frontier) {
      for (int i = 0; i < rs.rank; ++i) {
        Mat m = mat_mul(rs.rank, mats[w], smat[i]);
        auto it = index_of.find(m);
        int idx;
        if (it == index_of.end()) {
          idx = int(mats.size());
          index_of[m] = idx;
          mats.push_back(m);
          len.push_back(len[w] + 1);
          rmul.push_back({});
          next.push_back(idx);
        } else {
          idx = it->second;
        }
        rmul[w][i] = int16_t(idx);
      }
    }
    frontier = std::move(next);
  }
  int n = int(mats.size());
  if (n > INT16_MAX) wg_abort("group too large for 16-bit indices");

  // Left multiplication by generators.
  std::vector<std::array<int16_t, kMaxRank>> lmul(n);
  for (int i = 0; i < rs.rank; ++i) {
    for (int w = 0; w < n; ++w) {
      Mat m = mat_mul(rs.rank, smat[i], mats[w]);
      lmul[w][i] = int16_t(index_of.at(m));
    }
  }

  // Lexicographically least reduced word: repeatedly strip the least left
  // descent.
  std::vector<std::vector<uint8_t>> words(n);
  for (int w = 0; w < n; ++w) {
    int x = w;
    while (len[x] > 0) {
      int i = 0;
      while (len[lmul[x][i]] >= len[x]) ++i;
      words[w].push_back(uint8_t(i));
      x = lmul[x][i];
    }
  }

  // Canonical order: length, then word.
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    if (len[a] != len[b]) return len[a] < len[b];
    return words[a] < words[b];
  });
  std::vector<int> newidx(n);
  for (int k = 0; k < n; ++k) newidx[order[k]] = k;

  W.n = n;
  W.mats.resize(n);
  W.len.resize(n);
  W.words.resize(n);
  W.lmul.resize(n);
  W.rmul.resize(n);
  for (int old = 0; old < n; ++old) {
    int k = newidx[old];
    W.mats[k] = mats[old];
    W.len[k] = len[old];
    W.words[k] = words[old];
    for (int i = 0; i < rs.rank; ++i) {
      W.lmul[k][i] = int16_t(newidx[lmul[old][i]]);
      W.rmul[k][i] = int16_t(newidx[rmul[old][i]]);
    }
  }

  W.ldesc.assign(n, 0);
  W.rdesc.assign(n, 0);
  for (int w = 0; w < n; ++w)
    for (int i = 0; i < rs.rank; ++i) {
      if (W.len[W.lmul[w][i]] < W.len[w]) W.ldesc[w] |= uint8_t(1u << i);
      if (W.len[W.rmul[w][i]] < W.len[w]) W.rdesc[w] |= uint8_t(1u << i);
    }

  W.w0 = n - 1;
  for (int w = 0; w < n; ++w)
    if (W.len[w] > W.len[W.w0]) W.w0 = w;
  if (W.rdesc[W.w0] != (1u << rs.rank) - 1) wg_abort("longest element has missing descents");

  // Inverses via reversed words.
  W.inv.assign(n, 0);
  for (int w = 0; w < n; ++w) {
    int x = 0;
    for (auto it = W.words[w].rbegin(); it != W.words[w].rend(); ++it) x = W.rmul[x][*it];
    W.inv[w] = x;
  }
  for (int w = 0; w < n; ++w)
    if (W.inv[W.inv[w]] != w) wg_abort("inverse table inconsistent");

  // Bruhat order via the standard lifting recursion: for s w < w,
  // x <= w iff min(x, s x) <= s w.
  W.bru_words_ = (n + 63) / 64;
  W.bruhat_.assign(size_t(n) * W.bru_words_, 0);
  auto row = [&](int w) { return W.bruhat_.begin() + size_t(w) * W.bru_words_; };
  W.bruhat_[0] = 1;  // identity row: only e <= e
  for (int w = 1; w < n; ++w) {
    int s = 0;
    while (!W.has_ldesc(w, s)) ++s;
    int v = W.lmul[w][s];
    auto rv = row(v);
    auto rw = row(w);
    for (int x = 0; x < n; ++x) {
      int sx = W.lmul[x][s];
      int m = W.len[sx] < W.len[x] ? sx : x;
      if ((rv[m >> 6] >> (m & 63)) & 1u) rw[x >> 6] |= uint64_t(1) << (x & 63);
    }
  }

  // Conjugacy classes: orbit closure under x -> s x s.
  W.class_of.assign(n, -1);
  for (int w = 0; w < n; ++w) {
    if (W.class_of[w] >= 0) continue;
    int cid = int(W.classes.size());
    std::vector<int> members{w};
    W.class_of[w] = cid;
    for (size_t k = 0; k < members.size(); ++k) {
      int x = members[k];
      for (int i = 0; i < rs.rank; ++i) {
        int y = W.lmul[W.rmul[x][i]][i];
        if (W.class_of[y] < 0) {
          W.class_of[y] = cid;
          members.push_back(y);
        }
      }
    }
    std::sort(members.begin(), members.end());
    W.classes.push_back(std::move(members));
    W.class_rep.push_back(W.classes.back().front());
  }
  W.class_of_inverse.resize(W.classes.size());
  for (size_t c = 0; c < W.classes.size(); ++c)
    W.class_of_inverse[c] = W.class_of[W.inv[W.class_rep[c]]];

  return W;
}

int WeylGroup::parse_word(const std::string& s) const {
  std::vector<int> letters;
  size_t k = 0;
  auto skip_ws = [&] { while (k < s.size() && std::isspace(uint8_t(s[k]))) ++k; };
  skip_ws();
  if (k < s.size() && s[k] == '1' && s.find_first_not_of("1 \t", k) == std::string::npos)
    return 0;
  if (k < s.size() && (s[k] == 'e' || s[k] == 'E') &&
      s.find_first_not_of("eE \t", k) == std::string::npos)
    return 0;
  while (k < s.size()) {
    skip_ws();
    if (k >= s.size()) break;
    if (s[k] == 's' || s[k] == 'S' || s[k] == ',' || s[k] == '*') {
      ++k;
      continue;
    }
    if (!std::isdigit(uint8_t(s[k]))) return -1;
    int d = s[k] - '1';
    if (d < 0 || d >= rank) return -1;
    letters.push_back(d);
    ++k;
  }
  int w = 0;
  for (int i : letters) w = rmul[w][i];
  return w;
}

long long WeylGroup::parabolic_order(unsigned mask) const {
  std::vector<char> in(n, 0);
  std::vector<int> stack{0};
  in[0] = 1;
  long long count = 1;
  while (!stack.empty()) {
    int w = stack.back();
    stack.pop_back();
    for (int i = 0; i < rank; ++i) {
      if (!((mask >> i) & 1u)) continue;
      int v = rmul[w][i];
      if (!in[v]) {
        in[v] = 1;
        ++count;
        stack.push_back(v);
      }
    }
  }
  return count;
}

}  // namespace klsb
