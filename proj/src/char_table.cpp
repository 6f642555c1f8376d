#include "klsb/char_table.hpp"

#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <string>

namespace klsb {

namespace {

[[noreturn]] void ct_abort(const std::string& msg) {
  std::fprintf(stderr, "char_table: %s\n", msg.c_str());
  std::abort();
}

using Vec = std::vector<Rat>;
using Mat = std::vector<Vec>;  // row major

Vec mat_apply(const Mat& A, const Vec& v) {
  const int n = int(A.size());
  Vec r(n, Rat(0));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (!A[i][j].is_zero() && !v[j].is_zero()) r[i] = r[i] + A[i][j] * v[j];
  return r;
}

// Reduced row echelon form in place; returns pivot columns.
std::vector<int> rref(Mat& M) {
  const int rows = int(M.size());
  const int cols = rows ? int(M[0].size()) : 0;
  std::vector<int> pivots;
  int r = 0;
  for (int c = 0; c < cols && r < rows; ++c) {
    int p = -1;
    for (int i = r; i < rows; ++i)
      if (!M[i][c].is_zero()) {
        p = i;
        break;
      }
    if (p < 0) continue;
    std::swap(M[r], M[p]);
    const Rat inv = Rat(1) / M[r][c];
    for (int j = c; j < cols; ++j) M[r][j] = M[r][j] * inv;
    for (int i = 0; i < rows; ++i) {
      if (i == r || M[i][c].is_zero()) continue;
      const Rat f = M[i][c];
      for (int j = c; j < cols; ++j) M[i][j] = M[i][j] - f * M[r][j];
    }
    pivots.push_back(c);
    ++r;
  }
  M.resize(r);
  return pivots;
}

// Coordinates of v in the span of an rref basis B with the given pivots.
Vec coords_in(const Mat& B, const std::vector<int>& pivots, Vec v) {
  const int d = int(B.size());
  Vec c(d, Rat(0));
  for (int t = 0; t < d; ++t) {
    const Rat x = v[pivots[t]];
    if (x.is_zero()) continue;
    c[t] = x;
    for (size_t j = 0; j < v.size(); ++j) v[j] = v[j] - x * B[t][j];
  }
  for (const Rat& x : v)
    if (!x.is_zero()) ct_abort("vector not in the invariant subspace it should inhabit");
  return c;
}

// Kernel of (R - e I) for a square rational matrix; basis rows returned.
Mat kernel_of_shifted(Mat R, long long e) {
  const int d = int(R.size());
  for (int i = 0; i < d; ++i) R[i][i] = R[i][i] - Rat(e);
  const std::vector<int> pivots = rref(R);
  std::vector<char> is_pivot(d, 0);
  for (int p : pivots) is_pivot[p] = 1;
  Mat ker;
  for (int c = 0; c < d; ++c) {
    if (is_pivot[c]) continue;
    Vec v(d, Rat(0));
    v[c] = Rat(1);
    for (size_t t = 0; t < pivots.size(); ++t) v[pivots[t]] = -R[t][c];
    ker.push_back(std::move(v));
  }
  return ker;
}

long long isqrt_exact(long long n, const char* what) {
  long long r = 0;
  while ((r + 1) * (r + 1) <= n) ++r;
  if (r * r != n) ct_abort(std::string(what) + " is not a perfect square");
  return r;
}

}  // namespace

CharTable character_table(const WeylGroup& W) {
  const int k = int(W.classes.size());
  const long long order = W.n;

  CharTable T;
  T.k = k;
  T.class_size.resize(k);
  for (int j = 0; j < k; ++j) T.class_size[j] = (long long)W.classes[j].size();
  int e = 0;
  while (W.len[e] != 0) ++e;
  T.identity_class = W.class_of[e];

  // Class-sum action matrices: (A_j)_{i,l} = #{(x,y) in C_j x C_i : xy = z_l}
  // for a fixed representative z_l. A common eigenvector u with u_i = omega_i
  // satisfies A_j u = omega_j u.
  std::vector<Mat> A(k, Mat(k, Vec(k, Rat(0))));
  for (int j = 0; j < k; ++j)
    for (int l = 0; l < k; ++l) {
      const int zl = W.class_rep[l];
      std::vector<long long> cnt(k, 0);
      for (int x : W.classes[j]) ++cnt[W.class_of[W.mult(W.inv[x], zl)]];
      for (int i = 0; i < k; ++i) A[j][i][l] = Rat(cnt[i]);
    }

  // Split Q^k into the joint eigenspaces of the A_j.
  struct Space {
    Mat basis;  // rref rows
    std::vector<int> pivots;
  };
  std::vector<Space> spaces;
  {
    Mat id(k, Vec(k, Rat(0)));
    std::vector<int> piv(k);
    for (int i = 0; i < k; ++i) {
      id[i][i] = Rat(1);
      piv[i] = i;
    }
    spaces.push_back({std::move(id), std::move(piv)});
  }

  for (int j = 0; j < k; ++j) {
    if (j == T.identity_class) continue;
    bool all_one = true;
    std::vector<Space> next;
    for (Space& sp : spaces) {
      const int d = int(sp.basis.size());
      if (d == 1) {
        next.push_back(std::move(sp));
        continue;
      }
      // Restriction of A_j to the subspace, columns = images of basis rows.
      Mat R(d, Vec(d, Rat(0)));
      for (int s = 0; s < d; ++s) {
        const Vec img = mat_apply(A[j], sp.basis[s]);
        const Vec c = coords_in(sp.basis, sp.pivots, img);
        for (int t = 0; t < d; ++t) R[t][s] = c[t];
      }
      int found = 0;
      const long long bound = T.class_size[j];
      for (long long ev = -bound; ev <= bound && found < d; ++ev) {
        Mat ker = kernel_of_shifted(R, ev);
        if (ker.empty()) continue;
        found += int(ker.size());
        // Map kernel coordinates back to Q^k and re-echelonize.
        Mat nb;
        for (const Vec& kc : ker) {
          Vec v(k, Rat(0));
          for (int t = 0; t < d; ++t) {
            if (kc[t].is_zero()) continue;
            for (int c2 = 0; c2 < k; ++c2) v[c2] = v[c2] + kc[t] * sp.basis[t][c2];
          }
          nb.push_back(std::move(v));
        }
        std::vector<int> piv = rref(nb);
        if (int(nb.size()) > 1) all_one = false;
        next.push_back({std::move(nb), std::move(piv)});
      }
      if (found != d)
        ct_abort("class matrix " + std::to_string(j) +
                 " is not diagonalizable over the integer eigenvalue range");
    }
    spaces = std::move(next);
    if (int(spaces.size()) == k && all_one) break;
  }
  if (int(spaces.size()) != k) ct_abort("joint eigenspaces do not split to dimension one");

  // Normalize each eigenvector to omega values and solve for the degree.
  for (const Space& sp : spaces) {
    Vec u = sp.basis[0];
    if (u[T.identity_class].is_zero())
      ct_abort("joint eigenvector vanishes on the identity class");
    const Rat inv = Rat(1) / u[T.identity_class];
    for (Rat& x : u) x = x * inv;

    Rat s(0);
    for (int i = 0; i < k; ++i) s = s + u[i] * u[i] / Rat(T.class_size[i]);
    const Rat deg2 = Rat(order) / s;
    if (!deg2.is_integer()) ct_abort("squared degree is not an integer");
    const long long deg = isqrt_exact(deg2.as_ll("char_table degree"), "squared degree");

    Vec row(k, Rat(0));
    for (int i = 0; i < k; ++i) {
      row[i] = u[i] * Rat(deg) / Rat(T.class_size[i]);
      if (!row[i].is_integer()) ct_abort("character value is not an integer");
    }
    T.chi.push_back(std::move(row));
  }

  std::sort(T.chi.begin(), T.chi.end(), [&](const Vec& a, const Vec& b) {
    if (a[T.identity_class] != b[T.identity_class]) return a[T.identity_class] < b[T.identity_class];
    for (int i = 0; i < k; ++i)
      if (a[i] != b[i]) return a[i] < b[i];
    return false;
  });

  // Orthogonality, both ways.
  for (int r = 0; r < k; ++r)
    for (int s = 0; s < k; ++s) {
      Rat acc(0);
      for (int i = 0; i < k; ++i) acc = acc + Rat(T.class_size[i]) * T.chi[r][i] * T.chi[s][i];
      if (acc != (r == s ? Rat(order) : Rat(0))) ct_abort("row orthogonality fails");
    }
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) {
      Rat acc(0);
      for (int r = 0; r < k; ++r) acc = acc + T.chi[r][i] * T.chi[r][j];
      const Rat want = (i == j) ? Rat(order) / Rat(T.class_size[i]) : Rat(0);
      if (acc != want) ct_abort("column orthogonality fails");
    }

  return T;
}

}  // namespace klsb
