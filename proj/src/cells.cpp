#include "klsb/cells.hpp"

#include <algorithm>
#include <cstdio>
#include <numeric>

namespace klsb {

namespace {

[[noreturn]] void cell_abort(const char* msg) {
  std::fprintf(stderr, "klsb: cell computation error: %s\n", msg);
  std::abort();
}

// Iterative Tarjan SCC; returns component id per vertex. Components are then
// relabeled by least member for determinism.
std::vector<int> scc(int n, const std::vector<std::vector<int>>& adj) {
  std::vector<int> idx(n, -1), low(n, 0), comp(n, -1);
  std::vector<char> on(n, 0);
  std::vector<int> stk;
  int counter = 0, ncomp = 0;
  struct Frame { int v; size_t ei; };
  for (int root = 0; root < n; ++root) {
    if (idx[root] >= 0) continue;
    std::vector<Frame> call{{root, 0}};
    idx[root] = low[root] = counter++;
    stk.push_back(root);
    on[root] = 1;
    while (!call.empty()) {
      Frame& f = call.back();
      if (f.ei < adj[f.v].size()) {
        int u = adj[f.v][f.ei++];
        if (idx[u] < 0) {
          idx[u] = low[u] = counter++;
          stk.push_back(u);
          on[u] = 1;
          call.push_back({u, 0});
        } else if (on[u]) {
          low[f.v] = std::min(low[f.v], idx[u]);
        }
      } else {
        int v = f.v;
        call.pop_back();
        if (!call.empty()) low[call.back().v] = std::min(low[call.back().v], low[v]);
        if (low[v] == idx[v]) {
          while (true) {
            int u = stk.back();
            stk.pop_back();
            on[u] = 0;
            comp[u] = ncomp;
            if (u == v) break;
          }
          ++ncomp;
        }
      }
    }
  }
  // Relabel by least member.
  std::vector<int> least(ncomp, n);
  for (int v = 0; v < n; ++v) least[comp[v]] = std::min(least[comp[v]], v);
  std::vector<int> order(ncomp);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int a, int b) { return least[a] < least[b]; });
  std::vector<int> newid(ncomp);
  for (int k = 0; k < ncomp; ++k) newid[order[k]] = k;
  for (int v = 0; v < n; ++v) comp[v] = newid[comp[v]];
  return comp;
}

std::vector<std::vector<int>> group_by(const std::vector<int>& id) {
  int m = 0;
  for (int c : id) m = std::max(m, c + 1);
  std::vector<std::vector<int>> out(m);
  for (int v = 0; v < int(id.size()); ++v) out[id[v]].push_back(v);
  return out;
}

}  // namespace

CellData cells(const WeylGroup& W, const KLTable& kl) {
  int n = W.n;
  // Edge w -> t means t appears in C'_s C'_w (left) or C'_w C'_s (right),
  // i.e. t <=_L w resp. t <=_R w.
  std::vector<std::vector<int>> ladj(n), radj(n), uadj(n);
  for (int w = 0; w < n; ++w) {
    for (int s = 0; s < W.rank; ++s) {
      if (!W.has_ldesc(w, s)) {
        ladj[w].push_back(W.lmul[w][s]);
        for (const auto& [z, m] : kl.mu_list[w]) {
          (void)m;
          if (W.has_ldesc(z, s)) ladj[w].push_back(z);
        }
      }
      if (!W.has_rdesc(w, s)) {
        radj[w].push_back(W.rmul[w][s]);
        for (const auto& [z, m] : kl.mu_list[w]) {
          (void)m;
          if (W.has_rdesc(z, s)) radj[w].push_back(z);
        }
      }
    }
    std::sort(ladj[w].begin(), ladj[w].end());
    ladj[w].erase(std::unique(ladj[w].begin(), ladj[w].end()), ladj[w].end());
    std::sort(radj[w].begin(), radj[w].end());
    radj[w].erase(std::unique(radj[w].begin(), radj[w].end()), radj[w].end());
    uadj[w] = ladj[w];
    uadj[w].insert(uadj[w].end(), radj[w].begin(), radj[w].end());
    std::sort(uadj[w].begin(), uadj[w].end());
    uadj[w].erase(std::unique(uadj[w].begin(), uadj[w].end()), uadj[w].end());
  }

  CellData cd;
  cd.left_id = scc(n, ladj);
  cd.right_id = scc(n, radj);
  cd.two_id = scc(n, uadj);
  cd.left_cells = group_by(cd.left_id);
  cd.right_cells = group_by(cd.right_id);
  cd.two_cells = group_by(cd.two_id);

  // Partial order on two-sided cells: d <=_LR c iff some (equivalently any)
  // element of d is reachable from c in the union graph.
  int m = int(cd.two_cells.size());
  cd.two_leq.assign(m, std::vector<char>(m, 0));
  for (int c = 0; c < m; ++c) {
    std::vector<char> seen(n, 0);
    std::vector<int> stack;
    for (int v : cd.two_cells[c]) {
      seen[v] = 1;
      stack.push_back(v);
    }
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      for (int u : uadj[v])
        if (!seen[u]) {
          seen[u] = 1;
          stack.push_back(u);
        }
    }
    for (int v = 0; v < n; ++v)
      if (seen[v]) cd.two_leq[cd.two_id[v]][c] = 1;
  }
  for (int c = 0; c < m; ++c)
    if (!cd.two_leq[c][c]) cell_abort("two-sided order not reflexive");

  // Duflo involution of each left cell: the unique minimizer of
  // len(w) - 2 deg P_{e,w}; that minimum is the a-value of its cell.
  cd.duflo.assign(cd.left_cells.size(), -1);
  std::vector<int> duflo_a(cd.left_cells.size(), -1);
  for (size_t lc = 0; lc < cd.left_cells.size(); ++lc) {
    int best = -1, besta = 0, count = 0;
    for (int w : cd.left_cells[lc]) {
      int dd = kl.P[w][0].degree();
      if (dd < 0) cell_abort("P_{e,w} vanished");
      int aw = W.len[w] - 2 * dd;
      if (best < 0 || aw < besta) {
        best = w;
        besta = aw;
        count = 1;
      } else if (aw == besta) {
        ++count;
      }
    }
    if (count != 1) cell_abort("Duflo involution not unique in a left cell");
    if (W.inv[best] != best) cell_abort("Duflo element is not an involution");
    cd.duflo[lc] = best;
    duflo_a[lc] = besta;
  }

  cd.a_two.assign(m, -1);
  for (size_t lc = 0; lc < cd.left_cells.size(); ++lc) {
    int c = cd.two_id[cd.duflo[lc]];
    if (cd.a_two[c] < 0) cd.a_two[c] = duflo_a[lc];
    else if (cd.a_two[c] != duflo_a[lc])
      cell_abort("a-value differs between left cells of one two-sided cell");
  }
  cd.a_elt.assign(n, 0);
  for (int w = 0; w < n; ++w) cd.a_elt[w] = cd.a_two[cd.two_id[w]];

  cd.in_jset.assign(n, 0);
  for (int w = 0; w < n; ++w) {
    if (cd.left_id[w] == cd.left_id[W.inv[w]]) {
      cd.in_jset[w] = 1;
      cd.jset.push_back(w);
    }
  }
  return cd;
}

}  // namespace klsb
