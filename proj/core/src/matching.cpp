#include "matching.hpp"

#include <queue>

namespace fst::detail {

ChainPoset::ChainPoset(const Monomial& m) : elems_(m.factors()) {
  int n = size();
  adj_.resize(n);
  for (int u = 0; u < n; ++u)
    for (int v = 0; v < n; ++v)
      if (precedes(elems_[u], elems_[v])) adj_[u].push_back(v);
  match_left_.assign(n, -1);
  match_right_.assign(n, -1);
  for (int u = 0; u < n; ++u) {
    std::vector<char> used(n, 0);
    if (augment(u, used)) ++matched_;
  }
}

bool ChainPoset::augment(int u, std::vector<char>& used) {
  for (int v : adj_[u]) {
    if (used[v]) continue;
    used[v] = 1;
    if (match_right_[v] == -1 || augment(match_right_[v], used)) {
      match_left_[u] = v;
      match_right_[v] = u;
      return true;
    }
  }
  return false;
}

std::vector<Variable> ChainPoset::max_antichain() const {
  int n = size();
  // Koenig: alternate from unmatched left vertices; the antichain consists of
  // elements whose left copy is reached and right copy is not.
  std::vector<char> left_z(n, 0), right_z(n, 0);
  std::queue<int> bfs;
  for (int u = 0; u < n; ++u)
    if (match_left_[u] == -1) {
      left_z[u] = 1;
      bfs.push(u);
    }
  while (!bfs.empty()) {
    int u = bfs.front();
    bfs.pop();
    for (int v : adj_[u]) {
      if (v == match_left_[u] || right_z[v]) continue;
      right_z[v] = 1;
      int w = match_right_[v];
      if (w != -1 && !left_z[w]) {
        left_z[w] = 1;
        bfs.push(w);
      }
    }
  }
  std::vector<Variable> out;
  for (int i = 0; i < n; ++i)
    if (left_z[i] && !right_z[i]) out.push_back(elems_[i]);
  return out;
}

std::vector<std::vector<Variable>> ChainPoset::chains() const {
  int n = size();
  std::vector<std::vector<Variable>> out;
  for (int u = 0; u < n; ++u) {
    if (match_right_[u] != -1) continue;  // not a chain head
    std::vector<Variable> chain;
    for (int cur = u; cur != -1; cur = match_left_[cur]) chain.push_back(elems_[cur]);
    out.push_back(std::move(chain));
  }
  return out;
}

}  // namespace fst::detail
