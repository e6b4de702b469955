// Copyright 2026 The pccycle Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "pccycle/matching.hpp"

#include <algorithm>
#include <stdexcept>

namespace pccycle {

bool Matching::contains(int u, int v) const {
  std::pair<int, int> key{std::min(u, v), std::max(u, v)};
  return std::binary_search(edges.begin(), edges.end(), key);
}

Parity parity(const Matching& m, const EdgeSet& e0) {
  int count = 0;
  for (auto [u, v] : m.edges) {
    if (e0.contains(u, v)) ++count;
  }
  return (count % 2 == 0) ? Parity::kEven : Parity::kOdd;
}

void validate_matching(const UncoloredGraph& g, const Matching& m) {
  std::vector<bool> covered(g.vertex_count(), false);
  for (auto [u, v] : m.edges) {
    if (!g.has_edge(u, v)) {
      throw std::invalid_argument("matching edge not present in host graph");
    }
    if (covered[u] || covered[v]) {
      throw std::invalid_argument("matching edges share a vertex");
    }
    covered[u] = covered[v] = true;
  }
}

namespace {

// Edmonds' blossom algorithm in the classic array formulation: grow an
// alternating BFS forest from each free vertex, contracting odd cycles
// (blossoms) onto their base until an augmenting path appears.
class BlossomMatcher {
 public:
  explicit BlossomMatcher(const UncoloredGraph& g)
      : g_(g),
        n_(g.vertex_count()),
        match_(n_, -1),
        parent_(n_, -1),
        base_(n_),
        in_queue_(n_, false),
        in_blossom_(n_, false),
        on_path_(n_, false) {}

  Matching run() {
    greedy_seed();
    for (int v = 0; v < n_; ++v) {
      if (match_[v] == -1) {
        augment_from(v);
      }
    }
    Matching m;
    for (int v = 0; v < n_; ++v) {
      if (match_[v] > v) {
        m.edges.push_back({v, match_[v]});
      }
    }
    return m;
  }

 private:
  void greedy_seed() {
    for (int v = 0; v < n_; ++v) {
      if (match_[v] != -1) continue;
      for (int w : g_.neighbors(v)) {
        if (match_[w] == -1) {
          match_[v] = w;
          match_[w] = v;
          break;
        }
      }
    }
  }

  // Lowest common ancestor of the bases of a and b in the BFS forest,
  // walking matched/parent pointers.
  int lca(int a, int b) {
    std::fill(on_path_.begin(), on_path_.end(), false);
    int v = a;
    for (;;) {
      v = base_[v];
      on_path_[v] = true;
      if (match_[v] == -1) break;
      v = parent_[match_[v]];
    }
    v = b;
    while (!on_path_[base_[v]]) {
      v = parent_[match_[v]];
    }
    return base_[v];
  }

  void mark_path(int v, int blossom_base, int child) {
    while (base_[v] != blossom_base) {
      in_blossom_[base_[v]] = true;
      in_blossom_[base_[match_[v]]] = true;
      parent_[v] = child;
      child = match_[v];
      v = parent_[match_[v]];
    }
  }

  void contract(int v, int to, std::vector<int>& queue) {
    const int blossom_base = lca(v, to);
    std::fill(in_blossom_.begin(), in_blossom_.end(), false);
    mark_path(v, blossom_base, to);
    mark_path(to, blossom_base, v);
    for (int i = 0; i < n_; ++i) {
      if (!in_blossom_[base_[i]]) continue;
      base_[i] = blossom_base;
      if (!in_queue_[i]) {
        in_queue_[i] = true;
        queue.push_back(i);
      }
    }
  }

  void augment_from(int root) {
    std::fill(parent_.begin(), parent_.end(), -1);
    std::fill(in_queue_.begin(), in_queue_.end(), false);
    for (int i = 0; i < n_; ++i) base_[i] = i;

    std::vector<int> queue{root};
    in_queue_[root] = true;
    for (std::size_t head = 0; head < queue.size(); ++head) {
      const int v = queue[head];
      for (int to : g_.neighbors(v)) {
        if (base_[v] == base_[to] || match_[v] == to) continue;
        if (to == root || (match_[to] != -1 && parent_[match_[to]] != -1)) {
          contract(v, to, queue);
        } else if (parent_[to] == -1) {
          parent_[to] = v;
          if (match_[to] == -1) {
            flip_path(to);
            return;
          }
          if (!in_queue_[match_[to]]) {
            in_queue_[match_[to]] = true;
            queue.push_back(match_[to]);
          }
        }
      }
    }
  }

  void flip_path(int v) {
    while (v != -1) {
      const int pv = parent_[v];
      const int next = match_[pv];
      match_[v] = pv;
      match_[pv] = v;
      v = next;
    }
  }

  const UncoloredGraph& g_;
  int n_;
  std::vector<int> match_;
  std::vector<int> parent_;
  std::vector<int> base_;
  std::vector<bool> in_queue_;
  std::vector<bool> in_blossom_;
  std::vector<bool> on_path_;
};

}  // namespace

Matching maximum_matching(const UncoloredGraph& g) {
  return BlossomMatcher(g).run();
}

}  // namespace pccycle
