// Highest-label push-relabel (Cherkassky-Goldberg style) on double
// capacities. Labels run up to 2n so excess that cannot reach the sink is
// returned to the source and the result is a true maximum flow.

#include <algorithm>
#include <deque>
#include <stdexcept>

#include "cutpath/search.hpp"

namespace cutpath {

MaxFlow::MaxFlow(std::size_t num_nodes) : n_(num_nodes) {
  if (num_nodes < 2) throw std::invalid_argument("MaxFlow: need at least two nodes");
}

void MaxFlow::add_arc_pair(int u, int v, double cap_uv, double cap_vu) {
  if (u < 0 || v < 0 || static_cast<std::size_t>(u) >= n_ || static_cast<std::size_t>(v) >= n_)
    throw std::out_of_range("MaxFlow::add_arc_pair: node out of range");
  if (!(cap_uv >= 0.0) || !(cap_vu >= 0.0))
    throw std::invalid_argument("MaxFlow::add_arc_pair: negative capacity");
  input_.push_back({u, v, cap_uv});
  input_.push_back({v, u, cap_vu});
}

void MaxFlow::build() {
  const std::size_t m = input_.size();
  first_.assign(n_ + 1, 0);
  for (const auto& a : input_) ++first_[a.from + 1];
  for (std::size_t i = 0; i < n_; ++i) first_[i + 1] += first_[i];
  head_.assign(m, 0);
  rev_.assign(m, 0);
  res_.assign(m, 0.0);
  std::vector<int> slot(first_.begin(), first_.end() - 1);
  std::vector<int> pos(m);
  for (std::size_t k = 0; k < m; ++k) {
    const auto& a = input_[k];
    pos[k] = slot[a.from]++;
    head_[pos[k]] = a.to;
    res_[pos[k]] = a.cap;
  }
  // Input arcs come in consecutive pairs.
  for (std::size_t k = 0; k < m; k += 2) {
    rev_[pos[k]] = pos[k + 1];
    rev_[pos[k + 1]] = pos[k];
  }
}

void MaxFlow::global_relabel(int source, int sink) {
  const int n = static_cast<int>(n_);
  const int unreachable = 2 * n;
  std::fill(label_.begin(), label_.end(), unreachable);
  label_[sink] = 0;
  label_[source] = n;

  // Reverse BFS over residual arcs: first toward the sink, then the
  // vertices that cannot reach it are labeled by distance to the source.
  std::deque<int> queue;
  auto bfs = [&](int root) {
    queue.push_back(root);
    while (!queue.empty()) {
      const int v = queue.front();
      queue.pop_front();
      for (int a = first_[v]; a < first_[v + 1]; ++a) {
        const int u = head_[a];
        if (label_[u] == unreachable && res_[rev_[a]] > eps_) {
          label_[u] = label_[v] + 1;
          queue.push_back(u);
        }
      }
    }
  };
  bfs(sink);
  bfs(source);

  std::fill(label_count_.begin(), label_count_.end(), 0);
  for (auto& b : buckets_) b.clear();
  highest_ = -1;
  for (int v = 0; v < n; ++v) {
    if (v == source || v == sink) continue;
    current_[v] = first_[v];
    if (label_[v] < n) ++label_count_[label_[v]];
    if (label_[v] >= unreachable) {
      excess_[v] = 0.0;  // rounding residue with no residual route anywhere
      continue;
    }
    if (excess_[v] > eps_) {
      buckets_[label_[v]].push_back(v);
      highest_ = std::max(highest_, label_[v]);
    }
  }
  relabels_since_global_ = 0;
  need_global_ = false;
}

void MaxFlow::push(int a, int u) {
  const int v = head_[a];
  const double delta = std::min(excess_[u], res_[a]);
  res_[a] -= delta;
  res_[rev_[a]] += delta;
  excess_[u] -= delta;
  const bool was_active = excess_[v] > eps_;
  excess_[v] += delta;
  if (!was_active && excess_[v] > eps_) {
    buckets_[label_[v]].push_back(v);
    highest_ = std::max(highest_, label_[v]);
  }
}

// Returns false when a global relabel is due.
bool MaxFlow::discharge(int u, int source, int sink) {
  const int n = static_cast<int>(n_);
  while (excess_[u] > eps_) {
    if (current_[u] == first_[u + 1]) {
      const int old = label_[u];
      int lowest = 2 * n;
      for (int a = first_[u]; a < first_[u + 1]; ++a)
        if (res_[a] > eps_) lowest = std::min(lowest, label_[head_[a]] + 1);
      if (old < n) --label_count_[old];
      ++relabels_;
      ++relabels_since_global_;
      if (lowest >= 2 * n) {
        excess_[u] = 0.0;
        label_[u] = 2 * n;
        return true;
      }
      label_[u] = lowest;
      if (lowest < n) ++label_count_[lowest];
      current_[u] = first_[u];
      if (old < n && label_count_[old] == 0) {
        // Gap: nothing between `old` and n can reach the sink any more.
        for (int v = 0; v < n; ++v) {
          if (v == source || v == sink) continue;
          if (label_[v] > old && label_[v] < n) {
            --label_count_[label_[v]];
            label_[v] = n + 1;
            current_[v] = first_[v];
            if (excess_[v] > eps_) buckets_[label_[v]].push_back(v);
          }
        }
        highest_ = std::max(highest_, n + 1);
      }
      if (relabels_since_global_ >= n_) {
        need_global_ = true;
        if (excess_[u] > eps_) {
          buckets_[label_[u]].push_back(u);
          highest_ = std::max(highest_, label_[u]);
        }
        return false;
      }
      continue;
    }
    const int a = current_[u];
    const int v = head_[a];
    if (res_[a] > eps_ && label_[u] == label_[v] + 1) {
      push(a, u);
      if (res_[a] <= eps_) ++current_[u];
    } else {
      ++current_[u];
    }
  }
  return true;
}

double MaxFlow::solve(int source, int sink) {
  if (source == sink) throw std::invalid_argument("MaxFlow::solve: source == sink");
  if (source < 0 || sink < 0 || static_cast<std::size_t>(source) >= n_ ||
      static_cast<std::size_t>(sink) >= n_)
    throw std::out_of_range("MaxFlow::solve: terminal out of range");
  build();
  const int n = static_cast<int>(n_);
  excess_.assign(n_, 0.0);
  label_.assign(n_, 0);
  current_.assign(n_, 0);
  label_count_.assign(n_ + 1, 0);
  buckets_.assign(2 * n_ + 1, {});
  relabels_ = 0;

  double scale = 1.0;
  for (double c : res_) scale = std::max(scale, c);
  eps_ = 1e-14 * scale;

  label_[source] = n;
  for (int a = first_[source]; a < first_[source + 1]; ++a) {
    const double c = res_[a];
    if (c <= 0.0) continue;
    res_[a] = 0.0;
    res_[rev_[a]] += c;
    excess_[head_[a]] += c;
    excess_[source] -= c;
  }
  global_relabel(source, sink);

  for (;;) {
    if (need_global_) global_relabel(source, sink);
    while (highest_ >= 0 && buckets_[highest_].empty()) --highest_;
    if (highest_ < 0) break;
    const int u = buckets_[highest_].back();
    buckets_[highest_].pop_back();
    if (u == source || u == sink || label_[u] != highest_ || excess_[u] <= eps_) continue;
    discharge(u, source, sink);
  }

  source_side_.assign(n_, false);
  std::deque<int> queue{source};
  source_side_[source] = true;
  while (!queue.empty()) {
    const int v = queue.front();
    queue.pop_front();
    for (int a = first_[v]; a < first_[v + 1]; ++a) {
      const int u = head_[a];
      if (!source_side_[u] && res_[a] > eps_) {
        source_side_[u] = true;
        queue.push_back(u);
      }
    }
  }
  return excess_[sink];
}

}  // namespace cutpath
