#pragma once

#include "quiverspec/matrix.hpp"

#include <algorithm>
#include <deque>
#include <span>
#include <utility>
#include <vector>

namespace quiverspec {

/// Arrow source→target carrying the value pair (v1, v2).  Vertices are
/// 0-based inside the library; file and CLI formats are 1-based.
struct Arrow {
  int source = 0;
  int target = 0;
  Int v1;
  Int v2;

  friend bool operator==(const Arrow&, const Arrow&) = default;
};

/// Loop-free valued quiver with at most one arrow per unordered vertex pair.
/// Arrows are kept sorted by (source, target), so equal quivers compare equal
/// structurally and serialize identically.
class ValuedQuiver {
 public:
  ValuedQuiver(int n, std::vector<Arrow> arrows) : n_(n), arrows_(std::move(arrows)) {
    if (n_ <= 0) throw ValidationError("quiver needs at least one vertex");
    for (const Arrow& a : arrows_) {
      if (a.source < 0 || a.source >= n_ || a.target < 0 || a.target >= n_)
        throw ValidationError("arrow endpoint out of range");
      if (a.source == a.target) throw ValidationError("loop arrows are not allowed");
      if (a.v1 <= 0 || a.v2 <= 0) throw ValidationError("arrow values must be positive");
    }
    std::sort(arrows_.begin(), arrows_.end(), [](const Arrow& x, const Arrow& y) {
      return std::pair(x.source, x.target) < std::pair(y.source, y.target);
    });
    // one arrow per unordered pair: a second arrow i→j or j→i is rejected
    std::vector<std::pair<int, int>> pairs;
    pairs.reserve(arrows_.size());
    for (const Arrow& a : arrows_) pairs.emplace_back(std::min(a.source, a.target), std::max(a.source, a.target));
    std::sort(pairs.begin(), pairs.end());
    if (std::adjacent_find(pairs.begin(), pairs.end()) != pairs.end())
      throw ValidationError("more than one arrow between a vertex pair");
  }

  int order() const { return n_; }
  const std::vector<Arrow>& arrows() const { return arrows_; }

  friend bool operator==(const ValuedQuiver&, const ValuedQuiver&) = default;

 private:
  int n_;
  std::vector<Arrow> arrows_;
};

namespace detail {

/// Ratio constraint d_a / d_b = ratio between two positive unknowns.
struct RatioEdge {
  int a;
  int b;
  Rat ratio;
};

/// Smallest positive integer vector satisfying all ratio constraints, with
/// gcd 1 on every connected component of the constraint graph; throws when a
/// cycle of constraints is inconsistent.
inline std::vector<Int> minimal_symmetrizer(int n, const std::vector<RatioEdge>& edges) {
  std::vector<std::vector<std::pair<int, Rat>>> adj(n);  // (neighbor u, d_v/d_u)
  for (const RatioEdge& e : edges) {
    adj[e.a].emplace_back(e.b, e.ratio);
    adj[e.b].emplace_back(e.a, Rat(1) / e.ratio);
  }

  std::vector<Rat> val(n);
  std::vector<char> seen(n, 0);
  std::vector<Int> d(n);
  for (int root = 0; root < n; ++root) {
    if (seen[root]) continue;
    std::vector<int> comp;
    std::deque<int> queue{root};
    seen[root] = 1;
    val[root] = 1;
    while (!queue.empty()) {
      int v = queue.front();
      queue.pop_front();
      comp.push_back(v);
      for (const auto& [u, ratio] : adj[v]) {
        if (!seen[u]) {
          seen[u] = 1;
          val[u] = val[v] / ratio;
          queue.push_back(u);
        } else if (val[v] != val[u] * ratio) {
          throw ValidationError("value constraints are inconsistent around a cycle; no positive symmetrizer exists");
        }
      }
    }
    // clear denominators, then reduce the component to gcd 1
    Int common = 1;
    for (int v : comp) common = boost::multiprecision::lcm(common, denominator(val[v]));
    Int g = 0;
    for (int v : comp) {
      d[v] = numerator(val[v]) * (common / denominator(val[v]));
      g = boost::multiprecision::gcd(g, d[v]);
    }
    for (int v : comp) d[v] /= g;
  }
  return d;
}

}  // namespace detail

/// Minimal positive symmetrizer (componentwise gcd-reduced), or a thrown
/// ValidationError when the value pairs admit none.
inline std::vector<Int> validate(const ValuedQuiver& q) {
  std::vector<detail::RatioEdge> edges;
  edges.reserve(q.arrows().size());
  // d_source·v1 = d_target·v2  ⇒  d_source/d_target = v2/v1
  for (const Arrow& a : q.arrows()) edges.push_back({a.source, a.target, Rat(a.v2, a.v1)});
  return detail::minimal_symmetrizer(q.order(), edges);
}

/// Vertex sets of the underlying undirected graph, each sorted, listed by
/// least vertex.
inline std::vector<std::vector<int>> connected_components(const ValuedQuiver& q) {
  std::vector<std::vector<int>> adj(q.order());
  for (const Arrow& a : q.arrows()) {
    adj[a.source].push_back(a.target);
    adj[a.target].push_back(a.source);
  }
  std::vector<char> seen(q.order(), 0);
  std::vector<std::vector<int>> comps;
  for (int root = 0; root < q.order(); ++root) {
    if (seen[root]) continue;
    std::vector<int> comp;
    std::deque<int> queue{root};
    seen[root] = 1;
    while (!queue.empty()) {
      int v = queue.front();
      queue.pop_front();
      comp.push_back(v);
      for (int u : adj[v])
        if (!seen[u]) {
          seen[u] = 1;
          queue.push_back(u);
        }
    }
    std::sort(comp.begin(), comp.end());
    comps.push_back(std::move(comp));
  }
  return comps;
}

/// Restriction to `vertices` keeping exactly the arrows with both endpoints
/// inside; vertices are relabelled by their rank in the sorted subset, which
/// matches principal-submatrix indexing.
inline ValuedQuiver full_subquiver(const ValuedQuiver& q, std::span<const int> vertices) {
  if (vertices.empty()) throw ValidationError("subquiver vertex set must be nonempty");
  std::vector<int> keep(vertices.begin(), vertices.end());
  std::sort(keep.begin(), keep.end());
  keep.erase(std::unique(keep.begin(), keep.end()), keep.end());
  std::vector<int> rank(q.order(), -1);
  for (std::size_t i = 0; i < keep.size(); ++i) {
    if (keep[i] < 0 || keep[i] >= q.order()) throw ValidationError("subquiver vertex out of range");
    rank[keep[i]] = static_cast<int>(i);
  }
  std::vector<Arrow> arrows;
  for (const Arrow& a : q.arrows())
    if (rank[a.source] >= 0 && rank[a.target] >= 0)
      arrows.push_back({rank[a.source], rank[a.target], a.v1, a.v2});
  return ValuedQuiver(static_cast<int>(keep.size()), std::move(arrows));
}

/// Reverses the selected arrows (indices into q.arrows()); an arrow i→j with
/// value (v1, v2) becomes j→i with (v2, v1).
inline ValuedQuiver reorient(const ValuedQuiver& q, std::span<const int> arrow_indices) {
  std::vector<Arrow> arrows = q.arrows();
  for (int idx : arrow_indices) {
    if (idx < 0 || idx >= static_cast<int>(arrows.size())) throw ValidationError("arrow index out of range");
    Arrow& a = arrows[idx];
    std::swap(a.source, a.target);
    std::swap(a.v1, a.v2);
  }
  return ValuedQuiver(q.order(), std::move(arrows));
}

/// Weighted degrees h_i = Σ_j |b_ij| together with the per-component and
/// overall maxima (h and r coincide by construction).
struct DegreeProfile {
  std::vector<Int> h_i;
  Int h;
  std::vector<Int> r_p;  // aligned with connected_components(q)
  Int r;
};

inline DegreeProfile degree_profile(const ValuedQuiver& q) {
  DegreeProfile p;
  p.h_i.assign(q.order(), 0);
  // arrow s→t contributes |b_st| = v1 at s and |b_ts| = v2 at t
  for (const Arrow& a : q.arrows()) {
    p.h_i[a.source] += a.v1;
    p.h_i[a.target] += a.v2;
  }
  p.h = 0;
  for (const Int& h : p.h_i) p.h = std::max(p.h, h);
  p.r = 0;
  for (const auto& comp : connected_components(q)) {
    Int m = 0;
    for (int v : comp) m = std::max(m, p.h_i[v]);
    p.r_p.push_back(m);
    p.r = std::max(p.r, m);
  }
  return p;
}

}  // namespace quiverspec
