#pragma once

#include "quiverspec/quiver.hpp"

#include <utility>
#include <vector>

namespace quiverspec {

/// Sign-skew-symmetric integer matrix together with its minimal positive
/// symmetrizer d (d_i·b_ij = −d_j·b_ji).  Both constructors validate; the
/// certificate overload verifies a caller-supplied d and reduces it to the
/// componentwise-minimal one, so equal matrices always carry equal d.
class ExchangeMatrix {
 public:
  explicit ExchangeMatrix(IntMatrix entries) : b_(std::move(entries)) {
    const int n = b_.order();
    if (n <= 0) throw ValidationError("exchange matrix needs positive order");
    std::vector<detail::RatioEdge> edges;
    for (int i = 0; i < n; ++i) {
      if (b_.at(i, i) != 0) throw ValidationError("exchange matrix must have zero diagonal");
      for (int j = i + 1; j < n; ++j) {
        const Int& x = b_.at(i, j);
        const Int& y = b_.at(j, i);
        if ((x == 0) != (y == 0) || (x > 0 && y > 0) || (x < 0 && y < 0))
          throw ValidationError("matrix is not sign-skew-symmetric");
        if (x != 0)  // d_i/d_j = |b_ji|/|b_ij|
          edges.push_back({i, j, Rat(boost::multiprecision::abs(y), boost::multiprecision::abs(x))});
      }
    }
    d_ = detail::minimal_symmetrizer(n, edges);
  }

  ExchangeMatrix(IntMatrix entries, std::vector<Int> symmetrizer) : b_(std::move(entries)), d_(std::move(symmetrizer)) {
    const int n = b_.order();
    if (n <= 0) throw ValidationError("exchange matrix needs positive order");
    if (static_cast<int>(d_.size()) != n) throw ValidationError("symmetrizer size mismatch");
    for (const Int& di : d_)
      if (di <= 0) throw ValidationError("symmetrizer entries must be positive");
    for (int i = 0; i < n; ++i)
      for (int j = i; j < n; ++j)
        if (d_[i] * b_.at(i, j) != -d_[j] * b_.at(j, i))
          throw ValidationError("symmetrizer certificate does not verify");
    reduce_symmetrizer();
  }

  int order() const { return b_.order(); }
  const IntMatrix& matrix() const { return b_; }
  const Int& entry(int i, int j) const { return b_.at(i, j); }
  const std::vector<Int>& symmetrizer() const { return d_; }

  bool is_skew_symmetric() const {
    for (int i = 0; i < order(); ++i)
      for (int j = i + 1; j < order(); ++j)
        if (b_.at(i, j) != -b_.at(j, i)) return false;
    return true;
  }

  friend bool operator==(const ExchangeMatrix& a, const ExchangeMatrix& b) { return a.b_ == b.b_; }

 private:
  // Any valid integer symmetrizer is a per-component multiple of the minimal
  // one, so dividing by the component gcd recovers it.
  void reduce_symmetrizer() {
    const int n = b_.order();
    std::vector<std::vector<int>> adj(n);
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        if (b_.at(i, j) != 0) {
          adj[i].push_back(j);
          adj[j].push_back(i);
        }
    std::vector<char> seen(n, 0);
    for (int root = 0; root < n; ++root) {
      if (seen[root]) continue;
      std::vector<int> comp{root};
      seen[root] = 1;
      for (std::size_t head = 0; head < comp.size(); ++head)
        for (int u : adj[comp[head]])
          if (!seen[u]) {
            seen[u] = 1;
            comp.push_back(u);
          }
      Int g = 0;
      for (int v : comp) g = boost::multiprecision::gcd(g, d_[v]);
      for (int v : comp) d_[v] /= g;
    }
  }

  IntMatrix b_;
  std::vector<Int> d_;
};

/// b_ij = v1 and b_ji = −v2 for each arrow i→j with value (v1, v2).
inline ExchangeMatrix exchange_matrix(const ValuedQuiver& q) {
  IntMatrix b(q.order());
  for (const Arrow& a : q.arrows()) {
    b.at(a.source, a.target) = a.v1;
    b.at(a.target, a.source) = -a.v2;
  }
  return ExchangeMatrix(std::move(b), validate(q));
}

/// Inverse of exchange_matrix; round-trips exactly.
inline ValuedQuiver quiver_from_matrix(const ExchangeMatrix& b) {
  std::vector<Arrow> arrows;
  for (int i = 0; i < b.order(); ++i)
    for (int j = i + 1; j < b.order(); ++j) {
      const Int& x = b.entry(i, j);
      if (x > 0)
        arrows.push_back({i, j, x, -b.entry(j, i)});
      else if (x < 0)
        arrows.push_back({j, i, b.entry(j, i), -x});
    }
  return ValuedQuiver(b.order(), std::move(arrows));
}

/// A(Q) = [B]₊ entrywise and C(Q) = [B]₊ + [−B]₊ (= |B| entrywise).
struct AdjacencyPair {
  IntMatrix a;
  IntMatrix c;
};

inline AdjacencyPair adjacency_matrices(const ExchangeMatrix& b) {
  const int n = b.order();
  AdjacencyPair out{IntMatrix(n), IntMatrix(n)};
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      const Int& x = b.entry(i, j);
      if (x > 0) out.a.at(i, j) = x;
      out.c.at(i, j) = boost::multiprecision::abs(x);
    }
  return out;
}

inline AdjacencyPair adjacency_matrices(const ValuedQuiver& q) { return adjacency_matrices(exchange_matrix(q)); }

}  // namespace quiverspec
