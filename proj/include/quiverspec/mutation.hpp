#pragma once

#include "quiverspec/exchange.hpp"

#include <span>
#include <string>
#include <vector>

namespace quiverspec {

/// μ_k: negate row and column k, elsewhere b_ij + sgn(b_ik)·[b_ik·b_kj]₊.
/// The symmetrizer is carried over unchanged — mutation preserves it, and the
/// certificate constructor re-verifies that on every step.
inline ExchangeMatrix mutate(const ExchangeMatrix& b, int k) {
  const int n = b.order();
  if (k < 0 || k >= n) throw ValidationError("mutation vertex out of range");
  IntMatrix out(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (i == k || j == k) {
        out.at(i, j) = -b.entry(i, j);
        continue;
      }
      Int v = b.entry(i, j);
      Int prod = b.entry(i, k) * b.entry(k, j);
      if (prod > 0) v += sgn(b.entry(i, k)) * prod;
      out.at(i, j) = std::move(v);
    }
  return ExchangeMatrix(std::move(out), b.symmetrizer());
}

/// Applies the word left to right: mutate_seq(b, [k1,k2]) = μ_k2(μ_k1(b)).
inline ExchangeMatrix mutate_seq(ExchangeMatrix b, std::span<const int> word) {
  for (int k : word) b = mutate(b, k);
  return b;
}

inline ValuedQuiver mutate_quiver(const ValuedQuiver& q, int k) {
  return quiver_from_matrix(mutate(exchange_matrix(q), k));
}

/// Congruence witness for skew-symmetric B: W equals the identity except in
/// column k, where w_ik = [b_ik]₊ (i ≠ k) and w_kk = −1; then W·B·Wᵀ = μ_k(B)
/// and det W = −1.
struct CongruenceWitness {
  IntMatrix w;
  int k;
};

inline CongruenceWitness congruence_witness(const ExchangeMatrix& b, int k) {
  const int n = b.order();
  if (k < 0 || k >= n) throw ValidationError("mutation vertex out of range");
  if (!b.is_skew_symmetric())
    throw ValidationError("congruence witness requires a skew-symmetric matrix");
  IntMatrix w = IntMatrix::identity(n);
  w.at(k, k) = -1;
  for (int i = 0; i < n; ++i)
    if (i != k && b.entry(i, k) > 0) w.at(i, k) = b.entry(i, k);
  // the identity W·B·Wᵀ = μ_k(B) is load-bearing; check it before returning
  if (w * b.matrix() * w.transposed() != mutate(b, k).matrix())
    throw std::logic_error("congruence witness failed to reproduce the mutation");
  return {std::move(w), k};
}

enum class VertexStatus { Sink, Source, Neither, Isolated };

inline const char* to_string(VertexStatus s) {
  switch (s) {
    case VertexStatus::Sink: return "sink";
    case VertexStatus::Source: return "source";
    case VertexStatus::Neither: return "neither";
    case VertexStatus::Isolated: return "isolated";
  }
  return "?";
}

inline VertexStatus sink_source_status(const ValuedQuiver& q, int k) {
  if (k < 0 || k >= q.order()) throw ValidationError("vertex out of range");
  bool in = false, out = false;
  for (const Arrow& a : q.arrows()) {
    if (a.source == k) out = true;
    if (a.target == k) in = true;
  }
  if (!in && !out) return VertexStatus::Isolated;
  if (in && out) return VertexStatus::Neither;
  return in ? VertexStatus::Sink : VertexStatus::Source;
}

}  // namespace quiverspec
