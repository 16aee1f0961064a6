#pragma once

#include "quiverspec/exchange.hpp"

#include <algorithm>
#include <array>
#include <cstdint>
#include <limits>
#include <string>
#include <vector>

namespace quiverspec {

/// Opaque string identifying an exchange matrix (with symmetrizer) up to
/// simultaneous row/column permutation: key(B) = key(P·B·Pᵀ) for every
/// permutation matrix P, and distinct keys mean non-isomorphic matrices.
using CanonicalKey = std::string;

namespace detail {

inline std::uint64_t mix64(std::uint64_t h, std::uint64_t v) {
  h ^= v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  return h * 0xff51afd7ed558ccdULL;
}

inline std::uint64_t int_digest(const Int& x) {
  if (x >= std::numeric_limits<std::int64_t>::min() && x <= std::numeric_limits<std::int64_t>::max())
    return static_cast<std::uint64_t>(x.convert_to<std::int64_t>());
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (char c : x.str()) h = (h ^ static_cast<unsigned char>(c)) * 0x100000001b3ULL;
  return h;
}

/// Permutation-equivariant vertex colors: start from (d_i, multiset of
/// incident value pairs), then repeatedly fold in the sorted neighbor colors.
/// Hash collisions can only merge color classes, which weakens pruning but
/// never affects correctness — the final minimization compares real entries.
inline std::vector<std::uint64_t> refined_colors(const ExchangeMatrix& b) {
  const int n = b.order();
  std::vector<std::uint64_t> color(n);
  for (int i = 0; i < n; ++i) {
    std::vector<std::array<std::uint64_t, 2>> inc;
    for (int j = 0; j < n; ++j)
      if (j != i && b.entry(i, j) != 0) inc.push_back({int_digest(b.entry(i, j)), int_digest(b.entry(j, i))});
    std::sort(inc.begin(), inc.end());
    std::uint64_t h = mix64(0x2545f4914f6cdd1dULL, int_digest(b.symmetrizer()[i]));
    for (const auto& e : inc) h = mix64(mix64(h, e[0]), e[1]);
    color[i] = h;
  }
  for (int round = 0; round < n; ++round) {
    std::vector<std::uint64_t> next(n);
    for (int i = 0; i < n; ++i) {
      std::vector<std::array<std::uint64_t, 3>> inc;
      for (int j = 0; j < n; ++j)
        if (j != i && b.entry(i, j) != 0)
          inc.push_back({color[j], int_digest(b.entry(i, j)), int_digest(b.entry(j, i))});
      std::sort(inc.begin(), inc.end());
      std::uint64_t h = mix64(0x9e3779b97f4a7c15ULL, color[i]);
      for (const auto& e : inc) h = mix64(mix64(mix64(h, e[0]), e[1]), e[2]);
      next[i] = h;
    }
    color = std::move(next);
  }
  return color;
}

/// Backtracking minimizer.  Vertices are assigned position by position within
/// their color class; the sequence being minimized lists, per position p, the
/// symmetrizer value followed by the matrix entries against all previously
/// placed vertices.  Candidates whose block exceeds the best known prefix are
/// pruned; a full assignment replaces the best only after an exact compare.
class KeyMinimizer {
 public:
  explicit KeyMinimizer(const ExchangeMatrix& b) : b_(b), colors_(refined_colors(b)) {}

  std::vector<int> run() {
    const int n = b_.order();
    position_color_ = colors_;
    std::sort(position_color_.begin(), position_color_.end());
    used_.assign(n, false);
    perm_.assign(n, -1);
    descend(0, true);
    return best_perm_;
  }

 private:
  // appends the position-p block for candidate v given perm_[0..p)
  void append_block(std::vector<Int>& seq, int p, int v) const {
    seq.push_back(b_.symmetrizer()[v]);
    for (int q = 0; q < p; ++q) {
      seq.push_back(b_.entry(perm_[q], v));
      seq.push_back(b_.entry(v, perm_[q]));
    }
  }

  // tight == true means cur_ equals best_ on everything before this position;
  // after best_ is replaced deeper in the tree a stale tight == false only
  // costs extra exploration, never a wrong answer, because replacement does a
  // full comparison.
  void descend(int p, bool tight) {
    const int n = b_.order();
    if (p == n) {
      if (best_perm_.empty() || cur_ < best_) {
        best_ = cur_;
        best_perm_ = perm_;
      }
      return;
    }
    const std::size_t len_before = cur_.size();
    for (int v = 0; v < n; ++v) {
      if (used_[v] || colors_[v] != position_color_[p]) continue;
      append_block(cur_, p, v);
      bool child_tight = tight;
      bool prune = false;
      if (tight && !best_perm_.empty()) {
        // compare the appended block against the same slice of best_
        for (std::size_t i = len_before; i < cur_.size(); ++i) {
          if (cur_[i] != best_[i]) {
            prune = cur_[i] > best_[i];
            child_tight = false;
            break;
          }
        }
      }
      if (!prune) {
        used_[v] = true;
        perm_[p] = v;
        descend(p + 1, child_tight);
        perm_[p] = -1;
        used_[v] = false;
      }
      cur_.resize(len_before);
    }
  }

  const ExchangeMatrix& b_;
  std::vector<std::uint64_t> colors_;
  std::vector<std::uint64_t> position_color_;
  std::vector<bool> used_;
  std::vector<int> perm_;
  std::vector<Int> cur_;
  std::vector<Int> best_;
  std::vector<int> best_perm_;
};

}  // namespace detail

/// Minimal representative rendered as "order|symmetrizer|rows".
inline CanonicalKey canonical_key(const ExchangeMatrix& b) {
  std::vector<int> perm = detail::KeyMinimizer(b).run();
  const int n = b.order();
  std::string key = std::to_string(n) + "|";
  for (int i = 0; i < n; ++i) {
    if (i) key += ",";
    key += b.symmetrizer()[perm[i]].str();
  }
  key += "|";
  for (int i = 0; i < n; ++i) {
    if (i) key += ";";
    for (int j = 0; j < n; ++j) {
      if (j) key += ",";
      key += b.entry(perm[i], perm[j]).str();
    }
  }
  return key;
}

}  // namespace quiverspec
