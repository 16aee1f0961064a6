#pragma once

#include "quiverspec/canonical.hpp"
#include "quiverspec/mutation.hpp"
#include "quiverspec/spectral.hpp"

#include <deque>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace quiverspec {

/// Safety rails for BFS over possibly infinite mutation classes.
struct ClassLimits {
  std::size_t max_quivers = 100000;
  Int max_entry = 64;
  std::optional<int> max_depth;
};

struct ClassMember {
  ExchangeMatrix matrix;
  std::vector<int> word;  // shortest mutation word from the root (0-based)
};

/// Mutation class up to isomorphism.  complete == true means the class is
/// provably closed under mutation at every vertex; any truncation (entry
/// bound, size cap, depth cap hiding an unseen neighbor) clears it.
struct MutationClass {
  CanonicalKey root_key;
  std::map<CanonicalKey, ClassMember> members;
  std::set<std::pair<CanonicalKey, CanonicalKey>> edges;  // endpoints sorted
  bool complete = false;
};

namespace detail {

inline bool entries_within(const ExchangeMatrix& b, const Int& bound) {
  for (int i = 0; i < b.order(); ++i)
    for (int j = 0; j < b.order(); ++j)
      if (boost::multiprecision::abs(b.entry(i, j)) > bound) return false;
  return true;
}

/// BFS with canonical-key dedup.  The visitor sees each member once, in
/// discovery order (root first, mutations tried in ascending vertex order);
/// returning false stops the search, which also clears `complete`.
template <typename Visitor>
MutationClass search_class(const ExchangeMatrix& root, const ClassLimits& limits, Visitor&& visit) {
  if (limits.max_quivers == 0 || limits.max_entry <= 0 || (limits.max_depth && *limits.max_depth < 0))
    throw ValidationError("class limits must be positive");
  MutationClass out;
  out.root_key = canonical_key(root);
  out.members.emplace(out.root_key, ClassMember{root, {}});
  bool truncated = false;
  bool stopped = !visit(out.root_key, out.members.at(out.root_key));
  std::deque<CanonicalKey> frontier{out.root_key};
  while (!frontier.empty() && !stopped) {
    CanonicalKey key = std::move(frontier.front());
    frontier.pop_front();
    const ClassMember& member = out.members.at(key);
    // members at the depth cap still probe their neighbors so that a class
    // that is already closed can be reported complete
    const bool may_insert =
        !limits.max_depth || static_cast<int>(member.word.size()) < *limits.max_depth;
    for (int k = 0; k < root.order() && !stopped; ++k) {
      ExchangeMatrix next = mutate(member.matrix, k);
      if (!entries_within(next, limits.max_entry)) {
        truncated = true;
        continue;
      }
      CanonicalKey next_key = canonical_key(next);
      if (out.members.count(next_key)) {
        out.edges.insert(std::minmax(key, next_key));
        continue;
      }
      if (!may_insert || out.members.size() >= limits.max_quivers) {
        truncated = true;
        continue;
      }
      std::vector<int> word = member.word;
      word.push_back(k);
      auto [it, _] = out.members.emplace(next_key, ClassMember{std::move(next), std::move(word)});
      out.edges.insert(std::minmax(key, next_key));
      frontier.push_back(next_key);
      if (!visit(next_key, it->second)) stopped = true;
    }
  }
  out.complete = !truncated && !stopped;
  return out;
}

}  // namespace detail

inline MutationClass enumerate_class(const ExchangeMatrix& b, const ClassLimits& limits = {}) {
  return detail::search_class(b, limits, [](const CanonicalKey&, const ClassMember&) { return true; });
}

enum class Tristate { Yes, No, Unknown };

/// Every class member has exchange spectrum radius ≤ r?  A witness member
/// with radius > r decides No; full closure with none decides Yes; a
/// truncated search without a witness stays Unknown (complete == false,
/// is_r_maximal withheld as false without witness).
struct RMaximalVerdict {
  bool is_r_maximal = false;
  bool complete = false;
  std::optional<std::vector<int>> witness_word;
  std::optional<RadiusVerdict> witness_verdict;

  Tristate state() const {
    if (witness_word) return Tristate::No;
    return complete ? Tristate::Yes : Tristate::Unknown;
  }
};

struct RMaximalSearch {
  RMaximalVerdict verdict;
  MutationClass cls;
};

inline RMaximalSearch r_maximal_search(const ExchangeMatrix& b, const Rat& r, const ClassLimits& limits = {}) {
  RMaximalSearch out;
  out.cls = detail::search_class(b, limits, [&](const CanonicalKey&, const ClassMember& m) {
    RadiusVerdict rv = radius_cmp(m.matrix, r);
    if (rv.ordering != Ordering::Greater) return true;
    out.verdict.witness_word = m.word;
    out.verdict.witness_verdict = std::move(rv);
    return false;
  });
  out.verdict.complete = out.cls.complete;
  out.verdict.is_r_maximal = out.cls.complete && !out.verdict.witness_word;
  return out;
}

inline RMaximalVerdict is_r_maximal(const ExchangeMatrix& b, const Rat& r, const ClassLimits& limits = {}) {
  return r_maximal_search(b, r, limits).verdict;
}

/// Members grouped by exact exchange polynomial, groups sorted by polynomial,
/// keys inside a group in map (lexicographic) order.
struct CospectralGroup {
  IntPolynomial polynomial;
  std::vector<CanonicalKey> keys;
};

inline std::vector<CospectralGroup> cospectral_partition(const MutationClass& c) {
  std::map<std::vector<Int>, CospectralGroup> by_poly;
  for (const auto& [key, member] : c.members) {
    IntPolynomial f = exchange_char_poly(member.matrix);
    auto [it, fresh] = by_poly.try_emplace(f.coeffs());
    if (fresh) it->second.polynomial = std::move(f);
    it->second.keys.push_back(key);
  }
  std::vector<CospectralGroup> groups;
  groups.reserve(by_poly.size());
  for (auto& [_, g] : by_poly) groups.push_back(std::move(g));
  return groups;  // map order == ascending coefficient order == poly_less
}

enum class DiagramKind { Dynkin, ExtendedDynkin, Neither };

struct DiagramVerdict {
  DiagramKind kind = DiagramKind::Neither;
  std::string name;    // "A4", "D5", "E6", "D4~", "E7~", ...
  std::string reason;  // filled for Neither
};

/// Structural recognition of connected simply-laced trees against the Dynkin
/// (radius < 2) and extended Dynkin (radius = 2) catalogues, cross-checked
/// against the exact spectral verdict.  Anything else is Neither with a
/// reason.
inline DiagramVerdict recognize_diagram(const ValuedQuiver& q) {
  const int n = q.order();
  if (connected_components(q).size() != 1) return {DiagramKind::Neither, "", "not connected"};
  for (const Arrow& a : q.arrows())
    if (a.v1 != 1 || a.v2 != 1) return {DiagramKind::Neither, "", "not simply-laced"};
  if (static_cast<int>(q.arrows().size()) != n - 1)
    return {DiagramKind::Neither, "", "underlying graph is not a tree"};

  std::vector<std::vector<int>> adj(n);
  for (const Arrow& a : q.arrows()) {
    adj[a.source].push_back(a.target);
    adj[a.target].push_back(a.source);
  }
  std::vector<int> deg(n);
  int deg3 = 0, deg4 = 0, deg5 = 0;
  for (int v = 0; v < n; ++v) {
    deg[v] = static_cast<int>(adj[v].size());
    deg3 += deg[v] == 3;
    deg4 += deg[v] == 4;
    deg5 += deg[v] >= 5;
  }

  // walk from `center` into `first`, following the path while degrees stay 2
  auto leg_length = [&](int center, int first) {
    int prev = center, cur = first, len = 1;
    while (deg[cur] == 2) {
      int next = adj[cur][0] == prev ? adj[cur][1] : adj[cur][0];
      prev = cur;
      cur = next;
      ++len;
    }
    return deg[cur] == 1 ? len : -1;  // -1: ran into another branch vertex
  };

  DiagramVerdict v;
  auto shape_miss = [&] {
    return DiagramVerdict{DiagramKind::Neither, "", "tree is not of Dynkin or extended Dynkin shape"};
  };
  if (deg5 > 0 || deg4 + deg3 > 2 || (deg4 == 1 && deg3 > 0) || deg4 == 2) {
    v = shape_miss();
  } else if (deg4 == 1) {
    int center = 0;
    while (deg[center] != 4) ++center;
    std::vector<int> legs;
    for (int u : adj[center]) legs.push_back(leg_length(center, u));
    std::sort(legs.begin(), legs.end());
    v = legs == std::vector<int>{1, 1, 1, 1} ? DiagramVerdict{DiagramKind::ExtendedDynkin, "D4~", ""} : shape_miss();
  } else if (deg3 == 1) {
    int center = 0;
    while (deg[center] != 3) ++center;
    std::vector<int> legs;
    for (int u : adj[center]) legs.push_back(leg_length(center, u));
    std::sort(legs.begin(), legs.end());
    if (legs[0] == 1 && legs[1] == 1)
      v = {DiagramKind::Dynkin, "D" + std::to_string(legs[2] + 3), ""};
    else if (legs == std::vector<int>{1, 2, 2})
      v = {DiagramKind::Dynkin, "E6", ""};
    else if (legs == std::vector<int>{1, 2, 3})
      v = {DiagramKind::Dynkin, "E7", ""};
    else if (legs == std::vector<int>{1, 2, 4})
      v = {DiagramKind::Dynkin, "E8", ""};
    else if (legs == std::vector<int>{2, 2, 2})
      v = {DiagramKind::ExtendedDynkin, "E6~", ""};
    else if (legs == std::vector<int>{1, 3, 3})
      v = {DiagramKind::ExtendedDynkin, "E7~", ""};
    else if (legs == std::vector<int>{1, 2, 5})
      v = {DiagramKind::ExtendedDynkin, "E8~", ""};
    else
      v = shape_miss();
  } else if (deg3 == 2) {
    // extended D: two branch vertices, each carrying two pendant leaves,
    // joined by a path
    bool ok = true;
    for (int w = 0; w < n; ++w) {
      if (deg[w] != 3) continue;
      int leaves = 0;
      for (int u : adj[w]) leaves += deg[u] == 1;
      ok = ok && leaves == 2;
    }
    v = ok ? DiagramVerdict{DiagramKind::ExtendedDynkin, "D" + std::to_string(n - 1) + "~", ""} : shape_miss();
  } else {
    v = {DiagramKind::Dynkin, "A" + std::to_string(n), ""};
  }

  // these shapes characterize the radius-vs-2 trichotomy exactly; a
  // disagreement would mean a bug in either side, so fail loudly
  Ordering o = radius_cmp(q, 2).ordering;
  Ordering expect = v.kind == DiagramKind::Dynkin     ? Ordering::Less
                    : v.kind == DiagramKind::ExtendedDynkin ? Ordering::Equal
                                                            : Ordering::Greater;
  if (o != expect) throw std::logic_error("structural diagram match and spectral verdict disagree");
  if (v.kind == DiagramKind::Neither && v.reason == "tree is not of Dynkin or extended Dynkin shape")
    v.reason += "; spectral radius exceeds 2";
  return v;
}

/// Full classification of connected cluster quivers: 2-maximal iff mutation
/// equivalent to an orientation of X₂ or A₁..A₄.  The type is found by
/// scanning the closed class for an X₂ matrix or a simply-laced tree.
struct TwoMaximalResult {
  Tristate two_maximal = Tristate::Unknown;
  std::string type;  // set iff two_maximal == Yes
  RMaximalVerdict verdict;
  std::size_t class_size = 0;  // members visited before closure / truncation / witness
};

inline TwoMaximalResult classify_two_maximal(const ExchangeMatrix& b, const ClassLimits& limits = {}) {
  if (connected_components(quiver_from_matrix(b)).size() != 1)
    throw ValidationError("two-maximality classification needs a connected quiver; split by components first");
  if (!b.is_skew_symmetric())
    throw ValidationError("two-maximality classification is stated for cluster quivers (skew-symmetric matrices)");
  RMaximalSearch search = r_maximal_search(b, 2, limits);
  TwoMaximalResult out;
  out.verdict = std::move(search.verdict);
  out.two_maximal = out.verdict.state();
  out.class_size = search.cls.members.size();
  if (out.two_maximal != Tristate::Yes) return out;
  for (const auto& [key, member] : search.cls.members) {
    const ExchangeMatrix& m = member.matrix;
    if (m.order() == 2 && boost::multiprecision::abs(m.entry(0, 1)) == 2) {
      out.type = "X2";
      break;
    }
    DiagramVerdict d = recognize_diagram(quiver_from_matrix(m));
    if (d.kind == DiagramKind::Dynkin) {
      out.type = d.name;
      break;
    }
  }
  static const std::set<std::string> allowed{"X2", "A1", "A2", "A3", "A4"};
  if (!allowed.count(out.type))
    throw std::logic_error("2-maximal class has no X2 or A1..A4 representative, contradicting the classification");
  return out;
}

/// Evidence report for the sink/source-connectivity conjecture: within every
/// cospectral group of a complete class, members should be linked by
/// mutations at sinks/sources (up to isomorphism, i.e. at the key level).
struct ProbeReport {
  int groups = 0;
  long verified_pairs = 0;
  long candidate_pairs = 0;
  // one representative pair per disconnected block pair inside a group
  std::vector<std::pair<CanonicalKey, CanonicalKey>> candidates;

  bool all_verified() const { return candidate_pairs == 0; }
};

inline ProbeReport probe_conjecture(const MutationClass& c) {
  if (!c.complete)
    throw ValidationError("conjecture probe requires a complete mutation class");
  std::map<CanonicalKey, int> index;
  for (const auto& [key, _] : c.members) index.emplace(key, static_cast<int>(index.size()));

  std::vector<int> parent(index.size());
  for (std::size_t i = 0; i < parent.size(); ++i) parent[i] = static_cast<int>(i);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  auto unite = [&](int a, int b) { parent[find(a)] = find(b); };

  for (const auto& [key, member] : c.members) {
    ValuedQuiver q = quiver_from_matrix(member.matrix);
    for (int k = 0; k < q.order(); ++k) {
      VertexStatus s = sink_source_status(q, k);
      if (s == VertexStatus::Neither) continue;
      CanonicalKey other = canonical_key(mutate(member.matrix, k));
      auto it = index.find(other);
      if (it == index.end()) throw std::logic_error("complete class is missing a mutation image");
      unite(index.at(key), it->second);
    }
  }

  ProbeReport report;
  for (const CospectralGroup& group : cospectral_partition(c)) {
    ++report.groups;
    std::map<int, std::vector<CanonicalKey>> blocks;  // sink/source component → keys
    for (const CanonicalKey& key : group.keys) blocks[find(index.at(key))].push_back(key);
    long total = static_cast<long>(group.keys.size());
    report.verified_pairs += total * (total - 1) / 2;
    // pairs across different blocks are unverified candidates
    std::vector<const std::vector<CanonicalKey>*> blocklist;
    for (const auto& [_, keys] : blocks) blocklist.push_back(&keys);
    for (std::size_t i = 0; i < blocklist.size(); ++i)
      for (std::size_t j = i + 1; j < blocklist.size(); ++j) {
        long cross = static_cast<long>(blocklist[i]->size()) * static_cast<long>(blocklist[j]->size());
        report.candidate_pairs += cross;
        report.verified_pairs -= cross;
        report.candidates.emplace_back(blocklist[i]->front(), blocklist[j]->front());
      }
  }
  return report;
}

}  // namespace quiverspec
