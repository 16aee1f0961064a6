// Acceptance gate: one line per criterion, "PASS"/"FAIL" with wall time.
// Every criterion has a fixed seed, exact assertions, and a runtime budget;
// exceeding the budget fails the criterion even if all checks hold.

#include "testutil.hpp"
#include "oracles.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

using namespace quiverspec;
using qstest::Rng;

namespace {

struct Tally {
  long checks = 0;
  long failures = 0;
  std::vector<std::string> messages;

  void expect(bool ok, const std::string& what) {
    ++checks;
    if (ok) return;
    ++failures;
    if (messages.size() < 5) messages.push_back(what);
  }
};

IntPolynomial poly(std::vector<int> cs) {
  std::vector<Int> v(cs.begin(), cs.end());
  return IntPolynomial(std::move(v));
}

// ---------------------------------------------------------------- criterion 1
void c1_involution(Tally& t) {
  Rng rng(9001);
  for (int trial = 0; trial < 1000; ++trial) {
    int n = qstest::pick(rng, 1, 8);
    ExchangeMatrix b = trial % 2 ? qstest::random_skew(rng, n, 5) : qstest::random_valued(rng, n, 1);
    for (int k = 0; k < n; ++k)
      t.expect(mutate(mutate(b, k), k).matrix() == b.matrix(),
               "double mutation at " + std::to_string(k) + " changed a matrix of order " + std::to_string(n));
  }
}

// ---------------------------------------------------------------- criterion 2
void c2_congruence(Tally& t) {
  Rng rng(9002);
  for (int trial = 0; trial < 500; ++trial) {
    int n = qstest::pick(rng, 1, 8);
    ExchangeMatrix b = qstest::random_skew(rng, n, 4);
    for (int k = 0; k < n; ++k) {
      CongruenceWitness cw = congruence_witness(b, k);
      t.expect(cw.w * b.matrix() * cw.w.transposed() == mutate(b, k).matrix(),
               "W*B*W^T mismatch at vertex " + std::to_string(k));
      t.expect(determinant(cw.w) == -1, "witness determinant is not -1");
    }
  }
}

// ---------------------------------------------------------------- criterion 3
void c3_acyclicity(Tally& t) {
  auto minors_vanish = [](const ValuedQuiver& q) {
    for (const Int& m : qsoracle::principal_minors(adjacency_matrices(q).a))
      if (m != 0) return false;
    return true;
  };
  auto check = [&](const ValuedQuiver& q) {
    bool lib = is_acyclic(q);  // throws if its spectral and topological answers split
    t.expect(lib == !qsoracle::has_oriented_cycle(q), "library acyclicity disagrees with DFS");
    t.expect(lib == minors_vanish(q), "acyclicity disagrees with principal-minor vanishing");
  };
  for (int n = 1; n <= 4; ++n)
    for (const ValuedQuiver& q : qstest::all_simply_laced(n)) check(q);
  Rng rng(9003);
  for (int trial = 0; trial < 150; ++trial) check(qstest::random_valued_quiver(rng, qstest::pick(rng, 1, 6)));
}

// ---------------------------------------------------------------- criterion 4
void c4_tree_orientations(Tally& t) {
  Rng rng(9004);
  for (int trial = 0; trial < 80; ++trial) {
    ValuedQuiver tree = qstest::random_tree(rng, qstest::pick(rng, 2, 6), 3);
    IntPolynomial f0 = exchange_char_poly(tree);
    const int m = static_cast<int>(tree.arrows().size());
    for (unsigned mask = 0; mask < (1u << m); ++mask) {
      std::vector<int> flips;
      for (int e = 0; e < m; ++e)
        if (mask >> e & 1) flips.push_back(e);
      ValuedQuiver orient = reorient(tree, flips);
      t.expect(exchange_char_poly(orient) == f0, "a tree reorientation changed the polynomial");
      t.expect(real_root_form(exchange_char_poly(orient)) == char_poly(adjacency_matrices(orient).c),
               "real-root form differs from the underlying graph spectrum");
    }
  }
}

// ---------------------------------------------------------------- criterion 5
void c5_catalogue(Tally& t) {
  auto expect_order = [&](const ValuedQuiver& q, Ordering want, const std::string& name) {
    t.expect(radius_cmp(q, 2).ordering == want, name + ": wrong radius comparison against 2");
  };
  for (int n = 2; n <= 8; ++n) expect_order(qstest::dynkin_a(n), Ordering::Less, "A" + std::to_string(n));
  for (int n = 4; n <= 8; ++n) expect_order(qstest::dynkin_d(n), Ordering::Less, "D" + std::to_string(n));
  for (int n = 6; n <= 8; ++n) expect_order(qstest::dynkin_e(n), Ordering::Less, "E" + std::to_string(n));
  for (int n = 4; n <= 8; ++n) expect_order(qstest::extended_d(n), Ordering::Equal, "D~" + std::to_string(n));
  expect_order(qstest::extended_e6(), Ordering::Equal, "E6~");
  expect_order(qstest::extended_e7(), Ordering::Equal, "E7~");
  expect_order(qstest::extended_e8(), Ordering::Equal, "E8~");
  // the 4-star with one pendant edge attached to a leaf
  std::vector<std::pair<int, int>> edges{{0, 1}, {1, 2}, {1, 3}, {1, 4}, {4, 5}};
  expect_order(qstest::orient_edges(6, edges), Ordering::Greater, "4-star plus pendant");
}

// ---------------------------------------------------------------- criterion 6
void c6_interlacing(Tally& t) {
  Rng rng(9006);
  auto roots_desc = [](const IntPolynomial& g) {
    RealRoots rr(g);
    std::vector<double> out;
    for (int i = rr.count() - 1; i >= 0; --i) {
      double x = rr.approx(i);
      for (int m = 0; m < rr.root(i).multiplicity; ++m) out.push_back(x);
    }
    return out;
  };
  int exact_checks = 0;
  for (int trial = 0; trial < 200; ++trial) {
    ValuedQuiver q = qstest::random_valued_quiver(rng, qstest::pick(rng, 2, 7));
    IntPolynomial gbig = real_root_form(exchange_char_poly(q));
    std::vector<double> big = roots_desc(gbig);
    for (int drop = 0; drop < q.order(); ++drop) {
      std::vector<int> kept;
      for (int v = 0; v < q.order(); ++v)
        if (v != drop) kept.push_back(v);
      IntPolynomial gsmall = real_root_form(exchange_char_poly(full_subquiver(q, kept)));
      std::vector<double> small = roots_desc(gsmall);
      bool ok = big.size() == small.size() + 1;
      for (std::size_t i = 0; ok && i < small.size(); ++i)
        ok = big[i] >= small[i] - 1e-8 && small[i] >= big[i + 1] - 1e-8;
      t.expect(ok, "numeric interlacing violated on a full subquiver");
      if (exact_checks < 20) {
        t.expect(interlaces_exactly(gbig, gsmall), "exact interlacing check failed");
        ++exact_checks;
      }
    }
  }
}

// ---------------------------------------------------------------- criterion 7
void c7_two_maximal(Tally& t) {
  for (int n = 1; n <= 4; ++n) {
    TwoMaximalResult r = classify_two_maximal(exchange_matrix(qstest::dynkin_a(n)));
    t.expect(r.two_maximal == Tristate::Yes && r.verdict.complete && r.type == "A" + std::to_string(n),
             "path of " + std::to_string(n) + " vertices not classified as maximal type A" + std::to_string(n));
  }
  TwoMaximalResult x2 = classify_two_maximal(ExchangeMatrix(IntMatrix(2, {0, 2, -2, 0})));
  t.expect(x2.two_maximal == Tristate::Yes && x2.verdict.complete && x2.type == "X2",
           "double edge not classified as maximal type X2");

  // five-vertex path: not maximal; its class contains a member of radius
  // exactly sqrt(5), reached by mutating at vertices 4 then 2 (1-based)
  ExchangeMatrix a5 = exchange_matrix(qstest::dynkin_a(5));
  TwoMaximalResult ra5 = classify_two_maximal(a5);
  t.expect(ra5.two_maximal == Tristate::No, "five-vertex path class misclassified as maximal");
  if (ra5.verdict.witness_word && ra5.verdict.witness_verdict) {
    RadiusVerdict replay = radius_cmp(mutate_seq(a5, *ra5.verdict.witness_word), 2);
    t.expect(replay.ordering == Ordering::Greater, "witness word does not replay to a radius above 2");
    t.expect(ra5.verdict.witness_verdict->ordering == Ordering::Greater, "witness verdict not Greater");
  } else {
    t.expect(false, "five-vertex path verdict carries no witness");
  }
  std::vector<int> word{3, 1};
  ExchangeMatrix exhibit = mutate_seq(a5, word);
  t.expect(exchange_char_poly(exhibit) == poly({0, 5, 0, 6, 0, 1}),
           "mutations at 4,2 on the path do not give the expected polynomial");
  RadiusVerdict rv = radius_cmp(exhibit, 2);
  t.expect(rv.ordering == Ordering::Greater && std::abs(rv.approx - std::sqrt(5.0)) <= 1e-6,
           "exhibited member's radius is not sqrt(5) within 1e-6");

  // 4-star orientation 2->1, 1->3, 1->4: one mutation at vertex 1 leaves the bound
  ValuedQuiver d4(4, {{1, 0, 1, 1}, {0, 2, 1, 1}, {0, 3, 1, 1}});
  TwoMaximalResult rd4 = classify_two_maximal(exchange_matrix(d4));
  t.expect(rd4.two_maximal == Tristate::No, "4-star misclassified as maximal");
  t.expect(rd4.verdict.witness_word && *rd4.verdict.witness_word == std::vector<int>{0},
           "4-star witness word is not [1]");
  t.expect(exchange_char_poly(mutate(exchange_matrix(d4), 0)) == poly({0, 0, 5, 0, 1}),
           "mutated 4-star polynomial is not degree 4 with codegree-2 coefficient 5");

  TwoMaximalResult w3 = classify_two_maximal(ExchangeMatrix(IntMatrix(2, {0, 3, -3, 0})));
  t.expect(w3.two_maximal == Tristate::No && w3.verdict.witness_word && w3.verdict.witness_word->empty(),
           "triple edge is not refuted by its own radius");
}

// ---------------------------------------------------------------- criterion 8
void c8_three_vertex_class(Tally& t) {
  MutationClass c = enumerate_class(exchange_matrix(qstest::dynkin_a(3)));
  t.expect(c.complete, "three-vertex path class did not close");
  t.expect(c.members.size() == 4, "class size is " + std::to_string(c.members.size()) + ", expected 4");
  std::vector<CospectralGroup> groups = cospectral_partition(c);
  t.expect(groups.size() == 2, "cospectral partition has " + std::to_string(groups.size()) + " groups, expected 2");
}

// ---------------------------------------------------------------- criterion 9
void c9_codegree_two(Tally& t) {
  Rng rng(9009);
  for (int trial = 0; trial < 500; ++trial) {
    int n = qstest::pick(rng, 2, 7);
    bool simply = trial < 125;
    bool skew = trial < 250;
    ExchangeMatrix b = simply  ? qstest::random_skew(rng, n, 1)
                       : skew  ? qstest::random_skew(rng, n, 4)
                               : qstest::random_valued(rng, n);
    IntPolynomial f = exchange_char_poly(b);
    for (int codeg = 1; codeg <= n; codeg += 2)
      t.expect(f.coeff(n - codeg) == 0, "odd-codegree coefficient is nonzero");
    Int weights = 0, squares = 0, arrows = 0;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) {
        weights += boost::multiprecision::abs(b.entry(i, j) * b.entry(j, i));
        squares += b.entry(i, j) * b.entry(i, j);
        arrows += b.entry(i, j) != 0 ? 1 : 0;
      }
    t.expect(f.coeff(n - 2) == weights, "codegree-2 coefficient differs from the total |b_ij*b_ji|");
    if (skew) t.expect(f.coeff(n - 2) == squares, "skew-symmetric codegree-2 differs from the sum of squares");
    if (simply) t.expect(f.coeff(n - 2) == arrows, "simply-laced codegree-2 differs from the arrow count");
  }
}

// --------------------------------------------------------------- criterion 10
void c10_codegree_four(Tally& t) {
  Rng rng(9010);
  int produced = 0;
  while (produced < 200) {
    int n = qstest::pick(rng, 4, 7);
    // spanning tree plus up to two chords, then reject anything with an
    // underlying 4-cycle
    std::vector<std::pair<int, int>> edges;
    for (int i = 1; i < n; ++i) edges.push_back({qstest::pick(rng, 0, i - 1), i});
    int chords = qstest::pick(rng, 0, 2);
    for (int c = 0; c < chords; ++c) {
      int a = qstest::pick(rng, 0, n - 1), b = qstest::pick(rng, 0, n - 1);
      if (a == b) continue;
      bool dup = false;
      for (auto [x, y] : edges) dup = dup || (std::minmax(a, b) == std::minmax(x, y));
      if (!dup) edges.push_back(std::minmax(a, b));
    }
    ValuedQuiver q = qstest::orient_edges(n, edges, static_cast<unsigned>(qstest::pick(rng, 0, (1 << edges.size()) - 1)));
    if (!qstest::four_cycle_free(q)) continue;
    ++produced;
    IntPolynomial f = exchange_char_poly(q);
    t.expect(f.coeff(f.degree() - 4) == Int(qsoracle::disadjacent_pairs(q)),
             "codegree-4 coefficient differs from the disadjacent-pair count");
    // order-4 full subquivers keep their polynomial under reorientation
    std::vector<int> kept;
    while (kept.size() < 4) {
      int v = qstest::pick(rng, 0, n - 1);
      bool seen = false;
      for (int u : kept) seen = seen || u == v;
      if (!seen) kept.push_back(v);
    }
    std::sort(kept.begin(), kept.end());
    ValuedQuiver sub = full_subquiver(q, kept);
    IntPolynomial fsub = exchange_char_poly(sub);
    const int m = static_cast<int>(sub.arrows().size());
    for (int rep = 0; rep < 8; ++rep) {
      unsigned mask = static_cast<unsigned>(qstest::pick(rng, 0, (1 << m) - 1));
      std::vector<int> flips;
      for (int e = 0; e < m; ++e)
        if (mask >> e & 1) flips.push_back(e);
      t.expect(exchange_char_poly(reorient(sub, flips)) == fsub,
               "reorienting an order-4 subquiver changed its polynomial");
    }
  }
}

// --------------------------------------------------------------- criterion 11
void c11_sink_source(Tally& t) {
  for (int n = 2; n <= 5; ++n)
    for (const ValuedQuiver& q : qstest::all_simply_laced(n)) {
      if (!qstest::triangle_free(q) || connected_components(q).size() != 1) continue;
      for (int k = 0; k < n; ++k) {
        VertexStatus s = sink_source_status(q, k);
        bool terminal = s == VertexStatus::Sink || s == VertexStatus::Source;
        t.expect(cospectral(q, mutate_quiver(q, k)) == terminal,
                 "cospectrality under mutation disagrees with sink/source status");
      }
    }
}

// --------------------------------------------------------------- criterion 12
void c12_probe(Tally& t) {
  for (int n = 2; n <= 5; ++n) {
    MutationClass c = enumerate_class(exchange_matrix(qstest::dynkin_a(n)));
    t.expect(c.complete, "path class of " + std::to_string(n) + " vertices did not close");
    ProbeReport rep = probe_conjecture(c);
    t.expect(rep.candidate_pairs == 0 && rep.candidates.empty() && rep.all_verified(),
             "unverified cospectral pair in the class of the " + std::to_string(n) + "-vertex path");
  }
}

// --------------------------------------------------------------- criterion 13
void c13_bounds(Tally& t) {
  Rng rng(9013);
  for (int trial = 0; trial < 500; ++trial) {
    ValuedQuiver q = qstest::random_valued_quiver(rng, qstest::pick(rng, 1, 6));
    BoundsReport rep = bounds_report(q);
    t.expect(rep.lambda_approx <= rep.mu_approx + 1e-9, "radius exceeds the graph adjacency radius");
    t.expect(rep.mu_approx <= to_double(Rat(rep.h)) + 1e-9, "graph adjacency radius exceeds the maximum degree");
    bool at_h = radius_cmp(q, Rat(rep.h)).ordering == Ordering::Equal;
    t.expect(at_h == rep.regular_witness.has_value(), "witness presence disagrees with the exact radius test");
    if (rep.regular_witness) {
      DegreeProfile p = degree_profile(q);
      bool regular = !rep.regular_witness->empty();
      for (int v : *rep.regular_witness) regular = regular && p.h_i[static_cast<std::size_t>(v)] == rep.h;
      bool is_component = false;
      for (const auto& comp : connected_components(q)) is_component = is_component || comp == *rep.regular_witness;
      t.expect(regular && is_component, "witness is not a regular connected component");
    }
  }
}

struct Criterion {
  int id;
  const char* description;
  double budget_seconds;
  std::function<void(Tally&)> run;
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "mutation is an involution on 1000 random matrices", 5, c1_involution},
      {2, "unimodular congruence reproduces mutation on 500 skew matrices", 5, c2_congruence},
      {3, "spectral, topological, and principal-minor acyclicity agree", 30, c3_acyclicity},
      {4, "tree orientations share the polynomial and match the graph spectrum", 30, c4_tree_orientations},
      {5, "radius trichotomy across the Dynkin and extended Dynkin catalogues", 10, c5_catalogue},
      {6, "vertex deletion interlaces the spectrum", 60, c6_interlacing},
      {7, "2-maximality classification with explicit witnesses", 60, c7_two_maximal},
      {8, "three-vertex path class has 4 members in 2 cospectral groups", 1, c8_three_vertex_class},
      {9, "odd codegrees vanish and codegree 2 totals the squared weights", 5, c9_codegree_two},
      {10, "codegree 4 counts disadjacent pairs; order-4 reorientation invariance", 30, c10_codegree_four},
      {11, "mutation is cospectral exactly at sinks and sources", 60, c11_sink_source},
      {12, "cospectral class members connect through sink/source mutations", 120, c12_probe},
      {13, "exchange radius <= graph radius <= max degree, with regularity witness", 30, c13_bounds},
  };

  int failed = 0;
  for (const Criterion& c : criteria) {
    Tally tally;
    auto start = std::chrono::steady_clock::now();
    try {
      c.run(tally);
    } catch (const std::exception& e) {
      tally.expect(false, std::string("unhandled exception: ") + e.what());
    }
    double elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (elapsed > c.budget_seconds)
      tally.expect(false, "runtime " + std::to_string(elapsed) + "s exceeded the " +
                              std::to_string(c.budget_seconds) + "s budget");
    bool pass = tally.failures == 0;
    failed += !pass;
    std::printf("%s criterion %d: %s (%.1fs)\n", pass ? "PASS" : "FAIL", c.id, c.description, elapsed);
    if (!pass) {
      std::printf("  %ld of %ld checks failed\n", tally.failures, tally.checks);
      for (const std::string& m : tally.messages) std::printf("  - %s\n", m.c_str());
    }
  }
  std::printf("%d/13 criteria passed\n", 13 - failed);
  return failed == 0 ? 0 : 1;
}
