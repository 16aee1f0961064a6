#pragma once

#include "quiverspec/charpoly.hpp"
#include "quiverspec/roots.hpp"

#include <optional>
#include <vector>

namespace quiverspec {

/// Exchange polynomials f(λ) = det(λI − B) have purely imaginary roots and
/// vanishing odd-codegree coefficients.  Substituting λ ↦ ix and normalizing
/// the sign gives the monic real-rooted g(x) = ±f(ix): the codegree-2m
/// coefficient picks up a factor (−1)^m.  Roots of g are exactly the
/// imaginary parts of the eigenvalues of B.
inline IntPolynomial real_root_form(const IntPolynomial& f) {
  const int n = f.degree();
  if (n < 0 || f.coeff(n) != 1)
    throw ValidationError("real-root form expects a monic exchange polynomial");
  std::vector<Int> c(static_cast<std::size_t>(n) + 1);
  for (int codeg = 0; codeg <= n; ++codeg) {
    const Int& v = f.coeff(n - codeg);
    if (codeg % 2 == 1) {
      if (v != 0) throw ValidationError("nonzero odd-codegree coefficient; not an exchange polynomial");
      continue;
    }
    c[static_cast<std::size_t>(n - codeg)] = (codeg % 4 == 0) ? v : -v;
  }
  return IntPolynomial(std::move(c));
}

enum class Ordering { Less, Equal, Greater };

inline const char* to_string(Ordering o) {
  switch (o) {
    case Ordering::Less: return "Less";
    case Ordering::Equal: return "Equal";
    case Ordering::Greater: return "Greater";
  }
  return "?";
}

/// Exact comparison of the exchange spectrum radius against a rational
/// threshold, plus an advisory double approximation of the radius itself.
struct RadiusVerdict {
  Ordering ordering;
  double approx;           // bisection-certified to well below 1e-9
  IntPolynomial g;         // real-root form of the exchange polynomial
  long roots_above;        // distinct roots of g strictly above the threshold
  bool threshold_is_root;  // g(r) == 0 exactly
};

inline RadiusVerdict radius_cmp(const ExchangeMatrix& b, const Rat& r) {
  if (r < 0) throw ValidationError("radius threshold must be nonnegative");
  IntPolynomial g = real_root_form(exchange_char_poly(b));
  long above = count_roots_gt(g, r);
  bool at = g.sign_at(r) == 0;
  RadiusVerdict v{Ordering::Less, 0.0, std::move(g), above, at};
  if (above > 0)
    v.ordering = Ordering::Greater;
  else if (at)
    v.ordering = Ordering::Equal;
  v.approx = v.ordering == Ordering::Equal ? to_double(r) : max_root_approx(v.g);
  return v;
}

inline RadiusVerdict radius_cmp(const ValuedQuiver& q, const Rat& r) { return radius_cmp(exchange_matrix(q), r); }

/// Radius approximation alone (largest root of g).
inline double radius_approx(const ValuedQuiver& q) {
  return max_root_approx(real_root_form(exchange_char_poly(q)));
}

/// No oriented cycles.  Decided by topological sort and independently by the
/// spectral criterion char_poly(A) = λⁿ (A nilpotent); the two must agree.
inline bool is_acyclic(const ValuedQuiver& q) {
  const int n = q.order();
  std::vector<int> indegree(n, 0);
  std::vector<std::vector<int>> out(n);
  for (const Arrow& a : q.arrows()) {
    out[a.source].push_back(a.target);
    ++indegree[a.target];
  }
  std::vector<int> ready;
  for (int v = 0; v < n; ++v)
    if (indegree[v] == 0) ready.push_back(v);
  int removed = 0;
  while (!ready.empty()) {
    int v = ready.back();
    ready.pop_back();
    ++removed;
    for (int u : out[v])
      if (--indegree[u] == 0) ready.push_back(u);
  }
  const bool topological = removed == n;

  const bool spectral = char_poly(adjacency_matrices(q).a) == IntPolynomial::monomial(n, 1);
  if (topological != spectral)
    throw std::logic_error("topological and spectral acyclicity tests disagree");
  return topological;
}

/// Same exchange polynomial (same order required).
inline bool cospectral(const ValuedQuiver& q1, const ValuedQuiver& q2) {
  if (q1.order() != q2.order()) throw ValidationError("cospectrality needs quivers of equal order");
  return exchange_char_poly(q1) == exchange_char_poly(q2);
}

/// 0 ≤ λ ≤ μ ≤ h: exchange radius λ, adjacency radius μ of C(Q) (real-rooted
/// because C is similar to a symmetric matrix), and the maximal weighted
/// degree h.  When λ = h exactly, some connected component is regular of
/// degree h and is returned as the witness.
struct BoundsReport {
  double lambda_approx;
  double mu_approx;
  Int h;
  std::optional<std::vector<int>> regular_witness;
};

inline BoundsReport bounds_report(const ValuedQuiver& q) {
  BoundsReport rep{0.0, 0.0, 0, std::nullopt};
  rep.lambda_approx = radius_approx(q);
  rep.mu_approx = max_root_approx(char_poly(adjacency_matrices(q).c));
  DegreeProfile profile = degree_profile(q);
  rep.h = profile.h;
  if (radius_cmp(q, Rat(profile.h)).ordering == Ordering::Equal) {
    for (const auto& comp : connected_components(q)) {
      bool regular = true;
      for (int v : comp) regular = regular && profile.h_i[v] == profile.h;
      if (regular) {
        rep.regular_witness = comp;
        break;
      }
    }
    if (!rep.regular_witness)
      throw std::logic_error("radius equals h but no regular component exists");
  }
  return rep;
}

}  // namespace quiverspec
