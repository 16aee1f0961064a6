#pragma once

#include "quiverspec/polynomial.hpp"

#include <algorithm>
#include <utility>
#include <vector>

namespace quiverspec {

namespace detail {

// Rational coefficient vectors (ascending degree) are used transiently inside
// polynomial division; results are always rescaled back to primitive integer
// polynomials by a positive rational factor, which preserves signs and roots.
using RatVec = std::vector<Rat>;

inline void trim(RatVec& v) {
  while (!v.empty() && v.back() == 0) v.pop_back();
}

inline RatVec to_rat(const IntPolynomial& p) {
  RatVec v(p.coeffs().size());
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = Rat(p.coeffs()[i]);
  return v;
}

inline IntPolynomial to_int_primitive(RatVec v) {
  trim(v);
  if (v.empty()) return {};
  Int common = 1;
  for (const Rat& c : v) common = boost::multiprecision::lcm(common, denominator(c));
  std::vector<Int> w(v.size());
  Int g = 0;
  for (std::size_t i = 0; i < v.size(); ++i) {
    w[i] = numerator(v[i]) * (common / denominator(v[i]));
    g = boost::multiprecision::gcd(g, w[i]);
  }
  for (Int& x : w) x /= g;
  return IntPolynomial(std::move(w));
}

/// Remainder of a by b over the rationals (b nonzero).
inline RatVec rat_rem(RatVec a, const RatVec& b) {
  trim(a);
  while (a.size() >= b.size()) {
    Rat q = a.back() / b.back();
    const std::size_t off = a.size() - b.size();
    for (std::size_t i = 0; i + 1 < b.size(); ++i) a[off + i] -= q * b[i];
    a.pop_back();
    trim(a);
  }
  return a;
}

/// Quotient of a by b over the rationals, requiring zero remainder.
inline RatVec rat_div_exact(RatVec a, const RatVec& b) {
  trim(a);
  if (a.size() < b.size()) throw ValidationError("exact division with larger divisor");
  RatVec q(a.size() - b.size() + 1);
  while (a.size() >= b.size()) {
    Rat c = a.back() / b.back();
    const std::size_t off = a.size() - b.size();
    q[off] = c;
    for (std::size_t i = 0; i + 1 < b.size(); ++i) a[off + i] -= c * b[i];
    a.pop_back();
    trim(a);
  }
  if (!a.empty()) throw ValidationError("polynomial division left a remainder");
  return q;
}

}  // namespace detail

/// Primitive gcd with positive leading coefficient (0 when both inputs are 0).
inline IntPolynomial poly_gcd(IntPolynomial a, IntPolynomial b) {
  a = a.primitive();
  b = b.primitive();
  while (!b.is_zero()) {
    IntPolynomial r = detail::to_int_primitive(detail::rat_rem(detail::to_rat(a), detail::to_rat(b)));
    a = std::move(b);
    b = std::move(r);
  }
  if (!a.is_zero() && a.leading() < 0) a = -a;
  return a;
}

/// p with all root multiplicities flattened to one; primitive, positive
/// leading coefficient.
inline IntPolynomial squarefree_part(const IntPolynomial& p) {
  if (p.is_zero()) throw ValidationError("square-free part of the zero polynomial");
  IntPolynomial prim = p.primitive();
  if (prim.leading() < 0) prim = -prim;
  IntPolynomial g = poly_gcd(prim, prim.derivative());
  if (g.degree() <= 0) return prim;
  return detail::to_int_primitive(detail::rat_div_exact(detail::to_rat(prim), detail::to_rat(g)));
}

/// Exact division by (x − root); throws when root is not actually a root.
inline IntPolynomial deflate(const IntPolynomial& p, const Rat& root) {
  if (p.degree() < 1) throw ValidationError("cannot deflate a constant polynomial");
  detail::RatVec q(static_cast<std::size_t>(p.degree()));
  Rat carry = p.leading();
  for (int i = p.degree() - 1; i >= 0; --i) {
    q[static_cast<std::size_t>(i)] = carry;
    carry = Rat(p.coeff(i)) + root * carry;
  }
  if (carry != 0) throw ValidationError("deflation point is not a root");
  return detail::to_int_primitive(std::move(q));
}

/// Sturm chain (signed remainder sequence) of primitive integer polynomials.
/// For any nonzero p and non-roots a < b, V(a) − V(b) is the number of
/// distinct real roots of p in (a, b); multiple roots count once.
class SturmChain {
 public:
  explicit SturmChain(const IntPolynomial& p) {
    if (p.is_zero()) throw ValidationError("Sturm chain of the zero polynomial");
    chain_.push_back(p.primitive());
    if (chain_.front().degree() > 0) chain_.push_back(chain_.front().derivative().primitive());
    while (chain_.back().degree() > 0) {
      detail::RatVec r = detail::rat_rem(detail::to_rat(chain_[chain_.size() - 2]), detail::to_rat(chain_.back()));
      if (r.empty()) break;
      chain_.push_back(-detail::to_int_primitive(std::move(r)));
    }
  }

  const IntPolynomial& base() const { return chain_.front(); }

  int variations_at(const Rat& x) const {
    int prev = 0, count = 0;
    for (const IntPolynomial& q : chain_) {
      int s = q.sign_at(x);
      if (s == 0) continue;
      if (prev != 0 && s != prev) ++count;
      prev = s;
    }
    return count;
  }

  int variations_at_pos_inf() const {
    int prev = 0, count = 0;
    for (const IntPolynomial& q : chain_) {
      int s = sgn(q.leading());
      if (prev != 0 && s != prev) ++count;
      prev = s;
    }
    return count;
  }

  int variations_at_neg_inf() const {
    int prev = 0, count = 0;
    for (const IntPolynomial& q : chain_) {
      int s = sgn(q.leading()) * (q.degree() % 2 == 0 ? 1 : -1);
      if (prev != 0 && s != prev) ++count;
      prev = s;
    }
    return count;
  }

 private:
  std::vector<IntPolynomial> chain_;
};

/// Number of distinct real roots of p strictly greater than x (any p ≠ 0;
/// roots at x itself are deflated away first).
inline long count_roots_gt(IntPolynomial p, const Rat& x) {
  if (p.is_zero()) throw ValidationError("root counting needs a nonzero polynomial");
  while (p.degree() > 0 && p.sign_at(x) == 0) p = deflate(p, x);
  if (p.degree() <= 0) return 0;
  SturmChain chain(p);
  return chain.variations_at(x) - chain.variations_at_pos_inf();
}

/// Distinct real roots in the half-open interval (a, b].
inline long count_roots_in(const IntPolynomial& p, const Rat& a, const Rat& b) {
  if (a >= b) return 0;
  return count_roots_gt(p, a) - count_roots_gt(p, b);
}

/// Real roots greater than x counted with multiplicity, via the gcd tower
/// p, gcd(p,p′), gcd(gcd(p,p′), …): a root of multiplicity m appears in
/// exactly the first m tower levels.
inline long count_roots_gt_mult(const IntPolynomial& p, const Rat& x) {
  long total = 0;
  IntPolynomial f = p.primitive();
  while (f.degree() > 0) {
    total += count_roots_gt(f, x);
    f = poly_gcd(f, f.derivative());
  }
  return total;
}

inline long count_roots_in_mult(const IntPolynomial& p, const Rat& a, const Rat& b) {
  if (a >= b) return 0;
  long total = 0;
  IntPolynomial f = p.primitive();
  while (f.degree() > 0) {
    total += count_roots_in(f, a, b);
    f = poly_gcd(f, f.derivative());
  }
  return total;
}

/// Strict bound: every real root of p satisfies |root| < the returned value.
inline Rat cauchy_root_bound(const IntPolynomial& p) {
  if (p.degree() < 1) throw ValidationError("root bound needs degree >= 1");
  Int mx = 0;
  for (int i = 0; i < p.degree(); ++i) mx = std::max(mx, Int(boost::multiprecision::abs(p.coeff(i))));
  return Rat(1) + Rat(mx, Int(boost::multiprecision::abs(p.leading())));
}

/// Multiplicity-aware root counting with the Sturm chains of the whole gcd
/// tower built once; query points must not be roots of p.
class RootCounter {
 public:
  explicit RootCounter(const IntPolynomial& p) {
    IntPolynomial f = p.primitive();
    while (f.degree() > 0) {
      tower_.emplace_back(f);
      f = poly_gcd(f, f.derivative());
    }
  }

  bool is_root(const Rat& x) const { return !tower_.empty() && tower_.front().base().sign_at(x) == 0; }

  long distinct_gt(const Rat& x) const {
    if (tower_.empty()) return 0;
    return tower_.front().variations_at(x) - tower_.front().variations_at_pos_inf();
  }

  long total_gt(const Rat& x) const {
    long n = 0;
    for (const SturmChain& c : tower_) n += c.variations_at(x) - c.variations_at_pos_inf();
    return n;
  }

 private:
  std::vector<SturmChain> tower_;
};

/// One real root of p isolated in the open interval (lo, hi); the endpoints
/// are never roots.  vlo/vhi cache the square-free chain's sign variations.
struct IsolatedRoot {
  Rat lo;
  Rat hi;
  int multiplicity = 1;
  int vlo = 0;
  int vhi = 0;
};

/// Complete isolation of the distinct real roots of an integer polynomial,
/// sorted ascending, with exact bisection refinement on demand.
class RealRoots {
 public:
  explicit RealRoots(const IntPolynomial& p)
      : p_(p.primitive()), sf_(squarefree_part(p_)), chain_(sf_) {
    if (sf_.degree() >= 1) {
      Rat bound = cauchy_root_bound(sf_);
      subdivide(-bound, bound, chain_.variations_at(-bound), chain_.variations_at(bound));
      if (sf_.degree() != p_.degree())
        for (IsolatedRoot& r : roots_) r.multiplicity = static_cast<int>(count_roots_in_mult(p_, r.lo, r.hi));
    }
  }

  int count() const { return static_cast<int>(roots_.size()); }
  const IsolatedRoot& root(int i) const { return roots_.at(static_cast<std::size_t>(i)); }

  /// Shrinks interval i below `width` by exact bisection.
  void refine(int i, const Rat& width) {
    IsolatedRoot& r = roots_.at(static_cast<std::size_t>(i));
    while (r.hi - r.lo > width) {
      Rat mid = split_point(r.lo, r.hi);
      int vmid = chain_.variations_at(mid);
      if (r.vlo - vmid == 1) {
        r.hi = mid;
        r.vhi = vmid;
      } else {
        r.lo = mid;
        r.vlo = vmid;
      }
    }
  }

  void refine_all(const Rat& width) {
    for (int i = 0; i < count(); ++i) refine(i, width);
  }

  /// Double approximation after refining the interval below 10⁻¹³.
  double approx(int i) {
    static const Rat width = Rat(1, boost::multiprecision::pow(Int(10), 13));
    refine(i, width);
    const IsolatedRoot& r = roots_.at(static_cast<std::size_t>(i));
    return to_double((r.lo + r.hi) / 2);
  }

 private:
  // point in (lo, hi) that is not a root of the square-free part
  Rat split_point(const Rat& lo, const Rat& hi) const {
    Rat w = hi - lo;
    Rat mid = lo + w / 2;
    if (sf_.sign_at(mid) != 0) return mid;
    for (Int div = 4;; div *= 2) {
      Rat off = w / div;
      if (sf_.sign_at(mid + off) != 0) return mid + off;
      if (sf_.sign_at(mid - off) != 0) return mid - off;
    }
  }

  void subdivide(const Rat& lo, const Rat& hi, int vlo, int vhi) {
    const int count = vlo - vhi;
    if (count == 0) return;
    if (count == 1) {
      roots_.push_back({lo, hi, 1, vlo, vhi});
      return;
    }
    Rat mid = split_point(lo, hi);
    int vmid = chain_.variations_at(mid);
    subdivide(lo, mid, vlo, vmid);
    subdivide(mid, hi, vmid, vhi);
  }

  IntPolynomial p_;
  IntPolynomial sf_;
  SturmChain chain_;
  std::vector<IsolatedRoot> roots_;
};

/// Largest real root as a double (the interval is certified by bisection, so
/// the error is far below 10⁻⁹).
inline double max_root_approx(const IntPolynomial& p) {
  RealRoots roots(p);
  if (roots.count() == 0) throw ValidationError("polynomial has no real roots");
  return roots.approx(roots.count() - 1);
}

/// Exact Cauchy-interlacing test for real-rooted integer polynomials with
/// deg(big) = deg(small) + 1: with roots sorted descending and counted with
/// multiplicity, λ₁ ≥ γ₁ ≥ λ₂ ≥ γ₂ ≥ … holds iff at every non-root t the
/// count N(t) of roots above t satisfies N_small(t) ≤ N_big(t) ≤ N_small(t)+1.
/// Those counts are piecewise constant, so checking one rational point per
/// gap between consecutive distinct roots of big·small decides it exactly.
inline bool interlaces_exactly(const IntPolynomial& big, const IntPolynomial& small) {
  if (big.degree() != small.degree() + 1 || small.degree() < 0) return false;
  RootCounter count_big(big), count_small(small);
  RealRoots merged(big * small);
  std::vector<Rat> samples;
  for (int i = 0; i < merged.count(); ++i) {
    if (i == 0) samples.push_back(merged.root(i).lo);
    samples.push_back(merged.root(i).hi);
  }
  if (samples.empty()) samples.push_back(0);  // no real roots at all
  for (const Rat& t : samples) {
    long nb = count_big.total_gt(t);
    long ns = count_small.total_gt(t);
    if (ns > nb || nb > ns + 1) return false;
  }
  // real-rootedness itself: below every root all deg-many roots must lie above
  if (count_big.total_gt(samples.front()) != big.degree()) return false;
  if (count_small.total_gt(samples.front()) != small.degree()) return false;
  return true;
}

}  // namespace quiverspec
