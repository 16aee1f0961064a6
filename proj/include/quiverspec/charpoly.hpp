#pragma once

#include "quiverspec/exchange.hpp"
#include "quiverspec/polynomial.hpp"

#include <utility>
#include <vector>

namespace quiverspec {

/// Characteristic polynomial det(xI − M) by the Berkowitz method: division
/// free, so everything stays in exact integer arithmetic, O(n⁴).
///
/// For each leading principal r×r block the coefficient vector of its
/// characteristic polynomial is obtained from the (r−1)-block's vector by a
/// Toeplitz multiplication whose generating column is
///   1, −m_rr, −R·C, −R·M·C, −R·M²·C, …
/// with R/C the row/column bordering the (r−1)-block.
inline IntPolynomial char_poly(const IntMatrix& m) {
  const int n = m.order();
  std::vector<Int> v{1};  // descending coefficients, starts as the 0×0 answer
  for (int r = 1; r <= n; ++r) {
    std::vector<Int> col(static_cast<std::size_t>(r) + 1);
    col[0] = 1;
    col[1] = -m.at(r - 1, r - 1);
    std::vector<Int> w(r - 1);  // w = M^s · C, updated in place
    for (int i = 0; i < r - 1; ++i) w[i] = m.at(i, r - 1);
    for (int s = 2; s <= r; ++s) {
      Int dot = 0;
      for (int i = 0; i < r - 1; ++i) dot += m.at(r - 1, i) * w[i];
      col[s] = -dot;
      if (s == r) break;
      std::vector<Int> next(r - 1);
      for (int i = 0; i < r - 1; ++i) {
        for (int j = 0; j < r - 1; ++j) next[i] += m.at(i, j) * w[j];
      }
      w = std::move(next);
    }
    std::vector<Int> out(static_cast<std::size_t>(r) + 1);
    for (int i = 0; i <= r; ++i)
      for (int j = 0; j < r && j <= i; ++j) out[i] += col[i - j] * v[j];
    v = std::move(out);
  }
  std::vector<Int> ascending(v.rbegin(), v.rend());
  return IntPolynomial(std::move(ascending));
}

inline Int determinant(const IntMatrix& m) {
  // det(M) = (−1)ⁿ · constant term of det(xI − M)
  Int c = char_poly(m).coeff(0);
  return (m.order() % 2 == 1) ? -c : c;
}

/// Characteristic polynomial of the exchange matrix.  Odd-codegree
/// coefficients vanish for every valid exchange matrix; that invariant is
/// asserted here because all spectral routines rely on it.
inline IntPolynomial exchange_char_poly(const ExchangeMatrix& b) {
  IntPolynomial f = char_poly(b.matrix());
  const int n = b.order();
  for (int codeg = 1; codeg <= n; codeg += 2)
    if (f.coeff(n - codeg) != 0)
      throw std::logic_error("exchange polynomial has a nonzero odd-codegree coefficient");
  return f;
}

inline IntPolynomial exchange_char_poly(const ValuedQuiver& q) { return exchange_char_poly(exchange_matrix(q)); }

}  // namespace quiverspec
