#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>
#include <string_view>

namespace quiverspec {

// All arithmetic in the library is exact.  Matrix entries, polynomial
// coefficients and symmetrizers are arbitrary-precision integers; thresholds
// and interval endpoints are arbitrary-precision rationals.
using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Malformed input text (quiver files, rational literals).
struct ParseError : Error {
  using Error::Error;
};

/// Structurally or arithmetically inconsistent quiver/matrix data.
struct ValidationError : Error {
  using Error::Error;
};

inline int sgn(const Int& x) { return x.sign(); }

inline double to_double(const Rat& r) { return r.convert_to<double>(); }

/// Parses an exact rational from "p", "p/q" or a plain decimal like "1.25".
inline Rat parse_rational(std::string_view text) {
  auto fail = [&] { throw ParseError("invalid rational literal '" + std::string(text) + "'"); };

  // trim surrounding whitespace
  while (!text.empty() && (text.front() == ' ' || text.front() == '\t')) text.remove_prefix(1);
  while (!text.empty() && (text.back() == ' ' || text.back() == '\t')) text.remove_suffix(1);
  if (text.empty()) fail();

  std::string s(text);
  bool negative = false;
  std::size_t pos = 0;
  if (s[pos] == '+' || s[pos] == '-') {
    negative = (s[pos] == '-');
    ++pos;
  }

  auto digits = [&](std::size_t from, std::size_t to) -> Int {
    if (from == to) fail();
    Int v = 0;
    for (std::size_t i = from; i < to; ++i) {
      if (s[i] < '0' || s[i] > '9') fail();
      v = v * 10 + (s[i] - '0');
    }
    return v;
  };

  Rat value;
  if (auto slash = s.find('/', pos); slash != std::string::npos) {
    Int num = digits(pos, slash);
    Int den = digits(slash + 1, s.size());
    if (den == 0) throw ParseError("zero denominator in '" + std::string(text) + "'");
    value = Rat(num, den);
  } else if (auto dot = s.find('.', pos); dot != std::string::npos) {
    Int whole = dot > pos ? digits(pos, dot) : Int(0);
    Int frac = 0;
    Int scale = 1;
    for (std::size_t i = dot + 1; i < s.size(); ++i) {
      if (s[i] < '0' || s[i] > '9') fail();
      frac = frac * 10 + (s[i] - '0');
      scale *= 10;
    }
    if (dot == pos && scale == 1) fail();  // lone "."
    value = Rat(whole) + Rat(frac, scale);
  } else {
    value = Rat(digits(pos, s.size()));
  }
  return negative ? -value : value;
}

}  // namespace quiverspec
