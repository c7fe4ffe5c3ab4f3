#pragma once

#include <cctype>
#include <cstdint>
#include <string>
#include <vector>

#include "ringlab/errors.hpp"
#include "ringlab/ring.hpp"

namespace ringlab {

namespace detail {

/// Resolve an atom token to coordinates. Resolution order: full token as a
/// basis label (group-ring and matrix labels contain '*' and brackets), then
/// a named element, then a reserved label (which carries an explanation of
/// why it cannot denote an element here), then a top-level '*'-split product
/// of resolvable factors.
inline std::vector<std::uint32_t> resolve_atom(const FiniteRing& ring,
                                               const std::string& atom,
                                               std::size_t pos) {
  if (auto bi = ring.basis_index_of(atom)) {
    std::vector<std::uint32_t> c(ring.rank(), 0);
    c[*bi] = 1;
    return c;
  }
  if (const auto* named = ring.find_named(atom)) return *named;
  if (const auto* why = ring.find_reserved(atom))
    throw IllegalIntegerCoefficientError(*why);

  // Top-level '*'-split product (brackets shield commas and indices).
  std::vector<std::string> factors;
  std::string cur;
  int depth = 0;
  for (char ch : atom) {
    if (ch == '[') ++depth;
    if (ch == ']') --depth;
    if (ch == '*' && depth == 0) {
      factors.push_back(cur);
      cur.clear();
    } else {
      cur += ch;
    }
  }
  factors.push_back(cur);
  if (factors.size() > 1) {
    std::vector<std::uint32_t> acc = resolve_atom(ring, factors[0], pos);
    std::vector<std::uint32_t> tmp(ring.rank());
    for (std::size_t f = 1; f < factors.size(); ++f) {
      std::vector<std::uint32_t> rhs = resolve_atom(ring, factors[f], pos);
      ring.mul(acc, rhs, tmp);
      acc = tmp;
    }
    return acc;
  }
  throw UnknownLabelError("unknown element label '" + atom + "' at position " +
                          std::to_string(pos));
}

}  // namespace detail

/// Parse an element description: either raw coordinates "[c1,c2,...]" (one
/// integer per basis generator, reduced into canonical residues), or a signed
/// sum of terms "k*atom", "k atom", "atom", or a bare integer k (which means
/// k times unity and is rejected with an explanation when the ring has none).
inline RingElement parse_element(const RingPtr& ring, const std::string& text) {
  const FiniteRing& R = *ring;
  std::size_t pos = 0;
  auto skip_ws = [&] {
    while (pos < text.size() &&
           std::isspace(static_cast<unsigned char>(text[pos])))
      ++pos;
  };
  skip_ws();
  if (pos < text.size() && text[pos] == '[') {
    ++pos;
    std::vector<std::uint32_t> coords;
    const auto& orders = R.group().orders;
    while (true) {
      skip_ws();
      bool neg = false;
      if (pos < text.size() && (text[pos] == '-' || text[pos] == '+')) {
        neg = text[pos] == '-';
        ++pos;
      }
      const std::size_t start = pos;
      long long v = 0;
      while (pos < text.size() &&
             std::isdigit(static_cast<unsigned char>(text[pos]))) {
        v = v * 10 + (text[pos] - '0');
        if (v > (1LL << 40)) throw ExprParseError(start, "coordinate too large");
        ++pos;
      }
      if (pos == start) throw ExprParseError(pos, "expected a coordinate");
      if (coords.size() >= R.rank())
        throw ExprParseError(pos, "too many coordinates for this ring");
      const long long d = static_cast<long long>(orders[coords.size()]);
      long long r = ((neg ? -v : v) % d + d) % d;
      coords.push_back(static_cast<std::uint32_t>(r));
      skip_ws();
      if (pos < text.size() && text[pos] == ',') {
        ++pos;
        continue;
      }
      break;
    }
    if (pos >= text.size() || text[pos] != ']')
      throw ExprParseError(pos, "expected ']' after coordinates");
    ++pos;
    skip_ws();
    if (pos != text.size())
      throw ExprParseError(pos, "trailing input after coordinates");
    if (coords.size() != R.rank())
      throw ExprParseError(pos, "expected " + std::to_string(R.rank()) +
                                    " coordinates, got " +
                                    std::to_string(coords.size()));
    return ring->element(coords);
  }

  RingElement sum = ring->zero_element();
  std::vector<std::uint32_t> tmp(R.rank());
  bool first = true;
  while (true) {
    skip_ws();
    long long sign = 1;
    if (pos < text.size() && (text[pos] == '+' || text[pos] == '-')) {
      if (first && text[pos] == '+') {
        ++pos;
      } else {
        sign = (text[pos] == '-') ? -1 : 1;
        ++pos;
      }
    } else if (!first) {
      break;
    }
    skip_ws();
    if (pos >= text.size()) throw ExprParseError(pos, "expected a term");

    long long coeff = 1;
    bool saw_int = false;
    const std::size_t int_start = pos;
    if (std::isdigit(static_cast<unsigned char>(text[pos]))) {
      coeff = 0;
      while (pos < text.size() &&
             std::isdigit(static_cast<unsigned char>(text[pos]))) {
        coeff = coeff * 10 + (text[pos] - '0');
        if (coeff > (1LL << 40))
          throw ExprParseError(int_start, "coefficient too large");
        ++pos;
      }
      saw_int = true;
    }
    skip_ws();
    if (saw_int && pos < text.size() && text[pos] == '*') {
      ++pos;
      skip_ws();
    }

    // Atom: up to the next top-level '+' or '-'.
    const std::size_t atom_start = pos;
    std::string atom;
    int depth = 0;
    while (pos < text.size()) {
      const char ch = text[pos];
      if (ch == '[') ++depth;
      if (ch == ']') --depth;
      if (depth == 0 && (ch == '+' || ch == '-')) break;
      atom += ch;
      ++pos;
    }
    while (!atom.empty() &&
           std::isspace(static_cast<unsigned char>(atom.back())))
      atom.pop_back();

    std::vector<std::uint32_t> term;
    if (atom.empty()) {
      if (!saw_int) throw ExprParseError(pos, "expected a term");
      if (coeff == 0) {
        term.assign(R.rank(), 0);  // "0" is the zero element of any ring
      } else {
        auto u = ring->unity();
        if (!u)
          throw IllegalIntegerCoefficientError(
              "a bare integer denotes an integer multiple of unity, and this "
              "ring has no unity; multiply an explicit element instead");
        term = *u;
      }
    } else {
      term = detail::resolve_atom(R, atom, atom_start);
    }
    R.group().scale(sign * coeff, term, tmp);
    std::vector<std::uint32_t> next(R.rank());
    R.add(sum.c, tmp, next);
    sum.c = std::move(next);
    first = false;
    skip_ws();
    if (pos >= text.size()) break;
  }
  return sum;
}

/// Canonical rendering: "0" for zero, otherwise the nonzero coordinates as
/// "c*label" terms joined by " + " (coefficient omitted when it is 1).
/// parse_element(format_element(x)) == x for every element.
inline std::string format_element(const RingElement& x) {
  const FiniteRing& R = *x.ring;
  if (x.is_zero()) return "0";
  std::string out;
  for (std::size_t i = 0; i < R.rank(); ++i) {
    if (x.c[i] == 0) continue;
    if (!out.empty()) out += " + ";
    if (x.c[i] != 1) out += std::to_string(x.c[i]) + "*";
    out += R.label(i);
  }
  return out;
}

}  // namespace ringlab
