#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "ringlab/errors.hpp"

namespace ringlab {

/// Finite group given by a Cayley table of element indices. Validated at
/// construction: associativity on all triples, identity law, inverse law.
struct FiniteGroup {
  std::size_t order = 0;
  std::vector<std::uint32_t> cayley;  // row-major: cayley[a*order + b] = a*b
  std::size_t identity = 0;
  std::vector<std::uint32_t> inverse;
  std::vector<std::string> labels;
  std::string provenance;

  std::uint32_t op(std::size_t a, std::size_t b) const {
    return cayley[a * order + b];
  }
  std::uint32_t inv(std::size_t a) const { return inverse[a]; }
};

inline FiniteGroup group_from_cayley(std::vector<std::uint32_t> table,
                                     std::vector<std::string> labels = {},
                                     std::string provenance = "cayley") {
  FiniteGroup g;
  // Infer order from the square table.
  std::size_t m = 0;
  while (m * m < table.size()) ++m;
  if (m * m != table.size() || m == 0)
    throw NotAGroupError("Cayley table is not a nonempty square");
  g.order = m;
  g.cayley = std::move(table);
  for (std::uint32_t v : g.cayley)
    if (v >= m) throw NotAGroupError("Cayley entry out of range");

  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = 0; b < m; ++b)
      for (std::size_t c = 0; c < m; ++c)
        if (g.op(g.op(a, b), c) != g.op(a, g.op(b, c)))
          throw NotAGroupError("associativity fails at triple (" +
                               std::to_string(a) + ", " + std::to_string(b) +
                               ", " + std::to_string(c) + ")");

  bool found_identity = false;
  for (std::size_t e = 0; e < m && !found_identity; ++e) {
    bool ok = true;
    for (std::size_t a = 0; a < m && ok; ++a)
      ok = g.op(e, a) == a && g.op(a, e) == a;
    if (ok) {
      g.identity = e;
      found_identity = true;
    }
  }
  if (!found_identity) throw NotAGroupError("no two-sided identity element");

  g.inverse.assign(m, 0);
  for (std::size_t a = 0; a < m; ++a) {
    bool found = false;
    for (std::size_t b = 0; b < m && !found; ++b)
      if (g.op(a, b) == g.identity && g.op(b, a) == g.identity) {
        g.inverse[a] = static_cast<std::uint32_t>(b);
        found = true;
      }
    if (!found)
      throw NotAGroupError("element " + std::to_string(a) + " has no inverse");
  }

  if (labels.empty()) {
    for (std::size_t a = 0; a < m; ++a)
      labels.push_back(a == g.identity ? "e" : "h" + std::to_string(a));
  }
  if (labels.size() != m)
    throw NotAGroupError("label count must equal group order");
  g.labels = std::move(labels);
  g.provenance = std::move(provenance);
  return g;
}

/// Cyclic group of order n, written multiplicatively: e, g, g^2, ...
inline FiniteGroup cyclic_group(std::size_t n) {
  if (n < 1) throw NotAGroupError("cyclic group order must be >= 1");
  std::vector<std::uint32_t> table(n * n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      table[a * n + b] = static_cast<std::uint32_t>((a + b) % n);
  std::vector<std::string> labels;
  for (std::size_t a = 0; a < n; ++a) {
    if (a == 0)
      labels.push_back("e");
    else if (a == 1)
      labels.push_back("g");
    else
      labels.push_back("g^" + std::to_string(a));
  }
  return group_from_cayley(std::move(table), std::move(labels),
                           "C" + std::to_string(n));
}

}  // namespace ringlab
