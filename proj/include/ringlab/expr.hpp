#pragma once

#include <cctype>
#include <cstdint>
#include <fstream>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"
#include "ringlab/catalog.hpp"
#include "ringlab/constructions.hpp"
#include "ringlab/errors.hpp"
#include "ringlab/involution.hpp"

namespace ringlab {

/// A group argument inside a construction expression: either a cyclic group
/// of the given order or a Cayley table loaded from a JSON file.
struct GroupRef {
  bool from_file = false;
  std::uint64_t order = 0;   // cyclic case
  std::string path;          // file case

  std::string canonical() const {
    return from_file ? "@" + path : "C" + std::to_string(order);
  }
  bool operator==(const GroupRef& o) const {
    return from_file == o.from_file && order == o.order && path == o.path;
  }
};

struct ConstructionExpr;
using ExprPtr = std::shared_ptr<const ConstructionExpr>;

/// Abstract syntax of the ring-construction language:
///   A(p) B(p) C(p) D(p) Z(n)          catalog rings
///   GR(expr, group)                   group ring
///   XGR(expr, group)                  group ring over the unitization, with
///                                     the plain group ring embedded in it
///   U(expr)                           unitization
///   T(expr, n)                        upper triangular n x n matrices
///   CT(expr, n)                       constant-diagonal upper triangular
///   PQ(expr, n)                       polynomials modulo x^n
/// where group is C<order> or @file (JSON Cayley table).
struct ConstructionExpr {
  enum class Op { Catalog, GroupRing, Extension, Unitize, Triangular,
                  ConstDiag, PolyQuot };

  Op op = Op::Catalog;
  std::string catalog_name;          // Catalog
  std::uint64_t param = 0;           // Catalog
  ExprPtr child;                     // all constructors
  std::optional<GroupRef> group;     // GroupRing / Extension
  std::size_t n = 0;                 // Triangular / ConstDiag / PolyQuot
};

inline bool expr_equal(const ExprPtr& a, const ExprPtr& b) {
  if (!a || !b) return a == b;
  if (a->op != b->op) return false;
  switch (a->op) {
    case ConstructionExpr::Op::Catalog:
      return a->catalog_name == b->catalog_name && a->param == b->param;
    case ConstructionExpr::Op::GroupRing:
    case ConstructionExpr::Op::Extension:
      return *a->group == *b->group && expr_equal(a->child, b->child);
    case ConstructionExpr::Op::Unitize:
      return expr_equal(a->child, b->child);
    case ConstructionExpr::Op::Triangular:
    case ConstructionExpr::Op::ConstDiag:
    case ConstructionExpr::Op::PolyQuot:
      return a->n == b->n && expr_equal(a->child, b->child);
  }
  return false;
}

inline std::string to_string(const ExprPtr& e) {
  switch (e->op) {
    case ConstructionExpr::Op::Catalog:
      return e->catalog_name + "(" + std::to_string(e->param) + ")";
    case ConstructionExpr::Op::GroupRing:
      return "GR(" + to_string(e->child) + "," + e->group->canonical() + ")";
    case ConstructionExpr::Op::Extension:
      return "XGR(" + to_string(e->child) + "," + e->group->canonical() + ")";
    case ConstructionExpr::Op::Unitize:
      return "U(" + to_string(e->child) + ")";
    case ConstructionExpr::Op::Triangular:
      return "T(" + to_string(e->child) + "," + std::to_string(e->n) + ")";
    case ConstructionExpr::Op::ConstDiag:
      return "CT(" + to_string(e->child) + "," + std::to_string(e->n) + ")";
    case ConstructionExpr::Op::PolyQuot:
      return "PQ(" + to_string(e->child) + "," + std::to_string(e->n) + ")";
  }
  throw RingError("unreachable construction op");
}

namespace detail {

struct ExprParser {
  const std::string& s;
  std::size_t pos = 0;

  void skip_ws() {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos])))
      ++pos;
  }
  [[noreturn]] void fail(std::size_t at, const std::string& msg) const {
    throw ExprParseError(at, msg);
  }
  void expect(char c) {
    skip_ws();
    if (pos >= s.size() || s[pos] != c)
      fail(pos, std::string("expected '") + c + "'");
    ++pos;
  }
  std::string ident() {
    skip_ws();
    const std::size_t start = pos;
    while (pos < s.size() &&
           (std::isalnum(static_cast<unsigned char>(s[pos])) || s[pos] == '_'))
      ++pos;
    if (pos == start) fail(start, "expected a constructor name");
    return s.substr(start, pos - start);
  }
  std::uint64_t integer() {
    skip_ws();
    const std::size_t start = pos;
    std::uint64_t v = 0;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
      v = v * 10 + static_cast<std::uint64_t>(s[pos] - '0');
      if (v > (std::uint64_t{1} << 40)) fail(start, "integer literal too large");
      ++pos;
    }
    if (pos == start) fail(start, "expected an integer");
    return v;
  }
  GroupRef group_ref() {
    skip_ws();
    if (pos < s.size() && s[pos] == '@') {
      ++pos;
      const std::size_t start = pos;
      while (pos < s.size() && s[pos] != ',' && s[pos] != ')' &&
             !std::isspace(static_cast<unsigned char>(s[pos])))
        ++pos;
      if (pos == start) fail(start, "expected a file path after '@'");
      GroupRef g;
      g.from_file = true;
      g.path = s.substr(start, pos - start);
      return g;
    }
    const std::size_t start = pos;
    if (pos >= s.size() || s[pos] != 'C')
      fail(start, "expected a group: C<order> or @file");
    ++pos;
    GroupRef g;
    g.order = integer();
    if (g.order == 0) fail(start, "group order must be positive");
    return g;
  }

  ExprPtr expr() {
    skip_ws();
    const std::size_t start = pos;
    const std::string name = ident();
    auto node = std::make_shared<ConstructionExpr>();
    if (name == "A" || name == "B" || name == "C" || name == "D" ||
        name == "Dalt" || name == "Z") {
      node->op = ConstructionExpr::Op::Catalog;
      node->catalog_name = name;
      expect('(');
      node->param = integer();
      expect(')');
      return node;
    }
    if (name == "GR" || name == "XGR") {
      node->op = (name == "GR") ? ConstructionExpr::Op::GroupRing
                                : ConstructionExpr::Op::Extension;
      expect('(');
      node->child = expr();
      expect(',');
      node->group = group_ref();
      expect(')');
      return node;
    }
    if (name == "U") {
      node->op = ConstructionExpr::Op::Unitize;
      expect('(');
      node->child = expr();
      expect(')');
      return node;
    }
    if (name == "T" || name == "CT" || name == "PQ") {
      node->op = (name == "T")    ? ConstructionExpr::Op::Triangular
                 : (name == "CT") ? ConstructionExpr::Op::ConstDiag
                                  : ConstructionExpr::Op::PolyQuot;
      expect('(');
      node->child = expr();
      expect(',');
      node->n = static_cast<std::size_t>(integer());
      if (node->n == 0) fail(pos, "matrix/truncation degree must be positive");
      expect(')');
      return node;
    }
    fail(start, "unknown constructor '" + name + "'");
  }
};

}  // namespace detail

inline ExprPtr parse_construction(const std::string& text) {
  detail::ExprParser p{text};
  ExprPtr e = p.expr();
  p.skip_ws();
  if (p.pos != text.size())
    throw ExprParseError(p.pos, "trailing input after expression");
  return e;
}

/// Parse a standalone group argument ("C2" or "@file").
inline GroupRef parse_group_ref(const std::string& text) {
  detail::ExprParser p{text};
  GroupRef g = p.group_ref();
  p.skip_ws();
  if (p.pos != text.size())
    throw ExprParseError(p.pos, "trailing input after group");
  return g;
}

/// Load a finite group from a JSON file: either a bare array-of-arrays
/// Cayley table, or {"table": [[...]], "labels": [...]} with labels optional.
inline FiniteGroup group_from_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ExprParseError(0, "cannot open group file '" + path + "'");
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw ExprParseError(
        0, "group file '" + path + "' is not valid JSON: " + e.what());
  }
  nlohmann::json table = j.is_object() ? j.value("table", nlohmann::json()) : j;
  if (!table.is_array())
    throw ExprParseError(0,
                         "group file '" + path + "' lacks a Cayley table array");
  std::vector<std::uint32_t> flat;
  for (const auto& r : table) {
    if (!r.is_array())
      throw ExprParseError(
          0, "group file '" + path + "': table rows must be arrays");
    if (r.size() != table.size())
      throw ExprParseError(
          0, "group file '" + path + "': the Cayley table must be square");
    for (const auto& entry : r) {
      if (!entry.is_number_unsigned())
        throw ExprParseError(0, "group file '" + path +
                                    "': table entries must be indices");
      flat.push_back(entry.get<std::uint32_t>());
    }
  }
  std::vector<std::string> labels;
  if (j.is_object() && j.contains("labels"))
    labels = j["labels"].get<std::vector<std::string>>();
  return group_from_cayley(std::move(flat), std::move(labels), "@" + path);
}

inline FiniteGroup resolve_group(const GroupRef& g) {
  if (g.from_file) return group_from_file(g.path);
  return cyclic_group(g.order);
}

/// The result of evaluating a construction expression. `extension` is set
/// only for XGR nodes, whose embedded plain group ring supports relative
/// annihilator work; `unitized` is set only for U nodes.
struct EvaluatedConstruction {
  RingPtr ring;
  std::optional<ExtensionGroupRing> extension;
  std::optional<Unitization> unitized;
};

inline EvaluatedConstruction evaluate(const ExprPtr& e) {
  EvaluatedConstruction out;
  switch (e->op) {
    case ConstructionExpr::Op::Catalog: {
      if (e->catalog_name == "Z") {
        out.ring = integers_mod(e->param);
      } else {
        out.ring = fine_ring(fine_kind_from_name(e->catalog_name),
                             static_cast<std::uint32_t>(e->param));
      }
      return out;
    }
    case ConstructionExpr::Op::GroupRing: {
      EvaluatedConstruction c = evaluate(e->child);
      out.ring = group_ring(c.ring, resolve_group(*e->group));
      return out;
    }
    case ConstructionExpr::Op::Extension: {
      EvaluatedConstruction c = evaluate(e->child);
      out.extension = extension_group_ring(c.ring, resolve_group(*e->group));
      out.ring = out.extension->extension;
      return out;
    }
    case ConstructionExpr::Op::Unitize: {
      EvaluatedConstruction c = evaluate(e->child);
      out.unitized = unitization(c.ring);
      out.ring = out.unitized->ring;
      return out;
    }
    case ConstructionExpr::Op::Triangular: {
      EvaluatedConstruction c = evaluate(e->child);
      out.ring = triangular_ring(c.ring, e->n);
      return out;
    }
    case ConstructionExpr::Op::ConstDiag: {
      EvaluatedConstruction c = evaluate(e->child);
      out.ring = const_diag_tri(c.ring, e->n);
      return out;
    }
    case ConstructionExpr::Op::PolyQuot: {
      EvaluatedConstruction c = evaluate(e->child);
      out.ring = poly_quotient(c.ring, e->n);
      return out;
    }
  }
  throw RingError("unreachable construction op");
}

/// Build the named involution on an evaluated construction.
///   identity      — works on any commutative ring (rejected otherwise with
///                   a concrete witness pair)
///   star          — for GR/XGR shapes: coefficientwise identity composed
///                   with group inversion
///   antitranspose — for T shapes: reflect along the anti-diagonal and apply
///                   the coefficient involution entrywise
inline Involution resolve_involution(const ExprPtr& e,
                                     const EvaluatedConstruction& ev,
                                     const std::string& name) {
  if (name == "identity") return Involution::identity(ev.ring);
  if (name == "star") {
    if (e->op == ConstructionExpr::Op::GroupRing) {
      EvaluatedConstruction c = evaluate(e->child);
      FiniteGroup G = resolve_group(*e->group);
      return lift_involution_group_ring(Involution::identity(c.ring), G,
                                        ev.ring);
    }
    if (e->op == ConstructionExpr::Op::Extension) {
      EvaluatedConstruction c = evaluate(e->child);
      FiniteGroup G = resolve_group(*e->group);
      RingPtr U =
          ev.extension ? ev.extension->unitized : unitization(c.ring).ring;
      Involution inv_u =
          lift_involution_unitization(Involution::identity(c.ring), U);
      return lift_involution_group_ring(inv_u, G, ev.ring);
    }
    throw UnknownLabelError(
        "involution 'star' requires a group-ring construction (GR or XGR)");
  }
  if (name == "antitranspose") {
    if (e->op != ConstructionExpr::Op::Triangular)
      throw UnknownLabelError(
          "involution 'antitranspose' requires a triangular construction T");
    EvaluatedConstruction c = evaluate(e->child);
    return anti_transpose_involution(Involution::identity(c.ring), e->n,
                                     ev.ring);
  }
  throw UnknownLabelError("unknown involution '" + name +
                          "' (expected identity, star, or antitranspose)");
}

/// Deterministic random expression for parser round-trip property tests.
inline ExprPtr random_expr(SplitMix64& rng, std::size_t max_depth) {
  auto node = std::make_shared<ConstructionExpr>();
  const std::uint64_t pick = (max_depth == 0) ? rng.below(6) : rng.below(12);
  if (pick < 6) {
    static const char* names[] = {"A", "B", "C", "D", "Dalt", "Z"};
    node->op = ConstructionExpr::Op::Catalog;
    node->catalog_name = names[pick];
    if (node->catalog_name == "Z") {
      node->param = 2 + rng.below(8);
    } else {
      static const std::uint32_t primes[] = {3, 5, 7};
      node->param = primes[rng.below(3)];
    }
    return node;
  }
  node->child = random_expr(rng, max_depth - 1);
  switch (pick) {
    case 6:
    case 7: {
      node->op = (pick == 6) ? ConstructionExpr::Op::GroupRing
                             : ConstructionExpr::Op::Extension;
      GroupRef g;
      g.order = 2 + rng.below(3);
      node->group = g;
      return node;
    }
    case 8:
      node->op = ConstructionExpr::Op::Unitize;
      return node;
    default:
      node->op = (pick == 9)    ? ConstructionExpr::Op::Triangular
                 : (pick == 10) ? ConstructionExpr::Op::ConstDiag
                                : ConstructionExpr::Op::PolyQuot;
      node->n = 1 + rng.below(3);
      return node;
  }
}

}  // namespace ringlab
