#pragma once

#include <optional>
#include <string>
#include <vector>

#include "orbitkit/algebra.hpp"
#include "orbitkit/functional.hpp"

namespace orbitkit {

struct ParseError : std::runtime_error {
  ParseError(int line, int column, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ", column " + std::to_string(column) +
                           ": " + what),
        line(line),
        column(column) {}
  int line;
  int column;
};

enum class LambdaKind { None, Generic, Rational, QStructured };

/// Parsed input file: basis, bracket table, dilation eigenvalues, and an
/// optional functional declaration.
struct SpecDocument {
  int n = 0;
  std::vector<std::string> basis;
  // (i, j, terms) with 1-based indices, i < j
  std::vector<std::tuple<int, int, std::vector<std::pair<int, Rational>>>> brackets;
  VectorQ dilation;
  LambdaKind lambda_kind = LambdaKind::None;
  VectorQ lambda_values;                    // rational mode
  std::vector<std::string> lambda_symbols;  // qstruct mode
  std::vector<VectorQ> lambda_rows;         // qstruct mode, n rows of 1+r entries

  StructureConstants to_constants() const;
  /// The declared functional; generic when no lambda line was given.
  Functional to_functional() const;
};

SpecDocument parse_spec(const std::string& text);

/// Canonical round-trippable rendering (stable key order, exact rationals).
std::string canonical_spec(const SpecDocument& doc);

}  // namespace orbitkit
