#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "wproj/integer.hpp"
#include "wproj/weights.hpp"

namespace wproj {

// Ordered variable names with their weights, e.g. "weights: x=2 y=4 z=6 w=10".
class VariableTable {
 public:
  VariableTable(std::vector<std::string> names, WeightVector weights);
  // Accepts the line with or without the leading "weights:".
  static VariableTable parse(std::string_view header);
  // x0, x1, ... bound to w.
  static VariableTable indexed(const WeightVector& w);

  const std::vector<std::string>& names() const { return names_; }
  const WeightVector& weights() const { return weights_; }
  std::size_t size() const { return names_.size(); }
  // Index of name, or size() if unknown.
  std::size_t find(std::string_view name) const;
  std::string to_string() const;  // "weights: x=2 y=4"

  bool operator==(const VariableTable&) const = default;

 private:
  std::vector<std::string> names_;
  WeightVector weights_;
};

struct Term {
  Integer coeff;
  std::vector<std::uint32_t> exps;
};

// Weighted homogeneous polynomial with integer coefficients, terms kept in
// descending grevlex order with no zero coefficients.
class WPoly {
 public:
  // Combines like terms, sorts, validates homogeneity. ParseError on an
  // inhomogeneous, zero or degree-0 polynomial.
  WPoly(VariableTable vars, std::vector<Term> terms);

  static WPoly parse(std::string_view text, const VariableTable& vars);

  const VariableTable& vars() const { return vars_; }
  const WeightVector& weights() const { return vars_.weights(); }
  const std::vector<Term>& terms() const { return terms_; }
  std::uint64_t degree() const { return degree_; }

  // Exact value at an integer tuple. DomainError on a length mismatch.
  Integer eval(std::span<const Integer> alpha) const;

  std::string to_string() const;

  bool operator==(const WPoly& other) const;

 private:
  VariableTable vars_;
  std::vector<Term> terms_;
  std::uint64_t degree_ = 0;
};

// Descending grevlex comparison: true if a comes strictly before b.
bool grevlex_before(std::span<const std::uint32_t> a, std::span<const std::uint32_t> b);

// A .wpoly file: blank-line separated stanzas, '#' comments, each stanza a
// header line followed by one polynomial (which may span several lines).
std::vector<WPoly> parse_wpoly_file(std::string_view text);
std::vector<WPoly> read_wpoly_file(const std::string& path);

}  // namespace wproj
