#pragma once

#include "geoinv/invariants.hpp"
#include "geoinv/moments.hpp"

#include <map>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>

namespace geoinv {

class ParseError : public std::runtime_error {
 public:
  ParseError(int line, const std::string& what)
      : std::runtime_error("malformed-file: line " + std::to_string(line) + ": " + what), line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

class UnsupportedVersionError : public std::runtime_error {
 public:
  explicit UnsupportedVersionError(const std::string& what)
      : std::runtime_error("version-unsupported: " + what) {}
};

double evaluate_monomial(const MonomialEntry& entry, const MomentTable& table);

/// sum_terms coef * prod mu^power, divided by mu_0^denominator_power. Terms
/// are accumulated in descending magnitude order with compensation.
double evaluate(const InvariantPolynomial& inv, const MomentTable& table);

/// Exact-rational moment assignment for oracle tests.
struct RationalMomentTable {
  int dim = 0;
  std::map<std::vector<int>, Rat> values;

  Rat at(const MultiIndex& idx) const;
  Rat mu0() const;
};
Rat evaluate_exact(const InvariantPolynomial& inv, const RationalMomentTable& table);

/// Invariant interchange format, line oriented and exact:
///   geoinv v1 dim=<n>
///   <blank>
///   class=<scale|rotation|affine> d=<int> desc=<(p,k)list>
///   term <num>/<den> <idx>^<pow> [<idx>^<pow> ...]
/// with records separated by blank lines. serialize(parse(s)) is
/// byte-identical and coefficients survive round trips exactly.
std::string serialize(std::span<const InvariantPolynomial> invs, int dim);
std::vector<InvariantPolynomial> parse_invariants(std::string_view text);

std::vector<InvariantPolynomial> load_invariants_file(const std::string& path);
void save_invariants_file(const std::string& path, std::span<const InvariantPolynomial> invs, int dim);

}  // namespace geoinv
