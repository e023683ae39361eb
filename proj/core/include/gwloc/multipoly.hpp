#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "gwloc/rational.hpp"

namespace gwloc {

using Exponents = std::vector<int>;

// Sparse multivariate polynomial over Q in variables u1..ur. Zero
// coefficients are never stored, so structural equality is value equality.
class MultiPoly {
public:
  MultiPoly() : vars_(0) {}
  explicit MultiPoly(int vars) : vars_(vars) {}
  MultiPoly(int vars, const Rational& c);

  static MultiPoly zero(int vars) { return MultiPoly(vars); }
  static MultiPoly constant(int vars, const Rational& c) { return MultiPoly(vars, c); }
  static MultiPoly variable(int vars, int index, const Rational& coeff = Rational(1));
  static MultiPoly monomial(int vars, const Exponents& exps, const Rational& coeff);

  int variableCount() const { return vars_; }
  bool isZero() const { return terms_.empty(); }
  size_t termCount() const { return terms_.size(); }
  const std::map<Exponents, Rational>& terms() const { return terms_; }

  void addTerm(const Exponents& exps, const Rational& coeff);

  MultiPoly operator-() const;
  MultiPoly operator+(const MultiPoly& rhs) const;
  MultiPoly operator-(const MultiPoly& rhs) const;
  MultiPoly operator*(const MultiPoly& rhs) const;
  MultiPoly operator*(const Rational& scalar) const;
  MultiPoly pow(unsigned exp) const;

  bool operator==(const MultiPoly& rhs) const { return vars_ == rhs.vars_ && terms_ == rhs.terms_; }
  bool operator!=(const MultiPoly& rhs) const { return !(*this == rhs); }
  // Arbitrary total order; used for canonical sign normalization and map keys.
  bool operator<(const MultiPoly& rhs) const;

  int totalDegree() const;  // -1 for the zero polynomial
  bool isHomogeneous() const;
  std::optional<Rational> asConstant() const;

  Rational evaluate(const std::vector<Rational>& point) const;

  // u_i -> sum_j matrix[i][j] * t_j; the result lives in newVars variables.
  MultiPoly substituteLinear(int newVars, const std::vector<std::vector<Rational>>& matrix) const;

  // Leading coefficient/term in the canonical term order (graded, then
  // lexicographic on exponents, highest first).
  const Rational& leadingCoefficient() const;

  std::string toString(const std::string& varPrefix = "u") const;
  static MultiPoly parse(const std::string& text, int vars, const std::string& varPrefix = "u");

private:
  int vars_;
  std::map<Exponents, Rational> terms_;

  void checkCompatible(const MultiPoly& rhs) const;
};

inline MultiPoly operator*(const Rational& s, const MultiPoly& p) { return p * s; }

// gcd over Q[u1..ur], unique up to a rational scalar; the result is an
// integer-primitive polynomial with positive leading coefficient.
MultiPoly polyGcd(const MultiPoly& a, const MultiPoly& b);

// Exact division; throws InternalError if b does not divide a.
MultiPoly polyDivExact(const MultiPoly& a, const MultiPoly& b);

// Divides by content and fixes the leading sign: integer-primitive, positive
// leading coefficient. Returns the scalar s with input = s * output.
MultiPoly makePrimitive(const MultiPoly& p, Rational* scalarOut = nullptr);

}  // namespace gwloc
