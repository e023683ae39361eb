#include "gwloc/multipoly.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace gwloc {

Rational parseRational(const std::string& text) {
  if (text.empty()) throw ValidationError("empty rational literal");
  size_t slash = text.find('/');
  try {
    if (slash == std::string::npos) {
      Rational q(text);
      q.canonicalize();
      return q;
    }
    Integer num(text.substr(0, slash));
    Integer den(text.substr(slash + 1));
    if (den == 0) throw ValidationError("rational literal with zero denominator: " + text);
    Rational q(num, den);
    q.canonicalize();
    return q;
  } catch (const std::invalid_argument&) {
    throw ValidationError("malformed rational literal: " + text);
  }
}

std::string rationalToString(const Rational& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

Rational powRational(const Rational& base, long exp) {
  if (exp == 0) return Rational(1);
  if (base == 0 && exp < 0) throw ArithmeticError("0 raised to a negative power");
  Rational b = exp > 0 ? base : Rational(1) / base;
  unsigned long e = static_cast<unsigned long>(exp > 0 ? exp : -exp);
  Rational acc(1);
  while (e) {
    if (e & 1) acc *= b;
    b *= b;
    e >>= 1;
  }
  return acc;
}

Integer factorial(unsigned long n) {
  Integer f;
  mpz_fac_ui(f.get_mpz_t(), n);
  return f;
}

Integer doubleFactorialOdd(long n) {
  if (n <= 0) return 1;
  Integer f(1);
  for (long k = n; k >= 1; k -= 2) f *= k;
  return f;
}

Integer binomial(unsigned long n, unsigned long k) {
  Integer b;
  mpz_bin_uiui(b.get_mpz_t(), n, k);
  return b;
}

MultiPoly::MultiPoly(int vars, const Rational& c) : vars_(vars) {
  if (c != 0) terms_[Exponents(vars, 0)] = c;
}

MultiPoly MultiPoly::variable(int vars, int index, const Rational& coeff) {
  require(index >= 0 && index < vars, "variable index out of range");
  Exponents e(vars, 0);
  e[index] = 1;
  return monomial(vars, e, coeff);
}

MultiPoly MultiPoly::monomial(int vars, const Exponents& exps, const Rational& coeff) {
  require(static_cast<int>(exps.size()) == vars, "exponent vector length mismatch");
  MultiPoly p(vars);
  if (coeff != 0) p.terms_[exps] = coeff;
  return p;
}

void MultiPoly::addTerm(const Exponents& exps, const Rational& coeff) {
  require(static_cast<int>(exps.size()) == vars_, "exponent vector length mismatch");
  if (coeff == 0) return;
  auto it = terms_.find(exps);
  if (it == terms_.end()) {
    terms_.emplace(exps, coeff);
  } else {
    it->second += coeff;
    if (it->second == 0) terms_.erase(it);
  }
}

void MultiPoly::checkCompatible(const MultiPoly& rhs) const {
  if (vars_ != rhs.vars_)
    throw InternalError("polynomial arithmetic on mismatched variable counts");
}

MultiPoly MultiPoly::operator-() const {
  MultiPoly out(vars_);
  for (const auto& [e, c] : terms_) out.terms_[e] = -c;
  return out;
}

MultiPoly MultiPoly::operator+(const MultiPoly& rhs) const {
  checkCompatible(rhs);
  MultiPoly out = *this;
  for (const auto& [e, c] : rhs.terms_) out.addTerm(e, c);
  return out;
}

MultiPoly MultiPoly::operator-(const MultiPoly& rhs) const {
  checkCompatible(rhs);
  MultiPoly out = *this;
  for (const auto& [e, c] : rhs.terms_) out.addTerm(e, -c);
  return out;
}

MultiPoly MultiPoly::operator*(const MultiPoly& rhs) const {
  checkCompatible(rhs);
  MultiPoly out(vars_);
  Exponents e(vars_);
  for (const auto& [ea, ca] : terms_) {
    for (const auto& [eb, cb] : rhs.terms_) {
      for (int i = 0; i < vars_; ++i) e[i] = ea[i] + eb[i];
      out.addTerm(e, ca * cb);
    }
  }
  return out;
}

MultiPoly MultiPoly::operator*(const Rational& scalar) const {
  if (scalar == 0) return MultiPoly(vars_);
  MultiPoly out(vars_);
  for (const auto& [e, c] : terms_) out.terms_[e] = c * scalar;
  return out;
}

MultiPoly MultiPoly::pow(unsigned exp) const {
  MultiPoly acc = MultiPoly::constant(vars_, Rational(1));
  MultiPoly base = *this;
  while (exp) {
    if (exp & 1) acc = acc * base;
    base = base * base;
    exp >>= 1;
  }
  return acc;
}

bool MultiPoly::operator<(const MultiPoly& rhs) const {
  if (vars_ != rhs.vars_) return vars_ < rhs.vars_;
  return std::lexicographical_compare(
      terms_.begin(), terms_.end(), rhs.terms_.begin(), rhs.terms_.end(),
      [](const auto& a, const auto& b) {
        if (a.first != b.first) return a.first < b.first;
        return a.second < b.second;
      });
}

int MultiPoly::totalDegree() const {
  int deg = -1;
  for (const auto& [e, c] : terms_) {
    int d = 0;
    for (int x : e) d += x;
    deg = std::max(deg, d);
  }
  return deg;
}

bool MultiPoly::isHomogeneous() const {
  int deg = -1;
  for (const auto& [e, c] : terms_) {
    int d = 0;
    for (int x : e) d += x;
    if (deg == -1) deg = d;
    if (d != deg) return false;
  }
  return true;
}

std::optional<Rational> MultiPoly::asConstant() const {
  if (terms_.empty()) return Rational(0);
  if (terms_.size() != 1) return std::nullopt;
  const auto& [e, c] = *terms_.begin();
  for (int x : e)
    if (x != 0) return std::nullopt;
  return c;
}

Rational MultiPoly::evaluate(const std::vector<Rational>& point) const {
  require(static_cast<int>(point.size()) == vars_, "evaluation point length mismatch");
  Rational sum(0);
  for (const auto& [e, c] : terms_) {
    Rational term = c;
    for (int i = 0; i < vars_; ++i) {
      if (e[i] != 0) term *= powRational(point[i], e[i]);
    }
    sum += term;
  }
  return sum;
}

MultiPoly MultiPoly::substituteLinear(int newVars,
                                      const std::vector<std::vector<Rational>>& matrix) const {
  require(static_cast<int>(matrix.size()) == vars_, "substitution matrix row count mismatch");
  std::vector<MultiPoly> images;
  images.reserve(vars_);
  for (int i = 0; i < vars_; ++i) {
    require(static_cast<int>(matrix[i].size()) == newVars, "substitution matrix column mismatch");
    MultiPoly img(newVars);
    for (int j = 0; j < newVars; ++j) {
      if (matrix[i][j] != 0) img = img + MultiPoly::variable(newVars, j, matrix[i][j]);
    }
    images.push_back(img);
  }
  MultiPoly out(newVars);
  for (const auto& [e, c] : terms_) {
    MultiPoly term = MultiPoly::constant(newVars, c);
    for (int i = 0; i < vars_; ++i) {
      if (e[i] > 0) term = term * images[i].pow(static_cast<unsigned>(e[i]));
    }
    out = out + term;
  }
  return out;
}

namespace {

// Canonical display order: total degree descending, then exponent vector
// lexicographically descending.
bool displayBefore(const Exponents& a, const Exponents& b) {
  int da = 0, db = 0;
  for (int x : a) da += x;
  for (int x : b) db += x;
  if (da != db) return da > db;
  return a > b;
}

}  // namespace

const Rational& MultiPoly::leadingCoefficient() const {
  require(!terms_.empty(), "leading coefficient of the zero polynomial");
  const std::pair<const Exponents, Rational>* lead = nullptr;
  for (const auto& term : terms_) {
    if (!lead || displayBefore(term.first, lead->first)) lead = &term;
  }
  return lead->second;
}

std::string MultiPoly::toString(const std::string& varPrefix) const {
  if (terms_.empty()) return "0";
  std::vector<const std::pair<const Exponents, Rational>*> sorted;
  sorted.reserve(terms_.size());
  for (const auto& term : terms_) sorted.push_back(&term);
  std::sort(sorted.begin(), sorted.end(),
            [](const auto* a, const auto* b) { return displayBefore(a->first, b->first); });

  std::ostringstream os;
  bool first = true;
  for (const auto* term : sorted) {
    Rational c = term->second;
    bool negative = c < 0;
    if (first) {
      if (negative) os << "-";
      first = false;
    } else {
      os << (negative ? " - " : " + ");
    }
    Rational absC = negative ? Rational(-c) : c;
    std::string monomial;
    for (int i = 0; i < vars_; ++i) {
      int e = term->first[i];
      if (e == 0) continue;
      if (!monomial.empty()) monomial += "*";
      monomial += varPrefix + std::to_string(i + 1);
      if (e > 1) monomial += "^" + std::to_string(e);
    }
    if (monomial.empty()) {
      os << rationalToString(absC);
    } else if (absC == 1) {
      os << monomial;
    } else {
      os << rationalToString(absC) << "*" << monomial;
    }
  }
  return os.str();
}

namespace {

struct Parser {
  const std::string& text;
  size_t pos = 0;
  int vars;
  const std::string& prefix;

  void skipSpace() {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  }

  bool eat(char c) {
    skipSpace();
    if (pos < text.size() && text[pos] == c) {
      ++pos;
      return true;
    }
    return false;
  }

  char peek() {
    skipSpace();
    return pos < text.size() ? text[pos] : '\0';
  }

  [[noreturn]] void fail(const std::string& what) {
    throw ValidationError("parse error at position " + std::to_string(pos) + ": " + what);
  }

  MultiPoly parseExpr() {
    MultiPoly acc = parseTerm();
    while (true) {
      if (eat('+')) {
        acc = acc + parseTerm();
      } else if (eat('-')) {
        acc = acc - parseTerm();
      } else {
        return acc;
      }
    }
  }

  MultiPoly parseTerm() {
    MultiPoly acc = parseFactor();
    while (true) {
      skipSpace();
      if (eat('*')) {
        acc = acc * parseFactor();
      } else {
        char c = peek();
        // Implicit multiplication before a variable or '('.
        if (c == '(' || isPrefixStart()) {
          acc = acc * parseFactor();
        } else {
          return acc;
        }
      }
    }
  }

  bool isPrefixStart() {
    skipSpace();
    return text.compare(pos, prefix.size(), prefix) == 0 && pos + prefix.size() < text.size() &&
           std::isdigit(static_cast<unsigned char>(text[pos + prefix.size()]));
  }

  MultiPoly parseFactor() {
    skipSpace();
    if (eat('-')) return -parseFactor();
    if (eat('+')) return parseFactor();
    MultiPoly base = parseAtom();
    skipSpace();
    if (eat('^')) {
      long e = parseUnsignedInt();
      base = base.pow(static_cast<unsigned>(e));
    }
    return base;
  }

  long parseUnsignedInt() {
    skipSpace();
    size_t start = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    if (start == pos) fail("expected integer");
    return std::stol(text.substr(start, pos - start));
  }

  MultiPoly parseAtom() {
    skipSpace();
    if (eat('(')) {
      MultiPoly inner = parseExpr();
      if (!eat(')')) fail("expected ')'");
      return inner;
    }
    if (isPrefixStart()) {
      pos += prefix.size();
      long idx = parseUnsignedInt();
      if (idx < 1 || idx > vars) fail("variable index out of range");
      return MultiPoly::variable(vars, static_cast<int>(idx - 1));
    }
    // Rational literal p or p/q.
    size_t start = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    if (start == pos) fail("expected number or variable");
    std::string num = text.substr(start, pos - start);
    skipSpace();
    if (pos < text.size() && text[pos] == '/') {
      // Only treat as a fraction when followed by digits (not a variable).
      size_t save = pos;
      ++pos;
      skipSpace();
      size_t dstart = pos;
      while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
      if (dstart != pos) {
        std::string den = text.substr(dstart, pos - dstart);
        return MultiPoly::constant(vars, parseRational(num + "/" + den));
      }
      pos = save;
    }
    return MultiPoly::constant(vars, parseRational(num));
  }
};

}  // namespace

MultiPoly MultiPoly::parse(const std::string& text, int vars, const std::string& varPrefix) {
  Parser p{text, 0, vars, varPrefix};
  MultiPoly result = p.parseExpr();
  p.skipSpace();
  if (p.pos != text.size()) p.fail("trailing characters");
  return result;
}

}  // namespace gwloc
