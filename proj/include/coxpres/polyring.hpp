#pragma once

// Multivariate polynomials over Q with named variables, monomial orders,
// multigradings and substitution homomorphisms.

#include "coxpres/exact.hpp"

#include <cstdint>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace coxpres {

class VariableTable {
public:
  VariableTable() = default;
  explicit VariableTable(std::vector<std::string> names);

  std::size_t size() const { return names_.size(); }
  const std::string& name(std::size_t i) const { return names_[i]; }
  const std::vector<std::string>& names() const { return names_; }
  std::optional<std::size_t> index_of(std::string_view name) const;

  friend bool operator==(const VariableTable&, const VariableTable&) = default;

private:
  std::vector<std::string> names_;
};

using Exponent = std::uint32_t;

/// Exponent vector; length always equals the ambient variable count.
class Monomial {
public:
  Monomial() = default;
  explicit Monomial(std::size_t nvars) : exps_(nvars, 0) {}
  explicit Monomial(std::vector<Exponent> exps);

  static Monomial variable(std::size_t nvars, std::size_t index,
                           Exponent power = 1);

  std::size_t size() const { return exps_.size(); }
  Exponent operator[](std::size_t i) const { return exps_[i]; }
  const std::vector<Exponent>& exponents() const { return exps_; }
  std::uint64_t degree() const { return degree_; }
  bool is_one() const { return degree_ == 0; }

  bool divides(const Monomial& other) const;
  bool coprime(const Monomial& other) const;

  friend Monomial operator*(const Monomial& a, const Monomial& b);
  /// Exact quotient; requires b | a.
  friend Monomial operator/(const Monomial& a, const Monomial& b);
  friend Monomial lcm(const Monomial& a, const Monomial& b);
  friend bool operator==(const Monomial& a, const Monomial& b) {
    return a.exps_ == b.exps_;
  }

private:
  std::vector<Exponent> exps_;
  std::uint64_t degree_ = 0;
};

enum class OrderKind { grevlex, lex, elimination };

/// Variables with a larger table index rank higher. The elimination kind
/// compares the first `block` variables (by grevlex) before the rest, so any
/// monomial involving them dominates every monomial free of them.
struct MonomialOrder {
  OrderKind kind = OrderKind::grevlex;
  std::size_t block = 0;

  static MonomialOrder grevlex() { return {OrderKind::grevlex, 0}; }
  static MonomialOrder lex() { return {OrderKind::lex, 0}; }
  static MonomialOrder elimination(std::size_t k) {
    return {OrderKind::elimination, k};
  }

  /// Negative, zero or positive as a <, ==, > b.
  int compare(const Monomial& a, const Monomial& b) const;

  friend bool operator==(const MonomialOrder&, const MonomialOrder&) = default;
};

std::string to_string(const MonomialOrder& order);

struct Ring {
  VariableTable vars;
  MonomialOrder order;

  friend bool operator==(const Ring&, const Ring&) = default;
};

using RingPtr = std::shared_ptr<const Ring>;

RingPtr make_ring(std::vector<std::string> names,
                  MonomialOrder order = MonomialOrder::grevlex());
RingPtr with_order(const RingPtr& ring, MonomialOrder order);

class RingMismatch : public std::invalid_argument {
public:
  RingMismatch() : std::invalid_argument("polynomials live in different rings") {}
};

struct Term {
  Rational coef;
  Monomial mono;

  friend bool operator==(const Term&, const Term&) = default;
};

/// Terms sorted strictly descending in the ring's order, no zero
/// coefficients.
class Polynomial {
public:
  Polynomial() = default;
  explicit Polynomial(RingPtr ring) : ring_(std::move(ring)) {}

  /// Canonicalizes: sorts, merges equal monomials, drops zeros.
  static Polynomial from_terms(RingPtr ring, std::vector<Term> terms);
  static Polynomial constant(RingPtr ring, const Rational& c);
  static Polynomial variable(RingPtr ring, std::size_t index);
  static Polynomial variable(RingPtr ring, std::string_view name);
  static Polynomial monomial(RingPtr ring, const Rational& c, Monomial m);
  /// Requires terms already strictly descending with nonzero coefficients.
  static Polynomial from_sorted_terms(RingPtr ring, std::vector<Term> terms);

  const RingPtr& ring() const { return ring_; }
  const std::vector<Term>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  const Term& leading() const { return terms_.front(); }
  std::uint64_t total_degree() const;

  Polynomial& operator+=(const Polynomial& other);
  Polynomial& operator-=(const Polynomial& other);
  Polynomial& operator*=(const Rational& c);

  friend Polynomial operator+(Polynomial a, const Polynomial& b) {
    return a += b;
  }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) {
    return a -= b;
  }
  friend Polynomial operator-(Polynomial a) { return a *= Rational(-1); }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(Polynomial a, const Rational& c) {
    return a *= c;
  }
  friend bool operator==(const Polynomial& a, const Polynomial& b);

  Polynomial pow(unsigned e) const;
  /// this * c * m
  Polynomial mul_term(const Rational& c, const Monomial& m) const;
  /// this - c * m * g, with g in the same ring
  void sub_mul(const Rational& c, const Monomial& m, const Polynomial& g);
  Term pop_leading();
  /// Divides by the leading coefficient.
  Polynomial monic() const;
  /// Re-sorts the same terms under a ring with identical variables.
  Polynomial in_ring(RingPtr ring) const;
  /// Set of variables that occur.
  std::vector<bool> support() const;
  bool is_binomial_pm1() const;

  Rational evaluate(const std::vector<Rational>& point) const;

private:
  void check_ring(const Polynomial& other) const;
  void add_scaled(const Rational& c, const Monomial& m, const Polynomial& g);

  RingPtr ring_;
  std::vector<Term> terms_;
};

std::string to_string(const Polynomial& f);
std::string to_string(const Monomial& m, const VariableTable& vars);

/// Parses `+ - * ^`, parentheses, integer or p/q coefficients and variable
/// names from the ring's table.
Polynomial parse_polynomial(std::string_view text, const RingPtr& ring);

class ParseError : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// One degree column per variable.
struct Grading {
  IntMatrix degrees;

  std::size_t rank() const { return degrees.rows(); }
  IntVector degree_of(const Monomial& m) const;
};

struct MultiDegree {
  enum class Kind { homogeneous, inhomogeneous, zero };
  Kind kind;
  IntVector degree;  // set only when homogeneous
};

MultiDegree multidegree(const Polynomial& f, const Grading& grading);

/// Substitution homomorphism: source variable i maps to images[i].
class RingMap {
public:
  RingMap(RingPtr source, RingPtr target, std::vector<Polynomial> images);

  const RingPtr& source() const { return source_; }
  const RingPtr& target() const { return target_; }
  const std::vector<Polynomial>& images() const { return images_; }

  Polynomial operator()(const Polynomial& f) const;

  static RingMap identity(const RingPtr& ring);

private:
  RingPtr source_;
  RingPtr target_;
  std::vector<Polynomial> images_;
};

}  // namespace coxpres
