#pragma once

#include <map>
#include <optional>
#include <string>

#include "periods/rational.hpp"

namespace periods {

// Exponent map; the map's own ordering (variable name, then exponent) is the
// one global monomial order used for canonical leading terms.
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::map<std::string, int> exps);

  static Monomial variable(const std::string& name);

  const std::map<std::string, int>& exponents() const { return exps_; }
  bool is_constant() const { return exps_.empty(); }
  long total_degree() const;

  Monomial operator*(const Monomial& other) const;
  bool operator==(const Monomial& other) const { return exps_ == other.exps_; }
  bool operator<(const Monomial& other) const { return exps_ < other.exps_; }

  std::string to_string() const;

 private:
  std::map<std::string, int> exps_;  // no zero exponents stored
};

// Canonical sparse multivariate polynomial over BigRational.
class SparsePolynomial {
 public:
  SparsePolynomial() = default;
  explicit SparsePolynomial(const BigRational& c);
  SparsePolynomial(const Monomial& m, const BigRational& c);

  static SparsePolynomial variable(const std::string& name);
  static SparsePolynomial constant(const BigRational& c);

  const std::map<Monomial, BigRational>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  // Degree of the zero polynomial is -1 by convention.
  long degree() const;
  std::size_t term_count() const { return terms_.size(); }

  // Leading term under the global monomial order.
  const Monomial& leading_monomial() const;
  const BigRational& leading_coefficient() const;

  SparsePolynomial operator+(const SparsePolynomial& other) const;
  SparsePolynomial operator-(const SparsePolynomial& other) const;
  SparsePolynomial operator*(const SparsePolynomial& other) const;
  SparsePolynomial operator-() const;
  SparsePolynomial& operator+=(const SparsePolynomial& other);
  SparsePolynomial& operator-=(const SparsePolynomial& other);
  SparsePolynomial& operator*=(const SparsePolynomial& other);
  bool operator==(const SparsePolynomial& other) const {
    return terms_ == other.terms_;
  }
  bool operator!=(const SparsePolynomial& other) const {
    return !(*this == other);
  }

  SparsePolynomial scaled(const BigRational& c) const;
  SparsePolynomial pow(int e) const;  // e >= 0

  std::string to_string() const;

 private:
  void add_term(const Monomial& m, const BigRational& c);

  std::map<Monomial, BigRational> terms_;  // no zero coefficients stored
};

// Exact evaluation; throws MissingVariable if the assignment misses one.
BigRational evaluate(const SparsePolynomial& p,
                     const std::map<std::string, BigRational>& assignment);

// Substitutes the given variables by constants and leaves the rest symbolic.
SparsePolynomial partial_evaluate(
    const SparsePolynomial& p,
    const std::map<std::string, BigRational>& assignment);

// Returns c with a = c*b when both are nonzero and proportional; nothing
// otherwise. The constant lives in Q^x, so (0,0) also returns nothing.
std::optional<BigRational> proportionality(const SparsePolynomial& a,
                                           const SparsePolynomial& b);

}  // namespace periods
