#include "periods/polynomial.hpp"

#include <sstream>

#include "periods/errors.hpp"

namespace periods {

Monomial::Monomial(std::map<std::string, int> exps) : exps_(std::move(exps)) {
  for (auto it = exps_.begin(); it != exps_.end();) {
    if (it->second == 0) {
      it = exps_.erase(it);
    } else if (it->second < 0) {
      throw Error("monomial exponents must be positive: " + it->first);
    } else {
      ++it;
    }
  }
}

Monomial Monomial::variable(const std::string& name) {
  Monomial m;
  m.exps_[name] = 1;
  return m;
}

long Monomial::total_degree() const {
  long d = 0;
  for (const auto& [_, e] : exps_) d += e;
  return d;
}

Monomial Monomial::operator*(const Monomial& other) const {
  Monomial out = *this;
  for (const auto& [v, e] : other.exps_) out.exps_[v] += e;
  return out;
}

std::string Monomial::to_string() const {
  if (exps_.empty()) return "1";
  std::ostringstream os;
  bool first = true;
  for (const auto& [v, e] : exps_) {
    if (!first) os << "*";
    first = false;
    os << v;
    if (e != 1) os << "^" << e;
  }
  return os.str();
}

SparsePolynomial::SparsePolynomial(const BigRational& c) {
  if (c != 0) terms_[Monomial()] = c;
}

SparsePolynomial::SparsePolynomial(const Monomial& m, const BigRational& c) {
  if (c != 0) terms_[m] = c;
}

SparsePolynomial SparsePolynomial::variable(const std::string& name) {
  return SparsePolynomial(Monomial::variable(name), BigRational(1));
}

SparsePolynomial SparsePolynomial::constant(const BigRational& c) {
  return SparsePolynomial(c);
}

long SparsePolynomial::degree() const {
  long d = -1;
  for (const auto& [m, _] : terms_) d = std::max(d, m.total_degree());
  return d;
}

const Monomial& SparsePolynomial::leading_monomial() const {
  if (terms_.empty()) throw Error("zero polynomial has no leading term");
  return terms_.rbegin()->first;
}

const BigRational& SparsePolynomial::leading_coefficient() const {
  if (terms_.empty()) throw Error("zero polynomial has no leading term");
  return terms_.rbegin()->second;
}

void SparsePolynomial::add_term(const Monomial& m, const BigRational& c) {
  if (c == 0) return;
  auto it = terms_.find(m);
  if (it == terms_.end()) {
    terms_.emplace(m, c);
    return;
  }
  it->second += c;
  if (it->second == 0) terms_.erase(it);
}

SparsePolynomial& SparsePolynomial::operator+=(const SparsePolynomial& other) {
  for (const auto& [m, c] : other.terms_) add_term(m, c);
  return *this;
}

SparsePolynomial& SparsePolynomial::operator-=(const SparsePolynomial& other) {
  for (const auto& [m, c] : other.terms_) add_term(m, -c);
  return *this;
}

SparsePolynomial SparsePolynomial::operator+(const SparsePolynomial& other) const {
  SparsePolynomial out = *this;
  out += other;
  return out;
}

SparsePolynomial SparsePolynomial::operator-(const SparsePolynomial& other) const {
  SparsePolynomial out = *this;
  out -= other;
  return out;
}

SparsePolynomial SparsePolynomial::operator-() const {
  SparsePolynomial out;
  for (const auto& [m, c] : terms_) out.terms_.emplace(m, -c);
  return out;
}

SparsePolynomial SparsePolynomial::operator*(const SparsePolynomial& other) const {
  SparsePolynomial out;
  for (const auto& [ma, ca] : terms_) {
    for (const auto& [mb, cb] : other.terms_) {
      out.add_term(ma * mb, ca * cb);
    }
  }
  return out;
}

SparsePolynomial& SparsePolynomial::operator*=(const SparsePolynomial& other) {
  *this = *this * other;
  return *this;
}

SparsePolynomial SparsePolynomial::scaled(const BigRational& c) const {
  SparsePolynomial out;
  if (c == 0) return out;
  for (const auto& [m, coeff] : terms_) out.terms_.emplace(m, coeff * c);
  return out;
}

SparsePolynomial SparsePolynomial::pow(int e) const {
  if (e < 0) throw Error("negative polynomial power");
  SparsePolynomial acc = constant(BigRational(1));
  for (int i = 0; i < e; ++i) acc = acc * *this;
  return acc;
}

std::string SparsePolynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  // Render from the leading term down.
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    BigRational c = it->second;
    if (first) {
      if (c < 0) {
        os << "-";
        c = -c;
      }
    } else {
      os << (c < 0 ? " - " : " + ");
      if (c < 0) c = -c;
    }
    first = false;
    if (it->first.is_constant()) {
      os << c.str();
    } else if (c == 1) {
      os << it->first.to_string();
    } else {
      os << c.str() << "*" << it->first.to_string();
    }
  }
  return os.str();
}

BigRational evaluate(const SparsePolynomial& p,
                     const std::map<std::string, BigRational>& assignment) {
  BigRational total(0);
  for (const auto& [m, c] : p.terms()) {
    BigRational term = c;
    for (const auto& [v, e] : m.exponents()) {
      auto it = assignment.find(v);
      if (it == assignment.end()) {
        throw MissingVariable("no value assigned to variable " + v);
      }
      term *= pow_rational(it->second, e);
    }
    total += term;
  }
  return total;
}

SparsePolynomial partial_evaluate(
    const SparsePolynomial& p,
    const std::map<std::string, BigRational>& assignment) {
  SparsePolynomial out;
  for (const auto& [m, c] : p.terms()) {
    BigRational coeff = c;
    std::map<std::string, int> kept;
    for (const auto& [v, e] : m.exponents()) {
      auto it = assignment.find(v);
      if (it == assignment.end()) {
        kept[v] = e;
      } else {
        coeff *= pow_rational(it->second, e);
      }
    }
    out += SparsePolynomial(Monomial(std::move(kept)), coeff);
  }
  return out;
}

std::optional<BigRational> proportionality(const SparsePolynomial& a,
                                           const SparsePolynomial& b) {
  if (a.is_zero() || b.is_zero()) return std::nullopt;
  // a = c*b  iff  a*lc(b) == b*lc(a), with c = lc(a)/lc(b).
  if (a.scaled(b.leading_coefficient()) != b.scaled(a.leading_coefficient())) {
    return std::nullopt;
  }
  return a.leading_coefficient() / b.leading_coefficient();
}

}  // namespace periods
