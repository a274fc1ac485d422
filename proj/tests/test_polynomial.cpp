#include <algorithm>
#include <map>
#include <numeric>
#include <string>
#include <vector>

#include "doctest.h"
#include "periods/errors.hpp"
#include "periods/matrix.hpp"
#include "periods/polynomial.hpp"
#include "periods/rng.hpp"

using namespace periods;

namespace {

SparsePolynomial var(const std::string& name) {
  return SparsePolynomial::variable(name);
}

SparsePolynomial cnst(long long n) {
  return SparsePolynomial::constant(BigRational(BigInt(n)));
}

SparsePolynomial random_poly(SplitMix64& rng) {
  const std::vector<std::string> names = {"x", "y", "z"};
  SparsePolynomial p;
  const int terms = static_cast<int>(rng.uniform(1, 4));
  for (int t = 0; t < terms; ++t) {
    std::map<std::string, int> exps;
    for (const std::string& n : names) {
      const int e = static_cast<int>(rng.uniform(0, 2));
      if (e > 0) exps[n] = e;
    }
    const long long c = rng.uniform(-5, 5);
    if (c == 0) continue;
    p += SparsePolynomial(Monomial(exps), BigRational(BigInt(c)));
  }
  return p;
}

// Slow reference determinant: signed sum over all permutations.
BigRational leibniz_det(const GenericMatrix<BigRational>& m) {
  const int n = static_cast<int>(m.rows());
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  BigRational acc(0);
  do {
    int inversions = 0;
    for (int i = 0; i < n; ++i) {
      for (int j = i + 1; j < n; ++j) {
        if (perm[i] > perm[j]) ++inversions;
      }
    }
    BigRational term(1);
    for (int i = 0; i < n; ++i) term *= m(i, perm[i]);
    if (inversions % 2 == 0) {
      acc += term;
    } else {
      acc -= term;
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return acc;
}

}  // namespace

TEST_CASE("monomial order and degree") {
  const Monomial x = Monomial::variable("x");
  const Monomial y = Monomial::variable("y");
  CHECK(x < y);
  CHECK((x * y).total_degree() == 2);
  CHECK((x * x).exponents().at("x") == 2);
  CHECK(Monomial().is_constant());
  CHECK(Monomial().total_degree() == 0);
}

TEST_CASE("ring arithmetic keeps a canonical form") {
  const SparsePolynomial x = var("x"), y = var("y");

  CHECK((x + y) * (x - y) == x * x - y * y);

  const SparsePolynomial p = x * y - cnst(3) * y + cnst(7);
  CHECK((p - p).is_zero());
  CHECK((p - p).term_count() == 0);
  CHECK((p - p).degree() == -1);
  CHECK(cnst(5).degree() == 0);
  CHECK(p.scaled(BigRational(0)).is_zero());
  CHECK(p.degree() == 2);

  // Distributivity at random polynomials.
  SplitMix64 rng(11);
  for (int i = 0; i < 20; ++i) {
    const SparsePolynomial a = random_poly(rng);
    const SparsePolynomial b = random_poly(rng);
    const SparsePolynomial c = random_poly(rng);
    CHECK((a + b) * c == a * c + b * c);
  }
}

TEST_CASE("powers") {
  const SparsePolynomial x = var("x");
  const SparsePolynomial cube = (x + cnst(1)).pow(3);
  const SparsePolynomial expanded =
      x * x * x + cnst(3) * x * x + cnst(3) * x + cnst(1);
  CHECK(cube == expanded);
  CHECK((x + cnst(2)).pow(0) == cnst(1));
  CHECK(SparsePolynomial().pow(3).is_zero());
}

TEST_CASE("evaluation, total and partial") {
  const SparsePolynomial p =
      cnst(2) * var("x") * var("y") * var("y") - cnst(3) * var("z") + cnst(7);

  std::map<std::string, BigRational> at = {{"x", BigRational(1)},
                                           {"y", BigRational(-2)},
                                           {"z", BigRational(5)}};
  CHECK(evaluate(p, at) == BigRational(0));

  std::map<std::string, BigRational> missing = {{"x", BigRational(1)},
                                                {"y", BigRational(-2)}};
  CHECK_THROWS_AS(evaluate(p, missing), MissingVariable);

  // Substituting in two stages agrees with substituting at once.
  const SparsePolynomial px = partial_evaluate(p, {{"x", BigRational(2)}});
  CHECK(evaluate(px, {{"y", BigRational(3)}, {"z", BigRational(-1)}}) ==
        evaluate(p, {{"x", BigRational(2)},
                     {"y", BigRational(3)},
                     {"z", BigRational(-1)}}));
  CHECK(partial_evaluate(p, at).term_count() == 0);  // all vars fixed, value 0
}

TEST_CASE("proportionality detection") {
  const SparsePolynomial x = var("x"), y = var("y");

  auto c = proportionality(cnst(2) * (x + y), x + y);
  REQUIRE(c.has_value());
  CHECK(*c == BigRational(2));

  c = proportionality(x + y, cnst(2) * (x + y));
  REQUIRE(c.has_value());
  CHECK(*c == make_rational(1, 2));

  const SparsePolynomial p = x * y - cnst(5) * y;
  c = proportionality(p.scaled(make_rational(-3, 7)), p);
  REQUIRE(c.has_value());
  CHECK(*c == make_rational(-3, 7));

  CHECK_FALSE(proportionality(x, y).has_value());
  CHECK_FALSE(proportionality(x + y, x - y).has_value());
  CHECK_FALSE(proportionality(SparsePolynomial(), x).has_value());
  CHECK_FALSE(proportionality(x, SparsePolynomial()).has_value());
  CHECK_FALSE(
      proportionality(SparsePolynomial(), SparsePolynomial()).has_value());
}

TEST_CASE("determinant agrees with the permutation expansion") {
  SplitMix64 rng(2024);
  for (int n = 1; n <= 5; ++n) {
    for (int rep = 0; rep < 6; ++rep) {
      GenericMatrix<BigRational> m(n, n);
      for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
          m(i, j) = BigRational(BigInt(rng.uniform(-9, 9)));
        }
      }
      CHECK(determinant(m) == leibniz_det(m));
    }
  }
}

TEST_CASE("determinant edge cases and guards") {
  GenericMatrix<BigRational> empty(0, 0);
  CHECK(determinant(empty) == BigRational(1));

  GenericMatrix<SparsePolynomial> sym_empty(0, 0);
  CHECK(determinant(sym_empty) == cnst(1));

  GenericMatrix<BigRational> rect(2, 3);
  rect.setConstant(BigRational(1));
  CHECK_THROWS_AS(determinant(rect), NotSquare);

  GenericMatrix<BigRational> big(13, 13);
  big.setConstant(BigRational(0));
  CHECK_THROWS_AS(determinant(big), SizeGuardExceeded);
}

TEST_CASE("symbolic determinants: Vandermonde and singularity") {
  const int n = 4;
  std::vector<SparsePolynomial> xs;
  for (int i = 0; i < n; ++i) xs.push_back(var("x" + std::to_string(i)));

  GenericMatrix<SparsePolynomial> v(n, n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) v(i, j) = xs[i].pow(j);
  }
  SparsePolynomial expected = cnst(1);
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) expected *= xs[j] - xs[i];
  }
  CHECK(determinant(v) == expected);

  // Repeated row kills the determinant identically.
  GenericMatrix<SparsePolynomial> s(3, 3);
  for (int j = 0; j < 3; ++j) {
    s(0, j) = xs[j];
    s(1, j) = xs[j];
    s(2, j) = xs[j].pow(2);
  }
  CHECK(determinant(s).is_zero());
}
