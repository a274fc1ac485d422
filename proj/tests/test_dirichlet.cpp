#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

#include "doctest.h"
#include "periods/dirichlet.hpp"
#include "periods/errors.hpp"

using namespace periods;

namespace {

// Kronecker symbol from first principles: factor n, Euler's criterion at the
// odd primes, the mod-8 rule at 2, sign rule at -1.
int slow_kronecker(long long a, long long n) {
  if (n == 0) return (a == 1 || a == -1) ? 1 : 0;
  int out = 1;
  if (n < 0) {
    if (a < 0) out = -out;
    n = -n;
  }
  while (n % 2 == 0) {
    if (a % 2 == 0) return 0;
    long long r = a % 8;
    if (r < 0) r += 8;
    if (r == 3 || r == 5) out = -out;
    n /= 2;
  }
  for (long long p = 3; n > 1; p += 2) {
    while (n % p == 0) {
      long long r = a % p;
      if (r < 0) r += p;
      if (r == 0) return 0;
      long long t = 1, base = r, e = (p - 1) / 2;
      while (e > 0) {
        if (e & 1) t = t * base % p;
        base = base * base % p;
        e >>= 1;
      }
      if (t != 1) out = -out;
      n /= p;
    }
  }
  return out;
}

bool is_prime(long long p) {
  if (p < 2) return false;
  for (long long i = 2; i * i <= p; ++i) {
    if (p % i == 0) return false;
  }
  return true;
}

// pi/2 = sum_{k>=0} k! / (2k+1)!!, one halving per term.
BigReal series_pi(int digits) {
  const BigReal target = pow10(-(digits + 5));
  BigReal term(1), sum(1);
  for (long k = 1; ; ++k) {
    term *= BigReal(k) / BigReal(2 * k + 1);
    sum += term;
    if (term < target) break;
  }
  return 2 * sum;
}

// ln 2 = sum_{n>=1} 1 / (n 2^n).
BigReal series_ln2(int digits) {
  const BigReal target = pow10(-(digits + 5));
  BigReal sum(0), pw(1);
  for (long n = 1; ; ++n) {
    pw /= 2;
    const BigReal term = pw / n;
    sum += term;
    if (term < target) break;
  }
  return sum;
}

// The functional equation pins the normalized critical value exactly:
// L(n,chi) sqrt(N) / pi^n = s(n) 2^{n-1} B_{n,chi} / (N^{n-1} n!)
// with s(n) = +1 for n mod 4 in {2,3} and -1 for n mod 4 in {0,1}.
BigRational expected_probe(const QuadChar& chi, int n) {
  const int r = n % 4;
  const int s = (r == 2 || r == 3) ? 1 : -1;
  BigRational fact(1);
  for (int i = 2; i <= n; ++i) fact *= BigRational(BigInt(i));
  return BigRational(BigInt(s)) *
         pow_rational(BigRational(BigInt(2)), n - 1) * gen_bernoulli(n, chi) /
         (pow_rational(BigRational(BigInt(chi.modulus)), n - 1) * fact);
}

bool near(const BigReal& a, const BigReal& b, long decimal_exponent) {
  return abs(a - b) < pow10(decimal_exponent);
}

}  // namespace

TEST_CASE("kronecker symbol matches Euler-criterion evaluation") {
  for (long long a = -40; a <= 40; ++a) {
    for (long long n = -40; n <= 40; ++n) {
      CAPTURE(a);
      CAPTURE(n);
      CHECK(kronecker_symbol(a, n) == slow_kronecker(a, n));
    }
  }
  CHECK(kronecker_symbol(-4, 4) == 0);
}

TEST_CASE("fundamental discriminants") {
  for (long long d : {1LL, -4LL, 5LL, 8LL, -8LL, -3LL, 12LL, 13LL, 17LL,
                      21LL, -20LL, 40LL, 44LL}) {
    CAPTURE(d);
    CHECK(is_fundamental(d));
  }
  // -44 = 4*(-11) fails because -11 = 1 mod 4; 45 = 9*5 is not squarefree.
  for (long long d : {0LL, 9LL, -9LL, 18LL, 25LL, -12LL, 20LL, -44LL, 45LL}) {
    CAPTURE(d);
    CHECK_FALSE(is_fundamental(d));
  }
}

TEST_CASE("character tables") {
  const QuadChar m4 = kronecker_chi(-4);
  CHECK(m4.modulus == 4);
  CHECK(m4.parity == -1);
  CHECK(m4.values == std::vector<int>{0, 1, 0, -1});
  CHECK(m4(-1) == m4.parity);
  CHECK(m4(7) == -1);

  const QuadChar p5 = kronecker_chi(5);
  CHECK(p5.parity == 1);
  CHECK(p5.values == std::vector<int>{0, 1, -1, -1, 1});

  const QuadChar p8 = kronecker_chi(8);
  CHECK(p8.values == std::vector<int>{0, 1, 0, -1, 0, -1, 0, 1});

  // Complete multiplicativity and the support condition.
  for (const QuadChar& chi : {m4, p5, p8, kronecker_chi(-20)}) {
    CHECK(chi(-1) == chi.parity);
    for (long long a = 0; a < chi.modulus; ++a) {
      CHECK((chi(a) == 0) == (std::gcd(a, chi.modulus) > 1));
      for (long long b = 0; b < chi.modulus; ++b) {
        CHECK(chi(a * b) == chi(a) * chi(b));
      }
    }
  }

  CHECK_THROWS_AS(kronecker_chi(9), NotFundamental);
  CHECK_THROWS_AS(kronecker_chi(10004), std::invalid_argument);
}

TEST_CASE("character products") {
  const QuadChar prod = product_char(kronecker_chi(-4), kronecker_chi(5));
  const QuadChar direct = kronecker_chi(-20);
  CHECK(prod.disc == -20);
  CHECK(prod.modulus == 20);
  CHECK(prod.parity == -1);
  CHECK(prod.values == direct.values);

  const QuadChar p40 = product_char(kronecker_chi(8), kronecker_chi(5));
  CHECK(p40.values == kronecker_chi(40).values);

  CHECK_THROWS_AS(product_char(kronecker_chi(-4), kronecker_chi(8)),
                  NotCoprime);
}

TEST_CASE("Bernoulli numbers") {
  CHECK(bernoulli_number(0) == BigRational(1));
  CHECK(bernoulli_number(1) == make_rational(-1, 2));
  CHECK(bernoulli_number(2) == make_rational(1, 6));
  CHECK(bernoulli_number(3) == BigRational(0));
  CHECK(bernoulli_number(4) == make_rational(-1, 30));
  CHECK(bernoulli_number(6) == make_rational(1, 42));
  CHECK(bernoulli_number(12) == make_rational(-691, 2730));
  CHECK_THROWS_AS(bernoulli_number(-1), std::invalid_argument);

  // von Staudt-Clausen: B_2n + sum over primes with (p-1) | 2n of 1/p is an
  // integer. Independent of the recurrence used to build the numbers.
  for (int n = 1; n <= 20; ++n) {
    BigRational x = bernoulli_number(2 * n);
    for (long long p = 2; p <= 2 * n + 1; ++p) {
      if (is_prime(p) && (2 * n) % (p - 1) == 0) x += make_rational(1, p);
    }
    CAPTURE(n);
    CHECK(denominator(x) == 1);
  }
}

TEST_CASE("Bernoulli polynomials") {
  const BigRational x = make_rational(3, 7);
  for (int n = 1; n <= 8; ++n) {
    CAPTURE(n);
    // difference equation
    CHECK(bernoulli_poly(n, x + 1) - bernoulli_poly(n, x) ==
          BigRational(BigInt(n)) * pow_rational(x, n - 1));
    // reflection
    CHECK(bernoulli_poly(n, BigRational(1) - x) ==
          (n % 2 == 0 ? bernoulli_poly(n, x) : -bernoulli_poly(n, x)));
    // halving
    CHECK(bernoulli_poly(n, make_rational(1, 2)) ==
          (pow_rational(BigRational(2), 1 - n) - 1) * bernoulli_number(n));
  }
  CHECK(bernoulli_poly(0, x) == BigRational(1));
}

TEST_CASE("generalized Bernoulli numbers and exact L-values") {
  const QuadChar m4 = kronecker_chi(-4);
  const QuadChar p5 = kronecker_chi(5);
  const QuadChar triv = kronecker_chi(1);

  CHECK(gen_bernoulli(1, m4) == make_rational(-1, 2));
  CHECK(gen_bernoulli(2, m4) == BigRational(0));  // parity mismatch vanishes
  CHECK(gen_bernoulli(3, m4) == make_rational(3, 2));
  CHECK(gen_bernoulli(1, p5) == BigRational(0));
  CHECK(gen_bernoulli(2, p5) == make_rational(4, 5));

  CHECK(l_negative(1, m4) == make_rational(1, 2));    // L(0)
  CHECK(l_negative(3, m4) == make_rational(-1, 2));   // L(-2)
  CHECK(l_negative(2, p5) == make_rational(-2, 5));   // L(-1)
  CHECK(l_negative(1, triv) == make_rational(-1, 2)); // zeta(0)
  CHECK(l_negative(2, triv) == make_rational(-1, 12)); // zeta(-1)

  CHECK_THROWS_AS(gen_bernoulli(0, m4), std::invalid_argument);
  CHECK_THROWS_AS(gen_bernoulli(65, m4), std::invalid_argument);
}

TEST_CASE("reference series agree with the library constants") {
  PrecisionGuard guard(80);
  CHECK(near(series_pi(70), 4 * atan(BigReal(1)), -68));
  CHECK(near(series_ln2(70), log(BigReal(2)), -68));
}

TEST_CASE("Hurwitz zeta: pins and the multiplication theorem") {
  PrecisionGuard guard(80);
  const BigReal pi = series_pi(70);

  CHECK(near(hurwitz_zeta(2, BigRational(1), 50), pi * pi / 6, -48));
  CHECK(near(hurwitz_zeta(2, make_rational(1, 2), 50), pi * pi / 2, -48));

  // sum_{k=1..m} zeta(s, k/m) = m^s zeta(s) at m = 3, s = 4.
  const BigReal lhs = hurwitz_zeta(4, make_rational(1, 3), 50) +
                      hurwitz_zeta(4, make_rational(2, 3), 50) +
                      hurwitz_zeta(4, BigRational(1), 50);
  const BigReal zeta4 = pi * pi * pi * pi / 90;
  CHECK(near(lhs, 81 * zeta4, -46));

  CHECK_THROWS_AS(hurwitz_zeta(1, BigRational(1), 30), std::invalid_argument);
  CHECK_THROWS_AS(hurwitz_zeta(2, make_rational(3, 2), 30),
                  std::invalid_argument);
  CHECK_THROWS_AS(hurwitz_zeta(2, BigRational(0), 30), std::invalid_argument);
}

TEST_CASE("digamma: reflection and duplication") {
  PrecisionGuard guard(80);
  const BigReal pi = series_pi(70);
  const BigReal ln2 = series_ln2(70);

  CHECK(near(digamma_frac(make_rational(3, 4), 50) -
                 digamma_frac(make_rational(1, 4), 50),
             pi, -48));
  CHECK(near(digamma_frac(BigRational(1), 50) -
                 digamma_frac(make_rational(1, 2), 50),
             2 * ln2, -48));

  CHECK_THROWS_AS(digamma_frac(BigRational(0), 30), std::invalid_argument);
  CHECK_THROWS_AS(digamma_frac(BigRational(2), 30), std::invalid_argument);
}

TEST_CASE("numeric L-values against closed forms") {
  PrecisionGuard guard(80);
  const BigReal pi = series_pi(70);
  const QuadChar m4 = kronecker_chi(-4);
  const QuadChar p5 = kronecker_chi(5);
  const QuadChar triv = kronecker_chi(1);

  CHECK(near(l_numeric(1, m4, 50), pi / 4, -48));
  CHECK(near(l_numeric(3, m4, 50), pi * pi * pi / 32, -48));
  CHECK(near(l_numeric(2, triv, 50), pi * pi / 6, -48));

  // L(1, chi_5) = 2 log((1+sqrt 5)/2) / sqrt 5: digamma path vs mpfr log.
  const BigReal root5 = sqrt(BigReal(5));
  CHECK(near(l_numeric(1, p5, 50), 2 * log((1 + root5) / 2) / root5, -48));

  // Euler: zeta(2n) = |B_2n| (2 pi)^{2n} / (2 (2n)!).
  for (int n = 1; n <= 5; ++n) {
    BigRational fact(1);
    for (int i = 2; i <= 2 * n; ++i) fact *= BigRational(BigInt(i));
    const BigRational b = bernoulli_number(2 * n);
    BigReal rhs = to_bigreal((b < 0 ? -b : b) / (2 * fact));
    for (int i = 0; i < 2 * n; ++i) rhs *= 2 * pi;
    CAPTURE(n);
    CHECK(near(l_numeric(2 * n, triv, 50), rhs, -44));
  }

  CHECK_THROWS_AS(l_numeric(1, triv, 30), std::invalid_argument);  // pole
  CHECK_THROWS_AS(l_numeric(0, m4, 30), std::invalid_argument);
  CHECK_THROWS_AS(l_numeric(2, m4, 0), std::invalid_argument);
  CHECK_THROWS_AS(l_numeric(2, m4, 201), std::invalid_argument);
}

TEST_CASE("gauss sums square to chi(-1) N") {
  PrecisionGuard guard(80);
  const auto [re4, im4] = gauss_sum(kronecker_chi(-4), 50);
  CHECK(near(re4, BigReal(0), -45));
  CHECK(near(im4, BigReal(2), -45));

  const auto [re5, im5] = gauss_sum(kronecker_chi(5), 50);
  CHECK(near(re5, sqrt(BigReal(5)), -45));
  CHECK(near(im5, BigReal(0), -45));

  for (long long d = -40; d <= 40; ++d) {
    if (!is_fundamental(d)) continue;
    const QuadChar chi = kronecker_chi(d);
    const auto [re, im] = gauss_sum(chi, 50);
    CAPTURE(d);
    CHECK(near(re * re - im * im, BigReal(chi.parity) * chi.modulus, -45));
    CHECK(near(2 * re * im, BigReal(0), -45));
  }
}

TEST_CASE("continued-fraction reconstruction") {
  PrecisionGuard guard(80);
  CHECK(rational_reconstruct(BigReal(22) / 7, BigInt(100), pow10(-40)) ==
        make_rational(22, 7));
  CHECK(rational_reconstruct(BigReal(3) / 8, BigInt(10), pow10(-50)) ==
        make_rational(3, 8));
  CHECK(rational_reconstruct(BigReal(-22) / 7, BigInt(100), pow10(-40)) ==
        make_rational(-22, 7));

  // pi admits no denominator <= 10^12 that close.
  CHECK_FALSE(rational_reconstruct(series_pi(70), BigInt(1000000000000LL),
                                   pow10(-40))
                  .has_value());

  const BigReal perturbed = to_bigreal(make_rational(1, 3)) + pow10(-20);
  CHECK(rational_reconstruct(perturbed, BigInt(1000000), pow10(-10)) ==
        make_rational(1, 3));
  CHECK_FALSE(rational_reconstruct(perturbed, BigInt(1000000), pow10(-30))
                  .has_value());
}

TEST_CASE("algebraicity probes match the functional equation exactly") {
  const QuadChar m4 = kronecker_chi(-4);

  const ProbeResult one = probe_algebraicity_full(m4, 1, 50);
  CHECK(one.pass);
  CHECK(one.rational == make_rational(1, 2));
  CHECK(one.normalized_value.substr(0, 6) == "0.5000");

  CHECK(probe_algebraicity(m4, 3, 50) == make_rational(1, 16));

  const std::vector<std::pair<long long, std::vector<int>>> plan = {
      {-4, {1, 3, 5}}, {5, {2, 4}}, {8, {2, 4}}, {1, {2, 4, 6}}};
  for (const auto& [d, ns] : plan) {
    const QuadChar chi = kronecker_chi(d);
    for (int n : ns) {
      CAPTURE(d);
      CAPTURE(n);
      const ProbeResult res = probe_algebraicity_full(chi, n, 50);
      CHECK(res.pass);
      CHECK(res.rational == expected_probe(chi, n));
    }
  }

  CHECK_THROWS_AS(probe_algebraicity_full(m4, 2, 30), NotCriticalPoint);
  CHECK_THROWS_AS(probe_algebraicity_full(kronecker_chi(5), 1, 30),
                  NotCriticalPoint);
  CHECK_THROWS_AS(probe_algebraicity_full(m4, 0, 30), NotCriticalPoint);
}

TEST_CASE("rank-one tensor probe walks the critical strip of the product") {
  const std::vector<ProbeResult> rows =
      rank1_tensor_probe(kronecker_chi(-4), kronecker_chi(5), 9, 50);
  REQUIRE(rows.size() == 5);
  const QuadChar prod = kronecker_chi(-20);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    CHECK(rows[i].m == static_cast<int>(2 * i + 1));
    CHECK(rows[i].pass);
    CHECK(rows[i].rational == expected_probe(prod, rows[i].m));
  }
  CHECK(rows[0].rational == BigRational(2));
  CHECK(rows[1].rational == make_rational(3, 20));
  CHECK(rows[2].rational == make_rational(587, 40000));

  CHECK_THROWS_AS(
      rank1_tensor_probe(kronecker_chi(-4), kronecker_chi(8), 5, 30),
      NotCoprime);
}
