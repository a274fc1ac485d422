#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "periods/rational.hpp"

namespace periods {

// Quadratic Dirichlet character attached to a fundamental discriminant,
// realized by the Kronecker symbol (D/.), with its full value table.
struct QuadChar {
  long long disc = 1;
  long long modulus = 1;  // |disc|
  std::vector<int> values;  // indexed by residue 0..modulus-1
  int parity = 1;           // chi(-1): +1 iff disc > 0

  int operator()(long long a) const {
    long long r = a % modulus;
    if (r < 0) r += modulus;
    return values[static_cast<std::size_t>(r)];
  }
};

// Kronecker symbol (a/n), fully multiplicative extension of Jacobi.
int kronecker_symbol(long long a, long long n);

// D = 1, or D ≡ 1 mod 4 squarefree, or D = 4m with m ≡ 2,3 mod 4 squarefree.
bool is_fundamental(long long d);

// Builds the character table; |D| <= 10^4.
QuadChar kronecker_chi(long long d);

// Product of coprime-Modulus quadratic characters, again fundamental with
// discriminant D*D'.
QuadChar product_char(const QuadChar& a, const QuadChar& b);

// B_n with the B_1 = -1/2 convention, via the defining recurrence.
BigRational bernoulli_number(int n);

// B_n(x) from the generating function t e^{xt}/(e^t - 1).
BigRational bernoulli_poly(int n, const BigRational& x);

// B_{n,chi} = N^{n-1} sum_{a=1}^{N} chi(a) B_n(a/N); n <= 64.
BigRational gen_bernoulli(int n, const QuadChar& chi);

// L(1-n, chi) = -B_{n,chi}/n, exact.
BigRational l_negative(int n, const QuadChar& chi);

// zeta(s, a) for integer s >= 2 and rational a in (0,1], Euler-Maclaurin,
// absolute error < 10^{-(digits+5)}.
BigReal hurwitz_zeta(int s, const BigRational& a, int digits);

// psi(a) for rational a in (0,1], Euler-Maclaurin with the log expansion.
BigReal digamma_frac(const BigRational& a, int digits);

// L(n, chi) for n >= 1 (n = 1 requires nontrivial chi), error < 10^{-digits},
// digits <= 200.
BigReal l_numeric(int n, const QuadChar& chi, int digits);

// g(chi) = sum_a chi(a) exp(2 pi i a / N) as (re, im).
std::pair<BigReal, BigReal> gauss_sum(const QuadChar& chi, int digits);

// Best continued-fraction convergent p/q with q <= max_den and
// |x - p/q| < tol, if any.
std::optional<BigRational> rational_reconstruct(const BigReal& x,
                                                const BigInt& max_den,
                                                const BigReal& tol);

struct ProbeResult {
  int m = 0;
  std::string normalized_value;  // L(m,chi) * sqrt(N) / pi^m at `digits`
  std::optional<BigRational> rational;
  bool pass = false;
};

// Reconstructs L(n,chi) * sqrt(N) / pi^n as a rational; n must be critical
// for chi (n >= 1 and chi(-1) = (-1)^n).
ProbeResult probe_algebraicity_full(const QuadChar& chi, int n, int digits);
std::optional<BigRational> probe_algebraicity(const QuadChar& chi, int n,
                                              int digits);

// Probes every critical m <= m_max of the product character chi * chi'.
std::vector<ProbeResult> rank1_tensor_probe(const QuadChar& chi,
                                            const QuadChar& chi_prime,
                                            int m_max, int digits);

}  // namespace periods
