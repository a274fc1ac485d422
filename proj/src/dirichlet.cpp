#include "periods/dirichlet.hpp"

#include <cmath>
#include <cstdlib>
#include <numeric>
#include <stdexcept>
#include <utility>

#include "periods/errors.hpp"

namespace periods {

int kronecker_symbol(long long a, long long n) {
  if (n == 0) return (a == 1 || a == -1) ? 1 : 0;
  int res = 1;
  if (n < 0) {
    if (a < 0) res = -res;
    n = -n;
  }
  int twos = 0;
  while (n % 2 == 0) {
    n /= 2;
    ++twos;
  }
  if (twos > 0) {
    if (a % 2 == 0) return 0;
    long long am8 = a % 8;
    if (am8 < 0) am8 += 8;
    if (twos % 2 == 1 && (am8 == 3 || am8 == 5)) res = -res;
  }
  a %= n;
  if (a < 0) a += n;
  // Jacobi core by reciprocity; a and n stay nonnegative, n odd.
  while (a != 0) {
    while (a % 2 == 0) {
      a /= 2;
      const long long nm8 = n % 8;
      if (nm8 == 3 || nm8 == 5) res = -res;
    }
    std::swap(a, n);
    if (a % 4 == 3 && n % 4 == 3) res = -res;
    a %= n;
  }
  return n == 1 ? res : 0;
}

namespace {

bool squarefree(long long n) {
  n = std::llabs(n);
  for (long long i = 2; i * i <= n; ++i) {
    if (n % (i * i) == 0) return false;
  }
  return true;
}

long long nonneg_mod(long long a, long long n) {
  long long r = a % n;
  if (r < 0) r += n;
  return r;
}

}  // namespace

bool is_fundamental(long long d) {
  if (d == 0) return false;
  if (nonneg_mod(d, 4) == 1) return squarefree(d);
  if (nonneg_mod(d, 4) == 0) {
    const long long m = d / 4;
    const long long m4 = nonneg_mod(m, 4);
    return (m4 == 2 || m4 == 3) && squarefree(m);
  }
  return false;
}

QuadChar kronecker_chi(long long d) {
  if (std::llabs(d) > 10000) {
    throw std::invalid_argument("discriminant magnitude limited to 10^4");
  }
  if (!is_fundamental(d)) {
    throw NotFundamental(std::to_string(d) + " is not a fundamental "
                         "discriminant");
  }
  QuadChar chi;
  chi.disc = d;
  chi.modulus = std::llabs(d);
  chi.parity = d > 0 ? 1 : -1;
  chi.values.resize(static_cast<std::size_t>(chi.modulus));
  for (long long a = 0; a < chi.modulus; ++a) {
    chi.values[static_cast<std::size_t>(a)] =
        kronecker_symbol(d, a);
  }
  return chi;
}

QuadChar product_char(const QuadChar& a, const QuadChar& b) {
  if (std::gcd(a.modulus, b.modulus) != 1) {
    throw NotCoprime("moduli " + std::to_string(a.modulus) + " and " +
                     std::to_string(b.modulus) + " share a factor");
  }
  QuadChar out;
  out.disc = a.disc * b.disc;
  out.modulus = a.modulus * b.modulus;
  if (out.modulus > 10000) {
    throw std::invalid_argument("product modulus limited to 10^4");
  }
  if (!is_fundamental(out.disc)) {
    throw NotFundamental("product discriminant " + std::to_string(out.disc) +
                         " is not fundamental");
  }
  out.parity = a.parity * b.parity;
  out.values.resize(static_cast<std::size_t>(out.modulus));
  for (long long r = 0; r < out.modulus; ++r) {
    out.values[static_cast<std::size_t>(r)] = a(r) * b(r);
  }
  return out;
}

namespace {

// Bernoulli cache grown on demand; B[n] = -sum_{j<n} C(n+1,j) B_j / (n+1).
std::vector<BigRational>& bernoulli_cache() {
  static std::vector<BigRational> cache{BigRational(1)};
  return cache;
}

BigInt binomial(int n, int k) {
  if (k < 0 || k > n) return BigInt(0);
  if (k > n - k) k = n - k;
  BigInt out(1);
  for (int i = 0; i < k; ++i) {
    out *= BigInt(n - i);
    out /= BigInt(i + 1);  // exact at each step
  }
  return out;
}

}  // namespace

BigRational bernoulli_number(int n) {
  if (n < 0) throw std::invalid_argument("negative Bernoulli index");
  std::vector<BigRational>& cache = bernoulli_cache();
  while (static_cast<int>(cache.size()) <= n) {
    const int m = static_cast<int>(cache.size());
    BigRational sum(0);
    for (int j = 0; j < m; ++j) {
      sum += BigRational(binomial(m + 1, j)) * cache[static_cast<std::size_t>(j)];
    }
    cache.push_back(-sum / BigRational(BigInt(m + 1)));
  }
  return cache[static_cast<std::size_t>(n)];
}

BigRational bernoulli_poly(int n, const BigRational& x) {
  BigRational out(0);
  for (int k = 0; k <= n; ++k) {
    out += BigRational(binomial(n, k)) * bernoulli_number(k) *
           pow_rational(x, n - k);
  }
  return out;
}

BigRational gen_bernoulli(int n, const QuadChar& chi) {
  if (n < 1 || n > 64) {
    throw std::invalid_argument("generalized Bernoulli index limited to 1..64");
  }
  const long long m = chi.modulus;
  BigRational sum(0);
  for (long long a = 1; a <= m; ++a) {
    const int v = chi(a);
    if (v == 0) continue;
    const BigRational poly =
        bernoulli_poly(n, BigRational(BigInt(a)) / BigRational(BigInt(m)));
    sum += v > 0 ? poly : -poly;
  }
  return pow_rational(BigRational(BigInt(m)), n - 1) * sum;
}

BigRational l_negative(int n, const QuadChar& chi) {
  return -gen_bernoulli(n, chi) / BigRational(BigInt(n));
}

namespace {

BigReal int_pow(const BigReal& base, long e) {
  BigReal acc(1);
  BigReal b = base;
  long n = e < 0 ? -e : e;
  while (n > 0) {
    if (n & 1) acc *= b;
    b *= b;
    n >>= 1;
  }
  if (e < 0) return BigReal(1) / acc;
  return acc;
}

}  // namespace

BigReal hurwitz_zeta(int s, const BigRational& a, int digits) {
  if (s < 2) throw std::invalid_argument("hurwitz_zeta needs s >= 2");
  if (a <= 0 || a > 1) {
    throw std::invalid_argument("hurwitz_zeta argument must be in (0,1]");
  }
  PrecisionGuard guard(static_cast<unsigned>(digits + 30));
  const BigReal target = pow10(-(digits + 5)) / 2;
  const BigReal a_real = to_bigreal(a);

  for (long cutoff = std::max(16, digits); cutoff <= 16L * 4096L; cutoff *= 2) {
    BigReal sum(0);
    for (long k = 0; k < cutoff; ++k) {
      sum += int_pow(a_real + k, -s);
    }
    const BigReal x = a_real + cutoff;
    sum += int_pow(x, 1 - s) / (s - 1);
    sum += int_pow(x, -s) / 2;

    // Correction terms B_{2j}/(2j)! * s(s+1)...(s+2j-2) * x^{-(s+2j-1)};
    // the remainder is of the order of the first omitted term.
    bool converged = false;
    BigReal prev_abs;
    bool have_prev = false;
    BigRational coeff(1);       // rising factorial (s)(s+1)...(s+2j-2)
    BigRational factorial(1);   // (2j)!
    for (int j = 1; j <= 80; ++j) {
      for (int i = 2 * j - 3; i <= 2 * j - 2; ++i) {
        if (i >= 0) coeff *= BigRational(BigInt(s + i));
      }
      factorial *= BigRational(BigInt(2 * j - 1)) * BigRational(BigInt(2 * j));
      const BigRational rational_part =
          bernoulli_number(2 * j) / factorial * coeff;
      const BigReal term = to_bigreal(rational_part) * int_pow(x, -(s + 2 * j - 1));
      const BigReal term_abs = abs(term);
      if (have_prev && term_abs > prev_abs) break;  // asymptotic divergence
      sum += term;
      if (term_abs < target) {
        converged = true;
        break;
      }
      prev_abs = term_abs;
      have_prev = true;
    }
    if (converged) return sum;
  }
  throw PrecisionUnreachable("Euler-Maclaurin tail would not converge to 10^-" +
                             std::to_string(digits + 5));
}

BigReal digamma_frac(const BigRational& a, int digits) {
  if (a <= 0 || a > 1) {
    throw std::invalid_argument("digamma_frac argument must be in (0,1]");
  }
  PrecisionGuard guard(static_cast<unsigned>(digits + 30));
  const BigReal target = pow10(-(digits + 5)) / 2;
  const BigReal a_real = to_bigreal(a);

  for (long cutoff = std::max(16, digits); cutoff <= 16L * 4096L; cutoff *= 2) {
    BigReal sum(0);
    for (long k = 0; k < cutoff; ++k) {
      sum -= BigReal(1) / (a_real + k);
    }
    const BigReal x = a_real + cutoff;
    sum += log(x);
    sum -= BigReal(1) / (2 * x);

    bool converged = false;
    BigReal prev_abs;
    bool have_prev = false;
    for (int j = 1; j <= 80; ++j) {
      const BigRational rational_part =
          bernoulli_number(2 * j) / BigRational(BigInt(2 * j));
      const BigReal term = -to_bigreal(rational_part) * int_pow(x, -2 * j);
      const BigReal term_abs = abs(term);
      if (have_prev && term_abs > prev_abs) break;
      sum += term;
      if (term_abs < target) {
        converged = true;
        break;
      }
      prev_abs = term_abs;
      have_prev = true;
    }
    if (converged) return sum;
  }
  throw PrecisionUnreachable("Euler-Maclaurin tail would not converge to 10^-" +
                             std::to_string(digits + 5));
}

BigReal l_numeric(int n, const QuadChar& chi, int digits) {
  if (n < 1) throw std::invalid_argument("l_numeric needs n >= 1");
  if (digits < 1 || digits > 200) {
    throw std::invalid_argument("digits limited to 1..200");
  }
  const long long m = chi.modulus;
  if (n == 1 && m == 1) {
    throw std::invalid_argument("L(1) of the trivial character is a pole");
  }
  PrecisionGuard guard(static_cast<unsigned>(digits + 30));
  if (m == 1) return hurwitz_zeta(n, BigRational(1), digits);
  if (n == 1) {
    BigReal sum(0);
    for (long long a = 1; a < m; ++a) {
      const int v = chi(a);
      if (v == 0) continue;
      const BigReal psi = digamma_frac(
          BigRational(BigInt(a)) / BigRational(BigInt(m)), digits);
      sum += v > 0 ? psi : -psi;
    }
    return -sum / BigReal(m);
  }
  BigReal sum(0);
  for (long long a = 1; a <= m; ++a) {
    const int v = chi(a);
    if (v == 0) continue;
    const BigReal z = hurwitz_zeta(
        n, BigRational(BigInt(a)) / BigRational(BigInt(m)), digits);
    sum += v > 0 ? z : -z;
  }
  return sum / int_pow(BigReal(m), n);
}

std::pair<BigReal, BigReal> gauss_sum(const QuadChar& chi, int digits) {
  PrecisionGuard guard(static_cast<unsigned>(digits + 20));
  const BigReal pi = 4 * atan(BigReal(1));
  BigReal re(0), im(0);
  for (long long a = 0; a < chi.modulus; ++a) {
    const int v = chi(a);
    if (v == 0) continue;
    const BigReal theta = 2 * pi * BigReal(a) / BigReal(chi.modulus);
    if (v > 0) {
      re += cos(theta);
      im += sin(theta);
    } else {
      re -= cos(theta);
      im -= sin(theta);
    }
  }
  return {re, im};
}

std::optional<BigRational> rational_reconstruct(const BigReal& x,
                                                const BigInt& max_den,
                                                const BigReal& tol) {
  BigInt p0(0), q0(1), p1(1), q1(0);
  BigReal rest = x;
  for (int iter = 0; iter < 200; ++iter) {
    const BigReal fl = floor(rest);
    const BigInt a = fl.convert_to<BigInt>();
    const BigInt p2 = a * p1 + p0;
    const BigInt q2 = a * q1 + q0;
    p0 = p1;
    q0 = q1;
    p1 = p2;
    q1 = q2;
    if (q1 > max_den) return std::nullopt;
    if (q1 != 0) {
      // Verify by re-evaluation at working precision.
      const BigReal approx = BigReal(p1) / BigReal(q1);
      if (abs(x - approx) < tol) {
        return BigRational(p1) / BigRational(q1);
      }
    }
    const BigReal frac = rest - fl;
    if (frac == 0) return std::nullopt;
    rest = BigReal(1) / frac;
  }
  return std::nullopt;
}

ProbeResult probe_algebraicity_full(const QuadChar& chi, int n, int digits) {
  if (n < 1 || chi.parity != (n % 2 == 0 ? 1 : -1)) {
    throw NotCriticalPoint("m=" + std::to_string(n) +
                           " is not critical for discriminant " +
                           std::to_string(chi.disc));
  }
  PrecisionGuard guard(static_cast<unsigned>(digits + 30));
  const BigReal value = l_numeric(n, chi, digits);
  const BigReal pi = 4 * atan(BigReal(1));
  const BigReal normalized =
      value * sqrt(BigReal(chi.modulus)) / int_pow(pi, n);

  ProbeResult out;
  out.m = n;
  out.normalized_value = normalized.str(digits, std::ios_base::fixed);
  out.rational = rational_reconstruct(normalized, BigInt(1000000000000LL),
                                      pow10(-(digits - 10)));
  out.pass = out.rational.has_value();
  return out;
}

std::optional<BigRational> probe_algebraicity(const QuadChar& chi, int n,
                                              int digits) {
  return probe_algebraicity_full(chi, n, digits).rational;
}

std::vector<ProbeResult> rank1_tensor_probe(const QuadChar& chi,
                                            const QuadChar& chi_prime,
                                            int m_max, int digits) {
  const QuadChar product = product_char(chi, chi_prime);
  std::vector<ProbeResult> rows;
  for (int m = 1; m <= m_max; ++m) {
    if (product.parity != (m % 2 == 0 ? 1 : -1)) continue;
    rows.push_back(probe_algebraicity_full(product, m, digits));
  }
  return rows;
}

}  // namespace periods
