#pragma once

#include <Eigen/Core>
#include <boost/multiprecision/eigen.hpp>

#include <algorithm>
#include <bit>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "periods/errors.hpp"
#include "periods/polynomial.hpp"
#include "periods/rational.hpp"

namespace Eigen {

// Lets Eigen carry SparsePolynomial entries (storage, sums, products).
template <>
struct NumTraits<periods::SparsePolynomial>
    : GenericNumTraits<periods::SparsePolynomial> {
  typedef periods::SparsePolynomial Real;
  typedef periods::SparsePolynomial NonInteger;
  typedef periods::SparsePolynomial Nested;
  typedef periods::SparsePolynomial Literal;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = HugeCost,
    AddCost = HugeCost,
    MulCost = HugeCost
  };
  static inline Real epsilon() { return Real(); }
  static inline Real dummy_precision() { return Real(); }
  static inline int digits10() { return 0; }
};

}  // namespace Eigen

namespace periods {

template <class Scalar>
using GenericMatrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

inline constexpr int kDeterminantSideGuard = 12;

// Exact determinant by cofactor expansion memoized on column subsets: the
// subproblem for a subset S is the minor of the first |S| rows on columns S.
// Works over any commutative ring scalar (no divisions). det of 0x0 is 1.
template <class Scalar>
Scalar determinant(const GenericMatrix<Scalar>& m) {
  if (m.rows() != m.cols()) {
    throw NotSquare("determinant of a " + std::to_string(m.rows()) + "x" +
                    std::to_string(m.cols()) + " matrix");
  }
  const int n = static_cast<int>(m.rows());
  if (n > kDeterminantSideGuard) {
    throw SizeGuardExceeded("determinant guard: side " + std::to_string(n) +
                            " exceeds " + std::to_string(kDeterminantSideGuard));
  }
  if (n == 0) return Scalar(1);

  std::vector<std::optional<Scalar>> memo(std::uint32_t(1) << n);
  memo[0] = Scalar(1);

  // Subsets in increasing popcount order so dependencies are ready.
  std::vector<std::uint32_t> order;
  order.reserve(memo.size() - 1);
  for (std::uint32_t s = 1; s < memo.size(); ++s) order.push_back(s);
  std::sort(order.begin(), order.end(), [](std::uint32_t a, std::uint32_t b) {
    int pa = std::popcount(a), pb = std::popcount(b);
    return pa != pb ? pa < pb : a < b;
  });

  for (std::uint32_t s : order) {
    const int k = std::popcount(s);  // expand along row k-1
    Scalar acc = Scalar(0);
    int pos = 0;
    bool negative = ((k - 1) % 2) != 0;  // sign of (-1)^(k-1+pos) at pos=0
    for (int col = 0; col < n; ++col) {
      if (!(s & (std::uint32_t(1) << col))) continue;
      const Scalar& sub = *memo[s ^ (std::uint32_t(1) << col)];
      Scalar term = m(k - 1, col) * sub;
      if (negative) {
        acc = acc - term;
      } else {
        acc = acc + term;
      }
      negative = !negative;
      ++pos;
    }
    memo[s] = acc;
  }
  return *memo.back();
}

}  // namespace periods
