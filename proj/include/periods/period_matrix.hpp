#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "periods/admissibility.hpp"
#include "periods/errors.hpp"
#include "periods/hodge.hpp"
#include "periods/matrix.hpp"

namespace periods {

// Coordinate matrix of the Betti-to-de-Rham comparison in adapted bases:
// entry (i,j) is the i-th de Rham coordinate of the j-th Betti basis vector.
// Rows are grouped by nondecreasing Hodge level; the first d+ columns span
// the +1 eigenspace of conjugation.
template <class Scalar>
struct PeriodMatrixT {
  std::string label;
  GenericMatrix<Scalar> entries;
  std::vector<int> row_levels;
  std::pair<long, long> col_split;

  long side() const { return static_cast<long>(entries.rows()); }
};

using PeriodMatrix = PeriodMatrixT<SparsePolynomial>;
using NumericPeriodMatrix = PeriodMatrixT<BigRational>;

// "label:i,j" with 1-based indices.
std::string period_var_name(const std::string& label, long i, long j);

// Fresh independent indeterminates for a generic comparison isomorphism.
PeriodMatrix symbolic_period_matrix(const PureHodgeData& h);

std::vector<std::string> period_variables(const PeriodMatrix& x);

MatrixFrame frame_of(const PeriodMatrix& x);

// Numeric copy with every variable replaced by its assigned value.
NumericPeriodMatrix instantiate(
    const PeriodMatrix& x, const std::map<std::string, BigRational>& assignment);

template <class Scalar>
Scalar f_plus(const PeriodMatrixT<Scalar>& x) {
  const long d = x.col_split.first;
  GenericMatrix<Scalar> minor(d, d);
  for (long i = 0; i < d; ++i) {
    for (long j = 0; j < d; ++j) minor(i, j) = x.entries(i, j);
  }
  return determinant(minor);
}

template <class Scalar>
Scalar f_minus(const PeriodMatrixT<Scalar>& x) {
  const long d = x.col_split.second;
  const long col0 = x.col_split.first;
  GenericMatrix<Scalar> minor(d, d);
  for (long i = 0; i < d; ++i) {
    for (long j = 0; j < d; ++j) minor(i, j) = x.entries(i, col0 + j);
  }
  return determinant(minor);
}

template <class Scalar>
Scalar f_signed(const PeriodMatrixT<Scalar>& x, int sign) {
  return sign > 0 ? f_plus(x) : f_minus(x);
}

template <class Scalar>
Scalar delta(const PeriodMatrixT<Scalar>& x) {
  return determinant(x.entries);
}

// The square tensor minor whose determinant is c^{sign}(M (x) M'): rows are
// the pairs (i,l) with level(i)+level(l) <= k_{q^{sign}} in lexicographic
// order; columns pair the eigenspace blocks ((+,+) then (-,-) for sign +1,
// (+,-) then (-,+) for sign -1), each block lexicographic; the entry at
// ((i,l),(j,j')) is X_{i,j} * Y_{l,j'}.
template <class Scalar>
GenericMatrix<Scalar> build_Z(const PeriodMatrixT<Scalar>& x,
                              const PeriodMatrixT<Scalar>& y, int sign,
                              const TensorData& td) {
  const std::optional<int>& q = sign > 0 ? td.q_plus : td.q_minus;
  if (!q) {
    throw NotCritical(td.product_hodge.label + ": no prefix realizes d" +
                      (sign > 0 ? "+" : "-"));
  }
  std::vector<std::pair<long, long>> rows;
  if (*q > 0) {
    const int threshold = td.profile.jumps[*q - 1];
    for (long i = 0; i < x.side(); ++i) {
      for (long l = 0; l < y.side(); ++l) {
        if (x.row_levels[i] + y.row_levels[l] <= threshold) {
          rows.emplace_back(i, l);
        }
      }
    }
  }

  std::vector<std::pair<long, long>> cols;
  const auto [xp, xm] = x.col_split;
  const auto [yp, ym] = y.col_split;
  auto push_block = [&cols](long j0, long j1, long jp0, long jp1) {
    for (long j = j0; j < j1; ++j) {
      for (long jp = jp0; jp < jp1; ++jp) cols.emplace_back(j, jp);
    }
  };
  if (sign > 0) {
    push_block(0, xp, 0, yp);                          // (+,+)
    push_block(xp, xp + xm, yp, yp + ym);              // (-,-)
  } else {
    push_block(0, xp, yp, yp + ym);                    // (+,-)
    push_block(xp, xp + xm, 0, yp);                    // (-,+)
  }

  const long expected = sign > 0 ? td.d_plus : td.d_minus;
  if (static_cast<long>(rows.size()) != expected ||
      static_cast<long>(cols.size()) != expected) {
    throw InternalSizeMismatch(td.product_hodge.label + ": Z" +
                               (sign > 0 ? "+" : "-") + " is " +
                               std::to_string(rows.size()) + "x" +
                               std::to_string(cols.size()) + ", expected side " +
                               std::to_string(expected));
  }

  GenericMatrix<Scalar> z(rows.size(), cols.size());
  for (std::size_t r = 0; r < rows.size(); ++r) {
    for (std::size_t c = 0; c < cols.size(); ++c) {
      z(r, c) = x.entries(rows[r].first, cols[c].first) *
                y.entries(rows[r].second, cols[c].second);
    }
  }
  return z;
}

template <class Scalar>
Scalar c_pm_tensor(const PeriodMatrixT<Scalar>& x, const PeriodMatrixT<Scalar>& y,
                   int sign, const TensorData& td) {
  return determinant(build_Z(x, y, sign, td));
}

}  // namespace periods
