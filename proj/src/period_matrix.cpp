#include "periods/period_matrix.hpp"

#include <algorithm>

namespace periods {

std::string period_var_name(const std::string& label, long i, long j) {
  return label + ":" + std::to_string(i) + "," + std::to_string(j);
}

PeriodMatrix symbolic_period_matrix(const PureHodgeData& h) {
  if (!criticality(h).critical) {
    throw NotCritical(h.label + ": adapted bases need a critical motive");
  }
  const auto [dp, dm] = betti_signature(h);
  const long n = dp + dm;

  PeriodMatrix x;
  x.label = h.label;
  x.col_split = {dp, dm};
  x.entries = GenericMatrix<SparsePolynomial>(n, n);
  for (long i = 0; i < n; ++i) {
    for (long j = 0; j < n; ++j) {
      x.entries(i, j) =
          SparsePolynomial::variable(period_var_name(h.label, i + 1, j + 1));
    }
  }
  // Each type (p,q,h) contributes h rows at filtration level p; sorting
  // ascending groups the rows into the filtration blocks.
  x.row_levels.reserve(n);
  for (const HodgeType& t : h.types) {
    for (long c = 0; c < t.h; ++c) x.row_levels.push_back(t.p);
  }
  std::sort(x.row_levels.begin(), x.row_levels.end());
  if (static_cast<long>(x.row_levels.size()) != n) {
    throw InternalSizeMismatch(h.label + ": rank " + std::to_string(n) +
                               " but " + std::to_string(x.row_levels.size()) +
                               " filtration rows");
  }
  return x;
}

std::vector<std::string> period_variables(const PeriodMatrix& x) {
  std::vector<std::string> names;
  const long n = x.side();
  names.reserve(static_cast<std::size_t>(n) * n);
  for (long i = 1; i <= n; ++i) {
    for (long j = 1; j <= n; ++j) names.push_back(period_var_name(x.label, i, j));
  }
  return names;
}

MatrixFrame frame_of(const PeriodMatrix& x) {
  MatrixFrame frame;
  const long n = x.side();
  frame.var_names.assign(n, std::vector<std::string>(n));
  for (long i = 0; i < n; ++i) {
    for (long j = 0; j < n; ++j) {
      frame.var_names[i][j] = period_var_name(x.label, i + 1, j + 1);
    }
  }
  frame.d_plus = x.col_split.first;
  frame.d_minus = x.col_split.second;
  // Partition of the rows by filtration level, top block first in the sense
  // of the flag stabilized by lower-triangular substitutions.
  frame.partition.clear();
  long run = 0;
  for (std::size_t i = 0; i < x.row_levels.size(); ++i) {
    ++run;
    if (i + 1 == x.row_levels.size() || x.row_levels[i + 1] != x.row_levels[i]) {
      frame.partition.push_back(run);
      run = 0;
    }
  }
  return frame;
}

NumericPeriodMatrix instantiate(
    const PeriodMatrix& x, const std::map<std::string, BigRational>& assignment) {
  NumericPeriodMatrix out;
  out.label = x.label;
  out.row_levels = x.row_levels;
  out.col_split = x.col_split;
  const long n = x.side();
  out.entries = GenericMatrix<BigRational>(n, n);
  for (long i = 0; i < n; ++i) {
    for (long j = 0; j < n; ++j) {
      out.entries(i, j) = evaluate(x.entries(i, j), assignment);
    }
  }
  return out;
}

}  // namespace periods
