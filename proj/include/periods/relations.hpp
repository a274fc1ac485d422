#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "periods/admissibility.hpp"
#include "periods/hodge.hpp"
#include "periods/polynomial.hpp"
#include "periods/rational.hpp"

namespace periods {

enum class VerifyKind { Exact, Probabilistic };

struct VerifyMode {
  VerifyKind kind = VerifyKind::Exact;
  int trials = 20;        // probabilistic mode only; must be >= 8
  long coeff_bound = 1000;
  std::uint64_t seed = 0;
};

struct RelationReport {
  RelationCase rcase;
  std::string identity_checked;
  bool passed = false;
  std::optional<BigRational> constant;
  std::string mode;  // "exact" or "prob"
  std::string evidence;
  std::optional<std::string> false_pass_bound;  // probabilistic mode
  std::optional<long> aggregate_exponent;       // direct sums
  std::vector<RelationReport> summands;         // direct sums
  std::string note;
};

// Even rank (x) odd rank: det Z+ * f^{-eps'}(X) ~ det Z- * f^{+eps'}(X),
// where eps' is the middle sign of the second motive. check_wrong_case
// swaps the minor pairing (negative control; a pass there is a failure).
RelationReport verify_even_odd(const PureHodgeData& m, const PureHodgeData& mp,
                               const VerifyMode& mode,
                               bool check_wrong_case = false);

// Both ranks even: det Z+ ~ det Z- with no minor factors.
RelationReport verify_both_even(const PureHodgeData& m, const PureHodgeData& mp,
                                const VerifyMode& mode);

// Both ranks odd, both middles scalar: det Z+ * f^{-eps'}(X) * g^{-eps}(Y)
// ~ det Z- * f^{+eps'}(X) * g^{+eps}(Y).
RelationReport verify_both_odd(const PureHodgeData& m, const PureHodgeData& mp,
                               const VerifyMode& mode,
                               bool check_wrong_case = false);

// Fat-middle second factor: the even-odd identity with both minors raised
// to the middle dimension k. k_override replaces the structural exponent
// (negative control k=1).
RelationReport verify_variation(const PureHodgeData& m, const PureHodgeData& mp,
                                const VerifyMode& mode,
                                std::optional<int> k_override = std::nullopt);

// Dispatch on the predicted case.
RelationReport verify_pair(const PureHodgeData& m, const PureHodgeData& mp,
                           const VerifyMode& mode,
                           bool check_wrong_case = false);

// Summand-wise verification plus the aggregate exponent
// e = sum_i (d+(N_i) - d-(N_i)) of the combined ratio identity.
RelationReport verify_direct_sum(const PureHodgeData& m,
                                 const std::vector<PureHodgeData>& summands,
                                 const VerifyMode& mode);

// True iff det Z^{sign}(x,y) factors as phi(x)*psi(y): checks
// h(x,y)*h(x0,y0) = h(x,y0)*h(x0,y) at `trials` anchors (exactly as
// polynomials when the matrix is small enough to expand, by four-point
// sampling otherwise).
bool separability_check(const PureHodgeData& m, const PureHodgeData& mp,
                        int sign, int trials, std::uint64_t seed);

// Same criterion for a hand-built polynomial whose variables are split into
// the two tensor factors; used by synthetic controls.
bool separability_check(const SparsePolynomial& h,
                        const std::vector<std::string>& x_vars,
                        const std::vector<std::string>& y_vars, int trials,
                        std::uint64_t seed);

}  // namespace periods
