#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "periods/hodge.hpp"
#include "periods/polynomial.hpp"

namespace periods {

// Label {(a_1..a_m), (k+, k-)} of a polynomial equivariant under the
// block-lower-parabolic left action (partition s_mu) and the block-diagonal
// GL(d+) x GL(d-) right action.
struct AdmissibilityType {
  std::vector<long> partition;  // s_1, ..., s_m
  std::vector<long> a;          // a_1, ..., a_m
  long k_plus = 0;
  long k_minus = 0;

  bool operator==(const AdmissibilityType&) const = default;
  std::string to_string() const;
};

AdmissibilityType type_product(const AdmissibilityType& t1,
                               const AdmissibilityType& t2);

// Type of the leading d^{sign} x d^{sign} minor: ones in blocks 1..frak_p,
// determinant weights (1,0) for sign +1 and (0,1) for sign -1.
AdmissibilityType f_pm_type(const FiltrationProfile& profile, int frak_p,
                            int sign);

AdmissibilityType zero_type(const FiltrationProfile& profile);
AdmissibilityType det_type(const FiltrationProfile& profile);

// a^{sign}_mu = #{de Rham rows l of b, with multiplicity :
//                 p_mu + level(l) <= k_{q^{sign}}}, one entry per block of a.
std::vector<long> compute_a(const PureHodgeData& a_motive,
                            const PureHodgeData& b_motive, int sign);

// Dual data: the same count with the roles of the two motives exchanged
// (indexed by the second motive's blocks).
std::vector<long> compute_dual_a(const PureHodgeData& a_motive,
                                 const PureHodgeData& b_motive, int sign);

struct RelationCase {
  enum class Tag { EvenOdd_i, EvenOdd_ii, BothEven, BothOdd, Variation, DirectSum };
  Tag tag = Tag::BothEven;
  int eps_m = 0;   // middle sign of the first motive (BothOdd)
  int eps_mp = 0;  // middle sign of the second motive (EvenOdd/BothOdd/Variation)
  int k = 0;       // middle dimension (Variation)
  // Predicted exponent of c+/c- per motive, in input order.
  std::vector<std::pair<std::string, long>> exponents;
  std::optional<std::pair<int, int>> localization;  // (r0, s0) for BothOdd

  std::string tag_string() const;
};

// Decides which ratio theorem governs the pair and predicts its shape.
RelationCase predict_case(const PureHodgeData& m, const PureHodgeData& mp);

// The d x d grid of symbolic entries a tested polynomial is written in,
// with its row partition and column eigenspace split.
struct MatrixFrame {
  std::vector<std::vector<std::string>> var_names;  // d x d
  std::vector<long> partition;                      // row block sizes
  long d_plus = 0;                                  // leading + columns
  long d_minus = 0;

  long side() const { return static_cast<long>(var_names.size()); }
};

using Evaluator =
    std::function<BigRational(const std::map<std::string, BigRational>&)>;

// Samples `trials` random block-lower-triangular p and block-diagonal
// invertible gamma with entries in [-9,9] and checks
//   f(p x gamma) = prod_mu det(p_mumu)^{a_mu} * f(x) * det(g+)^{k+} det(g-)^{k-}
// exactly at a random integer x per trial.
bool check_equivariance(const Evaluator& f, const MatrixFrame& frame,
                        const AdmissibilityType& claimed, int trials,
                        std::uint64_t seed);

bool check_equivariance(const SparsePolynomial& poly, const MatrixFrame& frame,
                        const AdmissibilityType& claimed, int trials,
                        std::uint64_t seed);

}  // namespace periods
