#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace periods {

struct HodgeType {
  int p = 0;
  int q = 0;
  long h = 0;  // multiplicity, positive

  bool operator==(const HodgeType&) const = default;
};

// A pure weight-w Hodge structure with a real-Frobenius signature on the
// middle type; the whole combinatorial shadow of a motive used here.
struct PureHodgeData {
  std::string label;
  int weight = 0;
  std::vector<HodgeType> types;  // sorted by p ascending, purity p+q=weight
  // Present iff weight is even and h^{w/2,w/2} > 0: eigenspace split (k+,k-).
  std::optional<std::pair<long, long>> middle_split;

  long rank() const {
    long d = 0;
    for (const auto& t : types) d += t.h;
    return d;
  }
};

struct FiltrationProfile {
  std::vector<int> jumps;  // p_1 < ... < p_m
  std::vector<long> mults;  // s_1, ..., s_m, positive

  int block_count() const { return static_cast<int>(jumps.size()); }
};

struct CriticalityReport {
  bool critical = false;
  std::optional<int> frak_p_plus;   // 1-based block index
  std::optional<int> frak_p_minus;  // 1-based block index
  std::optional<int> epsilon;       // scalar of conjugation on the middle type
};

struct TensorData {
  PureHodgeData product_hodge;
  FiltrationProfile profile;  // jumps k_t, mults u_t
  long d_plus = 0;
  long d_minus = 0;
  // 1-based prefix lengths with u_1+...+u_q = d^{+/-}; 0 when d^{+/-} = 0;
  // absent exactly when the tensor is not critical on that side.
  std::optional<int> q_plus;
  std::optional<int> q_minus;

  bool critical() const { return q_plus.has_value() && q_minus.has_value(); }
};

// Checks all structural invariants and returns the normalized data.
PureHodgeData validate(const std::string& label, int weight,
                       std::vector<HodgeType> types,
                       std::optional<std::pair<long, long>> middle_split);

// Dimensions (d+, d-) of the +/-1 eigenspaces of complex conjugation.
std::pair<long, long> betti_signature(const PureHodgeData& h);

FiltrationProfile filtration_profile(const PureHodgeData& h);

CriticalityReport criticality(const PureHodgeData& h);

// Full tensor-product Hodge data, including the product profile (k_t, u_t),
// the eigenspace dimensions, and the prefix indices q^{+/-} when they exist.
TensorData tensor_hodge(const PureHodgeData& a, const PureHodgeData& b);

// Helpers shared by the hypothesis checks of the relation layer.
bool all_h_le_one(const PureHodgeData& h);
long middle_dimension(const PureHodgeData& h);  // h^{w/2,w/2}, 0 if none

// Copy of h with the middle eigenspace split forced to sign (+1: (k,0)).
PureHodgeData with_middle_sign(const PureHodgeData& h, int sign);

// Copy of h under a fresh label (fresh symbolic variables downstream).
PureHodgeData relabeled(const PureHodgeData& h, const std::string& label);

}  // namespace periods
