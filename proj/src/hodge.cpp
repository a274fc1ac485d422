#include "periods/hodge.hpp"

#include <algorithm>
#include <map>

#include "periods/errors.hpp"

namespace periods {

PureHodgeData validate(const std::string& label, int weight,
                       std::vector<HodgeType> types,
                       std::optional<std::pair<long, long>> middle_split) {
  if (types.empty()) {
    throw InvalidMotive(label + ": no Hodge types (rank must be >= 1)");
  }
  std::map<std::pair<int, int>, long> mult;
  for (const auto& t : types) {
    if (t.h <= 0) {
      throw InvalidMotive(label + ": nonpositive multiplicity at (" +
                          std::to_string(t.p) + "," + std::to_string(t.q) + ")");
    }
    if (t.p + t.q != weight) {
      throw MixedWeight(label + ": type (" + std::to_string(t.p) + "," +
                        std::to_string(t.q) + ") violates purity at weight " +
                        std::to_string(weight));
    }
    if (mult.count({t.p, t.q})) {
      throw InvalidMotive(label + ": duplicate Hodge type (" +
                          std::to_string(t.p) + "," + std::to_string(t.q) + ")");
    }
    mult[{t.p, t.q}] = t.h;
  }
  for (const auto& [pq, h] : mult) {
    auto it = mult.find({pq.second, pq.first});
    if (it == mult.end() || it->second != h) {
      throw AsymmetricHodgeNumbers(
          label + ": h^{" + std::to_string(pq.first) + "," +
          std::to_string(pq.second) + "} has no matching conjugate");
    }
  }

  long middle = 0;
  if (weight % 2 == 0) {
    auto it = mult.find({weight / 2, weight / 2});
    if (it != mult.end()) middle = it->second;
  }
  if (middle > 0) {
    if (!middle_split) {
      throw MissingMiddleSplit(label + ": middle type h^{" +
                               std::to_string(weight / 2) + "," +
                               std::to_string(weight / 2) +
                               "} present but no eigenspace split given");
    }
    if (middle_split->first < 0 || middle_split->second < 0 ||
        middle_split->first + middle_split->second != middle) {
      throw BadMiddleSplit(label + ": middle split must be two nonnegative " +
                           "integers summing to " + std::to_string(middle));
    }
  } else if (middle_split) {
    throw BadMiddleSplit(label + ": eigenspace split given but no middle type");
  }

  PureHodgeData out;
  out.label = label;
  out.weight = weight;
  for (const auto& [pq, h] : mult) out.types.push_back({pq.first, pq.second, h});
  std::sort(out.types.begin(), out.types.end(),
            [](const HodgeType& a, const HodgeType& b) { return a.p < b.p; });
  out.middle_split = middle_split;
  return out;
}

std::pair<long, long> betti_signature(const PureHodgeData& h) {
  long above = 0;  // conjugation pairs H^{p,q} <-> H^{q,p}, p != q
  for (const auto& t : h.types) {
    if (t.p > t.q) above += t.h;
  }
  long kp = h.middle_split ? h.middle_split->first : 0;
  long km = h.middle_split ? h.middle_split->second : 0;
  return {above + kp, above + km};
}

FiltrationProfile filtration_profile(const PureHodgeData& h) {
  FiltrationProfile out;
  for (const auto& t : h.types) {  // types are sorted by p
    out.jumps.push_back(t.p);
    out.mults.push_back(t.h);
  }
  return out;
}

CriticalityReport criticality(const PureHodgeData& h) {
  CriticalityReport out;
  const auto [dp, dm] = betti_signature(h);
  const FiltrationProfile prof = filtration_profile(h);
  long prefix = 0;
  if (dp == 0) out.frak_p_plus = 0;  // the empty prefix realizes 0
  if (dm == 0) out.frak_p_minus = 0;
  for (int i = 0; i < prof.block_count(); ++i) {
    prefix += prof.mults[i];
    if (prefix == dp) out.frak_p_plus = i + 1;
    if (prefix == dm) out.frak_p_minus = i + 1;
  }
  out.critical = out.frak_p_plus.has_value() && out.frak_p_minus.has_value();
  if (h.middle_split) {
    const auto [kp, km] = *h.middle_split;
    if (km == 0) {
      out.epsilon = 1;
    } else if (kp == 0) {
      out.epsilon = -1;
    }
    // Conjugation scalar on the middle type iff critical; both computed
    // independently here, so check the equivalence instead of assuming it.
    if (out.critical != out.epsilon.has_value()) {
      throw InternalSizeMismatch(h.label +
                                 ": criticality/middle-scalar mismatch");
    }
  }
  return out;
}

bool all_h_le_one(const PureHodgeData& h) {
  for (const auto& t : h.types) {
    if (t.h > 1) return false;
  }
  return true;
}

long middle_dimension(const PureHodgeData& h) {
  if (h.weight % 2 != 0) return 0;
  for (const auto& t : h.types) {
    if (t.p == t.q) return t.h;
  }
  return 0;
}

PureHodgeData with_middle_sign(const PureHodgeData& h, int sign) {
  PureHodgeData out = h;
  long mid = middle_dimension(h);
  if (mid == 0) {
    throw InvalidMotive(h.label + ": no middle type to re-sign");
  }
  out.middle_split = sign > 0 ? std::make_pair(mid, 0L) : std::make_pair(0L, mid);
  return out;
}

PureHodgeData relabeled(const PureHodgeData& h, const std::string& label) {
  PureHodgeData out = h;
  out.label = label;
  return out;
}

TensorData tensor_hodge(const PureHodgeData& a, const PureHodgeData& b) {
  const int weight = a.weight + b.weight;

  std::map<std::pair<int, int>, long> mult;
  for (const auto& ta : a.types) {
    for (const auto& tb : b.types) {
      mult[{ta.p + tb.p, ta.q + tb.q}] += ta.h * tb.h;
    }
  }

  // Eigenspace split of the product middle type (P = Q = weight/2):
  //  - a swapped pair (p,q)x(w/2-p, w/2-q), p>q, and its conjugate split
  //    evenly between the eigenspaces;
  //  - middle x middle multiplies the two splits.
  std::optional<std::pair<long, long>> split;
  if (weight % 2 == 0 && mult.count({weight / 2, weight / 2})) {
    long kp = 0, km = 0;
    for (const auto& ta : a.types) {
      if (ta.p <= ta.q) continue;
      const int pb = weight / 2 - ta.p;
      const int qb = weight / 2 - ta.q;
      for (const auto& tb : b.types) {
        if (tb.p == pb && tb.q == qb) {
          kp += ta.h * tb.h;
          km += ta.h * tb.h;
        }
      }
    }
    if (a.middle_split && b.middle_split) {
      const auto [akp, akm] = *a.middle_split;
      const auto [bkp, bkm] = *b.middle_split;
      kp += akp * bkp + akm * bkm;
      km += akp * bkm + akm * bkp;
    }
    if (kp + km != mult[{weight / 2, weight / 2}]) {
      throw InternalSizeMismatch(a.label + "*" + b.label +
                                 ": middle split does not fill the middle type");
    }
    split = std::make_pair(kp, km);
  }

  TensorData out;
  {
    std::vector<HodgeType> types;
    for (const auto& [pq, h] : mult) types.push_back({pq.first, pq.second, h});
    out.product_hodge =
        validate(a.label + "*" + b.label, weight, std::move(types), split);
  }
  out.profile = filtration_profile(out.product_hodge);

  const auto [dap, dam] = betti_signature(a);
  const auto [dbp, dbm] = betti_signature(b);
  out.d_plus = dap * dbp + dam * dbm;
  out.d_minus = dap * dbm + dam * dbp;
  const auto [prod_dp, prod_dm] = betti_signature(out.product_hodge);
  if (prod_dp != out.d_plus || prod_dm != out.d_minus) {
    throw InternalSizeMismatch(out.product_hodge.label +
                               ": eigenspace product rule violated");
  }

  long prefix = 0;
  if (out.d_plus == 0) out.q_plus = 0;
  if (out.d_minus == 0) out.q_minus = 0;
  for (int t = 0; t < out.profile.block_count(); ++t) {
    prefix += out.profile.mults[t];
    if (prefix == out.d_plus) out.q_plus = t + 1;
    if (prefix == out.d_minus) out.q_minus = t + 1;
  }
  return out;
}

}  // namespace periods
