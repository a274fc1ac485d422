#include "periods/admissibility.hpp"

#include <sstream>

#include "periods/errors.hpp"
#include "periods/matrix.hpp"
#include "periods/rng.hpp"

namespace periods {

std::string AdmissibilityType::to_string() const {
  std::ostringstream os;
  os << "{(";
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (i) os << ",";
    os << a[i];
  }
  os << "),(" << k_plus << "," << k_minus << ")}";
  return os.str();
}

AdmissibilityType type_product(const AdmissibilityType& t1,
                               const AdmissibilityType& t2) {
  if (t1.partition != t2.partition) {
    throw PartitionMismatch("type product across different partitions");
  }
  AdmissibilityType out = t1;
  for (std::size_t i = 0; i < out.a.size(); ++i) out.a[i] += t2.a[i];
  out.k_plus += t2.k_plus;
  out.k_minus += t2.k_minus;
  return out;
}

AdmissibilityType f_pm_type(const FiltrationProfile& profile, int frak_p,
                            int sign) {
  const int m = profile.block_count();
  if (frak_p < 1 || frak_p > m) {
    throw IndexOutOfRange("block index " + std::to_string(frak_p) +
                          " outside 1.." + std::to_string(m));
  }
  AdmissibilityType out;
  out.partition = profile.mults;
  out.a.assign(m, 0);
  for (int i = 0; i < frak_p; ++i) out.a[i] = 1;
  out.k_plus = sign > 0 ? 1 : 0;
  out.k_minus = sign > 0 ? 0 : 1;
  return out;
}

AdmissibilityType zero_type(const FiltrationProfile& profile) {
  AdmissibilityType out;
  out.partition = profile.mults;
  out.a.assign(profile.block_count(), 0);
  return out;
}

AdmissibilityType det_type(const FiltrationProfile& profile) {
  AdmissibilityType out;
  out.partition = profile.mults;
  out.a.assign(profile.block_count(), 1);
  out.k_plus = 1;
  out.k_minus = 1;
  return out;
}

std::vector<long> compute_a(const PureHodgeData& a_motive,
                            const PureHodgeData& b_motive, int sign) {
  const TensorData td = tensor_hodge(a_motive, b_motive);
  const std::optional<int>& q = sign > 0 ? td.q_plus : td.q_minus;
  if (!q) {
    throw NotCritical(td.product_hodge.label + ": no prefix realizes d" +
                      (sign > 0 ? "+" : "-"));
  }
  const FiltrationProfile pa = filtration_profile(a_motive);
  const FiltrationProfile pb = filtration_profile(b_motive);
  std::vector<long> out(pa.block_count(), 0);
  if (*q == 0) return out;  // empty eigenspace: no rows qualify
  const int threshold = td.profile.jumps[*q - 1];
  for (int mu = 0; mu < pa.block_count(); ++mu) {
    for (int nu = 0; nu < pb.block_count(); ++nu) {
      if (pa.jumps[mu] + pb.jumps[nu] <= threshold) out[mu] += pb.mults[nu];
    }
  }
  return out;
}

std::vector<long> compute_dual_a(const PureHodgeData& a_motive,
                                 const PureHodgeData& b_motive, int sign) {
  return compute_a(b_motive, a_motive, sign);
}

std::string RelationCase::tag_string() const {
  switch (tag) {
    case Tag::EvenOdd_i:
      return "EvenOdd_i";
    case Tag::EvenOdd_ii:
      return "EvenOdd_ii";
    case Tag::BothEven:
      return "BothEven";
    case Tag::BothOdd:
      return "BothOdd(" + std::string(eps_m > 0 ? "+" : "-") + "," +
             std::string(eps_mp > 0 ? "+" : "-") + ")";
    case Tag::Variation:
      return "Variation(" + std::to_string(k) + ")";
    case Tag::DirectSum:
      return "DirectSum";
  }
  return "?";
}

RelationCase predict_case(const PureHodgeData& m, const PureHodgeData& mp) {
  const TensorData td = tensor_hodge(m, mp);
  if (!td.critical()) {
    throw NotCritical(td.product_hodge.label + ": tensor not critical");
  }
  const long dm = m.rank(), dmp = mp.rank();
  const auto [m_dp, m_dm] = betti_signature(m);
  const auto [mp_dp, mp_dm] = betti_signature(mp);

  RelationCase out;
  if (dm % 2 == 0 && dmp % 2 == 1) {
    if (m_dp != m_dm) {
      throw NoTheoremApplies(m.label + ": even-rank side needs d+ = d-");
    }
    if (!all_h_le_one(m)) {
      throw NoTheoremApplies(m.label + ": even-rank side needs all h <= 1");
    }
    const CriticalityReport cr = criticality(mp);
    if (!cr.epsilon) {
      throw NoTheoremApplies(mp.label + ": conjugation not scalar on middle");
    }
    out.eps_mp = *cr.epsilon;
    const long mid = middle_dimension(mp);
    if (all_h_le_one(mp)) {
      out.tag = out.eps_mp > 0 ? RelationCase::Tag::EvenOdd_i
                               : RelationCase::Tag::EvenOdd_ii;
      out.exponents = {{m.label, out.eps_mp}, {mp.label, 0}};
    } else {
      // Only the middle may be fat here.
      for (const auto& t : mp.types) {
        if (t.p != t.q && t.h > 1) {
          throw NoTheoremApplies(mp.label + ": off-middle multiplicity > 1");
        }
      }
      out.tag = RelationCase::Tag::Variation;
      out.k = static_cast<int>(mid);
      out.exponents = {{m.label, out.eps_mp * out.k}, {mp.label, 0}};
    }
    return out;
  }
  if (dm % 2 == 0 && dmp % 2 == 0) {
    if (!all_h_le_one(m) || !all_h_le_one(mp)) {
      throw NoTheoremApplies("even-even case needs all h <= 1");
    }
    out.tag = RelationCase::Tag::BothEven;
    out.exponents = {{m.label, 0}, {mp.label, 0}};
    return out;
  }
  if (dm % 2 == 1 && dmp % 2 == 1) {
    if (!all_h_le_one(m) || !all_h_le_one(mp)) {
      throw NoTheoremApplies("odd-odd case needs all h <= 1");
    }
    const CriticalityReport crm = criticality(m);
    const CriticalityReport crmp = criticality(mp);
    if (!crm.epsilon || !crmp.epsilon) {
      throw NoTheoremApplies("odd-odd case needs scalar middles");
    }
    out.tag = RelationCase::Tag::BothOdd;
    out.eps_m = *crm.epsilon;
    out.eps_mp = *crmp.epsilon;
    out.exponents = {{m.label, out.eps_mp}, {mp.label, out.eps_m}};
    const int r0 = static_cast<int>(m_dm) + (out.eps_m + 1) / 2;
    const int s0 = static_cast<int>(mp_dm) + (out.eps_mp + 1) / 2;
    out.localization = std::make_pair(r0, s0);
    return out;
  }
  throw NoTheoremApplies("odd x even pair: state the even-rank motive first");
}

namespace {

// Fills a square block with entries in [-9,9], resampling until invertible.
void sample_invertible_block(GenericMatrix<BigRational>& m, long row0, long col0,
                             long size, SplitMix64& rng) {
  for (int attempt = 0; attempt < 100; ++attempt) {
    GenericMatrix<BigRational> block(size, size);
    for (long i = 0; i < size; ++i) {
      for (long j = 0; j < size; ++j) {
        block(i, j) = BigRational(BigInt(rng.uniform(-9, 9)));
      }
    }
    if (determinant(block) != 0) {
      for (long i = 0; i < size; ++i) {
        for (long j = 0; j < size; ++j) m(row0 + i, col0 + j) = block(i, j);
      }
      return;
    }
  }
  throw DegenerateSample("could not sample an invertible block");
}

}  // namespace

bool check_equivariance(const Evaluator& f, const MatrixFrame& frame,
                        const AdmissibilityType& claimed, int trials,
                        std::uint64_t seed) {
  const long d = frame.side();
  long part_sum = 0;
  for (long s : frame.partition) part_sum += s;
  if (part_sum != d || frame.d_plus + frame.d_minus != d) {
    throw PartitionMismatch("frame partition/split does not fill the matrix");
  }
  if (claimed.partition != frame.partition ||
      claimed.a.size() != claimed.partition.size()) {
    throw PartitionMismatch("claimed type lives on a different partition");
  }

  SplitMix64 rng(seed);
  const BigRational zero(0);
  for (int trial = 0; trial < trials; ++trial) {
    // Block-lower-triangular p with invertible diagonal blocks.
    GenericMatrix<BigRational> p(d, d);
    for (long i = 0; i < d; ++i) {
      for (long j = 0; j < d; ++j) p(i, j) = zero;
    }
    long offset = 0;
    std::vector<long> block_start;
    for (long s : frame.partition) {
      block_start.push_back(offset);
      offset += s;
    }
    for (std::size_t mu = 0; mu < frame.partition.size(); ++mu) {
      sample_invertible_block(p, block_start[mu], block_start[mu],
                              frame.partition[mu], rng);
      for (long i = block_start[mu]; i < block_start[mu] + frame.partition[mu];
           ++i) {
        for (long j = 0; j < block_start[mu]; ++j) {
          p(i, j) = BigRational(BigInt(rng.uniform(-9, 9)));
        }
      }
    }

    GenericMatrix<BigRational> g(d, d);
    for (long i = 0; i < d; ++i) {
      for (long j = 0; j < d; ++j) g(i, j) = zero;
    }
    if (frame.d_plus > 0) sample_invertible_block(g, 0, 0, frame.d_plus, rng);
    if (frame.d_minus > 0) {
      sample_invertible_block(g, frame.d_plus, frame.d_plus, frame.d_minus, rng);
    }

    GenericMatrix<BigRational> x0(d, d);
    for (long i = 0; i < d; ++i) {
      for (long j = 0; j < d; ++j) {
        x0(i, j) = BigRational(BigInt(rng.uniform(-9, 9)));
      }
    }

    const GenericMatrix<BigRational> transformed = (p * x0 * g).eval();
    std::map<std::string, BigRational> at_x0, at_transformed;
    for (long i = 0; i < d; ++i) {
      for (long j = 0; j < d; ++j) {
        at_x0[frame.var_names[i][j]] = x0(i, j);
        at_transformed[frame.var_names[i][j]] = transformed(i, j);
      }
    }

    BigRational lambda1(1);
    for (std::size_t mu = 0; mu < frame.partition.size(); ++mu) {
      const long s = frame.partition[mu];
      GenericMatrix<BigRational> diag(s, s);
      for (long i = 0; i < s; ++i) {
        for (long j = 0; j < s; ++j) {
          diag(i, j) = p(block_start[mu] + i, block_start[mu] + j);
        }
      }
      lambda1 *= pow_rational(determinant(diag), claimed.a[mu]);
    }
    BigRational lambda2(1);
    if (frame.d_plus > 0) {
      GenericMatrix<BigRational> gp = g.block(0, 0, frame.d_plus, frame.d_plus);
      lambda2 *= pow_rational(determinant(gp), claimed.k_plus);
    }
    if (frame.d_minus > 0) {
      GenericMatrix<BigRational> gm =
          g.block(frame.d_plus, frame.d_plus, frame.d_minus, frame.d_minus);
      lambda2 *= pow_rational(determinant(gm), claimed.k_minus);
    }

    if (f(at_transformed) != lambda1 * f(at_x0) * lambda2) return false;
  }
  return true;
}

bool check_equivariance(const SparsePolynomial& poly, const MatrixFrame& frame,
                        const AdmissibilityType& claimed, int trials,
                        std::uint64_t seed) {
  Evaluator f = [&poly](const std::map<std::string, BigRational>& assignment) {
    return evaluate(poly, assignment);
  };
  return check_equivariance(f, frame, claimed, trials, seed);
}

}  // namespace periods
