#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "periods/hodge.hpp"
#include "periods/relations.hpp"

namespace periods {

// One generator of the free abelian group of period expressions for a motive
// over a totally real field: c+/c- at an embedding, or the square root of
// the field discriminant (which carries no embedding).
struct PeriodSymbol {
  enum class Kind { CPlus, CMinus, DiscSqrt };
  Kind kind = Kind::CPlus;
  std::optional<std::string> embedding;
  std::string motive;

  bool operator==(const PeriodSymbol&) const = default;
  bool operator<(const PeriodSymbol& other) const;
  std::string to_string() const;
};

// Formal product with integer exponents; zero exponents are never stored.
class FormalProduct {
 public:
  FormalProduct() = default;

  static FormalProduct symbol(const PeriodSymbol& s, long exponent = 1);

  const std::map<PeriodSymbol, long>& exponents() const { return exps_; }
  bool is_identity() const { return exps_.empty(); }
  long exponent_of(const PeriodSymbol& s) const;

  FormalProduct operator*(const FormalProduct& other) const;
  FormalProduct inverse() const;
  FormalProduct pow(long e) const;
  bool operator==(const FormalProduct&) const = default;

  std::string to_string() const;  // display form
  std::string serialize() const;  // exact round-trip form

 private:
  std::map<PeriodSymbol, long> exps_;
};

FormalProduct deserialize_formal_product(const std::string& text);

// Period factorization of the restriction of scalars:
// disc^{1/2} to the d^{sign} and one c^{sign}(sigma, M) per embedding.
FormalProduct restriction_periods(const PureHodgeData& motive,
                                  const std::vector<std::string>& embeddings,
                                  int sign);

struct TotRealReport {
  std::vector<RelationReport> per_embedding;
  FormalProduct factor_ratio;  // (+)/(-) factorization of the tensor motive
  FormalProduct derived;       // after substituting per-embedding relations
  FormalProduct expected;      // the theorem's right-hand side
  long disc_exponent = 0;      // in factor_ratio; 0 under the hypotheses
  bool passed = false;
  std::string note;
};

// Per-embedding relation verification (independent variables, middle sign of
// the second motive set per embedding) plus the formal exponent algebra
// showing the discriminant cancels and the combined ratio matches
// prod_sigma (c+(sigma,M)/c-(sigma,M))^{eps(sigma)}.
TotRealReport verify_totreal(const PureHodgeData& m, const PureHodgeData& mp,
                             const std::map<std::string, int>& sign_at,
                             const VerifyMode& mode);

}  // namespace periods
