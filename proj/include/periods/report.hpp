#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "periods/dirichlet.hpp"
#include "periods/hodge.hpp"
#include "periods/relations.hpp"
#include "periods/totally_real.hpp"

namespace periods {

using ReportJson = nlohmann::ordered_json;

// Task entries. Field order is fixed so identical inputs give identical bytes.
ReportJson inspect_entry(const PureHodgeData& h);
ReportJson tensor_entry(const PureHodgeData& a, const PureHodgeData& b);
ReportJson relation_json(const RelationReport& rep);
ReportJson verify_entry(const std::string& first, const std::string& second,
                        const RelationReport& rep);
ReportJson verify_sum_entry(const std::string& first,
                            const std::vector<std::string>& summands,
                            const RelationReport& rep);
ReportJson totreal_entry(const std::string& first, const std::string& second,
                         const TotRealReport& rep);
ReportJson dirichlet_entry(long long d, std::optional<long long> d_prime,
                           int digits, const std::vector<ProbeResult>& rows);

ReportJson run_report(std::uint64_t seed, const std::string& mode,
                      ReportJson tasks);

// Human-readable projection of the same data.
std::string render_text(const ReportJson& report);

}  // namespace periods
