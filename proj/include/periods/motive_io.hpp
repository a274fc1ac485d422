#pragma once

#include <string>

#include "periods/hodge.hpp"

namespace periods {

// Parses {"label", "weight", "hodge": [{"p","q","h"}...],
// "middle_split": {"plus","minus"}?}. Throws InvalidMotive with the source
// name and the parser's position on malformed documents.
PureHodgeData parse_motive_json(const std::string& text,
                                const std::string& source_name);

PureHodgeData load_motive_file(const std::string& path);

std::string motive_to_json(const PureHodgeData& h);

}  // namespace periods
