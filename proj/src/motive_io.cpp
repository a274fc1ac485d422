#include "periods/motive_io.hpp"

#include <fstream>
#include <iterator>

#include "json.hpp"
#include "periods/errors.hpp"

namespace periods {

PureHodgeData parse_motive_json(const std::string& text,
                                const std::string& source_name) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw InvalidMotive(source_name + ": " + e.what());
  }
  try {
    const std::string label = doc.at("label").get<std::string>();
    const int weight = doc.at("weight").get<int>();
    std::vector<HodgeType> types;
    for (const auto& t : doc.at("hodge")) {
      types.push_back(HodgeType{t.at("p").get<int>(), t.at("q").get<int>(),
                                t.at("h").get<long>()});
    }
    std::optional<std::pair<long, long>> split;
    if (doc.contains("middle_split") && !doc.at("middle_split").is_null()) {
      split = std::make_pair(doc.at("middle_split").at("plus").get<long>(),
                             doc.at("middle_split").at("minus").get<long>());
    }
    return validate(label, weight, std::move(types), split);
  } catch (const nlohmann::json::exception& e) {
    throw InvalidMotive(source_name + ": " + e.what());
  }
}

PureHodgeData load_motive_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidMotive(path + ": cannot open file");
  const std::string text{std::istreambuf_iterator<char>(in),
                         std::istreambuf_iterator<char>()};
  return parse_motive_json(text, path);
}

std::string motive_to_json(const PureHodgeData& h) {
  nlohmann::ordered_json doc;
  doc["label"] = h.label;
  doc["weight"] = h.weight;
  doc["hodge"] = nlohmann::ordered_json::array();
  for (const HodgeType& t : h.types) {
    doc["hodge"].push_back({{"p", t.p}, {"q", t.q}, {"h", t.h}});
  }
  if (h.middle_split) {
    doc["middle_split"] = {{"plus", h.middle_split->first},
                           {"minus", h.middle_split->second}};
  }
  return doc.dump(2);
}

}  // namespace periods
