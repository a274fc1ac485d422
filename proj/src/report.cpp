#include "periods/report.hpp"

#include <sstream>

#include "periods/admissibility.hpp"
#include "periods/errors.hpp"

namespace periods {

namespace {

constexpr const char* kToolName = "periods";
constexpr const char* kToolVersion = "0.1.0";

ReportJson json_or_null(const std::optional<int>& v) {
  if (v) return *v;
  return nullptr;
}

ReportJson vector_json(const std::vector<long>& v) {
  ReportJson out = ReportJson::array();
  for (long x : v) out.push_back(x);
  return out;
}

ReportJson vector_json(const std::vector<int>& v) {
  ReportJson out = ReportJson::array();
  for (int x : v) out.push_back(x);
  return out;
}

}  // namespace

ReportJson inspect_entry(const PureHodgeData& h) {
  const auto [dp, dm] = betti_signature(h);
  const FiltrationProfile profile = filtration_profile(h);
  const CriticalityReport crit = criticality(h);

  ReportJson out;
  out["kind"] = "inspect";
  out["label"] = h.label;
  out["weight"] = h.weight;
  out["rank"] = h.rank();
  out["d_plus"] = dp;
  out["d_minus"] = dm;
  out["jumps"] = vector_json(profile.jumps);
  out["mults"] = vector_json(profile.mults);
  if (h.middle_split) {
    out["middle_split"] =
        ReportJson::array({h.middle_split->first, h.middle_split->second});
  } else {
    out["middle_split"] = nullptr;
  }
  out["critical"] = crit.critical;
  out["frak_p_plus"] = json_or_null(crit.frak_p_plus);
  out["frak_p_minus"] = json_or_null(crit.frak_p_minus);
  out["epsilon"] = json_or_null(crit.epsilon);
  out["passed"] = true;
  return out;
}

ReportJson tensor_entry(const PureHodgeData& a, const PureHodgeData& b) {
  const TensorData td = tensor_hodge(a, b);

  ReportJson out;
  out["kind"] = "tensor";
  out["first"] = a.label;
  out["second"] = b.label;
  out["weight"] = td.product_hodge.weight;
  out["jumps"] = vector_json(td.profile.jumps);
  out["mults"] = vector_json(td.profile.mults);
  out["d_plus"] = td.d_plus;
  out["d_minus"] = td.d_minus;
  out["q_plus"] = json_or_null(td.q_plus);
  out["q_minus"] = json_or_null(td.q_minus);
  out["critical"] = td.critical();

  if (td.critical()) {
    out["a_plus"] = vector_json(compute_a(a, b, +1));
    out["a_minus"] = vector_json(compute_a(a, b, -1));
    out["dual_a_plus"] = vector_json(compute_dual_a(a, b, +1));
    out["dual_a_minus"] = vector_json(compute_dual_a(a, b, -1));
  } else {
    out["a_plus"] = nullptr;
    out["a_minus"] = nullptr;
    out["dual_a_plus"] = nullptr;
    out["dual_a_minus"] = nullptr;
  }

  out["case"] = nullptr;
  out["localization"] = nullptr;
  out["case_note"] = "";
  if (td.critical()) {
    try {
      const RelationCase rcase = predict_case(a, b);
      out["case"] = rcase.tag_string();
      if (rcase.localization) {
        out["localization"] = ReportJson::array(
            {rcase.localization->first, rcase.localization->second});
      }
    } catch (const Error& e) {
      out["case_note"] = e.what();
    }
  } else {
    out["case_note"] = "tensor not critical";
  }
  out["passed"] = true;
  return out;
}

ReportJson relation_json(const RelationReport& rep) {
  ReportJson out;
  out["case"] = rep.rcase.tag_string();
  out["identity"] = rep.identity_checked;
  out["passed"] = rep.passed;
  out["constant"] =
      rep.constant ? ReportJson(rational_to_string(*rep.constant))
                   : ReportJson(nullptr);
  out["mode"] = rep.mode;
  out["evidence"] = rep.evidence;
  out["false_pass_bound"] = rep.false_pass_bound
                                ? ReportJson(*rep.false_pass_bound)
                                : ReportJson(nullptr);
  out["aggregate_exponent"] = rep.aggregate_exponent
                                  ? ReportJson(*rep.aggregate_exponent)
                                  : ReportJson(nullptr);
  out["exponents"] = ReportJson::array();
  for (const auto& [motive, exponent] : rep.rcase.exponents) {
    out["exponents"].push_back({{"motive", motive}, {"exponent", exponent}});
  }
  out["localization"] = rep.rcase.localization
                            ? ReportJson::array({rep.rcase.localization->first,
                                                 rep.rcase.localization->second})
                            : ReportJson(nullptr);
  out["summands"] = ReportJson::array();
  for (const RelationReport& sub : rep.summands) {
    out["summands"].push_back(relation_json(sub));
  }
  out["note"] = rep.note;
  return out;
}

ReportJson verify_entry(const std::string& first, const std::string& second,
                        const RelationReport& rep) {
  ReportJson out;
  out["kind"] = "verify";
  out["first"] = first;
  out["second"] = second;
  out["relation"] = relation_json(rep);
  out["passed"] = rep.passed;
  return out;
}

ReportJson verify_sum_entry(const std::string& first,
                            const std::vector<std::string>& summands,
                            const RelationReport& rep) {
  ReportJson out;
  out["kind"] = "verify_sum";
  out["first"] = first;
  out["summand_labels"] = ReportJson::array();
  for (const std::string& s : summands) out["summand_labels"].push_back(s);
  out["relation"] = relation_json(rep);
  out["passed"] = rep.passed;
  return out;
}

ReportJson totreal_entry(const std::string& first, const std::string& second,
                         const TotRealReport& rep) {
  ReportJson out;
  out["kind"] = "totreal";
  out["first"] = first;
  out["second"] = second;
  out["per_embedding"] = ReportJson::array();
  for (const RelationReport& sub : rep.per_embedding) {
    out["per_embedding"].push_back(relation_json(sub));
  }
  out["factor_ratio"] = rep.factor_ratio.to_string();
  out["derived"] = rep.derived.to_string();
  out["expected"] = rep.expected.to_string();
  out["disc_exponent"] = rep.disc_exponent;
  out["note"] = rep.note;
  out["passed"] = rep.passed;
  return out;
}

ReportJson dirichlet_entry(long long d, std::optional<long long> d_prime,
                           int digits, const std::vector<ProbeResult>& rows) {
  ReportJson out;
  out["kind"] = "dirichlet";
  out["digits"] = digits;
  out["rows"] = ReportJson::array();
  bool all_pass = true;
  for (const ProbeResult& row : rows) {
    ReportJson r;
    r["D"] = d;
    r["Dprime"] = d_prime ? ReportJson(*d_prime) : ReportJson(nullptr);
    r["m"] = row.m;
    r["normalized_value_digits"] = row.normalized_value;
    r["rational"] = row.rational
                        ? ReportJson(rational_to_string(*row.rational))
                        : ReportJson(nullptr);
    r["pass"] = row.pass;
    all_pass = all_pass && row.pass;
    out["rows"].push_back(std::move(r));
  }
  out["passed"] = all_pass;
  return out;
}

ReportJson run_report(std::uint64_t seed, const std::string& mode,
                      ReportJson tasks) {
  bool overall = true;
  for (const ReportJson& task : tasks) {
    overall = overall && task.at("passed").get<bool>();
  }
  ReportJson out;
  out["tool"] = {{"name", kToolName}, {"version", kToolVersion}};
  out["seed"] = seed;
  out["mode"] = mode;
  out["tasks"] = std::move(tasks);
  out["overall_pass"] = overall;
  return out;
}

namespace {

std::string text_of(const ReportJson& v) {
  if (v.is_null()) return "-";
  if (v.is_string()) return v.get<std::string>();
  return v.dump();
}

void render_relation(std::ostringstream& os, const ReportJson& rel,
                     const std::string& indent) {
  os << indent << rel.at("case").get<std::string>() << ": "
     << rel.at("identity").get<std::string>() << " -> "
     << (rel.at("passed").get<bool>() ? "PASS" : "FAIL");
  if (!rel.at("constant").is_null()) {
    os << ", constant " << rel.at("constant").get<std::string>();
  }
  os << " [" << rel.at("mode").get<std::string>() << "] "
     << rel.at("evidence").get<std::string>() << "\n";
  if (!rel.at("false_pass_bound").is_null()) {
    os << indent << "  false-pass bound "
       << rel.at("false_pass_bound").get<std::string>() << "\n";
  }
  for (const ReportJson& sub : rel.at("summands")) {
    render_relation(os, sub, indent + "  ");
  }
}

}  // namespace

std::string render_text(const ReportJson& report) {
  std::ostringstream os;
  os << report.at("tool").at("name").get<std::string>() << " "
     << report.at("tool").at("version").get<std::string>() << " seed="
     << report.at("seed").get<std::uint64_t>() << " mode="
     << report.at("mode").get<std::string>() << "\n";
  for (const ReportJson& task : report.at("tasks")) {
    const std::string kind = task.at("kind").get<std::string>();
    if (kind == "inspect") {
      os << "inspect " << task.at("label").get<std::string>() << ": weight "
         << task.at("weight") << ", rank " << task.at("rank") << ", d+ = "
         << task.at("d_plus") << ", d- = " << task.at("d_minus") << ", jumps "
         << task.at("jumps").dump() << ", mults " << task.at("mults").dump()
         << ", " << (task.at("critical").get<bool>() ? "critical" : "not critical")
         << ", p+ = " << text_of(task.at("frak_p_plus")) << ", p- = "
         << text_of(task.at("frak_p_minus")) << ", eps = "
         << text_of(task.at("epsilon")) << "\n";
    } else if (kind == "tensor") {
      os << "tensor " << task.at("first").get<std::string>() << " (x) "
         << task.at("second").get<std::string>() << ": d+ = "
         << task.at("d_plus") << ", d- = " << task.at("d_minus") << ", q+ = "
         << text_of(task.at("q_plus")) << ", q- = "
         << text_of(task.at("q_minus")) << ", "
         << (task.at("critical").get<bool>() ? "critical" : "not critical");
      if (!task.at("a_plus").is_null()) {
        os << ", a+ = " << task.at("a_plus").dump() << ", a- = "
           << task.at("a_minus").dump();
      }
      if (!task.at("case").is_null()) {
        os << ", case " << task.at("case").get<std::string>();
      }
      if (!task.at("localization").is_null()) {
        os << ", (r0,s0) = " << task.at("localization").dump();
      }
      const std::string note = task.at("case_note").get<std::string>();
      if (!note.empty()) os << " (" << note << ")";
      os << "\n";
    } else if (kind == "verify") {
      os << "verify " << task.at("first").get<std::string>() << " (x) "
         << task.at("second").get<std::string>() << "\n";
      render_relation(os, task.at("relation"), "  ");
    } else if (kind == "verify_sum") {
      os << "verify " << task.at("first").get<std::string>() << " (x) sum(";
      bool first = true;
      for (const ReportJson& s : task.at("summand_labels")) {
        if (!first) os << ", ";
        first = false;
        os << s.get<std::string>();
      }
      os << ")\n";
      render_relation(os, task.at("relation"), "  ");
    } else if (kind == "totreal") {
      os << "totreal " << task.at("first").get<std::string>() << " (x) "
         << task.at("second").get<std::string>() << ": disc exponent "
         << task.at("disc_exponent") << ", derived "
         << task.at("derived").get<std::string>() << ", expected "
         << task.at("expected").get<std::string>() << " -> "
         << (task.at("passed").get<bool>() ? "PASS" : "FAIL") << "\n";
      for (const ReportJson& sub : task.at("per_embedding")) {
        render_relation(os, sub, "  ");
      }
    } else if (kind == "dirichlet") {
      for (const ReportJson& row : task.at("rows")) {
        os << "dirichlet D=" << row.at("D") << " D'="
           << text_of(row.at("Dprime")) << " m=" << row.at("m") << ": "
           << text_of(row.at("rational")) << " "
           << (row.at("pass").get<bool>() ? "PASS" : "FAIL") << "\n";
      }
    }
  }
  os << "overall: "
     << (report.at("overall_pass").get<bool>() ? "PASS" : "FAIL") << "\n";
  return os.str();
}

}  // namespace periods
