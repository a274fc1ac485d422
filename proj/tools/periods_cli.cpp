#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "periods/dirichlet.hpp"
#include "periods/errors.hpp"
#include "periods/motive_io.hpp"
#include "periods/relations.hpp"
#include "periods/report.hpp"

namespace {

std::vector<std::string> split_commas(const std::string& text) {
  std::vector<std::string> out;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t comma = text.find(',', pos);
    if (comma == std::string::npos) {
      out.push_back(text.substr(pos));
      break;
    }
    out.push_back(text.substr(pos, comma - pos));
    pos = comma + 1;
  }
  return out;
}

int emit(const periods::ReportJson& report, const std::string& output,
         const std::string& out_file, int exit_code) {
  const std::string payload = output == "json"
                                  ? report.dump(2) + "\n"
                                  : periods::render_text(report);
  if (out_file.empty()) {
    std::cout << payload;
  } else {
    std::ofstream out(out_file, std::ios::binary);
    if (!out) {
      std::cerr << "error: cannot write " << out_file << "\n";
      return 2;
    }
    out << payload;
  }
  return exit_code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact workbench for period-ratio identities of tensor motives"};
  app.require_subcommand(1);
  // Global options may follow the subcommand on the command line.
  app.fallthrough();

  std::string mode = "exact";
  app.add_option("--mode", mode, "verification mode")
      ->check(CLI::IsMember({"exact", "prob"}));
  int trials = 20;
  app.add_option("--trials", trials, "probabilistic trials (>= 8)");
  std::uint64_t seed = 0;
  app.add_option("--seed", seed, "master seed for randomized subtasks");
  long coeff_bound = 1000;
  app.add_option("--coeff-bound", coeff_bound, "sampling box half-width");
  int digits = 50;
  app.add_option("--digits", digits, "working decimal digits");
  std::string output = "text";
  app.add_option("--output", output, "report format")
      ->check(CLI::IsMember({"json", "text"}));
  std::string out_file;
  app.add_option("--out", out_file, "write the report to this file");

  auto* inspect =
      app.add_subcommand("inspect", "signature, profile, and criticality");
  std::vector<std::string> inspect_files;
  inspect->add_option("files", inspect_files, "motive-spec JSON files")
      ->required()
      ->expected(-1);

  auto* tensor =
      app.add_subcommand("tensor", "tensor-product combinatorics of a pair");
  std::string tensor_a, tensor_b;
  tensor->add_option("fileA", tensor_a, "first motive")->required();
  tensor->add_option("fileB", tensor_b, "second motive")->required();

  auto* verify = app.add_subcommand(
      "verify", "verify the period-ratio identity of a pair or a direct sum");
  std::string verify_a, verify_b, sum_list;
  verify->add_option("fileA", verify_a, "first motive")->required();
  verify->add_option("fileB", verify_b, "second motive");
  verify->add_option("--sum", sum_list,
                     "comma-separated motive files forming a direct sum");
  bool wrong_case = false;
  verify->add_flag("--check-wrong-case", wrong_case,
                   "test the mispaired identity (negative control)");

  auto* dirichlet = app.add_subcommand(
      "dirichlet", "critical L-value probes for quadratic characters");
  long long disc = 0;
  dirichlet->add_option("--disc", disc, "fundamental discriminant")->required();
  long long disc2 = 0;
  auto* disc2_opt =
      dirichlet->add_option("--disc2", disc2, "second discriminant (tensor)");
  int max_m = 0;
  dirichlet->add_option("--max-m", max_m, "probe all critical m <= this")
      ->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  periods::VerifyMode vmode;
  vmode.kind = mode == "exact" ? periods::VerifyKind::Exact
                               : periods::VerifyKind::Probabilistic;
  vmode.trials = trials;
  vmode.coeff_bound = coeff_bound;
  vmode.seed = seed;

  periods::ReportJson tasks = periods::ReportJson::array();
  int exit_code = 0;
  try {
    if (inspect->parsed()) {
      for (const std::string& file : inspect_files) {
        tasks.push_back(periods::inspect_entry(periods::load_motive_file(file)));
      }
    } else if (tensor->parsed()) {
      tasks.push_back(periods::tensor_entry(periods::load_motive_file(tensor_a),
                                            periods::load_motive_file(tensor_b)));
    } else if (verify->parsed()) {
      const periods::PureHodgeData first = periods::load_motive_file(verify_a);
      if (!sum_list.empty() && !verify_b.empty()) {
        std::cerr << "error: give either a second motive or --sum, not both\n";
        return 2;
      }
      if (!sum_list.empty()) {
        std::vector<periods::PureHodgeData> summands;
        std::vector<std::string> labels;
        for (const std::string& file : split_commas(sum_list)) {
          summands.push_back(periods::load_motive_file(file));
          labels.push_back(summands.back().label);
        }
        const periods::RelationReport rep =
            periods::verify_direct_sum(first, summands, vmode);
        tasks.push_back(periods::verify_sum_entry(first.label, labels, rep));
        exit_code = rep.passed ? 0 : 1;
      } else {
        if (verify_b.empty()) {
          std::cerr << "error: verify needs a second motive or --sum\n";
          return 2;
        }
        const periods::PureHodgeData second =
            periods::load_motive_file(verify_b);
        const periods::RelationReport rep =
            periods::verify_pair(first, second, vmode, wrong_case);
        tasks.push_back(periods::verify_entry(first.label, second.label, rep));
        exit_code = rep.passed ? 0 : 1;
      }
    } else if (dirichlet->parsed()) {
      std::vector<periods::ProbeResult> rows;
      std::optional<long long> second;
      if (disc2_opt->count() > 0) {
        second = disc2;
        rows = periods::rank1_tensor_probe(periods::kronecker_chi(disc),
                                           periods::kronecker_chi(disc2),
                                           max_m, digits);
      } else {
        const periods::QuadChar chi = periods::kronecker_chi(disc);
        for (int m = 1; m <= max_m; ++m) {
          if (chi.parity != (m % 2 == 0 ? 1 : -1)) continue;
          rows.push_back(periods::probe_algebraicity_full(chi, m, digits));
        }
      }
      bool all_pass = true;
      for (const periods::ProbeResult& row : rows) {
        all_pass = all_pass && row.pass;
      }
      tasks.push_back(periods::dirichlet_entry(disc, second, digits, rows));
      exit_code = all_pass ? 0 : 1;
    }
  } catch (const periods::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }

  return emit(periods::run_report(seed, mode, std::move(tasks)), output,
              out_file, exit_code);
}
