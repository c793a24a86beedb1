// Copyright 2026 The rmmatch Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "rmm/cli.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include <CLI11.hpp>

#include "rmm/asymptotics.hpp"
#include "rmm/errors.hpp"
#include "rmm/instance.hpp"
#include "rmm/interventions.hpp"
#include "rmm/report.hpp"
#include "rmm/roommate.hpp"
#include "rmm/stability.hpp"
#include "rmm/transport.hpp"

namespace rmm::cli {
namespace {

struct CommonOptions {
  std::string instance_path;
  std::string out_path;
  bool no_provenance = false;
};

void add_common(CLI::App* cmd, CommonOptions* opts) {
  cmd->add_option("instance", opts->instance_path, "instance JSON document")
      ->required();
  cmd->add_option("--out", opts->out_path,
                  "write the output to this path instead of stdout");
  cmd->add_flag("--no-provenance", opts->no_provenance,
                "omit the provenance block from the report");
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open '" + path + "' for reading");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  if (in.bad()) throw IoError("failed while reading '" + path + "'");
  return buffer.str();
}

void write_output(const std::string& text, const std::string& out_path,
                  std::ostream& out) {
  if (out_path.empty()) {
    out << text;
    return;
  }
  std::ofstream file(out_path, std::ios::binary);
  if (!file) throw IoError("cannot open '" + out_path + "' for writing");
  file << text;
  if (!file) throw IoError("failed while writing '" + out_path + "'");
}

std::string join_command(const std::vector<std::string>& args) {
  std::string joined = kToolName;
  for (const std::string& arg : args) {
    joined += ' ';
    joined += arg;
  }
  return joined;
}

void attach_provenance(Json* report, const CommonOptions& opts,
                       const std::string& command) {
  if (!opts.no_provenance) (*report)["provenance"] = provenance_json(command);
}

Json solve_report(const Instance& inst, bool use_oracle,
                  long long node_limit) {
  Json report;
  report["instance"] = instance_json(inst);
  if (!inst.exchangeable) {
    // Ordered roles: reduce to the optimized symmetric market and report the
    // role-respecting pairing on top of it.
    OrderedSolveResult ordered = recover_ordered_matching(inst);
    report["engine"] = "ordered_reduction";
    report["value"] = rational_json(ordered.ordered.value);
    report["ordered_matching"] = ordered_matching_json(ordered.ordered);
    report["verdict"] = verdict_json(ordered.verdict);
    return report;
  }
  SolveResult solved = use_oracle ? brute_force_optimum(inst)
                                  : solve_integer_optimum(inst, node_limit);
  report["engine"] = use_oracle ? "brute_force" : "branch_and_bound";
  report["value"] = rational_json(solved.value);
  report["matching"] = matching_json(solved.matching);
  return report;
}

Json stability_report(const Instance& inst) {
  Json report;
  report["instance"] = instance_json(inst);
  if (!inst.exchangeable) {
    OrderedSolveResult ordered = recover_ordered_matching(inst);
    report["ordered_matching"] = ordered_matching_json(ordered.ordered);
    report["verdict"] = verdict_json(ordered.verdict);
    if (ordered.verdict.outcome) {
      report["outcome"]["matching"] =
          matching_json(ordered.verdict.outcome->matching);
      Json payoffs = Json::array();
      for (const Rational& u : ordered.verdict.outcome->payoffs)
        payoffs.push_back(rational_json(u));
      report["outcome"]["payoffs"] = std::move(payoffs);
    }
    report["certificate"] = certificate_json(ordered.verdict.certificate);
    return report;
  }
  StabilityVerdict verdict = decide_stability(inst);
  report["verdict"] = verdict_json(verdict);
  if (verdict.outcome) {
    report["outcome"]["matching"] = matching_json(verdict.outcome->matching);
    Json payoffs = Json::array();
    for (const Rational& u : verdict.outcome->payoffs)
      payoffs.push_back(rational_json(u));
    report["outcome"]["payoffs"] = std::move(payoffs);
  }
  report["certificate"] = certificate_json(verdict.certificate);
  return report;
}

Json stabilize_report(const Instance& inst) {
  Json report;
  report["instance"] = instance_json(inst);
  RemovalPlan plan = stabilize_by_removal(inst);
  bool reduced_stable = plan.reduced.population() == 0 ||
                        decide_stability(plan.reduced).stable;
  report["removal"] = removal_json(plan, reduced_stable);
  report["reduced_instance"] = instance_json(plan.reduced);
  return report;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"exact solvers for one-population matching markets with "
               "transferable utility"};
  app.name(kToolName);
  app.require_subcommand(1);

  CommonOptions solve_opts;
  bool use_oracle = false;
  long long solve_node_limit = kBranchAndBoundNodeLimit;
  CLI::App* solve_cmd = app.add_subcommand(
      "solve", "compute a maximum-surplus integral matching");
  add_common(solve_cmd, &solve_opts);
  solve_cmd->add_flag("--oracle", use_oracle,
                      "use the exhaustive individual-level engine");
  solve_cmd
      ->add_option("--node-limit", solve_node_limit,
                   "search node budget (debugging knob)")
      ->check(CLI::PositiveNumber);

  CommonOptions stability_opts;
  CLI::App* stability_cmd = app.add_subcommand(
      "stability", "decide stable-outcome existence and build certificates");
  add_common(stability_cmd, &stability_opts);

  CommonOptions clone_opts;
  long long factor = 1;
  CLI::App* clone_cmd =
      app.add_subcommand("clone", "scale every type count by a factor");
  add_common(clone_cmd, &clone_opts);
  clone_cmd->add_option("--factor", factor, "population multiplier")
      ->required();

  CommonOptions stabilize_opts;
  CLI::App* stabilize_cmd = app.add_subcommand(
      "stabilize", "plan the parity-based removal that restores stability");
  add_common(stabilize_cmd, &stabilize_opts);

  CommonOptions symmetrize_opts;
  CLI::App* symmetrize_cmd = app.add_subcommand(
      "symmetrize", "reduce ordered-role surpluses to the exchangeable form");
  add_common(symmetrize_cmd, &symmetrize_opts);

  CommonOptions asymptotics_opts;
  long long k_max = 1;
  long long series_node_limit = kBranchAndBoundNodeLimit;
  std::string format = "csv";
  CLI::App* asymptotics_cmd = app.add_subcommand(
      "asymptotics", "per-capita stability gap along proportional cloning");
  add_common(asymptotics_cmd, &asymptotics_opts);
  asymptotics_cmd->add_option("--kmax", k_max, "largest cloning factor")
      ->required();
  asymptotics_cmd->add_option("--format", format, "csv or json")
      ->check(CLI::IsMember({"csv", "json"}));
  asymptotics_cmd
      ->add_option("--node-limit", series_node_limit,
                   "search node budget (debugging knob)")
      ->check(CLI::PositiveNumber);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      // --help and friends.
      out << app.help();
      return kOk;
    }
    err << "error: " << e.what() << "\n\n" << app.help();
    return kValidationError;
  }

  const std::string command = join_command(args);
  try {
    if (solve_cmd->parsed()) {
      Instance inst = parse_instance(read_file(solve_opts.instance_path));
      Json report = solve_report(inst, use_oracle, solve_node_limit);
      attach_provenance(&report, solve_opts, command);
      write_output(dump_report(report), solve_opts.out_path, out);
    } else if (stability_cmd->parsed()) {
      Instance inst = parse_instance(read_file(stability_opts.instance_path));
      Json report = stability_report(inst);
      attach_provenance(&report, stability_opts, command);
      write_output(dump_report(report), stability_opts.out_path, out);
    } else if (clone_cmd->parsed()) {
      Instance inst = parse_instance(read_file(clone_opts.instance_path));
      write_output(emit_instance(clone(inst, factor)), clone_opts.out_path,
                   out);
    } else if (stabilize_cmd->parsed()) {
      Instance inst = parse_instance(read_file(stabilize_opts.instance_path));
      Json report = stabilize_report(inst);
      attach_provenance(&report, stabilize_opts, command);
      write_output(dump_report(report), stabilize_opts.out_path, out);
    } else if (symmetrize_cmd->parsed()) {
      Instance inst = parse_instance(read_file(symmetrize_opts.instance_path));
      SymmetrizeResult sym = symmetrize(inst);
      // Emitted as an instance document with the orientation record bolted
      // on, so the output can be fed back to any other subcommand.
      Json doc = Json::parse(emit_instance(sym.instance));
      Json preference = Json::array();
      for (std::size_t x = 0; x < sym.order_preference.size(); ++x) {
        Json row = Json::array();
        for (std::size_t y = 0; y < sym.order_preference.size(); ++y)
          row.push_back(static_cast<int>(sym.order_preference(x, y)));
        preference.push_back(std::move(row));
      }
      doc["order_preference"] = std::move(preference);
      write_output(doc.dump(2) + "\n", symmetrize_opts.out_path, out);
    } else if (asymptotics_cmd->parsed()) {
      Instance inst =
          parse_instance(read_file(asymptotics_opts.instance_path));
      GapSeries series = gap_sequence(inst, k_max, series_node_limit);
      std::string rendered;
      if (format == "csv") {
        rendered = gap_series_csv(series);
      } else {
        Json doc;
        Json rows = Json::array();
        for (const GapRow& row : series.rows) {
          Json r;
          r["k"] = row.k;
          r["N"] = row.population;
          r["w_p"] = rational_json(row.w_p);
          r["w_f"] = rational_json(row.w_f);
          r["per_capita_gap"] = rational_json(row.per_capita_gap);
          r["per_capita_cost"] = rational_json(row.per_capita_cost);
          rows.push_back(std::move(r));
        }
        doc["rows"] = std::move(rows);
        doc["truncated"] = series.truncated;
        if (series.truncated) doc["truncated_at_k"] = series.truncated_at_k;
        attach_provenance(&doc, asymptotics_opts, command);
        rendered = dump_report(doc);
      }
      write_output(rendered, asymptotics_opts.out_path, out);
      if (series.truncated) {
        err << "error: series truncated at k=" << series.truncated_at_k
            << " (solver resource limit)\n";
        return kResourceExhausted;
      }
    }
  } catch (const ResourceLimitError& e) {
    err << "error: " << e.what() << "\n";
    return kResourceExhausted;
  } catch (const IoError& e) {
    err << "error: " << e.what() << "\n";
    return kIoError;
  } catch (const Error& e) {
    // Parse, domain, validation, and overflow problems are all input faults.
    err << "error: " << e.what() << "\n";
    return kValidationError;
  }
  return kOk;
}

}  // namespace rmm::cli
