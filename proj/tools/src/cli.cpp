#include "qcoex_cli/cli.hpp"

#include <CLI11.hpp>
#include <filesystem>
#include <fstream>
#include <nlohmann/json.hpp>
#include <ostream>
#include <sstream>

#include "qcoex/crosscheck.hpp"
#include "qcoex/errors.hpp"
#include "qcoex/scenario_io.hpp"

namespace qcoex::cli {
namespace {

struct Options {
  std::string config;
  std::string format = "csv";
  std::string output;
  double tolerance = 1e-8;
  unsigned threads = 0;
  std::string template_name;
};

class Failure : public std::runtime_error {
 public:
  Failure(int code, const std::string& what) : std::runtime_error(what), code_(code) {}
  int code() const { return code_; }

 private:
  int code_;
};

Scenario load(const Options& o) {
  std::error_code ec;
  if (!std::filesystem::is_regular_file(o.config, ec)) throw Failure(exit_no_input, "cannot read config " + o.config);
  return load_scenario(o.config);
}

void emit(const Options& o, const std::string& data, std::ostream& out) {
  if (o.output.empty() || o.output == "-") {
    out << data;
    return;
  }
  std::ofstream file(o.output, std::ios::binary | std::ios::trunc);
  if (!file) throw Failure(exit_cant_create, "cannot create " + o.output);
  file << data;
  if (!file.flush()) throw Failure(exit_cant_create, "write to " + o.output + " failed");
}

void note_budget(const NoiseBudget& budget, std::ostream& err, const std::string& where = {}) {
  if (budget.synthesized_anti_stokes) {
    err << "note: " << where << "anti-Stokes efficiency synthesized from the Stokes side\n";
  }
}

int cmd_run(const Options& o, std::ostream& out, std::ostream& err) {
  const auto scenario = load(o);
  const auto budget = run_budget(scenario);
  note_budget(budget, err);
  std::ostringstream data;
  if (o.format == "csv") {
    write_budget_csv(data, budget);
  } else {
    write_budget_json(data, scenario, budget);
  }
  emit(o, data.str(), out);
  return exit_ok;
}

int cmd_sweep(const Options& o, std::ostream& out, std::ostream& err) {
  const auto scenario = load(o);
  if (!scenario.sweep) throw Failure(exit_invalid, "sweep: scenario has no \"sweep\" block");
  const auto points = run_sweep(scenario, o.threads);
  std::ostringstream data;
  if (o.format == "csv") {
    write_sweep_csv(data, points);
  } else {
    write_sweep_json(data, scenario, points);
  }
  emit(o, data.str(), out);
  int code = exit_ok;
  for (const auto& p : points) {
    if (p.budget) {
      note_budget(*p.budget, err, "at " + format_number(p.axis) + ": ");
      continue;
    }
    code = exit_invalid;
    for (const auto& issue : p.errors) {
      err << "error: at " << format_number(p.axis) << ": " << issue.field << (issue.field.empty() ? "" : ": ")
          << issue.message << '\n';
    }
  }
  return code;
}

int cmd_validate(const Options& o, std::ostream& out) {
  const auto scenario = load(o);
  out << "valid: " << (scenario.name.empty() ? o.config : scenario.name) << " (" << scenario.plan.size()
      << " classical, " << scenario.leakage.size() << " leakage";
  if (scenario.sweep) out << ", " << scenario.sweep->points().size() << " sweep points";
  out << ")\n";
  return exit_ok;
}

int cmd_oracle_check(const Options& o, std::ostream& out, std::ostream& err) {
  if (!(o.tolerance > 0.0)) throw Failure(exit_usage, "--tolerance must be positive");
  const auto scenario = load(o);
  const auto report = cross_check(scenario, o.tolerance);
  std::ostringstream data;
  if (o.format == "csv") {
    data << "mechanism,item,closed_form,oracle,relative_error,status\n";
    for (const auto& r : report.rows) {
      data << r.mechanism << ',' << r.item << ',' << format_number(r.closed_form) << ',' << format_number(r.oracle)
           << ',' << format_number(r.relative_error) << ',' << to_string(r.status) << '\n';
    }
  } else {
    nlohmann::ordered_json rows = nlohmann::ordered_json::array();
    for (const auto& r : report.rows) {
      rows.push_back({{"mechanism", r.mechanism},
                      {"item", r.item},
                      {"closed_form", r.closed_form},
                      {"oracle", r.oracle},
                      {"relative_error", r.relative_error},
                      {"status", to_string(r.status)},
                      {"message", r.message}});
    }
    nlohmann::ordered_json doc{{"tolerance", report.tolerance}, {"ok", report.ok()}, {"rows", rows}};
    data << doc.dump(2) << '\n';
  }
  emit(o, data.str(), out);
  for (const auto& r : report.rows) {
    if (r.status == CheckStatus::error) err << "error: " << r.mechanism << ' ' << r.item << ": " << r.message << '\n';
    if (r.status == CheckStatus::fail) {
      err << "fail: " << r.mechanism << ' ' << r.item << ": relative error " << format_number(r.relative_error)
          << " > " << format_number(o.tolerance) << '\n';
    }
  }
  return report.ok() ? exit_ok : exit_check_failed;
}

std::string list_templates() {
  std::string names;
  for (const auto& n : template_names()) names += (names.empty() ? "" : ", ") + n;
  return names;
}

int cmd_example(const Options& o, std::ostream& out) {
  std::string text;
  try {
    text = template_json(o.template_name);
  } catch (const std::out_of_range&) {
    throw Failure(exit_usage, "unknown template '" + o.template_name + "'; available: " + list_templates());
  }
  emit(o, text, out);
  return exit_ok;
}

void add_common(CLI::App* sub, Options& o, bool with_format) {
  sub->add_option("--config", o.config, "Scenario JSON file")->required();
  if (with_format) {
    sub->add_option("--format", o.format, "Output format: csv or json")
        ->check(CLI::IsMember({"csv", "json"}))
        ->capture_default_str();
    sub->add_option("--output", o.output, "Output file (default: standard output)");
  }
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Noise budget for a quantum channel sharing fiber with classical WDM traffic", "qcoex"};
  app.require_subcommand(1);
  Options o;

  auto* run = app.add_subcommand("run", "Noise budget for the scenario");
  add_common(run, o, true);
  auto* sweep = app.add_subcommand("sweep", "Noise budget at every point of the scenario's sweep");
  add_common(sweep, o, true);
  sweep->add_option("--threads", o.threads, "Worker threads, 0 = hardware concurrency");
  auto* validate = app.add_subcommand("validate", "Check a scenario without running it");
  add_common(validate, o, false);
  auto* check = app.add_subcommand("oracle-check", "Compare closed forms with oracle quadrature");
  add_common(check, o, true);
  check->add_option("--tolerance", o.tolerance, "Largest accepted relative error")->capture_default_str();
  auto* example = app.add_subcommand("example", "Write a template scenario (" + list_templates() + ")");
  example->add_option("name", o.template_name, "Template name")->required();
  example->add_option("--output", o.output, "Output file (default: standard output)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? exit_ok : exit_usage;
  }

  try {
    if (run->parsed()) return cmd_run(o, out, err);
    if (sweep->parsed()) return cmd_sweep(o, out, err);
    if (validate->parsed()) return cmd_validate(o, out);
    if (check->parsed()) return cmd_oracle_check(o, out, err);
    return cmd_example(o, out);
  } catch (const Failure& e) {
    err << "error: " << e.what() << '\n';
    return e.code();
  } catch (const ValidationError& e) {
    for (const auto& issue : e.issues()) {
      err << "error: " << issue.field << (issue.field.empty() ? "" : ": ") << issue.message << '\n';
    }
    return exit_invalid;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << '\n';
    return exit_data;
  } catch (const ConvergenceError& e) {
    err << "error: " << e.what() << '\n';
    return exit_check_failed;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return exit_invalid;
  }
}

}  // namespace qcoex::cli
