#include <gtest/gtest.h>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <map>
#include <nlohmann/json.hpp>
#include <sstream>

#include "qcoex/scenario_io.hpp"
#include "qcoex_cli/cli.hpp"

using namespace qcoex;
namespace cx = qcoex::cli;
namespace fs = std::filesystem;

namespace {

const std::string data_dir = QCOEX_TEST_DATA;

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result invoke(std::vector<std::string> args) {
  args.insert(args.begin(), "qcoex");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = cx::run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

fs::path scratch(const std::string& name) {
  const auto dir = fs::temp_directory_path() / "qcoex_cli_test";
  fs::create_directories(dir);
  return dir / name;
}

std::string read(const fs::path& p) {
  std::ifstream in(p);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

// Golden scenario with absolute CSV paths so it can live anywhere.
std::string golden_text(const std::string& extra = "") {
  auto text = read(data_dir + "/fwm_golden.json");
  for (const std::string csv : {"flat_attenuation.csv", "flat_sprs.csv"}) {
    text.replace(text.find("\"" + csv + "\""), csv.size() + 2, "\"" + data_dir + "/" + csv + "\"");
  }
  if (!extra.empty()) text.insert(text.rfind('}'), extra);
  return text;
}

fs::path write(const std::string& name, const std::string& text) {
  const auto p = scratch(name);
  std::ofstream(p) << text;
  return p;
}

// mechanism -> psd for one axis value.
std::map<std::string, double> csv_rows(const std::string& csv, const std::string& axis) {
  std::map<std::string, double> rows;
  std::istringstream in(csv);
  std::string line;
  std::getline(in, line);
  while (std::getline(in, line)) {
    std::istringstream cells(line);
    std::string a, m, psd;
    std::getline(cells, a, ',');
    std::getline(cells, m, ',');
    std::getline(cells, psd, ',');
    if (a == axis) rows[m] = std::stod(psd);
  }
  return rows;
}

}  // namespace

TEST(Cli, SweepMatchesIndependentGolden) {
  const auto r = invoke({"sweep", "--config", data_dir + "/fwm_golden.json", "--threads", "3"});
  ASSERT_EQ(r.code, 0) << r.err;
  // Values from an independent mpmath evaluation of the same closed forms.
  const std::map<std::string, std::map<std::string, double>> golden = {
      {"5",
       {{"sprs_co", 1.588656469448563e-21},
        {"co_leakage", 7.943282347242815e-21},
        {"fwm", 2.947140420965782e-19},
        {"background", 1e-21}}},
      {"15",
       {{"sprs_co", 3.0071234017636337e-21},
        {"co_leakage", 5.0118723362727229e-21},
        {"fwm", 2.2526969538897183e-20},
        {"background", 1e-21}}},
      {"25",
       {{"sprs_co", 3.1622776601683793e-21},
        {"co_leakage", 3.1622776601683793e-21},
        {"fwm", 7.1716991896380054e-20},
        {"background", 1e-21}}}};
  for (const auto& [axis, expected] : golden) {
    const auto rows = csv_rows(r.out, axis);
    ASSERT_EQ(rows.size(), expected.size()) << axis;
    for (const auto& [m, v] : expected) EXPECT_NEAR(rows.at(m) / v, 1.0, 1e-10) << axis << " " << m;
  }
}

TEST(Cli, RunIsDeterministic) {
  const auto a = invoke({"run", "--config", data_dir + "/fwm_golden.json"});
  const auto b = invoke({"run", "--config", data_dir + "/fwm_golden.json"});
  ASSERT_EQ(a.code, 0);
  EXPECT_EQ(a.out, b.out);
  EXPECT_TRUE(a.err.empty());
  const auto out = scratch("run.csv");
  EXPECT_EQ(invoke({"run", "--config", data_dir + "/fwm_golden.json", "--output", out.string()}).code, 0);
  EXPECT_EQ(read(out), a.out);
}

TEST(Cli, JsonOutputParses) {
  const auto r = invoke({"run", "--config", data_dir + "/fwm_golden.json", "--format", "json"});
  ASSERT_EQ(r.code, 0);
  const auto doc = nlohmann::json::parse(r.out);
  EXPECT_EQ(doc["schema_version"], 1);
  EXPECT_EQ(doc["budget"]["entries"].size(), 6u);
  EXPECT_EQ(doc["budget"]["metadata"]["fwm_products"].size(), 4u);
  const auto sweep = invoke({"sweep", "--config", data_dir + "/fwm_golden.json", "--format", "json"});
  ASSERT_EQ(sweep.code, 0);
  EXPECT_EQ(nlohmann::json::parse(sweep.out)["points"].size(), 3u);
}

TEST(Cli, EmptyPlanSingleRow) {
  const auto r = invoke({"run", "--config", data_dir + "/empty_plan.json"});
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "axis,mechanism,psd_w_per_hz,power_w,photons_per_s\n,background,2e-21,2e-11,155027239.81943008\n");
}

TEST(Cli, ExitCodes) {
  const auto range = invoke({"run", "--config", data_dir + "/out_of_range.json"});
  EXPECT_EQ(range.code, cx::exit_invalid);
  EXPECT_NE(range.err.find("attenuation profile [1500, 1600] nm"), std::string::npos) << range.err;
  EXPECT_TRUE(range.out.empty());

  EXPECT_EQ(invoke({"run", "--config", data_dir + "/bad_fields.json"}).code, cx::exit_invalid);
  EXPECT_EQ(invoke({"run", "--config", data_dir + "/malformed.json"}).code, cx::exit_data);
  EXPECT_EQ(invoke({"run", "--config", data_dir + "/missing.json"}).code, cx::exit_no_input);
  EXPECT_EQ(invoke({"run", "--config", data_dir + "/empty_plan.json", "--output", "/nonexistent/dir/x.csv"}).code,
            cx::exit_cant_create);
  EXPECT_EQ(invoke({"run", "--config", data_dir + "/empty_plan.json", "--format", "xml"}).code, cx::exit_usage);
  EXPECT_EQ(invoke({"run"}).code, cx::exit_usage);
  EXPECT_EQ(invoke({}).code, cx::exit_usage);
  EXPECT_EQ(invoke({"launch"}).code, cx::exit_usage);
  EXPECT_EQ(invoke({"sweep", "--config", data_dir + "/empty_plan.json"}).code, cx::exit_invalid);
  const auto help = invoke({"--help"});
  EXPECT_EQ(help.code, 0);
  EXPECT_NE(help.out.find("oracle-check"), std::string::npos);
}

TEST(Cli, Validate) {
  const auto ok = invoke({"validate", "--config", data_dir + "/fwm_golden.json"});
  EXPECT_EQ(ok.code, 0);
  EXPECT_NE(ok.out.find("fwm-golden"), std::string::npos);
  const auto bad = invoke({"validate", "--config", data_dir + "/bad_fields.json"});
  EXPECT_EQ(bad.code, cx::exit_invalid);
  EXPECT_NE(bad.err.find("fiber.length_km"), std::string::npos);
  EXPECT_NE(bad.err.find("classical[0].kind"), std::string::npos);
}

TEST(Cli, OracleCheck) {
  const auto pass = invoke({"oracle-check", "--config", data_dir + "/fwm_golden.json"});
  EXPECT_EQ(pass.code, 0) << pass.out << pass.err;
  EXPECT_NE(pass.out.find("mechanism,item,closed_form,oracle,relative_error,status"), std::string::npos);
  EXPECT_EQ(pass.out.find(",fail"), std::string::npos);

  const auto coarse = write("coarse.json", golden_text(R"(, "oracle": {"max_doublings": 2, "initial_steps": 2})"));
  const auto fail = invoke({"oracle-check", "--config", coarse.string()});
  EXPECT_NE(fail.code, 0);
  EXPECT_NE(fail.out.find(",error"), std::string::npos);
  EXPECT_NE(fail.err.find("error:"), std::string::npos);

  const auto loose = invoke({"oracle-check", "--config", data_dir + "/fwm_golden.json", "--tolerance", "1"});
  EXPECT_EQ(loose.code, 0);
  EXPECT_EQ(invoke({"oracle-check", "--config", data_dir + "/fwm_golden.json", "--tolerance", "0"}).code, cx::exit_usage);
  const auto json = invoke({"oracle-check", "--config", data_dir + "/fwm_golden.json", "--format", "json"});
  EXPECT_TRUE(nlohmann::json::parse(json.out)["ok"].get<bool>());
}

TEST(Cli, Templates) {
  for (const auto& name : cx::template_names()) {
    const auto path = scratch(name + ".json");
    const auto made = invoke({"example", name, "--output", path.string()});
    ASSERT_EQ(made.code, 0) << made.err;
    EXPECT_EQ(invoke({"validate", "--config", path.string()}).code, 0) << name;
    EXPECT_EQ(invoke({"run", "--config", path.string()}).code, 0) << name;
    const auto s = load_scenario(path);
    EXPECT_DOUBLE_EQ(s.fiber.beta2().ps2_per_km(), -21.1);
    EXPECT_DOUBLE_EQ(s.fiber.gamma().per_w_km(), 1.3);
    EXPECT_NEAR(s.fiber.rayleigh().db_per_km(), -42.32, 1e-12);
  }
  const auto mb = load_scenario(scratch("multiband-sprs.json"));
  const auto b = run_budget(mb);
  EXPECT_TRUE(b[Mechanism::rayleigh_ase].active);
  EXPECT_TRUE(b[Mechanism::sprs_counter].active);

  const auto fwm = load_scenario(scratch("fwm-length-sweep.json"));
  ASSERT_EQ(fwm.plan.size(), 4u);
  for (const auto& c : fwm.plan) {
    const double offset = (c.center - fwm.quantum.center).ghz();
    EXPECT_NEAR(std::abs(offset), std::abs(offset) < 75 ? 50.0 : 100.0, 1e-6);
  }
  ASSERT_TRUE(fwm.sweep);
  EXPECT_EQ(fwm.sweep->axis, SweepAxis::length);

  const auto unknown = invoke({"example", "fig3"});
  EXPECT_EQ(unknown.code, cx::exit_usage);
  EXPECT_NE(unknown.err.find("multiband-sprs"), std::string::npos);
  EXPECT_NE(unknown.err.find("fwm-length-sweep"), std::string::npos);
  const auto stdout_copy = invoke({"example", "multiband-sprs"});
  EXPECT_EQ(stdout_copy.out, read(scratch("multiband-sprs.json")));
}
