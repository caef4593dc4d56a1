#include "helpers.hpp"
#include "pcert/app.hpp"
#include "pcert/errors.hpp"

#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <sys/wait.h>

using namespace pcert;
namespace fs = std::filesystem;

namespace {

const fs::path kCorpus = PCERT_CORPUS_DIR;

std::string slurp(const fs::path& p) {
  std::ifstream in(p);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Json base_job() {
  return Json::parse(R"({
    "schema": "1", "name": "t", "variables": ["x1", "x2"], "system": ["x2 - x1"],
    "point": ["0", "0"],
    "theta": [{"center": "0", "terms": [{"exp": "1", "coeff": "1"}]},
              {"center": "0", "terms": [{"exp": "1", "coeff": "1"}]}],
    "L": "3"
  })");
}

int run_cli(const std::string& args, const fs::path& out) {
  const std::string cmd = std::string(PCERT_CLI) + " " + args + " > " + out.string() + " 2>&1";
  const int status = std::system(cmd.c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

fs::path scratch(const std::string& name) {
  const fs::path dir = fs::temp_directory_path() / "pcert_cli_tests";
  fs::create_directories(dir);
  return dir / name;
}

} // namespace

TEST_CASE("certify: corpus verdicts") {
  const auto line = certify_job(load_job(kCorpus / "ex-line-prefix.json"));
  CHECK(line.exit_code == 0);
  CHECK(line.report["verdict"] == "certified");
  const Json& cp = line.report["certificates"][1];
  CHECK(cp["kind"] == "curve-prefix");
  CHECK(cp["threshold"] == "1");
  CHECK(cp["M"] == 1);
  CHECK(series_from_json(cp["certified_prefix"][1], "p") == testing::T());
  CHECK(series_from_json(cp["certified_prefix"][2], "p").is_zero());

  const auto diverging = certify_job(load_job(kCorpus / "ex-diverging-branches.json"));
  CHECK(diverging.exit_code == 10);
  CHECK(diverging.report["certificates"][0]["orders"] == Json::parse(R"(["inf", "2"])"));

  const auto lemma = certify_job(load_job(kCorpus / "ex-lemma-sharp.json"));
  CHECK(lemma.report["certificates"][0]["kind"] == "lemma-prefix");
  CHECK(lemma.report["certificates"][0]["M"] == 0);
  CHECK(lemma.report["certificates"][0]["orders"][0] == "13/2");

  const auto curve = certify_job(load_job(kCorpus / "ex-common-curve.json"));
  CHECK(curve.report["certificates"][0]["threshold"] == "8/3");
  CHECK(curve.exit_code == 0);

  const auto sharp = certify_job(load_job(kCorpus / "ex-noether-sharp.json"));
  CHECK(sharp.exit_code == 10);
  CHECK(sharp.report["certificates"][0]["orders"] == Json::parse(R"(["2", "inf", "inf"])"));
}

TEST_CASE("certify: reports match golden files and pass the audit") {
  for (const char* name : {"ex-lemma-sharp", "ex-diverging-branches", "ex-common-curve", "ex-noether-sharp",
                           "ex-line-prefix"}) {
    const Job job = load_job(kCorpus / (std::string(name) + ".json"));
    const auto r = certify_job(job);
    CHECK_MESSAGE(r.report.dump(2) + "\n" == slurp(kCorpus / "golden" / (std::string(name) + ".json")), name);
    const Json reparsed = Json::parse(r.report.dump());
    const AuditResult audit = audit_report(reparsed, job);
    CHECK_MESSAGE(audit.ok, name, " ", audit.mismatch);
  }
}

TEST_CASE("certify: validation errors") {
  Json j = base_job();
  j["system"] = Json::array();
  CHECK_THROWS_AS(parse_job(j, "x"), ValidationError);

  j = base_job();
  j["system"] = {"x2 - y"};
  try {
    parse_job(j, "x");
    FAIL("expected a validation error");
  } catch (const ValidationError& e) {
    CHECK(e.field() == "job.system[0]");
  }

  j = base_job();
  j["point"] = {"0"};
  CHECK_THROWS_AS(parse_job(j, "x"), ValidationError);
  j = base_job();
  j["theta"][1]["terms"][0]["exp"] = 1.5;
  CHECK_THROWS_AS(parse_job(j, "x"), ValidationError);
  j = base_job();
  j["schema"] = "2";
  CHECK_THROWS_AS(parse_job(j, "x"), ValidationError);
  j = base_job();
  j["options"] = {{"noether_bound", 0}};
  CHECK_THROWS_AS(parse_job(j, "x"), ValidationError);
  j = base_job();
  j["options"] = {{"colour", "red"}};
  CHECK_THROWS_AS(parse_job(j, "x"), ValidationError);
  j = base_job();
  j.erase("L");
  CHECK_THROWS_AS(parse_job(j, "x"), ValidationError);
  j = base_job();
  j["variables"] = {"x1", "x1"};
  CHECK_THROWS_AS(parse_job(j, "x"), ValidationError);
}

TEST_CASE("certify: dispatch and precondition verdicts") {
  Json j = base_job();
  auto r = certify_job(parse_job(j, "x"));
  CHECK(r.report["certificates"].size() == 2);
  CHECK(r.report["certificates"][0]["kind"] == "lemma-prefix");
  CHECK(r.report["certificates"][0].contains("refinement"));
  CHECK(r.report["bounds"]["noether"]["source"] == "bezout-noether");

  j["point"] = {"0", "1"};
  r = certify_job(parse_job(j, "x"));
  CHECK(r.exit_code == 2);
  CHECK(r.report["verdict"] == "precondition-violated");

  j = base_job();
  j["variables"] = {"x1", "x2", "x3"};
  j["system"] = {"x2 - x1", "x3"};
  j["point"] = {"0", "0", "0"};
  j["theta"].push_back({{"center", "0"}, {"terms", Json::array()}});
  j["options"] = {{"dim1", true}};
  r = certify_job(parse_job(j, "x"));
  CHECK(r.report["certificates"].size() == 2);
  CHECK(r.report["certificates"][1]["kind"] == "curve-prefix");
  CHECK(r.report["bounds"].contains("degree"));
}

TEST_CASE("certify: variable permutation") {
  // The curve x1 = x2^2 has free variable x2; listing x2 first puts it in front.
  Json j = Json::parse(R"({
    "schema": "1", "name": "perm", "variables": ["x1", "x2"], "system": ["x1 - x2^2"],
    "point": ["0", "0"],
    "theta": [{"center": "0", "terms": [{"exp": "2", "coeff": "1"}]},
              {"center": "0", "terms": [{"exp": "1", "coeff": "1"}]}],
    "L": "4", "options": {"variable_permutation": ["x2", "x1"], "noether_bound": 2}
  })");
  const Job job = parse_job(j, "perm");
  CHECK(job.variables == std::vector<std::string>{"x2", "x1"});
  CHECK(job.system[0] == testing::P("x2 - x1^2"));
  const auto r = certify_job(job);
  CHECK(r.report["verdict"] == "certified");
  CHECK(r.report["system"][0] == "-x2^2 + x1");
  CHECK(audit_report(r.report, job));
  j["options"]["variable_permutation"] = {"x2", "x2"};
  CHECK_THROWS_AS(parse_job(j, "perm"), ValidationError);
}

TEST_CASE("audit_report rejects edited reports") {
  const Job job = load_job(kCorpus / "ex-common-curve.json");
  const Json report = certify_job(job).report;
  Json bad = report;
  bad["certificates"][0]["M"] = 1;
  CHECK(audit_report(bad, job).mismatch == "certificates[0].M");
  bad = report;
  bad["verdict"] = "inconclusive";
  CHECK(audit_report(bad, job).mismatch == "verdict");
  bad = report;
  bad["bounds"]["noether"]["value"] = "2";
  CHECK(audit_report(bad, job).mismatch == "bounds.noether");
  bad = report;
  bad["certificates"][0]["orders"][0] = "oops";
  CHECK_FALSE(audit_report(bad, job));
}

TEST_CASE("expand subcommand") {
  const std::vector<std::string> vars{"x1", "x2"};
  const auto cusp = expand_command("x2^2 - x1^3", vars, 0, 0, 5);
  CHECK(cusp.exit_code == 0);
  REQUIRE(cusp.report["branches"].size() == 1);
  CHECK(cusp.report["branches"][0]["ramification"] == "2");

  const auto linear = expand_command("x2 - 3*x1", vars, 0, 0, 5);
  REQUIRE(linear.report["branches"].size() == 1);
  CHECK(linear.report["branches"][0]["status"] == "exact");

  const auto irr = expand_command("x2^2 - 2*x1^2", vars, 0, 0, 5);
  CHECK(irr.report["branches"][0]["status"] == "irrational-obstruction");

  CHECK(expand_command("x2 +", vars, 0, 0, 5).exit_code == 1);
  CHECK(expand_command("x2 - 1", vars, 0, 0, 5).exit_code == 2);
}

TEST_CASE("bounds subcommand") {
  const auto dense = bounds_command(Json::parse(R"({"schema": "1", "variables": ["x", "y"],
                                                   "system": ["x^2 + y^2 + x*y + x + y + 1", "x^2 - y^2 + 3"]})"));
  CHECK(dense.exit_code == 0);
  CHECK(dense.report["noether"][0]["kind"] == "bezout-noether");
  CHECK(dense.report["noether"][0]["value"] == "4");
  CHECK(dense.report["degree"][0]["value"] == "4");
  CHECK(dense.report["degree"][1]["value"] == "4");
  CHECK(dense.report["noether"][1]["value"] == "64");

  const auto lin = bounds_command(Json::parse(R"({"schema": "1", "variables": ["x", "y"], "system": ["x - y", "x + 1"]})"));
  for (const auto& b : lin.report["degree"])
    CHECK(b["value"] == "1");
  CHECK(lin.report["best"]["noether"]["value"] == "1");

  const auto five = bounds_command(Json::parse(R"({"schema": "1", "variables": ["a", "b", "c", "d", "e"],
                                                  "system": ["a*b - c", "d^2 - e"]})"));
  CHECK(five.report["noether"].size() == 1);
  CHECK(five.report["warnings"].size() == 1);
}

TEST_CASE("batch subcommand") {
  const auto r = batch_command(kCorpus / "manifest.json");
  CHECK(r.exit_code == 0);
  REQUIRE(r.report["jobs"].size() == 5);
  CHECK(r.report["jobs"][0]["name"] == "ex-common-curve");
  CHECK(r.report["summary"]["certified"] == 3);
  CHECK(r.report["summary"]["inconclusive"] == 2);
  CHECK(batch_command(kCorpus / "manifest.json").report.dump() == r.report.dump());

  const fs::path empty = scratch("empty_manifest.json");
  std::ofstream(empty) << R"({"schema": "1", "jobs": []})";
  const auto e = batch_command(empty);
  CHECK(e.exit_code == 0);
  CHECK(e.report["summary"]["total"] == 0);

  const fs::path dir = scratch("mixed");
  fs::create_directories(dir);
  fs::copy_file(kCorpus / "ex-line-prefix.json", dir / "good.json", fs::copy_options::overwrite_existing);
  std::ofstream(dir / "broken.json") << R"({"schema": "1", "name": "broken", "variables": ["x1"]})";
  const auto m = batch_command(dir);
  CHECK(m.exit_code != 0);
  REQUIRE(m.report["jobs"].size() == 2);
  CHECK(m.report["jobs"][0]["status"] == "error");
  CHECK(m.report["jobs"][1]["status"] == "ok");
}

TEST_CASE("command-line exit codes") {
  const fs::path out = scratch("cli_out.txt");
  CHECK(run_cli("certify " + (kCorpus / "ex-line-prefix.json").string(), out) == 0);
  CHECK(Json::parse(slurp(out))["verdict"] == "certified");
  CHECK(run_cli("certify " + (kCorpus / "ex-noether-sharp.json").string(), out) == 10);
  CHECK(run_cli("--format text certify " + (kCorpus / "ex-common-curve.json").string(), out) == 0);
  CHECK(slurp(out).find("verdict: certified") != std::string::npos);
  CHECK(run_cli("certify /nonexistent.json", out) == 1);
  CHECK(run_cli("expand --poly 'x2^2 - x1^3' --precision 4", out) == 0);
  CHECK(run_cli("selfcheck --count 5", out) == 0);
  CHECK(run_cli("batch " + (kCorpus / "manifest.json").string(), out) == 0);
  CHECK(run_cli("", out) != 0);
}
