#include "pcert/app.hpp"
#include "pcert/errors.hpp"
#include "pcert/parser.hpp"
#include "pcert/random_instances.hpp"
#include "pcert/resultant.hpp"

#include <algorithm>
#include <chrono>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

namespace pcert {

int exit_code_for(Verdict v) {
  switch (v) {
  case Verdict::certified:
    return kExitCertified;
  case Verdict::inconclusive:
    return kExitInconclusive;
  case Verdict::precondition_violated:
    return kExitPreconditionViolated;
  }
  return kExitInputError;
}

namespace {

std::string idx(const std::string& key, std::size_t i) { return key + "[" + std::to_string(i) + "]"; }

const Json& require_list(const Json& j, const std::string& key) {
  const Json& a = require(j, key, "job");
  if (!a.is_array())
    throw ValidationError("job." + key, "expected an array");
  return a;
}

BoundOption bound_option(const Json& j, const std::string& where) {
  if (j.is_string() && j.get<std::string>() == "auto")
    return {};
  if (!j.is_number_integer())
    throw ValidationError(where, "expected a positive integer or \"auto\"");
  const long v = j.get<long>();
  if (v < 1)
    throw ValidationError(where, "bound must be >= 1");
  return {false, v};
}

void apply_permutation(Job& job) {
  const auto& perm = job.options.variable_permutation;
  const std::size_t n = job.variables.size();
  if (perm.size() != n)
    throw ValidationError("job.options.variable_permutation", "must list each of the " + std::to_string(n) +
                                                                  " variables exactly once");
  std::map<std::string, std::size_t> old_index;
  for (std::size_t i = 0; i < n; ++i)
    old_index[job.variables[i]] = i;
  std::vector<std::size_t> source(n);
  std::set<std::string> seen;
  for (std::size_t i = 0; i < n; ++i) {
    auto it = old_index.find(perm[i]);
    if (it == old_index.end() || !seen.insert(perm[i]).second)
      throw ValidationError(idx("job.options.variable_permutation", i),
                            "'" + perm[i] + "' is not a declared variable or is repeated");
    source[i] = it->second;
  }
  // Old variable source[i] becomes new variable i.
  std::vector<MultiPoly> images(n);
  for (std::size_t i = 0; i < n; ++i)
    images[source[i]] = MultiPoly::variable(n, i);
  std::vector<std::string> variables(n);
  std::vector<Rational> point(n);
  std::vector<PuiseuxPoly> theta;
  for (std::size_t i = 0; i < n; ++i) {
    variables[i] = job.variables[source[i]];
    point[i] = job.point[source[i]];
    theta.push_back(job.theta[source[i]]);
  }
  for (auto& f : job.system)
    f = compose(f, images);
  job.variables = std::move(variables);
  job.point = std::move(point);
  job.theta = std::move(theta);
}

struct ResolvedBounds {
  BoundValue noether;
  std::optional<BoundValue> degree;
  Json log = Json::array();
  std::vector<std::string> warnings;
};

ResolvedBounds resolve_bounds(const Job& job) {
  ResolvedBounds r;
  const auto& opt = job.options;
  std::optional<BoundOption> degree = opt.degree_bound;
  if (!degree && opt.dim1)
    degree = BoundOption{};
  std::optional<BoundSummary> summary;
  if (opt.noether_bound.automatic || (degree && degree->automatic)) {
    summary = applicable_bounds(job.system);
    for (const auto& b : summary->noether)
      r.log.push_back(to_json(b));
    for (const auto& b : summary->degree)
      r.log.push_back(to_json(b));
    r.warnings = summary->warnings;
  }
  if (opt.noether_bound.automatic)
    r.noether = {summary->best_noether().value, to_string(summary->best_noether().kind)};
  else
    r.noether = {Integer(opt.noether_bound.value), "user"};
  if (degree) {
    if (degree->automatic)
      r.degree = BoundValue{summary->best_degree().value, to_string(summary->best_degree().kind)};
    else
      r.degree = BoundValue{Integer(degree->value), "user"};
  }
  return r;
}

Json bounds_json(const ResolvedBounds& b) {
  Json j{{"noether", to_json(b.noether)}, {"log", b.log}, {"warnings", b.warnings}};
  if (b.degree)
    j["degree"] = to_json(*b.degree);
  return j;
}

BivariateQuery bivariate_query(const Job& job) {
  return {job.system, job.point[0], job.point[1], job.theta[1], job.L};
}

SystemQuery system_query(const Job& job, const ResolvedBounds& b) {
  return {job.system, job.point, job.theta, job.L, b.noether, b.degree, job.options.dim1};
}

bool runs_bivariate(const Job& job) {
  return job.variables.size() == 2 && (job.system.size() == 1 || job.system.size() == 2);
}

Verdict overall(const std::vector<Verdict>& verdicts) {
  if (verdicts.empty())
    return Verdict::precondition_violated;
  if (std::find(verdicts.begin(), verdicts.end(), Verdict::certified) != verdicts.end())
    return Verdict::certified;
  if (std::all_of(verdicts.begin(), verdicts.end(), [](Verdict v) { return v == Verdict::precondition_violated; }))
    return Verdict::precondition_violated;
  return Verdict::inconclusive;
}

std::string join(const std::vector<std::string>& items, const std::string& sep) {
  std::string out;
  for (std::size_t i = 0; i < items.size(); ++i)
    out += (i ? sep : "") + items[i];
  return out;
}

std::string describe_certificate(const Json& c) {
  std::string line = c["kind"].get<std::string>() + ": " + c["verdict"].get<std::string>();
  const std::string verdict = c["verdict"].get<std::string>();
  if (verdict == "precondition-violated")
    return line + " (" + c.value("violation", "") + ")";
  if (verdict == "inconclusive")
    return line + " (unmet: " + join(c["unmet"].get<std::vector<std::string>>(), "; ") + ")";
  if (c.contains("threshold"))
    line += " (threshold " + c["threshold"].get<std::string>() + ", M = " + std::to_string(c["M"].get<long>()) + ")";
  return line;
}

Json error_report(const std::string& kind, const std::string& message, int code) {
  return {{"schema", kSchemaVersion}, {"kind", kind}, {"error", message}, {"exit_code", code}};
}

std::vector<MultiPoly> parse_system(const Json& j, const std::vector<std::string>& variables) {
  const Json& list = require_list(j, "system");
  if (list.empty())
    throw ValidationError("job.system", "empty system");
  std::vector<MultiPoly> out;
  for (std::size_t i = 0; i < list.size(); ++i) {
    const std::string where = idx("job.system", i);
    try {
      out.push_back(parse_polynomial(require_string(list[i], where), variables));
    } catch (const ParseError& e) {
      throw ValidationError(where, e.what());
    }
  }
  return out;
}

std::vector<std::string> parse_variables(const Json& j) {
  const Json& list = require_list(j, "variables");
  if (list.empty())
    throw ValidationError("job.variables", "no variables declared");
  std::vector<std::string> out;
  for (std::size_t i = 0; i < list.size(); ++i)
    out.push_back(require_string(list[i], idx("job.variables", i)));
  try {
    parse_polynomial("0", out);
  } catch (const ParseError& e) {
    throw ValidationError("job.variables", e.what());
  }
  return out;
}

void check_schema(const Json& j, const std::string& where) {
  const Json& s = require(j, "schema", where);
  if (!s.is_string() || s.get<std::string>() != kSchemaVersion)
    throw ValidationError(where + ".schema", std::string("expected \"") + kSchemaVersion + "\"");
}

std::vector<std::string> canonical_system(const Job& job) {
  std::vector<std::string> out;
  for (const auto& f : job.system)
    out.push_back(f.to_string(job.variables));
  return out;
}

} // namespace

Job parse_job(const Json& j, const std::string& fallback_name) {
  if (!j.is_object())
    throw ValidationError("job", "expected an object");
  check_schema(j, "job");
  Job job;
  job.source = j;
  job.name = fallback_name;
  if (auto it = j.find("name"); it != j.end())
    job.name = require_string(*it, "job.name");
  job.variables = parse_variables(j);
  const std::size_t n = job.variables.size();
  job.system = parse_system(j, job.variables);
  for (const auto& s : require_list(j, "system"))
    job.system_text.push_back(s.get<std::string>());

  const Json& point = require_list(j, "point");
  if (point.size() != n)
    throw ValidationError("job.point", "expected " + std::to_string(n) + " coordinates, got " +
                                           std::to_string(point.size()));
  for (std::size_t i = 0; i < n; ++i)
    job.point.push_back(rational_from_json(point[i], idx("job.point", i)));

  const Json& theta = require_list(j, "theta");
  if (theta.size() != n)
    throw ValidationError("job.theta", "expected " + std::to_string(n) + " series, got " +
                                           std::to_string(theta.size()));
  for (std::size_t i = 0; i < n; ++i)
    job.theta.push_back(series_from_json(theta[i], idx("job.theta", i)));

  job.L = rational_from_json(require(j, "L", "job"), "job.L");

  if (auto it = j.find("options"); it != j.end()) {
    const Json& o = *it;
    if (!o.is_object())
      throw ValidationError("job.options", "expected an object");
    for (const auto& [key, value] : o.items()) {
      const std::string where = "job.options." + key;
      if (key == "noether_bound")
        job.options.noether_bound = bound_option(value, where);
      else if (key == "degree_bound")
        job.options.degree_bound = bound_option(value, where);
      else if (key == "dim1")
        job.options.dim1 = require_bool(value, where);
      else if (key == "variable_permutation") {
        if (!value.is_array())
          throw ValidationError(where, "expected an array of variable names");
        for (std::size_t i = 0; i < value.size(); ++i)
          job.options.variable_permutation.push_back(require_string(value[i], idx(where, i)));
      } else
        throw ValidationError(where, "unknown option");
    }
  }
  if (!job.options.variable_permutation.empty())
    apply_permutation(job);
  return job;
}

Json load_json_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in)
    throw ValidationError(path.string(), "cannot open file");
  try {
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw ValidationError(path.string(), std::string("malformed JSON: ") + e.what());
  }
}

Job load_job(const std::filesystem::path& path) { return parse_job(load_json_file(path), path.stem().string()); }

CommandResult certify_job(const Job& job, const RunOptions& options) {
  const auto start = std::chrono::steady_clock::now();
  Json report{{"schema", kSchemaVersion},
              {"kind", "certify-report"},
              {"job", {{"name", job.name}, {"digest", digest(job.source)}}},
              {"variables", job.variables},
              {"system", canonical_system(job)},
              {"L", to_json(job.L)},
              {"dim1_asserted", job.options.dim1}};
  Json point = Json::array();
  for (const auto& p : job.point)
    point.push_back(to_json(p));
  report["point"] = point;
  Json theta = Json::array();
  for (const auto& s : job.theta)
    theta.push_back(to_json(s));
  report["theta"] = theta;

  Json certificates = Json::array();
  std::vector<Verdict> verdicts;
  try {
    const ResolvedBounds bounds = resolve_bounds(job);
    report["bounds"] = bounds_json(bounds);
    if (runs_bivariate(job)) {
      const BivariateQuery q = bivariate_query(job);
      const bool lemma = job.system.size() == 1;
      PrefixCertificate c = lemma ? lemma_prefix_certificate(q) : proposition_common_curve(q);
      if (c.verdict == Verdict::certified) {
        try {
          c.refinement = lemma ? lemma_regular_refinement(q) : proposition_regular_refinement(q);
        } catch (const PreconditionError&) {
          // singular point: no regular refinement
        }
      }
      verdicts.push_back(c.verdict);
      certificates.push_back(to_json(c));
    }
    const SystemQuery sq = system_query(job, bounds);
    const SystemCertificate ni = certify_nonisolated(sq);
    verdicts.push_back(ni.verdict);
    certificates.push_back(to_json(ni));
    if (job.options.dim1) {
      const SystemCertificate cp = certify_curve_prefix(sq);
      verdicts.push_back(cp.verdict);
      certificates.push_back(to_json(cp));
    }
  } catch (const PreconditionError& e) {
    report["error"] = e.what();
    verdicts.clear();
  }
  report["certificates"] = certificates;
  const Verdict v = overall(verdicts);
  report["verdict"] = to_string(v);
  report["exit_code"] = exit_code_for(v);

  std::vector<std::string> lines;
  for (const auto& c : certificates)
    lines.push_back(describe_certificate(c));
  if (report.contains("error"))
    lines.push_back(report["error"].get<std::string>());
  report["summary"] = job.name + ": " + to_string(v) + (lines.empty() ? "" : " [" + join(lines, "; ") + "]");

  if (options.timing) {
    const auto elapsed = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start);
    report["timing_ms"] = elapsed.count();
  }
  return {report, exit_code_for(v)};
}

AuditResult audit_report(const Json& report, const Job& job) {
  try {
    if (require_string(require(report, "kind", "report"), "report.kind") != "certify-report")
      return AuditResult::fail("kind");
    if (report["job"].value("digest", "") != digest(job.source))
      return AuditResult::fail("job.digest");
    if (report.contains("error"))
      return AuditResult::fail("error");
    ResolvedBounds bounds = resolve_bounds(job);
    const Json& stored = require(report, "bounds", "report");
    if (require(stored, "noether", "report.bounds") != to_json(bounds.noether))
      return AuditResult::fail("bounds.noether");
    if (stored.contains("degree") != bounds.degree.has_value() ||
        (bounds.degree && stored["degree"] != to_json(*bounds.degree)))
      return AuditResult::fail("bounds.degree");

    const Json& certs = require(report, "certificates", "report");
    if (!certs.is_array())
      return AuditResult::fail("certificates");
    const std::size_t expected = (runs_bivariate(job) ? 1 : 0) + 1 + (job.options.dim1 ? 1 : 0);
    if (certs.size() != expected)
      return AuditResult::fail("certificates");
    std::vector<Verdict> verdicts;
    for (std::size_t i = 0; i < certs.size(); ++i) {
      const std::string where = idx("certificates", i);
      const std::string kind = require_string(require(certs[i], "kind", where), where + ".kind");
      AuditResult r;
      if (kind == kLemmaPrefix || kind == kCommonCurve) {
        if (!runs_bivariate(job) || i != 0)
          return AuditResult::fail(where + ".kind");
        const PrefixCertificate c = prefix_certificate_from_json(certs[i], where);
        r = audit_prefix_certificate(c, bivariate_query(job));
        verdicts.push_back(c.verdict);
      } else {
        const SystemCertificate c = system_certificate_from_json(certs[i], where);
        r = audit_certificate(c, system_query(job, bounds));
        verdicts.push_back(c.verdict);
      }
      if (!r)
        return AuditResult::fail(where + "." + r.mismatch);
    }
    const Verdict v = overall(verdicts);
    if (require(report, "verdict", "report") != to_string(v))
      return AuditResult::fail("verdict");
    if (require(report, "exit_code", "report") != exit_code_for(v))
      return AuditResult::fail("exit_code");
    return AuditResult::pass();
  } catch (const ValidationError& e) {
    return AuditResult::fail(e.field());
  } catch (const PreconditionError& e) {
    return AuditResult::fail(e.invariant());
  }
}

CommandResult expand_command(const std::string& polynomial, const std::vector<std::string>& variables,
                             const Rational& center, const Rational& y0, const Rational& precision) {
  if (variables.size() != 2)
    return {error_report("expand-report", "expand needs exactly two variables", kExitInputError), kExitInputError};
  MultiPoly q;
  try {
    q = parse_polynomial(polynomial, variables);
  } catch (const ParseError& e) {
    return {error_report("expand-report", e.what(), kExitInputError), kExitInputError};
  }
  Json report{{"schema", kSchemaVersion},
              {"kind", "expand-report"},
              {"polynomial", q.to_string(variables)},
              {"variables", variables},
              {"center", to_json(center)},
              {"y0", to_json(y0)},
              {"precision", to_json(precision)}};
  try {
    Json branches = Json::array();
    for (const auto& b : expand_branches(q, center, y0, precision))
      branches.push_back(to_json(b));
    report["branches"] = branches;
  } catch (const PreconditionError& e) {
    report["error"] = e.what();
    report["exit_code"] = kExitPreconditionViolated;
    return {report, kExitPreconditionViolated};
  }
  report["exit_code"] = 0;
  return {report, 0};
}

CommandResult bounds_command(const Json& input) {
  check_schema(input, "input");
  const std::vector<std::string> variables = parse_variables(input);
  const std::vector<MultiPoly> system = parse_system(input, variables);
  Json report{{"schema", kSchemaVersion}, {"kind", "bounds-report"}, {"variables", variables}};
  std::vector<std::string> canonical;
  for (const auto& f : system)
    canonical.push_back(f.to_string(variables));
  report["system"] = canonical;
  try {
    const BoundSummary s = applicable_bounds(system);
    Json noether = Json::array(), degree = Json::array();
    for (const auto& b : s.noether)
      noether.push_back(to_json(b));
    for (const auto& b : s.degree)
      degree.push_back(to_json(b));
    report["noether"] = noether;
    report["degree"] = degree;
    report["best"] = {{"noether", {{"kind", to_string(s.best_noether().kind)}, {"value", to_string(s.best_noether().value)}}},
                      {"degree", {{"kind", to_string(s.best_degree().kind)}, {"value", to_string(s.best_degree().value)}}}};
    report["warnings"] = s.warnings;
  } catch (const PreconditionError& e) {
    report["error"] = e.what();
    report["exit_code"] = kExitPreconditionViolated;
    return {report, kExitPreconditionViolated};
  }
  report["exit_code"] = 0;
  return {report, 0};
}

CommandResult batch_command(const std::filesystem::path& source, const RunOptions& options,
                            const std::optional<std::filesystem::path>& out_dir) {
  namespace fs = std::filesystem;
  std::vector<fs::path> paths;
  std::vector<std::string> shown;
  if (fs::is_directory(source)) {
    for (const auto& entry : fs::directory_iterator(source))
      if (entry.is_regular_file() && entry.path().extension() == ".json" && entry.path().filename() != "manifest.json")
        paths.push_back(entry.path());
    std::sort(paths.begin(), paths.end());
    for (const auto& p : paths)
      shown.push_back(p.filename().string());
  } else {
    const Json manifest = load_json_file(source);
    check_schema(manifest, "manifest");
    const Json& jobs = require(manifest, "jobs", "manifest");
    if (!jobs.is_array())
      throw ValidationError("manifest.jobs", "expected an array of paths");
    for (std::size_t i = 0; i < jobs.size(); ++i) {
      const std::string rel = require_string(jobs[i], idx("manifest.jobs", i));
      paths.push_back(source.parent_path() / rel);
      shown.push_back(rel);
    }
  }

  struct Entry {
    std::string name, path, error;
    bool ok = false;
    CommandResult result;
  };
  std::vector<Entry> entries(paths.size());
#pragma omp parallel for schedule(dynamic)
  for (std::size_t i = 0; i < paths.size(); ++i) {
    Entry& e = entries[i];
    e.path = shown[i];
    e.name = paths[i].stem().string();
    try {
      const Job job = load_job(paths[i]);
      e.name = job.name;
      e.result = certify_job(job, options);
      e.ok = true;
    } catch (const std::exception& ex) {
      e.error = ex.what();
    }
  }
  std::sort(entries.begin(), entries.end(),
            [](const Entry& a, const Entry& b) { return std::tie(a.name, a.path) < std::tie(b.name, b.path); });

  std::map<std::string, int> counts{{"certified", 0}, {"inconclusive", 0}, {"precondition-violated", 0}, {"error", 0}};
  Json jobs = Json::array();
  for (const auto& e : entries) {
    Json item{{"name", e.name}, {"path", e.path}};
    if (e.ok) {
      const std::string verdict = e.result.report["verdict"].get<std::string>();
      ++counts[verdict];
      item["status"] = "ok";
      item["verdict"] = verdict;
      item["exit_code"] = e.result.exit_code;
      item["report"] = e.result.report;
    } else {
      ++counts["error"];
      item["status"] = "error";
      item["error"] = e.error;
      item["exit_code"] = kExitInputError;
    }
    jobs.push_back(std::move(item));
  }
  if (out_dir) {
    fs::create_directories(*out_dir);
    for (const auto& e : entries)
      if (e.ok) {
        std::ofstream out(*out_dir / (e.name + ".json"));
        out << e.result.report.dump(2) << "\n";
      }
  }
  Json summary = Json::object();
  for (const auto& [k, v] : counts)
    summary[k] = v;
  summary["total"] = entries.size();
  const int code = counts["error"] > 0 ? kExitInputError : 0;
  Json report{{"schema", kSchemaVersion}, {"kind", "batch-report"}, {"jobs", jobs}, {"summary", summary},
              {"exit_code", code}};
  return {report, code};
}

namespace {

struct SelfcheckTally {
  int instances = 0, certified = 0, failures = 0;
  std::vector<std::string> details;
  void fail(const std::string& what) {
    ++failures;
    if (details.size() < 10)
      details.push_back(what);
  }
};

void common_factor_round(std::mt19937_64& rng, SelfcheckTally& tally) {
  const CommonFactorPair p = random_common_factor_pair(rng);
  const std::vector<std::string> names{"x1", "x2"};
  const int d11 = static_cast<int>(p.f1.degree_in(0)), d21 = static_cast<int>(p.f1.degree_in(1));
  const int d12 = static_cast<int>(p.f2.degree_in(0)), d22 = static_cast<int>(p.f2.degree_in(1));
  const int D = d11 * d22 + d12 * d21;
  const Rational L(D + static_cast<int>(rng() % 3));
  const auto branches = rational_branches(p.g, p.xi1, p.xi2, L);
  if (branches.empty())
    return;
  PuiseuxPoly theta = branches[rng() % branches.size()];
  if (rng() % 2 == 0 && L > 0) {
    const Rational gamma = ratio(static_cast<long>(1 + rng() % to_long(floor(Rational(4 * L)))), 2);
    const Rational c(rng() % 2 == 0 ? 1 : -1);
    theta = theta + PuiseuxPoly::monomial(p.xi1, c, gamma);
  }
  ++tally.instances;
  const PrefixCertificate cert = proposition_common_curve({{p.f1, p.f2}, p.xi1, p.xi2, theta, L});
  if (cert.verdict != Verdict::certified)
    return;
  ++tally.certified;
  const Rational bound = cert.ladder[*cert.M];
  // Vertical factors X1 - xi1 carry no branch with X1 free.
  MultiPoly gcd = gcd_bivariate(p.f1, p.f2);
  const MultiPoly vertical = MultiPoly::variable(2, 0) - MultiPoly::constant(2, p.xi1);
  while (auto quotient = divide_bivariate(gcd, vertical))
    gcd = *quotient;
  const std::vector<Rational> xi{p.xi1, p.xi2};
  if (gcd.degree_in(1) > 0 && gcd.evaluate(xi) == 0)
    for (const auto& b : expand_branches(gcd, p.xi1, p.xi2, std::max(bound, Rational(1))))
      if (agree_up_to_conjugation(theta, b.expansion, bound, b.ramification))
        return;
  tally.fail("common curve: f1 = " + p.f1.to_string(names) + ", f2 = " + p.f2.to_string(names) +
             ", theta = " + theta.to_string());
}

void residual_round(std::mt19937_64& rng, SelfcheckTally& tally) {
  const RootedPolynomial r = random_rooted_polynomial(rng);
  const std::vector<std::string> names{"x1", "x2"};
  const Rational precision(6);
  ++tally.instances;
  for (const auto& b : expand_branches(r.q, Rational(0), r.y0, precision)) {
    if (b.status == BranchStatus::irrational_obstruction)
      continue;
    ++tally.certified;
    const std::vector<PuiseuxPoly> arg{PuiseuxPoly::identity(Rational(0)), b.expansion};
    if (!(substitute(r.q, arg).order() > Order(precision)))
      tally.fail("residual: q = " + r.q.to_string(names) + ", branch = " + b.expansion.to_string());
  }
}

Json tally_json(const SelfcheckTally& t, const char* hits) {
  return {{"instances", t.instances}, {hits, t.certified}, {"failures", t.failures}, {"details", t.details}};
}

} // namespace

CommandResult selfcheck_command(std::uint64_t seed, int count) {
  std::mt19937_64 rng(seed);
  SelfcheckTally common, residual;
  for (int i = 0; i < count; ++i)
    common_factor_round(rng, common);
  for (int i = 0; i < count; ++i)
    residual_round(rng, residual);
  const int code = common.failures + residual.failures == 0 ? 0 : kExitSelfcheckFailed;
  Json report{{"schema", kSchemaVersion},
              {"kind", "selfcheck-report"},
              {"seed", seed},
              {"count", count},
              {"common_factor", tally_json(common, "certified")},
              {"residual", tally_json(residual, "branches_checked")},
              {"exit_code", code}};
  return {report, code};
}

std::string render_text(const Json& report) {
  std::ostringstream out;
  const std::string kind = report.value("kind", "");
  if (report.contains("error") && !report.contains("certificates") && !report.contains("branches"))
    out << kind << ": error: " << report["error"].get<std::string>() << "\n";
  if (kind == "certify-report") {
    out << "job " << report["job"]["name"].get<std::string>() << " (" << report["job"]["digest"].get<std::string>()
        << ")\n";
    out << "verdict: " << report["verdict"].get<std::string>() << "\n";
    for (const auto& c : report["certificates"]) {
      out << "  " << describe_certificate(c) << "\n";
      std::vector<std::string> orders;
      for (const auto& o : c["orders"])
        orders.push_back(o.get<std::string>());
      if (!orders.empty())
        out << "    orders: " << join(orders, ", ") << "\n";
      if (c.contains("certified_prefix") && c.contains("M")) {
        const Json& p = c["certified_prefix"];
        std::vector<std::string> parts;
        for (const auto& s : p.is_array() ? p : Json::array({p}))
          parts.push_back(series_from_json(s, "prefix").to_string());
        out << "    certified prefix: (" << join(parts, ", ") << ")\n";
      }
    }
    if (report.contains("error"))
      out << "  error: " << report["error"].get<std::string>() << "\n";
  } else if (kind == "expand-report" && report.contains("branches")) {
    out << "branches of " << report["polynomial"].get<std::string>() << " through (" << report["center"].get<std::string>()
        << ", " << report["y0"].get<std::string>() << "):\n";
    for (const auto& b : report["branches"])
      out << "  " << series_from_json(b["expansion"], "expansion").to_string() << "  [" << b["status"].get<std::string>()
          << ", residual order " << b["residual_order"].get<std::string>() << ", ramification "
          << b["ramification"].get<std::string>() << ", multiplicity " << b["multiplicity"].get<int>() << "]\n";
  } else if (kind == "bounds-report" && report.contains("noether")) {
    for (const char* family : {"noether", "degree"})
      for (const auto& b : report[family])
        out << b["kind"].get<std::string>() << " = " << b["value"].get<std::string>() << "  ("
            << b["formula"].get<std::string>() << ")\n";
    for (const auto& w : report["warnings"])
      out << "warning: " << w.get<std::string>() << "\n";
  } else if (kind == "batch-report") {
    for (const auto& j : report["jobs"])
      out << j["name"].get<std::string>() << "  "
          << (j["status"] == "ok" ? j["verdict"].get<std::string>() : "error: " + j["error"].get<std::string>()) << "\n";
    const Json& s = report["summary"];
    out << "total " << s["total"] << ": certified " << s["certified"] << ", inconclusive " << s["inconclusive"]
        << ", precondition-violated " << s["precondition-violated"] << ", errors " << s["error"] << "\n";
  } else if (kind == "selfcheck-report") {
    out << "common-factor pairs: " << report["common_factor"]["instances"] << " instances, "
        << report["common_factor"]["certified"] << " certified, " << report["common_factor"]["failures"]
        << " failures\n";
    out << "branch residuals: " << report["residual"]["instances"] << " polynomials, "
        << report["residual"]["branches_checked"] << " branches, " << report["residual"]["failures"] << " failures\n";
    for (const char* part : {"common_factor", "residual"})
      for (const auto& d : report[part]["details"])
        out << "  " << d.get<std::string>() << "\n";
  } else if (!report.contains("error")) {
    out << report.dump(2) << "\n";
  }
  return out.str();
}

} // namespace pcert
