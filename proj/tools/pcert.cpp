// Command-line front end: certify, expand, bounds, batch, selfcheck.
#include "pcert/app.hpp"
#include "pcert/errors.hpp"

#include <CLI11.hpp>

#include <iostream>

namespace {

using pcert::Json;

int emit(const pcert::CommandResult& r, const std::string& format) {
  if (format == "text")
    std::cout << pcert::render_text(r.report);
  else
    std::cout << r.report.dump(2) << "\n";
  return r.exit_code;
}

std::vector<std::string> split_names(const std::string& text) {
  std::vector<std::string> out;
  std::string current;
  for (char c : text) {
    if (c == ',') {
      out.push_back(current);
      current.clear();
    } else if (c != ' ') {
      current += c;
    }
  }
  out.push_back(current);
  return out;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact certificates for curves of solutions through a point of a polynomial system"};
  app.require_subcommand(1);
  app.fallthrough();

  std::string format = "json";
  std::uint64_t seed = 1;
  bool timing = false;
  app.add_option("--format", format, "Report format")->check(CLI::IsMember({"json", "text"}));
  app.add_option("--seed", seed, "Seed for randomized checks");
  app.add_flag("--timing", timing, "Add wall-clock timing to reports (breaks byte-identical output)");

  auto* certify = app.add_subcommand("certify", "Run every applicable certificate on a job file");
  std::string job_path;
  certify->add_option("job", job_path, "Job file (JSON)")->required();

  auto* expand = app.add_subcommand("expand", "Newton-Puiseux branches of q through (center, y0)");
  std::string poly, vars = "x1,x2", center = "0", y0 = "0", precision = "5";
  expand->add_option("--poly", poly, "Polynomial q(x1, x2)")->required();
  expand->add_option("--vars", vars, "Variable names, comma separated");
  expand->add_option("--center", center, "xi1");
  expand->add_option("--y0", y0, "xi2");
  expand->add_option("--precision", precision, "Expansion precision");

  auto* bounds = app.add_subcommand("bounds", "Noether-exponent and degree bounds of a system");
  std::string system_path;
  bounds->add_option("system", system_path, "System file (JSON)")->required();

  auto* batch = app.add_subcommand("batch", "Certify every job of a manifest or directory");
  std::string batch_source, out_dir;
  batch->add_option("source", batch_source, "Manifest file or directory")->required();
  batch->add_option("--out", out_dir, "Write each job report to this directory");

  auto* selfcheck = app.add_subcommand("selfcheck", "Randomized consistency checks");
  int count = 50;
  selfcheck->add_option("--count", count, "Instances per check")->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : pcert::kExitInputError;
  }

  const pcert::RunOptions run{timing};
  try {
    if (*certify)
      return emit(pcert::certify_job(pcert::load_job(job_path), run), format);
    if (*expand)
      return emit(pcert::expand_command(poly, split_names(vars), pcert::parse_rational(center),
                                        pcert::parse_rational(y0), pcert::parse_rational(precision)),
                  format);
    if (*bounds)
      return emit(pcert::bounds_command(pcert::load_json_file(system_path)), format);
    if (*batch) {
      std::optional<std::filesystem::path> out;
      if (!out_dir.empty())
        out = out_dir;
      return emit(pcert::batch_command(batch_source, run, out), format);
    }
    if (*selfcheck)
      return emit(pcert::selfcheck_command(seed, count), format);
  } catch (const pcert::ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return pcert::kExitInputError;
  } catch (const pcert::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return pcert::kExitInputError;
  } catch (const pcert::PreconditionError& e) {
    std::cerr << "precondition violated: " << e.what() << "\n";
    return pcert::kExitPreconditionViolated;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return pcert::kExitInputError;
  }
  return pcert::kExitInputError;
}
