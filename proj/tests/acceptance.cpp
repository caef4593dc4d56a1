// Acceptance criteria 1-10: one PASS/FAIL line each, nonzero exit on any failure.
#include "pcert/app.hpp"
#include "pcert/bivariate_certify.hpp"
#include "pcert/bounds.hpp"
#include "pcert/multivar_certify.hpp"
#include "pcert/newton_puiseux.hpp"
#include "pcert/parser.hpp"
#include "pcert/random_instances.hpp"
#include "pcert/resultant.hpp"

#include <chrono>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>

using namespace pcert;
namespace fs = std::filesystem;

namespace {

const fs::path kCorpus = PCERT_CORPUS_DIR;

MultiPoly P(const std::string& text, std::size_t n = 2) { return parse_polynomial(text, default_variable_names(n)); }

PuiseuxPoly one_plus_t_pow(const Rational& gamma) {
  return PuiseuxPoly(0, {{Rational(0), Rational(1)}, {gamma, Rational(1)}});
}

std::string pw(const std::string& base, int e) { return "(" + base + ")^" + std::to_string(e); }

struct Outcome {
  bool pass;
  std::string detail;
};

// 1. Lemma sharpness on q = t^d1 (Y - 1)^d2, theta = 1 + t^gamma.
Outcome lemma_sharpness() {
  long checked = 0, wrong = 0;
  for (int d1 = 1; d1 <= 4; ++d1)
    for (int d2 = 1; d2 <= 4; ++d2) {
      const MultiPoly q = P("x1^" + std::to_string(d1) + "*" + pw("x2 - 1", d2));
      for (int L = d1; L <= d1 + 6; ++L)
        for (int k = 1; k <= 6 * (L + 1); ++k) {
          const Rational gamma = ratio(k, 6);
          const auto cert = lemma_prefix_certificate({{q}, 0, 1, one_plus_t_pow(gamma), Rational(L)});
          const bool expect = gamma > ratio(L - d1, d2);
          const Order ord(Rational(d1) + gamma * d2);
          ++checked;
          if ((cert.verdict == Verdict::certified) != expect || cert.orders.front() != ord)
            ++wrong;
        }
    }
  return {wrong == 0, std::to_string(checked) + " grid points, " + std::to_string(wrong) + " mismatches"};
}

// 2. Proposition sharpness on f_j = t^d1j (Y - 1)^d2 with L = (d11 + d12) d2.
Outcome proposition_sharpness() {
  long checked = 0, wrong = 0;
  for (int d11 = 1; d11 <= 3; ++d11)
    for (int d12 = 1; d12 <= 3; ++d12)
      for (int d2 = 1; d2 <= 3; ++d2) {
        const MultiPoly f1 = P("x1^" + std::to_string(d11) + "*" + pw("x2 - 1", d2));
        const MultiPoly f2 = P("x1^" + std::to_string(d12) + "*" + pw("x2 - 1", d2));
        const int L = (d11 + d12) * d2;
        const Rational boundary = ratio(L - std::min(d11, d12), d2);
        for (int k = 1; k <= 6 * L; ++k) {
          const Rational gamma = ratio(k, 6);
          const auto cert = proposition_common_curve({{f1, f2}, 0, 1, one_plus_t_pow(gamma), Rational(L)});
          ++checked;
          if ((cert.verdict == Verdict::certified) != (gamma > boundary))
            ++wrong;
        }
      }
  return {wrong == 0, std::to_string(checked) + " grid points, " + std::to_string(wrong) + " mismatches"};
}

// 3. f_j = X2 - 1 + X1 + X1^dj never share a curve for d1 != d2.
Outcome negative_control() {
  long checked = 0, certified = 0;
  for (int d1 = 1; d1 <= 4; ++d1)
    for (int d2 = 1; d2 <= 4; ++d2) {
      if (d1 == d2)
        continue;
      const MultiPoly f1 = P("x2 - 1 + x1 + x1^" + std::to_string(d1));
      const MultiPoly f2 = P("x2 - 1 + x1 + x1^" + std::to_string(d2));
      const PuiseuxPoly branch(0, {{Rational(0), Rational(1)}, {Rational(1), Rational(-1)}, {Rational(d1), Rational(-1)}});
      const int gate = f1.degree_in(0) * f2.degree_in(1) + f2.degree_in(0) * f1.degree_in(1);
      for (int N = 0; N <= d1 + 1; ++N)
        for (int L = gate; L <= gate + 4; ++L) {
          const auto cert = proposition_common_curve({{f1, f2}, 0, 1, branch.truncated(Rational(N)), Rational(L)});
          ++checked;
          if (cert.verdict == Verdict::certified)
            ++certified;
        }
    }
  return {certified == 0, std::to_string(checked) + " queries, " + std::to_string(certified) + " certified"};
}

// 4. (x1^e, x2, ..., xn) at Theta = (t, 0, ..., 0).
Outcome noether_sharpness() {
  long checked = 0, wrong = 0;
  for (std::size_t n : {2u, 3u})
    for (int e = 1; e <= 4; ++e) {
      SystemQuery q;
      q.system.push_back(pow(MultiPoly::variable(n, 0), e));
      q.theta.push_back(PuiseuxPoly::identity(0));
      q.point.assign(n, 0);
      for (std::size_t i = 1; i < n; ++i) {
        q.system.push_back(MultiPoly::variable(n, i));
        q.theta.push_back(PuiseuxPoly(0));
      }
      q.noether_bound = {Integer(e), "user"};
      for (int L = e; L <= e + 8; ++L) {
        q.L = L;
        const auto cert = certify_nonisolated(q);
        ++checked;
        if (cert.verdict != Verdict::inconclusive || cert.orders.front() != Order(Rational(e)))
          ++wrong;
      }
    }
  return {wrong == 0, std::to_string(checked) + " queries, " + std::to_string(wrong) + " wrong"};
}

// 5. ((x1 - x2)(x1 - 2 x2), x3) at (t, t + t^(1+eps), 0), L = 2, e = 1, deg = 2.
Outcome line_prefix() {
  int good = 0;
  const std::vector<Rational> eps{ratio(1, 2), ratio(1, 3), Rational(1)};
  for (const auto& e : eps) {
    SystemQuery q;
    q.system = {P("(x1 - x2)*(x1 - 2*x2)", 3), P("x3", 3)};
    q.point = {0, 0, 0};
    q.theta = {PuiseuxPoly::identity(0), PuiseuxPoly(0, {{Rational(1), Rational(1)}, {Rational(1) + e, Rational(1)}}),
               PuiseuxPoly(0)};
    q.L = 2;
    q.noether_bound = {Integer(1), "user"};
    q.degree_bound = BoundValue{Integer(2), "user"};
    q.dim1_asserted = true;
    const auto cert = certify_curve_prefix(q);
    if (cert.verdict != Verdict::certified || cert.threshold != Rational(1))
      continue;
    const auto& p = cert.certified_prefix;
    const bool shape = p.size() == 3 && p[0] == PuiseuxPoly::identity(0) && p[1] == PuiseuxPoly::identity(0) &&
                       p[2].is_zero();
    bool vanishes = true;
    for (const auto& f : q.system)
      vanishes = vanishes && substitute(f, p).is_zero();
    if (shape && vanishes)
      ++good;
  }
  return {good == 3, std::to_string(good) + "/3 values of epsilon certified with prefix (t, t, 0)"};
}

struct PairCorpus {
  std::vector<CommonFactorPair> pairs;
};

const PairCorpus& pair_corpus() {
  static const PairCorpus corpus = [] {
    PairCorpus c;
    std::mt19937_64 rng(20240611);
    for (int i = 0; i < 200; ++i)
      c.pairs.push_back(random_common_factor_pair(rng, 3, 3));
    return c;
  }();
  return corpus;
}

// 6. Certified common curves agree with a branch of the gcd through index M.
Outcome oracle_equivalence() {
  std::mt19937_64 rng(77);
  int certified = 0, failures = 0, perturbed_certified = 0;
  for (const auto& p : pair_corpus().pairs) {
    const int D = static_cast<int>(p.f1.degree_in(0) * p.f2.degree_in(1) + p.f2.degree_in(0) * p.f1.degree_in(1));
    const Rational L(D + static_cast<int>(rng() % 3));
    // Candidate theta: a branch of g, sometimes perturbed at a random exponent
    // up to 2L (above L the perturbation can still certify).
    const auto own = rational_branches(p.g, p.xi1, p.xi2, L);
    if (own.empty())
      continue;
    PuiseuxPoly theta = own[rng() % own.size()];
    const bool perturb = rng() % 2 == 0 && L > 0;
    if (perturb) {
      const Rational gamma = ratio(1 + static_cast<long>(rng() % to_long(floor(Rational(4 * L)))), 2);
      theta = theta + PuiseuxPoly::monomial(p.xi1, rng() % 2 ? 1 : -1, gamma);
    }
    const auto cert = proposition_common_curve({{p.f1, p.f2}, p.xi1, p.xi2, theta, L});
    if (cert.verdict != Verdict::certified)
      continue;
    ++certified;
    perturbed_certified += perturb;
    const Rational bound = cert.ladder[*cert.M];
    // Vertical factors X1 - xi1 carry no branch with X1 free.
    MultiPoly gcd = gcd_bivariate(p.f1, p.f2);
    const MultiPoly vertical = MultiPoly::variable(2, 0) - MultiPoly::constant(2, p.xi1);
    while (auto quotient = divide_bivariate(gcd, vertical))
      gcd = *quotient;
    bool found = gcd.degree_in(1) > 0 && gcd.evaluate(std::vector<Rational>{p.xi1, p.xi2}) == 0;
    if (found) {
      found = false;
      for (const auto& b : expand_branches(gcd, p.xi1, p.xi2, std::max(bound, Rational(1))))
        found = found || agree_up_to_conjugation(theta, b.expansion, bound, b.ramification);
    }
    failures += !found;
  }
  return {failures == 0 && certified > 0,
          "200 pairs, " + std::to_string(certified) + " certified (" + std::to_string(perturbed_certified) +
              " perturbed), " + std::to_string(failures) + " disagreements"};
}

// 7. deg Res <= d11 d22 + d12 d21 whenever the resultant is nonzero.
Outcome resultant_degree() {
  int nonzero = 0, zero = 0, failures = 0;
  auto check = [&](const MultiPoly& f, const MultiPoly& g) {
    if (f.degree_in(1) == 0 || g.degree_in(1) == 0)
      return;
    const UniPoly r = resultant_y(f, g);
    const bool shares = gcd_bivariate(f, g).degree_in(1) > 0;
    if (r.is_zero() != shares)
      ++failures;
    if (r.is_zero()) {
      ++zero;
      return;
    }
    ++nonzero;
    const long bound = f.degree_in(0) * g.degree_in(1) + g.degree_in(0) * f.degree_in(1);
    if (r.degree() > bound)
      ++failures;
  };
  for (const auto& p : pair_corpus().pairs) {
    check(p.f1, p.f2);
    check(p.h1, p.h2);
    check(p.f1, p.h2);
  }
  return {failures == 0 && nonzero > 0, std::to_string(nonzero) + " nonzero and " + std::to_string(zero) +
                                            " zero resultants, " + std::to_string(failures) + " failures"};
}

std::vector<LatticePoint> dense_support(std::size_t n, int degree) {
  std::vector<LatticePoint> out;
  LatticePoint p(n, 0);
  std::function<void(std::size_t, int)> fill = [&](std::size_t k, int left) {
    if (k == n) {
      out.push_back(p);
      return;
    }
    for (int e = 0; e <= left; ++e) {
      p[k] = e;
      fill(k + 1, left - e);
    }
    p[k] = 0;
  };
  fill(0, degree);
  return out;
}

// 8. Simplex normalization, dense mixed volumes and translation invariance.
Outcome polytope_anchors() {
  int failures = 0;
  for (std::size_t n = 1; n <= 4; ++n)
    failures += normalized_volume(standard_simplex(n), n) != 1;
  for (int d1 = 1; d1 <= 4; ++d1)
    for (int d2 = 1; d2 <= 4; ++d2) {
      const std::vector<Support> s{{2, dense_support(2, d1)}, {2, dense_support(2, d2)}};
      failures += mixed_volume(s) != d1 * d2;
    }
  std::mt19937_64 rng(8);
  std::uniform_int_distribution<int> coord(0, 4), shift(-50, 50);
  for (int round = 0; round < 50; ++round) {
    const std::size_t n = 2 + round % 2;
    std::vector<Support> s;
    for (std::size_t i = 0; i < n; ++i) {
      Support si{n, {}};
      for (int k = 0; k < 5; ++k) {
        LatticePoint p(n);
        for (auto& x : p)
          x = coord(rng);
        si.points.push_back(p);
      }
      s.push_back(si);
    }
    LatticePoint t(n);
    for (auto& x : t)
      x = shift(rng);
    std::vector<Support> moved = s;
    for (auto& si : moved)
      for (auto& p : si.points)
        for (std::size_t k = 0; k < n; ++k)
          p[k] += t[k];
    failures += mixed_volume(moved) != mixed_volume(s);
    failures += normalized_volume(moved[0].points, n) != normalized_volume(s[0].points, n);
  }
  return {failures == 0, "4 simplices, 16 dense pairs, 50 translates, " + std::to_string(failures) + " failures"};
}

// 9. Residual order > 6 for every non-obstructed branch.
Outcome residual_contract() {
  std::mt19937_64 rng(9);
  int branches = 0, obstructed = 0, failures = 0;
  const Rational precision(6);
  for (int i = 0; i < 100; ++i) {
    const RootedPolynomial r = random_rooted_polynomial(rng, 4, 3);
    for (const auto& b : expand_branches(r.q, 0, r.y0, precision)) {
      if (b.status == BranchStatus::irrational_obstruction) {
        ++obstructed;
        continue;
      }
      ++branches;
      const std::vector<PuiseuxPoly> arg{PuiseuxPoly::identity(0), b.expansion};
      failures += !(substitute(r.q, arg).order() > Order(precision));
    }
  }
  return {failures == 0 && branches > 0, "100 polynomials, " + std::to_string(branches) + " branches checked, " +
                                             std::to_string(obstructed) + " obstructed, " + std::to_string(failures) +
                                             " failures"};
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// 10. Byte-identical batch runs, audits on every certificate, 20 caught mutations.
Outcome determinism_audit() {
  const auto first = batch_command(kCorpus / "manifest.json");
  const auto second = batch_command(kCorpus / "manifest.json");
  const bool identical = first.report.dump(2) == second.report.dump(2);
  int golden_mismatch = 0, audits = 0, audit_failures = 0;
  std::map<std::string, std::pair<Job, Json>> reports;
  for (const auto& entry : first.report["jobs"]) {
    const std::string name = entry["name"];
    const Job job = load_job(kCorpus / entry["path"].get<std::string>());
    const Json report = Json::parse(entry["report"].dump());
    golden_mismatch += report.dump(2) + "\n" != slurp(kCorpus / "golden" / (name + ".json"));
    ++audits;
    audit_failures += !audit_report(report, job).ok;
    reports.emplace(name, std::make_pair(job, report));
  }

  using Mutation = std::pair<std::string, std::function<void(Json&)>>;
  const std::vector<Mutation> mutations{
      {"ex-common-curve", [](Json& r) { r["certificates"][0]["M"] = 1; }},
      {"ex-common-curve", [](Json& r) { r["certificates"][0]["threshold"] = "3"; }},
      {"ex-common-curve", [](Json& r) { r["certificates"][0]["orders"][1] = "9"; }},
      {"ex-common-curve", [](Json& r) { r["certificates"][0]["d11"] = 1; }},
      {"ex-common-curve", [](Json& r) { r["certificates"][0]["L"] = "10"; }},
      {"ex-common-curve", [](Json& r) { r["certificates"][0]["certified_prefix"]["terms"][0]["coeff"] = "2"; }},
      {"ex-lemma-sharp", [](Json& r) { r["certificates"][0]["mult_c"] = 1; }},
      {"ex-lemma-sharp", [](Json& r) { r["certificates"][0]["ladder"][1] = "1"; }},
      {"ex-lemma-sharp", [](Json& r) { r["certificates"][0]["deg_y"] = 2; }},
      {"ex-lemma-sharp", [](Json& r) { r["bounds"]["noether"]["value"] = "4"; }},
      {"ex-diverging-branches", [](Json& r) { r["certificates"][0]["verdict"] = "certified"; }},
      {"ex-diverging-branches", [](Json& r) { r["certificates"][0]["unmet"] = Json::array(); }},
      {"ex-diverging-branches", [](Json& r) { r["verdict"] = "certified"; }},
      {"ex-noether-sharp", [](Json& r) { r["certificates"][0]["orders"][0] = "3"; }},
      {"ex-noether-sharp", [](Json& r) { r["certificates"][0]["noether_bound"]["value"] = "1"; }},
      {"ex-line-prefix", [](Json& r) { r["certificates"][1]["M"] = 2; }},
      {"ex-line-prefix", [](Json& r) { r["certificates"][1]["threshold"] = "2"; }},
      {"ex-line-prefix", [](Json& r) { r["certificates"][1]["degree_bound"]["value"] = "1"; }},
      {"ex-line-prefix", [](Json& r) { r["certificates"][1]["certified_prefix"][1]["terms"].push_back({{"exp", "3/2"}, {"coeff", "1"}}); }},
      {"ex-line-prefix", [](Json& r) { r["certificates"][0]["dim1_asserted"] = false; }},
  };
  int caught = 0;
  for (const auto& [name, mutate] : mutations) {
    const auto& [job, report] = reports.at(name);
    Json bad = report;
    mutate(bad);
    caught += !audit_report(bad, job).ok;
  }
  const bool pass = identical && golden_mismatch == 0 && audit_failures == 0 && caught == 20 &&
                    reports.size() == 5;
  return {pass, std::string(identical ? "identical" : "different") + " batch output, " +
                    std::to_string(golden_mismatch) + " golden mismatches, " + std::to_string(audits - audit_failures) +
                    "/" + std::to_string(audits) + " audits pass, " + std::to_string(caught) + "/" +
                    std::to_string(mutations.size()) + " mutations caught"};
}

} // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"lemma sharpness grid", lemma_sharpness},
      {"proposition sharpness grid", proposition_sharpness},
      {"diverging branches never certify", negative_control},
      {"non-isolation sharpness", noether_sharpness},
      {"curve prefix on two lines", line_prefix},
      {"gcd branch oracle equivalence", oracle_equivalence},
      {"resultant degree bound", resultant_degree},
      {"polytope anchors", polytope_anchors},
      {"branch residual contract", residual_contract},
      {"determinism and audit", determinism_audit},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    failed += !o.pass;
    std::cout << (o.pass ? "PASS" : "FAIL") << "  criterion " << i + 1 << ": " << criteria[i].first << " -- "
              << o.detail << " (" << static_cast<long>(ms) << " ms)" << std::endl;
  }
  return failed == 0 ? 0 : 1;
}
