// One PASS/FAIL line per acceptance criterion; exit status is the number of
// failures. Seeds differ from the ones `liecurv verify` uses by default.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <set>
#include <sstream>
#include <string>

#include "cli.hpp"
#include "json.hpp"
#include "liecurv/connection_curvature.hpp"
#include "liecurv/geodesics_subgroups.hpp"
#include "liecurv/oracles.hpp"
#include "test_support.hpp"

namespace {

using namespace liecurv;
using Clock = std::chrono::steady_clock;

constexpr std::uint64_t kSeed = 20240917;

struct Outcome {
  bool passed;
  std::string summary;
};

std::string fmt(double x) {
  char buffer[32];
  std::snprintf(buffer, sizeof buffer, "%.3e", x);
  return buffer;
}

double ms_since(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

Outcome criterion_flat_counterexample() {
  const CartanStructure s = gl_real(2);
  const MatrixElement u = testing::flat_pair_u();
  const MatrixElement v = testing::flat_pair_v();
  const auto start = Clock::now();
  const double q = quartic(s, u, v);
  const double elapsed = ms_since(start);
  const double bracket_sq = bracket(u, v).squared_norm();
  const bool ok = std::abs(q) <= 1e-10 && std::abs(bracket_sq - 16.0) <= 1e-10 && elapsed < 1.0;
  return {ok, "|quartic| " + fmt(std::abs(q)) + ", |[u,v]|^2 - 16 = " + fmt(bracket_sq - 16.0) + ", " +
                  fmt(elapsed) + " ms"};
}

Outcome criterion_commuting_example() {
  const CartanStructure s = gl_real(3);
  const MatrixElement u = testing::commuting_pair_u();
  const MatrixElement v = testing::commuting_pair_v();
  const double bracket_norm = bracket(u, v).norm();
  const double q = quartic(s, u, v);
  const double theorem = quartic_commuting(s, u, v);
  const double rel = std::abs(q - theorem) / std::abs(theorem);
  const bool frozen = std::abs(q - testing::kCommutingPairQuartic) <= 1e-12 * std::abs(testing::kCommutingPairQuartic);
  const bool ok = bracket_norm <= 1e-13 && q < -0.1 && rel <= 1e-12 && frozen;
  return {ok, "|[u,v]| " + fmt(bracket_norm) + ", quartic " + std::to_string(q) + ", rel vs -4|[u1,v1]|^2 " +
                  fmt(rel)};
}

Outcome criterion_oracle_equivalence() {
  const auto start = Clock::now();
  double worst = 0.0;
  int sections = 0;
  const auto sweep = [&](const CartanStructure& s, int count, std::uint64_t salt) {
    const OrthonormalBasis basis = OrthonormalBasis::standard(s);
    SampleStream stream(derive_seed(Seed{kSeed}, salt));
    for (int i = 0; i < count; ++i) {
      const MatrixElement u = random_in_algebra(s, stream);
      const MatrixElement v = random_in_algebra(s, stream);
      const double oracle = quartic_from_definition(s, u, v, basis);
      worst = std::max(worst, std::abs(quartic(s, u, v) - oracle) / (std::abs(oracle) + kScaleFloor));
      ++sections;
    }
  };
  sweep(gl_real(2), 1000, 1);
  sweep(gl_real(3), 1000, 2);
  sweep(gl_real(4), 1000, 3);
  sweep(gl_complex(2), 500, 4);
  const double elapsed = ms_since(start) / 1000.0;
  return {worst <= 1e-8 && elapsed < 30.0,
          std::to_string(sections) + " sections, max rel " + fmt(worst) + ", " + fmt(elapsed) + " s"};
}

Outcome criterion_sign_theorems() {
  const CartanStructure s = gl_real(3);
  SampleStream stream(derive_seed(Seed{kSeed}, 5));
  double pp = -1e300, kk = 1e300, pk = 1e300, gk = 1e300, gp = 0.0;
  for (int i = 0; i < 500; ++i) {
    const MatrixElement p1 = random_in_p(s, stream);
    const MatrixElement p2 = random_in_p(s, stream);
    const MatrixElement k1 = random_in_k(s, stream);
    const MatrixElement k2 = random_in_k(s, stream);
    const MatrixElement g = random_in_algebra(s, stream);
    pp = std::max(pp, quartic(s, p1, p2));
    kk = std::min(kk, quartic(s, k1, k2));
    pk = std::min(pk, quartic(s, p1, k1));
    gk = std::min(gk, quartic(s, g, k2));
    const ThetaSplit split = theta_split(s, g);
    const double a = bracket(split.p_part, p2).squared_norm();
    const double b = bracket(split.k_part, p2).squared_norm();
    const double special = -1.75 * a + 0.25 * b;
    gp = std::max(gp, std::abs(quartic(s, g, p2) - special) / (1.75 * a + 0.25 * b + kScaleFloor));
  }
  const bool ok = pp <= 1e-12 && kk >= -1e-12 && pk >= -1e-12 && gk >= -1e-12 && gp <= 1e-10;
  return {ok, "max pp " + fmt(pp) + ", min kk " + fmt(kk) + ", min pk " + fmt(pk) + ", min gk " + fmt(gk) +
                  ", g*p rel " + fmt(gp)};
}

Outcome criterion_bracket_norm_identity() {
  const CartanStructure s = gl_real(3);
  SampleStream stream(derive_seed(Seed{kSeed}, 6));
  double worst = 0.0;
  for (int i = 0; i < 500; ++i) {
    const MatrixElement u = random_element(stream, 3);
    const MatrixElement v = random_element(stream, 3);
    worst = std::max(worst, std::abs(bracket_norm_identity_gap(s, u, v)) /
                                (u.squared_norm() * v.squared_norm() + 1.0));
  }
  return {worst <= 1e-12, "max gap / (|u|^2|v|^2 + 1) " + fmt(worst)};
}

Outcome criterion_geodesic_certificate() {
  const CartanStructure s = gl_real(3);
  SampleStream stream(derive_seed(Seed{kSeed}, 7));
  double worst = 0.0;
  for (int i = 0; i < 100; ++i) {
    MatrixElement u = random_element(stream, 3);
    u *= stream.uniform(0.0, 2.0) / u.norm();
    for (int step = 0; step <= 8; ++step) worst = std::max(worst, geodesic_residual(s, u, 0.25 * step, 1e-5));
  }
  return {worst <= 1e-6, "100 tangents x 9 times, max residual " + fmt(worst)};
}

Outcome criterion_totally_geodesic() {
  SampleStream stream(derive_seed(Seed{kSeed}, 8));
  std::string summary;
  bool ok = true;
  for (const SubgroupSpec& spec :
       {builtin_subgroup("so", 3), builtin_subgroup("sl", 2), builtin_subgroup("opq", 3, 1, 2)}) {
    double worst = 0.0;
    for (int i = 0; i < 100; ++i) {
      MatrixElement u = spec.to_algebra(random_element(stream, spec.n));
      u *= stream.uniform(0.0, 2.0) / u.norm();
      const TotallyGeodesicReport r = totally_geodesic_check(spec, u, 2.0, kDefaultGridPoints);
      worst = std::max(worst, r.max_defect);
      ok = ok && r.min_abs_det > 0.0;
    }
    ok = ok && worst <= 1e-9;
    summary += spec.name + " " + fmt(worst) + ", ";
  }
  const TotallyGeodesicReport control =
      totally_geodesic_check(builtin_subgroup("ut", 3), MatrixElement::unit(3, 0, 1), 2.0);
  ok = ok && control.max_defect >= 1e-3;
  return {ok, summary + "UT(3) control " + fmt(control.max_defect)};
}

Outcome criterion_commuting_2x2_flat() {
  const CartanStructure s = gl_real(2);
  double worst = 0.0;
  for (int i = 0; i < 500; ++i) {
    const auto [u, v] = commuting_pair(derive_seed(Seed{kSeed}, 1000 + static_cast<std::uint64_t>(i)), 2, 1 + i % 3);
    worst = std::max(worst, std::abs(quartic(s, u, v)));
  }
  return {worst <= 1e-12, "500 pairs, max |quartic| " + fmt(worst)};
}

Outcome criterion_symmetric_iff() {
  SampleStream stream(derive_seed(Seed{kSeed}, 9));
  int mismatches = 0;
  int commuting = 0;
  for (int i = 0; i < 200; ++i) {
    const int n = 2 + i % 3;
    const CartanStructure s = gl_real(n);
    MatrixElement u;
    MatrixElement v;
    if (i % 2 == 0) {
      std::tie(u, v) = testing::commuting_symmetric_pair(stream, n);
    } else {
      u = random_in_p(s, stream);
      v = random_in_p(s, stream);
    }
    const bool commutes = bracket(u, v).norm() <= 1e-10;
    const bool flat = std::abs(quartic(s, u, v)) <= 1e-10;
    commuting += commutes;
    mismatches += commutes != flat;
  }
  return {mismatches == 0 && commuting == 100,
          std::to_string(commuting) + " commuting of 200, " + std::to_string(mismatches) + " mismatches"};
}

Outcome criterion_cli_verify() {
  const auto start = Clock::now();
  std::ostringstream out;
  std::ostringstream err;
  const int code = cli::run_cli({"verify"}, out, err);
  const double elapsed = ms_since(start) / 1000.0;
  std::set<std::string> names;
  bool every_suite_has_error = true;
  try {
    const auto doc = nlohmann::json::parse(out.str());
    for (const auto& suite : doc.at("suites")) {
      names.insert(suite.at("name").get<std::string>());
      every_suite_has_error = every_suite_has_error && suite.contains("max_error") && suite["max_error"].is_number();
    }
  } catch (const std::exception&) {
    every_suite_has_error = false;
  }
  bool covered = true;
  for (const char* required :
       {"example_flat_2x2", "example_commuting_3x3", "oracle_equivalence", "sign_pp", "sign_kk", "sign_pk",
        "sign_gk", "special_gp", "bracket_norm_identity", "geodesic_residual", "totally_geodesic_so3",
        "totally_geodesic_sl2", "totally_geodesic_o12", "ut_negative_control", "commuting_2x2_flat",
        "symmetric_iff"}) {
    covered = covered && names.count(required) == 1;
  }
  const bool ok = code == 0 && every_suite_has_error && covered && elapsed < 60.0;
  return {ok, "exit " + std::to_string(code) + ", " + std::to_string(names.size()) + " suites, " + fmt(elapsed) +
                  " s" + (covered ? "" : ", missing suites")};
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria = {
      {"non-commuting 2x2 pair with zero curvature", criterion_flat_counterexample},
      {"commuting 3x3 integer pair is negatively curved", criterion_commuting_example},
      {"closed form matches definitional oracle", criterion_oracle_equivalence},
      {"sign theorems and g*p special case", criterion_sign_theorems},
      {"bracket-norm identity", criterion_bracket_norm_identity},
      {"geodesic equation residual", criterion_geodesic_certificate},
      {"totally geodesic subgroups and UT control", criterion_totally_geodesic},
      {"2x2 commuting pairs are flat", criterion_commuting_2x2_flat},
      {"symmetric pairs: flat iff commuting", criterion_symmetric_iff},
      {"liecurv verify certificate", criterion_cli_verify},
  };
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome outcome{false, ""};
    try {
      outcome = criteria[i].second();
    } catch (const std::exception& e) {
      outcome = {false, std::string("threw: ") + e.what()};
    }
    failures += outcome.passed ? 0 : 1;
    std::printf("%s  [%2zu] %s: %s\n", outcome.passed ? "PASS" : "FAIL", i + 1, criteria[i].first,
                outcome.summary.c_str());
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
  return failures;
}
