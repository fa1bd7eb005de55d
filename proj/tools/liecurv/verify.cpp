#include "verify.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <future>
#include <limits>
#include <sstream>

#include "liecurv/cartan_structures.hpp"
#include "liecurv/connection_curvature.hpp"
#include "liecurv/geodesics_subgroups.hpp"
#include "liecurv/oracles.hpp"

namespace liecurv::cli {

bool VerifyReport::all_passed() const {
  return std::all_of(suites.begin(), suites.end(), [](const SuiteResult& s) { return s.passed; });
}

const SuiteResult* VerifyReport::find(const std::string& name) const {
  for (const auto& s : suites) {
    if (s.name == name) return &s;
  }
  return nullptr;
}

namespace {

// Worst-case accumulator for one suite.
class Suite {
 public:
  Suite(std::string name, double tolerance, const std::optional<double>& override_tol,
        Bound bound = Bound::kAtMost)
      : bound_(bound) {
    result_.name = std::move(name);
    result_.bound = bound;
    // Lower bounds are negative controls; a global override would invert them.
    result_.tolerance = override_tol && bound == Bound::kAtMost ? *override_tol : tolerance;
    result_.max_error = bound == Bound::kAtMost ? 0.0 : std::numeric_limits<double>::infinity();
  }

  void observe(double value) {
    ++result_.samples;
    if (std::isnan(value)) {
      nan_seen_ = true;
      return;
    }
    result_.max_error =
        bound_ == Bound::kAtMost ? std::max(result_.max_error, value) : std::min(result_.max_error, value);
  }

  /// Extra pass conditions that are not tolerance-driven.
  void require(bool condition, const std::string& what) {
    if (!condition) {
      extra_failed_ = true;
      note(what);
    }
  }

  void note(const std::string& text) {
    if (!result_.detail.empty()) result_.detail += "; ";
    result_.detail += text;
  }

  SuiteResult finish() {
    const bool within = bound_ == Bound::kAtMost ? result_.max_error <= result_.tolerance
                                                  : result_.max_error >= result_.tolerance;
    if (nan_seen_) note("non-finite statistic");
    result_.passed = within && !nan_seen_ && !extra_failed_ && result_.samples > 0;
    return result_;
  }

 private:
  SuiteResult result_;
  Bound bound_;
  bool nan_seen_ = false;
  bool extra_failed_ = false;
};

double relative(double err, double scale) { return err / (scale + kScaleFloor); }

std::string format_double(double x) {
  std::ostringstream os;
  os.precision(17);
  os << x;
  return os.str();
}

MatrixElement scaled_to_ball(MatrixElement u, SampleStream& stream, double radius) {
  const double nu = u.norm();
  if (nu > 0.0) u *= stream.uniform(0.0, radius) / nu;
  return u;
}

// Suites ------------------------------------------------------------------------

SuiteResult structure_validation(const std::vector<CartanStructure>& structures, const VerifyOptions& o,
                                 Seed seed) {
  Suite suite("structure_validation", 1e-12, o.tol);
  ValidationOptions vo;
  vo.trials = std::max(1, o.trials / 5);
  vo.seed = seed;
  const double tol = o.tol.value_or(1e-12);
  vo.tol = tol;
  for (const CartanStructure& s : structures) {
    const ValidationReport report = validate(s, vo);
    for (const AxiomCheck& check : report.checks) {
      if (check.name == "b_theta_positive_definite") {
        suite.require(check.passed, s.name() + ": " + check.name + " failed (min eigenvalue " +
                                        format_double(check.measure) + ")");
        continue;
      }
      suite.observe(check.measure);
      if (!check.passed) suite.note(s.name() + ": " + check.name + " failed");
    }
  }
  return suite.finish();
}

SuiteResult connection_identities(const std::vector<CartanStructure>& structures, const VerifyOptions& o,
                                  Seed seed) {
  Suite suite("connection_identities", 1e-12, o.tol);
  SampleStream stream(seed);
  for (const CartanStructure& s : structures) {
    for (int i = 0; i < o.trials; ++i) {
      const MatrixElement u = random_in_algebra(s, stream);
      const MatrixElement v = random_in_algebra(s, stream);
      const MatrixElement w = random_in_algebra(s, stream);
      const double scale = u.norm() * v.norm() * w.norm();
      const double compat = s.inner(nabla(s, u, v), w) + s.inner(v, nabla(s, u, w));
      suite.observe(relative(std::abs(compat), scale));
      const MatrixElement torsion = nabla(s, u, v) - nabla(s, v, u) - bracket(u, v);
      suite.observe(relative(torsion.norm(), u.norm() * v.norm()));
    }
  }
  return suite.finish();
}

MatrixElement flat_pair_u() {
  const double a = std::sqrt(7.0) / 2.0;
  return MatrixElement::from_rows({{1.0, a}, {-a, 2.0}});
}

SuiteResult example_flat_2x2(const VerifyOptions& o) {
  Suite suite("example_flat_2x2", 1e-10, o.tol);
  const CartanStructure s = gl_real(2);
  const MatrixElement u = flat_pair_u();
  const MatrixElement v = MatrixElement::from_rows({{0, 1}, {1, 0}});
  const double q = quartic(s, u, v);
  const double bracket_sq = bracket(u, v).squared_norm();
  suite.observe(std::abs(q));
  suite.observe(std::abs(bracket_sq - 16.0));
  suite.note("quartic " + format_double(q) + ", |[u,v]|^2 " + format_double(bracket_sq));
  return suite.finish();
}

SuiteResult example_commuting_3x3(const VerifyOptions& o) {
  Suite suite("example_commuting_3x3", 1e-12, o.tol);
  const CartanStructure s = gl_real(3);
  const MatrixElement u = MatrixElement::from_rows({{1, 1, -1}, {1, 1, 0}, {2, 0, 1}});
  const MatrixElement v = MatrixElement::from_rows({{0, -1, 1}, {-1, 2, -1}, {-2, 2, -1}});
  const double q = quartic(s, u, v);
  const ThetaSplit su = theta_split(s, u);
  const ThetaSplit sv = theta_split(s, v);
  const double theorem = -4.0 * bracket(su.p_part, sv.p_part).squared_norm();
  const double bracket_norm = bracket(u, v).norm();
  suite.observe(relative(std::abs(q - theorem), std::abs(theorem)));
  suite.require(bracket_norm <= 1e-13, "|[u,v]| = " + format_double(bracket_norm) + " exceeds 1e-13");
  suite.require(q < -0.1, "quartic " + format_double(q) + " is not below -0.1");
  suite.note("quartic " + format_double(q) + ", -4|[u1,v1]|^2 " + format_double(theorem));
  return suite.finish();
}

SuiteResult oracle_equivalence(const std::vector<std::pair<CartanStructure, int>>& sweeps,
                               const VerifyOptions& o, Seed seed) {
  Suite suite("oracle_equivalence", 1e-8, o.tol);
  SampleStream stream(seed);
  for (const auto& [s, count] : sweeps) {
    const OrthonormalBasis basis = OrthonormalBasis::standard(s);
    for (int i = 0; i < count; ++i) {
      const MatrixElement u = random_in_algebra(s, stream);
      const MatrixElement v = random_in_algebra(s, stream);
      const double oracle = quartic_from_definition(s, u, v, basis);
      suite.observe(relative(std::abs(quartic(s, u, v) - oracle), std::abs(oracle)));
    }
    suite.note(s.name() + " x" + std::to_string(count));
  }
  return suite.finish();
}

std::vector<SuiteResult> sign_theorems(const std::vector<CartanStructure>& structures, const VerifyOptions& o,
                                       Seed seed) {
  Suite pp("sign_pp", 1e-12, o.tol);
  Suite kk("sign_kk", 1e-12, o.tol);
  Suite pk("sign_pk", 1e-12, o.tol);
  Suite gk("sign_gk", 1e-12, o.tol);
  Suite gp("special_gp", 1e-10, o.tol);
  SampleStream stream(seed);
  for (const CartanStructure& s : structures) {
    for (int i = 0; i < o.trials; ++i) {
      const MatrixElement p1 = random_in_p(s, stream);
      const MatrixElement p2 = random_in_p(s, stream);
      const MatrixElement k1 = random_in_k(s, stream);
      const MatrixElement k2 = random_in_k(s, stream);
      const MatrixElement g = random_in_algebra(s, stream);
      pp.observe(std::max(0.0, quartic(s, p1, p2)));
      kk.observe(std::max(0.0, -quartic(s, k1, k2)));
      pk.observe(std::max(0.0, -quartic(s, p1, k1)));
      gk.observe(std::max(0.0, -quartic(s, g, k2)));

      const ThetaSplit split = theta_split(s, g);
      const double a = bracket(split.p_part, p2).squared_norm();
      const double b = bracket(split.k_part, p2).squared_norm();
      const double special = -1.75 * a + 0.25 * b;
      gp.observe(relative(std::abs(quartic(s, g, p2) - special), 1.75 * a + 0.25 * b));
    }
  }
  return {pp.finish(), kk.finish(), pk.finish(), gk.finish(), gp.finish()};
}

SuiteResult bracket_norm_identity(const CartanStructure& s, const VerifyOptions& o, Seed seed) {
  Suite suite("bracket_norm_identity", 1e-12, o.tol);
  SampleStream stream(seed);
  for (int i = 0; i < o.trials; ++i) {
    const MatrixElement u = random_in_algebra(s, stream);
    const MatrixElement v = random_in_algebra(s, stream);
    const double gap = std::abs(bracket_norm_identity_gap(s, u, v));
    suite.observe(gap / (u.squared_norm() * v.squared_norm() + 1.0));
  }
  return suite.finish();
}

SuiteResult commuting_2x2_flat(Field field, const VerifyOptions& o, Seed seed) {
  Suite suite("commuting_2x2_flat", 1e-12, o.tol);
  const CartanStructure s = field == Field::kReal ? gl_real(2) : gl_complex(2);
  for (int i = 0; i < o.trials; ++i) {
    const auto [u, v] = commuting_pair(derive_seed(seed, static_cast<std::uint64_t>(i)), 2, 1 + i % 3, field);
    suite.observe(std::abs(quartic(s, u, v)));
  }
  return suite.finish();
}

SuiteResult commuting_theorem(const std::vector<CartanStructure>& structures, const VerifyOptions& o,
                              Seed seed) {
  Suite suite("commuting_theorem", 1e-12, o.tol);
  double worst_positive = 0.0;
  std::uint64_t index = 0;
  for (const CartanStructure& s : structures) {
    for (int i = 0; i < o.trials; ++i) {
      const auto [u, v] = commuting_pair(derive_seed(seed, index++), s.n(), 1 + i % 3, s.field());
      const double q = quartic(s, u, v);
      const double theorem = quartic_commuting(s, u, v);
      suite.observe(relative(std::abs(q - theorem), std::abs(theorem) + u.squared_norm() * v.squared_norm()));
      worst_positive = std::max(worst_positive, q);
    }
  }
  suite.require(worst_positive <= 1e-12, "positive quartic " + format_double(worst_positive));
  return suite.finish();
}

SuiteResult geodesic_residuals(const CartanStructure& s, const VerifyOptions& o, Seed seed) {
  Suite suite("geodesic_residual", 1e-6, o.tol);
  SampleStream stream(seed);
  const int count = std::max(1, o.trials / 5);
  for (int i = 0; i < count; ++i) {
    const MatrixElement u = scaled_to_ball(random_in_algebra(s, stream), stream, 2.0);
    for (int step = 0; step <= 8; ++step) {
      const double t = 0.25 * step;
      const double residual = s.field() == Field::kReal ? geodesic_residual(s, u, t, 1e-5)
                                                         : experimental::geodesic_residual(s, u, t, 1e-5);
      suite.observe(residual);
    }
  }
  if (s.field() != Field::kReal) suite.note("experimental closed form");
  return suite.finish();
}

SuiteResult totally_geodesic(const SubgroupSpec& spec, const std::string& name, const VerifyOptions& o,
                             Seed seed) {
  Suite suite(name, 1e-9, o.tol);
  SampleStream stream(seed);
  const int count = std::max(1, o.trials / 5);
  for (int i = 0; i < count; ++i) {
    const MatrixElement u = scaled_to_ball(spec.to_algebra(random_element(stream, spec.n)), stream, 2.0);
    const TotallyGeodesicReport r = totally_geodesic_check(spec, u, 2.0, kDefaultGridPoints);
    suite.observe(r.max_defect);
    suite.require(r.min_abs_det > 0.0, "curve left GL(n)");
  }
  suite.note(spec.name);
  return suite.finish();
}

SuiteResult upper_triangular_control(int n, const VerifyOptions& o) {
  Suite suite("ut_negative_control", 1e-3, o.tol, Bound::kAtLeast);
  const SubgroupSpec spec = builtin_subgroup("ut", n);
  const TotallyGeodesicReport r = totally_geodesic_check(spec, MatrixElement::unit(n, 0, 1), 2.0);
  suite.observe(r.max_defect);
  suite.note(spec.name + " with u = E12 must leave the subgroup");
  return suite.finish();
}

std::pair<MatrixElement, MatrixElement> commuting_symmetric(SampleStream& stream, int n) {
  const MatrixElement x = random_element(stream, n);
  const RealMatrix q = matrix_exp(x - x.transpose()).real_part();
  RealMatrix d1 = RealMatrix::Zero(n, n);
  RealMatrix d2 = RealMatrix::Zero(n, n);
  for (int i = 0; i < n; ++i) {
    d1(i, i) = stream.uniform();
    d2(i, i) = stream.uniform();
  }
  RealMatrix u = q * d1 * q.transpose();
  RealMatrix v = q * d2 * q.transpose();
  u = (0.5 * (u + u.transpose())).eval();
  v = (0.5 * (v + v.transpose())).eval();
  return {MatrixElement::from_real(u), MatrixElement::from_real(v)};
}

SuiteResult symmetric_iff(const std::vector<int>& sizes, const VerifyOptions& o, Seed seed) {
  Suite suite("symmetric_iff", 0.0, o.tol);
  SampleStream stream(seed);
  const int count = std::max(2, 2 * o.trials / 5);
  int commuting = 0;
  for (int i = 0; i < count; ++i) {
    const int n = sizes[static_cast<std::size_t>(i) % sizes.size()];
    const CartanStructure s = gl_real(n);
    MatrixElement u;
    MatrixElement v;
    if (i % 2 == 0) {
      std::tie(u, v) = commuting_symmetric(stream, n);
    } else {
      u = random_in_p(s, stream);
      v = random_in_p(s, stream);
    }
    const bool commutes = bracket(u, v).norm() <= 1e-10;
    const bool flat = std::abs(quartic(s, u, v)) <= 1e-10;
    commuting += commutes ? 1 : 0;
    suite.observe(commutes == flat ? 0.0 : 1.0);
  }
  suite.note(std::to_string(commuting) + " commuting of " + std::to_string(count) + "; statistic counts mismatches");
  return suite.finish();
}

using Job = std::function<std::vector<SuiteResult>()>;

template <typename F>
Job single(F f) {
  return [f]() { return std::vector<SuiteResult>{f()}; };
}

std::vector<Job> default_jobs(const VerifyOptions& o) {
  const auto seed = [&](std::uint64_t k) { return derive_seed(o.seed, k); };
  const std::vector<CartanStructure> base = {gl_real(2), gl_real(3), gl_real(4), gl_complex(2)};
  std::vector<Job> jobs;
  jobs.push_back(single([=] { return structure_validation(base, o, seed(0)); }));
  jobs.push_back(single([=] { return connection_identities({gl_real(3), gl_complex(2)}, o, seed(1)); }));
  jobs.push_back(single([=] { return example_flat_2x2(o); }));
  jobs.push_back(single([=] { return example_commuting_3x3(o); }));
  jobs.push_back(single([=] {
    return oracle_equivalence({{gl_real(2), 2 * o.trials},
                               {gl_real(3), 2 * o.trials},
                               {gl_real(4), 2 * o.trials},
                               {gl_complex(2), o.trials}},
                              o, seed(2));
  }));
  jobs.push_back([=] { return sign_theorems({gl_real(3), gl_complex(2)}, o, seed(3)); });
  jobs.push_back(single([=] { return bracket_norm_identity(gl_real(3), o, seed(4)); }));
  jobs.push_back(single([=] { return geodesic_residuals(gl_real(3), o, seed(5)); }));
  jobs.push_back(single([=] { return totally_geodesic(builtin_subgroup("so", 3), "totally_geodesic_so3", o, seed(6)); }));
  jobs.push_back(single([=] { return totally_geodesic(builtin_subgroup("sl", 2), "totally_geodesic_sl2", o, seed(7)); }));
  jobs.push_back(
      single([=] { return totally_geodesic(builtin_subgroup("opq", 3, 1, 2), "totally_geodesic_o12", o, seed(8)); }));
  jobs.push_back(single([=] { return upper_triangular_control(3, o); }));
  jobs.push_back(single([=] { return commuting_2x2_flat(Field::kReal, o, seed(9)); }));
  jobs.push_back(single([=] { return commuting_theorem({gl_real(3), gl_real(4)}, o, seed(10)); }));
  jobs.push_back(single([=] { return symmetric_iff({2, 3, 4}, o, seed(11)); }));
  return jobs;
}

std::vector<Job> structure_jobs(const CartanStructure& s, const VerifyOptions& o) {
  const auto seed = [&](std::uint64_t k) { return derive_seed(o.seed, k); };
  const int n = s.n();
  std::vector<Job> jobs;
  jobs.push_back(single([=] { return structure_validation({s}, o, seed(0)); }));
  jobs.push_back(single([=] { return connection_identities({s}, o, seed(1)); }));
  jobs.push_back(single([=] { return oracle_equivalence({{s, 2 * o.trials}}, o, seed(2)); }));
  jobs.push_back([=] { return sign_theorems({s}, o, seed(3)); });
  jobs.push_back(single([=] { return bracket_norm_identity(s, o, seed(4)); }));
  jobs.push_back(single([=] { return geodesic_residuals(s, o, seed(5)); }));
  if (n >= 2) {
    // Over C a commuting 2x2 pair is v = a u + b I with complex a, so [u1, v1] need not vanish.
    if (n == 2 && s.field() == Field::kReal) {
      jobs.push_back(single([=] { return commuting_2x2_flat(s.field(), o, seed(9)); }));
    }
    jobs.push_back(single([=] { return commuting_theorem({s}, o, seed(10)); }));
  }
  if (s.field() == Field::kReal && n >= 2) {
    jobs.push_back(single([=] { return totally_geodesic(builtin_subgroup("so", n), "totally_geodesic_so", o, seed(6)); }));
    jobs.push_back(single([=] { return totally_geodesic(builtin_subgroup("sl", n), "totally_geodesic_sl", o, seed(7)); }));
    jobs.push_back(single(
        [=] { return totally_geodesic(builtin_subgroup("opq", n, 1, n - 1), "totally_geodesic_opq", o, seed(8)); }));
    jobs.push_back(single([=] { return upper_triangular_control(n, o); }));
    jobs.push_back(single([=] { return symmetric_iff({n}, o, seed(11)); }));
  }
  return jobs;
}

}  // namespace

VerifyReport run_verify(const VerifyOptions& options) {
  if (options.trials < 1) throw Error("--trials must be >= 1");
  VerifyReport report;
  report.seed = options.seed;
  report.trials = options.trials;
  std::vector<Job> jobs;
  if (options.structure.empty()) {
    report.structure = "default";
    jobs = default_jobs(options);
  } else {
    const CartanStructure s = parse_structure(options.structure);
    report.structure = s.name();
    jobs = structure_jobs(s, options);
  }
  // Suites are independent and seeded separately, so running them
  // concurrently does not change any result; order is the job order.
  std::vector<std::future<std::vector<SuiteResult>>> futures;
  futures.reserve(jobs.size());
  for (const Job& job : jobs) futures.push_back(std::async(std::launch::async, job));
  for (auto& f : futures) {
    for (SuiteResult& r : f.get()) report.suites.push_back(std::move(r));
  }
  return report;
}

}  // namespace liecurv::cli
