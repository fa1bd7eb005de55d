#include "liecurv/cartan_structures.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <limits>

#include <Eigen/Eigenvalues>

namespace liecurv {

CartanStructure::CartanStructure(std::string name, int n, Field field, Involution theta,
                                 BilinearForm bform)
    : name_(std::move(name)), n_(n), field_(field), theta_(std::move(theta)), bform_(std::move(bform)) {
  if (n_ < 1) throw DimensionMismatch("structure side length must be >= 1");
  if (!theta_ || !bform_) throw Error("structure needs both theta and B");
}

void CartanStructure::require_member(const MatrixElement& x) const {
  if (x.n() != n_ || x.field() != field_) {
    throw DimensionMismatch("element of size " + std::to_string(x.n()) + " (" +
                            std::string(to_string(x.field())) + ") is not in the algebra of " + name_);
  }
}

MatrixElement CartanStructure::theta(const MatrixElement& x) const {
  require_member(x);
  return theta_(x);
}

double CartanStructure::bform(const MatrixElement& x, const MatrixElement& y) const {
  require_member(x);
  require_member(y);
  return bform_(x, y);
}

double CartanStructure::inner(const MatrixElement& x, const MatrixElement& y) const {
  return -bform(x, theta(y));
}

double CartanStructure::norm(const MatrixElement& x) const {
  return std::sqrt(std::max(0.0, norm_sq(x)));
}

namespace {

// tr(XY) = sum_ij X_ij Y_ji
Scalar trace_of_product(const MatrixElement& x, const MatrixElement& y) {
  return x.data().cwiseProduct(y.data().transpose()).sum();
}

}  // namespace

CartanStructure gl_real(int n) {
  return CartanStructure(
      "gl:real:" + std::to_string(n), n, Field::kReal,
      [](const MatrixElement& x) { return -x.transpose(); },
      [](const MatrixElement& x, const MatrixElement& y) { return trace_of_product(x, y).real(); });
}

CartanStructure gl_complex(int n) {
  return CartanStructure(
      "gl:complex:" + std::to_string(n), n, Field::kComplex,
      [](const MatrixElement& x) { return -x.adjoint(); },
      [](const MatrixElement& x, const MatrixElement& y) { return trace_of_product(x, y).real(); });
}

CartanStructure parse_structure(std::string_view selector) {
  const auto fail = [&]() -> CartanStructure {
    throw ParseError("unknown structure \"" + std::string(selector) +
                     "\" (expected gl:real:<n> or gl:complex:<n>)");
  };
  constexpr std::string_view kReal = "gl:real:";
  constexpr std::string_view kComplex = "gl:complex:";
  std::string_view rest;
  Field field;
  if (selector.starts_with(kReal)) {
    rest = selector.substr(kReal.size());
    field = Field::kReal;
  } else if (selector.starts_with(kComplex)) {
    rest = selector.substr(kComplex.size());
    field = Field::kComplex;
  } else {
    return fail();
  }
  int n = 0;
  const auto [ptr, ec] = std::from_chars(rest.data(), rest.data() + rest.size(), n);
  if (ec != std::errc() || ptr != rest.data() + rest.size() || n < 1 || n > 64) return fail();
  return field == Field::kReal ? gl_real(n) : gl_complex(n);
}

ThetaSplit theta_split(const CartanStructure& s, const MatrixElement& u) {
  const MatrixElement tu = s.theta(u);
  return {0.5 * (u - tu), 0.5 * (u + tu)};
}

std::string_view to_string(Purity purity) {
  switch (purity) {
    case Purity::kZero: return "zero";
    case Purity::kP: return "p";
    case Purity::kK: return "k";
    case Purity::kMixed: return "mixed";
  }
  return "mixed";
}

Purity classify(const CartanStructure& s, const MatrixElement& x, double tol) {
  const double scale = x.norm();
  if (scale == 0.0) return Purity::kZero;
  const ThetaSplit split = theta_split(s, x);
  if (split.k_part.norm() <= tol * scale) return Purity::kP;
  if (split.p_part.norm() <= tol * scale) return Purity::kK;
  return Purity::kMixed;
}

MatrixElement random_in_algebra(const CartanStructure& s, SampleStream& stream) {
  return random_element(stream, s.n(), s.field());
}

MatrixElement random_in_p(const CartanStructure& s, SampleStream& stream) {
  return theta_split(s, random_in_algebra(s, stream)).p_part;
}

MatrixElement random_in_k(const CartanStructure& s, SampleStream& stream) {
  return theta_split(s, random_in_algebra(s, stream)).k_part;
}

bool ValidationReport::all_passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const AxiomCheck& c) { return c.passed; });
}

const AxiomCheck* ValidationReport::find(std::string_view name) const {
  for (const auto& c : checks) {
    if (c.name == name) return &c;
  }
  return nullptr;
}

namespace {

// Accumulates the worst relative violation of one sampled axiom.
class SampledAxiom {
 public:
  SampledAxiom(std::string name, double tol) : name_(std::move(name)), tol_(tol) {}

  void observe(double error, double scale) {
    if (!std::isfinite(error)) {
      passed_ = false;
      worst_ = std::numeric_limits<double>::infinity();
      return;
    }
    passed_ = passed_ && within_tolerance(error, tol_, scale);
    worst_ = std::max(worst_, error / (scale + kScaleFloor));
  }

  AxiomCheck result() const { return {name_, passed_, worst_}; }

 private:
  std::string name_;
  double tol_;
  bool passed_ = true;
  double worst_ = 0.0;
};

}  // namespace

ValidationReport validate(const CartanStructure& s, const ValidationOptions& options) {
  ValidationReport report{s.name(), {}};
  const double tol = options.tol;
  SampleStream stream(options.seed);

  SampledAxiom involution("theta_involution", tol);
  SampledAxiom automorphism("theta_automorphism", tol);
  SampledAxiom symmetry("b_symmetry", tol);
  SampledAxiom ad_invariance("b_ad_invariance", tol);
  SampledAxiom eigenspaces("split_eigenspaces", tol);
  SampledAxiom orthogonality("split_orthogonality", tol);
  SampledAxiom kk("inclusion_kk_in_k", tol);
  SampledAxiom pp("inclusion_pp_in_k", tol);
  SampledAxiom kp("inclusion_kp_in_p", tol);
  SampledAxiom adjoint("adjoint_identity", tol);

  const int trials = std::max(1, options.trials);
  for (int t = 0; t < trials; ++t) {
    const MatrixElement x = random_in_algebra(s, stream);
    const MatrixElement y = random_in_algebra(s, stream);
    const MatrixElement z = random_in_algebra(s, stream);
    const double nx = x.norm();
    const double ny = y.norm();
    const double nz = z.norm();

    involution.observe((s.theta(s.theta(x)) - x).norm(), nx);
    automorphism.observe((s.theta(bracket(x, y)) - bracket(s.theta(x), s.theta(y))).norm(), nx * ny);
    symmetry.observe(std::abs(s.bform(x, y) - s.bform(y, x)), nx * ny);
    ad_invariance.observe(std::abs(s.bform(bracket(x, y), z) + s.bform(y, bracket(x, z))),
                          nx * ny * nz);

    const ThetaSplit sx = theta_split(s, x);
    const ThetaSplit sy = theta_split(s, y);
    eigenspaces.observe((s.theta(sx.p_part) + sx.p_part).norm() + (s.theta(sx.k_part) - sx.k_part).norm(),
                        nx);
    orthogonality.observe(std::abs(s.inner(sx.p_part, sy.k_part)), nx * ny);

    const double pk_scale = sx.k_part.norm() * sy.k_part.norm();
    kk.observe(theta_split(s, bracket(sx.k_part, sy.k_part)).p_part.norm(), pk_scale);
    pp.observe(theta_split(s, bracket(sx.p_part, sy.p_part)).p_part.norm(),
               sx.p_part.norm() * sy.p_part.norm());
    kp.observe(theta_split(s, bracket(sx.k_part, sy.p_part)).k_part.norm(),
               sx.k_part.norm() * sy.p_part.norm());

    adjoint.observe(std::abs(s.inner(bracket(x, z), y) + s.inner(z, bracket(s.theta(x), y))),
                    nx * ny * nz);
  }

  // Positive definiteness of B_theta on the cell basis via the Gram matrix.
  const auto basis = cell_basis(s.n(), s.field());
  const auto dim = static_cast<Eigen::Index>(basis.size());
  RealMatrix gram(dim, dim);
  for (Eigen::Index i = 0; i < dim; ++i) {
    for (Eigen::Index j = 0; j < dim; ++j) gram(i, j) = s.inner(basis[i], basis[j]);
  }
  AxiomCheck positivity{"b_theta_positive_definite", false, 0.0};
  const double asymmetry = (gram - gram.transpose()).cwiseAbs().maxCoeff();
  if (gram.allFinite()) {
    Eigen::SelfAdjointEigenSolver<RealMatrix> eig(0.5 * (gram + gram.transpose()), Eigen::EigenvaluesOnly);
    positivity.measure = eig.eigenvalues().minCoeff();
    positivity.passed = asymmetry <= tol * (gram.norm() + kScaleFloor) && positivity.measure > tol;
  }

  report.checks = {involution.result(), automorphism.result(), symmetry.result(), ad_invariance.result(),
                   positivity,          eigenspaces.result(),  orthogonality.result(), kk.result(),
                   pp.result(),         kp.result(),           adjoint.result()};
  return report;
}

}  // namespace liecurv
