#pragma once

#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "liecurv/cartan_structures.hpp"

namespace liecurv {

// Geodesics of the left-invariant Frobenius metric on GL(n,R) through the
// identity, and totally-geodesic checks for closed subgroups.

/// gamma(t) = exp(t u^T) exp(t (u - u^T)), the geodesic with gamma(0) = I and
/// gamma'(0) = u. Real field only (throws DimensionMismatch otherwise).
MatrixElement geodesic_point(const MatrixElement& u, double t);

/// Body velocity omega(t) = gamma(t)^{-1} gamma'(t)
///   = exp(-t s) u^T exp(t s) + s,   s = u - u^T.
MatrixElement geodesic_body_velocity(const MatrixElement& u, double t);

/// |omega'(t) + nabla_omega omega| with omega' from a central difference of
/// step h. Vanishes (up to O(h^2)) exactly when gamma is a geodesic.
double geodesic_residual(const CartanStructure& s, const MatrixElement& u, double t, double h = 1e-5);

struct GeodesicSample {
  double t = 0.0;
  MatrixElement gamma;
  MatrixElement omega;
  double residual = 0.0;
};

/// Samples t = 0, t_max/(steps-1), ..., t_max (steps >= 2).
std::vector<GeodesicSample> trace_geodesic(const CartanStructure& s, const MatrixElement& u, double t_max,
                                           int steps, double h = 1e-5);

namespace experimental {

// Candidate generalization to an arbitrary structure:
//   gamma(t) = exp(-t theta u) exp(t (u + theta u)).
// For gl_real it coincides with the functions above. It is not an
// established result for general reductive groups; use geodesic_residual
// below to certify individual curves.

MatrixElement geodesic_point(const CartanStructure& s, const MatrixElement& u, double t);
MatrixElement geodesic_body_velocity(const CartanStructure& s, const MatrixElement& u, double t);
double geodesic_residual(const CartanStructure& s, const MatrixElement& u, double t, double h = 1e-5);
std::vector<GeodesicSample> trace_geodesic(const CartanStructure& s, const MatrixElement& u, double t_max,
                                           int steps, double h = 1e-5);

}  // namespace experimental

// --- subgroups ----------------------------------------------------------------

/// A closed subgroup H of GL(n,R) described by membership defects.
struct SubgroupSpec {
  std::string name;
  int n = 0;
  /// >= 0, zero exactly on H.
  std::function<double(const MatrixElement&)> group_defect;
  /// >= 0, zero exactly on the Lie algebra h.
  std::function<double(const MatrixElement&)> algebra_defect;
  /// Maps an arbitrary gl(n,R) element into h (used to draw tangents).
  std::function<MatrixElement(const MatrixElement&)> to_algebra;
  bool transpose_invariant = true;
};

/// SO(n), SL(n), O(p,q) (n = p + q) and UT(n), the upper-triangular group
/// kept as a non-transpose-invariant control. Throws UnknownGroup.
SubgroupSpec builtin_subgroup(std::string_view name, int n, int p = 0, int q = 0);

/// Parses "so:<n>", "sl:<n>", "opq:<p>,<q>", "ut:<n>"; throws ParseError.
SubgroupSpec parse_subgroup(std::string_view selector);

struct TotallyGeodesicReport {
  std::string group;
  double max_defect = 0.0;
  double t_at_max = 0.0;
  double threshold = 0.0;
  /// Smallest |det gamma(t)| seen; the geodesic must stay in GL(n).
  double min_abs_det = 0.0;
  bool passed = false;
};

inline constexpr int kDefaultGridPoints = 64;

/// Follows the GL(n,R) geodesic tangent to u on a uniform grid of `steps`
/// points in [0, t_max] and reports the worst group defect. Passes when
/// max_defect <= 1e-9 (1 + |u| t_max). Throws TangentNotInAlgebra when
/// algebra_defect(u) > 1e-10 |u|.
TotallyGeodesicReport totally_geodesic_check(const SubgroupSpec& spec, const MatrixElement& u, double t_max,
                                             int steps = kDefaultGridPoints);

}  // namespace liecurv
