#include "liecurv/geodesics_subgroups.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <limits>

#include "liecurv/connection_curvature.hpp"

namespace liecurv {

namespace {

void require_real(const MatrixElement& u) {
  if (!u.is_real()) throw DimensionMismatch("the GL(n,R) geodesic formula needs a real matrix");
}

template <typename Velocity>
double residual_from(const CartanStructure& s, const MatrixElement& u, double t, double h,
                     Velocity&& velocity) {
  if (!(h > 0.0)) throw Error("finite-difference step must be positive");
  s.require_member(u);
  const MatrixElement omega = velocity(t);
  const MatrixElement derivative = (1.0 / (2.0 * h)) * (velocity(t + h) - velocity(t - h));
  return (derivative + nabla(s, omega, omega)).norm();
}

template <typename Point, typename Velocity>
std::vector<GeodesicSample> trace_with(const CartanStructure& s, const MatrixElement& u, double t_max,
                                       int steps, double h, Point&& point, Velocity&& velocity) {
  if (steps < 2) throw Error("a geodesic trace needs at least 2 steps");
  std::vector<GeodesicSample> samples;
  samples.reserve(static_cast<std::size_t>(steps));
  for (int i = 0; i < steps; ++i) {
    const double t = t_max * static_cast<double>(i) / static_cast<double>(steps - 1);
    samples.push_back({t, point(t), velocity(t), residual_from(s, u, t, h, velocity)});
  }
  return samples;
}

}  // namespace

MatrixElement geodesic_point(const MatrixElement& u, double t) {
  require_real(u);
  const MatrixElement ut = u.transpose();
  return matrix_exp(t * ut) * matrix_exp(t * (u - ut));
}

MatrixElement geodesic_body_velocity(const MatrixElement& u, double t) {
  require_real(u);
  const MatrixElement ut = u.transpose();
  const MatrixElement skew = u - ut;
  return matrix_exp(-t * skew) * ut * matrix_exp(t * skew) + skew;
}

double geodesic_residual(const CartanStructure& s, const MatrixElement& u, double t, double h) {
  require_real(u);
  return residual_from(s, u, t, h, [&](double tau) { return geodesic_body_velocity(u, tau); });
}

std::vector<GeodesicSample> trace_geodesic(const CartanStructure& s, const MatrixElement& u, double t_max,
                                           int steps, double h) {
  require_real(u);
  return trace_with(
      s, u, t_max, steps, h, [&](double t) { return geodesic_point(u, t); },
      [&](double t) { return geodesic_body_velocity(u, t); });
}

namespace experimental {

MatrixElement geodesic_point(const CartanStructure& s, const MatrixElement& u, double t) {
  const MatrixElement tu = s.theta(u);
  return matrix_exp(-t * tu) * matrix_exp(t * (u + tu));
}

MatrixElement geodesic_body_velocity(const CartanStructure& s, const MatrixElement& u, double t) {
  const MatrixElement tu = s.theta(u);
  const MatrixElement sigma = u + tu;
  return matrix_exp(-t * sigma) * (-tu) * matrix_exp(t * sigma) + sigma;
}

double geodesic_residual(const CartanStructure& s, const MatrixElement& u, double t, double h) {
  return residual_from(s, u, t, h, [&](double tau) { return geodesic_body_velocity(s, u, tau); });
}

std::vector<GeodesicSample> trace_geodesic(const CartanStructure& s, const MatrixElement& u, double t_max,
                                           int steps, double h) {
  return trace_with(
      s, u, t_max, steps, h, [&](double t) { return geodesic_point(s, u, t); },
      [&](double t) { return geodesic_body_velocity(s, u, t); });
}

}  // namespace experimental

namespace {

RealMatrix signature_matrix(int p, int q) {
  RealMatrix eta = RealMatrix::Identity(p + q, p + q);
  for (int i = p; i < p + q; ++i) eta(i, i) = -1.0;
  return eta;
}

std::string lowercase(std::string_view text) {
  std::string out(text);
  std::transform(out.begin(), out.end(), out.begin(), [](unsigned char c) { return std::tolower(c); });
  return out;
}

SubgroupSpec special_orthogonal(int n) {
  SubgroupSpec spec;
  spec.name = "SO(" + std::to_string(n) + ")";
  spec.n = n;
  spec.group_defect = [n](const MatrixElement& g) {
    const RealMatrix m = g.real_part();
    return (m.transpose() * m - RealMatrix::Identity(n, n)).norm();
  };
  spec.algebra_defect = [](const MatrixElement& u) { return (u + u.transpose()).norm(); };
  spec.to_algebra = [](const MatrixElement& u) { return 0.5 * (u - u.transpose()); };
  return spec;
}

SubgroupSpec special_linear(int n) {
  SubgroupSpec spec;
  spec.name = "SL(" + std::to_string(n) + ")";
  spec.n = n;
  spec.group_defect = [](const MatrixElement& g) { return std::abs(determinant(g) - 1.0); };
  spec.algebra_defect = [](const MatrixElement& u) { return std::abs(u.data().trace()); };
  spec.to_algebra = [n](const MatrixElement& u) {
    return u - (u.data().trace().real() / n) * MatrixElement::identity(n);
  };
  return spec;
}

SubgroupSpec indefinite_orthogonal(int p, int q) {
  const int n = p + q;
  const RealMatrix eta = signature_matrix(p, q);
  SubgroupSpec spec;
  spec.name = "O(" + std::to_string(p) + "," + std::to_string(q) + ")";
  spec.n = n;
  spec.group_defect = [eta](const MatrixElement& g) {
    const RealMatrix m = g.real_part();
    return (m.transpose() * eta * m - eta).norm();
  };
  spec.algebra_defect = [eta](const MatrixElement& u) {
    const RealMatrix m = u.real_part();
    return (m.transpose() * eta + eta * m).norm();
  };
  // u in o(p,q) iff eta u is skew-symmetric.
  spec.to_algebra = [eta](const MatrixElement& u) {
    const RealMatrix k = eta * u.real_part();
    return MatrixElement::from_real(eta * (0.5 * (k - k.transpose())));
  };
  return spec;
}

SubgroupSpec upper_triangular(int n) {
  const auto below_diagonal = [](const MatrixElement& g) {
    double worst = 0.0;
    for (int i = 1; i < g.n(); ++i) {
      for (int j = 0; j < i; ++j) worst = std::max(worst, std::abs(g(i, j)));
    }
    return worst;
  };
  SubgroupSpec spec;
  spec.name = "UT(" + std::to_string(n) + ")";
  spec.n = n;
  spec.group_defect = below_diagonal;
  spec.algebra_defect = below_diagonal;
  spec.to_algebra = [](const MatrixElement& u) {
    return MatrixElement::from_real(u.real_part().triangularView<Eigen::Upper>().toDenseMatrix());
  };
  spec.transpose_invariant = false;
  return spec;
}

}  // namespace

SubgroupSpec builtin_subgroup(std::string_view name, int n, int p, int q) {
  const std::string key = lowercase(name);
  if (key == "opq" || key == "o(p,q)") {
    if (p < 0 || q < 0 || p + q < 1 || (n != 0 && n != p + q)) {
      throw UnknownGroup("O(p,q) needs p, q >= 0 with p + q = n >= 1");
    }
    return indefinite_orthogonal(p, q);
  }
  if (n < 1) throw UnknownGroup("subgroup side length must be >= 1");
  if (key == "so") return special_orthogonal(n);
  if (key == "sl") return special_linear(n);
  if (key == "ut") return upper_triangular(n);
  throw UnknownGroup("unknown subgroup \"" + std::string(name) + "\" (expected SO, SL, O(p,q) or UT)");
}

namespace {

int parse_int(std::string_view text, std::string_view selector) {
  int value = 0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size() || value < 0 || value > 64) {
    throw ParseError("bad integer in group selector \"" + std::string(selector) + "\"");
  }
  return value;
}

}  // namespace

SubgroupSpec parse_subgroup(std::string_view selector) {
  const auto colon = selector.find(':');
  if (colon == std::string_view::npos) {
    throw ParseError("group selector \"" + std::string(selector) + "\" must look like so:<n>");
  }
  const std::string kind = lowercase(selector.substr(0, colon));
  const std::string_view args = selector.substr(colon + 1);
  try {
    if (kind == "opq") {
      const auto comma = args.find(',');
      if (comma == std::string_view::npos) throw ParseError("opq selector needs <p>,<q>");
      const int p = parse_int(args.substr(0, comma), selector);
      const int q = parse_int(args.substr(comma + 1), selector);
      return builtin_subgroup(kind, p + q, p, q);
    }
    return builtin_subgroup(kind, parse_int(args, selector));
  } catch (const UnknownGroup& e) {
    throw ParseError(e.what());
  }
}

TotallyGeodesicReport totally_geodesic_check(const SubgroupSpec& spec, const MatrixElement& u, double t_max,
                                             int steps) {
  require_real(u);
  if (u.n() != spec.n) throw DimensionMismatch("tangent size does not match " + spec.name);
  if (steps < 2) throw Error("totally_geodesic_check needs at least 2 grid points");
  const double tangent_defect = spec.algebra_defect(u);
  if (!(tangent_defect <= 1e-10 * u.norm())) {
    throw TangentNotInAlgebra("tangent is not in the Lie algebra of " + spec.name +
                              " (defect " + std::to_string(tangent_defect) + ")");
  }

  TotallyGeodesicReport report;
  report.group = spec.name;
  report.threshold = 1e-9 * (1.0 + u.norm() * t_max);
  report.min_abs_det = std::numeric_limits<double>::infinity();
  for (int i = 0; i < steps; ++i) {
    const double t = t_max * static_cast<double>(i) / static_cast<double>(steps - 1);
    const MatrixElement gamma = geodesic_point(u, t);
    const double defect = spec.group_defect(gamma);
    if (defect > report.max_defect || i == 0) {
      report.max_defect = defect;
      report.t_at_max = t;
    }
    report.min_abs_det = std::min(report.min_abs_det, std::abs(determinant(gamma)));
  }
  report.passed = report.max_defect <= report.threshold && report.min_abs_det > 0.0;
  return report;
}

}  // namespace liecurv
