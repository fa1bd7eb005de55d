#pragma once

#include <string_view>

#include "liecurv/cartan_structures.hpp"

namespace liecurv {

// Left-invariant Levi-Civita connection and curvature of the metric B_theta,
// in closed form on the Lie algebra. Everything here is generic over the
// CartanStructure; for gl_real the formulas reduce to the symmetric /
// skew-symmetric split.

/// nabla_u v = 1/2 ([u,v] - [u, theta v] - [v, theta u]).
MatrixElement nabla(const CartanStructure& s, const MatrixElement& u, const MatrixElement& v);

enum class NablaCase { kPP, kKK, kPK, kKP };

std::string_view to_string(NablaCase c);

struct NablaCaseResult {
  MatrixElement value;
  NablaCase which;
};

/// Piecewise form for pure inputs: 1/2[u,v] (p,p and k,k), -1/2[u,v] (u in p,
/// v in k), 3/2[u,v] (u in k, v in p). A zero input counts as p.
/// Throws NotPureType if either input mixes p and k.
NablaCaseResult nabla_case(const CartanStructure& s, const MatrixElement& u, const MatrixElement& v);

/// R(u,v)w = nabla_u nabla_v w - nabla_v nabla_u w - nabla_[u,v] w.
MatrixElement curvature_tensor(const CartanStructure& s, const MatrixElement& u, const MatrixElement& v,
                               const MatrixElement& w);

/// The three terms of the general curvature formula
///   <R(u,v)v,u> = -2|[u1,v1]|^2 + 1/4|[u,v]|^2 + 2<[u1,v1],[u2,v2]>
/// where u1, v1 are the p-parts and u2, v2 the k-parts.
struct QuarticTerms {
  double pp = 0.0;
  double mixed = 0.0;
  double cross = 0.0;

  double total() const { return pp + mixed + cross; }
};

QuarticTerms quartic_terms(const CartanStructure& s, const MatrixElement& u, const MatrixElement& v);

/// <R(u,v)v,u> by the general formula. Always the closed form; the special
/// cases below exist only as cross-checks.
double quartic(const CartanStructure& s, const MatrixElement& u, const MatrixElement& v);

struct SectionReport {
  double quartic = 0.0;
  /// <u,u><v,v> - <u,v>^2
  double area_sq = 0.0;
  double sectional = 0.0;
  double term_pp = 0.0;
  double term_mixed = 0.0;
  double term_cross = 0.0;
};

/// Sections with area_sq <= kDegenerateTol * |u|^2 |v|^2 are rejected.
inline constexpr double kDegenerateTol = 1e-12;

/// Sectional curvature of span{u, v}; throws DegenerateSection for
/// (numerically) dependent u, v.
SectionReport sectional(const CartanStructure& s, const MatrixElement& u, const MatrixElement& v);

enum class SpecialCase {
  kPP,  // u, v in p:   -7/4 |[u,v]|^2
  kKK,  // u, v in k:    1/4 |[u,v]|^2
  kPK,  // u in p, v in k: 1/4 |[u,v]|^2
  kGK,  // v in k:       1/4 |[u,v]|^2
  kGP,  // v in p:      -7/4 |[u1,v]|^2 + 1/4 |[u2,v]|^2
};

std::string_view to_string(SpecialCase c);

struct SpecialQuartic {
  double value = 0.0;
  SpecialCase which;
};

/// Evaluates the special-case theorem matching the classes of u and v.
/// Throws NotPureType if v mixes p and k.
SpecialQuartic quartic_special(const CartanStructure& s, const MatrixElement& u, const MatrixElement& v);

inline constexpr double kCommutingTol = 1e-10;

/// -4 |[u1,v1]|^2 for commuting u, v. Throws NotCommuting when
/// |[u,v]| > tol (|u||v| + 1).
double quartic_commuting(const CartanStructure& s, const MatrixElement& u, const MatrixElement& v,
                         double tol = kCommutingTol);

/// |[u,v]|^2 - (|[u,v1]|^2 + |[u,v2]|^2 - 2<[v1,v2],[u1,u2]>); zero up to
/// rounding for every u, v.
double bracket_norm_identity_gap(const CartanStructure& s, const MatrixElement& u,
                                 const MatrixElement& v);

}  // namespace liecurv
