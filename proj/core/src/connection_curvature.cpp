#include "liecurv/connection_curvature.hpp"

#include <cmath>
#include <string>

namespace liecurv {

MatrixElement nabla(const CartanStructure& s, const MatrixElement& u, const MatrixElement& v) {
  s.require_member(u);
  s.require_member(v);
  return 0.5 * (bracket(u, v) - bracket(u, s.theta(v)) - bracket(v, s.theta(u)));
}

std::string_view to_string(NablaCase c) {
  switch (c) {
    case NablaCase::kPP: return "p,p";
    case NablaCase::kKK: return "k,k";
    case NablaCase::kPK: return "p,k";
    case NablaCase::kKP: return "k,p";
  }
  return "?";
}

namespace {

bool in_k(Purity purity) { return purity == Purity::kK; }

Purity require_pure(const CartanStructure& s, const MatrixElement& x, const char* which) {
  s.require_member(x);
  const Purity purity = classify(s, x);
  if (purity == Purity::kMixed) {
    throw NotPureType(std::string(which) + " has components in both p and k");
  }
  return purity;
}

}  // namespace

NablaCaseResult nabla_case(const CartanStructure& s, const MatrixElement& u, const MatrixElement& v) {
  const bool uk = in_k(require_pure(s, u, "u"));
  const bool vk = in_k(require_pure(s, v, "v"));
  const MatrixElement uv = bracket(u, v);
  if (uk == vk) return {0.5 * uv, uk ? NablaCase::kKK : NablaCase::kPP};
  if (!uk) return {-0.5 * uv, NablaCase::kPK};
  return {1.5 * uv, NablaCase::kKP};
}

MatrixElement curvature_tensor(const CartanStructure& s, const MatrixElement& u, const MatrixElement& v,
                               const MatrixElement& w) {
  return nabla(s, u, nabla(s, v, w)) - nabla(s, v, nabla(s, u, w)) - nabla(s, bracket(u, v), w);
}

QuarticTerms quartic_terms(const CartanStructure& s, const MatrixElement& u, const MatrixElement& v) {
  s.require_member(u);
  s.require_member(v);
  const ThetaSplit su = theta_split(s, u);
  const ThetaSplit sv = theta_split(s, v);
  const MatrixElement pp = bracket(su.p_part, sv.p_part);
  const MatrixElement kk = bracket(su.k_part, sv.k_part);
  return {-2.0 * s.norm_sq(pp), 0.25 * s.norm_sq(bracket(u, v)), 2.0 * s.inner(pp, kk)};
}

double quartic(const CartanStructure& s, const MatrixElement& u, const MatrixElement& v) {
  return quartic_terms(s, u, v).total();
}

SectionReport sectional(const CartanStructure& s, const MatrixElement& u, const MatrixElement& v) {
  const QuarticTerms terms = quartic_terms(s, u, v);
  const double uu = s.inner(u, u);
  const double vv = s.inner(v, v);
  const double uv = s.inner(u, v);
  const double area_sq = uu * vv - uv * uv;
  if (!(area_sq > kDegenerateTol * uu * vv)) {
    throw DegenerateSection("u and v are linearly dependent (area^2 = " + std::to_string(area_sq) + ")");
  }
  SectionReport report;
  report.quartic = terms.total();
  report.area_sq = area_sq;
  report.sectional = report.quartic / area_sq;
  report.term_pp = terms.pp;
  report.term_mixed = terms.mixed;
  report.term_cross = terms.cross;
  return report;
}

std::string_view to_string(SpecialCase c) {
  switch (c) {
    case SpecialCase::kPP: return "p*p";
    case SpecialCase::kKK: return "k*k";
    case SpecialCase::kPK: return "p*k";
    case SpecialCase::kGK: return "g*k";
    case SpecialCase::kGP: return "g*p";
  }
  return "?";
}

SpecialQuartic quartic_special(const CartanStructure& s, const MatrixElement& u, const MatrixElement& v) {
  const Purity pv = require_pure(s, v, "v");
  s.require_member(u);
  const Purity pu = classify(s, u);
  const double quarter = 0.25 * s.norm_sq(bracket(u, v));
  if (in_k(pv)) {
    if (pu == Purity::kK) return {quarter, SpecialCase::kKK};
    if (pu == Purity::kP || pu == Purity::kZero) return {quarter, SpecialCase::kPK};
    return {quarter, SpecialCase::kGK};
  }
  if (pu == Purity::kP || pu == Purity::kZero) return {-1.75 * s.norm_sq(bracket(u, v)), SpecialCase::kPP};
  const ThetaSplit su = theta_split(s, u);
  return {-1.75 * s.norm_sq(bracket(su.p_part, v)) + 0.25 * s.norm_sq(bracket(su.k_part, v)),
          SpecialCase::kGP};
}

double quartic_commuting(const CartanStructure& s, const MatrixElement& u, const MatrixElement& v,
                         double tol) {
  s.require_member(u);
  s.require_member(v);
  const double gap = s.norm(bracket(u, v));
  if (!(gap <= tol * (s.norm(u) * s.norm(v) + 1.0))) {
    throw NotCommuting("|[u,v]| = " + std::to_string(gap) + " exceeds the commuting tolerance");
  }
  const MatrixElement pp = bracket(theta_split(s, u).p_part, theta_split(s, v).p_part);
  return -4.0 * s.norm_sq(pp);
}

double bracket_norm_identity_gap(const CartanStructure& s, const MatrixElement& u,
                                 const MatrixElement& v) {
  s.require_member(u);
  s.require_member(v);
  const ThetaSplit su = theta_split(s, u);
  const ThetaSplit sv = theta_split(s, v);
  const double lhs = s.norm_sq(bracket(u, v));
  const double rhs = s.norm_sq(bracket(u, sv.p_part)) + s.norm_sq(bracket(u, sv.k_part)) -
                     2.0 * s.inner(bracket(sv.p_part, sv.k_part), bracket(su.p_part, su.k_part));
  return lhs - rhs;
}

}  // namespace liecurv
