#pragma once

#include <utility>
#include <vector>

#include "liecurv/cartan_structures.hpp"

namespace liecurv {

// Independent verification paths. Nothing here calls the closed-form
// connection or curvature formulas: the connection is solved from the
// Koszul identity over an orthonormal basis and the curvature is evaluated
// from its definition on top of it.

/// A B_theta-orthonormal basis of the whole algebra.
class OrthonormalBasis {
 public:
  /// The cell basis E_ij (plus i E_ij for complex fields), which is exactly
  /// orthonormal for gl_real and gl_complex. Throws IncompleteBasis if it is
  /// not orthonormal under `s` within 1e-13.
  static OrthonormalBasis standard(const CartanStructure& s);

  /// Wraps caller-supplied elements after checking orthonormality (1e-13);
  /// completeness is checked where the basis is used.
  static OrthonormalBasis from_elements(const CartanStructure& s, std::vector<MatrixElement> elements);

  const std::vector<MatrixElement>& elements() const { return elements_; }
  std::size_t size() const { return elements_.size(); }

 private:
  explicit OrthonormalBasis(std::vector<MatrixElement> elements) : elements_(std::move(elements)) {}

  std::vector<MatrixElement> elements_;
};

/// sum_i 1/2 (<[u,v],e_i> - <[v,e_i],u> - <[u,e_i],v>) e_i.
/// Throws IncompleteBasis if the basis does not span the algebra.
MatrixElement nabla_from_metric(const CartanStructure& s, const MatrixElement& u, const MatrixElement& v,
                                const OrthonormalBasis& basis);

/// R(u,v)w with every covariant derivative taken from nabla_from_metric.
MatrixElement curvature_from_definition(const CartanStructure& s, const MatrixElement& u,
                                        const MatrixElement& v, const MatrixElement& w,
                                        const OrthonormalBasis& basis);

/// <R(u,v)v,u> from the definition.
double quartic_from_definition(const CartanStructure& s, const MatrixElement& u, const MatrixElement& v,
                               const OrthonormalBasis& basis);

/// Two polynomials of degree `deg` in one random matrix, each rescaled to
/// unit Frobenius norm, so they commute up to rounding (|[u,v]| <= 1e-12).
/// Requires n >= 2 and deg >= 1.
std::pair<MatrixElement, MatrixElement> commuting_pair(Seed seed, int n, int deg, Field field = Field::kReal);

}  // namespace liecurv
