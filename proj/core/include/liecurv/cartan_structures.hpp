#pragma once

#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "liecurv/algebra_kernel.hpp"

namespace liecurv {

/**
 * Algebraic data of a reductive matrix group: the Cartan involution theta,
 * the invariant form B, and the inner product B_theta(X, Y) = -B(X, theta Y)
 * that defines the left-invariant metric.
 *
 * theta and B are supplied as closures so new structures can be registered
 * without touching the curvature code. Both must be pure: a structure is
 * immutable after construction and may be shared across threads.
 */
class CartanStructure {
 public:
  using Involution = std::function<MatrixElement(const MatrixElement&)>;
  using BilinearForm = std::function<double(const MatrixElement&, const MatrixElement&)>;

  CartanStructure(std::string name, int n, Field field, Involution theta, BilinearForm bform);

  const std::string& name() const { return name_; }
  int n() const { return n_; }
  Field field() const { return field_; }

  MatrixElement theta(const MatrixElement& x) const;
  double bform(const MatrixElement& x, const MatrixElement& y) const;

  /// B_theta(x, y) = -B(x, theta y), the metric at the identity.
  double inner(const MatrixElement& x, const MatrixElement& y) const;
  double norm_sq(const MatrixElement& x) const { return inner(x, x); }
  double norm(const MatrixElement& x) const;

  /// Dimension of the algebra over the reals.
  int real_dimension() const { return field_ == Field::kReal ? n_ * n_ : 2 * n_ * n_; }

  /// Throws DimensionMismatch unless `x` has this structure's size and field.
  void require_member(const MatrixElement& x) const;

 private:
  std::string name_;
  int n_;
  Field field_;
  Involution theta_;
  BilinearForm bform_;
};

/// GL(n,R): theta X = -X^T, B(X,Y) = tr(XY); p symmetric, k skew-symmetric.
CartanStructure gl_real(int n);

/// GL(n,C) as a real group: theta X = -X^*, B(X,Y) = Re tr(XY);
/// p Hermitian, k skew-Hermitian.
CartanStructure gl_complex(int n);

/// Parses "gl:real:<n>" or "gl:complex:<n>"; throws ParseError otherwise.
CartanStructure parse_structure(std::string_view selector);

/// u = p_part + k_part with theta(p_part) = -p_part, theta(k_part) = k_part.
struct ThetaSplit {
  MatrixElement p_part;
  MatrixElement k_part;
};

/// p_part = (u - theta u)/2, k_part = (u + theta u)/2.
ThetaSplit theta_split(const CartanStructure& s, const MatrixElement& u);

enum class Purity { kZero, kP, kK, kMixed };

std::string_view to_string(Purity purity);

/// Inputs whose off-class component is at most this fraction of their norm
/// count as pure.
inline constexpr double kPurityTol = 1e-10;

Purity classify(const CartanStructure& s, const MatrixElement& x, double tol = kPurityTol);

/// Uniform random element of the algebra, and its projections onto p and k.
MatrixElement random_in_algebra(const CartanStructure& s, SampleStream& stream);
MatrixElement random_in_p(const CartanStructure& s, SampleStream& stream);
MatrixElement random_in_k(const CartanStructure& s, SampleStream& stream);

// --- axiom validation -------------------------------------------------------

struct AxiomCheck {
  std::string name;
  bool passed = false;
  /// Largest relative violation over the samples. For the positivity check
  /// this is the smallest eigenvalue of the B_theta Gram matrix instead.
  double measure = 0.0;
};

struct ValidationReport {
  std::string structure;
  std::vector<AxiomCheck> checks;

  bool all_passed() const;
  const AxiomCheck* find(std::string_view name) const;
};

struct ValidationOptions {
  int trials = 100;
  double tol = 1e-12;
  Seed seed{42};
};

/**
 * Checks the algebraic axioms the curvature formulas rely on, by sampling:
 * theta is an involutive Lie algebra automorphism, B is symmetric and
 * ad-invariant, B_theta is positive definite on the cell basis, p and k are
 * B_theta-orthogonal, the bracket inclusions [k,k] in k, [p,p] in k,
 * [k,p] in p, and the adjoint identity <[u,w],v> = -<w,[theta u,v]>.
 *
 * Failures are reported as entries, never thrown. The global Harish-Chandra
 * conditions (diffeomorphism, Int g^C, finite center) are not checked.
 */
ValidationReport validate(const CartanStructure& s, const ValidationOptions& options = {});

}  // namespace liecurv
