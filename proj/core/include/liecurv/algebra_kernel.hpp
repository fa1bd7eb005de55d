#pragma once

#include <complex>
#include <cstdint>
#include <initializer_list>
#include <random>
#include <string_view>
#include <vector>

#include <Eigen/Core>

#include "liecurv/errors.hpp"

namespace liecurv {

enum class Field { kReal, kComplex };

std::string_view to_string(Field field);

using Scalar = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using RealMatrix = Eigen::MatrixXd;

/// Additive floor applied to every relative tolerance scale.
inline constexpr double kScaleFloor = 1e-14;

/// True when `error <= tol * (scale + kScaleFloor)`.
inline bool within_tolerance(double error, double tol, double scale) {
  return error <= tol * (scale + kScaleFloor);
}

/**
 * Dense square matrix over the reals or the complexes.
 *
 * Serves both as a Lie algebra element (gl(n,R), gl(n,C)) and as a group
 * element. Storage is always complex; real-field elements keep every
 * imaginary part exactly zero, so adjoint() is the plain transpose for them.
 *
 * Factories reject non-finite entries. Arithmetic operators do not re-check
 * finiteness; operations that can overflow (matrix_exp) check their results.
 */
class MatrixElement {
 public:
  MatrixElement() = default;

  static MatrixElement zero(int n, Field field = Field::kReal);
  static MatrixElement identity(int n, Field field = Field::kReal);
  /// `value` at (row, col), zero elsewhere. A real field requires a real value.
  static MatrixElement unit(int n, int row, int col, Field field = Field::kReal,
                            Scalar value = 1.0);
  static MatrixElement diagonal(std::initializer_list<double> entries);

  static MatrixElement from_real(const RealMatrix& m);
  static MatrixElement from_complex(const ComplexMatrix& m);
  /// Real matrix from nested rows; throws DimensionMismatch if not square.
  static MatrixElement from_rows(std::initializer_list<std::initializer_list<double>> rows);

  int n() const { return static_cast<int>(data_.rows()); }
  Field field() const { return field_; }
  bool is_real() const { return field_ == Field::kReal; }

  const ComplexMatrix& data() const { return data_; }
  Scalar operator()(int row, int col) const { return data_(row, col); }
  RealMatrix real_part() const { return data_.real(); }

  MatrixElement adjoint() const;
  MatrixElement transpose() const;

  double norm() const { return data_.norm(); }
  double squared_norm() const { return data_.squaredNorm(); }
  bool all_finite() const { return data_.allFinite(); }

  /// Multiply by a scalar; real fields accept only real scalars.
  MatrixElement scaled(Scalar c) const;

  MatrixElement& operator+=(const MatrixElement& rhs);
  MatrixElement& operator-=(const MatrixElement& rhs);
  MatrixElement& operator*=(double c);

  friend MatrixElement operator+(MatrixElement lhs, const MatrixElement& rhs) { return lhs += rhs; }
  friend MatrixElement operator-(MatrixElement lhs, const MatrixElement& rhs) { return lhs -= rhs; }
  friend MatrixElement operator*(MatrixElement lhs, double c) { return lhs *= c; }
  friend MatrixElement operator*(double c, MatrixElement rhs) { return rhs *= c; }
  MatrixElement operator-() const;

  /// Matrix product (group multiplication).
  friend MatrixElement operator*(const MatrixElement& lhs, const MatrixElement& rhs);

  friend bool operator==(const MatrixElement& a, const MatrixElement& b) {
    return a.field_ == b.field_ && a.data_.rows() == b.data_.rows() && a.data_ == b.data_;
  }

 private:
  MatrixElement(Field field, ComplexMatrix data) : field_(field), data_(std::move(data)) {}

  Field field_ = Field::kReal;
  ComplexMatrix data_;
};

/// Throws DimensionMismatch unless `a` and `b` share side length and field.
void require_compatible(const MatrixElement& a, const MatrixElement& b, std::string_view op);

/// Lie bracket uv - vu.
MatrixElement bracket(const MatrixElement& u, const MatrixElement& v);

/// tr(u^T v) on real matrices, Re tr(u^* v) on complex ones.
double frobenius_inner(const MatrixElement& u, const MatrixElement& v);

/// Scaling-and-squaring matrix exponential with Padé degrees 3..13.
/// Throws Overflow when the result is not finite.
MatrixElement matrix_exp(const MatrixElement& u);

Scalar determinant(const MatrixElement& g);

/// The standard cell basis E_ij (and i*E_ij for the complex field), row-major.
std::vector<MatrixElement> cell_basis(int n, Field field);

// --- deterministic sampling ------------------------------------------------

struct Seed {
  std::uint64_t value = 0;
  friend bool operator==(Seed, Seed) = default;
};

/// Independent child seed for trial `index` (splitmix64 mixing of seed + index).
Seed derive_seed(Seed base, std::uint64_t index);

/// Seeded stream of uniform doubles. mt19937_64 output is fixed by the
/// standard and the mapping to [lo, hi] is done here, so streams are
/// reproducible across standard library implementations.
class SampleStream {
 public:
  explicit SampleStream(Seed seed) : engine_(seed.value) {}

  double uniform(double lo = -1.0, double hi = 1.0);

 private:
  std::mt19937_64 engine_;
};

/// Entries i.i.d. uniform in [-1, 1]; complex entries draw real then imaginary part.
MatrixElement random_element(SampleStream& stream, int n, Field field = Field::kReal);
MatrixElement random_element(Seed seed, int n, Field field = Field::kReal);

}  // namespace liecurv
