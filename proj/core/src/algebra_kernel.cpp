#include "liecurv/algebra_kernel.hpp"

#include <Eigen/LU>
#include <string>

namespace liecurv {

std::string_view to_string(Field field) {
  return field == Field::kReal ? "real" : "complex";
}

namespace {

void require_positive_size(int n) {
  if (n < 1) throw DimensionMismatch("matrix side length must be >= 1, got " + std::to_string(n));
}

void require_finite(const ComplexMatrix& m) {
  if (!m.allFinite()) throw NonFiniteEntry("matrix has NaN or infinite entries");
}

}  // namespace

MatrixElement MatrixElement::zero(int n, Field field) {
  require_positive_size(n);
  return {field, ComplexMatrix::Zero(n, n)};
}

MatrixElement MatrixElement::identity(int n, Field field) {
  require_positive_size(n);
  return {field, ComplexMatrix::Identity(n, n)};
}

MatrixElement MatrixElement::unit(int n, int row, int col, Field field, Scalar value) {
  require_positive_size(n);
  if (row < 0 || row >= n || col < 0 || col >= n) {
    throw DimensionMismatch("unit cell index out of range");
  }
  if (field == Field::kReal && value.imag() != 0.0) {
    throw DimensionMismatch("real-field unit cell with non-real value");
  }
  ComplexMatrix m = ComplexMatrix::Zero(n, n);
  m(row, col) = value;
  require_finite(m);
  return {field, std::move(m)};
}

MatrixElement MatrixElement::diagonal(std::initializer_list<double> entries) {
  const int n = static_cast<int>(entries.size());
  require_positive_size(n);
  ComplexMatrix m = ComplexMatrix::Zero(n, n);
  int i = 0;
  for (double d : entries) {
    m(i, i) = d;
    ++i;
  }
  require_finite(m);
  return {Field::kReal, std::move(m)};
}

MatrixElement MatrixElement::from_real(const RealMatrix& m) {
  if (m.rows() != m.cols()) throw DimensionMismatch("matrix is not square");
  require_positive_size(static_cast<int>(m.rows()));
  ComplexMatrix c = m.cast<Scalar>();
  require_finite(c);
  return {Field::kReal, std::move(c)};
}

MatrixElement MatrixElement::from_complex(const ComplexMatrix& m) {
  if (m.rows() != m.cols()) throw DimensionMismatch("matrix is not square");
  require_positive_size(static_cast<int>(m.rows()));
  require_finite(m);
  return {Field::kComplex, m};
}

MatrixElement MatrixElement::from_rows(std::initializer_list<std::initializer_list<double>> rows) {
  const auto n = static_cast<Eigen::Index>(rows.size());
  RealMatrix m(n, n);
  Eigen::Index i = 0;
  for (const auto& row : rows) {
    if (static_cast<Eigen::Index>(row.size()) != n) throw DimensionMismatch("matrix is not square");
    Eigen::Index j = 0;
    for (double x : row) m(i, j++) = x;
    ++i;
  }
  return from_real(m);
}

MatrixElement MatrixElement::adjoint() const { return {field_, data_.adjoint()}; }

MatrixElement MatrixElement::transpose() const { return {field_, data_.transpose()}; }

MatrixElement MatrixElement::scaled(Scalar c) const {
  if (field_ == Field::kReal && c.imag() != 0.0) {
    throw DimensionMismatch("cannot scale a real-field matrix by a non-real scalar");
  }
  if (field_ == Field::kReal) return {field_, data_ * c.real()};
  return {field_, data_ * c};
}

MatrixElement& MatrixElement::operator+=(const MatrixElement& rhs) {
  require_compatible(*this, rhs, "+");
  data_ += rhs.data_;
  return *this;
}

MatrixElement& MatrixElement::operator-=(const MatrixElement& rhs) {
  require_compatible(*this, rhs, "-");
  data_ -= rhs.data_;
  return *this;
}

MatrixElement& MatrixElement::operator*=(double c) {
  data_ *= c;
  return *this;
}

MatrixElement MatrixElement::operator-() const { return {field_, -data_}; }

MatrixElement operator*(const MatrixElement& lhs, const MatrixElement& rhs) {
  require_compatible(lhs, rhs, "*");
  return {lhs.field_, lhs.data_ * rhs.data_};
}

void require_compatible(const MatrixElement& a, const MatrixElement& b, std::string_view op) {
  if (a.n() != b.n() || a.field() != b.field()) {
    std::string msg = "operands of ";
    msg += op;
    msg += " differ: " + std::to_string(a.n()) + "x" + std::to_string(a.n()) + " " +
           std::string(to_string(a.field())) + " vs " + std::to_string(b.n()) + "x" +
           std::to_string(b.n()) + " " + std::string(to_string(b.field()));
    throw DimensionMismatch(msg);
  }
}

MatrixElement bracket(const MatrixElement& u, const MatrixElement& v) {
  require_compatible(u, v, "bracket");
  return u * v - v * u;
}

double frobenius_inner(const MatrixElement& u, const MatrixElement& v) {
  require_compatible(u, v, "frobenius_inner");
  // Re tr(u^* v) = Re sum_ij conj(u_ij) v_ij
  return u.data().cwiseProduct(v.data().conjugate()).sum().real();
}

Scalar determinant(const MatrixElement& g) {
  if (g.is_real()) return g.real_part().determinant();
  return g.data().determinant();
}

std::vector<MatrixElement> cell_basis(int n, Field field) {
  std::vector<MatrixElement> basis;
  basis.reserve(static_cast<std::size_t>(field == Field::kReal ? n * n : 2 * n * n));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) basis.push_back(MatrixElement::unit(n, i, j, field));
  }
  if (field == Field::kComplex) {
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        basis.push_back(MatrixElement::unit(n, i, j, field, Scalar(0.0, 1.0)));
      }
    }
  }
  return basis;
}

Seed derive_seed(Seed base, std::uint64_t index) {
  std::uint64_t z = base.value + 0x9E3779B97F4A7C15ULL * (index + 1);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return Seed{z ^ (z >> 31)};
}

double SampleStream::uniform(double lo, double hi) {
  // 53 high bits -> [0, 1)
  const double unit = static_cast<double>(engine_() >> 11) * 0x1.0p-53;
  return lo + (hi - lo) * unit;
}

MatrixElement random_element(SampleStream& stream, int n, Field field) {
  require_positive_size(n);
  ComplexMatrix m(n, n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      const double re = stream.uniform();
      const double im = field == Field::kComplex ? stream.uniform() : 0.0;
      m(i, j) = Scalar(re, im);
    }
  }
  return field == Field::kReal ? MatrixElement::from_real(m.real()) : MatrixElement::from_complex(m);
}

MatrixElement random_element(Seed seed, int n, Field field) {
  SampleStream stream(seed);
  return random_element(stream, n, field);
}

}  // namespace liecurv
