#include <algorithm>
#include <cmath>

#include <Eigen/LU>

#include "liecurv/algebra_kernel.hpp"

namespace liecurv {

namespace {

// Padé coefficients b_0..b_m for the diagonal [m/m] approximant of exp.
constexpr double kPade3[] = {120.0, 60.0, 12.0, 1.0};
constexpr double kPade5[] = {30240.0, 15120.0, 3360.0, 420.0, 30.0, 1.0};
constexpr double kPade7[] = {17297280.0, 8648640.0, 1995840.0, 277200.0,
                             25200.0,    1512.0,    56.0,      1.0};
constexpr double kPade9[] = {17643225600.0, 8821612800.0, 2075673600.0, 302702400.0, 30270240.0,
                             2162160.0,     110880.0,     3960.0,       90.0,        1.0};
constexpr double kPade13[] = {64764752532480000.0,
                              32382376266240000.0,
                              7771770303897600.0,
                              1187353796428800.0,
                              129060195264000.0,
                              10559470521600.0,
                              670442572800.0,
                              33522128640.0,
                              1323241920.0,
                              40840800.0,
                              960960.0,
                              16380.0,
                              182.0,
                              1.0};

// Largest 1-norm for which each degree meets unit roundoff in double.
constexpr double kTheta3 = 1.495585217958292e-2;
constexpr double kTheta5 = 2.539398330063230e-1;
constexpr double kTheta7 = 9.504178996162932e-1;
constexpr double kTheta9 = 2.097847961257068e0;
constexpr double kTheta13 = 5.371920351148152e0;

template <typename Matrix>
double one_norm(const Matrix& a) {
  return a.cwiseAbs().colwise().sum().maxCoeff();
}

// U (odd part) and V (even part) of the low-degree approximants, built from
// powers of A^2.
template <typename Matrix, std::size_t N>
void pade_low(const Matrix& a, const double (&b)[N], Matrix& u, Matrix& v) {
  const auto n = a.rows();
  const Matrix ident = Matrix::Identity(n, n);
  const Matrix a2 = a * a;
  Matrix power = ident;
  Matrix odd = b[1] * ident;
  v = b[0] * ident;
  for (std::size_t k = 2; k + 1 < N; k += 2) {
    power = power * a2;
    v += b[k] * power;
    odd += b[k + 1] * power;
  }
  u = a * odd;
}

template <typename Matrix>
void pade13(const Matrix& a, Matrix& u, Matrix& v) {
  const double* b = kPade13;
  const auto n = a.rows();
  const Matrix ident = Matrix::Identity(n, n);
  const Matrix a2 = a * a;
  const Matrix a4 = a2 * a2;
  const Matrix a6 = a4 * a2;
  const Matrix odd_high = a6 * (b[13] * a6 + b[11] * a4 + b[9] * a2);
  u = a * (odd_high + b[7] * a6 + b[5] * a4 + b[3] * a2 + b[1] * ident);
  const Matrix even_high = a6 * (b[12] * a6 + b[10] * a4 + b[8] * a2);
  v = even_high + b[6] * a6 + b[4] * a4 + b[2] * a2 + b[0] * ident;
}

template <typename Matrix>
Matrix expm(const Matrix& a) {
  const double norm = one_norm(a);
  Matrix u;
  Matrix v;
  int squarings = 0;
  if (norm <= kTheta3) {
    pade_low(a, kPade3, u, v);
  } else if (norm <= kTheta5) {
    pade_low(a, kPade5, u, v);
  } else if (norm <= kTheta7) {
    pade_low(a, kPade7, u, v);
  } else if (norm <= kTheta9) {
    pade_low(a, kPade9, u, v);
  } else {
    squarings = std::max(0, static_cast<int>(std::ceil(std::log2(norm / kTheta13))));
    if (squarings > 1000) throw Overflow("matrix_exp: norm too large for scaling and squaring");
    pade13(Matrix(a * std::ldexp(1.0, -squarings)), u, v);
  }
  // r = (V - U)^{-1} (V + U)
  Matrix result = (v - u).partialPivLu().solve(v + u);
  for (int i = 0; i < squarings; ++i) {
    result = result * result;
    if (!result.allFinite()) break;
  }
  return result;
}

}  // namespace

MatrixElement matrix_exp(const MatrixElement& u) {
  if (!u.all_finite()) throw NonFiniteEntry("matrix_exp: input has non-finite entries");
  if (u.is_real()) {
    RealMatrix r = expm<RealMatrix>(u.real_part());
    if (!r.allFinite()) throw Overflow("matrix_exp: result overflowed");
    return MatrixElement::from_real(r);
  }
  ComplexMatrix r = expm<ComplexMatrix>(u.data());
  if (!r.allFinite()) throw Overflow("matrix_exp: result overflowed");
  return MatrixElement::from_complex(r);
}

}  // namespace liecurv
