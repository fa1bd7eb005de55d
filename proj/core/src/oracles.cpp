#include "liecurv/oracles.hpp"

#include <cmath>
#include <string>

namespace liecurv {

namespace {

constexpr double kOrthonormalTol = 1e-13;

void check_orthonormal(const CartanStructure& s, const std::vector<MatrixElement>& elements) {
  for (std::size_t i = 0; i < elements.size(); ++i) {
    s.require_member(elements[i]);
    for (std::size_t j = i; j < elements.size(); ++j) {
      const double expected = i == j ? 1.0 : 0.0;
      if (std::abs(s.inner(elements[i], elements[j]) - expected) > kOrthonormalTol) {
        throw IncompleteBasis("basis elements " + std::to_string(i) + " and " + std::to_string(j) +
                              " are not orthonormal under " + s.name());
      }
    }
  }
}

}  // namespace

OrthonormalBasis OrthonormalBasis::standard(const CartanStructure& s) {
  std::vector<MatrixElement> cells = cell_basis(s.n(), s.field());
  check_orthonormal(s, cells);
  return OrthonormalBasis(std::move(cells));
}

OrthonormalBasis OrthonormalBasis::from_elements(const CartanStructure& s,
                                                 std::vector<MatrixElement> elements) {
  check_orthonormal(s, elements);
  return OrthonormalBasis(std::move(elements));
}

MatrixElement nabla_from_metric(const CartanStructure& s, const MatrixElement& u, const MatrixElement& v,
                                const OrthonormalBasis& basis) {
  if (static_cast<int>(basis.size()) != s.real_dimension()) {
    throw IncompleteBasis("basis has " + std::to_string(basis.size()) + " elements, algebra dimension is " +
                          std::to_string(s.real_dimension()));
  }
  s.require_member(u);
  s.require_member(v);
  const MatrixElement uv = bracket(u, v);
  MatrixElement result = MatrixElement::zero(s.n(), s.field());
  for (const MatrixElement& e : basis.elements()) {
    const double coefficient =
        0.5 * (s.inner(uv, e) - s.inner(bracket(v, e), u) - s.inner(bracket(u, e), v));
    result += coefficient * e;
  }
  return result;
}

MatrixElement curvature_from_definition(const CartanStructure& s, const MatrixElement& u,
                                        const MatrixElement& v, const MatrixElement& w,
                                        const OrthonormalBasis& basis) {
  const auto del = [&](const MatrixElement& a, const MatrixElement& b) {
    return nabla_from_metric(s, a, b, basis);
  };
  return del(u, del(v, w)) - del(v, del(u, w)) - del(bracket(u, v), w);
}

double quartic_from_definition(const CartanStructure& s, const MatrixElement& u, const MatrixElement& v,
                               const OrthonormalBasis& basis) {
  return s.inner(curvature_from_definition(s, u, v, v, basis), u);
}

std::pair<MatrixElement, MatrixElement> commuting_pair(Seed seed, int n, int deg, Field field) {
  if (n < 2) throw DimensionMismatch("commuting_pair needs n >= 2");
  if (deg < 1) throw Error("commuting_pair needs deg >= 1");
  // Retry on the (practically impossible) event of a zero polynomial or
  // rounding pushing |[u,v]| over the guarantee.
  for (std::uint64_t attempt = 0;; ++attempt) {
    SampleStream stream(derive_seed(seed, attempt));
    const MatrixElement m = random_element(stream, n, field);
    MatrixElement u = MatrixElement::zero(n, field);
    MatrixElement v = MatrixElement::zero(n, field);
    MatrixElement power = MatrixElement::identity(n, field);
    for (int k = 0; k <= deg; ++k) {
      u += stream.uniform() * power;
      v += stream.uniform() * power;
      power = power * m;
    }
    const double nu = u.norm();
    const double nv = v.norm();
    if (nu == 0.0 || nv == 0.0) continue;
    u *= 1.0 / nu;
    v *= 1.0 / nv;
    if (bracket(u, v).norm() <= 1e-12) return {u, v};
  }
}

}  // namespace liecurv
