#include <doctest.h>

#include "generators.hpp"
#include "qcm/errors.hpp"
#include "qcm/matrix_functions.hpp"

using namespace qcm;
using qcm::testing::Rng;

namespace {

// Taylor series in long double after scaling to norm < 1/2; independent of
// the Pade path.
Mat4 expm_taylor(const Mat4& a) {
  using MatL = Eigen::Matrix<long double, 4, 4>;
  const double norm = a.cwiseAbs().rowwise().sum().maxCoeff();
  int squarings = 0;
  while (std::ldexp(norm, -squarings) > 0.5) {
    ++squarings;
  }
  const MatL x = a.cast<long double>() / std::ldexp(1.0L, squarings);
  MatL term = MatL::Identity();
  MatL sum = MatL::Identity();
  for (int k = 1; k < 40; ++k) {
    term = term * x / static_cast<long double>(k);
    sum += term;
  }
  for (int i = 0; i < squarings; ++i) {
    sum = sum * sum;
  }
  return sum.cast<double>();
}

Mat4 random_matrix(Rng& rng, double scale) {
  Mat4 m;
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < 4; ++j) {
      m(i, j) = scale * qcm::testing::uniform(rng, -1.0, 1.0);
    }
  }
  return m;
}

}  // namespace

TEST_CASE("expm of zero and of a rotation generator") {
  CHECK(max_abs_diff(expm(Mat4::Zero()), Mat4(Mat4::Identity())) <= 1e-15);
  const double theta = 2.3;
  Mat4 g = Mat4::Zero();
  g(1, 2) = theta;
  g(2, 1) = -theta;
  Mat4 expected = Mat4::Identity();
  expected(1, 1) = expected(2, 2) = std::cos(theta);
  expected(1, 2) = std::sin(theta);
  expected(2, 1) = -std::sin(theta);
  CHECK(max_abs_diff(expm(g), expected) <= 1e-14);
}

TEST_CASE("expm agrees with a long-double Taylor oracle") {
  Rng rng(41);
  for (double scale : {0.01, 0.5, 2.0, 10.0}) {
    for (int n = 0; n < 50; ++n) {
      const Mat4 a = random_matrix(rng, scale);
      const Mat4 ref = expm_taylor(a);
      CHECK(max_abs_diff(expm(a), ref) <= 1e-12 * std::max(1.0, ref.cwiseAbs().maxCoeff()));
    }
  }
}

TEST_CASE("logm inverts expm on the principal branch") {
  Rng rng(42);
  for (int n = 0; n < 200; ++n) {
    // Spectrum of a stays inside |Im| < pi, so log(exp(a)) = a.
    const Mat4 a = random_matrix(rng, 0.6);
    CHECK(max_abs_diff(logm(expm(a)), a) <= 1e-11);
  }
  CHECK(max_abs_diff(logm(Mat4::Identity()), Mat4(Mat4::Zero())) == 0.0);
}

TEST_CASE("logm error contracts") {
  CHECK_THROWS_AS(logm(Vec4(1, 1, 0, 1).asDiagonal().toDenseMatrix()), NonInvertibleMap);
  CHECK_THROWS_AS(logm(Vec4(1, -0.5, -0.5, 1).asDiagonal().toDenseMatrix()), BranchAmbiguity);
  try {
    logm(Mat4::Zero());
    FAIL("expected NonInvertibleMap");
  } catch (const NonInvertibleMap& e) {
    CHECK(std::string(e.what()) == "non-invertible map, no generator");
  }
  Mat4 jordan = Mat4::Identity();
  jordan(1, 1) = jordan(2, 2) = 2.0;
  jordan(1, 2) = 1.0;
  CHECK_THROWS_AS(logm(jordan), IllConditioned);
}
