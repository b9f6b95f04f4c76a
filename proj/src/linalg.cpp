#include "qsnn/linalg.hpp"

#include <cmath>
#include <array>

namespace qsnn {

namespace {

// Degree-13 Pade numerator coefficients (Higham 2005).
constexpr std::array<double, 14> kPade13 = {
    64764752532480000.0, 32382376266240000.0, 7771770303897600.0,
    1187353796428800.0,  129060195264000.0,   10559470521600.0,
    670442572800.0,      33522128640.0,       1323241920.0,
    40840800.0,          960960.0,            16380.0,
    182.0,               1.0};

constexpr double kTheta13 = 5.371920351148152;

double one_norm(const ComplexMatrix& a) {
  if (a.size() == 0) return 0.0;
  return a.cwiseAbs().colwise().sum().maxCoeff();
}

void require_square(const ComplexMatrix& a, const char* who) {
  if (a.rows() != a.cols()) {
    throw DimensionError(std::string(who) + ": matrix is not square");
  }
}

// Shared state of the scaled Pade approximant of a*t: everything that does
// not depend on a derivative direction.
struct PadeState {
  int squarings = 0;
  ComplexMatrix b;              // scaled matrix a*t/2^s
  ComplexMatrix b2, b4, b6;     // even powers of b
  ComplexMatrix w1, w2, z1, z2; // polynomial pieces
  ComplexMatrix w, u, v;        // u = b*w, v = denominator part
  Eigen::PartialPivLU<ComplexMatrix> lu;  // factorization of v - u
  std::vector<ComplexMatrix> iterates;    // r before each squaring step
  ComplexMatrix result;         // expm(a*t)
};

PadeState pade_expm(const ComplexMatrix& a, double t, bool keep_iterates) {
  require_square(a, "expm");
  const Index n = a.rows();
  PadeState st;

  const double norm = one_norm(a) * std::abs(t);
  st.squarings =
      norm > kTheta13
          ? static_cast<int>(std::ceil(std::log2(norm / kTheta13)))
          : 0;
  st.b = a * (t / std::ldexp(1.0, st.squarings));

  const ComplexMatrix id = ComplexMatrix::Identity(n, n);
  st.b2 = st.b * st.b;
  st.b4 = st.b2 * st.b2;
  st.b6 = st.b4 * st.b2;

  st.w1 = kPade13[13] * st.b6 + kPade13[11] * st.b4 + kPade13[9] * st.b2;
  st.w2 = kPade13[7] * st.b6 + kPade13[5] * st.b4 + kPade13[3] * st.b2 +
          kPade13[1] * id;
  st.z1 = kPade13[12] * st.b6 + kPade13[10] * st.b4 + kPade13[8] * st.b2;
  st.z2 = kPade13[6] * st.b6 + kPade13[4] * st.b4 + kPade13[2] * st.b2 +
          kPade13[0] * id;

  st.w = st.b6 * st.w1 + st.w2;
  st.u = st.b * st.w;
  st.v = st.b6 * st.z1 + st.z2;

  st.lu.compute(st.v - st.u);
  ComplexMatrix r = st.lu.solve(st.v + st.u);
  for (int k = 0; k < st.squarings; ++k) {
    if (keep_iterates) st.iterates.push_back(r);
    r = r * r;
  }
  st.result = std::move(r);
  return st;
}

// Directional derivative of the approximant held in st, direction e*t/2^s.
ComplexMatrix pade_frechet(const PadeState& st, const ComplexMatrix& e_in,
                           double t) {
  const ComplexMatrix e = e_in * (t / std::ldexp(1.0, st.squarings));

  const ComplexMatrix m2 = st.b * e + e * st.b;
  const ComplexMatrix m4 = st.b2 * m2 + m2 * st.b2;
  const ComplexMatrix m6 = st.b4 * m2 + m4 * st.b2;

  const ComplexMatrix w1d =
      kPade13[13] * m6 + kPade13[11] * m4 + kPade13[9] * m2;
  const ComplexMatrix w2d =
      kPade13[7] * m6 + kPade13[5] * m4 + kPade13[3] * m2;
  const ComplexMatrix z1d =
      kPade13[12] * m6 + kPade13[10] * m4 + kPade13[8] * m2;
  const ComplexMatrix z2d =
      kPade13[6] * m6 + kPade13[4] * m4 + kPade13[2] * m2;

  const ComplexMatrix wd = m6 * st.w1 + st.b6 * w1d + w2d;
  const ComplexMatrix lu_dir = e * st.w + st.b * wd;
  const ComplexMatrix lv_dir = m6 * st.z1 + st.b6 * z1d + z2d;

  // (v - u) r = v + u  =>  (v - u) dr = lu + lv + (lu - lv) r
  ComplexMatrix d = st.lu.solve(
      lu_dir + lv_dir +
      (lu_dir - lv_dir) * (st.squarings > 0 ? st.iterates[0] : st.result));
  for (int k = 0; k < st.squarings; ++k) {
    const ComplexMatrix& r = st.iterates[static_cast<size_t>(k)];
    d = r * d + d * r;
  }
  return d;
}

}  // namespace

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
  ComplexMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Index i = 0; i < a.rows(); ++i) {
    for (Index j = 0; j < a.cols(); ++j) {
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    }
  }
  return out;
}

ComplexVector vectorize(const ComplexMatrix& m) {
  require_square(m, "vectorize");
  const Index n = m.rows();
  ComplexVector v(n * n);
  for (Index i = 0; i < n; ++i) {
    for (Index j = 0; j < n; ++j) {
      v(i * n + j) = m(i, j);
    }
  }
  return v;
}

ComplexMatrix devectorize(const ComplexVector& v, Index n) {
  if (v.size() != n * n) {
    throw DimensionError("devectorize: vector length " +
                         std::to_string(v.size()) + " is not " +
                         std::to_string(n) + "^2");
  }
  ComplexMatrix m(n, n);
  for (Index i = 0; i < n; ++i) {
    for (Index j = 0; j < n; ++j) {
      m(i, j) = v(i * n + j);
    }
  }
  return m;
}

bool is_hermitian(const ComplexMatrix& a, double tol) {
  if (a.rows() != a.cols()) return false;
  return (a - a.adjoint()).cwiseAbs().maxCoeff() <= tol;
}

Eigensystem hermitian_eig(const ComplexMatrix& a) {
  require_square(a, "hermitian_eig");
  if (!is_hermitian(a, 1e-10)) {
    throw ContractViolation("hermitian_eig: matrix is not Hermitian");
  }
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(a);
  if (solver.info() != Eigen::Success) {
    throw Error("hermitian_eig: eigensolver failed to converge");
  }
  return {solver.eigenvalues(), solver.eigenvectors()};
}

double trace_norm_hermitian(const ComplexMatrix& a) {
  return hermitian_eig(a).values.cwiseAbs().sum();
}

ComplexMatrix expm(const ComplexMatrix& a) {
  return pade_expm(a, 1.0, false).result;
}

ExpmWithDerivative expm_frechet(const ComplexMatrix& a, const ComplexMatrix& e,
                                double t) {
  require_square(a, "expm_frechet");
  if (e.rows() != a.rows() || e.cols() != a.cols()) {
    throw DimensionError("expm_frechet: direction dimension mismatch");
  }
  const Index n = a.rows();
  ComplexMatrix block = ComplexMatrix::Zero(2 * n, 2 * n);
  block.topLeftCorner(n, n) = a * t;
  block.bottomRightCorner(n, n) = a * t;
  block.topRightCorner(n, n) = e * t;
  const ComplexMatrix big = expm(block);
  return {big.topLeftCorner(n, n), big.topRightCorner(n, n)};
}

ExpmWithDerivatives expm_frechet_batch(const ComplexMatrix& a,
                                       const std::vector<ComplexMatrix>& dirs,
                                       double t) {
  require_square(a, "expm_frechet_batch");
  PadeState st = pade_expm(a, t, true);
  ExpmWithDerivatives out;
  out.derivatives.reserve(dirs.size());
  for (const ComplexMatrix& e : dirs) {
    if (e.rows() != a.rows() || e.cols() != a.cols()) {
      throw DimensionError("expm_frechet_batch: direction dimension mismatch");
    }
    out.derivatives.push_back(pade_frechet(st, e, t));
  }
  out.exponential = std::move(st.result);
  return out;
}

}  // namespace qsnn
