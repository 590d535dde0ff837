// algebra.cpp — Dense superoperator substrate.

#include "perilind/algebra.hpp"

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>
#include <unsupported/Eigen/KroneckerProduct>
#include <unsupported/Eigen/MatrixFunctions>

#include <cmath>
#include <string>

namespace perilind::algebra {

namespace {

Index square_root_dim(Index n, const char* what) {
  const Index d = static_cast<Index>(std::llround(std::sqrt(static_cast<double>(n))));
  if (d * d != n) {
    throw DimensionMismatch(std::string(what) + ": size " + std::to_string(n) +
                            " is not a perfect square");
  }
  return d;
}

void require_square(const Matrix& m, const char* what) {
  if (m.rows() != m.cols()) {
    throw DimensionMismatch(std::string(what) + ": matrix is " + std::to_string(m.rows()) +
                            "x" + std::to_string(m.cols()) + ", expected square");
  }
}

}  // namespace

Vector vectorize(const Matrix& m) {
  require_square(m, "vectorize");
  return Eigen::Map<const Vector>(m.data(), m.size());
}

Matrix devectorize(const Vector& v) {
  const Index d = square_root_dim(v.size(), "devectorize");
  return Eigen::Map<const Matrix>(v.data(), d, d);
}

Matrix kron(const Matrix& a, const Matrix& b) { return Eigen::kroneckerProduct(a, b); }

Superoperator::Superoperator(Matrix m) : m_(std::move(m)) {
  require_square(m_, "Superoperator");
  dim_ = square_root_dim(m_.rows(), "Superoperator");
}

Superoperator Superoperator::Zero(Index dim) {
  return Superoperator(Matrix::Zero(dim * dim, dim * dim));
}

Superoperator Superoperator::Identity(Index dim) {
  return Superoperator(Matrix::Identity(dim * dim, dim * dim));
}

Matrix Superoperator::apply(const Matrix& rho) const {
  if (rho.rows() != dim_ || rho.cols() != dim_) {
    throw DimensionMismatch("Superoperator::apply: argument is " + std::to_string(rho.rows()) +
                            "x" + std::to_string(rho.cols()) + ", map acts on " +
                            std::to_string(dim_) + "x" + std::to_string(dim_));
  }
  return devectorize(m_ * vectorize(rho));
}

Superoperator& Superoperator::operator+=(const Superoperator& o) {
  if (dim_ != o.dim_) throw DimensionMismatch("Superoperator: dimension mismatch in +");
  m_ += o.m_;
  return *this;
}

Superoperator& Superoperator::operator-=(const Superoperator& o) {
  if (dim_ != o.dim_) throw DimensionMismatch("Superoperator: dimension mismatch in -");
  m_ -= o.m_;
  return *this;
}

Superoperator& Superoperator::operator*=(Complex c) {
  m_ *= c;
  return *this;
}

Superoperator operator*(const Superoperator& a, const Superoperator& b) {
  if (a.dim() != b.dim()) throw DimensionMismatch("Superoperator: dimension mismatch in *");
  return Superoperator(a.m_ * b.m_);
}

Superoperator sandwich(const Matrix& a, const Matrix& b) {
  require_square(a, "sandwich");
  require_square(b, "sandwich");
  if (a.rows() != b.rows()) throw DimensionMismatch("sandwich: A and B dimensions differ");
  return Superoperator(kron(b.transpose(), a));
}

Superoperator commutator_map(const Matrix& h) {
  require_square(h, "commutator_map");
  const Matrix id = Matrix::Identity(h.rows(), h.cols());
  return sandwich(h, id) - sandwich(id, h);
}

Superoperator hamiltonian_part(const Matrix& h) { return -kImag * commutator_map(h); }

Superoperator dissipator_pair(const Matrix& a, const Matrix& b) {
  require_square(a, "dissipator_pair");
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw DimensionMismatch("dissipator_pair: operator dimensions differ");
  }
  const Matrix id = Matrix::Identity(a.rows(), a.cols());
  const Matrix bda = b.adjoint() * a;
  return sandwich(a, b.adjoint()) - 0.5 * (sandwich(bda, id) + sandwich(id, bda));
}

Matrix choi(const Superoperator& s) {
  const Index d = s.dim();
  Matrix c(d * d, d * d);
  Matrix unit = Matrix::Zero(d, d);
  for (Index i = 0; i < d; ++i) {
    for (Index j = 0; j < d; ++j) {
      unit(i, j) = 1.0;
      c.block(i * d, j * d, d, d) = s.apply(unit);
      unit(i, j) = 0.0;
    }
  }
  return c;
}

CptpReport cptp_report(const Superoperator& s, double atol) {
  const Index d = s.dim();
  const Matrix c = choi(s);

  Eigen::SelfAdjointEigenSolver<Matrix> es(hermitize(c));
  CptpReport report;
  report.min_choi_eig = es.eigenvalues().minCoeff();
  report.cp = report.min_choi_eig >= -atol;

  // trace over the map's output factor (the second one in our block layout)
  Matrix traced = Matrix::Zero(d, d);
  for (Index i = 0; i < d; ++i) {
    for (Index j = 0; j < d; ++j) {
      traced(i, j) = c.block(i * d, j * d, d, d).trace();
    }
  }
  report.tp_residual = (traced - Matrix::Identity(d, d)).norm();
  report.tp = report.tp_residual <= atol;
  return report;
}

Matrix matrix_exp(const Matrix& m) {
  require_square(m, "matrix_exp");
  return m.exp();
}

Matrix matrix_log_principal(const Matrix& m, double branch_tol) {
  require_square(m, "matrix_log_principal");

  Eigen::ComplexEigenSolver<Matrix> es(m);
  if (es.info() != Eigen::Success) {
    throw BranchFailure("matrix_log_principal: eigenvalue computation failed");
  }
  const Vector evals = es.eigenvalues();
  for (Index i = 0; i < evals.size(); ++i) {
    const Complex z = evals(i);
    const double r = std::abs(z);
    if (r <= branch_tol) {
      throw BranchFailure("matrix_log_principal: eigenvalue " + std::to_string(i) +
                          " is numerically zero");
    }
    if (z.real() < 0.0 && std::abs(z.imag()) <= branch_tol * r) {
      throw BranchFailure("matrix_log_principal: eigenvalue on the negative real axis");
    }
  }

  const Matrix v = es.eigenvectors();
  Eigen::JacobiSVD<Matrix> svd(v);
  const double smin = svd.singularValues().minCoeff();
  const double smax = svd.singularValues().maxCoeff();
  if (smin > 0.0 && smax / smin < 1e8) {
    Vector logd(evals.size());
    for (Index i = 0; i < evals.size(); ++i) logd(i) = std::log(evals(i));
    return v * logd.asDiagonal() * v.inverse();
  }
  // defective or nearly defective: Schur-based algorithm
  return m.log();
}

Matrix partial_trace(const Matrix& m, Index d1, Index d2, Subsystem keep) {
  require_square(m, "partial_trace");
  if (m.rows() != d1 * d2) {
    throw DimensionMismatch("partial_trace: matrix size " + std::to_string(m.rows()) +
                            " does not factor as " + std::to_string(d1) + "*" +
                            std::to_string(d2));
  }
  if (keep == Subsystem::First) {
    Matrix out = Matrix::Zero(d1, d1);
    for (Index i = 0; i < d1; ++i) {
      for (Index j = 0; j < d1; ++j) {
        for (Index k = 0; k < d2; ++k) {
          out(i, j) += m(i * d2 + k, j * d2 + k);
        }
      }
    }
    return out;
  }
  Matrix out = Matrix::Zero(d2, d2);
  for (Index i = 0; i < d2; ++i) {
    for (Index j = 0; j < d2; ++j) {
      for (Index k = 0; k < d1; ++k) {
        out(i, j) += m(k * d2 + i, k * d2 + j);
      }
    }
  }
  return out;
}

Matrix hermitize(const Matrix& m) { return 0.5 * (m + m.adjoint()); }

bool is_hermitian(const Matrix& m, double atol) {
  return m.rows() == m.cols() && (m - m.adjoint()).cwiseAbs().maxCoeff() <= atol;
}

double trace_norm(const Matrix& m) {
  Eigen::JacobiSVD<Matrix> svd(m);
  return svd.singularValues().sum();
}

}  // namespace perilind::algebra
