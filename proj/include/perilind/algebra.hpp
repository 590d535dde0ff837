// algebra.hpp — Vectorization, superoperators, Choi/CPTP tests, matrix
// exponential/logarithm and partial trace.
//
// Conventions (fixed project-wide):
//   * column stacking: vec(M)[i + j*d] = M(i, j), so rho -> A rho B is
//     represented by kron(B^T, A);
//   * Choi matrix C(S) = sum_{ij} |i><j| (x) S(|i><j|), i.e. (id (x) S)
//     applied to the unnormalized maximally entangled projector.

#pragma once

#include "perilind/errors.hpp"
#include "perilind/types.hpp"

namespace perilind::algebra {

Vector vectorize(const Matrix& m);
Matrix devectorize(const Vector& v);

Matrix kron(const Matrix& a, const Matrix& b);

// Linear map on d x d matrices stored as its d^2 x d^2 matrix in the
// column-stacking convention. Immutable value type; all operations pure.
class Superoperator {
 public:
  Superoperator() = default;
  explicit Superoperator(Matrix m);

  static Superoperator Zero(Index dim);
  static Superoperator Identity(Index dim);

  Index dim() const { return dim_; }
  const Matrix& matrix() const { return m_; }

  Matrix apply(const Matrix& rho) const;

  Superoperator& operator+=(const Superoperator& o);
  Superoperator& operator-=(const Superoperator& o);
  Superoperator& operator*=(Complex c);

  friend Superoperator operator+(Superoperator a, const Superoperator& b) { return a += b; }
  friend Superoperator operator-(Superoperator a, const Superoperator& b) { return a -= b; }
  friend Superoperator operator*(Complex c, Superoperator s) { return s *= c; }
  friend Superoperator operator*(double c, Superoperator s) { return s *= Complex(c); }
  // composition: (a * b)(rho) = a(b(rho))
  friend Superoperator operator*(const Superoperator& a, const Superoperator& b);

 private:
  Index dim_ = 0;
  Matrix m_;
};

// rho -> a rho b
Superoperator sandwich(const Matrix& a, const Matrix& b);

// rho -> [h, rho]
Superoperator commutator_map(const Matrix& h);

// rho -> -i [h, rho]
Superoperator hamiltonian_part(const Matrix& h);

// rho -> a rho b^dag - 1/2 {b^dag a, rho}; the GKLS dissipator block for the
// jump pair (a, b) carrying unit rate.
Superoperator dissipator_pair(const Matrix& a, const Matrix& b);

Matrix choi(const Superoperator& s);

struct CptpReport {
  bool cp = false;
  bool tp = false;
  double min_choi_eig = 0.0;
  double tp_residual = 0.0;
};

CptpReport cptp_report(const Superoperator& s, double atol = kDefaultAtol);

Matrix matrix_exp(const Matrix& m);

// Principal matrix logarithm. Throws BranchFailure if an eigenvalue lies
// within branch_tol of the closed negative real axis (relative to |lambda|,
// absolute at the origin). Diagonalizable inputs go through the
// eigendecomposition; ill-conditioned eigenbases fall back to the
// Schur-based algorithm.
Matrix matrix_log_principal(const Matrix& m, double branch_tol = 1e-12);

enum class Subsystem { First, Second };

// Partial trace of a (d1*d2) x (d1*d2) matrix over the discarded factor,
// with the tensor index convention of kron(): row = i1*d2 + i2.
Matrix partial_trace(const Matrix& m, Index d1, Index d2, Subsystem keep);

Matrix hermitize(const Matrix& m);
bool is_hermitian(const Matrix& m, double atol = kDefaultAtol);

// sum of singular values
double trace_norm(const Matrix& m);

}  // namespace perilind::algebra
