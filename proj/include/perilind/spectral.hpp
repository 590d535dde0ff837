// spectral.hpp — Spectral decomposition of the system Hamiltonian, Bohr
// frequency bookkeeping, jump components and the time-averaging projection.

#pragma once

#include "perilind/algebra.hpp"
#include "perilind/errors.hpp"
#include "perilind/types.hpp"

#include <string>
#include <vector>

namespace perilind::spectral {

struct SystemModel {
  Matrix hamiltonian;
  std::vector<Matrix> couplings;
  std::vector<std::string> labels;

  Index dim() const { return hamiltonian.rows(); }

  // Throws NonHermitianInput / DimensionMismatch.
  void validate(double atol = kDefaultAtol) const;
};

struct BohrFrequency {
  double omega = 0.0;
  // eigenvalue-cluster index pairs (k, l) with eps_k - eps_l = omega
  std::vector<std::pair<int, int>> pairs;
};

struct SpectralData {
  Index dim = 0;
  double degeneracy_tol = 0.0;
  RealVector eigenvalues;          // distinct cluster values, ascending
  std::vector<Matrix> projectors;  // joint eigenprojector per cluster
  std::vector<BohrFrequency> bohr;  // ascending; always contains 0; symmetric

  // Index into `bohr` for a frequency, matched within degeneracy_tol.
  // Throws UnknownFrequency.
  int frequency_index(double omega) const;

  std::vector<double> frequencies() const;

  // largest minus smallest Bohr frequency
  double spread() const;
};

// Eigenvalues are clustered with `degeneracy_tol` into joint projectors;
// tol <= 0 selects the default 1e-9 * max(1, max |eps|).
SpectralData decompose(const SystemModel& model, double degeneracy_tol = 0.0);

// S_{mu,omega} = sum_{(k,l) ~ omega} P_k S_mu P_l
Matrix jump_component(const Matrix& s_mu, const SpectralData& spec, double omega);

// E_omega as a superoperator: sum_{(k,l) ~ omega} P_k . P_l
algebra::Superoperator bohr_projector(const SpectralData& spec, double omega);

// X# = sum_omega E_omega X E_omega
algebra::Superoperator time_average(const algebra::Superoperator& x, const SpectralData& spec);

struct CongruenceReport {
  bool free = true;
  std::vector<CongruenceViolation::Entry> violations;
};

// Scans all ordered pairs of distinct Bohr frequencies for
// omega - omega' = k * drive_omega, k != 0; complete since |k| is bounded by
// spread / drive_omega.
CongruenceReport congruence_check(const SpectralData& spec, double drive_omega);

// max over t_grid of || e^{iHt} S e^{-iHt} - sum_omega S_omega e^{i omega t} ||
// with the left side computed through the generic matrix exponential.
double interaction_picture_expansion_check(const Matrix& s_mu, const SystemModel& model,
                                           const SpectralData& spec,
                                           const std::vector<double>& t_grid);

}  // namespace perilind::spectral
