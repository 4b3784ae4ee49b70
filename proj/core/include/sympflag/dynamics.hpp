#pragma once

#include <vector>

#include "sympflag/quatmat.hpp"

namespace sympflag::dynamics {

/// Psi = (psi_system, psi_surroundings); the first `split` components are the system.
struct StateVector {
  std::vector<Quaternion> components;
  std::size_t split = 0;

  double norm_sq() const;
  double system_norm_sq() const;
  double surroundings_norm_sq() const;
};

QuatMatrix as_column(const StateVector& psi);

/// Psi(t) = exp(t gen) Psi(0). Throws NotSkewAdjoint, DimensionMismatch.
StateVector evolve(const QuatMatrix& gen, const StateVector& psi0, double t);

/// ||exp(t gen) - exp((t - t0) gen) exp(t0 gen)||_max. Throws NotSkewAdjoint.
double cocycle_check(const QuatMatrix& gen, double t, double t0);

/// ||exp(t gen) - exp(-t adjoint(gen))||_max. Throws NotSkewAdjoint.
double time_reversal_check(const QuatMatrix& gen, double t);

/// [[cos(wt), sin(wt) u], [-sin(wt) u*, cos(wt)]]. Throws NotUnitQuaternion.
GroupElement geodesic_block(const Quaternion& u, double omega, double t);

/// The four terms of gen * Psi under the (k | n-k) partition, each padded
/// to full length so that their sum is gen * Psi.
struct TransitionSplit {
  std::vector<Quaternion> system_rotation;        // h_v v
  std::vector<Quaternion> surroundings_rotation;  // h_V V
  std::vector<Quaternion> exchange_in;            // -p V, lands in the system block
  std::vector<Quaternion> exchange_out;           // p* v, lands in the surroundings block
};

/// Throws PartitionMismatch.
TransitionSplit transition_split(const QuatMatrix& gen, const StateVector& psi);

struct TrajectoryRow {
  double t = 0.0;
  double norm_sq = 0.0;
  double system_norm_sq = 0.0;
  double surroundings_norm_sq = 0.0;
  double exchange_in = 0.0;   // |(-p V)|^2
  double exchange_out = 0.0;  // |(p* v)|^2
};

/// Rows at t = i * t_max / steps for i = 0..steps.
std::vector<TrajectoryRow> trajectory(const QuatMatrix& gen, const StateVector& psi0,
                                      double t_max, std::size_t steps);

}  // namespace sympflag::dynamics
