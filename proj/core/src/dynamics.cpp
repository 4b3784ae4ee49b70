#include "sympflag/dynamics.hpp"

#include <cmath>
#include <sstream>

#include "sympflag/errors.hpp"

namespace sympflag::dynamics {

namespace {

double norm_sq_range(const std::vector<Quaternion>& v, std::size_t lo, std::size_t hi) {
  double s = 0.0;
  for (std::size_t i = lo; i < hi; ++i) s += sympflag::norm_sq(v[i]);
  return s;
}

void require_skew(const QuatMatrix& gen) {
  if (!gen.is_square() || !is_skew_adjoint(gen)) {
    throw Error(ErrorKind::NotSkewAdjoint, "generator must satisfy adjoint(gen) = -gen");
  }
}

std::vector<Quaternion> column(const QuatMatrix& m) {
  std::vector<Quaternion> v(m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i) v[i] = m(i, 0);
  return v;
}

}  // namespace

double StateVector::norm_sq() const { return norm_sq_range(components, 0, components.size()); }
double StateVector::system_norm_sq() const { return norm_sq_range(components, 0, split); }
double StateVector::surroundings_norm_sq() const {
  return norm_sq_range(components, split, components.size());
}

QuatMatrix as_column(const StateVector& psi) {
  return QuatMatrix(psi.components.size(), 1, psi.components);
}

StateVector evolve(const QuatMatrix& gen, const StateVector& psi0, double t) {
  require_skew(gen);
  if (gen.cols() != psi0.components.size()) {
    throw Error(ErrorKind::DimensionMismatch, "generator and state sizes differ");
  }
  return {column(exp(gen * t) * as_column(psi0)), psi0.split};
}

double cocycle_check(const QuatMatrix& gen, double t, double t0) {
  require_skew(gen);
  return max_abs_diff(exp(gen * t), exp(gen * (t - t0)) * exp(gen * t0));
}

double time_reversal_check(const QuatMatrix& gen, double t) {
  require_skew(gen);
  return max_abs_diff(exp(gen * t), exp(adjoint(gen) * (-t)));
}

GroupElement geodesic_block(const Quaternion& u, double omega, double t) {
  if (std::abs(norm_sq(u) - 1.0) > 1e-12) {
    std::ostringstream msg;
    msg << "|u|^2 = " << norm_sq(u);
    throw Error(ErrorKind::NotUnitQuaternion, msg.str());
  }
  const double c = std::cos(omega * t);
  const double s = std::sin(omega * t);
  QuatMatrix g{{Quaternion(c), u * s}, {conj(u) * (-s), Quaternion(c)}};
  return GroupElement(std::move(g), 1e-12);
}

TransitionSplit transition_split(const QuatMatrix& gen, const StateVector& psi) {
  const std::size_t n = psi.components.size();
  if (!gen.is_square() || gen.rows() != n || psi.split > n) {
    std::ostringstream msg;
    msg << "generator " << gen.rows() << "x" << gen.cols() << " vs state of length " << n
        << " split at " << psi.split;
    throw Error(ErrorKind::PartitionMismatch, msg.str());
  }
  const std::size_t k = psi.split;
  TransitionSplit out;
  out.system_rotation.assign(n, Quaternion{});
  out.surroundings_rotation.assign(n, Quaternion{});
  out.exchange_in.assign(n, Quaternion{});
  out.exchange_out.assign(n, Quaternion{});
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) {
      const Quaternion term = gen(r, c) * psi.components[c];
      const bool row_sys = r < k;
      const bool col_sys = c < k;
      if (row_sys && col_sys) out.system_rotation[r] += term;
      else if (!row_sys && !col_sys) out.surroundings_rotation[r] += term;
      else if (row_sys) out.exchange_in[r] += term;
      else out.exchange_out[r] += term;
    }
  }
  return out;
}

std::vector<TrajectoryRow> trajectory(const QuatMatrix& gen, const StateVector& psi0,
                                      double t_max, std::size_t steps) {
  std::vector<TrajectoryRow> rows;
  rows.reserve(steps + 1);
  for (std::size_t i = 0; i <= steps; ++i) {
    const double t = steps ? t_max * static_cast<double>(i) / static_cast<double>(steps) : 0.0;
    const StateVector psi = evolve(gen, psi0, t);
    const TransitionSplit sp = transition_split(gen, psi);
    TrajectoryRow row;
    row.t = t;
    row.norm_sq = psi.norm_sq();
    row.system_norm_sq = psi.system_norm_sq();
    row.surroundings_norm_sq = psi.surroundings_norm_sq();
    row.exchange_in = norm_sq_range(sp.exchange_in, 0, sp.exchange_in.size());
    row.exchange_out = norm_sq_range(sp.exchange_out, 0, sp.exchange_out.size());
    rows.push_back(row);
  }
  return rows;
}

}  // namespace sympflag::dynamics
