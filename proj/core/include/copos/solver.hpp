#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "copos/conic_program.hpp"

namespace copos {

struct SolverConfig {
  double eps_primal = 1e-8;
  double eps_dual = 1e-8;
  double eps_gap = 1e-8;
  /// Threshold on ||A^T y|| (resp. ||Ax + s||) of a normalized certificate.
  double eps_infeas = 1e-7;
  int max_iter = 200000;
  /// Ruiz equilibration of the constraint matrix.
  bool scaling = true;
  /// Over-relaxation factor of the splitting iteration, in (0, 2).
  double relaxation = 1.5;
  /// Proximal weight on the primal block of the iteration metric.
  double rho_x = 1e-6;
  /// Weight of the dual block of the iteration metric (larger favours primal feasibility).
  double scale = 0.1;
  /// Rebalances `scale` from the residual ratio.
  bool adaptive_scale = true;
  /// Iteration after which an unconverged solve freezes the adaptive rule and
  /// multiplies `scale` by `stall_scale_factor`; 0 disables the switch.
  int stall_iterations = 2000;
  double stall_scale_factor = 0.01;
  /// Number of past iterates used by Anderson acceleration; 0 disables it.
  int anderson_memory = 10;
  /// Final alternating projections on the affine constraints and the cones.
  bool polish = true;
  int check_interval = 10;
  long long max_psd_entries = 200000;
  bool verbose = false;
  /// Destination of the iteration log; std::cerr when null.
  std::ostream* log = nullptr;

  /// Throws std::invalid_argument for non-positive tolerances or bad parameters.
  void validate() const;
};

enum class SolveStatus { Optimal, PrimalInfeasible, DualInfeasible, MaxIterReached };
std::string to_string(SolveStatus s);

struct Residuals {
  double primal = 0.0;
  double dual = 0.0;
  double gap = 0.0;
};

struct Solution {
  SolveStatus status = SolveStatus::MaxIterReached;
  /// Objective values in the program's own sense.
  double primal_value = 0.0;
  double dual_value = 0.0;
  /// One value per program variable.
  std::vector<double> primal_point;
  /// Multipliers of the equality rows; at optimality objective - E^T y lies in
  /// the dual cone (Min sense).
  std::vector<double> dual_point;
  Residuals residuals;
  /// Improving ray: equality multipliers (PrimalInfeasible) or a primal
  /// direction over program variables (DualInfeasible).
  std::vector<double> certificate;
  double certificate_residual = 0.0;
  int iterations = 0;
  bool polished = false;
};

/// Operator splitting on the homogeneous self-dual embedding. Throws
/// RefusalError before iterating when the PSD part exceeds the configured cap.
Solution solve(const ConicProgram& p, const SolverConfig& cfg = {});

}  // namespace copos
