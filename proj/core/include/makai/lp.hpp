#pragma once

#include <Eigen/Dense>

namespace makai::lp {

enum class Status { optimal, unbounded, infeasible };

struct Result {
  Status status = Status::infeasible;
  double value = 0.0;
  Eigen::VectorXd x;
};

/// Maximize c.x subject to A x <= b over free x.  Dense two-phase simplex
/// with Bland's rule; intended for the small systems geometry needs
/// (a handful of variables, tens of constraints).
Result solve_max(const Eigen::MatrixXd& A, const Eigen::VectorXd& b,
                 const Eigen::VectorXd& c);

} // namespace makai::lp
