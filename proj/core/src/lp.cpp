#include "makai/lp.hpp"

#include <limits>
#include <vector>

namespace makai::lp {

namespace {

constexpr double kPivotTol = 1e-11;
constexpr double kOptTol = 1e-9;

// Dense tableau simplex on: maximize obj over nonnegative variables with
// equality rows T x = rhs, starting from the given basis.  Bland's rule.
// Returns false on unboundedness.
bool run_simplex(Eigen::MatrixXd& T, Eigen::VectorXd& rhs,
                 Eigen::VectorXd& obj, double& obj_value,
                 std::vector<int>& basis) {
  const int m = static_cast<int>(T.rows());
  const int n = static_cast<int>(T.cols());
  // reduced costs maintained implicitly: z_j - c_j via basis pricing
  for (int iter = 0; iter < 20000; ++iter) {
    // price: y = c_B B^{-1} is implicit because T is kept in canonical form
    // (basis columns are unit vectors); reduced cost = obj[j].
    int enter = -1;
    for (int j = 0; j < n; ++j) {
      if (obj[j] > kOptTol) {
        enter = j;  // Bland: first improving index
        break;
      }
    }
    if (enter < 0) return true;  // optimal

    int leave = -1;
    double best_ratio = std::numeric_limits<double>::infinity();
    for (int i = 0; i < m; ++i) {
      if (T(i, enter) > kPivotTol) {
        const double ratio = rhs[i] / T(i, enter);
        if (ratio < best_ratio - 1e-15 ||
            (ratio < best_ratio + 1e-15 && leave >= 0 &&
             basis[i] < basis[leave])) {
          best_ratio = ratio;
          leave = i;
        }
      }
    }
    if (leave < 0) return false;  // unbounded

    // pivot
    const double piv = T(leave, enter);
    T.row(leave) /= piv;
    rhs[leave] /= piv;
    for (int i = 0; i < m; ++i) {
      if (i == leave) continue;
      const double f = T(i, enter);
      if (f != 0.0) {
        T.row(i) -= f * T.row(leave);
        rhs[i] -= f * rhs[leave];
      }
    }
    const double fo = obj[enter];
    if (fo != 0.0) {
      obj -= fo * T.row(leave).transpose();
      obj_value += fo * rhs[leave];
    }
    basis[leave] = enter;
  }
  return true;  // iteration cap; treat as optimal at current point
}

} // namespace

Result solve_max(const Eigen::MatrixXd& A, const Eigen::VectorXd& b,
                 const Eigen::VectorXd& c) {
  const int m = static_cast<int>(A.rows());
  const int d = static_cast<int>(A.cols());
  Result res;

  // variables: x = u - v with u, v >= 0, slack s >= 0, artificials as needed
  int n_art = 0;
  for (int i = 0; i < m; ++i)
    if (b[i] < 0.0) ++n_art;
  const int n = 2 * d + m + n_art;

  Eigen::MatrixXd T = Eigen::MatrixXd::Zero(m, n);
  Eigen::VectorXd rhs(m);
  std::vector<int> basis(m);
  int art = 2 * d + m;
  for (int i = 0; i < m; ++i) {
    const double sgn = b[i] < 0.0 ? -1.0 : 1.0;
    T.block(i, 0, 1, d) = sgn * A.row(i);
    T.block(i, d, 1, d) = -sgn * A.row(i);
    T(i, 2 * d + i) = sgn;
    rhs[i] = sgn * b[i];
    if (b[i] < 0.0) {
      T(i, art) = 1.0;
      basis[i] = art;
      ++art;
    } else {
      basis[i] = 2 * d + i;
    }
  }

  if (n_art > 0) {
    // phase 1: maximize -(sum of artificials)
    Eigen::VectorXd obj = Eigen::VectorXd::Zero(n);
    double obj_value = 0.0;
    for (int j = 2 * d + m; j < n; ++j) obj[j] = -1.0;
    for (int i = 0; i < m; ++i) {
      const double f = obj[basis[i]];
      if (f != 0.0) {
        obj -= f * T.row(i).transpose();
        obj_value += f * rhs[i];
      }
    }
    run_simplex(T, rhs, obj, obj_value, basis);
    if (obj_value < -1e-8) {
      res.status = Status::infeasible;
      return res;
    }
    // pivot zero-level artificials out where possible
    for (int i = 0; i < m; ++i) {
      if (basis[i] >= 2 * d + m) {
        int enter = -1;
        for (int j = 0; j < 2 * d + m; ++j) {
          if (std::abs(T(i, j)) > kPivotTol) {
            enter = j;
            break;
          }
        }
        if (enter >= 0) {
          const double piv = T(i, enter);
          T.row(i) /= piv;
          rhs[i] /= piv;
          for (int k = 0; k < m; ++k) {
            if (k == i) continue;
            const double f = T(k, enter);
            if (f != 0.0) {
              T.row(k) -= f * T.row(i);
              rhs[k] -= f * rhs[i];
            }
          }
          basis[i] = enter;
        }
      }
    }
  }

  // drop rows whose artificial could not leave (redundant equations) and the
  // artificial columns, then run phase 2 on the original objective
  const int n2 = 2 * d + m;
  std::vector<int> keep;
  keep.reserve(m);
  for (int i = 0; i < m; ++i)
    if (basis[i] < n2) keep.push_back(i);
  const int m2 = static_cast<int>(keep.size());
  Eigen::MatrixXd T2(m2, n2);
  Eigen::VectorXd rhs2(m2);
  std::vector<int> basis2(m2);
  for (int i = 0; i < m2; ++i) {
    T2.row(i) = T.row(keep[i]).head(n2);
    rhs2[i] = rhs[keep[i]];
    basis2[i] = basis[keep[i]];
  }

  Eigen::VectorXd obj = Eigen::VectorXd::Zero(n2);
  obj.head(d) = c;
  obj.segment(d, d) = -c;
  double obj_value = 0.0;
  for (int i = 0; i < m2; ++i) {
    const double f = obj[basis2[i]];
    if (f != 0.0) {
      obj -= f * T2.row(i).transpose();
      obj_value += f * rhs2[i];
    }
  }
  if (!run_simplex(T2, rhs2, obj, obj_value, basis2)) {
    res.status = Status::unbounded;
    return res;
  }

  Eigen::VectorXd full = Eigen::VectorXd::Zero(n2);
  for (int i = 0; i < m2; ++i) full[basis2[i]] = rhs2[i];
  res.x = full.head(d) - full.segment(d, d);
  res.value = obj_value;
  res.status = Status::optimal;
  return res;
}

} // namespace makai::lp
