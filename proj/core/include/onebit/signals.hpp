#pragma once

#include <cstdint>
#include <optional>

#include <Eigen/Core>

#include "onebit/frames.hpp"

namespace onebit {

/// l0/l1/l2 of a vector plus its effective sparsity (||x||_1/||x||_2)^2.
/// A vector is effectively s-sparse iff s_eff <= s.
struct SparsityReport {
  Eigen::Index l0 = 0;
  double l1 = 0.0;
  double l2 = 0.0;
  double s_eff = 0.0;
};

/// A generated test signal together with how sparse it actually is.
struct GroundTruth {
  Eigen::VectorXd f;                  // the signal, ||f||_2 = norm_r
  std::optional<Eigen::VectorXd> x;   // generating coefficients (synthesis class)
  int s = 0;                          // nominal synthesis sparsity
  double kappa = 1.0;                 // effective analysis sparsity of f is kappa*s
  double norm_r = 0.0;
};

/// Keep the t largest-magnitude entries, zero the rest. Ties break toward
/// the lowest index. Requires 0 <= t <= x.size().
Eigen::VectorXd hard_threshold(const Eigen::VectorXd& x, Eigen::Index t);

/// Rejects the zero vector.
SparsityReport effective_sparsity(const Eigen::VectorXd& x);

/// Random support of size s, standard normal coefficients, f = Dx rescaled
/// to ||f||_2 = r. Resamples if f degenerates to zero (throws after 100).
GroundTruth gen_synthesis_sparse(const TightFrame& d, int s, std::uint64_t seed, double r);

/// Rejection-samples synthesis-sparse candidates with decreasing inner
/// sparsity until ||D^T f||_1 <= sqrt(s) ||D^T f||_2 holds. Throws
/// FrameUnsuitableError after 1000 attempts: some dictionaries admit no
/// effectively s-analysis-sparse signals at all for small s.
GroundTruth gen_analysis_sparse_effective(const TightFrame& d, int s, std::uint64_t seed,
                                          double r);

struct FrameUnsuitableError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// || f/||f|| - g/||g|| ||_2, in [0, 2]. Rejects zero inputs.
double direction_error(const Eigen::VectorXd& f, const Eigen::VectorXd& g);

}  // namespace onebit
