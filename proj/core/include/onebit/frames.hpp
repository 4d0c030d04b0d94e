#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>

#include <Eigen/Core>

namespace onebit {

/// An n x N dictionary with orthonormal rows (D D^T = I_n), i.e. a tight
/// frame with frame constant 1. Signals live in R^n, coefficients in R^N.
struct TightFrame {
  Eigen::MatrixXd entries;  // n x N, dense
  std::string label;

  Eigen::Index rows() const { return entries.rows(); }  // n
  Eigen::Index cols() const { return entries.cols(); }  // N
};

struct TightnessCheck {
  double residual = 0.0;  // ||D D^T - I||_F
  bool tight = false;
};

/// ||D D^T - I_n||_F against a tolerance; works on any rectangular matrix.
TightnessCheck verify_tight(const Eigen::MatrixXd& d, double tol);

/// n x n identity dictionary (the classical, non-redundant case).
TightFrame make_identity(Eigen::Index n);

/// First n rows of the Q factor of a seeded Gaussian N x N matrix,
/// sign-fixed so the factorization is unique. Requires N >= n.
TightFrame make_random_tight(Eigen::Index n, Eigen::Index N, std::uint64_t seed);

/// Real harmonic frame: n orthonormal rows of the real Fourier design on N
/// equispaced points. All columns have norm sqrt(n/N). Requires N >= n.
TightFrame make_harmonic(Eigen::Index n, Eigen::Index N);

/// Analysis operator D^T f (coefficients of a signal).
Eigen::VectorXd analysis(const TightFrame& d, const Eigen::VectorXd& f);

/// Synthesis operator D x (signal from coefficients).
Eigen::VectorXd synthesis(const TightFrame& d, const Eigen::VectorXd& x);

/// CSV round trip: header "n,N,label" then n rows of N entries at 17
/// significant digits.
void save_frame_csv(const TightFrame& d, std::ostream& out);
void save_frame_csv(const TightFrame& d, const std::string& path);
TightFrame load_frame_csv(std::istream& in);
TightFrame load_frame_csv(const std::string& path);

}  // namespace onebit
