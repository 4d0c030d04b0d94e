#include "onebit/frames.hpp"

#include <cmath>
#include <fstream>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include <Eigen/Dense>

#include "onebit/rng.hpp"

namespace onebit {

TightnessCheck verify_tight(const Eigen::MatrixXd& d, double tol) {
  const Eigen::Index n = d.rows();
  const Eigen::MatrixXd gram = d * d.transpose();
  const double residual = (gram - Eigen::MatrixXd::Identity(n, n)).norm();
  return {residual, residual <= tol};
}

TightFrame make_identity(Eigen::Index n) {
  if (n < 1) throw std::invalid_argument("make_identity: n must be >= 1");
  return {Eigen::MatrixXd::Identity(n, n), "identity"};
}

TightFrame make_random_tight(Eigen::Index n, Eigen::Index N, std::uint64_t seed) {
  if (n < 1) throw std::invalid_argument("make_random_tight: n must be >= 1");
  if (N < n) throw std::invalid_argument("make_random_tight: N must be >= n");
  RngStream rng(seed);
  const Eigen::MatrixXd g = rng.gaussian_matrix(N, N);
  Eigen::HouseholderQR<Eigen::MatrixXd> qr(g);
  Eigen::MatrixXd q = qr.householderQ();
  const Eigen::MatrixXd r = qr.matrixQR().triangularView<Eigen::Upper>();
  // Fix column signs so Q is the unique factor with positive R diagonal.
  for (Eigen::Index j = 0; j < N; ++j)
    if (r(j, j) < 0.0) q.col(j) = -q.col(j);
  TightFrame d;
  d.entries = q.leftCols(n).transpose();
  d.label = "random_tight";
  return d;
}

TightFrame make_harmonic(Eigen::Index n, Eigen::Index N) {
  if (n < 1) throw std::invalid_argument("make_harmonic: n must be >= 1");
  if (N < n) throw std::invalid_argument("make_harmonic: N must be >= n");
  Eigen::MatrixXd d(n, N);
  const double two_pi = 2.0 * std::numbers::pi;
  Eigen::Index row = 0;
  Eigen::Index k_max = 0;
  bool constant_row = false;
  bool nyquist_row = false;
  if (n % 2 == 1) {
    constant_row = true;
    k_max = (n - 1) / 2;
  } else if (n < N) {
    k_max = n / 2;
  } else {  // n == N even: the full real Fourier basis
    constant_row = true;
    nyquist_row = true;
    k_max = N / 2 - 1;
  }
  if (constant_row) {
    d.row(row++).setConstant(1.0 / std::sqrt(static_cast<double>(N)));
  }
  // Each cos/sin pair at frequency k < N/2 contributes 2/N to every squared
  // column norm, which is what makes all column norms equal sqrt(n/N).
  const double scale = std::sqrt(2.0 / static_cast<double>(N));
  for (Eigen::Index k = 1; k <= k_max; ++k) {
    for (Eigen::Index j = 0; j < N; ++j) {
      const double theta = two_pi * static_cast<double>(k) * static_cast<double>(j) /
                           static_cast<double>(N);
      d(row, j) = scale * std::cos(theta);
      d(row + 1, j) = scale * std::sin(theta);
    }
    row += 2;
  }
  if (nyquist_row) {
    for (Eigen::Index j = 0; j < N; ++j)
      d(row, j) = (j % 2 == 0 ? 1.0 : -1.0) / std::sqrt(static_cast<double>(N));
    ++row;
  }
  if (row != n) throw std::logic_error("make_harmonic: row bookkeeping failed");
  return {std::move(d), "harmonic"};
}

Eigen::VectorXd analysis(const TightFrame& d, const Eigen::VectorXd& f) {
  if (f.size() != d.rows())
    throw std::invalid_argument("analysis: signal dimension mismatch");
  return d.entries.transpose() * f;
}

Eigen::VectorXd synthesis(const TightFrame& d, const Eigen::VectorXd& x) {
  if (x.size() != d.cols())
    throw std::invalid_argument("synthesis: coefficient dimension mismatch");
  return d.entries * x;
}

void save_frame_csv(const TightFrame& d, std::ostream& out) {
  out << d.rows() << ',' << d.cols() << ',' << d.label << '\n';
  std::ostringstream line;
  line.precision(17);
  for (Eigen::Index i = 0; i < d.rows(); ++i) {
    line.str("");
    for (Eigen::Index j = 0; j < d.cols(); ++j) {
      if (j) line << ',';
      line << d.entries(i, j);
    }
    out << line.str() << '\n';
  }
}

void save_frame_csv(const TightFrame& d, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("save_frame_csv: cannot open " + path);
  save_frame_csv(d, out);
}

TightFrame load_frame_csv(std::istream& in) {
  std::string header;
  if (!std::getline(in, header))
    throw std::runtime_error("load_frame_csv: empty input");
  std::istringstream hs(header);
  std::string n_str, N_str, label;
  if (!std::getline(hs, n_str, ',') || !std::getline(hs, N_str, ','))
    throw std::runtime_error("load_frame_csv: malformed header");
  std::getline(hs, label);
  const Eigen::Index n = std::stoll(n_str);
  const Eigen::Index N = std::stoll(N_str);
  if (n < 1 || N < 1) throw std::runtime_error("load_frame_csv: bad dimensions");
  TightFrame d;
  d.entries.resize(n, N);
  d.label = label;
  std::string line;
  for (Eigen::Index i = 0; i < n; ++i) {
    if (!std::getline(in, line))
      throw std::runtime_error("load_frame_csv: truncated matrix");
    std::istringstream ls(line);
    std::string cell;
    for (Eigen::Index j = 0; j < N; ++j) {
      if (!std::getline(ls, cell, ','))
        throw std::runtime_error("load_frame_csv: short row");
      d.entries(i, j) = std::stod(cell);
    }
  }
  return d;
}

TightFrame load_frame_csv(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("load_frame_csv: cannot open " + path);
  return load_frame_csv(in);
}

}  // namespace onebit
