#pragma once

#include <cassert>
#include <cmath>
#include <cstddef>
#include <span>
#include <vector>

namespace ilhf {

using Vec = std::vector<double>;

// Row-major dense matrix. Shapes here are tiny (d=2, D=10), so this stays a
// flat buffer with no view machinery.
struct Mat {
  int rows = 0;
  int cols = 0;
  Vec a;

  Mat() = default;
  Mat(int r, int c) : rows(r), cols(c), a(static_cast<size_t>(r) * c, 0.0) {}

  double& operator()(int i, int j) { return a[static_cast<size_t>(i) * cols + j]; }
  double operator()(int i, int j) const { return a[static_cast<size_t>(i) * cols + j]; }
};

inline double dot(std::span<const double> x, std::span<const double> y) {
  assert(x.size() == y.size());
  double s = 0.0;
  for (size_t i = 0; i < x.size(); ++i) s += x[i] * y[i];
  return s;
}

// out = m * x
inline void matvec(const Mat& m, std::span<const double> x, std::span<double> out) {
  assert(static_cast<int>(x.size()) == m.cols && static_cast<int>(out.size()) == m.rows);
  for (int i = 0; i < m.rows; ++i) {
    double s = 0.0;
    const double* row = m.a.data() + static_cast<size_t>(i) * m.cols;
    for (int j = 0; j < m.cols; ++j) s += row[j] * x[j];
    out[i] = s;
  }
}

// out = m^T * x
inline void matvec_t(const Mat& m, std::span<const double> x, std::span<double> out) {
  assert(static_cast<int>(x.size()) == m.rows && static_cast<int>(out.size()) == m.cols);
  for (int j = 0; j < m.cols; ++j) out[j] = 0.0;
  for (int i = 0; i < m.rows; ++i) {
    const double* row = m.a.data() + static_cast<size_t>(i) * m.cols;
    for (int j = 0; j < m.cols; ++j) out[j] += row[j] * x[i];
  }
}

// y += a * x
inline void axpy(double a, std::span<const double> x, std::span<double> y) {
  assert(x.size() == y.size());
  for (size_t i = 0; i < x.size(); ++i) y[i] += a * x[i];
}

// next = tanh(w * s + u * x), the one recurrence shared by the generating
// process and the agent; keeping a single implementation makes an agent that
// embeds the process bit-identical to it.
inline void recurrence_step(const Mat& w, const Vec& u, std::span<const double> s, double x,
                            std::span<double> next) {
  matvec(w, s, next);
  for (size_t i = 0; i < next.size(); ++i) next[i] = std::tanh(next[i] + u[i] * x);
}

// Numerically stable logistic and friends; all token probabilities flow
// through these.
inline double logistic(double z) {
  if (z >= 0.0) return 1.0 / (1.0 + std::exp(-z));
  const double e = std::exp(z);
  return e / (1.0 + e);
}

// ln(sigma(z)); ln P(token x | logit z) is log_sigmoid(x * z) for x in {-1,+1}.
inline double log_sigmoid(double z) {
  if (z >= 0.0) return -std::log1p(std::exp(-z));
  return z - std::log1p(std::exp(z));
}

inline double logsumexp2(double a, double b) {
  const double m = a > b ? a : b;
  return m + std::log1p(std::exp(-std::fabs(a - b)));
}

inline bool all_finite(std::span<const double> v) {
  for (double x : v)
    if (!std::isfinite(x)) return false;
  return true;
}

struct MeanStderr {
  double mean = 0.0;
  double stderr_ = 0.0;
};

// Sample mean and standard error (sample std / sqrt(n)); n >= 2 required for
// a nonzero-defined stderr, n == 1 yields stderr 0.
inline MeanStderr mean_stderr(std::span<const double> v) {
  const size_t n = v.size();
  double mean = 0.0;
  for (double x : v) mean += x;
  mean /= static_cast<double>(n);
  if (n < 2) return {mean, 0.0};
  double ss = 0.0;
  for (double x : v) ss += (x - mean) * (x - mean);
  const double var = ss / static_cast<double>(n - 1);
  return {mean, std::sqrt(var / static_cast<double>(n))};
}

}  // namespace ilhf
