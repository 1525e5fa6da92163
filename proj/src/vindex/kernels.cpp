#include "ragweld/vindex/kernels.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>

namespace ragweld::vindex::kernels {

double dot(std::span<const double> a, std::span<const double> b) noexcept {
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

double l2_norm(std::span<const double> a) noexcept { return std::sqrt(dot(a, a)); }

double clamp_unit(double x) noexcept { return std::clamp(x, -1.0, 1.0); }

namespace {

inline double row_score(const double* row, std::span<const double> query, double row_norm,
                        double query_norm) noexcept {
  double s = 0.0;
  for (std::size_t d = 0; d < query.size(); ++d) s += row[d] * query[d];
  return clamp_unit(s / (row_norm * query_norm));
}

}  // namespace

void cosine_scores_serial(std::span<const double> rows, std::span<const double> row_norms,
                          std::size_t dim, std::span<const double> query, double query_norm,
                          std::span<double> out) noexcept {
  const std::size_t n = out.size();
  for (std::size_t i = 0; i < n; ++i) {
    out[i] = row_score(rows.data() + i * dim, query, row_norms[i], query_norm);
  }
}

void cosine_scores_omp(std::span<const double> rows, std::span<const double> row_norms,
                       std::size_t dim, std::span<const double> query, double query_norm,
                       std::span<double> out) noexcept {
  const auto n = static_cast<std::int64_t>(out.size());
  const double* base = rows.data();
  double* dst = out.data();
#pragma omp parallel for schedule(static)
  for (std::int64_t i = 0; i < n; ++i) {
    dst[i] = row_score(base + i * dim, query, row_norms[i], query_norm);
  }
}

void cosine_scores(std::span<const double> rows, std::span<const double> row_norms,
                   std::size_t dim, std::span<const double> query, double query_norm,
                   std::span<double> out) noexcept {
  if (out.size() * dim < kParallelWorkThreshold) {
    cosine_scores_serial(rows, row_norms, dim, query, query_norm, out);
  } else {
    cosine_scores_omp(rows, row_norms, dim, query, query_norm, out);
  }
}

}  // namespace ragweld::vindex::kernels
