#pragma once

#include <cstddef>
#include <span>

// Cosine scoring of one query against a row-major matrix of stored vectors.
// The OpenMP kernel and the serial reference compute every score with the
// same per-row arithmetic, so their outputs are bit-identical.
namespace ragweld::vindex::kernels {

/// Sequential dot product, accumulated left to right.
double dot(std::span<const double> a, std::span<const double> b) noexcept;
double l2_norm(std::span<const double> a) noexcept;
double clamp_unit(double x) noexcept;

/// out[i] = clamp(dot(row_i, query) / (row_norms[i] * query_norm)).
void cosine_scores_serial(std::span<const double> rows, std::span<const double> row_norms,
                          std::size_t dim, std::span<const double> query, double query_norm,
                          std::span<double> out) noexcept;

void cosine_scores_omp(std::span<const double> rows, std::span<const double> row_norms,
                       std::size_t dim, std::span<const double> query, double query_norm,
                       std::span<double> out) noexcept;

/// Below this many multiply-adds the serial kernel is used.
inline constexpr std::size_t kParallelWorkThreshold = std::size_t{1} << 16;

void cosine_scores(std::span<const double> rows, std::span<const double> row_norms,
                   std::size_t dim, std::span<const double> query, double query_norm,
                   std::span<double> out) noexcept;

}  // namespace ragweld::vindex::kernels
