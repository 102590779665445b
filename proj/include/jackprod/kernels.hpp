#pragma once

// Data-parallel reductions used by the quadrature-heavy paths. Every kernel
// has a serial reference in `serial::` and an OpenMP version in `parallel::`
// that returns bit-identical results: each outer index is reduced by one
// thread and the outer reduction always runs serially in index order.

#include <exception>
#include <mutex>
#include <span>
#include <vector>

#include "jackprod/quadrature.hpp"

namespace jackprod::kernels {

namespace detail {

template <class Row>
double row_sum(std::span<const double> inner_weights, Row&& row_term, std::size_t i) {
  CompensatedSum acc;
  for (std::size_t j = 0; j < inner_weights.size(); ++j) acc.add(inner_weights[j] * row_term(i, j));
  return acc.value();
}

inline double reduce_rows(std::span<const double> outer_weights, const std::vector<double>& rows) {
  CompensatedSum acc;
  for (std::size_t i = 0; i < rows.size(); ++i) acc.add(outer_weights[i] * rows[i]);
  return acc.value();
}

}  // namespace detail

namespace serial {

/// sum_i sum_j wu_i wv_j f(i, j)
template <class F>
double tensor_quadrature(std::span<const double> wu, std::span<const double> wv, F&& f) {
  std::vector<double> rows(wu.size());
  for (std::size_t i = 0; i < wu.size(); ++i) rows[i] = detail::row_sum(wv, f, i);
  return detail::reduce_rows(wu, rows);
}

/// out[i] = f(i) for i < n.
template <class T, class F>
std::vector<T> map_indices(std::size_t n, F&& f) {
  std::vector<T> out;
  out.reserve(n);
  for (std::size_t i = 0; i < n; ++i) out.push_back(f(i));
  return out;
}

}  // namespace serial

namespace parallel {

template <class F>
double tensor_quadrature(std::span<const double> wu, std::span<const double> wv, F&& f) {
  const long n = static_cast<long>(wu.size());
  std::vector<double> rows(wu.size());
  std::exception_ptr error;
  std::mutex error_mutex;
#pragma omp parallel for schedule(static)
  for (long i = 0; i < n; ++i) {
    try {
      rows[static_cast<std::size_t>(i)] = detail::row_sum(wv, f, static_cast<std::size_t>(i));
    } catch (...) {
      std::lock_guard<std::mutex> lock(error_mutex);
      if (!error) error = std::current_exception();
    }
  }
  if (error) std::rethrow_exception(error);
  return detail::reduce_rows(wu, rows);
}

template <class T, class F>
std::vector<T> map_indices(std::size_t n, F&& f) {
  std::vector<T> out(n);
  std::exception_ptr error;
  std::mutex error_mutex;
#pragma omp parallel for schedule(dynamic)
  for (long i = 0; i < static_cast<long>(n); ++i) {
    try {
      out[static_cast<std::size_t>(i)] = f(static_cast<std::size_t>(i));
    } catch (...) {
      std::lock_guard<std::mutex> lock(error_mutex);
      if (!error) error = std::current_exception();
    }
  }
  if (error) std::rethrow_exception(error);
  return out;
}

}  // namespace parallel

/// Number of OpenMP threads available (1 when built without OpenMP).
int max_threads();

}  // namespace jackprod::kernels
