#pragma once

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>
#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "cyclebound/errors.hpp"
#include "cyclebound/graph.hpp"

namespace cyclebound {

using BigInt = boost::multiprecision::cpp_int;

/// Adjacency eigenvalues, sorted descending.
struct Spectrum {
  std::vector<double> eigenvalues;
  double tolerance = 0.0;

  double spectral_radius() const {
    double r = 0.0;
    for (double l : eigenvalues) r = std::max(r, std::abs(l));
    return r;
  }
};

inline constexpr double default_spectrum_tol = 1e-10;

/// All eigenvalues of the adjacency matrix, sorted descending.
///
/// Throws convergence_failure if the solver does not converge, or if the
/// result fails the exact checks sum(l) = 0 and sum(l^2) = 2E to within
/// tol relative to the spectral radius.
inline Spectrum adjacency_spectrum(const Graph& g, double tol = default_spectrum_tol) {
  if (!(tol > 0.0)) throw invalid_input("spectrum tolerance must be positive");
  const auto n = static_cast<Eigen::Index>(g.vertex_count());
  Eigen::MatrixXd a = Eigen::MatrixXd::Zero(n, n);
  for (const auto& e : g.edges()) a(e.u, e.v) = a(e.v, e.u) = 1.0;

  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(a, Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success) throw convergence_failure("symmetric eigensolver did not converge");

  Spectrum s;
  s.tolerance = tol;
  s.eigenvalues.assign(solver.eigenvalues().data(), solver.eigenvalues().data() + n);
  std::sort(s.eigenvalues.begin(), s.eigenvalues.end(), std::greater<>());

  const double rho = std::max(1.0, s.spectral_radius());
  double sum = 0.0, sum_sq = 0.0;
  for (double l : s.eigenvalues) {
    sum += l;
    sum_sq += l * l;
  }
  const double slack = tol * static_cast<double>(std::max<Eigen::Index>(n, 1));
  if (std::abs(sum) > slack * rho ||
      std::abs(sum_sq - 2.0 * static_cast<double>(g.edge_count())) > slack * rho * rho)
    throw convergence_failure("eigenvalues miss the trace identities at tolerance");
  return s;
}

/// Sum of l^k over the spectrum.
inline double spectral_trace(const Spectrum& s, unsigned k) {
  if (k == 0) throw invalid_input("trace power needs k >= 1");
  double t = 0.0;
  for (double l : s.eigenvalues) t += std::pow(l, static_cast<int>(k));
  return t;
}

namespace detail {

template <class T>
using IntMatrix = std::vector<std::vector<T>>;

// Checked multiply-add for int64; returns nullopt on overflow.
inline std::optional<IntMatrix<std::int64_t>> multiply(const IntMatrix<std::int64_t>& a,
                                                       const IntMatrix<std::int64_t>& b) {
  const std::size_t n = a.size();
  IntMatrix<std::int64_t> c(n, std::vector<std::int64_t>(n, 0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t l = 0; l < n; ++l) {
      if (a[i][l] == 0) continue;
      for (std::size_t j = 0; j < n; ++j) {
        std::int64_t prod = 0;
        if (__builtin_mul_overflow(a[i][l], b[l][j], &prod)) return std::nullopt;
        if (__builtin_add_overflow(c[i][j], prod, &c[i][j])) return std::nullopt;
      }
    }
  return c;
}

inline std::optional<IntMatrix<BigInt>> multiply(const IntMatrix<BigInt>& a, const IntMatrix<BigInt>& b) {
  const std::size_t n = a.size();
  IntMatrix<BigInt> c(n, std::vector<BigInt>(n, 0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t l = 0; l < n; ++l) {
      if (a[i][l] == 0) continue;
      for (std::size_t j = 0; j < n; ++j) c[i][j] += a[i][l] * b[l][j];
    }
  return c;
}

template <class T>
IntMatrix<T> adjacency(const Graph& g) {
  const std::size_t n = g.vertex_count();
  IntMatrix<T> a(n, std::vector<T>(n, 0));
  for (const auto& e : g.edges()) a[e.u][e.v] = a[e.v][e.u] = 1;
  return a;
}

// Trace of A^k by repeated squaring; nullopt if T overflows along the way.
template <class T>
std::optional<BigInt> trace_power_in(const Graph& g, unsigned k) {
  const std::size_t n = g.vertex_count();
  auto base = adjacency<T>(g);
  IntMatrix<T> result(n, std::vector<T>(n, 0));
  for (std::size_t i = 0; i < n; ++i) result[i][i] = 1;
  for (unsigned e = k;;) {
    if (e & 1U) {
      auto r = multiply(result, base);
      if (!r) return std::nullopt;
      result = std::move(*r);
    }
    e >>= 1U;
    if (e == 0) break;
    auto sq = multiply(base, base);
    if (!sq) return std::nullopt;
    base = std::move(*sq);
  }
  BigInt t = 0;
  for (std::size_t i = 0; i < n; ++i) t += BigInt(result[i][i]);
  return t;
}

}  // namespace detail

/// Exact tr(A^k): the number of rooted, oriented closed walks of length k.
inline BigInt trace_power(const Graph& g, unsigned k) {
  if (k == 0) throw invalid_input("trace power needs k >= 1");
  if (auto t = detail::trace_power_in<std::int64_t>(g, k)) return *t;
  return *detail::trace_power_in<BigInt>(g, k);
}

}  // namespace cyclebound
