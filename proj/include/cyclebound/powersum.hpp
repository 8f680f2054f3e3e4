#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <functional>
#include <limits>
#include <numeric>
#include <random>
#include <span>
#include <string>
#include <thread>
#include <vector>

#include "cyclebound/bounds.hpp"
#include "cyclebound/errors.hpp"

namespace cyclebound {

// The feasible set throughout is {x in R^n : sum x_i = 0, sum x_i^2 = 1}.

enum class SumMode {
  /// sum x_i^p
  signed_sum,
  /// sum |x_i|^p, the p-th power of the L^p norm
  absolute,
};

inline const char* to_string(SumMode m) { return m == SumMode::signed_sum ? "signed" : "absolute"; }

struct PowerSumProblem {
  long long n = 2;
  double p = 3.0;
  SumMode mode = SumMode::signed_sum;

  void validate() const {
    if (n < 2) throw invalid_input("power-sum problem needs n >= 2");
    if (!(p > 2.0) || !std::isfinite(p)) throw invalid_input("power-sum problem needs a finite p > 2");
    if (mode == SumMode::signed_sum && p != std::floor(p))
      throw invalid_input("signed power sums need an integer exponent");
  }

  bool even_symmetric() const { return mode == SumMode::absolute || static_cast<long long>(p) % 2 == 0; }
};

/// A feasible point with the data of the Lagrange system
///   phi(x_i) = lambda1 + lambda2 x_i,   phi(x) = x^{p-1} (or sign(x)|x|^{p-1}),
/// where lambda2 equals the objective and n lambda1 = sum phi(x_i).
struct ExtremalSolution {
  std::vector<double> point;
  long long n1 = 0;
  long long n2 = 0;
  double alpha1 = 0.0;
  double alpha2 = 0.0;
  double lambda1 = 0.0;
  double lambda2 = 0.0;
  double objective = 0.0;
};

namespace detail {

inline double power_term(double x, double p, SumMode mode) {
  if (mode == SumMode::absolute) return std::pow(std::abs(x), p);
  return std::pow(x, static_cast<int>(p));
}

// d/dx of power_term divided by p.
inline double stationarity_term(double x, double p, SumMode mode) {
  if (mode == SumMode::absolute) return std::copysign(std::pow(std::abs(x), p - 1.0), x);
  return std::pow(x, static_cast<int>(p) - 1);
}

}  // namespace detail

inline double power_sum(std::span<const double> x, double p, SumMode mode = SumMode::signed_sum) {
  double s = 0.0;
  for (double v : x) s += detail::power_term(v, p, mode);
  return s;
}

/// Fills lambda1, lambda2, objective and the two-level summary from `point`.
inline void fill_lagrange_data(ExtremalSolution& s, double p, SumMode mode) {
  const auto n = static_cast<double>(s.point.size());
  double phi_sum = 0.0;
  for (double v : s.point) phi_sum += detail::stationarity_term(v, p, mode);
  s.objective = power_sum(s.point, p, mode);
  s.lambda2 = s.objective;
  s.lambda1 = phi_sum / n;

  s.n1 = s.n2 = 0;
  double pos = 0.0, neg = 0.0;
  for (double v : s.point) {
    if (v > 0.0) {
      ++s.n1;
      pos += v;
    } else {
      ++s.n2;
      neg += v;
    }
  }
  s.alpha1 = s.n1 ? pos / static_cast<double>(s.n1) : 0.0;
  s.alpha2 = s.n2 ? neg / static_cast<double>(s.n2) : 0.0;
}

/// The feasible point with n1 coordinates at sqrt(n2/(n1 n)) and n2 at
/// -sqrt(n1/(n2 n)). Every such point is stationary for every exponent.
inline ExtremalSolution two_level_point(long long n, long long n1, double p, SumMode mode = SumMode::signed_sum) {
  if (n < 2 || n1 < 1 || n1 >= n) throw invalid_input("two-level split needs 1 <= n1 < n");
  const long long n2 = n - n1;
  const double dn = static_cast<double>(n), d1 = static_cast<double>(n1), d2 = static_cast<double>(n2);
  ExtremalSolution s;
  const double a1 = std::sqrt(d2 / (d1 * dn));
  const double a2 = -std::sqrt(d1 / (d2 * dn));
  s.point.assign(static_cast<std::size_t>(n1), a1);
  s.point.insert(s.point.end(), static_cast<std::size_t>(n2), a2);
  fill_lagrange_data(s, p, mode);
  s.n1 = n1;
  s.n2 = n2;
  s.alpha1 = a1;
  s.alpha2 = a2;
  return s;
}

/// The closed-form maximizer: one coordinate sqrt((n-1)/n), the rest
/// -1/sqrt(n(n-1)). Its objective is odd_extremum for odd p and
/// even_extremum for even p.
inline ExtremalSolution extremal_point(long long n, unsigned p) {
  if (n < 2 || p < 3) throw invalid_input("extremal_point needs n >= 2 and p >= 3");
  auto s = two_level_point(n, 1, p);
  s.objective = extremum(n, p);
  s.lambda2 = s.objective;
  return s;
}

/// Every two-level stationary point, sorted by descending objective
/// (ties by ascending n1).
inline std::vector<ExtremalSolution> two_level_solutions(long long n, unsigned p) {
  if (n < 2 || p < 3) throw invalid_input("two_level_solutions needs n >= 2 and p >= 3");
  std::vector<ExtremalSolution> out;
  for (long long n1 = 1; n1 < n; ++n1) out.push_back(two_level_point(n, n1, p));
  std::stable_sort(out.begin(), out.end(),
                   [](const auto& a, const auto& b) { return a.objective > b.objective; });
  return out;
}

// ---------------------------------------------------------------------------
// Projected gradient ascent on the feasible set.

struct AscentOptions {
  std::uint64_t seed = 1;
  unsigned iterations = 20000;
  double tol = 1e-8;
  unsigned restarts = 32;
  unsigned jobs = 1;
};

struct AscentRun {
  std::vector<double> point;
  double objective = -std::numeric_limits<double>::infinity();
  /// Norm of the gradient projected onto the tangent space at `point`.
  double residual = std::numeric_limits<double>::infinity();
  unsigned iterations_used = 0;
};

struct AscentResult {
  AscentRun best;
  unsigned best_restart = 0;
  unsigned converged_restarts = 0;
  std::vector<double> restart_objectives;
};

namespace detail {

inline void project_to_feasible(std::vector<double>& x) {
  const double mean = std::accumulate(x.begin(), x.end(), 0.0) / static_cast<double>(x.size());
  double norm = 0.0;
  for (double& v : x) {
    v -= mean;
    norm += v * v;
  }
  norm = std::sqrt(norm);
  for (double& v : x) v /= norm;
}

// Removes the components of g normal to the feasible set at x.
inline std::vector<double> tangent_component(std::vector<double> g, const std::vector<double>& x) {
  const double mean = std::accumulate(g.begin(), g.end(), 0.0) / static_cast<double>(g.size());
  double along = 0.0;
  for (std::size_t i = 0; i < g.size(); ++i) {
    g[i] -= mean;
    along += g[i] * x[i];
  }
  for (std::size_t i = 0; i < g.size(); ++i) g[i] -= along * x[i];
  return g;
}

inline double norm2(const std::vector<double>& v) {
  double s = 0.0;
  for (double a : v) s += a * a;
  return std::sqrt(s);
}

inline std::uint64_t splitmix64(std::uint64_t z) {
  z += 0x9e3779b97f4a7c15ULL;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

}  // namespace detail

using ObjectiveFn = std::function<double(const std::vector<double>&)>;
using GradientFn = std::function<std::vector<double>(const std::vector<double>&)>;

/// One ascent run from `start` with step halving on rejected steps.
///
/// A step is accepted when it raises the objective, or when it keeps the
/// objective within rounding noise and lowers the projected-gradient
/// residual. The second rule lets the run finish off the last digits of
/// stationarity, where objective differences are below double resolution.
inline AscentRun ascend_from(std::vector<double> start, const ObjectiveFn& f, const GradientFn& grad,
                             const AscentOptions& opt) {
  AscentRun run;
  detail::project_to_feasible(start);
  run.point = std::move(start);
  run.objective = f(run.point);
  double step = 0.25;
  for (unsigned it = 0; it < opt.iterations; ++it) {
    run.iterations_used = it + 1;
    const auto dir = detail::tangent_component(grad(run.point), run.point);
    run.residual = detail::norm2(dir);
    if (run.residual <= 0.1 * opt.tol) break;
    const double noise = 64.0 * std::numeric_limits<double>::epsilon() * std::max(1.0, std::abs(run.objective));
    bool moved = false;
    while (step > 1e-18) {
      std::vector<double> trial(run.point.size());
      for (std::size_t i = 0; i < trial.size(); ++i) trial[i] = run.point[i] + step * dir[i];
      detail::project_to_feasible(trial);
      const double ft = f(trial);
      bool accept = ft > run.objective;
      if (!accept && ft >= run.objective - noise && trial != run.point)
        accept = detail::norm2(detail::tangent_component(grad(trial), trial)) < run.residual;
      if (accept) {
        moved = true;
        run.point = std::move(trial);
        run.objective = ft;
        step = std::min(step * 1.5, 4.0);
        break;
      }
      step *= 0.5;
    }
    if (!moved) break;
  }
  run.residual = detail::norm2(detail::tangent_component(grad(run.point), run.point));
  return run;
}

/// Seeded multistart ascent. Restart r draws its Gaussian start from a
/// generator seeded with splitmix64(seed + r), so results do not depend on
/// `jobs`. The best run wins; equal objectives go to the lexicographically
/// larger point.
inline AscentResult multistart_ascent(long long n, const ObjectiveFn& f, const GradientFn& grad,
                                      const AscentOptions& opt,
                                      const std::function<void(std::vector<double>&)>& canonicalize = {}) {
  if (n < 2) throw invalid_input("ascent needs n >= 2");
  if (opt.restarts == 0 || opt.iterations == 0) throw invalid_input("ascent needs restarts and iterations > 0");
  if (!(opt.tol > 0.0)) throw invalid_input("ascent tolerance must be positive");

  std::vector<AscentRun> runs(opt.restarts);
  auto work = [&](unsigned r) {
    std::mt19937_64 rng(detail::splitmix64(opt.seed + r));
    std::normal_distribution<double> gauss;
    std::vector<double> x(static_cast<std::size_t>(n));
    for (double& v : x) v = gauss(rng);
    runs[r] = ascend_from(std::move(x), f, grad, opt);
    if (canonicalize) canonicalize(runs[r].point);
  };
  const unsigned jobs = std::max(1U, std::min(opt.jobs, opt.restarts));
  if (jobs == 1) {
    for (unsigned r = 0; r < opt.restarts; ++r) work(r);
  } else {
    std::vector<std::thread> pool;
    for (unsigned j = 0; j < jobs; ++j)
      pool.emplace_back([&, j] {
        for (unsigned r = j; r < opt.restarts; r += jobs) work(r);
      });
    for (auto& t : pool) t.join();
  }

  AscentResult result;
  for (unsigned r = 0; r < opt.restarts; ++r) {
    result.restart_objectives.push_back(runs[r].objective);
    if (runs[r].residual <= opt.tol) ++result.converged_restarts;
    const bool better = runs[r].objective > result.best.objective ||
                        (runs[r].objective == result.best.objective && runs[r].point > result.best.point);
    if (r == 0 || better) {
      result.best = runs[r];
      result.best_restart = r;
    }
  }
  return result;
}

/// Sorts descending; for sign-symmetric objectives also flips the sign so the
/// largest-magnitude coordinate is positive.
inline void canonicalize_point(std::vector<double>& x, bool sign_symmetric) {
  std::sort(x.begin(), x.end(), std::greater<>());
  if (sign_symmetric && !x.empty() && -x.back() > x.front()) {
    for (double& v : x) v = -v;
    std::sort(x.begin(), x.end(), std::greater<>());
  }
}

struct NumericSolution {
  ExtremalSolution solution;
  double residual = 0.0;
  unsigned restarts = 0;
  unsigned converged_restarts = 0;
  unsigned best_restart = 0;
  std::vector<double> restart_objectives;
};

/// Numerical maximum of the power sum over the feasible set.
/// Throws convergence_failure when the best run's projected-gradient
/// residual is above opt.tol.
inline NumericSolution numeric_maximize(const PowerSumProblem& problem, const AscentOptions& opt = {}) {
  problem.validate();
  const double p = problem.p;
  const SumMode mode = problem.mode;
  ObjectiveFn f = [=](const std::vector<double>& x) { return power_sum(x, p, mode); };
  GradientFn grad = [=](const std::vector<double>& x) {
    std::vector<double> g(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) g[i] = p * detail::stationarity_term(x[i], p, mode);
    return g;
  };
  const bool symmetric = problem.even_symmetric();
  auto result = multistart_ascent(problem.n, f, grad, opt,
                                  [symmetric](std::vector<double>& x) { canonicalize_point(x, symmetric); });
  if (result.best.residual > opt.tol)
    throw convergence_failure("projected-gradient residual " + std::to_string(result.best.residual) +
                              " above tol after " + std::to_string(opt.restarts) + " restarts");
  NumericSolution out;
  out.solution.point = result.best.point;
  fill_lagrange_data(out.solution, p, mode);
  out.residual = result.best.residual;
  out.restarts = opt.restarts;
  out.converged_restarts = result.converged_restarts;
  out.best_restart = result.best_restart;
  out.restart_objectives = std::move(result.restart_objectives);
  return out;
}

// ---------------------------------------------------------------------------
// Threshold machinery for even p.

struct ThresholdRecord {
  double p = 0.0;
  double g_value = 0.0;
  double h_value = 0.0;
  /// Smallest n >= 2 with 1 - 1/n >= g(p).
  long long n_threshold = 0;
  /// n in [3, n_threshold): dimensions the general argument does not reach.
  std::vector<long long> exceptional_n;
};

/// h(p) = (1 + (p-1)^{-2/(p-2)})^{(p-2)/p}, g = 1/h.
/// g decreases monotonically to 1/2 as p grows.
inline ThresholdRecord g_threshold(double p) {
  if (!(p > 2.0) || !std::isfinite(p)) throw invalid_input("g_threshold needs a finite p > 2");
  ThresholdRecord r;
  r.p = p;
  r.h_value = std::pow(1.0 + std::pow(p - 1.0, -2.0 / (p - 2.0)), (p - 2.0) / p);
  r.g_value = 1.0 / r.h_value;
  auto holds = [&](long long n) { return 1.0 - 1.0 / static_cast<double>(n) >= r.g_value; };
  long long n = std::max<long long>(2, static_cast<long long>(std::ceil(1.0 / (1.0 - r.g_value))));
  while (n > 2 && holds(n - 1)) --n;
  while (!holds(n)) ++n;
  r.n_threshold = n;
  for (long long m = 3; m < n; ++m) r.exceptional_n.push_back(m);
  return r;
}

struct ExceptionalPair {
  long long n = 0;
  unsigned p = 0;
  friend bool operator==(const ExceptionalPair&, const ExceptionalPair&) = default;
  friend auto operator<=>(const ExceptionalPair& a, const ExceptionalPair& b) {
    if (auto c = a.p <=> b.p; c != 0) return c;
    return a.n <=> b.n;
  }
};

/// Pairs (n, p), p even in [4, p_max], not covered by the threshold
/// inequality. Sorted by p, then n.
inline std::vector<ExceptionalPair> exceptional_set(unsigned p_max) {
  if (p_max < 4 || p_max % 2 != 0) throw invalid_input("exceptional_set needs an even p_max >= 4");
  std::vector<ExceptionalPair> out;
  for (unsigned p = 4; p <= p_max; p += 2)
    for (long long n : g_threshold(p).exceptional_n) out.push_back({n, p});
  return out;
}

/// Intermediate quantities of the even-p separation argument at (n, p):
/// N = M^{1/(p-2)} bounds the largest coordinate below, the second largest
/// satisfies x_2^2 <= 1 - N^2, and z >= (M/(p-1))^{1/(p-2)} is the critical
/// point of x^{p-1} - lambda2 x. `separated` means z^2 >= 1 - N^2, which
/// forces at most two distinct coordinate values.
struct SeparationCheck {
  long long n = 0;
  unsigned p = 0;
  double m_value = 0.0;
  double n_value = 0.0;
  double z_lower = 0.0;
  double second_sq_upper = 0.0;
  bool separated = false;
  bool threshold_holds = false;
};

inline SeparationCheck separation_check(long long n, unsigned p) {
  if (n < 2 || p < 4 || p % 2) throw invalid_input("separation_check needs n >= 2 and even p >= 4");
  SeparationCheck c;
  c.n = n;
  c.p = p;
  c.m_value = odd_extremum(n, p);
  const double inv = 1.0 / static_cast<double>(p - 2);
  c.n_value = std::pow(c.m_value, inv);
  c.z_lower = std::pow(c.m_value / static_cast<double>(p - 1), inv);
  c.second_sq_upper = 1.0 - c.n_value * c.n_value;
  c.separated = c.z_lower * c.z_lower >= c.second_sq_upper;
  c.threshold_holds = 1.0 - 1.0 / static_cast<double>(n) >= g_threshold(p).g_value;
  return c;
}

/// For p = 4: could a maximizer take three distinct values?
///
/// The largest coordinate alpha satisfies alpha^2 >= ((n-1)/n)^2. Three values
/// with beta + gamma = -alpha and beta repeated give
/// 1 >= alpha^2 + 2 beta^2 + gamma^2. Minimizing at beta = -2alpha/3,
/// gamma = -alpha/3 yields alpha^2 <= 1/2 (`alpha_sq_upper`, `excluded`).
/// The true minimizer of 2 beta^2 + gamma^2 on that line is beta = -alpha/3,
/// gamma = -2alpha/3, giving alpha^2 <= 3/5 (`*_corrected`); n = 4 then needs
/// the separate n = 4 symmetric-function argument.
struct ThreeValueReport {
  long long n = 0;
  double alpha_sq_upper = 0.5;
  double alpha_sq_lower = 0.0;
  bool excluded = false;
  double alpha_sq_upper_corrected = 0.6;
  bool excluded_corrected = false;
};

inline ThreeValueReport p4_three_value_check(long long n) {
  if (n < 3) throw invalid_input("p4_three_value_check needs n >= 3");
  ThreeValueReport r;
  r.n = n;
  const double ratio = static_cast<double>(n - 1) / static_cast<double>(n);
  r.alpha_sq_lower = ratio * ratio;
  r.excluded = r.alpha_sq_lower > r.alpha_sq_upper;
  r.excluded_corrected = r.alpha_sq_lower > r.alpha_sq_upper_corrected;
  return r;
}

/// Which argument settles the maximizer at (n, p).
enum class ProofRoute {
  odd_exponent,        // two-value Lagrange analysis, any n
  newton_n3,           // t_k is a positive polynomial in e3
  newton_n4,           // t3, t4, t6 via e3 and e4
  three_value_p4,      // at most three values; three excluded by size
  separation,          // threshold inequality
  two_dimensional,     // n = 2: the feasible set is two antipodal points
};

inline const char* to_string(ProofRoute r) {
  switch (r) {
    case ProofRoute::odd_exponent: return "odd_exponent";
    case ProofRoute::newton_n3: return "newton_n3";
    case ProofRoute::newton_n4: return "newton_n4";
    case ProofRoute::three_value_p4: return "three_value_p4";
    case ProofRoute::separation: return "separation";
    case ProofRoute::two_dimensional: return "two_dimensional";
  }
  return "unknown";
}

inline ProofRoute proof_route(long long n, unsigned p) {
  if (n < 2 || p < 3) throw invalid_input("proof_route needs n >= 2 and p >= 3");
  if (n == 2) return ProofRoute::two_dimensional;
  if (p % 2) return ProofRoute::odd_exponent;
  if (n == 3) return ProofRoute::newton_n3;
  if (n == 4 && p <= 6) return ProofRoute::newton_n4;
  if (p == 4) return ProofRoute::three_value_p4;
  return ProofRoute::separation;
}

}  // namespace cyclebound
