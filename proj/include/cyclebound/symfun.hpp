#pragma once

#include <algorithm>
#include <cmath>
#include <map>
#include <span>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "cyclebound/errors.hpp"
#include "cyclebound/powersum.hpp"

namespace cyclebound {

using Rational = boost::multiprecision::cpp_rational;

/// Polynomial in e3 and e4 with exact rational coefficients.
///
/// Under the constraints sum x = 0 and sum x^2 = 1 we have e1 = 0 and
/// e2 = -1/2, so for n <= 4 every power sum lives in this ring.
class EPoly {
 public:
  using Monomial = std::pair<unsigned, unsigned>;  // (deg e3, deg e4)

  EPoly() = default;
  EPoly(int c) : EPoly(Rational(c)) {}  // NOLINT(google-explicit-constructor)
  EPoly(const Rational& c) {            // NOLINT(google-explicit-constructor)
    if (c != 0) terms_[{0, 0}] = c;
  }

  static EPoly e3() { return monomial(1, 0); }
  static EPoly e4() { return monomial(0, 1); }
  static EPoly monomial(unsigned d3, unsigned d4, const Rational& c = 1) {
    EPoly p;
    if (c != 0) p.terms_[{d3, d4}] = c;
    return p;
  }

  const std::map<Monomial, Rational>& terms() const noexcept { return terms_; }

  Rational coefficient(unsigned d3, unsigned d4 = 0) const {
    auto it = terms_.find({d3, d4});
    return it == terms_.end() ? Rational(0) : it->second;
  }

  bool is_zero() const noexcept { return terms_.empty(); }

  double evaluate(double e3, double e4 = 0.0) const {
    double v = 0.0;
    for (const auto& [m, c] : terms_)
      v += c.convert_to<double>() * std::pow(e3, static_cast<int>(m.first)) * std::pow(e4, static_cast<int>(m.second));
    return v;
  }

  EPoly& operator+=(const EPoly& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
  }
  EPoly& operator-=(const EPoly& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
  }
  friend EPoly operator+(EPoly a, const EPoly& b) { return a += b; }
  friend EPoly operator-(EPoly a, const EPoly& b) { return a -= b; }
  friend EPoly operator-(const EPoly& a) { return EPoly() - a; }

  friend EPoly operator*(const EPoly& a, const EPoly& b) {
    EPoly r;
    for (const auto& [ma, ca] : a.terms_)
      for (const auto& [mb, cb] : b.terms_) r.add_term({ma.first + mb.first, ma.second + mb.second}, ca * cb);
    return r;
  }

  friend bool operator==(const EPoly&, const EPoly&) = default;

  /// e.g. "1/4 + 3*e3^2 - 3*e4"; pure e3 terms first, then by e4 degree.
  std::string str() const {
    if (terms_.empty()) return "0";
    std::vector<std::pair<Monomial, Rational>> ordered(terms_.begin(), terms_.end());
    std::stable_sort(ordered.begin(), ordered.end(), [](const auto& a, const auto& b) {
      return std::pair(a.first.second, a.first.first) < std::pair(b.first.second, b.first.first);
    });
    std::ostringstream out;
    bool first = true;
    for (const auto& [m, c] : ordered) {
      Rational mag = c < 0 ? Rational(-c) : c;
      if (first) {
        if (c < 0) out << "-";
      } else {
        out << (c < 0 ? " - " : " + ");
      }
      first = false;
      const bool bare = m.first == 0 && m.second == 0;
      if (bare || mag != 1) out << mag.str() << (bare ? "" : "*");
      auto var = [&](const char* name, unsigned d, bool need_star) {
        if (d == 0) return;
        if (need_star) out << "*";
        out << name;
        if (d > 1) out << "^" << d;
      };
      var("e3", m.first, false);
      var("e4", m.second, m.first != 0);
    }
    return out.str();
  }

 private:
  void add_term(const Monomial& m, const Rational& c) {
    auto& slot = terms_[m];
    slot += c;
    if (slot == 0) terms_.erase(m);
  }

  std::map<Monomial, Rational> terms_;
};

/// A power sum t_k of n variables written as a polynomial in e3 (and e4).
struct SymPolyInE {
  unsigned n = 0;
  unsigned k = 0;
  EPoly poly;
};

/// e_1..e_n of the given roots: (-1)^k times the coefficient of x^{n-k} in
/// prod (x - x_i). Exact when T is Rational.
template <class T>
std::vector<T> elementary_from_roots(std::span<const T> xs) {
  if (xs.empty()) throw invalid_input("elementary_from_roots needs at least one root");
  std::vector<T> e(xs.size() + 1, T(0));
  e[0] = T(1);
  for (std::size_t i = 0; i < xs.size(); ++i)
    for (std::size_t k = i + 1; k >= 1; --k) e[k] = e[k] + xs[i] * e[k - 1];
  e.erase(e.begin());
  return e;
}

template <class T>
std::vector<T> elementary_from_roots(const std::vector<T>& xs) {
  return elementary_from_roots(std::span<const T>(xs));
}

/// t_1..t_{k_max} from e_1..e_n by Newton's identities:
///
///   t_k = sum_{i=1}^{min(k-1,n)} (-1)^{i-1} e_i t_{k-i} + [k <= n] (-1)^{k-1} k e_k
///
/// with e_i = 0 for i > n. Works over any commutative ring T constructible
/// from int (double, Rational, EPoly).
template <class T>
std::vector<T> power_sums_from_elementary(std::span<const T> es, unsigned k_max) {
  if (es.empty()) throw invalid_input("power_sums_from_elementary needs n >= 1 elementary values");
  const std::size_t n = es.size();
  std::vector<T> t(static_cast<std::size_t>(k_max) + 1, T(0));
  for (std::size_t k = 1; k <= k_max; ++k) {
    T acc(0);
    for (std::size_t i = 1; i <= std::min(k - 1, n); ++i) {
      const T term = es[i - 1] * t[k - i];
      if (i % 2 == 1)
        acc = acc + term;
      else
        acc = acc - term;
    }
    if (k <= n) {
      const T term = T(static_cast<int>(k)) * es[k - 1];
      if (k % 2 == 1)
        acc = acc + term;
      else
        acc = acc - term;
    }
    t[k] = acc;
  }
  t.erase(t.begin());
  return t;
}

template <class T>
std::vector<T> power_sums_from_elementary(const std::vector<T>& es, unsigned k_max) {
  return power_sums_from_elementary(std::span<const T>(es), k_max);
}

/// t_k(x1,x2,x3) under e1 = 0, e2 = -1/2 via t_k = t_{k-2}/2 + e3 t_{k-3},
/// starting from t0 = 3, t1 = 0, t2 = 1.
inline SymPolyInE t_in_e3_n3(unsigned k) {
  if (k == 0) throw invalid_input("t_in_e3_n3 needs k >= 1");
  std::vector<EPoly> t{EPoly(3), EPoly(0), EPoly(1)};
  const EPoly half(Rational(1, 2));
  for (unsigned j = 3; j <= k; ++j) t.push_back(half * t[j - 2] + EPoly::e3() * t[j - 3]);
  return {3, k, t[k]};
}

/// True when every t_in_e3_n3(k), k <= k_max, has only non-negative coefficients.
inline bool coefficient_positivity_check(unsigned k_max) {
  if (k_max < 3) throw invalid_input("coefficient_positivity_check needs k_max >= 3");
  for (unsigned k = 1; k <= k_max; ++k) {
    const auto t = t_in_e3_n3(k);
    for (const auto& [m, c] : t.poly.terms())
      if (c < 0) return false;
  }
  return true;
}

struct N4Identities {
  SymPolyInE t3;
  SymPolyInE t4;
  SymPolyInE t6;
};

/// The printed n = 4 forms: t3 = 3 e3, t4 = 1/2 - 4 e4, t6 = 1/4 + 3 e3^2 - 3 e4.
inline N4Identities n4_printed_forms() {
  const EPoly e3 = EPoly::e3(), e4 = EPoly::e4();
  return {{4, 3, EPoly(3) * e3},
          {4, 4, EPoly(Rational(1, 2)) - EPoly(4) * e4},
          {4, 6, EPoly(Rational(1, 4)) + EPoly(3) * e3 * e3 - EPoly(3) * e4}};
}

/// t3, t4, t6 for n = 4 from the Newton engine with e1 = 0, e2 = -1/2.
/// Throws identity_mismatch if they differ from n4_printed_forms().
inline N4Identities n4_identities() {
  const std::vector<EPoly> es{EPoly(0), EPoly(Rational(-1, 2)), EPoly::e3(), EPoly::e4()};
  const auto t = power_sums_from_elementary(es, 6);
  N4Identities got{{4, 3, t[2]}, {4, 4, t[3]}, {4, 6, t[5]}};
  const auto printed = n4_printed_forms();
  auto check = [](const SymPolyInE& a, const SymPolyInE& b) {
    if (!(a.poly == b.poly))
      throw identity_mismatch("t" + std::to_string(a.k) + ": engine gives " + a.poly.str() + ", printed " +
                              b.poly.str());
  };
  check(got.t3, printed.t3);
  check(got.t4, printed.t4);
  check(got.t6, printed.t6);
  return got;
}

/// For n = 4 on the feasible set: is e4 minimized wherever e3 is maximized?
///
/// Checked two ways: over the two-level stationary points (where the
/// Lagrange system for e4 forces every critical point to lie), and by
/// multistart ascent on -e4.
struct E4MinimizerReport {
  double max_e3 = 0.0;
  double min_e4_two_level = 0.0;
  double min_e4_numeric = 0.0;
  std::vector<std::vector<double>> e3_argmax;
  std::vector<std::vector<double>> e4_argmin;
  /// Every e3 maximizer is an e4 minimizer, and the numeric minimum agrees.
  bool consistent = false;
};

inline E4MinimizerReport e4_minimizer_check(const AscentOptions& opt = {}) {
  constexpr double tie = 1e-12;
  E4MinimizerReport r;
  std::vector<std::pair<std::vector<double>, std::pair<double, double>>> points;
  for (long long n1 = 1; n1 < 4; ++n1) {
    auto x = two_level_point(4, n1, 3).point;
    canonicalize_point(x, false);
    const auto e = elementary_from_roots(x);
    points.push_back({x, {e[2], e[3]}});
  }
  r.max_e3 = -1e300;
  r.min_e4_two_level = 1e300;
  for (const auto& [x, e] : points) {
    r.max_e3 = std::max(r.max_e3, e.first);
    r.min_e4_two_level = std::min(r.min_e4_two_level, e.second);
  }
  for (const auto& [x, e] : points) {
    if (e.first >= r.max_e3 - tie) r.e3_argmax.push_back(x);
    if (e.second <= r.min_e4_two_level + tie) r.e4_argmin.push_back(x);
  }

  ObjectiveFn neg_e4 = [](const std::vector<double>& x) { return -(x[0] * x[1] * x[2] * x[3]); };
  GradientFn grad = [](const std::vector<double>& x) {
    std::vector<double> g(4);
    for (std::size_t i = 0; i < 4; ++i) {
      double prod = 1.0;
      for (std::size_t j = 0; j < 4; ++j)
        if (j != i) prod *= x[j];
      g[i] = -prod;
    }
    return g;
  };
  const auto numeric = multistart_ascent(4, neg_e4, grad, opt);
  r.min_e4_numeric = -numeric.best.objective;

  bool contained = true;
  for (const auto& a : r.e3_argmax) {
    bool found = false;
    for (const auto& b : r.e4_argmin) {
      double d = 0.0;
      for (std::size_t i = 0; i < 4; ++i) d = std::max(d, std::abs(a[i] - b[i]));
      found = found || d <= 1e-12;
    }
    contained = contained && found;
  }
  r.consistent = contained && std::abs(r.min_e4_numeric - r.min_e4_two_level) <= 1e-8;
  return r;
}

}  // namespace cyclebound
