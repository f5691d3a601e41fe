#pragma once

#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

#include "specgraph/spectrum.hpp"

namespace specgraph {

enum class CheckStatus { Pass, Fail, NotApplicable };

inline const char* to_string(CheckStatus s) {
  switch (s) {
    case CheckStatus::Pass: return "pass";
    case CheckStatus::Fail: return "fail";
    case CheckStatus::NotApplicable: return "not-applicable";
  }
  return "?";
}

/// Constants of the generic recursion solver. The derived exponent is
/// s = (q - 1)/(1 - r); valid parameters force s < 1.
struct RecursionParams {
  double p = 0.0;
  double q = 0.0;
  double r = 0.0;
  double c = 0.0;
  long long n = 0;

  double s() const { return (q - 1.0) / (1.0 - r); }

  bool valid() const {
    return p > 0.0 && p < 1.0 && r > 0.0 && r < 1.0 && q > 1.0 && q < 2.0 &&
           c >= 1.0 && q + std::max(p, r) < 2.0 && n >= 1;
  }
  void require_valid() const {
    if (!valid())
      throw std::invalid_argument("recursion params outside validity range");
  }
};

struct RecursionGridRow {
  double t = 0.0;
  double s_t = 0.0;
  double rhs = 0.0;
  double ratio = 0.0;
  CheckStatus status = CheckStatus::Pass;
  std::string note;
};

struct RecursionReport {
  std::vector<RecursionGridRow> rows;
  CheckStatus overall = CheckStatus::NotApplicable;
  double worst_ratio = 0.0;
  std::string context;
};

// Inequality tolerance: S_T values scale like n^2.
inline double recursion_tolerance(double lhs, int n) {
  return 1e-6 * std::abs(lhs) +
         1e-9 * static_cast<double>(n) * static_cast<double>(n);
}

// Default grid: 32 geometric points from the validity floor up to lambda_1.
// Empty when the floor lies above the whole spectrum.
inline std::vector<double> default_threshold_grid(const ThresholdProfile& prof,
                                                  double floor,
                                                  int points = 32) {
  std::vector<double> grid;
  const double top = prof.spectrum().lambda_1();
  if (floor > top) return grid;
  if (floor <= 0.0 || top <= 0.0) {
    grid.push_back(std::max(floor, 0.0));
    return grid;
  }
  if (points < 2 || floor == top) {
    grid.push_back(floor);
    return grid;
  }
  for (int i = 0; i < points; ++i)
    grid.push_back(floor * std::pow(top / floor,
                                    static_cast<double>(i) /
                                        static_cast<double>(points - 1)));
  return grid;
}

namespace detail {

inline RecursionReport run_recursion_check(
    const ThresholdProfile& prof, const std::vector<double>& grid,
    double floor, double factor, double shrink, const std::string& context) {
  RecursionReport rep;
  rep.context = context;
  const int n = prof.n();
  bool any_fail = false, any_checked = false;
  for (double t : grid) {
    RecursionGridRow row;
    row.t = t;
    row.s_t = prof.threshold_sum(t);
    // the validity region is closed at the floor; allow fp slop there
    if (t < floor - 1e-9 * (1.0 + floor)) {
      row.status = CheckStatus::NotApplicable;
      row.note = "below validity floor " + std::to_string(floor) +
                 "; inequality not claimed there";
      rep.rows.push_back(row);
      continue;
    }
    any_checked = true;
    const double inner = t * t / (shrink * static_cast<double>(n));
    row.rhs = factor * static_cast<double>(n) * prof.threshold_sum(inner);
    const double lhs = row.s_t * row.s_t;
    row.ratio = row.rhs > 0.0 ? lhs / row.rhs : (lhs > 0.0 ? HUGE_VAL : 0.0);
    rep.worst_ratio = std::max(rep.worst_ratio, row.ratio);
    bool ok = lhs <= row.rhs + recursion_tolerance(lhs, n);
    row.status = ok ? CheckStatus::Pass : CheckStatus::Fail;
    any_fail |= !ok;
    rep.rows.push_back(row);
  }
  rep.overall = any_fail ? CheckStatus::Fail
                         : (any_checked ? CheckStatus::Pass
                                        : CheckStatus::NotApplicable);
  return rep;
}

}  // namespace detail

/// Checks S_T^2 <= 2n S_{T^2/4n} on the grid; valid for
/// T >= 4 max(-lambda_n, 0) sqrt(n). Grid points below the floor are
/// rejected, not failed.
inline RecursionReport verify_key_recursion(const ThresholdProfile& prof,
                                            double lambda_n,
                                            const std::vector<double>& grid) {
  const double floor = 4.0 * std::max(-lambda_n, 0.0) *
                       std::sqrt(static_cast<double>(prof.n()));
  return detail::run_recursion_check(prof, grid, floor, 2.0, 4.0,
                                     "key-recursion");
}

inline double key_recursion_floor(const Spectrum& s) {
  return 4.0 * std::max(-s.lambda_n(), 0.0) *
         std::sqrt(static_cast<double>(s.n));
}

constexpr double kSurplusRecursionC = 1.0 / 99.0;

inline double surplus_recursion_floor(int n) {
  return std::pow(static_cast<double>(n), 1.0 - 2.0 * kSurplusRecursionC);
}

inline double surplus_recursion_gate(int n) {
  return 0.5 * std::pow(static_cast<double>(n), 1.0 + kSurplusRecursionC);
}

/// Checks S_T^2 <= 250 n S_{T^2/8n} for T >= n^{1-2c}, c = 1/99, claimed
/// only when sp*(G) <= n^{1+c}/2. `sp_star_upper` must certify that gate.
inline RecursionReport verify_surplus_recursion(
    const ThresholdProfile& prof, double sp_star_upper,
    const std::vector<double>& grid) {
  const int n = prof.n();
  if (sp_star_upper > surplus_recursion_gate(n)) {
    RecursionReport rep;
    rep.context = "surplus-recursion";
    rep.overall = CheckStatus::NotApplicable;
    RecursionGridRow row;
    row.status = CheckStatus::NotApplicable;
    row.note = "sp* upper bound " + std::to_string(sp_star_upper) +
               " exceeds n^(1+c)/2; inequality not claimed";
    rep.rows.push_back(row);
    return rep;
  }
  return detail::run_recursion_check(prof, grid, surplus_recursion_floor(n),
                                     250.0, 8.0, "surplus-recursion");
}

/// Closed-form tail bound (2 C^{1+s} / (1-s)) n^{1+s} H^{1-s} for a spectrum
/// obeying the three recursion-solver hypotheses.
inline double solve_recursion(const RecursionParams& params, double h) {
  params.require_valid();
  const double n = static_cast<double>(params.n);
  if (h < std::pow(n, params.p + params.q - 1.0) || h > n)
    throw std::invalid_argument("solve_recursion: H outside [n^(p+q-1), n]");
  const double s = params.s();
  return 2.0 * std::pow(params.c, 1.0 + s) / (1.0 - s) *
         std::pow(n, 1.0 + s) * std::pow(h, 1.0 - s);
}

struct SolverCheck {
  CheckStatus status = CheckStatus::NotApplicable;
  double tail_mass = 0.0;
  double bound = 0.0;
  double slack = 0.0;  // bound - tail
  std::string note;
};

/// Confirms the solver conclusion sum_{i not in L_H} lambda_i^2 <= bound on
/// an actual spectrum, gated on the three hypotheses: least-eigenvalue and
/// energy growth plus the recursion on a geometric grid from C n^r.
inline SolverCheck verify_solver_against_spectrum(const Spectrum& spec,
                                                  const RecursionParams& params,
                                                  double h) {
  params.require_valid();
  if (params.n != spec.n)
    throw std::invalid_argument("verify_solver: params.n mismatch");
  SolverCheck check;
  const double n = static_cast<double>(spec.n);
  if (-spec.lambda_n() > params.c * std::pow(n, params.p)) {
    check.note = "hypothesis 1 fails: -lambda_n > C n^p";
    return check;
  }
  if (energy(spec) > params.c * std::pow(n, params.q)) {
    check.note = "hypothesis 2 fails: energy > C n^q";
    return check;
  }
  ThresholdProfile prof(spec);
  // geometric grid T_1 = C n^r, T_{i+1} = sqrt(C n T_i), climbing to C n
  double t = params.c * std::pow(n, params.r);
  for (int i = 0; i < 200 && t <= spec.lambda_1(); ++i) {
    double lhs = prof.threshold_sum(t);
    lhs *= lhs;
    double rhs =
        params.c * n * prof.threshold_sum(t * t / (params.c * n));
    if (lhs > rhs + recursion_tolerance(lhs, spec.n)) {
      check.note = "hypothesis 3 fails at T=" + std::to_string(t);
      return check;
    }
    double next = std::sqrt(params.c * n * t);
    if (next <= t) break;
    t = next;
  }
  check.tail_mass = prof.spectrum().lambdas.squaredNorm() -
                    [&] {
                      double top = 0.0;
                      for (int i = 0; i < spec.n && spec.lambdas[i] >= h; ++i)
                        top += spec.lambdas[i] * spec.lambdas[i];
                      return top;
                    }();
  check.bound = solve_recursion(params, h);
  check.slack = check.bound - check.tail_mass;
  check.status =
      check.tail_mass <= check.bound + recursion_tolerance(check.bound, spec.n)
          ? CheckStatus::Pass
          : CheckStatus::Fail;
  return check;
}

struct TopConcentrationCheck {
  CheckStatus status = CheckStatus::NotApplicable;
  double gate_floor = 0.0;   // -n^{1/4-eps}
  double threshold = 0.0;    // (eps delta)^{1/eps} n
  double mass = 0.0;
  double bound = 0.0;        // delta n^2
  std::string note;
};

/// Top-concentration: when lambda_n >= -n^{1/4-eps}, the square mass of
/// eigenvalues below (eps delta)^{1/eps} n should be at most delta n^2.
/// The claim is asymptotic; at small n the outcome can honestly be Fail.
inline TopConcentrationCheck check_top_concentration(const Spectrum& s,
                                                     double eps,
                                                     double delta) {
  if (!(eps > 0.0 && eps < 0.01 && delta > 0.0 && delta < 0.01))
    throw std::invalid_argument(
        "check_top_concentration: eps, delta outside (0, 0.01)");
  TopConcentrationCheck check;
  const double n = static_cast<double>(s.n);
  check.gate_floor = -std::pow(n, 0.25 - eps);
  if (s.lambda_n() < check.gate_floor) {
    check.note = "gate closed: lambda_n below -n^(1/4-eps)";
    return check;
  }
  check.threshold = std::pow(eps * delta, 1.0 / eps) * n;
  for (int i = 0; i < s.n; ++i)
    if (s.lambdas[i] <= check.threshold)
      check.mass += s.lambdas[i] * s.lambdas[i];
  check.bound = delta * n * n;
  check.status = check.mass <= check.bound + recursion_tolerance(check.bound,
                                                                 s.n)
                     ? CheckStatus::Pass
                     : CheckStatus::Fail;
  return check;
}

}  // namespace specgraph
