#pragma once

#include <cstdint>
#include <limits>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "bndrot/classes.hpp"

namespace bndrot {

/// Extremum of one ensemble member, kept for CSV export.
struct SampleExtremum {
  int index;
  std::uint64_t seed;
  /// Largest signed excess over the bound (<= 0 means inside).
  double violation;
  /// Check-specific attained quantity (ratio to bound, integral value, ...).
  double attained;
};

/// Outcome of one sampled inequality check.
///
/// pass == (max_violation <= params["tol"]).
struct VerificationReport {
  std::string check;
  double k = 2.0;
  nlohmann::json params = nlohmann::json::object();
  int n_samples = 0;
  std::uint64_t seed = 0;
  double max_violation = 0.0;
  double sharpness_gap = 0.0;
  nlohmann::json worst_case = nullptr;
  bool pass = false;
  std::vector<SampleExtremum> per_sample;
};

/// Knobs shared by every ensemble check. Zero / NaN fields pick the
/// per-check defaults documented on each function (grid defaults to 256).
struct CheckOptions {
  std::size_t order = 0;
  double tol = std::numeric_limits<double>::quiet_NaN();
  int max_atoms = 6;
  /// Angles per circle.
  int grid = 0;
  /// 0 means std::thread::hardware_concurrency().
  unsigned workers = 0;
};

/// Sample i of an ensemble uses seed + i.
constexpr std::uint64_t sample_seed(std::uint64_t seed, int index) {
  return seed + static_cast<std::uint64_t>(index);
}

/// |p(z) - c| <= R over sampled P_k functions on circles |z| = r <= 0.7.
/// Defaults: order 120, tol 1e-6. Sharpness against extremal_pk at z = -r.
VerificationReport verify_disk(double k, int ensemble, std::uint64_t seed,
                               const std::vector<double>& radii,
                               const CheckOptions& opt = {});

/// Growth and distortion envelopes for sampled R_k functions, r <= 0.5.
/// Defaults: order 60, tol 1e-6, grid 128. Sharpness: growth upper bound
/// minus |f*(-r)|.
VerificationReport verify_growth_distortion(double k, int ensemble, std::uint64_t seed,
                                            const std::vector<double>& radii,
                                            const CheckOptions& opt = {});

/// |p_n| <= k, |a_n| <= coeff_bound(k, n, Rk), |g_n| <= coeff_bound(k, n, Vk)
/// for n <= n_max. Default tol 1e-9. Per-n maxima and the f* coefficients are
/// tabulated in params["table"]; only n = 2 (and every n at k = 2) is expected
/// to reach equality.
VerificationReport verify_coefficients(double k, int n_max, int ensemble,
                                       std::uint64_t seed, const CheckOptions& opt = {});

enum class RotationKind { radius, boundary };

/// Trapezoid rule over M equispaced angles of |Re(z f'/f)| (radius) or
/// |Re((z f')'/f')| (boundary) on |z| = r. Where the real part changes sign
/// between nodes the root is bracketed and the negative arcs are integrated
/// separately, so kinks in |.| do not degrade the rule.
double rotation_integral(const ClassFunction& f, double r, int M, RotationKind kind);

/// Rotation integrals of sampled R_k (radius) and V_k (boundary) members
/// against k pi, plus the 2 pi mean-value identity for sampled Caratheodory
/// functions. Defaults: order 60, tol 1e-6, r 0.5, M 1024.
VerificationReport verify_rotation(double k, int ensemble, std::uint64_t seed,
                                   double r = 0.5, int M = 1024,
                                   const CheckOptions& opt = {});

/// Re(z f'/f) > 0 on |z| = R - 0.01 for sampled R_k functions, R the radius
/// of starlikeness; sharpness is |Re(z f*'/f*)| at z = R. k = 2 is a vacuous
/// pass. Defaults: order 120, tol 1e-6.
VerificationReport verify_radius_starlike(double k, int ensemble, std::uint64_t seed,
                                          const CheckOptions& opt = {});

/// Every check at every k, as one JSON document with an overall "pass".
nlohmann::json run_suite(const std::vector<double>& k_list, int ensemble,
                         std::uint64_t seed, const CheckOptions& opt = {});

// {"check","k","params","n_samples","seed","max_violation","sharpness_gap","worst_case","pass"}
void to_json(nlohmann::json& j, const VerificationReport& r);

/// One row per ensemble member: index,seed,violation,attained.
std::string report_csv(const VerificationReport& r);

}  // namespace bndrot
