#pragma once

#include <cstdint>
#include <vector>

#include <nlohmann/json.hpp>

#include "bndrot/series.hpp"

namespace bndrot {

/// phi(z) = c * z * prod_i (alpha_i - z) / (1 - conj(alpha_i) z)
///
/// A finite Blaschke-type product scaled by |c| <= 1, so phi(0) = 0 and
/// |phi| < 1 on the open disk hold structurally. Throws InvalidParameter if
/// |c| > 1 or some |alpha_i| >= 1.
class SchwarzFn {
 public:
  explicit SchwarzFn(cplx leading = 1.0, std::vector<cplx> zeros = {});

  cplx leading() const noexcept { return leading_; }
  const std::vector<cplx>& zeros() const noexcept { return zeros_; }

  cplx operator()(cplx z) const;

  friend bool operator==(const SchwarzFn&, const SchwarzFn&) = default;

 private:
  cplx leading_;
  std::vector<cplx> zeros_;
};

TruncSeries schwarz_series(const SchwarzFn& phi, std::size_t order);

/// p = (1 + phi) / (1 - phi).
TruncSeries caratheodory_from_schwarz(const SchwarzFn& phi, std::size_t order);

inline constexpr double kPositivityTol = 1e-9;

/// Re p > -tol on 16 circles of radius up to r_max, `grid` angles each.
/// Returns false when p_0 is not 1 within 1e-10.
bool is_caratheodory(const TruncSeries& p, double r_max, int grid,
                     double tol = kPositivityTol);

/// Random Schwarz function with 0..max_zeros zeros inside |z| < 0.95 and a
/// leading factor of modulus in (0, 1]. Deterministic in seed.
SchwarzFn sample_schwarz(int max_zeros, std::uint64_t seed);

// JSON: {"c": [re, im], "zeros": [[re, im], ...]}
void to_json(nlohmann::json& j, const SchwarzFn& phi);
SchwarzFn schwarz_from_json(const nlohmann::json& j);

}  // namespace bndrot
