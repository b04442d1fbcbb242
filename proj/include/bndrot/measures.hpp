#pragma once

#include <cstdint>
#include <vector>

#include <nlohmann/json.hpp>

#include "bndrot/series.hpp"

namespace bndrot {

struct Atom {
  double angle;   // radians, wrapped into [0, 2pi)
  double weight;  // nonzero

  friend bool operator==(const Atom&, const Atom&) = default;
};

/// Atomic signed measure on the circle with total mass 2.
///
/// Construction enforces: every weight finite and nonzero, angles pairwise
/// distinct (circular distance above 1e-12), and sum of weights equal to 2
/// within 1e-10. Violations throw InvalidMeasure.
class DiscreteMeasure {
 public:
  static constexpr double kMassTol = 1e-10;
  static constexpr double kAngleTol = 1e-12;

  explicit DiscreteMeasure(std::vector<Atom> atoms);

  const std::vector<Atom>& atoms() const noexcept { return atoms_; }

  friend bool operator==(const DiscreteMeasure&, const DiscreteMeasure&) = default;

 private:
  std::vector<Atom> atoms_;
};

/// Sum of |w_j|. A measure is k-admissible iff this is <= k.
double total_variation(const DiscreteMeasure& mu);

/// p(z) = (1/2) sum_j w_j (1 + z e^{-i t_j}) / (1 - z e^{-i t_j}), so that
/// p_0 = 1 and p_n = sum_j w_j e^{-i n t_j}.
TruncSeries herglotz_series(const DiscreteMeasure& mu, std::size_t order);

struct JordanParts {
  double lambda_pos;
  DiscreteMeasure mu_pos;
  double lambda_neg;
  DiscreteMeasure mu_neg;
};

/// Split into positive and negative parts, each rescaled to mass 2, so that
/// herglotz(mu) = lambda_pos * herglotz(mu_pos) - lambda_neg * herglotz(mu_neg).
/// A nonnegative measure gets lambda_neg = 0 and mu_neg = {(0, 2)}.
JordanParts jordan_decompose(const DiscreteMeasure& mu);

/// Random measure with total variation V drawn uniformly from [2, k].
/// Positive mass (V+2)/2 goes to 1..max_atoms atoms, negative mass (V-2)/2
/// to 1..max_atoms atoms (none when V = 2). Deterministic in seed.
DiscreteMeasure sample_measure(double k, int max_atoms, std::uint64_t seed);

// JSON: {"atoms": [[t, w], ...]}
void to_json(nlohmann::json& j, const DiscreteMeasure& mu);
DiscreteMeasure measure_from_json(const nlohmann::json& j);

}  // namespace bndrot
