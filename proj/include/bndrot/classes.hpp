#pragma once

#include <string_view>
#include <variant>

#include <nlohmann/json.hpp>

#include "bndrot/caratheodory.hpp"
#include "bndrot/measures.hpp"
#include "bndrot/series.hpp"

namespace bndrot {

enum class Kind { Pk, Rk, Vk };

std::string_view to_string(Kind kind);
Kind kind_from_string(std::string_view s);

namespace provenance {
struct FromMeasure {
  DiscreteMeasure mu;
};
struct FromPair {
  TruncSeries p1;
  TruncSeries p2;
};
struct FromSchwarz {
  SchwarzFn phi;
};
struct Extremal {};
struct Explicit {};
}  // namespace provenance

using Provenance =
    std::variant<provenance::FromMeasure, provenance::FromPair,
                 provenance::FromSchwarz, provenance::Extremal, provenance::Explicit>;

/// A member of P_k, R_k or V_k. The class parameter k is carried as a claim;
/// the provenance is what certifies it.
///
/// Pk series have constant term 1; Rk and Vk series are normalized as
/// z + a_2 z^2 + ... (checked within 1e-10). k must be >= 2.
class ClassFunction {
 public:
  static constexpr double kNormTol = 1e-10;

  ClassFunction(TruncSeries series, double k, Kind kind,
                Provenance provenance = provenance::Explicit{});

  const TruncSeries& series() const noexcept { return series_; }
  double k() const noexcept { return k_; }
  Kind kind() const noexcept { return kind_; }
  const Provenance& provenance() const noexcept { return provenance_; }

 private:
  TruncSeries series_;
  double k_;
  Kind kind_;
  Provenance provenance_;
};

/// (k/4 + 1/2) p1 - (k/4 - 1/2) p2.
ClassFunction pk_from_pair(const TruncSeries& p1, const TruncSeries& p2, double k);

/// The R_k function f with z f'/f = p, from the coefficient recursion
/// (n-1) a_n = sum_{v=1}^{n-1} p_{n-v} a_v. Result order is
/// min(order, p.order() + 1).
ClassFunction rk_from_pk(const ClassFunction& p, std::size_t order);

/// z f'(z) / f(z) as a series of order f.order() - 1.
TruncSeries pk_from_rk(const ClassFunction& f);

/// The V_k function f with (z f')'/f' = p, via the Alexander inverse of
/// rk_from_pk(p).
ClassFunction vk_from_pk(const ClassFunction& p, std::size_t order);

enum class AlexanderDirection { forward, inverse };

/// forward: z f' (Vk -> Rk); inverse: f_n / n (Rk -> Vk).
ClassFunction alexander(const ClassFunction& f, AlexanderDirection direction,
                        std::size_t order);

/// R_k: z exp(-sum_j w_j log(1 - z e^{-i t_j})).
/// V_k: the same exponential is f', integrated with f(0) = 0.
/// k is set to total_variation(mu).
ClassFunction from_measure(const DiscreteMeasure& mu, Kind kind, std::size_t order);

/// f*(z) = z (1 - z)^{k/2 - 1} / (1 + z)^{k/2 + 1}.
ClassFunction extremal_fn(double k, std::size_t order);

/// (1 - k z + z^2) / (1 - z^2) = z f*'/f*.
ClassFunction extremal_pk(double k, std::size_t order);

/// Atoms {(pi, k/2 + 1), (0, 1 - k/2)} whose Herglotz transform is
/// extremal_pk(k); the zero-weight atom is dropped at k = 2.
DiscreteMeasure extremal_measure(double k);

// JSON: {"kind", "k", "coeffs", "provenance"}
void to_json(nlohmann::json& j, const ClassFunction& f);

}  // namespace bndrot
