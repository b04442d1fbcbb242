#include "bndrot/measures.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "bndrot/errors.hpp"
#include "bndrot/random.hpp"

namespace bndrot {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

double wrap_angle(double t) {
  double w = std::fmod(t, kTwoPi);
  if (w < 0.0) w += kTwoPi;
  if (w >= kTwoPi) w = 0.0;
  return w;
}

double circular_distance(double a, double b) {
  const double d = std::abs(a - b);
  return std::min(d, kTwoPi - d);
}

std::vector<Atom> scaled(const std::vector<Atom>& atoms, double factor) {
  std::vector<Atom> out;
  out.reserve(atoms.size());
  for (const auto& a : atoms) out.push_back({a.angle, a.weight * factor});
  return out;
}

}  // namespace

DiscreteMeasure::DiscreteMeasure(std::vector<Atom> atoms) : atoms_(std::move(atoms)) {
  if (atoms_.empty()) throw InvalidMeasure("measure has no atoms");
  double mass = 0.0;
  for (auto& a : atoms_) {
    if (!std::isfinite(a.angle) || !std::isfinite(a.weight)) {
      throw InvalidMeasure("atom angle and weight must be finite");
    }
    if (a.weight == 0.0) throw InvalidMeasure("atom weight must be nonzero");
    a.angle = wrap_angle(a.angle);
    mass += a.weight;
  }
  if (std::abs(mass - 2.0) > kMassTol) {
    throw InvalidMeasure("total mass " + std::to_string(mass) + " differs from 2");
  }
  for (std::size_t i = 0; i < atoms_.size(); ++i) {
    for (std::size_t j = i + 1; j < atoms_.size(); ++j) {
      if (circular_distance(atoms_[i].angle, atoms_[j].angle) <= kAngleTol) {
        throw InvalidMeasure("atoms " + std::to_string(i) + " and " +
                             std::to_string(j) + " share an angle");
      }
    }
  }
}

double total_variation(const DiscreteMeasure& mu) {
  double v = 0.0;
  for (const auto& a : mu.atoms()) v += std::abs(a.weight);
  return v;
}

TruncSeries herglotz_series(const DiscreteMeasure& mu, std::size_t order) {
  std::vector<cplx> p(order + 1, cplx{});
  p[0] = 1.0;
  for (const auto& a : mu.atoms()) {
    for (std::size_t n = 1; n <= order; ++n) {
      p[n] += a.weight * std::polar(1.0, -static_cast<double>(n) * a.angle);
    }
  }
  return TruncSeries(std::move(p));
}

JordanParts jordan_decompose(const DiscreteMeasure& mu) {
  std::vector<Atom> pos;
  std::vector<Atom> neg;
  double mass_pos = 0.0;
  double mass_neg = 0.0;
  for (const auto& a : mu.atoms()) {
    if (a.weight > 0.0) {
      pos.push_back(a);
      mass_pos += a.weight;
    } else {
      neg.push_back({a.angle, -a.weight});
      mass_neg -= a.weight;
    }
  }
  if (pos.empty()) throw InvalidMeasure("measure has no positive atom");
  DiscreteMeasure mu_pos(scaled(pos, 2.0 / mass_pos));
  if (neg.empty()) {
    return {mass_pos / 2.0, std::move(mu_pos), 0.0, DiscreteMeasure({{0.0, 2.0}})};
  }
  DiscreteMeasure mu_neg(scaled(neg, 2.0 / mass_neg));
  return {mass_pos / 2.0, std::move(mu_pos), mass_neg / 2.0, std::move(mu_neg)};
}

namespace {

// Split `mass` into `count` positive parts with flat Dirichlet proportions.
std::vector<double> split_mass(Rng& rng, double mass, int count) {
  std::vector<double> parts(static_cast<std::size_t>(count));
  double total = 0.0;
  for (auto& p : parts) {
    p = -std::log(rng.uniform());
    total += p;
  }
  for (auto& p : parts) p *= mass / total;
  return parts;
}

double fresh_angle(Rng& rng, const std::vector<Atom>& taken) {
  for (;;) {
    const double t = rng.uniform(0.0, kTwoPi);
    const bool clash = std::any_of(taken.begin(), taken.end(), [t](const Atom& a) {
      return circular_distance(a.angle, t) <= 1e3 * DiscreteMeasure::kAngleTol;
    });
    if (!clash) return t;
  }
}

}  // namespace

DiscreteMeasure sample_measure(double k, int max_atoms, std::uint64_t seed) {
  if (!(k >= 2.0) || !std::isfinite(k)) {
    throw InvalidParameter("sample_measure: k must be finite and >= 2");
  }
  if (max_atoms < 1) throw InvalidParameter("sample_measure: max_atoms must be >= 1");

  Rng rng(seed);
  const double v = k == 2.0 ? 2.0 : rng.uniform(2.0, k);
  const double mass_pos = (v + 2.0) / 2.0;
  const double mass_neg = (v - 2.0) / 2.0;

  std::vector<Atom> atoms;
  const int n_pos = rng.uniform_int(1, max_atoms);
  for (double w : split_mass(rng, mass_pos, n_pos)) {
    atoms.push_back({fresh_angle(rng, atoms), w});
  }
  if (mass_neg > 0.0) {
    const int n_neg = rng.uniform_int(1, max_atoms);
    for (double w : split_mass(rng, mass_neg, n_neg)) {
      atoms.push_back({fresh_angle(rng, atoms), -w});
    }
  }
  return DiscreteMeasure(std::move(atoms));
}

void to_json(nlohmann::json& j, const DiscreteMeasure& mu) {
  auto atoms = nlohmann::json::array();
  for (const auto& a : mu.atoms()) atoms.push_back({a.angle, a.weight});
  j = nlohmann::json{{"atoms", std::move(atoms)}};
}

DiscreteMeasure measure_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("atoms") || !j.at("atoms").is_array()) {
    throw InvalidMeasure("measure JSON must be an object with an \"atoms\" array");
  }
  std::vector<Atom> atoms;
  for (const auto& e : j.at("atoms")) {
    if (!e.is_array() || e.size() != 2 || !e[0].is_number() || !e[1].is_number()) {
      throw InvalidMeasure("measure atoms must be [t, w] number pairs");
    }
    atoms.push_back({e[0].get<double>(), e[1].get<double>()});
  }
  return DiscreteMeasure(std::move(atoms));
}

}  // namespace bndrot
