#include "bndrot/bounds.hpp"

#include <cmath>

#include "bndrot/errors.hpp"

namespace bndrot {

namespace {

void require_kr(double k, double r, const char* who) {
  if (!(k >= 2.0) || !std::isfinite(k)) {
    throw InvalidParameter(std::string(who) + ": k must be finite and >= 2");
  }
  if (!(r >= 0.0 && r < 1.0)) {
    throw InvalidParameter(std::string(who) + ": r must satisfy 0 <= r < 1");
  }
}

}  // namespace

BoundSet growth_bounds(double k, double r) {
  require_kr(k, r, "growth_bounds");
  const double lower = r / (std::pow(1.0 - r, (2.0 - k) / 2.0) * std::pow(1.0 + r, (2.0 + k) / 2.0));
  const double upper = r / (std::pow(1.0 - r, (2.0 + k) / 2.0) * std::pow(1.0 + r, (2.0 - k) / 2.0));
  return {lower, upper, k, r, "growth"};
}

BoundSet distortion_bounds(double k, double r) {
  require_kr(k, r, "distortion_bounds");
  const double num_lo = 1.0 - k * r + r * r;
  const double num_hi = 1.0 + k * r + r * r;
  const double lower = num_lo / (std::pow(1.0 - r, 2.0 - k / 2.0) * std::pow(1.0 + r, 2.0 + k / 2.0));
  const double upper = num_hi / (std::pow(1.0 - r, 2.0 + k / 2.0) * std::pow(1.0 + r, 2.0 - k / 2.0));
  BoundSet b{lower, upper, k, r, "distortion"};
  if (num_lo < 0.0) {
    b.lower = 0.0;
    b.lower_clamped = true;
  }
  return b;
}

BoundSet re_bounds(double k, double r) {
  require_kr(k, r, "re_bounds");
  const double d = 1.0 - r * r;
  return {(1.0 - k * r + r * r) / d, (1.0 + k * r + r * r) / d, k, r, "re_zf'/f"};
}

Disk pk_disk(double k, double r) {
  require_kr(k, r, "pk_disk");
  const double d = 1.0 - r * r;
  return {(1.0 + r * r) / d, k * r / d};
}

Disk robertson_disk(double k, double r) {
  require_kr(k, r, "robertson_disk");
  const double d = 1.0 - r * r;
  return {2.0 * r * r / d, k * r / d};
}

double coeff_bound(double k, int n, Kind kind) {
  if (!(k >= 2.0) || !std::isfinite(k)) {
    throw InvalidParameter("coeff_bound: k must be finite and >= 2");
  }
  if (kind == Kind::Pk) {
    if (n < 1) throw InvalidParameter("coeff_bound: n must be >= 1 for Pk");
    return k;
  }
  if (n < 2) throw InvalidParameter("coeff_bound: n must be >= 2 for Rk/Vk");
  // b_{v+1} = b_v (k+v) / (v+1); multiplying before dividing keeps integer
  // cases exact.
  double b = 1.0;
  for (int v = 0; v <= n - 2; ++v) b = b * (k + v) / (v + 1);
  return kind == Kind::Rk ? b : b / n;
}

double radius_starlike(double k) {
  if (!(k >= 2.0) || !std::isfinite(k)) {
    throw InvalidParameter("radius_starlike: k must be finite and >= 2");
  }
  return (k - std::sqrt(k * k - 4.0)) / 2.0;
}

void to_json(nlohmann::json& j, const BoundSet& b) {
  j = nlohmann::json{{"name", b.name},       {"k", b.k},
                     {"r", b.r},             {"lower", b.lower},
                     {"upper", b.upper},     {"lower_clamped", b.lower_clamped}};
}

}  // namespace bndrot
