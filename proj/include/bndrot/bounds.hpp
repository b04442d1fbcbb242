#pragma once

#include <string>

#include <nlohmann/json.hpp>

#include "bndrot/classes.hpp"

namespace bndrot {

/// Two-sided bound at one (k, r) point.
struct BoundSet {
  double lower;
  double upper;
  double k;
  double r;
  std::string name;
  /// Set when a negative lower bound was replaced by 0.
  bool lower_clamped = false;
};

struct Disk {
  double center;
  double radius;
};

/// |f(z)| on |z| = r for f in R_k:
///   r / ((1-r)^{(2-k)/2} (1+r)^{(2+k)/2}) <= |f| <= r / ((1-r)^{(2+k)/2} (1+r)^{(2-k)/2})
BoundSet growth_bounds(double k, double r);

/// |f'(z)| on |z| = r for f in R_k. The lower bound is clamped at 0 (and
/// flagged) when 1 - k r + r^2 < 0.
BoundSet distortion_bounds(double k, double r);

/// Re(z f'/f) on |z| = r:  (1 - k r + r^2)/(1 - r^2) .. (1 + k r + r^2)/(1 - r^2).
/// The lower bound is not clamped.
BoundSet re_bounds(double k, double r);

/// Disk containing p(z), |z| = r, for p in P_k.
Disk pk_disk(double k, double r);

/// Disk containing z f''/f', |z| = r, for f in V_k. Its center is one less
/// than the pk_disk center.
Disk robertson_disk(double k, double r);

/// Pk: k.  Rk: prod_{v=0}^{n-2} (k+v) / (n-1)!.  Vk: the Rk value divided by n.
double coeff_bound(double k, int n, Kind kind);

/// (k - sqrt(k^2 - 4)) / 2, the smaller root of 1 - k r + r^2.
double radius_starlike(double k);

void to_json(nlohmann::json& j, const BoundSet& b);

}  // namespace bndrot
