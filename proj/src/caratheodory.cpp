#include "bndrot/caratheodory.hpp"

#include <cmath>
#include <numbers>

#include "bndrot/errors.hpp"
#include "bndrot/random.hpp"

namespace bndrot {

SchwarzFn::SchwarzFn(cplx leading, std::vector<cplx> zeros)
    : leading_(leading), zeros_(std::move(zeros)) {
  if (!std::isfinite(leading_.real()) || !std::isfinite(leading_.imag()) ||
      std::abs(leading_) > 1.0) {
    throw InvalidParameter("Schwarz function leading factor must satisfy |c| <= 1");
  }
  for (const auto& a : zeros_) {
    if (!(std::abs(a) < 1.0)) {
      throw InvalidParameter("Schwarz function zeros must lie in the open unit disk");
    }
  }
}

cplx SchwarzFn::operator()(cplx z) const {
  cplx w = leading_ * z;
  for (const auto& a : zeros_) w *= (a - z) / (1.0 - std::conj(a) * z);
  return w;
}

TruncSeries schwarz_series(const SchwarzFn& phi, std::size_t order) {
  TruncSeries acc = phi.leading() * TruncSeries::identity(order);
  for (const auto& a : phi.zeros()) {
    // (a - z) * sum_n (conj(a) z)^n
    std::vector<cplx> geo(order + 1);
    cplx pw = 1.0;
    for (std::size_t n = 0; n <= order; ++n) {
      geo[n] = pw;
      pw *= std::conj(a);
    }
    std::vector<cplx> lin(order + 1, cplx{});
    lin[0] = a;
    if (order >= 1) lin[1] = -1.0;
    acc = acc * (TruncSeries(std::move(lin)) * TruncSeries(std::move(geo)));
  }
  return acc;
}

TruncSeries caratheodory_from_schwarz(const SchwarzFn& phi, std::size_t order) {
  const TruncSeries w = schwarz_series(phi, order);
  const TruncSeries one = TruncSeries::constant(1.0, order);
  return div(one + w, one - w);
}

bool is_caratheodory(const TruncSeries& p, double r_max, int grid, double tol) {
  if (std::abs(p[0] - 1.0) > 1e-10) return false;
  constexpr int kCircles = 16;
  for (int i = 1; i <= kCircles; ++i) {
    const double r = r_max * i / kCircles;
    for (int j = 0; j < grid; ++j) {
      const double theta = 2.0 * std::numbers::pi * j / grid;
      if (!(evaluate(p, std::polar(r, theta)).real() > -tol)) return false;
    }
  }
  return true;
}

SchwarzFn sample_schwarz(int max_zeros, std::uint64_t seed) {
  Rng rng(seed);
  const cplx c = std::polar(rng.uniform(), rng.uniform(0.0, 2.0 * std::numbers::pi));
  const int n = rng.uniform_int(0, max_zeros);
  std::vector<cplx> zeros;
  for (int i = 0; i < n; ++i) {
    const double rho = 0.95 * std::sqrt(rng.uniform());
    zeros.push_back(std::polar(rho, rng.uniform(0.0, 2.0 * std::numbers::pi)));
  }
  return SchwarzFn(c, std::move(zeros));
}

void to_json(nlohmann::json& j, const SchwarzFn& phi) {
  auto zeros = nlohmann::json::array();
  for (const auto& a : phi.zeros()) zeros.push_back({a.real(), a.imag()});
  j = nlohmann::json{{"c", {phi.leading().real(), phi.leading().imag()}},
                     {"zeros", std::move(zeros)}};
}

SchwarzFn schwarz_from_json(const nlohmann::json& j) {
  auto pair = [](const nlohmann::json& e) {
    if (!e.is_array() || e.size() != 2) {
      throw InvalidParameter("Schwarz JSON expects [re, im] pairs");
    }
    return cplx(e[0].get<double>(), e[1].get<double>());
  };
  if (!j.is_object() || !j.contains("c")) {
    throw InvalidParameter("Schwarz JSON must be an object with a \"c\" entry");
  }
  std::vector<cplx> zeros;
  if (j.contains("zeros")) {
    for (const auto& e : j.at("zeros")) zeros.push_back(pair(e));
  }
  return SchwarzFn(pair(j.at("c")), std::move(zeros));
}

}  // namespace bndrot
