#include <doctest.h>

#include <cmath>

#include "bndrot/bounds.hpp"
#include "bndrot/errors.hpp"
#include "oracles.hpp"

using namespace bndrot;

TEST_CASE("growth bounds") {
  const auto g = growth_bounds(2.0, 0.5);
  CHECK(g.lower == doctest::Approx(0.5 / 2.25).epsilon(1e-15));
  CHECK(g.upper == doctest::Approx(2.0).epsilon(1e-15));
  CHECK(g.name == "growth");

  for (double k : {2.0, 3.0, 7.5}) {
    const auto z = growth_bounds(k, 0.0);
    CHECK(z.lower == 0.0);
    CHECK(z.upper == 0.0);
  }

  const auto g4 = growth_bounds(4.0, 0.5);
  CHECK(g4.lower == doctest::Approx(0.25 / 3.375).epsilon(1e-14));
  // 0.5 * 1.5 / 0.5^3
  CHECK(g4.upper == doctest::Approx(6.0).epsilon(1e-14));
}

TEST_CASE("distortion bounds") {
  const auto d = distortion_bounds(2.0, 0.5);
  CHECK(d.lower == doctest::Approx(0.5 / 3.375).epsilon(1e-14));
  CHECK(d.upper == doctest::Approx(12.0).epsilon(1e-14));
  CHECK_FALSE(d.lower_clamped);

  const auto z = distortion_bounds(5.0, 0.0);
  CHECK(z.lower == 1.0);
  CHECK(z.upper == 1.0);

  const auto c = distortion_bounds(4.0, 0.5);
  CHECK(c.lower == 0.0);
  CHECK(c.lower_clamped);
}

TEST_CASE("re bounds") {
  const auto b = re_bounds(4.0, 0.2);
  CHECK(b.lower == doctest::Approx(0.25).epsilon(1e-14));
  CHECK(b.upper == doctest::Approx(1.84 / 0.96).epsilon(1e-14));
  CHECK(re_bounds(3.0, 0.0).lower == 1.0);
  CHECK(re_bounds(3.0, 0.0).upper == 1.0);
  const auto b2 = re_bounds(2.0, 0.5);
  CHECK(b2.lower == doctest::Approx(1.0 / 3.0).epsilon(1e-14));
  CHECK(b2.upper == doctest::Approx(3.0).epsilon(1e-14));
  CHECK(re_bounds(6.0, 0.5).lower < 0.0);
}

TEST_CASE("disks") {
  const auto d = pk_disk(2.0, 0.5);
  CHECK(d.center == doctest::Approx(5.0 / 3.0).epsilon(1e-15));
  CHECK(d.radius == doctest::Approx(4.0 / 3.0).epsilon(1e-15));
  CHECK(pk_disk(3.0, 0.0).center == 1.0);
  CHECK(pk_disk(3.0, 0.0).radius == 0.0);
  const auto d4 = pk_disk(4.0, 0.5);
  CHECK(d4.center == doctest::Approx(5.0 / 3.0).epsilon(1e-15));
  CHECK(d4.radius == doctest::Approx(8.0 / 3.0).epsilon(1e-15));

  CHECK(robertson_disk(3.0, 0.0).center == 0.0);
  CHECK(robertson_disk(3.0, 0.0).radius == 0.0);
  const auto r = robertson_disk(2.0, 0.5);
  CHECK(r.center == doctest::Approx(2.0 / 3.0).epsilon(1e-15));
  CHECK(r.radius == doctest::Approx(4.0 / 3.0).epsilon(1e-15));
}

TEST_CASE("coefficient bounds") {
  CHECK(coeff_bound(2.0, 5, Kind::Rk) == 5.0);
  for (int n = 2; n <= 25; ++n) {
    CHECK(coeff_bound(2.0, n, Kind::Rk) == double(n));
    CHECK(coeff_bound(2.0, n, Kind::Vk) == 1.0);
  }
  CHECK(coeff_bound(4.0, 3, Kind::Rk) == 10.0);
  CHECK(coeff_bound(4.0, 3, Kind::Vk) == doctest::Approx(10.0 / 3.0).epsilon(1e-15));
  CHECK(coeff_bound(3.7, 9, Kind::Pk) == 3.7);
  CHECK_THROWS_AS(coeff_bound(3.0, 1, Kind::Rk), InvalidParameter);
  CHECK_THROWS_AS(coeff_bound(1.0, 3, Kind::Rk), InvalidParameter);
}

TEST_CASE("radius of starlikeness") {
  CHECK(radius_starlike(2.0) == 1.0);
  CHECK(radius_starlike(4.0) == doctest::Approx(2.0 - std::sqrt(3.0)).epsilon(1e-15));
  CHECK(radius_starlike(3.0) == doctest::Approx((3.0 - std::sqrt(5.0)) / 2.0).epsilon(1e-15));
  CHECK_THROWS_AS(radius_starlike(1.0), InvalidParameter);
}

TEST_CASE("parameter validation") {
  CHECK_THROWS_AS(growth_bounds(1.5, 0.5), InvalidParameter);
  CHECK_THROWS_AS(growth_bounds(3.0, 1.0), InvalidParameter);
  CHECK_THROWS_AS(distortion_bounds(3.0, -0.1), InvalidParameter);
  CHECK_THROWS_AS(pk_disk(3.0, NAN), InvalidParameter);
}

TEST_CASE("bound set JSON") {
  const nlohmann::json j = distortion_bounds(4.0, 0.5);
  CHECK(j["name"] == "distortion");
  CHECK(j["lower_clamped"] == true);
  CHECK(j["k"] == 4.0);
}

// ---- properties -----------------------------------------------------------

TEST_CASE("property: k = 2 reduces to the classical starlike bounds") {
  for (int i = 0; i < 20; ++i) {
    const double r = 0.045 * i + 0.01;
    const auto g = growth_bounds(2.0, r);
    CHECK(std::abs(g.lower - r / ((1 + r) * (1 + r))) <= 1e-14);
    CHECK(std::abs(g.upper - r / ((1 - r) * (1 - r))) <= 1e-14);
    const auto d = distortion_bounds(2.0, r);
    CHECK(std::abs(d.lower - (1 - r) / std::pow(1 + r, 3)) <= 1e-14);
    CHECK(std::abs(d.upper - (1 + r) / std::pow(1 - r, 3)) <= 1e-14 * d.upper);
  }
}

TEST_CASE("property: radius of starlikeness is a root") {
  for (double k = 2.0; k <= 20.0; k += 0.25) {
    const double R = radius_starlike(k);
    CHECK(std::abs(1.0 - k * R + R * R) <= 1e-12);
    if (k > 2.0) CHECK(std::abs(re_bounds(k, R).lower) <= 1e-12);
  }
}

TEST_CASE("property: Rk bound is n times the Vk bound") {
  // Exact whenever the quotient is representable; otherwise one rounding
  // of the division separates them.
  for (double k : {2.0, 3.0, 4.0})
    for (int n = 2; n <= 12; ++n)
      CHECK(coeff_bound(k, n, Kind::Rk) == coeff_bound(k, n, Kind::Vk) * n);
  for (double k : {2.0, 2.5, 3.0, 4.0, 6.0, 9.5})
    for (int n = 2; n <= 25; ++n) {
      const double rk = coeff_bound(k, n, Kind::Rk);
      CHECK(std::abs(rk - coeff_bound(k, n, Kind::Vk) * n) <= rk * 0x1p-52);
    }
}

TEST_CASE("property: Rk bound agrees with the factorial form") {
  for (double k : {2.0, 3.0, 4.0, 5.5})
    for (int n = 2; n <= 20; ++n)
      CHECK(coeff_bound(k, n, Kind::Rk) ==
            doctest::Approx(oracle::rk_product_bound(k, n)).epsilon(1e-13));
}

TEST_CASE("property: upper bounds are nondecreasing in k") {
  for (double r = 0.0; r < 0.95; r += 0.05) {
    for (double k = 2.0; k < 10.0; k += 0.5) {
      CHECK(growth_bounds(k, r).upper <= growth_bounds(k + 0.5, r).upper);
      CHECK(distortion_bounds(k, r).upper <= distortion_bounds(k + 0.5, r).upper);
      CHECK(re_bounds(k, r).upper <= re_bounds(k + 0.5, r).upper);
      CHECK(pk_disk(k, r).radius <= pk_disk(k + 0.5, r).radius);
      CHECK(robertson_disk(k, r).radius <= robertson_disk(k + 0.5, r).radius);
    }
  }
}
