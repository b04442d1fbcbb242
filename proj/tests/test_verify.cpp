#include <doctest.h>

#include <cmath>
#include <numbers>

#include "bndrot/bounds.hpp"
#include "bndrot/errors.hpp"
#include "bndrot/verify.hpp"
#include "oracles.hpp"

using namespace bndrot;
using std::numbers::pi;

namespace {

const std::vector<double> kRadii{0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7};

ClassFunction koebe(std::size_t order) {
  return from_measure(DiscreteMeasure({{0.0, 2.0}}), Kind::Rk, order);
}

}  // namespace

TEST_CASE("disk check") {
  const auto rep = verify_disk(2.0, 200, 1, kRadii);
  CHECK(rep.pass);
  CHECK(rep.max_violation <= 0.0);
  CHECK(rep.n_samples == 200);
  CHECK(rep.per_sample.size() == 200);
  CHECK(rep.params["order"] == 120);
  CHECK(rep.params["tol"] == 1e-6);
  CHECK(rep.sharpness_gap <= 1e-8);

  // Extremal p touches the boundary at z = -r.
  const auto p4 = extremal_pk(4.0, 200);
  const Disk d = pk_disk(4.0, 0.5);
  CHECK(std::abs(std::abs(evaluate(p4.series(), -0.5) - 5.0 / 3.0) - 8.0 / 3.0) <= 1e-9);
  CHECK(std::abs(std::abs(evaluate(p4.series(), -0.5) - d.center) - d.radius) <= 1e-9);

  const auto kern = herglotz_series(DiscreteMeasure({{0.0, 2.0}}), 200);
  const Disk d2 = pk_disk(2.0, 0.5);
  CHECK(std::abs(evaluate(kern, 0.5) - 3.0) <= 1e-12);
  CHECK(std::abs(d2.center + d2.radius - 3.0) <= 1e-15);
}

TEST_CASE("growth and distortion check") {
  for (double k : {2.0, 3.0, 4.0}) {
    const auto rep = verify_growth_distortion(k, 60, 3, {0.1, 0.3, 0.5});
    CHECK(rep.pass);
    CHECK(rep.sharpness_gap <= 1e-8);
  }

  // f*, k = 3, r = 0.4 attains the growth upper bound.
  const double expected = 0.4 * std::sqrt(1.4) / std::pow(0.6, 2.5);
  const auto fs = extremal_fn(3.0, 200);
  CHECK(std::abs(std::abs(evaluate(fs.series(), -0.4)) - expected) <= 1e-9);
  CHECK(std::abs(growth_bounds(3.0, 0.4).upper - expected) <= 1e-9);

  // Koebe at r = 0.3 attains the k = 2 bound.
  CHECK(std::abs(std::abs(evaluate(koebe(200).series(), 0.3)) - 0.3 / 0.49) <= 1e-12);
  CHECK(std::abs(growth_bounds(2.0, 0.3).upper - 0.3 / 0.49) <= 1e-15);

  // f = z is strictly inside for k > 2.
  for (double r : {0.1, 0.3, 0.5}) {
    const auto g = growth_bounds(3.0, r);
    CHECK(g.lower < r);
    CHECK(r < g.upper);
  }

  CHECK_THROWS_AS(verify_growth_distortion(3.0, 10, 0, {0.6}), InvalidParameter);
}

TEST_CASE("coefficient check") {
  const auto rep = verify_coefficients(3.0, 10, 100, 5);
  CHECK(rep.pass);
  CHECK(rep.sharpness_gap <= 1e-10);
  const auto& table = rep.params["table"];
  REQUIRE(table.size() == 9);
  const auto& row3 = table[1];
  CHECK(row3["n"] == 3);
  CHECK(row3["bound_a_n"] == 6.0);
  CHECK(std::abs(row3["extremal_a_n"].get<double>() - 5.5) <= 1e-9);
  CHECK(row3["status"] == "reported_gap_open_question");
  CHECK(table[0]["status"] == "equality_expected");
  for (const auto& row : table)
    CHECK(row["empirical_max_a_n"].get<double>() <= row["bound_a_n"].get<double>() + 1e-9);

  // Koebe attains |a_n| = n for k = 2.
  const auto f = koebe(15);
  for (int n = 2; n <= 15; ++n)
    CHECK(std::abs(std::abs(f.series()[n]) - coeff_bound(2.0, n, Kind::Rk)) <= 1e-10);

  const auto rep2 = verify_coefficients(2.0, 15, 50, 5);
  CHECK(rep2.pass);
  for (const auto& row : rep2.params["table"]) {
    CHECK(row["status"] == "equality_expected");
    CHECK(std::abs(row["gap"].get<double>()) <= 1e-10);
  }
}

TEST_CASE("rotation integral") {
  const double two_pi = 2.0 * pi;
  CHECK(std::abs(rotation_integral(koebe(120), 0.5, 1024, RotationKind::radius) - two_pi) <= 1e-6);

  const ClassFunction id(TruncSeries{0.0, 1.0, 0.0, 0.0}, 2.0, Kind::Rk);
  for (double r : {0.1, 0.5, 0.9})
    CHECK(std::abs(rotation_integral(id, r, 256, RotationKind::radius) - two_pi) <= 1e-12);

  const ClassFunction idv(TruncSeries{0.0, 1.0, 0.0, 0.0}, 2.0, Kind::Vk);
  CHECK(std::abs(rotation_integral(idv, 0.5, 256, RotationKind::boundary) - two_pi) <= 1e-12);

  const auto fs = extremal_fn(4.0, 150);
  const double i4 = rotation_integral(fs, 0.5, 1024, RotationKind::radius);
  CHECK(i4 <= 4.0 * pi + 1e-6);
  CHECK(i4 > two_pi);

  // Against a brute-force trapezoid of |Re p| with many nodes.
  const auto p = extremal_pk(4.0, 150);
  const double ref = oracle::trapezoid(
      [&](double t) { return std::abs(evaluate(p.series(), std::polar(0.5, t)).real()); }, 1 << 20);
  CHECK(std::abs(i4 - ref) <= 1e-6);

  CHECK_THROWS_AS(rotation_integral(id, 0.5, 300, RotationKind::radius), InvalidParameter);
  CHECK_THROWS_AS(rotation_integral(id, 0.5, 128, RotationKind::radius), InvalidParameter);
  CHECK_THROWS_AS(rotation_integral(id, 1.0, 256, RotationKind::radius), InvalidParameter);
  CHECK_THROWS_AS(rotation_integral(id, 0.5, 256, RotationKind::boundary), InvalidParameter);

  // f vanishing on the circle.
  const ClassFunction z_plus(TruncSeries{0.0, 1.0, 2.0}, 2.0, Kind::Rk);
  CHECK_THROWS_AS(rotation_integral(z_plus, 0.5, 256, RotationKind::radius),
                  DivisionBySmallConstant);
}

TEST_CASE("property: rotation quadrature converges between M and 2M") {
  for (double k : {3.0, 4.0, 6.0}) {
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
      const auto f = from_measure(sample_measure(k, 6, seed), Kind::Rk, 80);
      for (double r : {0.3, 0.5, 0.6}) {
        const double a = rotation_integral(f, r, 1024, RotationKind::radius);
        const double b = rotation_integral(f, r, 2048, RotationKind::radius);
        CHECK(std::abs(a - b) < 1e-7);
      }
    }
  }
}

TEST_CASE("rotation check") {
  for (double k : {2.0, 4.0}) {
    const auto rep = verify_rotation(k, 40, 11);
    CHECK(rep.pass);
    CHECK(rep.params["threshold_k_pi"] == doctest::Approx(k * pi));
    CHECK(rep.params["threshold_2k_pi"] == doctest::Approx(2 * k * pi));
    CHECK(rep.params["max_mean_value_error"].get<double>() <= 1e-6);
    CHECK(rep.params["quadrature_convergence_M_vs_2M"].get<double>() < 1e-7);
    CHECK(rep.params["max_radius_integral"].get<double>() <= k * pi + 1e-5);
  }
  CHECK_THROWS_AS(verify_rotation(3.0, 10, 0, 0.5, 1000), InvalidParameter);
}

TEST_CASE("radius of starlikeness check") {
  const auto r4 = verify_radius_starlike(4.0, 60, 2);
  CHECK(r4.pass);
  CHECK(r4.sharpness_gap <= 1e-9);
  CHECK(r4.params["radius"] == doctest::Approx(2.0 - std::sqrt(3.0)));

  const auto fs = extremal_fn(4.0, 200);
  const auto fsp = derive(fs.series(), DeriveMode::d_dz);
  const double R = 2.0 - std::sqrt(3.0);
  CHECK(std::abs((R * evaluate(fsp, R) / evaluate(fs.series(), R)).real()) <= 1e-9);

  // All samples positive at r = 0.37 for k = 3.
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const auto f = from_measure(sample_measure(3.0, 6, seed), Kind::Rk, 120);
    const auto fp = derive(f.series(), DeriveMode::d_dz);
    for (int j = 0; j < 128; ++j) {
      const cplx z = std::polar(0.37, 2 * pi * j / 128);
      CHECK((z * evaluate(fp, z) / evaluate(f.series(), z)).real() > 0.0);
    }
  }

  const auto r2 = verify_radius_starlike(2.0, 10, 2);
  CHECK(r2.pass);
  CHECK(r2.params["vacuous"] == true);
  CHECK_THROWS_AS(verify_radius_starlike(1.0, 10, 2), InvalidParameter);
}

TEST_CASE("reports are deterministic across worker counts") {
  CheckOptions one, four;
  one.workers = 1;
  four.workers = 4;
  const auto a = nlohmann::json(verify_disk(3.0, 50, 7, {0.3, 0.6}, one)).dump();
  const auto b = nlohmann::json(verify_disk(3.0, 50, 7, {0.3, 0.6}, four)).dump();
  CHECK(a == b);
  const auto c = nlohmann::json(verify_coefficients(4.0, 8, 50, 7, one)).dump();
  const auto d = nlohmann::json(verify_coefficients(4.0, 8, 50, 7, four)).dump();
  CHECK(c == d);
  CHECK(report_csv(verify_rotation(3.0, 8, 7, 0.5, 256, one)) ==
        report_csv(verify_rotation(3.0, 8, 7, 0.5, 256, four)));
}

TEST_CASE("tolerance drives pass") {
  CheckOptions strict;
  strict.tol = -1.0;
  const auto rep = verify_disk(3.0, 10, 7, {0.5}, strict);
  CHECK_FALSE(rep.pass);
  CHECK(rep.params["tol"] == -1.0);
}

TEST_CASE("report JSON and CSV") {
  const auto rep = verify_disk(3.0, 5, 7, {0.5});
  const nlohmann::json j = rep;
  for (const char* key : {"check", "k", "params", "n_samples", "seed", "max_violation",
                          "sharpness_gap", "worst_case", "pass"})
    CHECK(j.contains(key));
  CHECK(j["worst_case"].contains("measure"));
  const auto csv = report_csv(rep);
  CHECK(csv.rfind("check,k,index,seed,violation,attained\n", 0) == 0);
  CHECK(std::count(csv.begin(), csv.end(), '\n') == 6);
}

TEST_CASE("suite") {
  CheckOptions opt;
  opt.workers = 1;
  const auto s = run_suite({2.0, 3.0}, 10, 1, opt);
  CHECK(s["pass"] == true);
  CHECK(s["reports"].size() == 10);
}

TEST_CASE("sample seeds") {
  CHECK(sample_seed(7, 0) == 7);
  CHECK(sample_seed(7, 5) == 12);
}
