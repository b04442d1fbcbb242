#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "bndrot/bounds.hpp"
#include "bndrot/classes.hpp"
#include "bndrot/errors.hpp"
#include "oracles.hpp"

using namespace bndrot;
using std::numbers::pi;

namespace {

TruncSeries kernel(std::size_t order) { return herglotz_series(DiscreteMeasure({{0.0, 2.0}}), order); }
TruncSeries rotated_kernel(std::size_t order) {
  return herglotz_series(DiscreteMeasure({{pi, 2.0}}), order);
}

ClassFunction sampled_pk(double k, std::uint64_t seed, std::size_t order) {
  auto mu = sample_measure(k, 6, seed);
  return ClassFunction(herglotz_series(mu, order), k, Kind::Pk, provenance::FromMeasure{mu});
}

}  // namespace

TEST_CASE("kind names") {
  CHECK(to_string(Kind::Rk) == "Rk");
  CHECK(kind_from_string("vk") == Kind::Vk);
  CHECK(kind_from_string("Pk") == Kind::Pk);
  CHECK_THROWS_AS(kind_from_string("sk"), InvalidParameter);
}

TEST_CASE("class function invariants") {
  CHECK_THROWS_AS(ClassFunction(TruncSeries{2.0, 1.0}, 2.0, Kind::Pk), NotCaratheodory);
  CHECK_THROWS_AS(ClassFunction(TruncSeries{0.0, 2.0}, 2.0, Kind::Rk), InvalidParameter);
  CHECK_THROWS_AS(ClassFunction(TruncSeries{0.1, 1.0}, 2.0, Kind::Vk), InvalidParameter);
  CHECK_THROWS_AS(ClassFunction(TruncSeries{1.0, 1.0}, 1.9, Kind::Pk), InvalidParameter);
  CHECK_NOTHROW(ClassFunction(TruncSeries{0.0, 1.0, 5.0}, 2.0, Kind::Rk));
}

TEST_CASE("pk_from_pair") {
  const auto p1 = herglotz_series(DiscreteMeasure({{1.0, 2.0}}), 10);
  const auto p2 = herglotz_series(DiscreteMeasure({{2.0, 2.0}}), 10);
  CHECK(oracle::max_abs_diff(pk_from_pair(p1, p2, 2.0).series(), p1) == 0.0);

  const auto e = pk_from_pair(rotated_kernel(10), kernel(10), 4.0);
  CHECK(oracle::max_abs_diff(e.series(), extremal_pk(4.0, 10).series()) <= 1e-14);
  CHECK(std::holds_alternative<provenance::FromPair>(e.provenance()));

  CHECK(oracle::max_abs_diff(pk_from_pair(kernel(10), kernel(10), 3.0).series(), kernel(10)) <=
        1e-15);
  CHECK_THROWS_AS(pk_from_pair(TruncSeries{2.0, 0.0}, kernel(1), 3.0), NotCaratheodory);
}

TEST_CASE("rk_from_pk") {
  const ClassFunction koebe_p(kernel(4), 2.0, Kind::Pk);
  const auto f = rk_from_pk(koebe_p, 5);
  CHECK(f.kind() == Kind::Rk);
  CHECK(oracle::max_abs_diff(f.series(), TruncSeries{0.0, 1.0, 2.0, 3.0, 4.0, 5.0}) <= 1e-14);

  const ClassFunction one(TruncSeries::constant(1.0, 6), 2.0, Kind::Pk);
  CHECK(oracle::max_abs_diff(rk_from_pk(one, 7).series(),
                             TruncSeries{0.0, 1.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0}) == 0.0);

  const auto g = rk_from_pk(extremal_pk(3.0, 10), 4);
  CHECK(std::abs(g.series()[2] + 3.0) < 1e-14);
  CHECK(std::abs(g.series()[3] - 5.5) < 1e-14);

  // Order is capped by what p determines.
  CHECK(rk_from_pk(koebe_p, 100).series().order() == 5);
  CHECK_THROWS_AS(rk_from_pk(f, 4), InvalidParameter);
}

TEST_CASE("pk_from_rk") {
  const ClassFunction koebe(TruncSeries{0.0, 1.0, 2.0, 3.0, 4.0, 5.0}, 2.0, Kind::Rk);
  CHECK(oracle::max_abs_diff(pk_from_rk(koebe), kernel(4)) <= 1e-14);

  const ClassFunction id(TruncSeries{0.0, 1.0, 0.0, 0.0}, 2.0, Kind::Rk);
  CHECK(oracle::max_abs_diff(pk_from_rk(id), TruncSeries::constant(1.0, 2)) == 0.0);
}

TEST_CASE("vk_from_pk") {
  const ClassFunction koebe_p(kernel(6), 2.0, Kind::Pk);
  const auto f = vk_from_pk(koebe_p, 7);
  CHECK(f.kind() == Kind::Vk);
  for (int n = 1; n <= 7; ++n) CHECK(std::abs(f.series()[n] - 1.0) < 1e-14);

  const ClassFunction one(TruncSeries::constant(1.0, 6), 2.0, Kind::Pk);
  const auto g = vk_from_pk(one, 7);
  CHECK(oracle::max_abs_diff(g.series(), TruncSeries{0.0, 1.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0}) ==
        0.0);
}

TEST_CASE("alexander transform") {
  const ClassFunction convex(TruncSeries{0.0, 1.0, 1.0, 1.0, 1.0}, 2.0, Kind::Vk);
  const auto fwd = alexander(convex, AlexanderDirection::forward, 4);
  CHECK(fwd.kind() == Kind::Rk);
  CHECK(fwd.k() == 2.0);
  CHECK(oracle::max_abs_diff(fwd.series(), TruncSeries{0.0, 1.0, 2.0, 3.0, 4.0}) == 0.0);

  const auto back = alexander(fwd, AlexanderDirection::inverse, 4);
  CHECK(back.kind() == Kind::Vk);
  CHECK(oracle::max_abs_diff(back.series(), convex.series()) <= 1e-12);

  const ClassFunction id(TruncSeries{0.0, 1.0, 0.0}, 3.0, Kind::Vk);
  CHECK(alexander(id, AlexanderDirection::forward, 2).series() == id.series());

  CHECK_THROWS_AS(alexander(fwd, AlexanderDirection::forward, 4), InvalidParameter);
  CHECK_THROWS_AS(alexander(convex, AlexanderDirection::inverse, 4), InvalidParameter);
}

TEST_CASE("from_measure") {
  const DiscreteMeasure point({{0.0, 2.0}});
  const auto f = from_measure(point, Kind::Rk, 6);
  CHECK(f.k() == 2.0);
  for (int n = 1; n <= 6; ++n) CHECK(std::abs(f.series()[n] - double(n)) < 1e-13);

  const auto g = from_measure(point, Kind::Vk, 6);
  for (int n = 1; n <= 6; ++n) CHECK(std::abs(g.series()[n] - 1.0) < 1e-13);

  const auto h = from_measure(DiscreteMeasure({{pi, 3.0}, {0.0, -1.0}}), Kind::Rk, 6);
  CHECK(h.k() == 4.0);
  CHECK(oracle::max_abs_diff(h.series(), extremal_fn(4.0, 6).series()) <= 1e-13);
  CHECK_THROWS_AS(from_measure(point, Kind::Pk, 6), InvalidParameter);
}

TEST_CASE("extremal function") {
  const auto f2 = extremal_fn(2.0, 4);
  CHECK(oracle::max_abs_diff(f2.series(), TruncSeries{0.0, 1.0, -2.0, 3.0, -4.0}) <= 1e-14);
  CHECK(std::holds_alternative<provenance::Extremal>(f2.provenance()));

  const auto f3 = extremal_fn(3.0, 3);
  CHECK(oracle::max_abs_diff(f3.series(), TruncSeries{0.0, 1.0, -3.0, 5.5}) <= 1e-14);

  const auto f4 = extremal_fn(4.0, 3);
  CHECK(oracle::max_abs_diff(f4.series(), TruncSeries{0.0, 1.0, -4.0, 9.0}) <= 1e-14);

  CHECK_THROWS_AS(extremal_fn(1.0, 4), InvalidParameter);

  // Against complex pow of the closed form.
  for (double k : {2.0, 2.5, 3.0, 4.0, 6.0}) {
    const auto f = extremal_fn(k, 150);
    for (cplx z : {cplx(0.3, 0.1), cplx(-0.5, 0.0), cplx(0.0, -0.6)})
      CHECK(std::abs(evaluate(f.series(), z) - oracle::extremal_closed_form(k, z)) <= 1e-9);
  }
}

TEST_CASE("extremal p") {
  const auto p2 = extremal_pk(2.0, 6);
  for (int n = 1; n <= 6; ++n) CHECK(std::abs(p2.series()[n] - 2.0 * std::pow(-1.0, n)) < 1e-14);

  const auto p3 = extremal_pk(3.0, 4);
  CHECK(oracle::max_abs_diff(p3.series(), TruncSeries{1.0, -3.0, 2.0, -3.0, 2.0}) <= 1e-14);

  for (double k : {2.0, 3.0, 4.0, 5.0, 6.0}) {
    const auto p = extremal_pk(k, 20);
    for (int n = 1; n <= 20; ++n) CHECK(std::abs(p.series()[n] - oracle::extremal_p_n(k, n)) < 1e-13);
    CHECK(oracle::max_abs_diff(pk_from_rk(extremal_fn(k, 21)), p.series()) <= 1e-10);
    CHECK(oracle::max_abs_diff(herglotz_series(extremal_measure(k), 20), p.series()) <= 1e-13);
    CHECK(std::abs(std::abs(extremal_fn(k, 2).series()[2]) - k) <= 1e-10);
  }
  CHECK(extremal_measure(2.0).atoms().size() == 1);
  CHECK_THROWS_AS(extremal_pk(1.5, 4), InvalidParameter);
}

TEST_CASE("class function JSON") {
  const auto f = from_measure(DiscreteMeasure({{0.0, 2.0}}), Kind::Rk, 3);
  const nlohmann::json j = f;
  CHECK(j["kind"] == "Rk");
  CHECK(j["k"] == 2.0);
  CHECK(j["coeffs"].size() == 4);
  CHECK(j["provenance"]["type"] == "measure");
  CHECK(measure_from_json(j["provenance"]["measure"]) == DiscreteMeasure({{0.0, 2.0}}));
  CHECK(nlohmann::json(extremal_fn(3.0, 2))["provenance"]["type"] == "extremal");
}

// ---- properties -----------------------------------------------------------

TEST_CASE("property: pk -> rk -> pk round trip") {
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    const auto p = sampled_pk(2.0 + (seed % 3), seed, 30);
    const auto back = pk_from_rk(rk_from_pk(p, 31));
    CHECK(back.order() == 30);
    CHECK(oracle::max_abs_diff(back, p.series()) <= 1e-10);
  }
}

TEST_CASE("property: round trip for large k is limited by conditioning") {
  // Recovering p from double-rounded a_n amplifies the rounding by the
  // coefficients of z/f, which grow like n^(k-1).
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    const auto p = sampled_pk(6.0, seed, 30);
    CHECK(oracle::max_abs_diff(pk_from_rk(rk_from_pk(p, 31)), p.series()) <= 1e-8);
    const auto q = sampled_pk(6.0, seed, 15);
    CHECK(oracle::max_abs_diff(pk_from_rk(rk_from_pk(q, 16)), q.series()) <= 1e-10);
  }
}

TEST_CASE("property: Alexander commutation") {
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    const auto p = sampled_pk(4.0, seed, 30);
    const auto lhs = alexander(vk_from_pk(p, 31), AlexanderDirection::forward, 31);
    CHECK(oracle::max_abs_diff(lhs.series(), rk_from_pk(p, 31).series()) <= 1e-10);
  }
}

TEST_CASE("property: measure representation equals the recursion") {
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    const auto mu = sample_measure(5.0, 6, seed);
    const auto direct = from_measure(mu, Kind::Rk, 31);
    const ClassFunction p(herglotz_series(mu, 30), total_variation(mu), Kind::Pk);
    CHECK(oracle::max_abs_diff(direct.series(), rk_from_pk(p, 31).series()) <= 1e-9);
    const auto v = from_measure(mu, Kind::Vk, 31);
    CHECK(oracle::max_abs_diff(v.series(), vk_from_pk(p, 31).series()) <= 1e-9);
  }
}

TEST_CASE("property: sampled R_k coefficients respect the product bound") {
  for (double k : {2.0, 3.0, 4.0, 6.0}) {
    for (std::uint64_t seed = 0; seed < 200; ++seed) {
      const auto f = rk_from_pk(sampled_pk(k, seed, 15), 15);
      for (int n = 2; n <= 15; ++n)
        CHECK(std::abs(f.series()[n]) <= oracle::rk_product_bound(k, n) + 1e-9);
    }
  }
}
