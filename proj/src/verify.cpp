#include "bndrot/verify.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <mutex>
#include <numbers>
#include <sstream>
#include <thread>

#include <boost/math/quadrature/gauss.hpp>

#include "bndrot/bounds.hpp"
#include "bndrot/errors.hpp"

namespace bndrot {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kTwoPi = 2.0 * std::numbers::pi;

std::size_t order_or(const CheckOptions& opt, std::size_t fallback) {
  return opt.order == 0 ? fallback : opt.order;
}

int grid_or(const CheckOptions& opt, int fallback) {
  return opt.grid == 0 ? fallback : opt.grid;
}

double tol_or(const CheckOptions& opt, double fallback) {
  return std::isnan(opt.tol) ? fallback : opt.tol;
}

void require_k(double k, const char* who) {
  if (!(k >= 2.0) || !std::isfinite(k)) {
    throw InvalidParameter(std::string(who) + ": k must be finite and >= 2");
  }
}

void require_ensemble(int ensemble, const char* who) {
  if (ensemble < 1) throw InvalidParameter(std::string(who) + ": ensemble must be >= 1");
}

void require_radii(const std::vector<double>& radii, double cap, const char* who) {
  if (radii.empty()) throw InvalidParameter(std::string(who) + ": no radii given");
  for (double r : radii) {
    if (!(r >= 0.0 && r <= cap)) {
      throw InvalidParameter(std::string(who) + ": radius " + std::to_string(r) +
                             " outside [0, " + std::to_string(cap) + "]");
    }
  }
}

// Evaluates fn(i) for i in [0, n) on up to `workers` threads. Each slot is
// written by exactly one thread, so the result does not depend on scheduling.
template <class R, class F>
std::vector<R> map_samples(int n, unsigned workers, F&& fn) {
  std::vector<R> out(static_cast<std::size_t>(n));
  if (workers == 0) workers = std::max(1u, std::thread::hardware_concurrency());
  workers = std::min<unsigned>(workers, static_cast<unsigned>(n));
  if (workers <= 1) {
    for (int i = 0; i < n; ++i) out[static_cast<std::size_t>(i)] = fn(i);
    return out;
  }
  std::atomic<int> next{0};
  std::exception_ptr error;
  std::mutex error_mutex;
  auto worker = [&] {
    for (int i = next++; i < n; i = next++) {
      try {
        out[static_cast<std::size_t>(i)] = fn(i);
      } catch (...) {
        std::lock_guard lock(error_mutex);
        if (!error) error = std::current_exception();
        next = n;
      }
    }
  };
  std::vector<std::jthread> pool;
  for (unsigned w = 0; w < workers; ++w) pool.emplace_back(worker);
  pool.clear();
  if (error) std::rethrow_exception(error);
  return out;
}

struct Outcome {
  double violation = -std::numeric_limits<double>::infinity();
  double attained = 0.0;
};

// Max over samples, ties resolved to the lowest index.
int worst_index(const std::vector<Outcome>& outcomes) {
  int worst = 0;
  for (int i = 1; i < static_cast<int>(outcomes.size()); ++i) {
    if (outcomes[i].violation > outcomes[worst].violation) worst = i;
  }
  return worst;
}

void finish(VerificationReport& rep, const std::vector<Outcome>& outcomes, double tol) {
  rep.n_samples = static_cast<int>(outcomes.size());
  rep.per_sample.clear();
  for (int i = 0; i < rep.n_samples; ++i) {
    rep.per_sample.push_back({i, sample_seed(rep.seed, i), outcomes[i].violation,
                              outcomes[i].attained});
  }
  const int w = worst_index(outcomes);
  rep.max_violation = outcomes[w].violation;
  rep.params["tol"] = tol;
  rep.pass = rep.max_violation <= tol;
  if (rep.worst_case.is_null()) rep.worst_case = nlohmann::json::object();
  rep.worst_case["sample"] = w;
  rep.worst_case["seed"] = sample_seed(rep.seed, w);
}

nlohmann::json cjson(cplx z) { return {z.real(), z.imag()}; }

double angle_at(int j, int grid) { return kTwoPi * j / grid; }

}  // namespace

VerificationReport verify_disk(double k, int ensemble, std::uint64_t seed,
                               const std::vector<double>& radii, const CheckOptions& opt) {
  require_k(k, "verify_disk");
  require_ensemble(ensemble, "verify_disk");
  require_radii(radii, 0.7, "verify_disk");
  const std::size_t order = order_or(opt, 120);
  const double tol = tol_or(opt, 1e-6);
  const int grid = grid_or(opt, 256);

  struct Local {
    Outcome out;
    cplx z;
    double tail = 0.0;
  };
  auto results = map_samples<Local>(ensemble, opt.workers, [&](int i) {
    const auto mu = sample_measure(k, opt.max_atoms, sample_seed(seed, i));
    const auto p = herglotz_series(mu, order);
    Local loc;
    for (double r : radii) {
      const Disk d = pk_disk(k, r);
      const double tail = tail_estimate(p, r) + rounding_bound(p, r);
      loc.tail = std::max(loc.tail, tail);
      for (int j = 0; j < grid; ++j) {
        const cplx z = std::polar(r, angle_at(j, grid));
        const double dist = std::abs(evaluate(p, z) - d.center);
        const double v = dist - d.radius - tail;
        if (v > loc.out.violation) {
          loc.out.violation = v;
          loc.z = z;
        }
        if (d.radius > 0.0) loc.out.attained = std::max(loc.out.attained, dist / d.radius);
      }
    }
    return loc;
  });

  VerificationReport rep;
  rep.check = "disk";
  rep.k = k;
  rep.seed = seed;

  std::vector<Outcome> outcomes;
  double tail_max = 0.0;
  for (const auto& l : results) {
    outcomes.push_back(l.out);
    tail_max = std::max(tail_max, l.tail);
  }

  // The extremal p touches the disk boundary at z = -r.
  const auto p_star = extremal_pk(k, order);
  double gap = 0.0;
  auto gaps = nlohmann::json::array();
  for (double r : radii) {
    const Disk d = pk_disk(k, r);
    const double g = d.radius - std::abs(evaluate(p_star.series(), -r) - d.center);
    gaps.push_back({{"r", r}, {"gap", g}});
    gap = std::max(gap, std::abs(g));
  }
  rep.sharpness_gap = gap;
  rep.params = {{"order", order},         {"radii", radii},   {"grid", grid},
                {"max_atoms", opt.max_atoms}, {"error_budget_max", tail_max},
                {"extremal_gap_by_r", gaps}};
  finish(rep, outcomes, tol);
  const int w = rep.worst_case["sample"].get<int>();
  rep.worst_case["measure"] = sample_measure(k, opt.max_atoms, sample_seed(seed, w));
  rep.worst_case["z"] = cjson(results[static_cast<std::size_t>(w)].z);
  return rep;
}

VerificationReport verify_growth_distortion(double k, int ensemble, std::uint64_t seed,
                                            const std::vector<double>& radii,
                                            const CheckOptions& opt) {
  require_k(k, "verify_growth_distortion");
  require_ensemble(ensemble, "verify_growth_distortion");
  require_radii(radii, 0.5, "verify_growth_distortion");
  const std::size_t order = order_or(opt, 60);
  const double tol = tol_or(opt, 1e-6);
  const int grid = grid_or(opt, 128);

  struct Local {
    Outcome out;
    cplx z;
    std::string which;
    double tail = 0.0;
  };
  auto results = map_samples<Local>(ensemble, opt.workers, [&](int i) {
    const auto mu = sample_measure(k, opt.max_atoms, sample_seed(seed, i));
    const auto f = from_measure(mu, Kind::Rk, order);
    const auto fp = derive(f.series(), DeriveMode::d_dz);
    Local loc;
    for (double r : radii) {
      const BoundSet gb = growth_bounds(k, r);
      const BoundSet db = distortion_bounds(k, r);
      const double tf = tail_estimate(f.series(), r) + rounding_bound(f.series(), r);
      const double tfp = tail_estimate(fp, r) + rounding_bound(fp, r);
      loc.tail = std::max({loc.tail, tf, tfp});
      for (int j = 0; j < grid; ++j) {
        const cplx z = std::polar(r, angle_at(j, grid));
        const double af = std::abs(evaluate(f.series(), z));
        const double afp = std::abs(evaluate(fp, z));
        const double vg = std::max(gb.lower - af, af - gb.upper) - tf;
        const double vd = std::max(db.lower - afp, afp - db.upper) - tfp;
        if (vg > loc.out.violation) {
          loc.out.violation = vg;
          loc.z = z;
          loc.which = "growth";
        }
        if (vd > loc.out.violation) {
          loc.out.violation = vd;
          loc.z = z;
          loc.which = "distortion";
        }
        if (r > 0.0) loc.out.attained = std::max(loc.out.attained, af / gb.upper);
      }
    }
    return loc;
  });

  VerificationReport rep;
  rep.check = "growth";
  rep.k = k;
  rep.seed = seed;
  std::vector<Outcome> outcomes;
  double tail_max = 0.0;
  for (const auto& l : results) {
    outcomes.push_back(l.out);
    tail_max = std::max(tail_max, l.tail);
  }

  // f*(-r) attains the upper envelopes, f*(r) the lower ones.
  const auto fs = extremal_fn(k, order);
  const auto fsp = derive(fs.series(), DeriveMode::d_dz);
  auto table = nlohmann::json::array();
  double gap = 0.0;
  for (double r : radii) {
    const BoundSet gb = growth_bounds(k, r);
    const BoundSet db = distortion_bounds(k, r);
    const double gu = gb.upper - std::abs(evaluate(fs.series(), -r));
    const double gl = std::abs(evaluate(fs.series(), r)) - gb.lower;
    const double du = db.upper - std::abs(evaluate(fsp, -r));
    table.push_back({{"r", r},
                     {"growth_upper_gap", gu},
                     {"growth_lower_gap", gl},
                     {"distortion_upper_gap", du},
                     {"distortion_lower_clamped", db.lower_clamped}});
    gap = std::max(gap, std::abs(gu));
  }
  rep.sharpness_gap = gap;
  rep.params = {{"order", order},         {"radii", radii},
                {"grid", grid},           {"max_atoms", opt.max_atoms},
                {"error_budget_max", tail_max}, {"extremal", table}};
  finish(rep, outcomes, tol);
  const auto w = static_cast<std::size_t>(rep.worst_case["sample"].get<int>());
  rep.worst_case["measure"] = sample_measure(k, opt.max_atoms, sample_seed(seed, static_cast<int>(w)));
  rep.worst_case["z"] = cjson(results[w].z);
  rep.worst_case["bound"] = results[w].which;
  return rep;
}

VerificationReport verify_coefficients(double k, int n_max, int ensemble,
                                       std::uint64_t seed, const CheckOptions& opt) {
  require_k(k, "verify_coefficients");
  require_ensemble(ensemble, "verify_coefficients");
  if (n_max < 2) throw InvalidParameter("verify_coefficients: n_max must be >= 2");
  const auto n_top = static_cast<std::size_t>(n_max);
  const std::size_t order = std::max(order_or(opt, n_top), n_top);
  const double tol = tol_or(opt, 1e-9);

  std::vector<double> bound_r(n_top + 1, 0.0);
  std::vector<double> bound_v(n_top + 1, 0.0);
  for (int n = 2; n <= n_max; ++n) {
    bound_r[n] = coeff_bound(k, n, Kind::Rk);
    bound_v[n] = coeff_bound(k, n, Kind::Vk);
  }

  struct Local {
    Outcome out;
    std::string which;
    int at_n = 0;
    std::vector<double> max_p, max_a, max_g;
  };
  auto results = map_samples<Local>(ensemble, opt.workers, [&](int i) {
    const auto mu = sample_measure(k, opt.max_atoms, sample_seed(seed, i));
    const ClassFunction p(herglotz_series(mu, order), k, Kind::Pk,
                          provenance::FromMeasure{mu});
    const auto f = rk_from_pk(p, order);
    const auto g = alexander(f, AlexanderDirection::inverse, order);
    Local loc;
    loc.max_p.assign(n_top + 1, 0.0);
    loc.max_a.assign(n_top + 1, 0.0);
    loc.max_g.assign(n_top + 1, 0.0);
    auto consider = [&](double v, const char* which, int n) {
      if (v > loc.out.violation) {
        loc.out.violation = v;
        loc.which = which;
        loc.at_n = n;
      }
    };
    for (int n = 1; n <= n_max; ++n) {
      const double ap = std::abs(p.series()[n]);
      loc.max_p[n] = ap;
      consider(ap - k, "p_n", n);
      if (n >= 2) {
        const double aa = std::abs(f.series()[n]);
        const double ag = std::abs(g.series()[n]);
        loc.max_a[n] = aa;
        loc.max_g[n] = ag;
        consider(aa - bound_r[n], "a_n", n);
        consider(ag - bound_v[n], "g_n", n);
        loc.out.attained = std::max(loc.out.attained, aa / bound_r[n]);
      }
    }
    return loc;
  });

  VerificationReport rep;
  rep.check = "coeff";
  rep.k = k;
  rep.seed = seed;
  std::vector<Outcome> outcomes;
  std::vector<double> emp_p(n_top + 1, 0.0), emp_a(n_top + 1, 0.0), emp_g(n_top + 1, 0.0);
  for (const auto& l : results) {
    outcomes.push_back(l.out);
    for (std::size_t n = 1; n <= n_top; ++n) {
      emp_p[n] = std::max(emp_p[n], l.max_p[n]);
      emp_a[n] = std::max(emp_a[n], l.max_a[n]);
      emp_g[n] = std::max(emp_g[n], l.max_g[n]);
    }
  }

  const auto fs = extremal_fn(k, order);
  const auto ps = extremal_pk(k, order);
  auto table = nlohmann::json::array();
  for (int n = 2; n <= n_max; ++n) {
    const double star = std::abs(fs.series()[n]);
    const bool equality = n == 2 || k == 2.0;
    table.push_back({{"n", n},
                     {"bound_a_n", bound_r[n]},
                     {"extremal_a_n", star},
                     {"empirical_max_a_n", emp_a[n]},
                     {"gap", bound_r[n] - star},
                     {"bound_g_n", bound_v[n]},
                     {"empirical_max_g_n", emp_g[n]},
                     {"empirical_max_p_n", emp_p[n]},
                     {"extremal_p_n", std::abs(ps.series()[n])},
                     {"status", equality ? "equality_expected" : "reported_gap_open_question"}});
  }
  rep.sharpness_gap = std::abs(bound_r[2] - std::abs(fs.series()[2]));
  rep.params = {{"order", order},   {"n_max", n_max},
                {"max_atoms", opt.max_atoms}, {"bound_p_n", k},
                {"empirical_max_p_1", emp_p[1]}, {"table", table}};
  finish(rep, outcomes, tol);
  const auto w = static_cast<std::size_t>(rep.worst_case["sample"].get<int>());
  rep.worst_case["measure"] = sample_measure(k, opt.max_atoms, sample_seed(seed, static_cast<int>(w)));
  rep.worst_case["coefficient"] = results[w].which;
  rep.worst_case["n"] = results[w].at_n;
  return rep;
}

namespace {

struct RotationIntegrand {
  TruncSeries f;
  TruncSeries fp;
  TruncSeries fpp;
  double r;
  RotationKind kind;

  double operator()(double theta) const {
    const cplx z = std::polar(r, theta);
    if (kind == RotationKind::radius) {
      const cplx fv = evaluate(f, z);
      if (std::abs(fv) <= kDefaultDivEps) {
        throw DivisionBySmallConstant("rotation_integral: f vanishes on the circle");
      }
      return (z * evaluate(fp, z) / fv).real();
    }
    const cplx fpv = evaluate(fp, z);
    if (std::abs(fpv) <= kDefaultDivEps) {
      throw DivisionBySmallConstant("rotation_integral: f' vanishes on the circle");
    }
    return (1.0 + z * evaluate(fpp, z) / fpv).real();
  }
};

double bisect_root(const RotationIntegrand& g, double a, double b, double ga) {
  for (int it = 0; it < 200 && b - a > 1e-15; ++it) {
    const double m = 0.5 * (a + b);
    const double gm = g(m);
    if ((gm < 0.0) == (ga < 0.0)) {
      a = m;
      ga = gm;
    } else {
      b = m;
    }
  }
  return 0.5 * (a + b);
}

double gauss_arc(const RotationIntegrand& g, double a, double b) {
  const int pieces = std::max(1, static_cast<int>(std::ceil((b - a) / (kTwoPi / 64.0))));
  const double h = (b - a) / pieces;
  double sum = 0.0;
  for (int i = 0; i < pieces; ++i) {
    sum += boost::math::quadrature::gauss<double, 20>::integrate(g, a + i * h, a + (i + 1) * h);
  }
  return sum;
}

}  // namespace

double rotation_integral(const ClassFunction& f, double r, int M, RotationKind kind) {
  if (!(r > 0.0 && r < 1.0)) throw InvalidParameter("rotation_integral: need 0 < r < 1");
  if (M < 256 || (M & (M - 1)) != 0) {
    throw InvalidParameter("rotation_integral: M must be a power of two >= 256");
  }
  if (kind == RotationKind::boundary && f.kind() != Kind::Vk) {
    throw InvalidParameter("rotation_integral: boundary rotation needs a Vk function");
  }
  if (f.kind() == Kind::Pk) {
    throw InvalidParameter("rotation_integral: needs a normalized Rk or Vk function");
  }
  const TruncSeries fp = derive(f.series(), DeriveMode::d_dz);
  const RotationIntegrand g{f.series(), fp, derive(fp, DeriveMode::d_dz), r, kind};

  const double h = kTwoPi / M;
  std::vector<double> vals(static_cast<std::size_t>(M));
  double trap = 0.0;
  for (int j = 0; j < M; ++j) {
    vals[j] = g(j * h);
    trap += vals[j];
  }
  trap *= h;

  std::vector<double> roots;
  for (int j = 0; j < M; ++j) {
    const double a = vals[j];
    const double b = vals[(j + 1) % M];
    if ((a < 0.0) != (b < 0.0)) roots.push_back(bisect_root(g, j * h, (j + 1) * h, a));
  }
  if (roots.empty()) return std::abs(trap);

  // |g| = g + 2 max(-g, 0); the second term lives on the arcs between roots.
  double negative = 0.0;
  for (std::size_t i = 0; i < roots.size(); ++i) {
    const double a = roots[i];
    const double b = i + 1 < roots.size() ? roots[i + 1] : roots[0] + kTwoPi;
    if (g(0.5 * (a + b)) < 0.0) negative -= gauss_arc(g, a, b);
  }
  return trap + 2.0 * negative;
}

VerificationReport verify_rotation(double k, int ensemble, std::uint64_t seed, double r,
                                   int M, const CheckOptions& opt) {
  require_k(k, "verify_rotation");
  require_ensemble(ensemble, "verify_rotation");
  if (!(r > 0.0 && r <= 0.7)) throw InvalidParameter("verify_rotation: need 0 < r <= 0.7");
  const std::size_t order = order_or(opt, 60);
  const double tol = tol_or(opt, 1e-6);
  const double k_pi = k * kPi;

  struct Local {
    Outcome out;
    double radius_integral = 0.0;
    double boundary_integral = 0.0;
    double mean_value_error = 0.0;
    double convergence = 0.0;
  };
  auto results = map_samples<Local>(ensemble, opt.workers, [&](int i) {
    const std::uint64_t s = sample_seed(seed, i);
    const auto mu = sample_measure(k, opt.max_atoms, s);
    const auto fr = from_measure(mu, Kind::Rk, order);
    const auto fv = from_measure(mu, Kind::Vk, order);
    Local loc;
    loc.radius_integral = rotation_integral(fr, r, M, RotationKind::radius);
    loc.boundary_integral = rotation_integral(fv, r, M, RotationKind::boundary);
    loc.convergence =
        std::abs(rotation_integral(fr, r, 2 * M, RotationKind::radius) - loc.radius_integral);

    // Positive real part: the integral is the mean value 2 pi p(0) = 2 pi.
    const auto car_mu = sample_measure(2.0, opt.max_atoms, s);
    const ClassFunction car(herglotz_series(car_mu, order), 2.0, Kind::Pk);
    const double i_car = rotation_integral(rk_from_pk(car, order), r, M, RotationKind::radius);
    const auto phi = sample_schwarz(4, s);
    const ClassFunction sch(caratheodory_from_schwarz(phi, order), 2.0, Kind::Pk,
                            provenance::FromSchwarz{phi});
    const double i_sch = rotation_integral(rk_from_pk(sch, order), r, M, RotationKind::radius);
    loc.mean_value_error = std::max(std::abs(i_car - kTwoPi), std::abs(i_sch - kTwoPi));

    loc.out.violation = std::max({loc.radius_integral - k_pi, loc.boundary_integral - k_pi,
                                  loc.mean_value_error});
    loc.out.attained = loc.radius_integral;
    return loc;
  });

  VerificationReport rep;
  rep.check = "rotation";
  rep.k = k;
  rep.seed = seed;
  std::vector<Outcome> outcomes;
  double max_radius = 0.0, max_boundary = 0.0, max_mean = 0.0, max_conv = 0.0;
  for (const auto& l : results) {
    outcomes.push_back(l.out);
    max_radius = std::max(max_radius, l.radius_integral);
    max_boundary = std::max(max_boundary, l.boundary_integral);
    max_mean = std::max(max_mean, l.mean_value_error);
    max_conv = std::max(max_conv, l.convergence);
  }
  const double extremal =
      rotation_integral(extremal_fn(k, std::max<std::size_t>(order, 120)), r, M,
                        RotationKind::radius);
  rep.sharpness_gap = std::max(0.0, k_pi - std::max(max_radius, extremal));
  rep.params = {{"order", order},
                {"r", r},
                {"M", M},
                {"max_atoms", opt.max_atoms},
                {"threshold_k_pi", k_pi},
                {"threshold_2k_pi", 2.0 * k_pi},
                {"max_radius_integral", max_radius},
                {"max_boundary_integral", max_boundary},
                {"boundary_within_k_pi", max_boundary <= k_pi + tol},
                {"boundary_within_2k_pi", max_boundary <= 2.0 * k_pi + tol},
                {"max_mean_value_error", max_mean},
                {"quadrature_convergence_M_vs_2M", max_conv},
                {"extremal_radius_integral", extremal}};
  finish(rep, outcomes, tol);
  const int w = rep.worst_case["sample"].get<int>();
  rep.worst_case["measure"] = sample_measure(k, opt.max_atoms, sample_seed(seed, w));
  return rep;
}

VerificationReport verify_radius_starlike(double k, int ensemble, std::uint64_t seed,
                                          const CheckOptions& opt) {
  require_k(k, "verify_radius_starlike");
  require_ensemble(ensemble, "verify_radius_starlike");
  const std::size_t order = order_or(opt, 120);
  const double tol = tol_or(opt, 1e-6);
  const int grid = grid_or(opt, 256);

  VerificationReport rep;
  rep.check = "radius";
  rep.k = k;
  rep.seed = seed;
  if (k == 2.0) {
    // Starlike in the whole disk.
    rep.params = {{"radius", 1.0}, {"vacuous", true}, {"tol", tol}};
    rep.pass = rep.max_violation <= tol;
    return rep;
  }

  const double R = radius_starlike(k);
  const double r_check = std::max(R - 0.01, 0.5 * R);
  const double re_lower = re_bounds(k, r_check).lower;

  struct Local {
    Outcome out;
    cplx z;
  };
  auto results = map_samples<Local>(ensemble, opt.workers, [&](int i) {
    const auto mu = sample_measure(k, opt.max_atoms, sample_seed(seed, i));
    const auto f = from_measure(mu, Kind::Rk, order);
    const auto fp = derive(f.series(), DeriveMode::d_dz);
    const double tail = tail_estimate(f.series(), r_check) + tail_estimate(fp, r_check);
    Local loc;
    loc.out.attained = std::numeric_limits<double>::infinity();
    for (int j = 0; j < grid; ++j) {
      const cplx z = std::polar(r_check, angle_at(j, grid));
      const double re = (z * evaluate(fp, z) / evaluate(f.series(), z)).real();
      const double v = std::max(-re, re_lower - re) - tail;
      if (v > loc.out.violation) {
        loc.out.violation = v;
        loc.z = z;
      }
      loc.out.attained = std::min(loc.out.attained, re);
    }
    return loc;
  });

  std::vector<Outcome> outcomes;
  double min_re = std::numeric_limits<double>::infinity();
  for (const auto& l : results) {
    outcomes.push_back(l.out);
    min_re = std::min(min_re, l.out.attained);
  }

  const auto fs = extremal_fn(k, order);
  const auto fsp = derive(fs.series(), DeriveMode::d_dz);
  const double re_star = (R * evaluate(fsp, R) / evaluate(fs.series(), R)).real();
  rep.sharpness_gap = std::abs(re_star);
  rep.params = {{"order", order},
                {"grid", grid},
                {"max_atoms", opt.max_atoms},
                {"radius", R},
                {"r_check", r_check},
                {"re_lower_bound_at_r_check", re_lower},
                {"min_re_zf'/f", min_re},
                {"extremal_re_at_radius", re_star}};
  finish(rep, outcomes, tol);
  const auto w = static_cast<std::size_t>(rep.worst_case["sample"].get<int>());
  rep.worst_case["measure"] = sample_measure(k, opt.max_atoms, sample_seed(seed, static_cast<int>(w)));
  rep.worst_case["z"] = cjson(results[w].z);
  return rep;
}

nlohmann::json run_suite(const std::vector<double>& k_list, int ensemble,
                         std::uint64_t seed, const CheckOptions& opt) {
  auto reports = nlohmann::json::array();
  bool all = true;
  const std::vector<double> disk_radii{0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7};
  const std::vector<double> growth_radii{0.1, 0.2, 0.3, 0.4, 0.5};
  for (double k : k_list) {
    std::vector<VerificationReport> batch;
    batch.push_back(verify_disk(k, ensemble, seed, disk_radii, opt));
    batch.push_back(verify_growth_distortion(k, ensemble, seed, growth_radii, opt));
    batch.push_back(verify_coefficients(k, 15, ensemble, seed, opt));
    batch.push_back(verify_radius_starlike(k, ensemble, seed, opt));
    batch.push_back(verify_rotation(k, ensemble, seed, 0.5, 1024, opt));
    for (const auto& r : batch) {
      all = all && r.pass;
      reports.push_back(r);
    }
  }
  return {{"k_list", k_list}, {"samples", ensemble}, {"seed", seed},
          {"reports", std::move(reports)}, {"pass", all}};
}

void to_json(nlohmann::json& j, const VerificationReport& r) {
  j = nlohmann::json{{"check", r.check},
                     {"k", r.k},
                     {"params", r.params},
                     {"n_samples", r.n_samples},
                     {"seed", r.seed},
                     {"max_violation", r.max_violation},
                     {"sharpness_gap", r.sharpness_gap},
                     {"worst_case", r.worst_case},
                     {"pass", r.pass}};
}

std::string report_csv(const VerificationReport& r) {
  std::ostringstream os;
  os.precision(17);
  os << "check,k,index,seed,violation,attained\n";
  for (const auto& s : r.per_sample) {
    os << r.check << ',' << r.k << ',' << s.index << ',' << s.seed << ',' << s.violation << ','
       << s.attained << '\n';
  }
  return os.str();
}

}  // namespace bndrot
