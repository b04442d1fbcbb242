#include "bndrot/cli.hpp"

#include <chrono>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "bndrot/bounds.hpp"
#include "bndrot/classes.hpp"
#include "bndrot/errors.hpp"
#include "bndrot/verify.hpp"

namespace bndrot::cli {

namespace {

using nlohmann::json;

struct Config {
  double k = 2.0;
  double r = 0.5;
  int n = 15;
  int order = 0;  // 0: per-command default
  int samples = 200;
  std::uint64_t seed = 0;
  std::optional<double> tol;
  std::string format = "json";
  std::string out;
  bool timestamp = false;

  // verify / report specifics
  std::string check;
  int grid = 0;
  int M = 1024;
  unsigned workers = 0;
  std::vector<double> radii;
  std::vector<double> k_list{2, 3, 4, 6};
  bool all = false;

  // series
  std::string measure_file;
  std::string schwarz_file;
  std::string kind = "rk";
};

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

const auto kRangeK = CLI::Validator(
    [](std::string& s) -> std::string {
      double v = 0;
      if (!CLI::detail::lexical_cast(s, v) || !(v >= 2.0) || !std::isfinite(v)) {
        return "k must be a real number >= 2, got " + s;
      }
      return {};
    },
    "K>=2");

const auto kRangeR = CLI::Validator(
    [](std::string& s) -> std::string {
      double v = 0;
      if (!CLI::detail::lexical_cast(s, v) || !(v >= 0.0 && v < 1.0)) {
        return "r must satisfy 0 <= r < 1, got " + s;
      }
      return {};
    },
    "0<=R<1");

const auto kPowerOfTwo = CLI::Validator(
    [](std::string& s) -> std::string {
      long long v = 0;
      if (!CLI::detail::lexical_cast(s, v) || v < 256 || (v & (v - 1)) != 0) {
        return "M must be a power of two >= 256, got " + s;
      }
      return {};
    },
    "2^j>=256");

std::string fmt(double v) {
  std::ostringstream os;
  os << std::setprecision(10) << v;
  return os.str();
}

std::string fmt_c(cplx c) {
  if (c.imag() == 0.0) return fmt(c.real());
  std::ostringstream os;
  os << std::setprecision(10) << c.real() << (c.imag() < 0 ? " - " : " + ")
     << std::abs(c.imag()) << "i";
  return os.str();
}

std::string timestamp_now() {
  const auto now = std::chrono::system_clock::now();
  const std::time_t t = std::chrono::system_clock::to_time_t(now);
  std::tm tm{};
  gmtime_r(&t, &tm);
  std::ostringstream os;
  os << std::put_time(&tm, "%Y-%m-%dT%H:%M:%SZ");
  return os.str();
}

CheckOptions check_options(const Config& c) {
  CheckOptions opt;
  if (c.order > 0) opt.order = static_cast<std::size_t>(c.order);
  if (c.tol) opt.tol = *c.tol;
  opt.grid = c.grid;
  opt.workers = c.workers;
  return opt;
}

// --- subcommand bodies: each returns (payload, text rendering) -------------

struct Output {
  json payload;
  std::string text;
  std::string csv;
  int exit_code = 0;
};

Output cmd_bounds(const Config& c) {
  const BoundSet g = growth_bounds(c.k, c.r);
  const BoundSet d = distortion_bounds(c.k, c.r);
  const BoundSet re = re_bounds(c.k, c.r);
  const Disk pd = pk_disk(c.k, c.r);
  const Disk rd = robertson_disk(c.k, c.r);
  const double rs = radius_starlike(c.k);
  Output o;
  o.payload = {{"k", c.k},
               {"r", c.r},
               {"growth", g},
               {"distortion", d},
               {"re", re},
               {"pk_disk", {{"center", pd.center}, {"radius", pd.radius}}},
               {"robertson_disk", {{"center", rd.center}, {"radius", rd.radius}}},
               {"radius_starlike", rs}};
  std::ostringstream t;
  t << "k = " << fmt(c.k) << ", r = " << fmt(c.r) << "\n"
    << "  " << fmt(g.lower) << " <= |f(z)| <= " << fmt(g.upper) << "\n"
    << "  " << fmt(d.lower) << " <= |f'(z)| <= " << fmt(d.upper)
    << (d.lower_clamped ? "   (lower clamped: 1 - kr + r^2 < 0)" : "") << "\n"
    << "  " << fmt(re.lower) << " <= Re zf'(z)/f(z) <= " << fmt(re.upper) << "\n"
    << "  |p(z) - " << fmt(pd.center) << "| <= " << fmt(pd.radius) << "\n"
    << "  |zf''(z)/f'(z) - " << fmt(rd.center) << "| <= " << fmt(rd.radius) << "\n"
    << "  R_{S*} = " << fmt(rs) << "\n";
  o.text = t.str();
  o.csv = "k,r,growth_lower,growth_upper,distortion_lower,distortion_upper,re_lower,re_upper,"
          "pk_center,pk_radius,radius_starlike\n" +
          fmt(c.k) + "," + fmt(c.r) + "," + fmt(g.lower) + "," + fmt(g.upper) + "," +
          fmt(d.lower) + "," + fmt(d.upper) + "," + fmt(re.lower) + "," + fmt(re.upper) + "," +
          fmt(pd.center) + "," + fmt(pd.radius) + "," + fmt(rs) + "\n";
  return o;
}

Output cmd_coeff(const Config& c) {
  if (c.n < 2) throw UsageError("--n: must be >= 2");
  const double pk = coeff_bound(c.k, c.n, Kind::Pk);
  const double rk = coeff_bound(c.k, c.n, Kind::Rk);
  const double vk = coeff_bound(c.k, c.n, Kind::Vk);
  Output o;
  o.payload = {{"k", c.k}, {"n", c.n}, {"Pk", pk}, {"Rk", rk}, {"Vk", vk}};
  o.text = "k = " + fmt(c.k) + ", n = " + std::to_string(c.n) + "\n  |p_n| <= " + fmt(pk) +
           "\n  |a_n| <= " + fmt(rk) + "   (R_k)\n  |a_n| <= " + fmt(vk) + "   (V_k)\n";
  o.csv = "k,n,Pk,Rk,Vk\n" + fmt(c.k) + "," + std::to_string(c.n) + "," + fmt(pk) + "," +
          fmt(rk) + "," + fmt(vk) + "\n";
  return o;
}

std::size_t order_or_default(const Config& c) {
  return c.order > 0 ? static_cast<std::size_t>(c.order) : 20;
}

Output cmd_extremal(const Config& c) {
  const std::size_t order = order_or_default(c);
  const auto f = extremal_fn(c.k, order);
  const auto p = extremal_pk(c.k, order);
  Output o;
  o.payload = {{"k", c.k}, {"order", order}, {"f_star", f}, {"p_star", p}};
  std::ostringstream t, csv;
  t << "f*(z) = z(1-z)^{k/2-1} / (1+z)^{k/2+1},  k = " << fmt(c.k) << "\n";
  csv << "n,a_n,p_n\n";
  for (std::size_t n = 0; n <= order; ++n) {
    const cplx a = f.series()[n];
    const cplx pn = p.series()[n];
    t << "  n = " << std::setw(3) << n << "   a_n = " << std::setw(18) << fmt_c(a)
      << "   p_n = " << fmt_c(pn) << "\n";
    csv << n << "," << fmt(a.real()) << "," << fmt(pn.real()) << "\n";
  }
  o.text = t.str();
  o.csv = csv.str();
  return o;
}

json read_json_file(const std::string& path, const char* flag) {
  std::ifstream in(path);
  if (!in) throw UsageError(std::string(flag) + ": cannot open '" + path + "'");
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw UsageError(std::string(flag) + ": invalid JSON in '" + path + "': " + e.what());
  }
}

Output cmd_series(const Config& c) {
  const std::size_t order = order_or_default(c);
  const Kind kind = kind_from_string(c.kind);
  Output o;
  std::optional<ClassFunction> fn;
  if (!c.measure_file.empty()) {
    const auto mu = measure_from_json(read_json_file(c.measure_file, "--measure"));
    const double k = std::max(2.0, total_variation(mu));
    if (kind == Kind::Pk) {
      fn.emplace(herglotz_series(mu, order), k, Kind::Pk, provenance::FromMeasure{mu});
    } else {
      fn.emplace(from_measure(mu, kind, order));
    }
  } else if (!c.schwarz_file.empty()) {
    const auto phi = schwarz_from_json(read_json_file(c.schwarz_file, "--schwarz"));
    const ClassFunction p(caratheodory_from_schwarz(phi, order), 2.0, Kind::Pk,
                          provenance::FromSchwarz{phi});
    if (kind == Kind::Pk) fn.emplace(p);
    else if (kind == Kind::Rk) fn.emplace(rk_from_pk(p, order));
    else fn.emplace(vk_from_pk(p, order));
  } else {
    throw UsageError("series: one of --measure or --schwarz is required");
  }
  o.payload = *fn;
  std::ostringstream t, csv;
  const char* sym = kind == Kind::Pk ? "p_" : "a_";
  t << to_string(fn->kind()) << " function, k = " << fmt(fn->k()) << "\n";
  csv << "n,re,im\n";
  const auto coeffs = fn->series().coeffs();
  for (std::size_t n = 0; n < coeffs.size(); ++n) {
    t << "  " << sym << n << " = " << fmt_c(coeffs[n]) << "\n";
    csv << n << "," << fmt(coeffs[n].real()) << "," << fmt(coeffs[n].imag()) << "\n";
  }
  o.text = t.str();
  o.csv = csv.str();
  return o;
}

std::string report_text(const VerificationReport& r) {
  std::ostringstream t;
  t << (r.pass ? "PASS" : "FAIL") << "  " << r.check << "  k = " << fmt(r.k)
    << "  samples = " << r.n_samples << "  seed = " << r.seed
    << "  max_violation = " << fmt(r.max_violation)
    << "  sharpness_gap = " << fmt(r.sharpness_gap) << "\n";
  if (r.check == "coeff" && r.params.contains("table")) {
    t << "     n     bound |a_n|     |a_n(f*)|   empirical max   status\n";
    for (const auto& row : r.params["table"]) {
      t << "  " << std::setw(4) << row["n"].get<int>() << "  " << std::setw(14)
        << fmt(row["bound_a_n"].get<double>()) << "  " << std::setw(12)
        << fmt(row["extremal_a_n"].get<double>()) << "  " << std::setw(14)
        << fmt(row["empirical_max_a_n"].get<double>()) << "   "
        << row["status"].get<std::string>() << "\n";
    }
  }
  return t.str();
}

std::vector<double> default_radii(const std::string& check) {
  if (check == "disk") return {0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7};
  return {0.1, 0.2, 0.3, 0.4, 0.5};
}

Output cmd_verify(const Config& c) {
  const CheckOptions opt = check_options(c);
  const auto radii = c.radii.empty() ? default_radii(c.check) : c.radii;
  VerificationReport rep;
  if (c.check == "disk") {
    rep = verify_disk(c.k, c.samples, c.seed, radii, opt);
  } else if (c.check == "growth") {
    rep = verify_growth_distortion(c.k, c.samples, c.seed, radii, opt);
  } else if (c.check == "coeff") {
    rep = verify_coefficients(c.k, c.n, c.samples, c.seed, opt);
  } else if (c.check == "radius") {
    rep = verify_radius_starlike(c.k, c.samples, c.seed, opt);
  } else {
    rep = verify_rotation(c.k, c.samples, c.seed, c.r, c.M, opt);
  }
  Output o;
  o.payload = rep;
  o.text = report_text(rep);
  o.csv = report_csv(rep);
  o.exit_code = rep.pass ? 0 : 1;
  return o;
}

Output cmd_report(const Config& c) {
  if (!c.all) throw UsageError("report: --all is required");
  const CheckOptions opt = check_options(c);
  Output o;
  o.payload = run_suite(c.k_list, c.samples, c.seed, opt);
  std::ostringstream t, csv;
  csv << "check,k,n_samples,seed,max_violation,sharpness_gap,pass\n";
  for (const auto& r : o.payload["reports"]) {
    t << (r["pass"].get<bool>() ? "PASS" : "FAIL") << "  " << std::setw(8)
      << r["check"].get<std::string>() << "  k = " << std::setw(4) << fmt(r["k"].get<double>())
      << "  max_violation = " << std::setw(16) << fmt(r["max_violation"].get<double>())
      << "  sharpness_gap = " << fmt(r["sharpness_gap"].get<double>()) << "\n";
    csv << r["check"].get<std::string>() << "," << fmt(r["k"].get<double>()) << ","
        << r["n_samples"].get<int>() << "," << r["seed"].get<std::uint64_t>() << ","
        << fmt(r["max_violation"].get<double>()) << ","
        << fmt(r["sharpness_gap"].get<double>()) << "," << r["pass"].get<bool>() << "\n";
  }
  o.text = t.str();
  o.csv = csv.str();
  o.exit_code = o.payload["pass"].get<bool>() ? 0 : 1;
  return o;
}

void emit(const Config& c, const std::string& name, Output o, std::ostream& out) {
  std::string body;
  if (c.format == "json") {
    if (c.timestamp && o.payload.is_object()) o.payload["timestamp"] = timestamp_now();
    body = o.payload.dump(2) + "\n";
  } else if (c.format == "csv") {
    body = o.csv;
  } else {
    body = o.text;
  }

  std::filesystem::path target;
  if (!c.out.empty()) {
    target = c.out;
  } else if (const char* dir = std::getenv(kOutDirEnv); dir != nullptr && *dir != '\0') {
    const char* ext = c.format == "json" ? ".json" : c.format == "csv" ? ".csv" : ".txt";
    target = std::filesystem::path(dir) / (name + ext);
  }
  if (target.empty()) {
    out << body;
    return;
  }
  if (target.has_parent_path()) std::filesystem::create_directories(target.parent_path());
  std::ofstream f(target);
  if (!f) throw UsageError("--out: cannot write '" + target.string() + "'");
  f << body;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Config c;
  CLI::App app{"Bounded radius and boundary rotation: bounds, series, verification",
               "bndrot"};
  app.require_subcommand(1);
  app.set_version_flag("--version", "bndrot 0.1.0");

  auto add_format = [&c](CLI::App* sub) {
    sub->add_option("--format", c.format, "Output format")
        ->check(CLI::IsMember({"json", "csv", "text"}));
    sub->add_option("--out", c.out, "Output file (default: stdout, or $BNDROT_OUT_DIR)");
    sub->add_flag("--timestamp", c.timestamp, "Add a timestamp field to JSON output");
  };
  auto add_k = [&c](CLI::App* sub, bool required) {
    auto* o = sub->add_option("--k", c.k, "Rotation parameter k >= 2")->check(kRangeK);
    if (required) o->required();
  };
  auto add_ensemble = [&c](CLI::App* sub) {
    sub->add_option("--samples", c.samples, "Ensemble size")->check(CLI::PositiveNumber);
    sub->add_option("--seed", c.seed, "Base seed (sample i uses seed + i)");
    sub->add_option("--tol", c.tol, "Violation tolerance (default per check)");
    sub->add_option("--order", c.order, "Truncation order (default per check)")
        ->check(CLI::Range(2, 100000));
    sub->add_option("--grid", c.grid, "Angles per circle")->check(CLI::PositiveNumber);
    sub->add_option("--workers", c.workers, "Worker threads (0 = all cores)");
  };

  auto* bounds = app.add_subcommand("bounds", "Growth, distortion, Re(zf'/f) and disk bounds");
  add_k(bounds, true);
  bounds->add_option("--r", c.r, "Radius 0 <= r < 1")->required()->check(kRangeR);
  add_format(bounds);

  auto* coeff = app.add_subcommand("coeff", "Coefficient bounds for P_k, R_k, V_k");
  add_k(coeff, true);
  coeff->add_option("--n", c.n, "Coefficient index n >= 2")->required()->check(CLI::Range(2, 100000));
  add_format(coeff);

  auto* extremal = app.add_subcommand("extremal", "Coefficients of f* and z f*'/f*");
  add_k(extremal, true);
  extremal->add_option("--order", c.order, "Truncation order")->check(CLI::Range(2, 100000));
  add_format(extremal);

  auto* series = app.add_subcommand("series", "Expand a class function from a measure or Schwarz file");
  series->add_option("--measure", c.measure_file, "Measure JSON {\"atoms\": [[t, w], ...]}");
  series->add_option("--schwarz", c.schwarz_file, "Schwarz JSON {\"c\": [re, im], \"zeros\": [...]}");
  series->add_option("--kind", c.kind, "pk, rk or vk")->check(CLI::IsMember({"pk", "rk", "vk"}));
  series->add_option("--order", c.order, "Truncation order")->check(CLI::Range(2, 100000));
  add_format(series);

  auto* verify = app.add_subcommand("verify", "Run one seeded verification check");
  verify->add_option("check", c.check, "disk | growth | coeff | radius | rotation")
      ->required()
      ->check(CLI::IsMember({"disk", "growth", "coeff", "radius", "rotation"}));
  add_k(verify, false);
  add_ensemble(verify);
  verify->add_option("--n", c.n, "Largest coefficient index (coeff)")->check(CLI::Range(2, 100000));
  verify->add_option("--r", c.r, "Circle radius (rotation)")->check(kRangeR);
  verify->add_option("--radii", c.radii, "Circle radii (disk, growth)")->delimiter(',');
  verify->add_option("--M", c.M, "Quadrature nodes, a power of two >= 256 (rotation)")
      ->check(kPowerOfTwo);
  add_format(verify);

  auto* report = app.add_subcommand("report", "Run every check over a list of k values");
  report->add_flag("--all", c.all, "Run the full suite");
  report->add_option("--k-list", c.k_list, "Comma-separated k values")
      ->delimiter(',')
      ->check(kRangeK);
  add_ensemble(report);
  add_format(report);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      out << (dynamic_cast<const CLI::CallForVersion*>(&e) ? e.what() : app.help()) << "\n";
      return 0;
    }
    err << "error: " << e.what() << "\n";
    return 2;
  }

  try {
    Output o;
    std::string name;
    if (bounds->parsed()) {
      o = cmd_bounds(c);
      name = "bounds";
    } else if (coeff->parsed()) {
      o = cmd_coeff(c);
      name = "coeff";
    } else if (extremal->parsed()) {
      o = cmd_extremal(c);
      name = "extremal";
    } else if (series->parsed()) {
      o = cmd_series(c);
      name = "series";
    } else if (verify->parsed()) {
      o = cmd_verify(c);
      name = "verify-" + c.check;
    } else {
      o = cmd_report(c);
      name = "report";
    }
    const int code = o.exit_code;
    emit(c, name, std::move(o), out);
    return code;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
}

}  // namespace bndrot::cli
