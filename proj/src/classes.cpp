#include "bndrot/classes.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "bndrot/errors.hpp"

namespace bndrot {

namespace {

void require_k(double k, const char* who) {
  if (!(k >= 2.0) || !std::isfinite(k)) {
    throw InvalidParameter(std::string(who) + ": k must be finite and >= 2");
  }
}

void require_kind(const ClassFunction& f, Kind kind, const char* who) {
  if (f.kind() != kind) {
    throw InvalidParameter(std::string(who) + ": expected a " +
                           std::string(to_string(kind)) + " function, got " +
                           std::string(to_string(f.kind())));
  }
}

// z * s, one order higher.
TruncSeries times_z(const TruncSeries& s) {
  std::vector<cplx> c(s.order() + 2, cplx{});
  for (std::size_t n = 0; n <= s.order(); ++n) c[n + 1] = s[n];
  return TruncSeries(std::move(c));
}

// s / z for s with zero constant term, one order lower.
TruncSeries over_z(const TruncSeries& s) {
  std::vector<cplx> c(s.coeffs().begin() + 1, s.coeffs().end());
  return TruncSeries(std::move(c));
}

}  // namespace

std::string_view to_string(Kind kind) {
  switch (kind) {
    case Kind::Pk: return "Pk";
    case Kind::Rk: return "Rk";
    case Kind::Vk: return "Vk";
  }
  return "?";
}

Kind kind_from_string(std::string_view s) {
  if (s == "Pk" || s == "pk") return Kind::Pk;
  if (s == "Rk" || s == "rk") return Kind::Rk;
  if (s == "Vk" || s == "vk") return Kind::Vk;
  throw InvalidParameter("unknown class kind '" + std::string(s) + "'");
}

ClassFunction::ClassFunction(TruncSeries series, double k, Kind kind,
                             Provenance provenance)
    : series_(std::move(series)), k_(k), kind_(kind), provenance_(std::move(provenance)) {
  require_k(k_, "ClassFunction");
  if (kind_ == Kind::Pk) {
    if (std::abs(series_[0] - 1.0) > kNormTol) {
      throw NotCaratheodory("Pk function must have constant term 1");
    }
  } else {
    if (series_.order() < 1 || std::abs(series_[0]) > kNormTol ||
        std::abs(series_[1] - 1.0) > kNormTol) {
      throw InvalidParameter("Rk/Vk function must be normalized as z + a_2 z^2 + ...");
    }
  }
}

ClassFunction pk_from_pair(const TruncSeries& p1, const TruncSeries& p2, double k) {
  require_k(k, "pk_from_pair");
  if (std::abs(p1[0] - 1.0) > ClassFunction::kNormTol ||
      std::abs(p2[0] - 1.0) > ClassFunction::kNormTol) {
    throw NotCaratheodory("pk_from_pair: both inputs need constant term 1");
  }
  const double plus = k / 4.0 + 0.5;
  const double minus = k / 4.0 - 0.5;
  return ClassFunction(plus * p1 - minus * p2, k, Kind::Pk,
                       provenance::FromPair{p1, p2});
}

ClassFunction rk_from_pk(const ClassFunction& p, std::size_t order) {
  require_kind(p, Kind::Pk, "rk_from_pk");
  const auto pc = p.series().coeffs();
  const std::size_t n_max = std::min(order, p.series().order() + 1);
  if (n_max < 1) throw InvalidParameter("rk_from_pk: order must be >= 1");
  using lcplx = std::complex<long double>;
  std::vector<lcplx> al(n_max + 1);
  std::vector<cplx> a(n_max + 1, cplx{});
  al[1] = 1.0L;
  a[1] = 1.0;
  for (std::size_t n = 2; n <= n_max; ++n) {
    lcplx acc{};
    for (std::size_t v = 1; v < n; ++v) acc += lcplx(pc[n - v]) * al[v];
    al[n] = acc / static_cast<long double>(n - 1);
    a[n] = cplx(al[n]);
  }
  return ClassFunction(TruncSeries(std::move(a)), p.k(), Kind::Rk, p.provenance());
}

TruncSeries pk_from_rk(const ClassFunction& f) {
  require_kind(f, Kind::Rk, "pk_from_rk");
  const TruncSeries& s = f.series();
  return div(over_z(derive(s, DeriveMode::z_d_dz)), over_z(s));
}

ClassFunction vk_from_pk(const ClassFunction& p, std::size_t order) {
  return alexander(rk_from_pk(p, order), AlexanderDirection::inverse, order);
}

ClassFunction alexander(const ClassFunction& f, AlexanderDirection direction,
                        std::size_t order) {
  const bool fwd = direction == AlexanderDirection::forward;
  require_kind(f, fwd ? Kind::Vk : Kind::Rk, "alexander");
  const TruncSeries s = f.series().truncated(order);
  std::vector<cplx> g(s.coeffs().begin(), s.coeffs().end());
  for (std::size_t n = 1; n < g.size(); ++n) {
    g[n] = fwd ? g[n] * static_cast<double>(n) : g[n] / static_cast<double>(n);
  }
  return ClassFunction(TruncSeries(std::move(g)), f.k(), fwd ? Kind::Rk : Kind::Vk,
                       f.provenance());
}

ClassFunction from_measure(const DiscreteMeasure& mu, Kind kind, std::size_t order) {
  if (kind == Kind::Pk) {
    throw InvalidParameter("from_measure builds Rk or Vk functions; use herglotz_series for Pk");
  }
  if (order < 1) throw InvalidParameter("from_measure: order must be >= 1");
  const std::size_t inner = order - 1;
  TruncSeries exponent(inner);
  for (const auto& a : mu.atoms()) {
    std::vector<cplx> lin(inner + 1, cplx{});
    lin[0] = 1.0;
    if (inner >= 1) lin[1] = -std::polar(1.0, -a.angle);
    exponent = exponent - cplx(a.weight) * log(TruncSeries(std::move(lin)));
  }
  const TruncSeries e = exp(exponent);
  TruncSeries f = kind == Kind::Rk ? times_z(e) : integrate(e);
  return ClassFunction(std::move(f), std::max(2.0, total_variation(mu)), kind,
                       provenance::FromMeasure{mu});
}

ClassFunction extremal_fn(double k, std::size_t order) {
  require_k(k, "extremal_fn");
  if (order < 1) throw InvalidParameter("extremal_fn: order must be >= 1");
  const std::size_t inner = order - 1;
  const TruncSeries one_minus_z({1.0, -1.0});
  const TruncSeries one_plus_z({1.0, 1.0});
  auto pad = [inner](const TruncSeries& s) {
    std::vector<cplx> c(inner + 1, cplx{});
    for (std::size_t n = 0; n <= std::min(inner, s.order()); ++n) c[n] = s[n];
    return TruncSeries(std::move(c));
  };
  const TruncSeries num = pow_real(pad(one_minus_z), k / 2.0 - 1.0);
  const TruncSeries den = pow_real(pad(one_plus_z), -(k / 2.0 + 1.0));
  return ClassFunction(times_z(num * den), k, Kind::Rk, provenance::Extremal{});
}

ClassFunction extremal_pk(double k, std::size_t order) {
  require_k(k, "extremal_pk");
  std::vector<cplx> num(order + 1, cplx{});
  std::vector<cplx> den(order + 1, cplx{});
  num[0] = 1.0;
  den[0] = 1.0;
  if (order >= 1) num[1] = -k;
  if (order >= 2) {
    num[2] = 1.0;
    den[2] = -1.0;
  }
  return ClassFunction(div(TruncSeries(std::move(num)), TruncSeries(std::move(den))), k,
                       Kind::Pk, provenance::Extremal{});
}

DiscreteMeasure extremal_measure(double k) {
  require_k(k, "extremal_measure");
  std::vector<Atom> atoms{{std::numbers::pi, k / 2.0 + 1.0}};
  if (k > 2.0) atoms.push_back({0.0, 1.0 - k / 2.0});
  return DiscreteMeasure(std::move(atoms));
}

void to_json(nlohmann::json& j, const ClassFunction& f) {
  nlohmann::json prov = std::visit(
      [](const auto& p) -> nlohmann::json {
        using T = std::decay_t<decltype(p)>;
        if constexpr (std::is_same_v<T, provenance::FromMeasure>) {
          return {{"type", "measure"}, {"measure", p.mu}};
        } else if constexpr (std::is_same_v<T, provenance::FromPair>) {
          return {{"type", "pair"}, {"p1", p.p1}, {"p2", p.p2}};
        } else if constexpr (std::is_same_v<T, provenance::FromSchwarz>) {
          return {{"type", "schwarz"}, {"phi", p.phi}};
        } else if constexpr (std::is_same_v<T, provenance::Extremal>) {
          return {{"type", "extremal"}};
        } else {
          return {{"type", "explicit"}};
        }
      },
      f.provenance());
  j = nlohmann::json{{"kind", to_string(f.kind())},
                     {"k", f.k()},
                     {"coeffs", f.series()},
                     {"provenance", std::move(prov)}};
}

}  // namespace bndrot
