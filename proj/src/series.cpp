#include "bndrot/series.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "bndrot/errors.hpp"

namespace bndrot {

namespace {

void require_finite(std::span<const cplx> c) {
  for (std::size_t n = 0; n < c.size(); ++n) {
    if (!std::isfinite(c[n].real()) || !std::isfinite(c[n].imag())) {
      throw InvalidParameter("series coefficient " + std::to_string(n) +
                             " is not finite");
    }
  }
}

void require_invertible(cplx c0, double eps, const char* what) {
  if (!(std::abs(c0) > eps)) {
    throw DivisionBySmallConstant(std::string(what) +
                                  ": constant term modulus " +
                                  std::to_string(std::abs(c0)) +
                                  " is below threshold");
  }
}

}  // namespace

TruncSeries::TruncSeries(std::size_t order) : coeffs_(order + 1, cplx{}) {}

TruncSeries::TruncSeries(std::vector<cplx> coeffs) : coeffs_(std::move(coeffs)) {
  if (coeffs_.empty()) {
    throw InvalidParameter("a series needs at least one coefficient");
  }
  require_finite(coeffs_);
}

TruncSeries::TruncSeries(std::initializer_list<cplx> coeffs)
    : TruncSeries(std::vector<cplx>(coeffs)) {}

TruncSeries TruncSeries::constant(cplx c, std::size_t order) {
  std::vector<cplx> v(order + 1, cplx{});
  v[0] = c;
  return TruncSeries(std::move(v));
}

TruncSeries TruncSeries::identity(std::size_t order) {
  TruncSeries s(order);
  if (order >= 1) s.coeffs_[1] = 1.0;
  return s;
}

TruncSeries TruncSeries::truncated(std::size_t n) const {
  const std::size_t m = std::min(n, order());
  return TruncSeries(std::vector<cplx>(coeffs_.begin(), coeffs_.begin() + m + 1));
}

TruncSeries arith(const TruncSeries& a, const TruncSeries& b, ArithOp op) {
  const std::size_t n = std::min(a.order(), b.order());
  std::vector<cplx> out(n + 1);
  switch (op) {
    case ArithOp::add:
      for (std::size_t i = 0; i <= n; ++i) out[i] = a[i] + b[i];
      break;
    case ArithOp::sub:
      for (std::size_t i = 0; i <= n; ++i) out[i] = a[i] - b[i];
      break;
    case ArithOp::mul: {
      const auto ca = a.coeffs();
      const auto cb = b.coeffs();
      for (std::size_t i = 0; i <= n; ++i) {
        cplx acc{};
        for (std::size_t j = 0; j <= i; ++j) acc += ca[j] * cb[i - j];
        out[i] = acc;
      }
      break;
    }
  }
  return TruncSeries(std::move(out));
}

TruncSeries operator+(const TruncSeries& a, const TruncSeries& b) {
  return arith(a, b, ArithOp::add);
}
TruncSeries operator-(const TruncSeries& a, const TruncSeries& b) {
  return arith(a, b, ArithOp::sub);
}
TruncSeries operator*(const TruncSeries& a, const TruncSeries& b) {
  return arith(a, b, ArithOp::mul);
}

TruncSeries operator*(cplx s, const TruncSeries& a) {
  std::vector<cplx> out(a.coeffs().begin(), a.coeffs().end());
  for (auto& c : out) c *= s;
  return TruncSeries(std::move(out));
}

TruncSeries div(const TruncSeries& a, const TruncSeries& b, double eps) {
  require_invertible(b[0], eps, "div");
  const std::size_t n = std::min(a.order(), b.order());
  const auto cb = b.coeffs();
  // The recurrence cancels large terms when b grows; carry it in extended
  // precision and round once.
  using lcplx = std::complex<long double>;
  const lcplx b0(cb[0]);
  std::vector<lcplx> ql(n + 1);
  std::vector<cplx> q(n + 1);
  for (std::size_t i = 0; i <= n; ++i) {
    lcplx acc(a[i]);
    for (std::size_t j = 1; j <= i; ++j) acc -= lcplx(cb[j]) * ql[i - j];
    ql[i] = acc / b0;
    q[i] = cplx(ql[i]);
  }
  return TruncSeries(std::move(q));
}

TruncSeries derive(const TruncSeries& s, DeriveMode mode) {
  const auto c = s.coeffs();
  if (mode == DeriveMode::z_d_dz) {
    std::vector<cplx> out(c.size());
    for (std::size_t n = 0; n < c.size(); ++n) out[n] = static_cast<double>(n) * c[n];
    return TruncSeries(std::move(out));
  }
  if (s.order() == 0) return TruncSeries(0);
  std::vector<cplx> out(s.order());
  for (std::size_t n = 0; n + 1 < c.size(); ++n) {
    out[n] = static_cast<double>(n + 1) * c[n + 1];
  }
  return TruncSeries(std::move(out));
}

TruncSeries integrate(const TruncSeries& s) {
  const auto c = s.coeffs();
  std::vector<cplx> out(c.size() + 1);
  for (std::size_t n = 0; n < c.size(); ++n) {
    out[n + 1] = c[n] / static_cast<double>(n + 1);
  }
  return TruncSeries(std::move(out));
}

// E = exp(s) satisfies E' = s' E, i.e. n E_n = sum_{j=1..n} j s_j E_{n-j}.
TruncSeries exp(const TruncSeries& s) {
  const auto c = s.coeffs();
  const std::size_t order = s.order();
  std::vector<cplx> e(order + 1);
  e[0] = std::exp(c[0]);
  for (std::size_t n = 1; n <= order; ++n) {
    cplx acc{};
    for (std::size_t j = 1; j <= n; ++j) acc += static_cast<double>(j) * c[j] * e[n - j];
    e[n] = acc / static_cast<double>(n);
  }
  return TruncSeries(std::move(e));
}

// L = log(s) satisfies s L' = s', i.e.
// n s_0 L_n = n s_n - sum_{j=1..n-1} j L_j s_{n-j}.
TruncSeries log(const TruncSeries& s, double eps) {
  const auto c = s.coeffs();
  require_invertible(c[0], eps, "log");
  const std::size_t order = s.order();
  std::vector<cplx> l(order + 1);
  l[0] = std::log(c[0]);
  for (std::size_t n = 1; n <= order; ++n) {
    cplx acc = static_cast<double>(n) * c[n];
    for (std::size_t j = 1; j < n; ++j) acc -= static_cast<double>(j) * l[j] * c[n - j];
    l[n] = acc / (static_cast<double>(n) * c[0]);
  }
  return TruncSeries(std::move(l));
}

TruncSeries pow_real(const TruncSeries& s, double alpha, double eps) {
  require_invertible(s[0], eps, "pow_real");
  if (alpha == 0.0) return TruncSeries::constant(1.0, s.order());
  return exp(alpha * log(s, eps));
}

TruncSeries compose(const TruncSeries& outer, const TruncSeries& inner) {
  if (inner[0] != cplx{}) {
    throw NonzeroInnerConstant("compose: inner series has nonzero constant term");
  }
  const std::size_t n = std::min(outer.order(), inner.order());
  const auto co = outer.coeffs();
  const TruncSeries in = inner.truncated(n);
  TruncSeries acc = TruncSeries::constant(co[n], n);
  for (std::size_t i = n; i-- > 0;) {
    acc = acc * in + TruncSeries::constant(co[i], n);
  }
  return acc;
}

cplx evaluate(const TruncSeries& s, cplx z) {
  const auto c = s.coeffs();
  cplx acc{};
  for (std::size_t i = c.size(); i-- > 0;) acc = acc * z + c[i];
  return acc;
}

double tail_estimate(const TruncSeries& s, double r) {
  const auto c = s.coeffs();
  const std::size_t n = s.order();
  double last = std::abs(c[n]);
  if (n >= 1) last = std::max(last, std::abs(c[n - 1]));
  if (r >= 1.0) return std::numeric_limits<double>::infinity();
  return last * std::pow(r, static_cast<double>(n + 1)) / (1.0 - r);
}

double rounding_bound(const TruncSeries& s, double r) {
  double acc = 0.0;
  const auto c = s.coeffs();
  for (std::size_t n = c.size(); n-- > 0;) acc = acc * r + std::abs(c[n]);
  const double nu = static_cast<double>(4 * s.order() + 8) *
                    std::numeric_limits<double>::epsilon() / 2.0;
  return nu / (1.0 - nu) * acc;
}

void to_json(nlohmann::json& j, const TruncSeries& s) {
  j = nlohmann::json::array();
  for (const auto& c : s.coeffs()) j.push_back({c.real(), c.imag()});
}

void from_json(const nlohmann::json& j, TruncSeries& s) {
  if (!j.is_array() || j.empty()) {
    throw InvalidParameter("series JSON must be a non-empty array of [re, im] pairs");
  }
  std::vector<cplx> c;
  c.reserve(j.size());
  for (const auto& e : j) {
    if (!e.is_array() || e.size() != 2) {
      throw InvalidParameter("series JSON entries must be [re, im] pairs");
    }
    c.emplace_back(e[0].get<double>(), e[1].get<double>());
  }
  s = TruncSeries(std::move(c));
}

}  // namespace bndrot
