#pragma once

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

#include <nlohmann/json.hpp>

namespace bndrot {

using cplx = std::complex<double>;

/// Default threshold below which a constant term is treated as zero by
/// div, log and pow_real.
inline constexpr double kDefaultDivEps = 1e-12;

/// Truncated complex power series c_0 + c_1 z + ... + c_N z^N.
///
/// The truncation order N is part of the value. Binary operations produce a
/// result whose order is the smaller of the two operand orders; nothing is
/// ever zero-padded past what an operand actually knows. Coefficients are
/// stored exactly as given and must all be finite.
class TruncSeries {
 public:
  /// The zero series of the given order.
  explicit TruncSeries(std::size_t order = 0);
  explicit TruncSeries(std::vector<cplx> coeffs);
  TruncSeries(std::initializer_list<cplx> coeffs);

  static TruncSeries constant(cplx c, std::size_t order);
  /// The series z (zero if order is 0).
  static TruncSeries identity(std::size_t order);

  std::size_t order() const noexcept { return coeffs_.size() - 1; }
  std::span<const cplx> coeffs() const noexcept { return coeffs_; }
  const cplx& operator[](std::size_t n) const { return coeffs_.at(n); }

  /// Copy truncated to min(order(), n).
  TruncSeries truncated(std::size_t n) const;

  friend bool operator==(const TruncSeries&, const TruncSeries&) = default;

 private:
  std::vector<cplx> coeffs_;
};

enum class ArithOp { add, sub, mul };
enum class DeriveMode { d_dz, z_d_dz };

TruncSeries arith(const TruncSeries& a, const TruncSeries& b, ArithOp op);

TruncSeries operator+(const TruncSeries& a, const TruncSeries& b);
TruncSeries operator-(const TruncSeries& a, const TruncSeries& b);
TruncSeries operator*(const TruncSeries& a, const TruncSeries& b);
TruncSeries operator*(cplx s, const TruncSeries& a);

/// Quotient q with q*b = a to order min(a.order(), b.order()).
/// Throws DivisionBySmallConstant if |b_0| <= eps.
TruncSeries div(const TruncSeries& a, const TruncSeries& b,
                double eps = kDefaultDivEps);

/// d_dz lowers the order by one (an order-0 input gives the zero constant);
/// z_d_dz keeps the order.
TruncSeries derive(const TruncSeries& s, DeriveMode mode);

/// Termwise antiderivative with zero constant term; raises the order by one.
TruncSeries integrate(const TruncSeries& s);

TruncSeries exp(const TruncSeries& s);
/// Principal branch at the constant term.
TruncSeries log(const TruncSeries& s, double eps = kDefaultDivEps);
/// exp(alpha * log s). Throws DivisionBySmallConstant if |s_0| <= eps.
TruncSeries pow_real(const TruncSeries& s, double alpha,
                     double eps = kDefaultDivEps);

/// outer(inner(z)). Requires inner[0] == 0 exactly, else NonzeroInnerConstant.
TruncSeries compose(const TruncSeries& outer, const TruncSeries& inner);

/// Partial sum by Horner's rule.
cplx evaluate(const TruncSeries& s, cplx z);

/// Rough size of the dropped tail at radius r: the larger of the last two
/// coefficient moduli times r^(N+1)/(1-r).
double tail_estimate(const TruncSeries& s, double r);

/// Floating-point error bound for evaluate(s, z) at |z| = r:
/// gamma_{4N+8} * sum |c_n| r^n (Horner in complex arithmetic).
double rounding_bound(const TruncSeries& s, double r);

// JSON: array of [re, im] pairs, index = power.
void to_json(nlohmann::json& j, const TruncSeries& s);
void from_json(const nlohmann::json& j, TruncSeries& s);

}  // namespace bndrot
