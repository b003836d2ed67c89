#pragma once

// Truncated graded dimension series t^0..t^cap with exact integer
// coefficients, and the homology series of space expressions.

#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>
#include <nlohmann/json.hpp>

#include "loopcalc/expr.hpp"

namespace loopcalc {

using Integer = boost::multiprecision::cpp_int;

/// ℚ (characteristic 0) or 𝔽_p.
class FieldTag {
 public:
  static FieldTag rational() { return FieldTag(0); }
  /// Throws Error(Parameter) if p is not prime.
  static FieldTag prime(int p);
  /// Accepts "q"/"Q" and "f<p>"/"F<p>".
  static FieldTag parse(std::string_view text);

  bool is_rational() const { return p_ == 0; }
  int characteristic() const { return p_; }
  /// "Q", "F2", "F3", ...
  std::string name() const;

  friend bool operator==(FieldTag, FieldTag) = default;

 private:
  explicit FieldTag(int p) : p_(p) {}
  int p_;
};

class GradedSeries {
 public:
  GradedSeries(FieldTag field, int cap, bool reduced = false);
  /// coeff * t^degree; zero if degree > cap.
  static GradedSeries monomial(FieldTag field, int cap, int degree, const Integer& coeff = 1);
  static GradedSeries one(FieldTag field, int cap) { return monomial(field, cap, 0); }
  static GradedSeries from_coeffs(FieldTag field, std::vector<Integer> coeffs, bool reduced = false);

  FieldTag field() const { return field_; }
  int cap() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool reduced() const { return reduced_; }
  void set_reduced(bool r) { reduced_ = r; }

  const std::vector<Integer>& coeffs() const { return coeffs_; }
  const Integer& operator[](int d) const { return coeffs_[static_cast<std::size_t>(d)]; }
  Integer& operator[](int d) { return coeffs_[static_cast<std::size_t>(d)]; }

  bool is_zero() const;
  /// Lowest degree with a nonzero coefficient, or -1 for the zero series.
  int valuation() const;
  GradedSeries truncated(int cap) const;

  friend bool operator==(const GradedSeries&, const GradedSeries&) = default;

 private:
  FieldTag field_;
  std::vector<Integer> coeffs_;
  bool reduced_;
};

// Arithmetic: field tags must match (FieldMismatch); the result cap is the
// smaller of the two.
GradedSeries add(const GradedSeries& a, const GradedSeries& b);
GradedSeries sub(const GradedSeries& a, const GradedSeries& b);
GradedSeries mul(const GradedSeries& a, const GradedSeries& b);
/// Requires a[0] == 1 (NotInvertible).
GradedSeries invert(const GradedSeries& a);
/// Multiplies by t^d. A negative d requires a[i] == 0 for i < -d
/// (NegativeShift) and lowers the cap by -d.
GradedSeries shift(const GradedSeries& a, int d);

GradedSeries operator+(const GradedSeries& a, const GradedSeries& b);
GradedSeries operator-(const GradedSeries& a, const GradedSeries& b);
GradedSeries operator*(const GradedSeries& a, const GradedSeries& b);

/// Sparse text form: "1 + t^2 + 2t^4", "0" for the zero series.
std::string to_text(const GradedSeries& s);
/// {"field","cap","reduced","coeffs"}; coefficients outside the 64-bit range
/// are written as decimal strings.
nlohmann::json to_json(const GradedSeries& s);
nlohmann::json integer_json(const Integer& v);

inline constexpr int kDefaultMaxCap = 64;

/// Homology dimension series of e over `field` through degree cap.
/// Loop(W) needs a simply connected W that is a product or, after
/// normalization, suspension-like; then H(ΩW) = 1/(1 - W̃/t).
GradedSeries series_of(const Expr& e, FieldTag field, int cap, bool reduced, int max_cap = kDefaultMaxCap);

/// 1/(1 - x̃/t) for a reduced series x̃ with x̃[0] = x̃[1] = 0.
GradedSeries loop_of_suspension(const GradedSeries& w);

}  // namespace loopcalc
