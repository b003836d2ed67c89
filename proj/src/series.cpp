#include "loopcalc/series.hpp"

#include <algorithm>
#include <charconv>
#include <cstdint>

#include "loopcalc/error.hpp"
#include "loopcalc/rewrite.hpp"

namespace loopcalc {

FieldTag FieldTag::prime(int p) {
  if (!is_prime(p)) throw Error(ErrorCode::Parameter, std::to_string(p) + " is not prime");
  return FieldTag(p);
}

FieldTag FieldTag::parse(std::string_view text) {
  if (text == "q" || text == "Q") return rational();
  if (text.size() >= 2 && (text[0] == 'f' || text[0] == 'F')) {
    int p = 0;
    auto [ptr, ec] = std::from_chars(text.data() + 1, text.data() + text.size(), p);
    if (ec == std::errc() && ptr == text.data() + text.size()) return prime(p);
  }
  throw Error(ErrorCode::Parameter, "unknown field '" + std::string(text) + "' (use q or f<p>)");
}

std::string FieldTag::name() const { return is_rational() ? "Q" : "F" + std::to_string(p_); }

GradedSeries::GradedSeries(FieldTag field, int cap, bool reduced)
    : field_(field), coeffs_(static_cast<std::size_t>(std::max(cap, 0) + 1)), reduced_(reduced) {
  if (cap < 0) throw Error(ErrorCode::Parameter, "negative cap");
}

GradedSeries GradedSeries::monomial(FieldTag field, int cap, int degree, const Integer& coeff) {
  GradedSeries s(field, cap, degree > 0);
  if (degree >= 0 && degree <= cap) s[degree] = coeff;
  return s;
}

GradedSeries GradedSeries::from_coeffs(FieldTag field, std::vector<Integer> coeffs, bool reduced) {
  if (coeffs.empty()) throw Error(ErrorCode::Parameter, "empty coefficient list");
  GradedSeries s(field, 0, reduced);
  s.coeffs_ = std::move(coeffs);
  return s;
}

bool GradedSeries::is_zero() const { return valuation() < 0; }

int GradedSeries::valuation() const {
  for (std::size_t i = 0; i < coeffs_.size(); ++i)
    if (coeffs_[i] != 0) return static_cast<int>(i);
  return -1;
}

GradedSeries GradedSeries::truncated(int cap) const {
  GradedSeries s = *this;
  s.coeffs_.resize(static_cast<std::size_t>(std::min(cap, this->cap()) + 1));
  return s;
}

namespace {

void check_fields(const GradedSeries& a, const GradedSeries& b) {
  if (a.field() != b.field())
    throw Error(ErrorCode::FieldMismatch, a.field().name() + " vs " + b.field().name());
}

}  // namespace

GradedSeries add(const GradedSeries& a, const GradedSeries& b) {
  check_fields(a, b);
  const int cap = std::min(a.cap(), b.cap());
  GradedSeries r(a.field(), cap, a.reduced() && b.reduced());
  for (int i = 0; i <= cap; ++i) r[i] = a[i] + b[i];
  return r;
}

GradedSeries sub(const GradedSeries& a, const GradedSeries& b) {
  check_fields(a, b);
  const int cap = std::min(a.cap(), b.cap());
  GradedSeries r(a.field(), cap, a.reduced() && b.reduced());
  for (int i = 0; i <= cap; ++i) r[i] = a[i] - b[i];
  return r;
}

GradedSeries mul(const GradedSeries& a, const GradedSeries& b) {
  check_fields(a, b);
  const int cap = std::min(a.cap(), b.cap());
  GradedSeries r(a.field(), cap, a.reduced() || b.reduced());
  for (int i = 0; i <= cap; ++i) {
    if (a[i] == 0) continue;
    for (int j = 0; i + j <= cap; ++j)
      if (b[j] != 0) r[i + j] += a[i] * b[j];
  }
  return r;
}

GradedSeries invert(const GradedSeries& a) {
  if (a[0] != 1) throw Error(ErrorCode::NotInvertible, "constant term must be 1");
  const int cap = a.cap();
  GradedSeries r(a.field(), cap, false);
  r[0] = 1;
  for (int n = 1; n <= cap; ++n) {
    Integer acc = 0;
    for (int i = 1; i <= n; ++i)
      if (a[i] != 0) acc += a[i] * r[n - i];
    r[n] = -acc;
  }
  return r;
}

GradedSeries shift(const GradedSeries& a, int d) {
  if (d >= 0) {
    GradedSeries r(a.field(), a.cap(), a.reduced() || (d > 0));
    for (int i = 0; i + d <= a.cap(); ++i) r[i + d] = a[i];
    return r;
  }
  const int k = -d;
  for (int i = 0; i < k && i <= a.cap(); ++i)
    if (a[i] != 0) throw Error(ErrorCode::NegativeShift, "nonzero coefficient in degree " + std::to_string(i));
  if (a.cap() < k) throw Error(ErrorCode::NegativeShift, "shift exceeds cap");
  GradedSeries r(a.field(), a.cap() - k, a.reduced());
  for (int i = 0; i <= r.cap(); ++i) r[i] = a[i + k];
  return r;
}

GradedSeries operator+(const GradedSeries& a, const GradedSeries& b) { return add(a, b); }
GradedSeries operator-(const GradedSeries& a, const GradedSeries& b) { return sub(a, b); }
GradedSeries operator*(const GradedSeries& a, const GradedSeries& b) { return mul(a, b); }

std::string to_text(const GradedSeries& s) {
  std::string out;
  for (int i = 0; i <= s.cap(); ++i) {
    const Integer& c = s[i];
    if (c == 0) continue;
    Integer mag = abs(c);
    if (out.empty()) {
      if (c < 0) out += "-";
    } else {
      out += c < 0 ? " - " : " + ";
    }
    if (i == 0 || mag != 1) out += mag.str();
    if (i >= 1) out += "t";
    if (i >= 2) out += "^" + std::to_string(i);
  }
  return out.empty() ? "0" : out;
}

nlohmann::json integer_json(const Integer& v) {
  if (v >= std::numeric_limits<std::int64_t>::min() && v <= std::numeric_limits<std::int64_t>::max())
    return static_cast<std::int64_t>(v);
  return v.str();
}

nlohmann::json to_json(const GradedSeries& s) {
  nlohmann::json coeffs = nlohmann::json::array();
  for (const Integer& c : s.coeffs()) coeffs.push_back(integer_json(c));
  return {{"field", s.field().name()}, {"cap", s.cap()}, {"reduced", s.reduced()}, {"coeffs", coeffs}};
}

GradedSeries loop_of_suspension(const GradedSeries& w) {
  GradedSeries desus = shift(w, -1);
  GradedSeries base = GradedSeries::one(w.field(), desus.cap()) - desus;
  return invert(base);
}

namespace {

class Evaluator {
 public:
  explicit Evaluator(FieldTag field) : field_(field) {}

  // Reduced series through degree cap (the cap may come back smaller by one
  // per Loop node on the path).
  GradedSeries reduced(const Expr& e, int cap) {
    switch (e.kind()) {
      case Kind::Point: return zero(cap);
      case Kind::Sphere: return GradedSeries::monomial(field_, cap, e.dim());
      case Kind::Moore: {
        GradedSeries s = zero(cap);
        if (field_.characteristic() == e.prime()) {
          if (e.dim() - 1 <= cap) s[e.dim() - 1] = 1;
          if (e.dim() <= cap) s[e.dim()] = 1;
        }
        return s;
      }
      case Kind::Wedge: {
        GradedSeries s = zero(cap);
        for (const Expr& c : e.children()) s = s + reduced(c, cap);
        return s;
      }
      case Kind::Smash: {
        GradedSeries s = reduced(e.child(0), cap);
        for (std::size_t i = 1; i < e.children().size(); ++i) s = s * reduced(e.child(i), cap);
        return s;
      }
      case Kind::Product: {
        GradedSeries s = one(cap);
        for (const Expr& c : e.children()) s = s * (one(cap) + reduced(c, cap));
        return s - one(cap);
      }
      case Kind::HalfSmash: {
        GradedSeries a = reduced(e.child(0), cap);
        GradedSeries b = reduced(e.child(1), cap);
        return a * b + b;
      }
      case Kind::Suspend: return shift(reduced(e.child(), cap), e.times());
      case Kind::James: {
        GradedSeries x = reduced(e.child(), cap);
        GradedSeries power = one(cap);
        GradedSeries s = zero(cap);
        for (int j = 1; j <= e.stage(); ++j) {
          power = power * x;
          s = s + power;
          if (power.is_zero()) break;
        }
        return s;
      }
      case Kind::Loop: return loop(e.child(), cap) - one(cap);
    }
    return zero(cap);
  }

 private:
  // Unreduced series of ΩX.
  GradedSeries loop(const Expr& x, int cap) {
    if (connectivity(x) < 1) throw Error(ErrorCode::NotSimplyConnected, "loop on " + render(x));
    if (x.is(Kind::Product)) {
      GradedSeries s = one(cap);
      for (const Expr& f : x.children()) s = s * loop(f, cap);
      return s;
    }
    if (is_suspension_like(x)) return loop_of_suspension(reduced(x, cap));
    Expr nf = normalize(x, cap).to_expr();
    if (nf.is(Kind::Point)) return one(cap);
    if (nf.is(Kind::Product)) return loop(nf, cap);
    if (!is_suspension_like(nf))
      throw Error(ErrorCode::UnsupportedLoop, "loop on " + render(x) + " (normal form " + render(nf) + ")");
    return loop_of_suspension(reduced(x, cap));
  }

  GradedSeries zero(int cap) const { return GradedSeries(field_, cap, true); }
  GradedSeries one(int cap) const { return GradedSeries::one(field_, cap); }

  FieldTag field_;
};

}  // namespace

GradedSeries series_of(const Expr& e, FieldTag field, int cap, bool reduced, int max_cap) {
  if (cap < 0) throw Error(ErrorCode::Parameter, "negative cap");
  if (cap > max_cap)
    throw Error(ErrorCode::CapOverflow, "cap " + std::to_string(cap) + " exceeds maximum " + std::to_string(max_cap));
  const int working = cap + loop_count(e);
  Evaluator ev(field);
  GradedSeries s = ev.reduced(e, working).truncated(cap);
  s.set_reduced(reduced);
  if (!reduced) s[0] += 1;
  else s[0] = 0;
  return s;
}

}  // namespace loopcalc
