#include "loopcalc/freealg.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cstdint>
#include <unordered_map>

#include <boost/multiprecision/cpp_int.hpp>

#include "loopcalc/error.hpp"

namespace loopcalc {

// ---------------------------------------------------------------------------
// Generators and polynomials

namespace {

bool ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

}  // namespace

GeneratorSet GeneratorSet::parse(std::string_view text) {
  GeneratorSet gens;
  std::size_t pos = 0;
  while (true) {
    std::size_t end = text.find(',', pos);
    std::string_view item = trim(text.substr(pos, end == std::string_view::npos ? end : end - pos));
    std::size_t colon = item.find(':');
    if (colon == std::string_view::npos) throw ParseError(ErrorCode::Syntax, pos, "expected name:degree");
    std::string_view name = trim(item.substr(0, colon));
    std::string_view deg = trim(item.substr(colon + 1));
    if (name.empty() || !ident_start(name[0]) || !std::all_of(name.begin(), name.end(), ident_char))
      throw ParseError(ErrorCode::Syntax, pos, "bad generator name '" + std::string(name) + "'");
    int d = 0;
    auto [ptr, ec] = std::from_chars(deg.data(), deg.data() + deg.size(), d);
    if (ec != std::errc() || ptr != deg.data() + deg.size())
      throw ParseError(ErrorCode::Syntax, pos, "bad degree '" + std::string(deg) + "'");
    gens.add(std::string(name), d);
    if (end == std::string_view::npos) break;
    pos = end + 1;
  }
  return gens;
}

int GeneratorSet::add(const std::string& name, int degree) {
  if (degree < 1) throw Error(ErrorCode::Parameter, "generator " + name + " needs degree >= 1");
  if (index_of(name) >= 0) throw Error(ErrorCode::Parameter, "duplicate generator " + name);
  if (names_.size() >= 255) throw Error(ErrorCode::Parameter, "too many generators");
  names_.push_back(name);
  degrees_.push_back(degree);
  return size() - 1;
}

int GeneratorSet::index_of(std::string_view name) const {
  for (std::size_t i = 0; i < names_.size(); ++i)
    if (names_[i] == name) return static_cast<int>(i);
  return -1;
}

std::vector<Integer> GeneratorSet::free_dims(int cap) const {
  std::vector<Integer> dims(static_cast<std::size_t>(cap + 1));
  dims[0] = 1;
  for (int d = 1; d <= cap; ++d)
    for (int deg : degrees_)
      if (deg <= d) dims[d] += dims[d - deg];
  return dims;
}

NcPolynomial NcPolynomial::generator(int index) { return monomial(Word(1, static_cast<char>(index))); }

NcPolynomial NcPolynomial::monomial(const Word& w, long long coeff) {
  NcPolynomial p;
  p.add_term(w, coeff);
  return p;
}

void NcPolynomial::add_term(const Word& w, long long c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(w, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

int NcPolynomial::degree(const GeneratorSet& gens) const {
  int deg = -1;
  for (const auto& [w, c] : terms_) {
    int d = 0;
    for (char g : w) d += gens.degree(static_cast<unsigned char>(g));
    if (deg >= 0 && d != deg) throw Error(ErrorCode::NotHomogeneous, to_string(gens));
    deg = d;
  }
  return deg;
}

NcPolynomial& NcPolynomial::operator+=(const NcPolynomial& o) {
  for (const auto& [w, c] : o.terms_) add_term(w, c);
  return *this;
}

NcPolynomial& NcPolynomial::operator-=(const NcPolynomial& o) {
  for (const auto& [w, c] : o.terms_) add_term(w, -c);
  return *this;
}

NcPolynomial operator*(const NcPolynomial& a, const NcPolynomial& b) {
  NcPolynomial r;
  for (const auto& [u, c] : a.terms_)
    for (const auto& [v, d] : b.terms_) r.add_term(u + v, c * d);
  return r;
}

NcPolynomial operator*(long long c, const NcPolynomial& a) {
  NcPolynomial r;
  for (const auto& [w, d] : a.terms_) r.add_term(w, c * d);
  return r;
}

std::string NcPolynomial::to_string(const GeneratorSet& gens) const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [w, c] : terms_) {
    if (out.empty()) {
      if (c < 0) out += "-";
    } else {
      out += c < 0 ? " - " : " + ";
    }
    const long long mag = c < 0 ? -c : c;
    if (mag != 1 || w.empty()) out += std::to_string(mag) + (w.empty() ? "" : "*");
    for (std::size_t i = 0; i < w.size(); ++i) {
      if (i) out += "*";
      out += gens.name(static_cast<unsigned char>(w[i]));
    }
  }
  return out;
}

NcPolynomial commutator(const NcPolynomial& a, const NcPolynomial& b) { return a * b - b * a; }

NcPolynomial ad_relator(int k, const NcPolynomial& x, const NcPolynomial& y) {
  if (k < 0) throw Error(ErrorCode::Parameter, "ad needs k >= 0");
  NcPolynomial r = y;
  for (int i = 0; i < k; ++i) r = commutator(x, r);
  return r;
}

NcPolynomial ad_relator(int k, int x, int y) {
  return ad_relator(k, NcPolynomial::generator(x), NcPolynomial::generator(y));
}

// ---------------------------------------------------------------------------
// Relator mini-language

namespace {

class RelatorParser {
 public:
  RelatorParser(std::string_view text, const GeneratorSet& gens) : text_(text), gens_(gens) {}

  std::vector<ParsedRelator> parse_all() {
    std::vector<ParsedRelator> out;
    out.push_back(relator());
    while (accept(',')) out.push_back(relator());
    skip_ws();
    if (pos_ != text_.size()) fail("trailing input");
    return out;
  }

 private:
  ParsedRelator relator() {
    skip_ws();
    const std::size_t start = pos_;
    if (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      long long v = integer();
      if (v != 0) throw ParseError(ErrorCode::Syntax, start, "a bare constant relator must be 0");
      return {};
    }
    std::string word = identifier();
    if (word.empty()) fail("expected a relator");
    if (peek('(')) {
      ++pos_;
      ParsedRelator r;
      if (word == "ad") {
        long long k = integer();
        expect(';');
        ParsedRelator x = relator();
        expect(',');
        ParsedRelator y = relator();
        r.poly = ad_relator(static_cast<int>(k), x.poly, y.poly);
        int xi = single_generator(x.poly);
        int yi = single_generator(y.poly);
        if (xi >= 0 && yi >= 0) r.ad = ParsedRelator::Ad{static_cast<int>(k), xi, yi};
      } else if (word == "com") {
        ParsedRelator a = relator();
        expect(',');
        ParsedRelator b = relator();
        r.poly = commutator(a.poly, b.poly);
      } else if (word == "sum") {
        r.poly = relator().poly;
        while (accept(',')) r.poly += relator().poly;
      } else if (word == "scale") {
        long long c = signed_integer();
        expect(',');
        r.poly = c * relator().poly;
      } else {
        throw ParseError(ErrorCode::Syntax, start, "unknown relator form '" + word + "'");
      }
      expect(')');
      return r;
    }
    ParsedRelator r;
    r.poly = NcPolynomial::generator(generator(word, start));
    while (accept('*')) {
      skip_ws();
      const std::size_t at = pos_;
      r.poly = r.poly * NcPolynomial::generator(generator(identifier(), at));
    }
    return r;
  }

  static int single_generator(const NcPolynomial& p) {
    if (p.terms().size() != 1) return -1;
    const auto& [w, c] = *p.terms().begin();
    if (w.size() != 1 || c != 1) return -1;
    return static_cast<unsigned char>(w[0]);
  }

  int generator(const std::string& name, std::size_t at) {
    if (name.empty()) throw ParseError(ErrorCode::Syntax, at, "expected a generator name");
    int i = gens_.index_of(name);
    if (i < 0) throw ParseError(ErrorCode::Parameter, at, "unknown generator '" + name + "'");
    return i;
  }

  [[noreturn]] void fail(const std::string& what) { throw ParseError(ErrorCode::Syntax, pos_, what); }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool peek(char c) {
    skip_ws();
    return pos_ < text_.size() && text_[pos_] == c;
  }

  bool accept(char c) {
    if (!peek(c)) return false;
    ++pos_;
    return true;
  }

  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }

  std::string identifier() {
    skip_ws();
    std::size_t begin = pos_;
    if (pos_ < text_.size() && ident_start(text_[pos_]))
      while (pos_ < text_.size() && ident_char(text_[pos_])) ++pos_;
    return std::string(text_.substr(begin, pos_ - begin));
  }

  long long integer() {
    skip_ws();
    std::size_t begin = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    long long v = 0;
    auto [ptr, ec] = std::from_chars(text_.data() + begin, text_.data() + pos_, v);
    if (begin == pos_ || ec != std::errc()) throw ParseError(ErrorCode::Syntax, begin, "expected an integer");
    return v;
  }

  long long signed_integer() {
    bool neg = accept('-');
    long long v = integer();
    return neg ? -v : v;
  }

  std::string_view text_;
  const GeneratorSet& gens_;
  std::size_t pos_ = 0;
};

}  // namespace

std::vector<ParsedRelator> parse_relators(std::string_view text, const GeneratorSet& gens) {
  return RelatorParser(text, gens).parse_all();
}

// ---------------------------------------------------------------------------
// Quotient Hilbert series
//
// Degreewise normal forms. With I the ideal, I_d = Σ_x x·I_{d-|x|} + Σ_r r·T_{d-|r|}.
// If Std_e is a basis of T_e modulo I_e for e < d, the words x·s (s ∈ Std)
// span T_d modulo Σ_x x·I, and the remaining relations are r·s with
// s ∈ Std_{d-|r|}, written in that spanning set. Row reduction picks Std_d
// and the normal forms of the eliminated words.

namespace {

struct PrimeField {
  using Val = std::uint32_t;
  std::uint32_t p;

  Val from(long long c) const {
    long long r = c % static_cast<long long>(p);
    return static_cast<Val>(r < 0 ? r + p : r);
  }
  Val add(Val a, Val b) const { return static_cast<Val>((std::uint64_t{a} + b) % p); }
  Val sub(Val a, Val b) const { return static_cast<Val>((std::uint64_t{a} + p - b) % p); }
  Val mul(Val a, Val b) const { return static_cast<Val>(std::uint64_t{a} * b % p); }
  Val neg(Val a) const { return a == 0 ? 0 : p - a; }
  Val inv(Val a) const {
    std::uint64_t result = 1;
    std::uint64_t base = a;
    for (std::uint32_t e = p - 2; e; e >>= 1) {
      if (e & 1) result = result * base % p;
      base = base * base % p;
    }
    return static_cast<Val>(result);
  }
  static bool zero(Val a) { return a == 0; }
};

struct RationalField {
  using Val = boost::multiprecision::cpp_rational;

  Val from(long long c) const { return Val(c); }
  Val add(const Val& a, const Val& b) const { return a + b; }
  Val sub(const Val& a, const Val& b) const { return a - b; }
  Val mul(const Val& a, const Val& b) const { return a * b; }
  Val neg(const Val& a) const { return -a; }
  Val inv(const Val& a) const { return 1 / a; }
  static bool zero(const Val& a) { return a == 0; }
};

template <class F>
class QuotientSolver {
  using Val = typename F::Val;
  using Vec = std::vector<std::pair<Word, Val>>;  // sorted by word
  using Row = std::map<int, Val>;

 public:
  QuotientSolver(F field, const GeneratorSet& gens, std::vector<std::pair<NcPolynomial, int>> relators)
      : f_(field), gens_(gens), relators_(std::move(relators)) {}

  std::vector<Integer> run(int cap) {
    std::vector<Integer> dims(static_cast<std::size_t>(cap + 1));
    std_.assign(static_cast<std::size_t>(cap + 1), {});
    pivot_nf_.assign(static_cast<std::size_t>(cap + 1), {});
    std_[0] = {Word()};
    dims[0] = 1;
    for (int d = 1; d <= cap; ++d) {
      solve_degree(d);
      dims[d] = static_cast<long long>(std_[d].size());
    }
    return dims;
  }

 private:
  int degree_of(const Word& w) const {
    int d = 0;
    for (char g : w) d += gens_.degree(static_cast<unsigned char>(g));
    return d;
  }

  void solve_degree(int d) {
    std::vector<Word> cols;
    for (int x = 0; x < gens_.size(); ++x) {
      const int rest = d - gens_.degree(x);
      if (rest < 0) continue;
      for (const Word& s : std_[rest]) cols.push_back(Word(1, static_cast<char>(x)) + s);
    }
    std::sort(cols.begin(), cols.end());
    std::unordered_map<Word, int> index;
    index.reserve(cols.size());
    for (std::size_t i = 0; i < cols.size(); ++i) index.emplace(cols[i], static_cast<int>(i));

    // forward elimination; each stored row starts at its pivot
    std::map<int, Row> pivots;
    for (const auto& [r, rdeg] : relators_) {
      if (rdeg > d) continue;
      for (const Word& s : std_[d - rdeg]) {
        Row row;
        for (const auto& [w, c] : r.terms()) {
          const Val cv = f_.from(c);
          if (F::zero(cv)) continue;
          const char x = w[0];
          for (const auto& [u, v] : normal_form(w.substr(1) + s)) {
            auto it = index.find(Word(1, x) + u);
            accumulate(row, it->second, f_.mul(cv, v));
          }
        }
        while (!row.empty()) {
          auto lead = row.begin();
          auto pv = pivots.find(lead->first);
          if (pv == pivots.end()) {
            const Val scale = f_.inv(lead->second);
            for (auto& [col, v] : row) v = f_.mul(v, scale);
            pivots.emplace(lead->first, std::move(row));
            break;
          }
          const Val factor = lead->second;
          for (const auto& [col, v] : pv->second) accumulate(row, col, f_.neg(f_.mul(factor, v)));
        }
      }
    }

    // back substitution, highest pivot first
    for (auto it = pivots.rbegin(); it != pivots.rend(); ++it) {
      Row& row = it->second;
      std::vector<std::pair<int, Val>> hits;
      for (auto e = std::next(row.begin()); e != row.end(); ++e)
        if (pivots.count(e->first)) hits.push_back(*e);
      for (const auto& [col, factor] : hits)
        for (const auto& [c2, v] : pivots.at(col)) accumulate(row, c2, f_.neg(f_.mul(factor, v)));
    }

    for (std::size_t i = 0; i < cols.size(); ++i)
      if (!pivots.count(static_cast<int>(i))) std_[d].push_back(cols[i]);
    auto& nf = pivot_nf_[d];
    for (const auto& [col, row] : pivots) {
      Vec v;
      for (auto e = std::next(row.begin()); e != row.end(); ++e) v.emplace_back(cols[e->first], f_.neg(e->second));
      nf.emplace(cols[col], std::move(v));
    }
  }

  void accumulate(Row& row, int col, const Val& v) {
    if (F::zero(v)) return;
    auto [it, inserted] = row.try_emplace(col, v);
    if (!inserted) {
      it->second = f_.add(it->second, v);
      if (F::zero(it->second)) row.erase(it);
    }
  }

  // Normal form of a word of degree < current degree, in Std coordinates.
  const Vec& normal_form(const Word& w) {
    auto hit = cache_.find(w);
    if (hit != cache_.end()) return hit->second;
    Vec result;
    if (w.empty()) {
      result.emplace_back(Word(), f_.from(1));
    } else {
      const char x = w[0];
      const auto& table = pivot_nf_[static_cast<std::size_t>(degree_of(w))];
      std::map<Word, Val> acc;
      auto add = [&](const Word& u, const Val& v) {
        auto [it, inserted] = acc.try_emplace(u, v);
        if (!inserted) it->second = f_.add(it->second, v);
      };
      for (const auto& [s, c] : normal_form(w.substr(1))) {
        Word xs = Word(1, x) + s;
        auto p = table.find(xs);
        if (p == table.end()) {
          add(xs, c);
        } else {
          for (const auto& [u, v] : p->second) add(u, f_.mul(c, v));
        }
      }
      for (auto& [u, v] : acc)
        if (!F::zero(v)) result.emplace_back(u, v);
    }
    return cache_.emplace(w, std::move(result)).first->second;
  }

  F f_;
  const GeneratorSet& gens_;
  std::vector<std::pair<NcPolynomial, int>> relators_;
  std::vector<std::vector<Word>> std_;
  std::vector<std::unordered_map<Word, Vec>> pivot_nf_;
  std::unordered_map<Word, Vec> cache_;
};

}  // namespace

GradedSeries hilbert_quotient_oracle(const GeneratorSet& gens, const std::vector<NcPolynomial>& relators,
                                     FieldTag field, int cap, long long budget) {
  if (gens.empty()) throw Error(ErrorCode::EmptyGenerators, "no generators");
  if (cap < 0) throw Error(ErrorCode::Parameter, "negative cap");
  std::vector<Integer> free = gens.free_dims(cap);
  for (int d = 0; d <= cap; ++d)
    if (free[d] > budget)
      throw Error(ErrorCode::MatrixBudgetExceeded, "degree " + std::to_string(d) + " has " + free[d].str() +
                                                       " words (budget " + std::to_string(budget) + ")");
  std::vector<std::pair<NcPolynomial, int>> rels;
  for (const NcPolynomial& r : relators) {
    const int deg = r.degree(gens);
    if (deg < 0) continue;
    if (deg == 0) throw Error(ErrorCode::Parameter, "constant relator");
    rels.emplace_back(r, deg);
  }
  std::vector<Integer> dims;
  if (field.is_rational()) {
    dims = QuotientSolver<RationalField>(RationalField{}, gens, rels).run(cap);
  } else {
    dims = QuotientSolver<PrimeField>(PrimeField{static_cast<std::uint32_t>(field.characteristic())}, gens, rels)
               .run(cap);
  }
  return GradedSeries::from_coeffs(field, std::move(dims));
}

GradedSeries hilbert_product_formula(int m, int n, int k, FieldTag field, int cap) {
  if (m < 1 || n < 1 || k < 1) throw Error(ErrorCode::Parameter, "m, n, k must be >= 1");
  GradedSeries one = GradedSeries::one(field, cap);
  GradedSeries chi(field, cap);
  for (int t = 0; t < k; ++t) chi = chi + GradedSeries::monomial(field, cap, t * m + n);
  return invert(one - GradedSeries::monomial(field, cap, m)) * invert(one - chi);
}

}  // namespace loopcalc
