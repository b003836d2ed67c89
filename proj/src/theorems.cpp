#include "loopcalc/theorems.hpp"

#include <algorithm>
#include <cstdio>
#include <functional>
#include <random>

#include "loopcalc/corpus.hpp"
#include "loopcalc/rewrite.hpp"
#include "loopcalc/simplicial.hpp"

namespace loopcalc {

using json = nlohmann::json;

namespace {

struct Entry {
  TheoremId id;
  const char* name;
  const char* schema;
  const char* anchor;
};

const Entry kEntries[] = {
    {TheoremId::Ganea, "GANEA", "{a,b} naturals >= 1 (A1=S(a), A2=S(b)) or {X,Y} expressions",
     "Ω(ΣA1∨ΣA2) ≃ ΩΣA1 × ΩΣA2 × Ω(ΣΩΣA1∧ΩΣA2)"},
    {TheoremId::Dbard, "DBARD", "{X,Y} expressions", "Ω(ΣX∨ΣY) ≃ ΩΣX × Ω(∨_{t>=0} X^∧t∧ΣY)"},
    {TheoremId::Mtypealt, "MTYPEALT", "{m,n,k} naturals >= 1",
     "H(T(x,y)/(ad^k(x)(y))) = 1/(1-t^m) · 1/(1 - Σ_{t<k} t^{tm+n})"},
    {TheoremId::Adinvcor, "ADINVCOR", "{m,n,k} naturals >= 1",
     "Ω(S^{m+1}∨S^{n+1}) ≃ ΩM_k × Ω(ΩM_k ⋉ S^{km+n+1})"},
    {TheoremId::Etype1, "ETYPE1", "{X,D,C expressions; k >= 1; gens, relators presenting H(ΩY')}",
     "E' ≃ (ΩΣX⋉C) ∨ (J_{k-1}(X)⋉ΣD), ΩY' ≃ ΩΣX × ΩE'"},
    {TheoremId::Sphereex, "SPHEREEX", "{n >= 2, m >= 2, d: m-1 integers with some d_t = ±1}",
     "ΩM ≃ ΩS^n × Ω((ΩS^n⋉C̄) ∨ ∨_{i=2}^m S^n), C̄ = S^{n-1}∧(∨_{m-2} S^n)"},
    {TheoremId::Mooreex, "MOOREEX", "{p prime, r >= 1, n >= 2, m >= 2, d: m-1 integers, some d_t a unit mod p}",
     "ΩM ≃ ΩP^{n+1} × Ω((ΩP^{n+1}⋉C̄) ∨ ∨_{i=2}^m P^{n+1}), C̄ = (P^n∧∨_{m-2}P^{n+1}) ∨ P^{2n}"},
    {TheoremId::Pdex, "PDEX", "{p odd prime, r >= 1, n >= 2, m >= 2}",
     "C̄ ≃ (P^n∧∨_{m-2}P^{n+1}) ∨ S^{2n+1} ∨ P^{2n}, ΩM ≃ ΩP^{n+1} × Ω((ΩP^{n+1}⋉C̄) ∨ ∨_{i=2}^m P^{n+1})"},
    {TheoremId::Connsum, "CONNSUM",
     "{M, N}: preset \"S<a>xS<b>\" or {gens, relators, Y?, loop?}; N needs Y (N minus its top cell)",
     "Ω(M#N) ≃ ΩM × Ω(ΩM⋉Y)"},
    {TheoremId::Inertideal, "INERTIDEAL", "{gens_X, relator_f, gens_Y, relator_g (default 0)}",
     "ΩC ≃ ΩM × Ω(ΩM⋉Y), Y = ∨ S^{|y|+1}"},
    {TheoremId::OmegachlgyXcheck, "OMEGACHLGY_XCHECK", "{instances?: [{theorem, instance}]}",
     "H(ΩY') = T(H̃(Y))/(R) agrees with the loop-space product decomposition"},
    {TheoremId::Jamescompat, "JAMESCOMPAT", "{X: list of connected expressions}",
     "Σ(∏ΩΣX_i) ≃ ∨_{k>=1} ∨_{i_1<=...<=i_k} ΣX_{i_1}∧...∧X_{i_k}"},
    {TheoremId::Cpsi, "CPSI", "{X: list of connected expressions, A: connected expression}",
     "(∏ΩΣX_i)⋉ΣA ≃ ∨_{k>=0} ∨_{i_1<=...<=i_k} X_{i_1}∧...∧X_{i_k}∧ΣA"},
    {TheoremId::Prelcofib, "PRELCOFIB",
     "{K: complex JSON, S?: missing faces (default all with >= 2 vertices), spaces} or "
     "{enumerate: {max_m, sample_m, samples, seed}, space}",
     "H̃((X,*)^{K∪S}) = H̃((X,*)^K) ⊕ ⊕_{σ∈S} ⊗_{i∈σ} H̃(X_i)"},
    {TheoremId::PolywhDomain, "POLYWH_DOMAIN", "{X: list of connected expressions, A: connected expression}",
     "domain ∨_{k>=0} ∨_{i_1<=...<=i_k} (X_{i_1}∧...∧X_{i_k})∧ΣA enumerated summand by summand"},
    {TheoremId::RewriteSoundness, "REWRITE_SOUNDNESS", "{seed, count, depth, caps: list of caps}",
     "series(normalize(e)) = series(e); normalize idempotent; truncation monotone"},
};

const Entry& entry(TheoremId id) {
  for (const Entry& e : kEntries)
    if (e.id == id) return e;
  throw Error(ErrorCode::Parameter, "unknown theorem id");
}

// ---------------------------------------------------------------------------
// instance access

[[noreturn]] void schema(const std::string& what) { throw Error(ErrorCode::SchemaMismatch, what); }

const json& field_of(const json& p, const char* key) {
  if (!p.is_object() || !p.contains(key)) schema(std::string("missing field '") + key + "'");
  return p.at(key);
}

int get_int(const json& p, const char* key, int min) {
  const json& v = field_of(p, key);
  if (!v.is_number_integer()) schema(std::string("field '") + key + "' must be an integer");
  int x = v.get<int>();
  if (x < min) schema(std::string("field '") + key + "' must be >= " + std::to_string(min));
  return x;
}

int get_int(const json& p, const char* key, int min, int fallback) {
  if (!p.is_object() || !p.contains(key)) return fallback;
  return get_int(p, key, min);
}

std::string get_str(const json& p, const char* key) {
  const json& v = field_of(p, key);
  if (!v.is_string()) schema(std::string("field '") + key + "' must be a string");
  return v.get<std::string>();
}

Expr to_expr(const json& v, const std::string& what) {
  if (!v.is_string()) schema(what + " must be an expression string");
  try {
    return parse(v.get<std::string>());
  } catch (const Error& e) {
    schema(what + ": " + e.what());
  }
}

Expr get_expr(const json& p, const char* key) { return to_expr(field_of(p, key), std::string("field '") + key + "'"); }

std::vector<Expr> get_expr_list(const json& p, const char* key) {
  const json& v = field_of(p, key);
  if (!v.is_array() || v.empty()) schema(std::string("field '") + key + "' must be a nonempty list");
  std::vector<Expr> out;
  for (const json& x : v) out.push_back(to_expr(x, std::string("entry of '") + key + "'"));
  return out;
}

std::vector<int> get_coefficients(const json& p, int count) {
  if (!p.contains("d")) return std::vector<int>(static_cast<std::size_t>(count), 1);
  const json& v = p.at("d");
  if (!v.is_array() || static_cast<int>(v.size()) != count)
    schema("field 'd' must list " + std::to_string(count) + " integers");
  std::vector<int> out;
  for (const json& x : v) {
    if (!x.is_number_integer()) schema("field 'd' must list integers");
    out.push_back(x.get<int>());
  }
  return out;
}

GeneratorSet get_gens(const json& p, const char* key) {
  try {
    return GeneratorSet::parse(get_str(p, key));
  } catch (const Error& e) {
    schema(std::string("field '") + key + "': " + e.what());
  }
}

std::vector<NcPolynomial> relator_polys(const std::string& text, const GeneratorSet& gens) {
  std::vector<NcPolynomial> out;
  try {
    for (ParsedRelator& r : parse_relators(text, gens)) out.push_back(std::move(r.poly));
  } catch (const ParseError& e) {
    schema(std::string("relators: ") + e.what());
  }
  return out;
}

void require_connected(const std::vector<Expr>& xs, const char* what) {
  for (const Expr& x : xs)
    if (connectivity(x) < 0) schema(std::string(what) + " entries must be connected: " + render(x));
}

// ---------------------------------------------------------------------------
// series helpers

GradedSeries loop_series(const Expr& e, FieldTag f, int cap) { return series_of(Expr::loop(e), f, cap, false); }
GradedSeries unreduced(const Expr& e, FieldTag f, int cap) { return series_of(e, f, cap, false); }
GradedSeries reduced(const Expr& e, FieldTag f, int cap) { return series_of(e, f, cap, true); }
GradedSeries one(FieldTag f, int cap) { return GradedSeries::one(f, cap); }
GradedSeries tpow(FieldTag f, int cap, int d, long long c = 1) { return GradedSeries::monomial(f, cap, d, c); }

Expr wedge_of(std::vector<Expr> parts) {
  if (parts.empty()) return Expr::point();
  if (parts.size() == 1) return parts.front();
  return Expr::wedge(std::move(parts));
}

std::vector<Expr> copies(const Expr& e, int n) { return std::vector<Expr>(static_cast<std::size_t>(std::max(n, 0)), e); }

// ---------------------------------------------------------------------------

struct Ctx {
  Report& report;
  int cap;
  long long budget;

  void compare(const std::string& label, const GradedSeries& lhs, const GradedSeries& rhs) {
    const int c = std::min({cap, lhs.cap(), rhs.cap()});
    report.comparisons.push_back({label, lhs.truncated(c), rhs.truncated(c)});
  }
  void check(const std::string& label, bool ok) { report.checks.push_back({label, ok}); }
};

using Checker = std::function<void(const json&, FieldTag, Ctx&)>;

// ---------------------------------------------------------------------------
// fibrations of wedges

std::pair<Expr, Expr> ganea_pair(const json& p) {
  if (p.is_object() && p.contains("a"))
    return {Expr::sphere(get_int(p, "a", 1)), Expr::sphere(get_int(p, "b", 1))};
  return {get_expr(p, "X"), get_expr(p, "Y")};
}

void check_ganea(const json& p, FieldTag f, Ctx& c) {
  auto [a1, a2] = ganea_pair(p);
  const int cap = c.cap;
  GradedSeries lhs = loop_series(Expr::wedge({Expr::suspend(a1), Expr::suspend(a2)}), f, cap);
  GradedSeries p1 = loop_series(Expr::suspend(a1), f, cap);
  GradedSeries p2 = loop_series(Expr::suspend(a2), f, cap);
  GradedSeries fibre = (p1 - one(f, cap)) * (p2 - one(f, cap));
  c.compare("P(Ω(ΣA1∨ΣA2)) vs P(ΩΣA1)·P(ΩΣA2)/(1 - Ω̃1·Ω̃2)", lhs, p1 * p2 * invert(one(f, cap) - fibre));
}

void check_dbard(const json& p, FieldTag f, Ctx& c) {
  Expr x = get_expr(p, "X");
  Expr y = get_expr(p, "Y");
  const int cap = c.cap;
  GradedSeries lhs = loop_series(Expr::wedge({Expr::suspend(x), Expr::suspend(y)}), f, cap);
  GradedSeries xt = reduced(x, f, cap);
  GradedSeries yt = reduced(y, f, cap);
  GradedSeries rhs = loop_series(Expr::suspend(x), f, cap) * invert(one(f, cap) - yt * invert(one(f, cap) - xt));
  c.compare("P(Ω(ΣX∨ΣY)) vs P(ΩΣX)/(1 - ỹ/(1-x̃))", lhs, rhs);
}

GradedSeries ad_quotient(int m, int n, int k, FieldTag f, int cap, long long budget) {
  GeneratorSet gens;
  gens.add("x", m);
  gens.add("y", n);
  return hilbert_quotient_oracle(gens, {ad_relator(k, 0, 1)}, f, cap, budget);
}

void check_mtypealt(const json& p, FieldTag f, Ctx& c) {
  const int m = get_int(p, "m", 1);
  const int n = get_int(p, "n", 1);
  const int k = get_int(p, "k", 1);
  GradedSeries oracle = ad_quotient(m, n, k, f, c.cap, c.budget);
  c.compare("oracle T(x,y)/(ad^k) vs product formula", oracle, hilbert_product_formula(m, n, k, f, c.cap));
  if (k == 1) {
    GradedSeries closed = invert(one(f, c.cap) - tpow(f, c.cap, m)) * invert(one(f, c.cap) - tpow(f, c.cap, n));
    c.compare("oracle vs 1/((1-t^m)(1-t^n))", oracle, closed);
  }
}

void check_adinvcor(const json& p, FieldTag f, Ctx& c) {
  const int m = get_int(p, "m", 1);
  const int n = get_int(p, "n", 1);
  const int k = get_int(p, "k", 1);
  const int cap = c.cap;
  GradedSeries lhs = loop_series(Expr::wedge({Expr::sphere(m + 1), Expr::sphere(n + 1)}), f, cap);
  GradedSeries h = ad_quotient(m, n, k, f, cap + 1, c.budget);
  // ΩM_k ⋉ S^{km+n+1} has reduced series H·t^{km+n+1}
  GradedSeries fibre = h * tpow(f, cap + 1, k * m + n + 1);
  c.compare("P(Ω(S^{m+1}∨S^{n+1})) vs P(ΩM_k)·P(Ω(ΩM_k⋉S^{km+n+1}))", lhs, h * loop_of_suspension(fibre));
}

void check_etype1(const json& p, FieldTag f, Ctx& c) {
  Expr x = get_expr(p, "X");
  Expr d = get_expr(p, "D");
  Expr cofibre = get_expr(p, "C");
  const int k = get_int(p, "k", 1);
  GeneratorSet gens = get_gens(p, "gens");
  std::vector<NcPolynomial> rels = relator_polys(get_str(p, "relators"), gens);
  const int cap = c.cap;
  GradedSeries lhs = hilbert_quotient_oracle(gens, rels, f, cap, c.budget);
  Expr omega = Expr::loop(Expr::suspend(x));
  Expr e_prime = Expr::wedge({Expr::half_smash(omega, cofibre), Expr::half_smash(Expr::james(x, k - 1), Expr::suspend(d))});
  c.compare("H(ΩY') vs P(ΩΣX)·P(ΩE')", lhs, unreduced(omega, f, cap) * loop_series(e_prime, f, cap));
}

// ---------------------------------------------------------------------------
// attaching a single cell to a wedge

void check_sphereex(const json& p, FieldTag f, Ctx& c) {
  const int n = get_int(p, "n", 2);
  const int m = get_int(p, "m", 2);
  std::vector<int> d = get_coefficients(p, m - 1);
  if (std::none_of(d.begin(), d.end(), [](int v) { return v == 1 || v == -1; }))
    schema("SPHEREEX needs some d_t = ±1");
  GeneratorSet gens;
  for (int i = 1; i <= m; ++i) gens.add("x" + std::to_string(i), n - 1);
  NcPolynomial rel;
  for (int j = 2; j <= m; ++j)
    rel += d[static_cast<std::size_t>(j - 2)] * commutator(NcPolynomial::generator(0), NcPolynomial::generator(j - 1));
  const int cap = c.cap;
  GradedSeries lhs = hilbert_quotient_oracle(gens, {rel}, f, cap, c.budget);

  Expr base = Expr::sphere(n);
  Expr cbar = m == 2 ? Expr::point() : Expr::smash({Expr::sphere(n - 1), wedge_of(copies(base, m - 2))});
  std::vector<Expr> fibre = copies(base, m - 1);
  fibre.insert(fibre.begin(), Expr::half_smash(Expr::loop(base), cbar));
  GradedSeries rhs = loop_series(base, f, cap) * loop_series(Expr::wedge(fibre), f, cap);
  c.compare("H(ΩM) from presentation vs P(ΩS^n)·P(Ω((ΩS^n⋉C̄)∨∨S^n))", lhs, rhs);
}

struct MooreData {
  int p, r, n, m;
};

MooreData moore_data(const json& p) {
  MooreData d{get_int(p, "p", 2), get_int(p, "r", 1), get_int(p, "n", 2), get_int(p, "m", 2)};
  if (!is_prime(d.p)) schema("p must be prime");
  return d;
}

// m(t^{n-1} + t^n): the desuspended homology of ∨_m P^{n+1}.
GradedSeries moore_generators(const MooreData& d, FieldTag f, int cap) {
  return tpow(f, cap, d.n - 1, d.m) + tpow(f, cap, d.n, d.m);
}

GradedSeries moore_fibre_side(const MooreData& d, const Expr& cbar, FieldTag f, int cap) {
  Expr top = Expr::moore(d.n + 1, d.p, d.r);
  std::vector<Expr> fibre = copies(top, d.m - 1);
  fibre.insert(fibre.begin(), Expr::half_smash(Expr::loop(top), cbar));
  return loop_series(top, f, cap) * loop_series(Expr::wedge(fibre), f, cap);
}

void check_mooreex(const json& p, FieldTag f, Ctx& c) {
  MooreData d = moore_data(p);
  std::vector<int> coeffs = get_coefficients(p, d.m - 1);
  if (std::all_of(coeffs.begin(), coeffs.end(), [&](int v) { return v % d.p == 0; }))
    schema("MOOREEX needs some d_t that is a unit mod p");
  const int cap = c.cap;
  Expr next = Expr::moore(d.n + 1, d.p, d.r);
  Expr top = Expr::moore(2 * d.n, d.p, d.r);
  Expr cbar = d.m == 2 ? top
                       : Expr::wedge({Expr::smash({Expr::moore(d.n, d.p, d.r), wedge_of(copies(next, d.m - 2))}), top});
  // inert attachment of P^{2n+1}: 1/(1 - Ṽ + Ã)
  GradedSeries attached = tpow(f, cap, 2 * d.n - 1) + tpow(f, cap, 2 * d.n);
  GradedSeries lhs = invert(one(f, cap) - moore_generators(d, f, cap) + attached);
  c.compare("1/(1 - Ṽ + Ã) vs P(ΩP^{n+1})·P(Ω((ΩP^{n+1}⋉C̄)∨∨P^{n+1}))", lhs, moore_fibre_side(d, cbar, f, cap));
}

void check_pdex(const json& p, FieldTag f, Ctx& c) {
  MooreData d = moore_data(p);
  if (d.p == 2) schema("PDEX needs an odd prime");
  const int cap = c.cap;
  Expr next = Expr::moore(d.n + 1, d.p, d.r);
  std::vector<Expr> parts;
  if (d.m >= 3) parts.push_back(Expr::smash({Expr::moore(d.n, d.p, d.r), wedge_of(copies(next, d.m - 2))}));
  parts.push_back(Expr::sphere(2 * d.n + 1));
  parts.push_back(Expr::moore(2 * d.n, d.p, d.r));
  Expr stated = Expr::wedge(parts);

  // C̃ is the cofibre of S^{2n} -> P^n ⋉ (∨_{i=2}^m P^{n+1}) (injective in
  // homology), and C̄ the cofibre of ∨_{i=2}^m P^{n+1} -> C̃.
  GradedSeries computed = reduced(Expr::half_smash(Expr::moore(d.n, d.p, d.r), wedge_of(copies(next, d.m - 1))), f, cap) -
                          tpow(f, cap, 2 * d.n) - tpow(f, cap, d.n, d.m - 1) - tpow(f, cap, d.n + 1, d.m - 1);
  c.compare("C̄: stated wedge vs cofibre count", reduced(stated, f, cap), computed);

  GradedSeries lhs = invert(one(f, cap) - moore_generators(d, f, cap) + tpow(f, cap, 2 * d.n - 1));
  c.compare("1/(1 - Ṽ + t^{2n-1}) vs P(ΩP^{n+1})·P(Ω((ΩP^{n+1}⋉C̄)∨∨P^{n+1}))", lhs, moore_fibre_side(d, stated, f, cap));
}

// ---------------------------------------------------------------------------
// connected sums and inert ideals

struct Presented {
  GeneratorSet gens;
  std::string relators;
  std::optional<Expr> loop_target;  // space whose loop series is H(ΩM)
  std::optional<Expr> minus_top;    // the space without its top cell
};

Presented presented(const json& v, const char* what) {
  Presented out;
  if (v.is_string()) {
    const std::string s = v.get<std::string>();
    int a = 0;
    int b = 0;
    if (std::sscanf(s.c_str(), "S%dxS%d", &a, &b) != 2 || a < 2 || b < 2 ||
        s != "S" + std::to_string(a) + "xS" + std::to_string(b))
      schema(std::string(what) + ": unknown preset '" + s + "' (use S<a>xS<b>, a,b >= 2)");
    out.gens.add("x", a - 1);
    out.gens.add("y", b - 1);
    out.relators = "com(x,y)";
    out.loop_target = Expr::product({Expr::sphere(a), Expr::sphere(b)});
    out.minus_top = Expr::wedge({Expr::sphere(a), Expr::sphere(b)});
    return out;
  }
  if (!v.is_object()) schema(std::string(what) + " must be a preset string or an object");
  out.gens = get_gens(v, "gens");
  out.relators = get_str(v, "relators");
  if (v.contains("loop")) out.loop_target = get_expr(v, "loop");
  if (v.contains("Y")) out.minus_top = get_expr(v, "Y");
  return out;
}

NcPolynomial single_relator(const Presented& m, const char* what) {
  std::vector<NcPolynomial> rels = relator_polys(m.relators, m.gens);
  if (rels.size() != 1) schema(std::string(what) + " needs exactly one relator");
  return rels.front();
}

NcPolynomial reindex(const NcPolynomial& poly, int offset) {
  NcPolynomial out;
  for (const auto& [w, c] : poly.terms()) {
    Word shifted = w;
    for (char& g : shifted) g = static_cast<char>(static_cast<unsigned char>(g) + offset);
    out += NcPolynomial::monomial(shifted, c);
  }
  return out;
}

// H(ΩM)·H(Ω(ΩM⋉Y)) with H(ΩM) given by its series and Y a suspension.
GradedSeries inert_product(const GradedSeries& h, const GradedSeries& y) { return h * loop_of_suspension(h * y); }

void check_connsum(const json& p, FieldTag f, Ctx& c) {
  Presented m = presented(field_of(p, "M"), "M");
  Presented n = presented(field_of(p, "N"), "N");
  if (!n.minus_top) schema("N needs Y, the space without its top cell");
  NcPolynomial rm = single_relator(m, "M");
  NcPolynomial rn = single_relator(n, "N");
  GeneratorSet both;
  for (int i = 0; i < m.gens.size(); ++i) both.add("m_" + m.gens.name(i), m.gens.degree(i));
  for (int i = 0; i < n.gens.size(); ++i) both.add("n_" + n.gens.name(i), n.gens.degree(i));
  const int cap = c.cap;
  GradedSeries lhs = hilbert_quotient_oracle(both, {rm + reindex(rn, m.gens.size())}, f, cap, c.budget);

  GradedSeries rhs(f, cap);
  if (m.loop_target) {
    rhs = loop_series(*m.loop_target, f, cap) * loop_series(Expr::half_smash(Expr::loop(*m.loop_target), *n.minus_top), f, cap);
    c.compare("H(ΩM) from presentation vs product decomposition",
              hilbert_quotient_oracle(m.gens, {rm}, f, cap, c.budget), loop_series(*m.loop_target, f, cap));
  } else {
    GradedSeries h = hilbert_quotient_oracle(m.gens, {rm}, f, cap + 1, c.budget);
    rhs = inert_product(h, reduced(*n.minus_top, f, cap + 1));
  }
  c.compare("H(Ω(M#N)) vs P(ΩM)·P(Ω(ΩM⋉Y))", lhs, rhs);
}

void check_inertideal(const json& p, FieldTag f, Ctx& c) {
  GeneratorSet gx = get_gens(p, "gens_X");
  GeneratorSet gy = get_gens(p, "gens_Y");
  GeneratorSet both = gx;
  try {
    for (int i = 0; i < gy.size(); ++i) both.add(gy.name(i), gy.degree(i));
  } catch (const Error& e) {
    schema(e.what());
  }
  std::vector<NcPolynomial> fr = relator_polys(get_str(p, "relator_f"), gx);
  std::vector<NcPolynomial> gr = relator_polys(p.contains("relator_g") ? get_str(p, "relator_g") : "0", both);
  if (fr.size() != 1 || gr.size() != 1) schema("relator_f and relator_g are single relators");
  const int cap = c.cap;
  GradedSeries lhs = hilbert_quotient_oracle(both, {fr[0] + gr[0]}, f, cap, c.budget);
  GradedSeries h = hilbert_quotient_oracle(gx, fr, f, cap + 1, c.budget);
  GradedSeries y(f, cap + 1, true);
  for (int i = 0; i < gy.size(); ++i) y = y + tpow(f, cap + 1, gy.degree(i) + 1);
  c.compare("H(ΩC) vs H(ΩM)·P(Ω(ΩM⋉Y))", lhs, inert_product(h, y));
}

// ---------------------------------------------------------------------------
// products of loops on suspensions

// Calls visit(indices) for each nondecreasing sequence over [0, count) whose
// smash (with `tail` appended) has connectivity below cap.
void monotone_sequences(const std::vector<Expr>& xs, const std::optional<Expr>& tail, int cap, bool include_empty,
                        const std::function<void(const std::vector<int>&, const Expr&)>& visit) {
  std::vector<int> seq;
  std::function<void(int)> go = [&](int start) {
    std::vector<Expr> factors;
    for (int i : seq) factors.push_back(xs[static_cast<std::size_t>(i)]);
    if (tail) factors.push_back(*tail);
    if (!factors.empty()) {
      Expr term = factors.size() == 1 ? factors.front() : Expr::smash(factors);
      if (connectivity(term) >= cap) return;
      if (!seq.empty() || include_empty) visit(seq, term);
    }
    for (int i = start; i < static_cast<int>(xs.size()); ++i) {
      seq.push_back(i);
      go(i);
      seq.pop_back();
    }
  };
  go(0);
}

Expr loops_product(const std::vector<Expr>& xs) {
  std::vector<Expr> loops;
  for (const Expr& x : xs) loops.push_back(Expr::loop(Expr::suspend(x)));
  return Expr::product(loops);
}

void check_jamescompat(const json& p, FieldTag f, Ctx& c) {
  std::vector<Expr> xs = get_expr_list(p, "X");
  require_connected(xs, "X");
  const int cap = c.cap;
  GradedSeries lhs = reduced(Expr::suspend(loops_product(xs)), f, cap);
  GradedSeries rhs(f, cap, true);
  monotone_sequences(xs, std::nullopt, cap, false, [&](const std::vector<int>&, const Expr& term) {
    rhs = rhs + reduced(Expr::suspend(term), f, cap);
  });
  c.compare("Σ(∏ΩΣX_i) vs Σ over monotone sequences", lhs, rhs);
}

void check_cpsi(const json& p, FieldTag f, Ctx& c) {
  std::vector<Expr> xs = get_expr_list(p, "X");
  Expr a = get_expr(p, "A");
  require_connected(xs, "X");
  require_connected({a}, "A");
  const int cap = c.cap;
  GradedSeries lhs = reduced(Expr::half_smash(loops_product(xs), Expr::suspend(a)), f, cap);
  c.compare("(∏ΩΣX_i)⋉ΣA vs closed form", lhs, polywh_domain_series(xs, a, f, cap));
}

void check_polywh(const json& p, FieldTag f, Ctx& c) {
  std::vector<Expr> xs = get_expr_list(p, "X");
  Expr a = get_expr(p, "A");
  require_connected(xs, "X");
  require_connected({a}, "A");
  const int cap = c.cap;
  GradedSeries lhs(f, cap, true);
  json summands = json::array();
  monotone_sequences(xs, Expr::suspend(a), cap, true, [&](const std::vector<int>& seq, const Expr& term) {
    GradedSeries s = reduced(term, f, cap);
    lhs = lhs + s;
    if (s.is_zero()) return;
    std::vector<int> one_based;
    for (int i : seq) one_based.push_back(i + 1);
    summands.push_back({{"field", f.name()}, {"indices", one_based}, {"expr", render(term)}, {"series", to_text(s)}});
  });
  for (json& s : summands) c.report.summands.push_back(std::move(s));
  c.compare("domain summands vs closed form", lhs, polywh_domain_series(xs, a, f, cap));
}

// ---------------------------------------------------------------------------
// polyhedral products

std::optional<Expr> structural_desuspension(const Expr& e) {
  switch (e.kind()) {
    case Kind::Sphere:
      if (e.dim() >= 2) return Expr::sphere(e.dim() - 1);
      return std::nullopt;
    case Kind::Moore:
      if (e.dim() >= 3) return Expr::moore(e.dim() - 1, e.prime(), e.power());
      return std::nullopt;
    case Kind::Suspend: return Expr::suspend(e.child(), e.times() - 1);
    default: return std::nullopt;
  }
}

GradedSeries face_sum(const std::vector<Face>& faces, const std::vector<GradedSeries>& x, FieldTag f, int cap) {
  GradedSeries total(f, cap, true);
  for (Face s : faces) {
    GradedSeries term = one(f, cap);
    for (int v : vertices_of(s)) term = term * x[static_cast<std::size_t>(v - 1)];
    total = total + term;
  }
  return total;
}

struct PairResult {
  std::vector<Comparison> comparisons;
  std::vector<Check> checks;
};

PairResult check_pair(const SimplicialComplex& k, const std::vector<Face>& s, const std::vector<Expr>& spaces,
                      FieldTag f, int cap) {
  PairResult out;
  std::vector<GradedSeries> x;
  for (const Expr& e : spaces) x.push_back(reduced(e, f, cap));
  SimplicialComplex kbar = add_faces(k, s);
  GradedSeries added = face_sum(s, x, f, cap);
  out.comparisons.push_back(
      {"(X,*)^{K∪S} - (X,*)^K vs Σ_{σ∈S} ∏ x̃_i", polyprod_series(kbar, spaces, f, cap) - polyprod_series(k, spaces, f, cap), added});

  std::vector<Expr> desus;
  for (const Expr& e : spaces) {
    auto d = structural_desuspension(e);
    if (!d) break;
    desus.push_back(*d);
  }
  if (desus.size() == spaces.size()) {
    Expr a = missing_face_wedge(k, s, desus);
    out.comparisons.push_back({"Σ²A vs Σ_{σ∈S} ∏ x̃_i", reduced(Expr::suspend(a, 2), f, cap), added});
  }

  bool contains_all = std::all_of(k.faces().begin(), k.faces().end(), [&](Face g) { return kbar.contains(g); }) &&
                      std::all_of(s.begin(), s.end(), [&](Face g) { return kbar.contains(g); }) &&
                      kbar.faces().size() == k.faces().size() + s.size();
  out.checks.push_back({"K∪S contains exactly K and S", contains_all});
  std::vector<Face> before = missing_faces(k);
  std::vector<Face> after = missing_faces(kbar);
  bool still_missing = true;
  for (Face g : before) {
    const bool in_s = std::find(s.begin(), s.end(), g) != s.end();
    const bool in_after = std::binary_search(after.begin(), after.end(), g);
    if (in_s == in_after) still_missing = false;
  }
  out.checks.push_back({"missing faces of K outside S stay missing in K∪S", still_missing});

  const Face all = k.m() == 0 ? 0 : (Face{1} << k.m()) - 1;
  bool retract = full_subcomplex(kbar, all) == kbar;
  GradedSeries whole = polyprod_series(kbar, spaces, f, cap);
  for (Face i = 0; i <= all && retract; ++i) {
    GradedSeries part = polyprod_series(full_subcomplex(kbar, i), spaces, f, cap);
    for (int d = 0; d <= cap; ++d)
      if (part[d] > whole[d]) retract = false;
    if (i == all) break;
  }
  out.checks.push_back({"full subcomplexes are coefficientwise below K∪S", retract});
  return out;
}

std::vector<Face> parse_face_list(const json& v) {
  if (!v.is_array()) schema("S must be a list of faces");
  std::vector<Face> out;
  try {
    for (const json& face : v) out.push_back(face_of(face.get<std::vector<int>>()));
  } catch (const nlohmann::json::exception& e) {
    schema(std::string("S: ") + e.what());
  }
  return out;
}

std::vector<Face> big_missing_faces(const SimplicialComplex& k) {
  std::vector<Face> out;
  for (Face g : missing_faces(k))
    if (face_size(g) >= 2) out.push_back(g);
  return out;
}

void check_prelcofib(const json& p, FieldTag f, Ctx& c) {
  const int cap = c.cap;
  if (p.is_object() && p.contains("enumerate")) {
    const json& en = p.at("enumerate");
    const int max_m = get_int(en, "max_m", 0, 4);
    const int sample_m = get_int(en, "sample_m", 0, 0);
    const int samples = get_int(en, "samples", 0, 0);
    const int seed = get_int(en, "seed", 0, 1);
    if (max_m > 4) schema("exhaustive enumeration is limited to max_m <= 4");
    Expr space = get_expr(p, "space");
    long long pairs = 0;
    int failures = 0;
    std::vector<bool> flags(3, true);
    bool series_ok = true;
    auto run = [&](const SimplicialComplex& k, const std::vector<Face>& s) {
      ++pairs;
      PairResult r = check_pair(k, s, copies(space, k.m()), f, cap);
      bool ok = true;
      for (const Comparison& cmp : r.comparisons)
        if (cmp.lhs.coeffs() != cmp.rhs.coeffs()) ok = series_ok = false;
      for (std::size_t i = 0; i < r.checks.size(); ++i)
        if (!r.checks[i].ok) ok = flags[i] = false;
      if (!ok && failures++ < 5)
        for (Comparison& cmp : r.comparisons)
          c.report.comparisons.push_back({cmp.label + " at K=" + k.to_json().dump(), cmp.lhs, cmp.rhs});
    };
    for (int m = 1; m <= max_m; ++m)
      for (const SimplicialComplex& k : all_complexes(m))
        for (const std::vector<Face>& s : all_subsets(big_missing_faces(k))) run(k, s);
    std::mt19937_64 rng(static_cast<std::uint64_t>(seed));
    for (int i = 0; i < samples && sample_m > 0; ++i) {
      SimplicialComplex k = random_complex(rng, sample_m);
      std::vector<Face> s;
      for (Face g : big_missing_faces(k))
        if (rng() % 2) s.push_back(g);
      run(k, s);
    }
    const std::string n = std::to_string(pairs) + " (K,S) pairs over " + f.name();
    c.check("additivity and Σ²A on " + n, series_ok);
    c.check("K∪S contains exactly K and S on " + n, flags[0]);
    c.check("missing faces outside S persist on " + n, flags[1]);
    c.check("full-subcomplex retraction bound on " + n, flags[2]);
    return;
  }
  SimplicialComplex k = SimplicialComplex::from_json(field_of(p, "K"));
  std::vector<Face> s = p.contains("S") ? parse_face_list(p.at("S")) : big_missing_faces(k);
  std::vector<Expr> spaces = get_expr_list(p, "spaces");
  if (static_cast<int>(spaces.size()) != k.m()) schema("spaces must list one entry per vertex");
  PairResult r = check_pair(k, s, spaces, f, cap);
  for (Comparison& cmp : r.comparisons) c.compare(cmp.label, cmp.lhs, cmp.rhs);
  for (Check& ch : r.checks) c.check(ch.label, ch.ok);
}

// ---------------------------------------------------------------------------
// rewriting

void check_rewrite(const json& p, FieldTag f, Ctx& c) {
  const int seed = get_int(p, "seed", 0, 1);
  const int count = get_int(p, "count", 0, 100);
  const int depth = get_int(p, "depth", 1, 5);
  std::vector<int> caps = {8, 12};
  if (p.contains("caps")) caps = p.at("caps").get<std::vector<int>>();
  if (caps.empty()) schema("caps must be nonempty");
  std::sort(caps.begin(), caps.end());
  std::mt19937_64 rng(static_cast<std::uint64_t>(seed));
  bool sound = true, idempotent = true, minimal = true, monotone = true;
  int reported = 0;
  for (int i = 0; i < count; ++i) {
    Expr e = random_expr(rng, depth);
    std::vector<WedgeNormalForm> forms;
    for (int cap : caps) {
      WedgeNormalForm wnf = normalize(e, cap);
      Expr nf = wnf.to_expr();
      GradedSeries before = series_of(e, f, cap, false);
      GradedSeries after = series_of(nf, f, cap, false);
      if (before != after) {
        sound = false;
        if (reported++ < 5) c.report.comparisons.push_back({"series of " + render(e) + " vs its normal form", before, after});
      }
      // the complete flag records what was dropped from e, which nf no longer carries
      if (normalize(nf, cap).summands != wnf.summands) idempotent = false;
      if (!trace(nf, cap).empty()) minimal = false;
      forms.push_back(std::move(wnf));
    }
    for (std::size_t j = 0; j + 1 < forms.size(); ++j) {
      const WedgeNormalForm& low = forms[j];
      const WedgeNormalForm& high = forms.back();
      WedgeNormalForm restricted = restrict_to(high, low.cap);
      if (restricted.summands != low.summands) monotone = false;
      if (!high.complete && low.complete) monotone = false;
    }
  }
  const std::string n = std::to_string(count) + " expressions over " + f.name();
  c.check("series preserved by normalize on " + n, sound);
  c.check("normalize idempotent on " + n, idempotent);
  c.check("no rule applies to normal forms on " + n, minimal);
  c.check("truncation monotone on " + n, monotone);
}

// ---------------------------------------------------------------------------

Report verify_impl(TheoremId id, const json& instance, int cap, const std::vector<FieldTag>& fields, long long budget);

void check_xcheck(const json& p, FieldTag f, Ctx& c) {
  json list = json::array();
  if (p.is_object() && p.contains("instances")) {
    list = p.at("instances");
  } else {
    list.push_back({{"theorem", "MTYPEALT"}, {"instance", {{"m", 2}, {"n", 2}, {"k", 2}}}});
    list.push_back({{"theorem", "SPHEREEX"}, {"instance", {{"n", 3}, {"m", 3}, {"d", {1, 1}}}}});
    list.push_back({{"theorem", "CONNSUM"}, {"instance", {{"M", "S2xS2"}, {"N", "S2xS2"}}}});
  }
  for (const json& item : list) {
    auto sub = theorem_from_string(get_str(item, "theorem"));
    if (!sub || *sub == TheoremId::OmegachlgyXcheck) schema("bad theorem in instances list");
    Report r = verify_impl(*sub, field_of(item, "instance"), c.cap, {f}, c.budget);
    if (r.error_code) throw Error(*r.error_code, to_string(*sub) + ": " + r.error);
    for (Comparison& cmp : r.comparisons) c.compare(to_string(*sub) + " " + r.instance.dump() + ": " + cmp.label, cmp.lhs, cmp.rhs);
  }
}

Checker checker(TheoremId id) {
  switch (id) {
    case TheoremId::Ganea: return check_ganea;
    case TheoremId::Dbard: return check_dbard;
    case TheoremId::Mtypealt: return check_mtypealt;
    case TheoremId::Adinvcor: return check_adinvcor;
    case TheoremId::Etype1: return check_etype1;
    case TheoremId::Sphereex: return check_sphereex;
    case TheoremId::Mooreex: return check_mooreex;
    case TheoremId::Pdex: return check_pdex;
    case TheoremId::Connsum: return check_connsum;
    case TheoremId::Inertideal: return check_inertideal;
    case TheoremId::OmegachlgyXcheck: return check_xcheck;
    case TheoremId::Jamescompat: return check_jamescompat;
    case TheoremId::Cpsi: return check_cpsi;
    case TheoremId::Prelcofib: return check_prelcofib;
    case TheoremId::PolywhDomain: return check_polywh;
    case TheoremId::RewriteSoundness: return check_rewrite;
  }
  throw Error(ErrorCode::Parameter, "unknown theorem id");
}

json default_hypotheses(TheoremId id) {
  switch (id) {
    case TheoremId::Etype1: return {"the presentation computes H(ΩY') and hypotheses (a)-(c) hold for X, D and ℓ"};
    case TheoremId::Connsum: return {"the attaching map of the top cell of M is inert"};
    case TheoremId::Inertideal: return {"f + g is inert"};
    case TheoremId::Mooreex:
    case TheoremId::Pdex: return {"the attaching map is inert, so H(ΩM) = 1/(1 - Ṽ + Ã)"};
    default: return json::array();
  }
}

Report verify_impl(TheoremId id, const json& instance, int cap, const std::vector<FieldTag>& fields, long long budget) {
  Report report;
  report.theorem = id;
  report.instance = instance;
  report.cap = cap;
  report.assumed_hypotheses =
      instance.is_object() && instance.contains("assumed_hypotheses") ? instance.at("assumed_hypotheses") : default_hypotheses(id);
  if (cap < 0) schema("cap must be >= 0");

  std::vector<FieldTag> use = fields.empty() ? std::vector<FieldTag>{FieldTag::rational()} : fields;
  if (id == TheoremId::Mooreex || id == TheoremId::Pdex) use = {FieldTag::prime(moore_data(instance).p)};
  report.fields_checked = use;

  Ctx ctx{report, cap, budget};
  Checker run = checker(id);
  try {
    for (FieldTag f : use) run(instance, f, ctx);
  } catch (const Error& e) {
    if (e.code() == ErrorCode::SchemaMismatch) throw;
    report.error_code = e.code();
    report.error = e.what();
  }

  report.pass = !report.error_code;
  for (const Check& ch : report.checks) {
    if (ch.ok) continue;
    report.pass = false;
    // degree -1 marks a failed structural check rather than a series mismatch
    if (!report.first_discrepancy) report.first_discrepancy = Discrepancy{ch.label, use.front(), -1, 0, 0};
  }
  for (const Comparison& cmp : report.comparisons) {
    const int top = std::min(cmp.lhs.cap(), cmp.rhs.cap());
    for (int d = 0; d <= top; ++d) {
      if (cmp.lhs[d] != cmp.rhs[d]) {
        report.pass = false;
        if (!report.first_discrepancy)
          report.first_discrepancy = Discrepancy{cmp.label, cmp.lhs.field(), d, cmp.lhs[d], cmp.rhs[d]};
        break;
      }
    }
  }
  return report;
}

// ---------------------------------------------------------------------------
// default instances

std::vector<FieldTag> fields_of(std::initializer_list<int> chars) {
  std::vector<FieldTag> out;
  for (int p : chars) out.push_back(p == 0 ? FieldTag::rational() : FieldTag::prime(p));
  return out;
}

}  // namespace

std::string to_string(TheoremId id) { return entry(id).name; }

std::optional<TheoremId> theorem_from_string(std::string_view name) {
  for (const Entry& e : kEntries)
    if (name == e.name) return e.id;
  return std::nullopt;
}

const std::vector<TheoremInfo>& list_theorems() {
  static const std::vector<TheoremInfo> rows = [] {
    std::vector<TheoremInfo> out;
    for (const Entry& e : kEntries) out.push_back({e.id, e.schema, e.anchor});
    return out;
  }();
  return rows;
}

Report verify(TheoremId id, const json& instance, int cap, const std::vector<FieldTag>& fields, long long budget) {
  return verify_impl(id, instance, cap, fields, budget);
}

std::vector<Instance> default_instances(TheoremId id, Level level) {
  const bool full = level == Level::Full;
  const auto q = fields_of({0});
  std::vector<Instance> out;
  switch (id) {
    case TheoremId::Ganea:
    case TheoremId::Dbard:
      if (!full) {
        if (id == TheoremId::Ganea) out.push_back({{{"a", 1}, {"b", 2}}, 20, fields_of({0, 2})});
        else out.push_back({{{"X", "S(2)"}, {"Y", "S(2)"}}, 12, q});
        break;
      }
      for (int a = 1; a <= 3; ++a)
        for (int b = 1; b <= 3; ++b) {
          json p = id == TheoremId::Ganea ? json{{"a", a}, {"b", b}}
                                          : json{{"X", render(Expr::sphere(a))}, {"Y", render(Expr::sphere(b))}};
          out.push_back({p, 24, fields_of({0, 2})});
        }
      out.push_back({{{"X", "P(3,3,1)"}, {"Y", "P(3,3,1)"}}, 24, fields_of({3})});
      if (id == TheoremId::Dbard) out.push_back({{{"X", "P(3,3,1)"}, {"Y", "S(2)"}}, 20, fields_of({0, 2, 3, 5})});
      break;
    case TheoremId::Mtypealt:
      if (!full) {
        out.push_back({{{"m", 2}, {"n", 2}, {"k", 1}}, 10, q});
        break;
      }
      for (int m = 1; m <= 3; ++m)
        for (int n = 1; n <= 3; ++n)
          for (int k = 1; k <= 3; ++k) out.push_back({{{"m", m}, {"n", n}, {"k", k}}, 12, fields_of({0, 2, 3})});
      break;
    case TheoremId::Adinvcor:
      if (!full) {
        out.push_back({{{"m", 2}, {"n", 2}, {"k", 2}}, 10, q});
        break;
      }
      for (int m = 1; m <= 2; ++m)
        for (int n = 1; n <= 2; ++n)
          for (int k = 1; k <= 3; ++k) out.push_back({{{"m", m}, {"n", n}, {"k", k}}, 12, fields_of({0, 2})});
      break;
    case TheoremId::Etype1: {
      auto mk = [](int k) {
        return json{{"X", "S(2)"}, {"D", "S(2)"}, {"C", "pt"}, {"k", k}, {"gens", "x:2,y:2"},
                    {"relators", "ad(" + std::to_string(k) + ";x,y)"}};
      };
      if (!full) {
        out.push_back({mk(2), 10, q});
        break;
      }
      for (int k = 1; k <= 3; ++k) out.push_back({mk(k), 12, fields_of({0, 2})});
      out.push_back({{{"X", "S(2)"}, {"D", "wedge(S(2),S(2))"}, {"C", "smash(S(2),S(3))"}, {"k", 1},
                      {"gens", "a:2,b:2,c:2"}, {"relators", "sum(com(a,b),com(a,c))"}},
                     12, fields_of({0, 2})});
      break;
    }
    case TheoremId::Sphereex:
      if (!full) {
        out.push_back({{{"n", 3}, {"m", 3}, {"d", {1, 1}}}, 10, q});
        break;
      }
      for (int n = 2; n <= 3; ++n)
        for (int m = 2; m <= 4; ++m) {
          std::vector<int> ones(static_cast<std::size_t>(m - 1), 1);
          const int cap = n == 2 ? 8 : 10;
          out.push_back({{{"n", n}, {"m", m}, {"d", ones}}, cap, fields_of({0, 2, 3})});
          if (m >= 3) {
            std::vector<int> mixed = ones;
            mixed[0] = 2;
            mixed[1] = -1;
            out.push_back({{{"n", n}, {"m", m}, {"d", mixed}}, cap, fields_of({0, 2, 3})});
          }
        }
      break;
    case TheoremId::Mooreex:
      if (!full) {
        out.push_back({{{"p", 3}, {"r", 1}, {"n", 2}, {"m", 2}, {"d", {1}}}, 10, {}});
        break;
      }
      for (int p : {3, 5})
        for (int n = 2; n <= 3; ++n)
          for (int m = 2; m <= 3; ++m)
            out.push_back({{{"p", p}, {"r", 1}, {"n", n}, {"m", m}, {"d", std::vector<int>(static_cast<std::size_t>(m - 1), 1)}}, 14, {}});
      out.push_back({{{"p", 3}, {"r", 2}, {"n", 2}, {"m", 3}, {"d", {3, 1}}}, 14, {}});
      break;
    case TheoremId::Pdex:
      out.push_back({{{"p", 3}, {"r", 1}, {"n", 2}, {"m", 2}}, 6, {}});
      if (full) {
        out.push_back({{{"p", 3}, {"r", 1}, {"n", 2}, {"m", 3}}, 12, {}});
        out.push_back({{{"p", 5}, {"r", 1}, {"n", 3}, {"m", 2}}, 12, {}});
        out.push_back({{{"p", 3}, {"r", 2}, {"n", 2}, {"m", 4}}, 12, {}});
        out.push_back({{{"p", 7}, {"r", 1}, {"n", 2}, {"m", 3}}, 12, {}});
      }
      break;
    case TheoremId::Connsum:
      if (!full) {
        out.push_back({{{"M", "S2xS2"}, {"N", "S2xS2"}}, 7, q});
        break;
      }
      out.push_back({{{"M", "S2xS2"}, {"N", "S2xS2"}}, 7, fields_of({0, 2, 3})});
      out.push_back({{{"M", "S2xS3"}, {"N", "S2xS3"}}, 10, fields_of({0, 2})});
      out.push_back({{{"M", "S3xS3"}, {"N", "S3xS3"}}, 12, fields_of({0, 2})});
      out.push_back({{{"M", {{"gens", "a:1,b:1"}, {"relators", "com(a,b)"}}}, {"N", "S2xS2"}}, 7, fields_of({0, 3})});
      break;
    case TheoremId::Inertideal:
      out.push_back({{{"gens_X", "a:1,b:1"}, {"relator_f", "com(a,b)"}, {"gens_Y", "c:2"}, {"relator_g", "c"}}, 10, q});
      if (full) {
        out.back().fields = fields_of({0, 2, 3});
        out.push_back({{{"gens_X", "a:1,b:1"}, {"relator_f", "com(a,b)"}, {"gens_Y", "c:1"}, {"relator_g", "0"}}, 10, fields_of({0, 2})});
        out.push_back({{{"gens_X", "a:2,b:2"}, {"relator_f", "ad(2;a,b)"}, {"gens_Y", "c:6"}, {"relator_g", "c"}}, 14, fields_of({0, 2})});
      }
      break;
    case TheoremId::OmegachlgyXcheck: out.push_back({json::object(), 7, full ? fields_of({0, 2, 3}) : q}); break;
    case TheoremId::Jamescompat:
      out.push_back({{{"X", {"S(1)", "S(2)"}}}, 10, q});
      if (full) {
        out.back() = {{{"X", {"S(1)", "S(2)"}}}, 12, fields_of({0, 2, 3})};
        out.push_back({{{"X", {"S(1)", "S(1)", "S(3)"}}}, 12, fields_of({0, 2})});
        out.push_back({{{"X", {"P(2,3,1)", "S(2)"}}}, 12, fields_of({0, 3})});
      }
      break;
    case TheoremId::Cpsi:
    case TheoremId::PolywhDomain:
      out.push_back({{{"X", {"S(1)"}}, {"A", "S(2)"}}, 10, q});
      if (full) {
        out.back().cap = 12;
        out.push_back({{{"X", {"S(1)", "S(1)"}}, {"A", "S(2)"}}, 12, fields_of({0, 2})});
        out.push_back({{{"X", {"S(2)", "P(3,3,1)", "S(1)"}}, {"A", "S(1)"}}, 12, fields_of({0, 3})});
      }
      break;
    case TheoremId::Prelcofib:
      if (!full) {
        out.push_back({{{"K", {{"m", 3}, {"facets", {{1}, {2}, {3}}}}},
                        {"S", {{1, 2}, {1, 3}, {2, 3}}},
                        {"spaces", {"S(2)", "S(2)", "S(2)"}}},
                       10, q});
        break;
      }
      out.push_back({{{"enumerate", {{"max_m", 4}, {"sample_m", 5}, {"samples", 300}, {"seed", 1}}}, {"space", "S(2)"}}, 12, q});
      break;
    case TheoremId::RewriteSoundness:
      out.push_back({{{"seed", 1}, {"count", full ? 500 : 25}, {"depth", full ? 5 : 4}, {"caps", {8, 12}}}, 12,
                     fields_of({0, 2, 3, 5})});
      break;
  }
  return out;
}

json to_json(const Report& r) {
  json fields = json::array();
  for (FieldTag f : r.fields_checked) fields.push_back(f.name());
  json comparisons = json::array();
  for (const Comparison& c : r.comparisons)
    comparisons.push_back({{"label", c.label}, {"field", c.lhs.field().name()}, {"lhs", to_json(c.lhs)}, {"rhs", to_json(c.rhs)}});
  json checks = json::array();
  for (const Check& c : r.checks) checks.push_back({{"label", c.label}, {"ok", c.ok}});
  json out = {{"theorem", to_string(r.theorem)},
              {"instance", r.instance},
              {"cap", r.cap},
              {"fields_checked", fields},
              {"comparisons", comparisons},
              {"checks", checks},
              {"pass", r.pass},
              {"first_discrepancy", nullptr},
              {"error", nullptr},
              {"assumed_hypotheses", r.assumed_hypotheses}};
  if (r.first_discrepancy) {
    const Discrepancy& d = *r.first_discrepancy;
    if (d.degree < 0)
      out["first_discrepancy"] = {{"label", d.label}, {"field", d.field.name()}, {"degree", nullptr}, {"check", false}};
    else
      out["first_discrepancy"] = {{"label", d.label}, {"field", d.field.name()}, {"degree", d.degree},
                                  {"lhs", integer_json(d.lhs)}, {"rhs", integer_json(d.rhs)}};
  }
  if (r.error_code) out["error"] = {{"code", to_string(*r.error_code)}, {"message", r.error}};
  if (!r.summands.is_null()) out["summands"] = r.summands;
  return out;
}

}  // namespace loopcalc
