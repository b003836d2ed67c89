#include "loopcalc/expr.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>

#include "loopcalc/error.hpp"

namespace loopcalc {

bool is_prime(long long n) {
  if (n < 2) return false;
  for (long long d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

Expr Expr::make(Kind kind, int a, int b, int c, std::vector<Expr> children) {
  return Expr(std::make_shared<const Node>(Node{kind, a, b, c, std::move(children)}));
}

Expr Expr::point() {
  static const Expr pt = make(Kind::Point, 0, 0, 0, {});
  return pt;
}

Expr Expr::sphere(int n) {
  if (n < 1) throw Error(ErrorCode::Parameter, "sphere dimension must be >= 1, got " + std::to_string(n));
  return make(Kind::Sphere, n, 0, 0, {});
}

Expr Expr::moore(int n, int p, int r) {
  if (n < 2) throw Error(ErrorCode::Parameter, "Moore space dimension must be >= 2, got " + std::to_string(n));
  if (!is_prime(p)) throw Error(ErrorCode::Parameter, std::to_string(p) + " is not prime");
  if (r < 1) throw Error(ErrorCode::Parameter, "Moore space exponent must be >= 1, got " + std::to_string(r));
  return make(Kind::Moore, n, p, r, {});
}

namespace {

void require_nonempty(const std::vector<Expr>& children, const char* what) {
  if (children.empty()) throw Error(ErrorCode::Arity, std::string(what) + " needs at least one argument");
}

}  // namespace

Expr Expr::wedge(std::vector<Expr> children) {
  require_nonempty(children, "wedge");
  return make(Kind::Wedge, 0, 0, 0, std::move(children));
}

Expr Expr::smash(std::vector<Expr> children) {
  require_nonempty(children, "smash");
  return make(Kind::Smash, 0, 0, 0, std::move(children));
}

Expr Expr::product(std::vector<Expr> children) {
  require_nonempty(children, "prod");
  return make(Kind::Product, 0, 0, 0, std::move(children));
}

Expr Expr::half_smash(Expr left, Expr right) {
  return make(Kind::HalfSmash, 0, 0, 0, {std::move(left), std::move(right)});
}

Expr Expr::suspend(Expr child, int times) {
  if (times < 0) throw Error(ErrorCode::Parameter, "negative suspension count");
  if (times == 0) return child;
  return make(Kind::Suspend, times, 0, 0, {std::move(child)});
}

Expr Expr::loop(Expr child) { return make(Kind::Loop, 0, 0, 0, {std::move(child)}); }

Expr Expr::james(Expr child, int k) {
  if (k < 0) throw Error(ErrorCode::Parameter, "James stage must be >= 0");
  return make(Kind::James, k, 0, 0, {std::move(child)});
}

Expr Expr::with_children(std::vector<Expr> children) const {
  return make(node_->kind, node_->a, node_->b, node_->c, std::move(children));
}

bool operator==(const Expr& a, const Expr& b) { return (a <=> b) == 0; }

std::strong_ordering operator<=>(const Expr& a, const Expr& b) {
  if (a.node_ == b.node_) return std::strong_ordering::equal;
  const auto& x = *a.node_;
  const auto& y = *b.node_;
  if (auto c = x.kind <=> y.kind; c != 0) return c;
  if (auto c = x.a <=> y.a; c != 0) return c;
  if (auto c = x.b <=> y.b; c != 0) return c;
  if (auto c = x.c <=> y.c; c != 0) return c;
  return std::lexicographical_compare_three_way(x.children.begin(), x.children.end(),
                                                y.children.begin(), y.children.end());
}

// ---------------------------------------------------------------------------
// Parser

namespace {

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  Expr parse_expr() {
    skip_ws();
    const std::size_t start = pos_;
    std::string word = identifier();
    if (word.empty()) fail(ErrorCode::Syntax, "expected an expression");

    if (word == "pt") return Expr::point();

    expect('(');
    Expr result = Expr::point();
    if (word == "S") {
      int n = natural();
      expect(')');
      result = checked(start, [&] { return Expr::sphere(n); });
    } else if (word == "P") {
      int n = natural();
      expect(',');
      int p = natural();
      expect(',');
      int r = natural();
      expect(')');
      result = checked(start, [&] { return Expr::moore(n, p, r); });
    } else if (word == "wedge" || word == "smash" || word == "prod") {
      std::vector<Expr> args = expr_list();
      expect(')');
      if (word == "wedge") result = Expr::wedge(std::move(args));
      else if (word == "smash") result = Expr::smash(std::move(args));
      else result = Expr::product(std::move(args));
    } else if (word == "hsm") {
      std::vector<Expr> args = expr_list();
      if (args.size() != 2)
        throw ParseError(ErrorCode::Arity, start, "hsm takes exactly 2 arguments, got " + std::to_string(args.size()));
      expect(')');
      result = Expr::half_smash(args[0], args[1]);
    } else if (word == "sus") {
      Expr child = parse_expr();
      int times = 1;
      if (peek(',')) {
        ++pos_;
        times = natural();
        if (times < 1) throw ParseError(ErrorCode::Parameter, start, "suspension count must be >= 1");
      }
      expect(')');
      result = Expr::suspend(child, times);
    } else if (word == "loop") {
      Expr child = parse_expr();
      expect(')');
      result = Expr::loop(child);
    } else if (word == "james") {
      Expr child = parse_expr();
      expect(',');
      int k = natural();
      expect(')');
      result = Expr::james(child, k);
    } else {
      throw ParseError(ErrorCode::Syntax, start, "unknown constructor '" + word + "'");
    }
    return result;
  }

  std::vector<Expr> expr_list() {
    std::vector<Expr> out;
    out.push_back(parse_expr());
    while (peek(',')) {
      ++pos_;
      out.push_back(parse_expr());
    }
    return out;
  }

  void finish() {
    skip_ws();
    if (pos_ != text_.size()) fail(ErrorCode::Syntax, "trailing input");
  }

 private:
  template <class F>
  Expr checked(std::size_t start, F&& f) {
    try {
      return f();
    } catch (const ParseError&) {
      throw;
    } catch (const Error& e) {
      throw ParseError(e.code(), start, e.what());
    }
  }

  [[noreturn]] void fail(ErrorCode code, const std::string& what) { throw ParseError(code, pos_, what); }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool peek(char c) {
    skip_ws();
    return pos_ < text_.size() && text_[pos_] == c;
  }

  void expect(char c) {
    if (!peek(c)) fail(ErrorCode::Syntax, std::string("expected '") + c + "'");
    ++pos_;
  }

  std::string identifier() {
    skip_ws();
    std::size_t begin = pos_;
    while (pos_ < text_.size() && std::isalpha(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    return std::string(text_.substr(begin, pos_ - begin));
  }

  int natural() {
    skip_ws();
    std::size_t begin = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (begin == pos_) fail(ErrorCode::Syntax, "expected a natural number");
    int value = 0;
    auto [ptr, ec] = std::from_chars(text_.data() + begin, text_.data() + pos_, value);
    if (ec != std::errc()) throw ParseError(ErrorCode::Parameter, begin, "number out of range");
    return value;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

Expr parse(std::string_view text) {
  Parser parser(text);
  Expr e = parser.parse_expr();
  parser.finish();
  return e;
}

std::vector<Expr> parse_list(std::string_view text) {
  Parser parser(text);
  std::vector<Expr> out = parser.expr_list();
  parser.finish();
  return out;
}

// ---------------------------------------------------------------------------

namespace {

void render_to(const Expr& e, std::string& out) {
  auto list = [&](const char* name) {
    out += name;
    out += '(';
    bool first = true;
    for (const Expr& c : e.children()) {
      if (!first) out += ',';
      first = false;
      render_to(c, out);
    }
    out += ')';
  };
  switch (e.kind()) {
    case Kind::Point: out += "pt"; break;
    case Kind::Sphere: out += "S(" + std::to_string(e.dim()) + ")"; break;
    case Kind::Moore:
      out += "P(" + std::to_string(e.dim()) + "," + std::to_string(e.prime()) + "," + std::to_string(e.power()) + ")";
      break;
    case Kind::Wedge: list("wedge"); break;
    case Kind::Smash: list("smash"); break;
    case Kind::Product: list("prod"); break;
    case Kind::HalfSmash: list("hsm"); break;
    case Kind::Suspend:
      out += "sus(";
      render_to(e.child(), out);
      if (e.times() != 1) out += "," + std::to_string(e.times());
      out += ")";
      break;
    case Kind::Loop:
      out += "loop(";
      render_to(e.child(), out);
      out += ")";
      break;
    case Kind::James:
      out += "james(";
      render_to(e.child(), out);
      out += "," + std::to_string(e.stage()) + ")";
      break;
  }
}

int add_conn(int a, int b) {
  if (a == Expr::kInfinite || b == Expr::kInfinite) return Expr::kInfinite;
  return a + b;
}

}  // namespace

std::string render(const Expr& e) {
  std::string out;
  render_to(e, out);
  return out;
}

int connectivity(const Expr& e) {
  switch (e.kind()) {
    case Kind::Point: return Expr::kInfinite;
    case Kind::Sphere: return e.dim() - 1;
    case Kind::Moore: return e.dim() - 2;
    case Kind::Wedge:
    case Kind::Product: {
      int c = Expr::kInfinite;
      for (const Expr& x : e.children()) c = std::min(c, connectivity(x));
      return c;
    }
    case Kind::Smash: {
      // sum of (conn_i + 1), minus one
      int total = 0;
      for (const Expr& x : e.children()) total = add_conn(total, add_conn(connectivity(x), 1));
      return add_conn(total, -1);
    }
    case Kind::HalfSmash: return connectivity(e.child(1));
    case Kind::Suspend: return add_conn(connectivity(e.child()), e.times());
    case Kind::Loop: return add_conn(connectivity(e.child()), -1);
    case Kind::James: return e.stage() == 0 ? Expr::kInfinite : connectivity(e.child());
  }
  return Expr::kInfinite;
}

int loop_count(const Expr& e) {
  int n = e.is(Kind::Loop) ? 1 : 0;
  for (const Expr& c : e.children()) n += loop_count(c);
  return n;
}

}  // namespace loopcalc
