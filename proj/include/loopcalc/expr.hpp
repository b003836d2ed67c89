#pragma once

// Space expressions: pointed CW spaces built from spheres and Moore spaces
// by wedge, smash, product, half-smash, suspension, loops and James stages.

#include <compare>
#include <limits>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

namespace loopcalc {

enum class Kind {
  Point,
  Sphere,
  Moore,
  Wedge,
  Smash,
  Product,
  HalfSmash,
  Suspend,
  Loop,
  James,
};

/// Immutable, cheaply copyable handle to an expression tree.
///
/// Wedge, Smash and Product are n-ary and keep their children in the order
/// given; nothing is flattened or reordered at construction time.
class Expr {
 public:
  /// Connectivity of a contractible space.
  static constexpr int kInfinite = std::numeric_limits<int>::max();

  static Expr point();
  static Expr sphere(int n);
  /// P^n(p^r), the cofibre of the degree p^r map on S^{n-1}.
  static Expr moore(int n, int p, int r);
  static Expr wedge(std::vector<Expr> children);
  static Expr smash(std::vector<Expr> children);
  static Expr product(std::vector<Expr> children);
  /// left ⋉ right, the quotient of left × right by left × *.
  static Expr half_smash(Expr left, Expr right);
  /// Σ^times child. times == 0 returns child unchanged.
  static Expr suspend(Expr child, int times = 1);
  static Expr loop(Expr child);
  /// J_k(child).
  static Expr james(Expr child, int k);

  Kind kind() const { return node_->kind; }
  bool is(Kind k) const { return node_->kind == k; }

  /// Sphere/Moore dimension.
  int dim() const { return node_->a; }
  int prime() const { return node_->b; }
  int power() const { return node_->c; }
  /// Suspend count.
  int times() const { return node_->a; }
  /// James stage.
  int stage() const { return node_->a; }

  const std::vector<Expr>& children() const { return node_->children; }
  const Expr& child(std::size_t i = 0) const { return node_->children[i]; }

  /// Same node, new children (arity is not rechecked for n-ary nodes).
  Expr with_children(std::vector<Expr> children) const;

  friend bool operator==(const Expr& a, const Expr& b);
  friend std::strong_ordering operator<=>(const Expr& a, const Expr& b);

 private:
  struct Node {
    Kind kind;
    int a = 0;
    int b = 0;
    int c = 0;
    std::vector<Expr> children;
  };

  explicit Expr(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  static Expr make(Kind kind, int a, int b, int c, std::vector<Expr> children);

  std::shared_ptr<const Node> node_;
};

bool is_prime(long long n);

/// Parses the ASCII expression grammar:
///   expr := 'pt' | 'S' '(' nat ')' | 'P' '(' nat ',' nat ',' nat ')'
///         | 'wedge' '(' expr (',' expr)* ')' | 'smash' '(' ... ')'
///         | 'prod' '(' ... ')' | 'hsm' '(' expr ',' expr ')'
///         | 'sus' '(' expr (',' nat)? ')' | 'loop' '(' expr ')'
///         | 'james' '(' expr ',' nat ')'
/// Throws ParseError (Syntax, Arity or Parameter) with the byte offset.
Expr parse(std::string_view text);

/// Parses a comma-separated list of expressions, e.g. "S(2),P(3,3,1)".
std::vector<Expr> parse_list(std::string_view text);

/// Canonical text; parse(render(e)) == e.
std::string render(const Expr& e);

/// Largest c such that reduced homology vanishes through degree c over every
/// field. Computed structurally; Loop subtracts one, so loops of spaces that
/// are not simply connected get a value <= -1.
int connectivity(const Expr& e);

/// Number of Loop nodes in the tree.
int loop_count(const Expr& e);

}  // namespace loopcalc
