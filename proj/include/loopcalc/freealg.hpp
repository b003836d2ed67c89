#pragma once

// Graded free associative algebras T(V), homogeneous relators and Hilbert
// series of quotients T(V)/(R).

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "loopcalc/series.hpp"

namespace loopcalc {

class GeneratorSet {
 public:
  GeneratorSet() = default;
  /// "x:2,y:3". Throws ParseError / Error(Parameter) on bad input.
  static GeneratorSet parse(std::string_view text);

  /// Returns the index of the new generator.
  int add(const std::string& name, int degree);
  /// -1 when absent.
  int index_of(std::string_view name) const;

  int size() const { return static_cast<int>(names_.size()); }
  bool empty() const { return names_.empty(); }
  const std::string& name(int i) const { return names_[static_cast<std::size_t>(i)]; }
  int degree(int i) const { return degrees_[static_cast<std::size_t>(i)]; }

  /// Number of words of each degree 0..cap.
  std::vector<Integer> free_dims(int cap) const;

 private:
  std::vector<std::string> names_;
  std::vector<int> degrees_;
};

/// A word is a string whose characters are generator indices.
using Word = std::string;

/// Integer combination of words; reduced modulo p only when a rank is taken.
class NcPolynomial {
 public:
  NcPolynomial() = default;
  static NcPolynomial generator(int index);
  static NcPolynomial monomial(const Word& w, long long coeff = 1);

  const std::map<Word, long long>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  /// Total degree; -1 for zero. Throws NotHomogeneous for mixed degrees.
  int degree(const GeneratorSet& gens) const;

  NcPolynomial& operator+=(const NcPolynomial& o);
  NcPolynomial& operator-=(const NcPolynomial& o);
  friend NcPolynomial operator+(NcPolynomial a, const NcPolynomial& b) { return a += b; }
  friend NcPolynomial operator-(NcPolynomial a, const NcPolynomial& b) { return a -= b; }
  /// Concatenation product.
  friend NcPolynomial operator*(const NcPolynomial& a, const NcPolynomial& b);
  friend NcPolynomial operator*(long long c, const NcPolynomial& a);
  friend bool operator==(const NcPolynomial&, const NcPolynomial&) = default;

  /// "x*x*y - 2*x*y*x + y*x*x"; "0" for zero.
  std::string to_string(const GeneratorSet& gens) const;

 private:
  void add_term(const Word& w, long long c);
  std::map<Word, long long> terms_;
};

/// ab - ba.
NcPolynomial commutator(const NcPolynomial& a, const NcPolynomial& b);
/// ad^0(x)(y) = y, ad^k(x)(y) = x·ad^{k-1} - ad^{k-1}·x.
NcPolynomial ad_relator(int k, const NcPolynomial& x, const NcPolynomial& y);
NcPolynomial ad_relator(int k, int x, int y);

/// A relator together with its ad(k;x,y) shape when it was written that way
/// with generator arguments.
struct ParsedRelator {
  NcPolynomial poly;
  struct Ad {
    int k;
    int x;
    int y;
  };
  std::optional<Ad> ad;
};

/// Comma-separated relators in the mini-language
///   ad(k;p,q) | com(p,q) | sum(p,...) | scale(c,p) | x*y*x | 0
std::vector<ParsedRelator> parse_relators(std::string_view text, const GeneratorSet& gens);

inline constexpr long long kDefaultMatrixBudget = 200000;

/// dim_d T(V)/(R) for d = 0..cap by exact linear algebra over `field`.
/// Throws EmptyGenerators, NotHomogeneous, and MatrixBudgetExceeded when the
/// number of words of some degree <= cap exceeds `budget`.
GradedSeries hilbert_quotient_oracle(const GeneratorSet& gens, const std::vector<NcPolynomial>& relators,
                                     FieldTag field, int cap, long long budget = kDefaultMatrixBudget);

/// 1/(1 - t^m) · 1/(1 - Σ_{t=0}^{k-1} t^{tm+n}).
GradedSeries hilbert_product_formula(int m, int n, int k, FieldTag field, int cap);

}  // namespace loopcalc
