#pragma once

// Test-only reference computations. None of these call into the series
// inversion or the degreewise quotient solver they are compared against.

#include <cstdint>
#include <functional>
#include <map>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "loopcalc/freealg.hpp"
#include "loopcalc/series.hpp"

namespace oracle {

using loopcalc::GeneratorSet;
using loopcalc::Integer;
using loopcalc::NcPolynomial;
using loopcalc::Word;

inline std::vector<long long> coeffs(const loopcalc::GradedSeries& s) {
  std::vector<long long> out;
  for (const Integer& c : s.coeffs()) out.push_back(static_cast<long long>(c));
  return out;
}

/// All words of each degree 0..cap.
inline std::vector<std::vector<Word>> words_by_degree(const GeneratorSet& gens, int cap) {
  std::vector<std::vector<Word>> out(static_cast<std::size_t>(cap + 1));
  out[0].push_back(Word());
  for (int d = 1; d <= cap; ++d)
    for (int g = 0; g < gens.size(); ++g) {
      const int rest = d - gens.degree(g);
      if (rest < 0) continue;
      for (const Word& w : out[static_cast<std::size_t>(rest)]) out[static_cast<std::size_t>(d)].push_back(static_cast<char>(g) + w);
    }
  return out;
}

/// Rank of integer rows modulo a prime p (p < 2^31).
inline int rank_mod_p(std::vector<std::vector<long long>> rows, long long p) {
  int rank = 0;
  const std::size_t cols = rows.empty() ? 0 : rows[0].size();
  for (auto& r : rows)
    for (auto& v : r) v = ((v % p) + p) % p;
  auto inv = [p](long long a) {
    long long r = 1, e = p - 2;
    for (a %= p; e; e >>= 1, a = a * a % p)
      if (e & 1) r = r * a % p;
    return r;
  };
  for (std::size_t c = 0; c < cols && rank < static_cast<int>(rows.size()); ++c) {
    std::size_t piv = static_cast<std::size_t>(rank);
    while (piv < rows.size() && rows[piv][c] == 0) ++piv;
    if (piv == rows.size()) continue;
    std::swap(rows[piv], rows[static_cast<std::size_t>(rank)]);
    auto& pr = rows[static_cast<std::size_t>(rank)];
    const long long s = inv(pr[c]);
    for (auto& v : pr) v = v * s % p;
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == static_cast<std::size_t>(rank) || rows[i][c] == 0) continue;
      const long long f = rows[i][c];
      for (std::size_t j = 0; j < cols; ++j) rows[i][j] = ((rows[i][j] - f * pr[j]) % p + p) % p;
    }
    ++rank;
  }
  return rank;
}

/// Rank over Q by fraction-free (Bareiss) elimination on big integers.
inline int rank_rational(const std::vector<std::vector<long long>>& input) {
  std::vector<std::vector<Integer>> rows;
  for (const auto& r : input) rows.emplace_back(r.begin(), r.end());
  const std::size_t cols = rows.empty() ? 0 : rows[0].size();
  int rank = 0;
  Integer prev = 1;
  for (std::size_t c = 0; c < cols && rank < static_cast<int>(rows.size()); ++c) {
    std::size_t piv = static_cast<std::size_t>(rank);
    while (piv < rows.size() && rows[piv][c] == 0) ++piv;
    if (piv == rows.size()) continue;
    std::swap(rows[piv], rows[static_cast<std::size_t>(rank)]);
    const auto& pr = rows[static_cast<std::size_t>(rank)];
    for (std::size_t i = static_cast<std::size_t>(rank) + 1; i < rows.size(); ++i) {
      for (std::size_t j = c + 1; j < cols; ++j) rows[i][j] = (pr[c] * rows[i][j] - rows[i][c] * pr[j]) / prev;
      rows[i][c] = 0;
    }
    prev = pr[c];
    ++rank;
  }
  return rank;
}

/// dim_d T(V)/(R) from the literal spanning set {a·r·b} of the ideal, for
/// characteristic 0 (p == 0) or a prime p.
inline std::vector<long long> quotient_by_triples(const GeneratorSet& gens, const std::vector<NcPolynomial>& rels, int p,
                                                  int cap) {
  auto words = words_by_degree(gens, cap);
  std::vector<long long> out;
  for (int d = 0; d <= cap; ++d) {
    const auto& basis = words[static_cast<std::size_t>(d)];
    std::map<Word, std::size_t> column;
    for (std::size_t i = 0; i < basis.size(); ++i) column[basis[i]] = i;
    std::vector<std::vector<long long>> rows;
    for (const NcPolynomial& r : rels) {
      const int rd = r.degree(gens);
      if (rd < 0 || rd > d) continue;
      for (int ad = 0; ad <= d - rd; ++ad)
        for (const Word& a : words[static_cast<std::size_t>(ad)])
          for (const Word& b : words[static_cast<std::size_t>(d - rd - ad)]) {
            std::vector<long long> row(basis.size(), 0);
            for (const auto& [w, c] : r.terms()) row[column.at(a + w + b)] += c;
            rows.push_back(std::move(row));
          }
    }
    const int rank = rows.empty() ? 0 : (p == 0 ? rank_rational(rows) : rank_mod_p(rows, p));
    out.push_back(static_cast<long long>(basis.size()) - rank);
  }
  return out;
}

/// Number of words of each degree in letters of the given degrees, by
/// counting, not by inverting 1 - Σ t^{d_i}.
inline std::vector<long long> tensor_dims(const std::vector<int>& letter_degrees, int cap) {
  std::vector<long long> n(static_cast<std::size_t>(cap + 1), 0);
  n[0] = 1;
  for (int d = 1; d <= cap; ++d)
    for (int l : letter_degrees)
      if (l <= d) n[static_cast<std::size_t>(d)] += n[static_cast<std::size_t>(d - l)];
  return n;
}

/// Σ over nondecreasing index sequences (including the empty one) of
/// ∏ x_{i_j}, each x given as a dense coefficient list, truncated at cap.
inline std::vector<long long> monotone_sum(const std::vector<std::vector<long long>>& xs, int cap) {
  std::vector<long long> total(static_cast<std::size_t>(cap + 1), 0);
  std::function<void(std::size_t, std::vector<long long>)> go = [&](std::size_t start, std::vector<long long> prod) {
    bool any = false;
    for (std::size_t d = 0; d < prod.size(); ++d) {
      total[d] += prod[d];
      any = any || prod[d] != 0;
    }
    if (!any) return;
    for (std::size_t i = start; i < xs.size(); ++i) {
      std::vector<long long> next(prod.size(), 0);
      for (std::size_t a = 0; a < prod.size(); ++a)
        for (std::size_t b = 0; a + b < prod.size(); ++b) next[a + b] += prod[a] * xs[i][b];
      go(i, std::move(next));
    }
  };
  std::vector<long long> unit(static_cast<std::size_t>(cap + 1), 0);
  unit[0] = 1;
  go(0, unit);
  return total;
}

}  // namespace oracle
