#include "loopcalc/corpus.hpp"

namespace loopcalc {

namespace {

// rng() % n keeps sequences identical across standard libraries.
int pick(std::mt19937_64& rng, int lo, int hi) {
  return lo + static_cast<int>(rng() % static_cast<std::uint64_t>(hi - lo + 1));
}

Expr random_leaf(std::mt19937_64& rng) {
  const int roll = pick(rng, 0, 9);
  if (roll == 0) return Expr::point();
  if (roll <= 6) return Expr::sphere(pick(rng, 1, 4));
  static const int primes[] = {2, 3, 5};
  return Expr::moore(pick(rng, 2, 4), primes[pick(rng, 0, 2)], pick(rng, 1, 2));
}

Expr random_loopable(std::mt19937_64& rng, int depth, bool allow_product);

Expr random_node(std::mt19937_64& rng, int depth) {
  if (depth <= 1 || pick(rng, 0, 9) < 3) return random_leaf(rng);
  auto sub = [&] { return random_node(rng, depth - 1); };
  switch (pick(rng, 0, 6)) {
    case 0: {
      std::vector<Expr> kids;
      for (int i = pick(rng, 2, 3); i > 0; --i) kids.push_back(sub());
      return Expr::wedge(std::move(kids));
    }
    case 1: {
      std::vector<Expr> kids;
      for (int i = pick(rng, 2, 3); i > 0; --i) kids.push_back(sub());
      return Expr::smash(std::move(kids));
    }
    case 2: return Expr::product({sub(), sub()});
    case 3: return Expr::half_smash(sub(), sub());
    case 4: return Expr::suspend(sub(), pick(rng, 1, 2));
    case 5: return Expr::loop(random_loopable(rng, depth - 1, true));
    default: return Expr::james(sub(), pick(rng, 0, 3));
  }
}

Expr random_loopable(std::mt19937_64& rng, int depth, bool allow_product) {
  const int roll = depth <= 1 ? pick(rng, 0, 1) : pick(rng, 0, allow_product ? 5 : 4);
  static const int primes[] = {2, 3, 5};
  switch (roll) {
    case 0: return Expr::sphere(pick(rng, 2, 4));
    case 1: return Expr::moore(pick(rng, 3, 4), primes[pick(rng, 0, 2)], pick(rng, 1, 2));
    case 2:
    case 3: return Expr::suspend(random_node(rng, depth - 1), pick(rng, 1, 2));
    case 4: return Expr::wedge({random_loopable(rng, depth - 1, false), random_loopable(rng, depth - 1, false)});
    default: return Expr::product({random_loopable(rng, depth - 1, true), random_loopable(rng, depth - 1, true)});
  }
}

}  // namespace

Expr random_expr(std::mt19937_64& rng, int depth) { return random_node(rng, depth); }

std::vector<SimplicialComplex> all_complexes(int m) {
  std::vector<SimplicialComplex> out;
  const Face top = (Face{1} << m) - 1;
  const std::uint64_t families = std::uint64_t{1} << top;  // subsets of the nonempty faces
  for (std::uint64_t mask = 0; mask < families; ++mask) {
    auto has = [&](Face f) { return f == 0 || ((mask >> (f - 1)) & 1); };
    bool closed = true;
    for (Face f = 1; f <= top && closed; ++f) {
      if (!has(f)) continue;
      for (Face bit = f; bit && closed; bit &= bit - 1)
        if (!has(f & ~(bit & -bit))) closed = false;
    }
    if (!closed) continue;
    std::vector<Face> faces;
    for (Face f = 1; f <= top; ++f)
      if (has(f)) faces.push_back(f);
    out.push_back(SimplicialComplex::from_faces(m, std::move(faces)));
  }
  return out;
}

SimplicialComplex random_complex(std::mt19937_64& rng, int m) {
  std::vector<std::vector<int>> facets;
  for (int i = pick(rng, 1, m + 1); i > 0; --i) {
    std::vector<int> facet;
    for (int v = 1; v <= m; ++v)
      if (pick(rng, 0, 1)) facet.push_back(v);
    facets.push_back(std::move(facet));
  }
  return SimplicialComplex::from_facets(m, facets);
}

std::vector<std::vector<Face>> all_subsets(const std::vector<Face>& faces) {
  std::vector<std::vector<Face>> out;
  const std::size_t n = faces.size();
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    std::vector<Face> s;
    for (std::size_t i = 0; i < n; ++i)
      if ((mask >> i) & 1) s.push_back(faces[i]);
    out.push_back(std::move(s));
  }
  return out;
}

}  // namespace loopcalc
