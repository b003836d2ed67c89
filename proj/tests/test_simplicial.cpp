#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>

#include "loopcalc/corpus.hpp"
#include "loopcalc/error.hpp"
#include "loopcalc/rewrite.hpp"
#include "loopcalc/simplicial.hpp"
#include "oracles.hpp"

using namespace loopcalc;
using oracle::coeffs;
using V = std::vector<long long>;

namespace {

const FieldTag Q = FieldTag::rational();

SimplicialComplex complex_of(int m, std::vector<std::vector<int>> facets) { return SimplicialComplex::from_facets(m, facets); }

std::vector<Face> faces(std::vector<std::vector<int>> list) {
  std::vector<Face> out;
  for (auto& f : list) out.push_back(face_of(f));
  return out;
}

std::vector<Expr> copies(const char* text, int m) { return std::vector<Expr>(static_cast<std::size_t>(m), parse(text)); }

}  // namespace

TEST_CASE("faces and validation") {
  CHECK(face_of({1, 3}) == 0b101u);
  CHECK(vertices_of(0b110u) == std::vector<int>{2, 3});
  CHECK(face_size(0b111u) == 3);
  CHECK_THROWS_AS(face_of({0}), Error);
  CHECK_THROWS_AS(SimplicialComplex::from_faces(3, {0b011u}), Error);
  CHECK_THROWS_AS(complex_of(2, {{1, 3}}), Error);
  SimplicialComplex k = SimplicialComplex::from_json(nlohmann::json::parse(R"({"m":3,"facets":[[1,2],[3]]})"));
  CHECK(k.to_json().dump() == R"({"facets":[[1,2],[3]],"m":3})");
  CHECK_THROWS_AS(SimplicialComplex::from_json(nlohmann::json::parse(R"({"m":3})")), Error);
}

TEST_CASE("missing faces") {
  CHECK(missing_faces(complex_of(3, {{1, 2}, {1, 3}, {2, 3}})) == faces({{1, 2, 3}}));
  CHECK(missing_faces(SimplicialComplex::points(3)) == faces({{1, 2}, {1, 3}, {2, 3}}));
  CHECK(missing_faces(SimplicialComplex::simplex(3)).empty());
  // a ghost vertex is a missing face of size one
  CHECK(missing_faces(complex_of(2, {{1}})) == faces({{2}}));
}

TEST_CASE("adding missing faces") {
  SimplicialComplex boundary = complex_of(3, {{1, 2}, {1, 3}, {2, 3}});
  CHECK(add_faces(SimplicialComplex::points(3), faces({{1, 2}, {1, 3}, {2, 3}})) == boundary);
  CHECK(add_faces(boundary, faces({{1, 2, 3}})) == SimplicialComplex::simplex(3));
  CHECK(add_faces(complex_of(3, {{1, 2}, {3}}), faces({{1, 3}})) == complex_of(3, {{1, 2}, {1, 3}}));
  try {
    add_faces(boundary, faces({{1, 2}}));
    FAIL("expected NotAMissingFace");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NotAMissingFace);
  }
  CHECK_THROWS_AS(add_faces(SimplicialComplex::points(3), faces({{1, 2, 3}})), Error);
}

TEST_CASE("skeleta and full subcomplexes") {
  SimplicialComplex d = SimplicialComplex::simplex(3);
  CHECK(skeleton(d, 1) == complex_of(3, {{1, 2}, {1, 3}, {2, 3}}));
  CHECK(skeleton(d, 0) == SimplicialComplex::points(3));
  CHECK(full_subcomplex(d, face_of({1, 3})) == complex_of(3, {{1, 3}}));
}

TEST_CASE("polyhedral product series") {
  CHECK(to_text(polyprod_series(SimplicialComplex::points(2), copies("S(2)", 2), Q, 8)) == "2t^2");
  CHECK(to_text(polyprod_series(SimplicialComplex::simplex(2), copies("S(2)", 2), Q, 8)) == "2t^2 + t^4");
  CHECK(to_text(polyprod_series(complex_of(3, {{1, 2}, {1, 3}, {2, 3}}), copies("S(2)", 3), Q, 8)) == "3t^2 + 3t^4");
  CHECK_THROWS_AS(polyprod_series(SimplicialComplex::points(2), copies("S(2)", 3), Q, 8), Error);
}

TEST_CASE("missing face wedge") {
  SimplicialComplex pts = SimplicialComplex::points(3);
  Expr a = missing_face_wedge(pts, faces({{1, 2}, {1, 3}, {2, 3}}), copies("S(1)", 3));
  CHECK(to_text(series_of(a, Q, 6, true)) == "3t^2");
  CHECK(to_text(series_of(Expr::suspend(a), Q, 6, true)) == "3t^3");
  Expr top = missing_face_wedge(complex_of(3, {{1, 2}, {1, 3}, {2, 3}}), faces({{1, 2, 3}}), copies("S(1)", 3));
  CHECK(render(normalize(top, 10).to_expr()) == "S(4)");
  Expr mixed = missing_face_wedge(SimplicialComplex::points(2), faces({{1, 2}}), {parse("S(1)"), parse("S(2)")});
  CHECK(render(normalize(mixed, 10).to_expr()) == "S(3)");
  try {
    missing_face_wedge(complex_of(2, {{1}}), faces({{2}}), copies("S(1)", 2));
    FAIL("expected MissingFaceTooSmall");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::MissingFaceTooSmall);
  }
}

TEST_CASE("domain series against monotone enumeration") {
  CHECK(to_text(polywh_domain_series({parse("S(1)")}, parse("S(2)"), Q, 6)) == "t^3 + t^4 + t^5 + t^6");
  CHECK(to_text(polywh_domain_series({parse("S(1)"), parse("S(1)")}, parse("S(2)"), Q, 6)) == "t^3 + 2t^4 + 3t^5 + 4t^6");
  CHECK(polywh_domain_series({parse("S(1)")}, parse("S(8)"), Q, 6).is_zero());

  const std::vector<std::vector<const char*>> lists = {{"S(1)", "S(2)"}, {"S(2)", "S(2)", "S(3)"}, {"S(1)", "wedge(S(1),S(2))"}};
  for (const auto& list : lists) {
    std::vector<Expr> xs;
    std::vector<V> x;
    for (const char* t : list) {
      xs.push_back(parse(t));
      x.push_back(coeffs(series_of(xs.back(), Q, 12, true)));
    }
    V sa = coeffs(series_of(parse("S(3)"), Q, 12, true));
    V walk = oracle::monotone_sum(x, 12);
    V expected(13, 0);
    for (std::size_t a = 0; a < 13; ++a)
      for (std::size_t b = 0; a + b < 13; ++b) expected[a + b] += walk[a] * sa[b];
    CHECK(coeffs(polywh_domain_series(xs, parse("S(2)"), Q, 12)) == expected);
  }
}

TEST_CASE("property: points give the wedge, the simplex gives the product") {
  std::mt19937_64 rng(41);
  for (int i = 0; i < 100; ++i) {
    const int m = 1 + static_cast<int>(rng() % 4);
    std::vector<Expr> xs;
    for (int j = 0; j < m; ++j) xs.push_back(random_expr(rng, 2));
    for (FieldTag f : {Q, FieldTag::prime(2)}) {
      CHECK(polyprod_series(SimplicialComplex::points(m), xs, f, 10) == series_of(Expr::wedge(xs), f, 10, true));
      CHECK(polyprod_series(SimplicialComplex::simplex(m), xs, f, 10) == series_of(Expr::product(xs), f, 10, true));
    }
  }
}

TEST_CASE("property: additivity over added missing faces, up to six vertices") {
  std::mt19937_64 rng(42);
  for (int i = 0; i < 300; ++i) {
    const int m = 2 + static_cast<int>(rng() % 5);
    SimplicialComplex k = random_complex(rng, m);
    std::vector<Face> s;
    for (Face g : missing_faces(k))
      if (face_size(g) >= 2 && rng() % 2) s.push_back(g);
    std::vector<Expr> xs;
    for (int j = 0; j < m; ++j) xs.push_back(Expr::sphere(1 + static_cast<int>(rng() % 3)));
    SimplicialComplex kbar = add_faces(k, s);
    GradedSeries added(Q, 14, true);
    for (Face g : s) {
      GradedSeries term = GradedSeries::one(Q, 14);
      for (int v : vertices_of(g)) term = term * series_of(xs[static_cast<std::size_t>(v - 1)], Q, 14, true);
      added = added + term;
    }
    CHECK(polyprod_series(kbar, xs, Q, 14) - polyprod_series(k, xs, Q, 14) == added);
    // round trip: S is exactly what was added and is no longer missing
    CHECK(kbar.faces().size() == k.faces().size() + s.size());
    for (Face g : s) CHECK(kbar.contains(g));
    for (Face g : missing_faces(kbar)) CHECK(std::find(s.begin(), s.end(), g) == s.end());
  }
}

TEST_CASE("property: full subcomplexes give coefficientwise smaller series") {
  std::mt19937_64 rng(43);
  for (int i = 0; i < 100; ++i) {
    const int m = 1 + static_cast<int>(rng() % 5);
    SimplicialComplex k = random_complex(rng, m);
    std::vector<Expr> xs(static_cast<std::size_t>(m), Expr::sphere(2));
    GradedSeries whole = polyprod_series(k, xs, Q, 12);
    const Face i_set = static_cast<Face>(rng() % (std::uint64_t{1} << m));
    GradedSeries part = polyprod_series(full_subcomplex(k, i_set), xs, Q, 12);
    for (int d = 0; d <= 12; ++d) CHECK(part[d] <= whole[d]);
  }
}

TEST_CASE("exhaustive enumeration sizes") {
  // simplicial complexes on a labelled set of at most 3 vertices, ghosts allowed
  CHECK(all_complexes(1).size() == 2);
  CHECK(all_complexes(2).size() == 5);
  CHECK(all_complexes(3).size() == 19);
  CHECK(all_complexes(4).size() == 167);
  CHECK(all_subsets(faces({{1, 2}, {1, 3}})).size() == 4);
}
