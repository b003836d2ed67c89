#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "loopcalc/corpus.hpp"
#include "loopcalc/error.hpp"
#include "loopcalc/rewrite.hpp"
#include "loopcalc/series.hpp"

using namespace loopcalc;

namespace {

std::vector<std::string> summand_text(const WedgeNormalForm& nf) {
  std::vector<std::string> out;
  for (const Expr& s : nf.summands) out.push_back(render(s));
  return out;
}

using Strings = std::vector<std::string>;

}  // namespace

TEST_CASE("normal form examples") {
  WedgeNormalForm a = normalize(parse("sus(prod(S(2),S(3)))"), 10);
  CHECK(summand_text(a) == Strings{"S(3)", "S(4)", "S(6)"});
  CHECK(a.complete);

  WedgeNormalForm b = normalize(parse("smash(P(3,3,1),P(3,3,1))"), 10);
  CHECK(summand_text(b) == Strings{"P(5,3,1)", "P(6,3,1)"});
  CHECK(b.complete);

  WedgeNormalForm c = normalize(parse("hsm(loop(S(3)),S(4))"), 11);
  CHECK(summand_text(c) == Strings{"S(4)", "S(6)", "S(8)", "S(10)"});
  CHECK_FALSE(c.complete);

  WedgeNormalForm d = normalize(parse("smash(P(3,2,1),P(3,2,1))"), 10);
  REQUIRE(d.summands.size() == 1);
  CHECK(summand_kind(d.summands[0]) == SummandKind::Residue);
  CHECK(render(d.summands[0]) == "smash(P(3,2,1),P(3,2,1))");
}

TEST_CASE("mixed Moore parameters stay residues") {
  WedgeNormalForm nf = normalize(parse("smash(P(3,3,1),P(3,5,1))"), 10);
  REQUIRE(nf.summands.size() == 1);
  CHECK(summand_kind(nf.summands[0]) == SummandKind::Residue);
  WedgeNormalForm r = normalize(parse("smash(P(3,3,1),P(3,3,2))"), 10);
  REQUIRE(r.summands.size() == 1);
  CHECK(summand_kind(r.summands[0]) == SummandKind::Residue);
}

TEST_CASE("Moore and sphere smashes") {
  CHECK(summand_text(normalize(parse("smash(S(2),P(3,5,1))"), 12)) == Strings{"P(5,5,1)"});
  CHECK(summand_text(normalize(parse("smash(S(2),pt,S(3))"), 12)).empty());
  CHECK(summand_text(normalize(parse("wedge(S(3),pt,S(1))"), 12)) == Strings{"S(1)", "S(3)"});
}

TEST_CASE("summands at or above the cap are dropped") {
  WedgeNormalForm nf = normalize(parse("wedge(S(2),S(9))"), 8);
  CHECK(summand_text(nf) == Strings{"S(2)"});
  CHECK_FALSE(nf.complete);
  WedgeNormalForm j = normalize(parse("sus(james(S(2),3))"), 20);
  CHECK(summand_text(j) == Strings{"S(3)", "S(5)", "S(7)"});
  CHECK(j.complete);
}

TEST_CASE("summand order: connectivity, then sphere before Moore before residue") {
  WedgeNormalForm nf = normalize(parse("wedge(P(4,3,1),smash(P(3,2,1),P(3,2,1)),S(3),S(2))"), 12);
  CHECK(summand_text(nf) == Strings{"S(2)", "S(3)", "P(4,3,1)", "smash(P(3,2,1),P(3,2,1))"});
}

TEST_CASE("loops on non simply connected spaces are refused") {
  CHECK_THROWS_AS(normalize(parse("loop(S(1))"), 8), Error);
  try {
    normalize(parse("sus(loop(wedge(S(1),S(2))))"), 8);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NotSimplyConnected);
  }
  CHECK_THROWS_AS(normalize(parse("S(2)"), 0), Error);
}

TEST_CASE("is_suspension_like") {
  CHECK(is_suspension_like(Expr::sphere(1)));
  CHECK_FALSE(is_suspension_like(parse("prod(S(2),S(3))")));
  CHECK(is_suspension_like(parse("smash(loop(S(3)),S(4))")));
  CHECK(is_suspension_like(parse("wedge(S(2),P(3,3,1))")));
  CHECK_FALSE(is_suspension_like(parse("loop(S(3))")));
}

TEST_CASE("trace examples") {
  auto t = trace(parse("sus(S(2))"), 12);
  REQUIRE(t.size() == 1);
  CHECK(t[0].rule == "R1");
  CHECK(render(t[0].before) == "sus(S(2))");
  CHECK(render(t[0].after) == "S(3)");

  auto d = trace(parse("smash(S(2),wedge(S(2),S(3)))"), 12);
  REQUIRE_FALSE(d.empty());
  CHECK(d[0].rule == "R2-distribute");

  CHECK(trace(Expr::point(), 12).empty());
}

TEST_CASE("property: folding the trace reproduces the normal form") {
  std::mt19937_64 rng(21);
  for (int i = 0; i < 200; ++i) {
    Expr e = random_expr(rng, 4);
    for (int cap : {8, 12}) {
      INFO(render(e) << " cap " << cap);
      WedgeNormalForm nf = normalize(e, cap);
      Expr folded = fold_trace(e, trace(e, cap));
      CHECK(normalize(folded, cap).summands == nf.summands);
    }
  }
}

TEST_CASE("property: soundness, idempotence, minimality, monotone truncation") {
  std::mt19937_64 rng(22);
  for (int i = 0; i < 150; ++i) {
    Expr e = random_expr(rng, 5);
    INFO(render(e));
    WedgeNormalForm low = normalize(e, 8);
    WedgeNormalForm high = normalize(e, 12);
    for (const WedgeNormalForm* nf : {&low, &high}) {
      for (FieldTag f : {FieldTag::rational(), FieldTag::prime(2), FieldTag::prime(3), FieldTag::prime(5)})
        CHECK(series_of(nf->to_expr(), f, nf->cap, false) == series_of(e, f, nf->cap, false));
      CHECK(normalize(nf->to_expr(), nf->cap).summands == nf->summands);
      CHECK(trace(nf->to_expr(), nf->cap).empty());
      for (const Expr& s : nf->summands) CHECK(connectivity(s) < nf->cap);
      for (std::size_t k = 1; k < nf->summands.size(); ++k) CHECK_FALSE(summand_less(nf->summands[k], nf->summands[k - 1]));
    }
    CHECK(restrict_to(high, 8).summands == low.summands);
    if (!high.complete) CHECK_FALSE(low.complete);
  }
}

TEST_CASE("property: half-smash splits as (A∧ΣB)∨ΣB") {
  std::mt19937_64 rng(23);
  for (int i = 0; i < 150; ++i) {
    Expr a = random_expr(rng, 3);
    Expr b = Expr::suspend(random_expr(rng, 3));
    INFO(render(a) << " ⋉ " << render(b));
    for (FieldTag f : {FieldTag::rational(), FieldTag::prime(2), FieldTag::prime(3)})
      CHECK(series_of(Expr::half_smash(a, b), f, 10, true) ==
            series_of(Expr::wedge({Expr::smash({a, b}), b}), f, 10, true));
  }
}
