#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "loopcalc/error.hpp"
#include "loopcalc/theorems.hpp"
#include "oracles.hpp"

using namespace loopcalc;
using nlohmann::json;
using oracle::coeffs;
using V = std::vector<long long>;

namespace {

const FieldTag Q = FieldTag::rational();
const FieldTag F2 = FieldTag::prime(2);
const FieldTag F3 = FieldTag::prime(3);

const Comparison& find(const Report& r, const std::string& prefix) {
  for (const Comparison& c : r.comparisons)
    if (c.label.rfind(prefix, 0) == 0) return c;
  FAIL("no comparison labelled " << prefix);
  return r.comparisons.front();
}

V even_part(const V& v) {
  V out;
  for (std::size_t i = 0; i < v.size(); i += 2) out.push_back(v[i]);
  return out;
}

}  // namespace

TEST_CASE("registry") {
  const auto& rows = list_theorems();
  CHECK(rows.size() == 16);
  CHECK(rows.front().id == TheoremId::Ganea);
  for (const TheoremInfo& info : rows) {
    CHECK(theorem_from_string(to_string(info.id)) == info.id);
    CHECK_FALSE(info.schema.empty());
    CHECK_FALSE(info.anchor.empty());
  }
  CHECK_FALSE(theorem_from_string("NOPE").has_value());
}

TEST_CASE("default instances") {
  auto m = default_instances(TheoremId::Mtypealt, Level::Quick);
  REQUIRE(m.size() == 1);
  CHECK(m[0].params == json{{"m", 2}, {"n", 2}, {"k", 1}});
  auto d = default_instances(TheoremId::Dbard, Level::Quick);
  REQUIRE(d.size() == 1);
  CHECK(d[0].params == json{{"X", "S(2)"}, {"Y", "S(2)"}});
  auto p = default_instances(TheoremId::Prelcofib, Level::Quick);
  REQUIRE(p.size() == 1);
  CHECK(p[0].params.at("S").size() == 3);
  CHECK(p[0].params.at("spaces") == json{"S(2)", "S(2)", "S(2)"});
  CHECK(default_instances(TheoremId::Mtypealt, Level::Full).size() == 27);
}

TEST_CASE("every quick instance passes") {
  for (const TheoremInfo& info : list_theorems())
    for (const Instance& inst : default_instances(info.id, Level::Quick)) {
      Report r = verify(info.id, inst.params, inst.cap, inst.fields);
      INFO(to_json(r).dump());
      CHECK(r.pass);
      CHECK_FALSE(r.error_code.has_value());
      CHECK_FALSE(r.first_discrepancy.has_value());
      CHECK((r.comparisons.size() + r.checks.size()) > 0);
    }
}

TEST_CASE("MTYPEALT (2,2,2)") {
  Report r = verify(TheoremId::Mtypealt, {{"m", 2}, {"n", 2}, {"k", 2}}, 10, {Q});
  CHECK(r.pass);
  REQUIRE(r.comparisons.size() == 1);
  CHECK(even_part(coeffs(r.comparisons[0].lhs)) == V{1, 2, 4, 7, 12, 20});
  CHECK(even_part(coeffs(r.comparisons[0].rhs)) == V{1, 2, 4, 7, 12, 20});
}

TEST_CASE("CONNSUM S2xS2 # S2xS2") {
  Report r = verify(TheoremId::Connsum, {{"M", "S2xS2"}, {"N", "S2xS2"}}, 7, {Q});
  CHECK(r.pass);
  const Comparison& c = find(r, "H(Ω(M#N))");
  CHECK(coeffs(c.lhs) == V{1, 4, 15, 56, 209, 780, 2911, 10864});
  CHECK(coeffs(c.rhs) == V{1, 4, 15, 56, 209, 780, 2911, 10864});
}

TEST_CASE("PDEX C-bar values") {
  Report two = verify(TheoremId::Pdex, {{"p", 3}, {"r", 1}, {"n", 2}, {"m", 2}}, 6, {});
  CHECK(two.pass);
  CHECK(two.fields_checked == std::vector<FieldTag>{F3});
  CHECK(to_text(find(two, "C̄").rhs) == "t^3 + t^4 + t^5");
  Report three = verify(TheoremId::Pdex, {{"p", 3}, {"r", 1}, {"n", 2}, {"m", 3}}, 8, {});
  CHECK(three.pass);
  CHECK(to_text(find(three, "C̄").rhs) == "2t^3 + 3t^4 + 2t^5");
  CHECK_THROWS_AS(verify(TheoremId::Pdex, {{"p", 2}, {"r", 1}, {"n", 2}, {"m", 2}}, 6, {}), Error);
}

TEST_CASE("GANEA and DBARD on spheres and Moore spaces") {
  CHECK(verify(TheoremId::Ganea, {{"a", 1}, {"b", 2}}, 20, {Q, F2}).pass);
  CHECK(verify(TheoremId::Ganea, {{"X", "P(3,3,1)"}, {"Y", "P(3,3,1)"}}, 16, {F3}).pass);
  CHECK(verify(TheoremId::Dbard, {{"X", "P(3,3,1)"}, {"Y", "S(1)"}}, 16, {Q, F2, F3}).pass);
}

TEST_CASE("SPHEREEX needs a unit coefficient") {
  CHECK(verify(TheoremId::Sphereex, {{"n", 3}, {"m", 3}, {"d", {2, -1}}}, 9, {Q, F2}).pass);
  CHECK_THROWS_AS(verify(TheoremId::Sphereex, {{"n", 3}, {"m", 3}, {"d", {2, 2}}}, 8, {Q}), Error);
  CHECK_THROWS_AS(verify(TheoremId::Sphereex, {{"n", 3}, {"m", 3}, {"d", {1}}}, 8, {Q}), Error);
}

TEST_CASE("a wrong decomposition fails with a first discrepancy") {
  // Y should be S2 ∨ S2 here; with S2 ∨ S3 one degree-1 generator goes missing
  json bad = {{"M", "S2xS2"}, {"N", {{"gens", "a:1,b:1"}, {"relators", "com(a,b)"}, {"Y", "wedge(S(2),S(3))"}}}};
  Report r = verify(TheoremId::Connsum, bad, 6, {Q});
  CHECK_FALSE(r.pass);
  REQUIRE(r.first_discrepancy.has_value());
  CHECK(r.first_discrepancy->degree == 1);
  json j = to_json(r);
  CHECK(j.at("pass") == false);
  CHECK(j.at("first_discrepancy").at("degree") == 1);
  CHECK(j.at("error").is_null());
}

TEST_CASE("evaluation errors are reported, schema errors thrown") {
  Report r = verify(TheoremId::Mtypealt, {{"m", 1}, {"n", 1}, {"k", 1}}, 12, {Q}, 100);
  CHECK_FALSE(r.pass);
  REQUIRE(r.error_code.has_value());
  CHECK(*r.error_code == ErrorCode::MatrixBudgetExceeded);
  CHECK(to_json(r).at("error").at("code") == "MatrixBudgetExceeded");

  try {
    verify(TheoremId::Mtypealt, {{"m", 2}}, 10, {Q});
    FAIL("expected SchemaMismatch");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::SchemaMismatch);
  }
  CHECK_THROWS_AS(verify(TheoremId::Ganea, {{"X", "S(2"}, {"Y", "S(2)"}}, 10, {Q}), Error);
  CHECK_THROWS_AS(verify(TheoremId::Jamescompat, {{"X", {"loop(S(1))"}}}, 10, {Q}), Error);
}

TEST_CASE("verify is deterministic") {
  for (const TheoremInfo& info : list_theorems()) {
    const Instance inst = default_instances(info.id, Level::Quick).front();
    CHECK(to_json(verify(info.id, inst.params, inst.cap, inst.fields)).dump() ==
          to_json(verify(info.id, inst.params, inst.cap, inst.fields)).dump());
  }
}

TEST_CASE("POLYWH_DOMAIN lists its summands") {
  Report r = verify(TheoremId::PolywhDomain, {{"X", {"S(1)"}}, {"A", "S(2)"}}, 6, {Q});
  CHECK(r.pass);
  REQUIRE(r.summands.is_array());
  // k = 0..3 contribute S^3..S^6
  CHECK(r.summands.size() == 4);
  CHECK(r.summands[0].at("expr") == "sus(S(2))");
  CHECK(r.summands[1].at("indices") == json{1});
}

TEST_CASE("assumed hypotheses are echoed") {
  json inst = {{"gens_X", "a:1,b:1"}, {"relator_f", "com(a,b)"}, {"gens_Y", "c:2"}, {"relator_g", "c"},
               {"assumed_hypotheses", {"f+g inert"}}};
  Report r = verify(TheoremId::Inertideal, inst, 8, {Q});
  CHECK(r.pass);
  CHECK(to_json(r).at("assumed_hypotheses") == json{"f+g inert"});
  Report plain = verify(TheoremId::Connsum, {{"M", "S2xS2"}, {"N", "S2xS2"}}, 5, {Q});
  CHECK_FALSE(to_json(plain).at("assumed_hypotheses").empty());
}

TEST_CASE("PRELCOFIB flags a complex that is not a missing face") {
  json inst = {{"K", {{"m", 3}, {"facets", {{1, 2}, {3}}}}}, {"S", {{1, 2}}}, {"spaces", {"S(2)", "S(2)", "S(2)"}}};
  Report r = verify(TheoremId::Prelcofib, inst, 8, {Q});
  CHECK_FALSE(r.pass);
  REQUIRE(r.error_code.has_value());
  CHECK(*r.error_code == ErrorCode::NotAMissingFace);
}
