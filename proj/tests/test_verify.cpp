#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>
#include <string>
#include <vector>

#include "mcgcert/garside.hpp"
#include "mcgcert/linrep.hpp"
#include "mcgcert/mcg.hpp"
#include "mcgcert/verify.hpp"
#include "mcgcert/word.hpp"

using namespace mcgcert;

namespace {

Json strip_elapsed(Json j) {
  if (j.contains("metadata") && j["metadata"].contains("elapsed_ms"))
    j["metadata"].erase("elapsed_ms");
  return j;
}

}  // namespace

TEST_CASE("certificate passes iff every step passed") {
  Certificate c;
  c.claim = "demo";
  CHECK(c.pass());
  c.add("first", true);
  CHECK(c.pass());
  c.add("second", false, Json{{"why", "broken"}});
  CHECK(!c.pass());
}

TEST_CASE("certificate json round trip") {
  Certificate c;
  c.claim = "demo";
  c.metadata["conventions"] = default_conventions();
  c.add("step one", true, Json{{"value", 3}});
  c.add("step two", true);
  Json j = certificate_json(c);
  CHECK(j["claim"] == "demo");
  CHECK(j["status"] == "pass");
  REQUIRE(j["steps"].size() == 2);
  CHECK(j["steps"][0]["desc"] == "step one");
  CHECK(j["steps"][0]["ok"].get<bool>());

  Certificate back = certificate_from_json(j);
  CHECK(back.claim == c.claim);
  CHECK(back.pass());
  CHECK(certificate_json(back) == j);
}

TEST_CASE("render certificate shows failing witnesses") {
  Certificate c;
  c.claim = "demo";
  c.add("good", true);
  c.add("bad", false, Json{{"word", "a1"}});
  std::string text = render_certificate(c);
  CHECK(text.find("demo") != std::string::npos);
  CHECK(text.find("FAIL") != std::string::npos);
  CHECK(text.find("a1") != std::string::npos);
}

TEST_CASE("default conventions name the fixed choices") {
  Json conv = default_conventions();
  CHECK(conv.contains("lk"));
  CHECK(conv.contains("d4"));
  CHECK(conv.contains("twist"));
}

TEST_CASE("serializers") {
  GarsideElement g = normal_form(CoxeterSystem::type_d4(),
                                 power(parse_word("a1 a2 a3 b"), 3));
  Json gj = garside_json(g);
  CHECK(gj["inf"] == 1);
  CHECK(gj["factors"].empty());

  Json pj = poly_json(LaurentPoly::monomial(2, 1, -1));
  REQUIRE(pj.size() == 1);
  CHECK(pj[0][0] == 2);
  CHECK(pj[0][1] == 1);
  CHECK(pj[0][2] == "-1");

  PolyMatrix m = PolyMatrix::identity(2);
  Json mj = matrix_json(m);
  CHECK(mj["dim"] == 2);

  Json ej = group_expr_json(*GroupExpr::central_quotient(
      GroupExpr::artin_a(4, {"a1", "b", "a2"}), power(parse_word("a1 b a2"), 4)));
  CHECK(ej["kind"] == "central_quotient");
}

TEST_CASE("row list") {
  std::vector<SurfaceTriple> rows = table_rows(6);
  REQUIRE(rows.size() == 22);
  CHECK(rows[0] == SurfaceTriple{1, 2, 0});
  CHECK(rows[3] == SurfaceTriple{1, 3, 0});
  int genus0 = 0;
  for (const SurfaceTriple& t : rows)
    if (t.g == 0) {
      ++genus0;
      CHECK(t.b >= 2);
      CHECK(t.b + t.n <= 6);
    }
  CHECK(genus0 == 15);
}

TEST_CASE("collapse proof splits survivors exactly") {
  GenusOnePlan plan = genus1_plan({1, 3, 0});
  REQUIRE(plan.stages.size() == 2);
  const CollapseProof& st1 = plan.stages[0];
  CHECK(st1.source.relators.size() == 43);
  CHECK(st1.eliminations.size() == 3);
  CHECK(st1.target_presentation.relators.size() == 22);
  CHECK(st1.extra_relators.size() == 18);
  Certificate c1 = verify_collapse(st1);
  CHECK(c1.pass());

  const CollapseProof& st2 = plan.stages[1];
  Certificate c2 = verify_collapse(st2);
  CHECK(c2.pass());
  CHECK(render_group(*plan.target) == "A(D4) x Z^2");
}

TEST_CASE("five generator row collapses to a product with the center") {
  GenusOnePlan plan = genus1_plan({1, 2, 0});
  CHECK(plan.caps.empty());
  REQUIRE(plan.stages.size() == 1);
  Certificate c = verify_collapse(plan.stages[0]);
  CHECK(c.pass());
  CHECK(render_group(*plan.target) == "B4 x Z");
}

TEST_CASE("homomorphism checker validates the identity projection") {
  GervaisData gd = gervais_presentation({1, 2, 0});
  Word star = concat(parse_word("c12 c21"), inverse(delta_ij_squared(1, 2)));
  auto target_expr = GroupExpr::central_quotient(
      GroupExpr::product({GroupExpr::artin_a(4, {"a1", "b", "a2"}),
                          GroupExpr::free_abelian({"c12", "c21"})}),
      star);
  GroupOracle target(target_expr);
  std::unordered_map<std::string, Word> id;
  for (const std::string& g : gd.presentation.gens) id[g] = parse_word(g);
  Certificate c = check_homomorphism(gd.presentation, target, id, "identity");
  CHECK(c.pass());
}

TEST_CASE("homomorphism checker accepts the retraction onto the star target") {
  GervaisData gd = gervais_presentation({1, 3, 0});
  GroupOracle d4(GroupExpr::artin_d4());
  std::unordered_map<std::string, Word> images;
  for (const std::string g : {"a1", "a2", "a3", "b"}) images[g] = parse_word(g);
  images["c12"] = {};
  images["c23"] = {};
  images["c21"] = delta_ij_squared(1, 2);
  images["c32"] = delta_ij_squared(2, 3);
  images["c31"] = delta_123();
  images["c13"] = concat(delta_ij_squared(1, 3), inverse(delta_123()));
  Certificate c = check_homomorphism(gd.presentation, d4, images, "retraction");
  CHECK(c.pass());
}

TEST_CASE("homomorphism checker rejects dropping every boundary twist") {
  GervaisData gd = gervais_presentation({1, 3, 0});
  GroupOracle d4(GroupExpr::artin_d4());
  std::unordered_map<std::string, Word> images;
  for (const std::string g : {"a1", "a2", "a3", "b"}) images[g] = parse_word(g);
  for (const std::string g : {"c12", "c21", "c13", "c31", "c23", "c32"})
    images[g] = {};
  Certificate c = check_homomorphism(gd.presentation, d4, images, "naive");
  CHECK(!c.pass());
}

TEST_CASE("homomorphism checker requires total maps over the target alphabet") {
  GervaisData gd = gervais_presentation({1, 2, 0});
  GroupOracle b4(GroupExpr::artin_a(4, {"a1", "b", "a2"}));
  std::unordered_map<std::string, Word> partial{{"b", parse_word("b")}};
  CHECK_THROWS(check_homomorphism(gd.presentation, b4, partial, "partial"));
  std::unordered_map<std::string, Word> bad;
  for (const std::string& g : gd.presentation.gens) bad[g] = parse_word("zz");
  CHECK_THROWS(check_homomorphism(gd.presentation, b4, bad, "alien letters"));
}

TEST_CASE("genus one plans expand the eliminated twists back") {
  for (SurfaceTriple t : {SurfaceTriple{1, 3, 0}, SurfaceTriple{1, 1, 2},
                          SurfaceTriple{1, 0, 3}}) {
    GenusOnePlan plan = genus1_plan(t);
    GroupOracle target(plan.target);
    for (const CollapseProof& cp : plan.stages)
      for (const auto& e : cp.eliminations) CHECK(plan.expansion.count(e.first));
    for (const std::string& g : plan.source.gens) {
      if (plan.expansion.count(g)) {
        for (const Letter& l : plan.expansion.at(g)) CHECK(target.owns(l.gen));
      } else {
        CHECK(target.owns(g));
      }
    }
  }
}

TEST_CASE("genus zero plans pair mutually inverse maps") {
  GenusZeroPlan plan = genus0_plan({0, 3, 1});
  REQUIRE(plan.second != nullptr);
  CHECK(render_group(*plan.first) == "Z^2 x PB3");
  GroupOracle first(plan.first);
  GroupOracle second(plan.second);
  for (const auto& [g, w] : plan.phi) {
    Word back = apply_map(w, plan.psi);
    CHECK(first.equal(parse_word(g), back));
  }
  for (const auto& [g, w] : plan.psi) {
    Word back = apply_map(w, plan.phi);
    CHECK(second.equal(parse_word(g), back));
  }
}

TEST_CASE("small genus zero rows have no second splitting") {
  GenusZeroPlan plan = genus0_plan({0, 2, 0});
  CHECK(plan.second == nullptr);
  CHECK(render_group(*plan.first) == "Z x PB1");
}

TEST_CASE("matrix models per row") {
  MatrixRep flat = build_matrix_rep({1, 1, 1});
  CHECK(!flat.projective);
  CHECK(flat.rep.dim == 6);

  MatrixRep proj = build_matrix_rep({1, 0, 2});
  CHECK(proj.projective);
  CHECK(proj.rep.dim == 6);

  MatrixRep wide = build_matrix_rep({1, 2, 1});
  CHECK(!wide.projective);
  CHECK(wide.rep.dim == 13);

  MatrixRep d4proj = build_matrix_rep({1, 0, 3});
  CHECK(d4proj.projective);
  CHECK(d4proj.rep.dim == 12);
}

TEST_CASE("matrix certificates pass per row") {
  for (SurfaceTriple t : {SurfaceTriple{1, 1, 1}, SurfaceTriple{1, 0, 2},
                          SurfaceTriple{0, 2, 1}}) {
    Certificate c = verify_matrix_rep(t);
    CHECK(c.pass());
  }
}

TEST_CASE("word identity certificate") {
  Certificate c = verify_word_identities();
  CHECK(c.pass());
  CHECK(c.steps.size() >= 10);
}

TEST_CASE("star identity certificate") {
  Certificate c = verify_star_identities();
  CHECK(c.pass());
}

TEST_CASE("center certificate records the computed powers") {
  Certificate c = verify_center_claims();
  CHECK(c.pass());
  int recorded = 0;
  for (const CertStep& s : c.steps)
    if (s.desc.find("delta power") != std::string::npos) {
      CHECK(s.witness.contains("delta_power"));
      CHECK(s.witness["delta_power"].is_number_integer());
      ++recorded;
    }
  CHECK(recorded == 2);
}

TEST_CASE("free subgroup obstruction certificate") {
  Certificate c = hamidi_tehrani();
  CHECK(c.pass());
}

TEST_CASE("row certificates pass and are reproducible") {
  for (SurfaceTriple t : {SurfaceTriple{1, 2, 0}, SurfaceTriple{1, 0, 2},
                          SurfaceTriple{0, 2, 0}, SurfaceTriple{0, 2, 2}}) {
    Certificate c1 = verify_row(t);
    CHECK(c1.pass());
    Certificate c2 = verify_row(t);
    CHECK(strip_elapsed(certificate_json(c1)) ==
          strip_elapsed(certificate_json(c2)));
  }
}

TEST_CASE("abelianization agreement is part of every row certificate") {
  Certificate c = verify_row({1, 3, 0});
  REQUIRE(c.pass());
  bool found = false;
  for (const CertStep& s : c.steps)
    if (s.desc.find("abelian invariants") != std::string::npos) found = true;
  CHECK(found);
}

TEST_CASE("cross oracle agreement on the certified identities") {
  CoxeterSystem b4 = CoxeterSystem::type_a(4, {"a1", "b", "a2"});
  Representation lk = lk_representation(4, {"a1", "b", "a2"});
  std::vector<std::pair<Word, Word>> pairs{
      {power(parse_word("a1 a1 a2 b"), 3), power(parse_word("a1 a2 b"), 4)},
      {power(parse_word("a1 a2 b"), 4), power(parse_word("a1 b a2"), 4)},
      {parse_word("a1 b a1"), parse_word("b a1 b")},
      {parse_word("a1 b"), parse_word("b a1")},
      {parse_word("a1"), parse_word("a2")},
  };
  for (const auto& [u, v] : pairs) {
    bool garside = equal_words(b4, u, v);
    bool matrix = evaluate_word_matrix(lk, u) == evaluate_word_matrix(lk, v);
    CHECK(garside == matrix);
  }
}
