#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <string>
#include <vector>

#include "mcgcert/garside.hpp"
#include "mcgcert/linrep.hpp"
#include "mcgcert/word.hpp"

using namespace mcgcert;

namespace {

LaurentPoly random_poly(std::mt19937_64& rng) {
  LaurentPoly p;
  int nterms = static_cast<int>(rng() % 5);
  for (int i = 0; i < nterms; ++i) {
    int dq = static_cast<int>(rng() % 7) - 3;
    int dt = static_cast<int>(rng() % 7) - 3;
    int c = static_cast<int>(rng() % 9) - 4;
    p += LaurentPoly::monomial(dq, dt, c);
  }
  return p;
}

Word random_atom_word(std::mt19937_64& rng, const std::vector<std::string>& names,
                      int len, bool allow_negative) {
  Word w;
  for (int i = 0; i < len; ++i) {
    int sign = allow_negative && (rng() & 1) ? -1 : 1;
    w.push_back({names[rng() % names.size()], sign});
  }
  return w;
}

}  // namespace

TEST_CASE("laurent ring laws on random triples") {
  std::mt19937_64 rng(808);
  for (int t = 0; t < 400; ++t) {
    LaurentPoly a = random_poly(rng);
    LaurentPoly b = random_poly(rng);
    LaurentPoly c = random_poly(rng);
    CHECK(a + b == b + a);
    CHECK((a + b) + c == a + (b + c));
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a * LaurentPoly::one() == a);
    CHECK(a + LaurentPoly::zero() == a);
    CHECK(a - a == LaurentPoly::zero());
    for (const LTerm& term : (a * b).terms()) CHECK(term.c != 0);
  }
}

TEST_CASE("laurent string form") {
  LaurentPoly p = LaurentPoly::monomial(2, 1, -1) + LaurentPoly::monomial(0, 0, 3);
  CHECK(p.str() == "3 - q^2 t");
  CHECK(LaurentPoly::zero().str() == "0");
  CHECK(LaurentPoly::one().str() == "1");
  CHECK(LaurentPoly::monomial(1, 0, -1).str() == "-q");
  CHECK(LaurentPoly::monomial(1, 1, 2).str() == "2 q t");
}

TEST_CASE("shifted multiplies by a monomial") {
  LaurentPoly p = LaurentPoly::monomial(1, 0, 2) + LaurentPoly::monomial(0, 1, -1);
  CHECK(p.shifted(1, 1, 3) ==
        LaurentPoly::monomial(2, 1, 6) + LaurentPoly::monomial(1, 2, -3));
}

TEST_CASE("matrix identity and zero predicates") {
  PolyMatrix id = PolyMatrix::identity(3);
  CHECK(id.is_identity());
  CHECK(!id.is_zero());
  PolyMatrix z(3);
  CHECK(z.is_zero());
  CHECK(id * id == id);
}

TEST_CASE("braid representation dimensions") {
  CHECK(lk_representation(2).dim == 1);
  CHECK(lk_representation(3).dim == 3);
  CHECK(lk_representation(4).dim == 6);
  CHECK(lk_representation(5).dim == 10);
  CHECK(cw_representation_d4().dim == 12);
  CHECK_THROWS(lk_representation(1));
  CHECK_THROWS(lk_representation(6));
}

TEST_CASE("braid relations hold in the six dimensional representation") {
  Representation lk = lk_representation(4);
  CHECK(evaluate_word_matrix(lk, parse_word("s1 s2 s1")) ==
        evaluate_word_matrix(lk, parse_word("s2 s1 s2")));
  CHECK(evaluate_word_matrix(lk, parse_word("s1 s3")) ==
        evaluate_word_matrix(lk, parse_word("s3 s1")));
}

TEST_CASE("star relations hold in the twelve dimensional representation") {
  Representation cw = cw_representation_d4();
  CHECK(evaluate_word_matrix(cw, parse_word("a1 b a1")) ==
        evaluate_word_matrix(cw, parse_word("b a1 b")));
  CHECK(evaluate_word_matrix(cw, parse_word("a1 a2")) ==
        evaluate_word_matrix(cw, parse_word("a2 a1")));
  CHECK(evaluate_word_matrix(cw, {}).is_identity());
}

TEST_CASE("inverses verified at construction") {
  for (const Representation& rep : {lk_representation(4), cw_representation_d4()}) {
    for (const std::string& g : rep.gens) {
      CHECK((rep.image.at(g) * rep.inverse_image.at(g)).is_identity());
      CHECK((rep.inverse_image.at(g) * rep.image.at(g)).is_identity());
    }
  }
}

TEST_CASE("generator images satisfy the cubic") {
  for (const Representation& rep : {lk_representation(4), cw_representation_d4()}) {
    for (const std::string& g : rep.gens) {
      const PolyMatrix& m = rep.image.at(g);
      PolyMatrix id = PolyMatrix::identity(rep.dim);
      PolyMatrix f1 = m + id.scaled(-LaurentPoly::one());
      PolyMatrix f2 = m + id.scaled(LaurentPoly::monomial(1, 0, 1));
      PolyMatrix f3 = m + id.scaled(LaurentPoly::monomial(2, 1, 1));
      CHECK((f1 * f2 * f3).is_zero());
      CHECK(inverse_from_cubic(m) == rep.inverse_image.at(g));
    }
  }
}

TEST_CASE("fundamental elements act as unit monomial scalars") {
  Representation lk = lk_representation(4);
  PolyMatrix full_twist = evaluate_word_matrix(lk, power(parse_word("s1 s2 s3"), 4));
  auto s = monomial_scalar_of(full_twist);
  REQUIRE(s.has_value());
  CHECK(s->dq == 8);
  CHECK(s->dt == 2);
  CHECK(s->c == 1);

  Representation cw = cw_representation_d4();
  PolyMatrix delta = evaluate_word_matrix(cw, power(parse_word("a1 a2 a3 b"), 3));
  auto d = monomial_scalar_of(delta);
  REQUIRE(d.has_value());
  CHECK(d->dq == 6);
  CHECK(d->dt == 1);
  CHECK(d->c == -1);
  PolyMatrix delta2 = delta * delta;
  auto d2 = monomial_scalar_of(delta2);
  REQUIRE(d2.has_value());
  CHECK(d2->dq == 12);
  CHECK(d2->dt == 2);
  CHECK(d2->c == 1);
}

TEST_CASE("monomial scalar detection") {
  CHECK(monomial_scalar_of(PolyMatrix::identity(4)) == LTerm{0, 0, 1});
  Representation lk = lk_representation(4);
  CHECK(!monomial_scalar_of(lk.image.at("s1")).has_value());
  PolyMatrix doubled = PolyMatrix::identity(2).scaled(LaurentPoly::monomial(0, 0, 2));
  CHECK(!monomial_scalar_of(doubled).has_value());
  PolyMatrix offdiag = PolyMatrix::identity(2);
  offdiag.at(0, 1) = LaurentPoly::one();
  CHECK(!monomial_scalar_of(offdiag).has_value());
}

TEST_CASE("projective scalar between matrices") {
  Representation cw = cw_representation_d4();
  PolyMatrix m = evaluate_word_matrix(cw, parse_word("a1 b"));
  PolyMatrix shifted = m.shifted_scalar(3, 1, -1);
  auto u = projective_scalar_between(m, shifted);
  REQUIRE(u.has_value());
  CHECK(u->dq == 3);
  CHECK(u->dt == 1);
  CHECK(u->c == -1);
  PolyMatrix other = evaluate_word_matrix(cw, parse_word("b a1"));
  CHECK(!projective_scalar_between(m, other).has_value());
  CHECK(!projective_scalar_between(m, m.scaled(LaurentPoly::monomial(0, 0, 2)))
             .has_value());
}

TEST_CASE("evaluation is a homomorphism") {
  Representation lk = lk_representation(4);
  std::mt19937_64 rng(17);
  for (int t = 0; t < 60; ++t) {
    Word u = random_atom_word(rng, lk.gens, static_cast<int>(rng() % 8), true);
    Word v = random_atom_word(rng, lk.gens, static_cast<int>(rng() % 8), true);
    CHECK(evaluate_word_matrix(lk, concat(u, v)) ==
          evaluate_word_matrix(lk, u) * evaluate_word_matrix(lk, v));
  }
  CHECK(evaluate_word_matrix(lk, parse_word("s1 s1^-1")).is_identity());
  CHECK_THROWS(evaluate_word_matrix(lk, parse_word("zz")));
}

TEST_CASE("free abelian blocks") {
  Representation fa = free_abelian_representation({"z1", "z2"});
  CHECK(fa.dim == 2);
  PolyMatrix z1 = fa.image.at("z1");
  CHECK(z1.at(0, 0) == LaurentPoly::monomial(1, 0, 1));
  CHECK(z1.at(1, 1) == LaurentPoly::one());
  Representation lk = lk_representation(3);
  Representation sum = rep_direct_sum(lk, fa);
  CHECK(sum.dim == 5);
  PolyMatrix ms1 = sum.image.at("s1");
  for (int i = 3; i < 5; ++i) CHECK(ms1.at(i, i) == LaurentPoly::one());
  PolyMatrix mz2 = sum.image.at("z2");
  CHECK(mz2.at(4, 4) == LaurentPoly::monomial(1, 0, 1));
  for (int i = 0; i < 3; ++i) CHECK(mz2.at(i, i) == LaurentPoly::one());
  CHECK_THROWS(rep_direct_sum(lk, lk));
}

TEST_CASE("nontrivial garside elements have non identity matrices") {
  CoxeterSystem b4 = CoxeterSystem::type_a(4, {"a1", "b", "a2"});
  Representation lk = lk_representation(4, {"a1", "b", "a2"});
  std::mt19937_64 rng(2718);
  int checked = 0;
  while (checked < 1000) {
    Word w = random_atom_word(rng, lk.gens, 1 + static_cast<int>(rng() % 10), true);
    GarsideElement g = normal_form(b4, w);
    if (g.inf == 0 && g.factors.empty()) continue;
    CHECK(!evaluate_word_matrix(lk, w).is_identity());
    ++checked;
  }
}

TEST_CASE("central elements act as monomial scalars") {
  CoxeterSystem d4sys = CoxeterSystem::type_d4();
  Representation cw = cw_representation_d4();
  Word z = power(parse_word("a1 a2 a3 b"), 3);
  REQUIRE(is_central(d4sys, z));
  CHECK(monomial_scalar_of(evaluate_word_matrix(cw, z)).has_value());
  CHECK(monomial_scalar_of(evaluate_word_matrix(cw, power(z, -1))).has_value());
}
