#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <string>
#include <vector>

#include "mcgcert/garside.hpp"
#include "mcgcert/word.hpp"

using namespace mcgcert;

namespace {

const CoxeterSystem& b4() {
  static CoxeterSystem sys = CoxeterSystem::type_a(4, {"a1", "b", "a2"});
  return sys;
}

const CoxeterSystem& d4() {
  static CoxeterSystem sys = CoxeterSystem::type_d4();
  return sys;
}

Word random_atom_word(std::mt19937_64& rng, const CoxeterSystem& sys, int len,
                      bool allow_negative) {
  Word w;
  for (int i = 0; i < len; ++i) {
    int idx = static_cast<int>(rng() % sys.rank());
    int sign = allow_negative && (rng() & 1) ? -1 : 1;
    w.push_back({sys.atom_names()[idx], sign});
  }
  return w;
}

// one random application of a defining relation inside a positive word:
// either swap a commuting adjacent pair or rotate a braid triple
Word random_rewrite(std::mt19937_64& rng, const CoxeterSystem& sys, Word w) {
  if (w.size() < 2) return w;
  for (int attempt = 0; attempt < 40; ++attempt) {
    std::size_t pos = rng() % (w.size() - 1);
    int i = *sys.atom_index(w[pos].gen);
    int j = *sys.atom_index(w[pos + 1].gen);
    if (w[pos].sign != 1 || w[pos + 1].sign != 1) continue;
    if (i == j) continue;
    CoxElement prod = cox_mul(sys.atom(i), sys.atom(j));
    CoxElement alt = cox_mul(sys.atom(j), sys.atom(i));
    bool commute = prod == alt;
    if (commute) {
      std::swap(w[pos], w[pos + 1]);
      return w;
    }
    // braid edge: need x y x -> y x y
    if (pos + 2 < w.size() && w[pos + 2].sign == 1 && w[pos + 2].gen == w[pos].gen) {
      w[pos] = {w[pos + 1].gen, 1};
      w[pos + 2] = {w[pos + 1].gen, 1};
      w[pos + 1] = {sys.atom_names()[i], 1};
      return w;
    }
  }
  return w;
}

bool left_weighted_pair(const CoxeterSystem& sys, const CoxElement& u,
                        const CoxElement& v) {
  LengthDescents lu = sys.length_and_descents(u);
  LengthDescents lv = sys.length_and_descents(v);
  // an atom that extends u on the right and starts v would disprove
  std::uint32_t movable = ~lu.right & lv.left & ((1u << sys.rank()) - 1);
  return movable == 0;
}

}  // namespace

TEST_CASE("empty word is the identity element") {
  GarsideElement g = normal_form(b4(), {});
  CHECK(g.inf == 0);
  CHECK(g.factors.empty());
  CHECK(g.canonical_length() == 0);
  CHECK(g.sup() == 0);
}

TEST_CASE("defining braid relation collapses") {
  CHECK(normal_form(d4(), parse_word("a1 b a1")) ==
        normal_form(d4(), parse_word("b a1 b")));
  CHECK(equal_words(b4(), parse_word("a1 b a1"), parse_word("b a1 b")));
  CHECK(!equal_words(b4(), parse_word("a1"), parse_word("a2")));
}

TEST_CASE("unknown atom rejected") {
  CHECK_THROWS(normal_form(b4(), parse_word("zz")));
}

TEST_CASE("fundamental element recognition") {
  GarsideElement d = normal_form(d4(), power(parse_word("a1 a2 a3 b"), 3));
  CHECK(d.inf == 1);
  CHECK(d.factors.empty());

  GarsideElement c = normal_form(b4(), power(parse_word("a1 b a2"), 4));
  CHECK(c.inf == 2);
  CHECK(c.factors.empty());
}

TEST_CASE("delta powers") {
  CHECK(delta_power_of(b4(), power(parse_word("a1 b a2"), 4)) == 2);
  CHECK(delta_power_of(d4(), power(parse_word("a1 a2 a3 b"), 3)) == 1);
  CHECK(!delta_power_of(b4(), parse_word("a1")).has_value());
  CHECK(delta_power_of(b4(), {}) == 0);
  CHECK(delta_power_of(b4(), power(parse_word("a1 b a2"), -4)) == -2);
}

TEST_CASE("braid identities among positive words") {
  CHECK(equal_words(b4(), power(parse_word("a1 a1 a2 b"), 3),
                    power(parse_word("a1 a2 b"), 4)));
  CHECK(equal_words(b4(), power(parse_word("a1 a2 b"), 4),
                    power(parse_word("a1 b a2"), 4)));
}

TEST_CASE("centrality") {
  CHECK(is_central(b4(), power(parse_word("a1 a1 a2 b"), 3)));
  CHECK(is_central(d4(), power(parse_word("a1 a2 a3 b"), 3)));
  CHECK(!is_central(b4(), parse_word("b")));
  CHECK(is_central(b4(), {}));
}

TEST_CASE("inverses cancel") {
  std::mt19937_64 rng(31);
  for (int t = 0; t < 50; ++t) {
    Word w = random_atom_word(rng, d4(), 1 + static_cast<int>(rng() % 10), true);
    GarsideElement g = normal_form(d4(), concat(w, inverse(w)));
    CHECK(g.inf == 0);
    CHECK(g.factors.empty());
  }
}

TEST_CASE("negative letters handled") {
  GarsideElement g = normal_form(b4(), parse_word("a1^-1"));
  CHECK(g.inf == -1);
  CHECK(g.canonical_length() == 1);
  CHECK(equal_words(b4(), parse_word("a1^-1 a1 b"), parse_word("b")));
}

TEST_CASE("normal form invariant under defining rewrites") {
  std::mt19937_64 rng(4242);
  for (const CoxeterSystem* sys : {&b4(), &d4()}) {
    for (int t = 0; t < 500; ++t) {
      Word w = random_atom_word(rng, *sys, 2 + static_cast<int>(rng() % 14), false);
      Word v = random_rewrite(rng, *sys, w);
      CHECK(normal_form(*sys, w) == normal_form(*sys, v));
    }
  }
}

TEST_CASE("delta conjugation realizes tau") {
  Word delta_b4 = parse_word("a1 b a1 a2 b a1");
  REQUIRE(delta_power_of(b4(), delta_b4) == 1);
  for (int i = 0; i < b4().rank(); ++i) {
    Word a = {{b4().atom_names()[i], 1}};
    Word conj = concat(concat(delta_b4, a), inverse(delta_b4));
    Word ta = {{b4().atom_names()[b4().tau_atom(i)], 1}};
    CHECK(normal_form(b4(), conj) == normal_form(b4(), ta));
  }
  Word delta_d4 = power(parse_word("a1 a2 a3 b"), 3);
  for (int i = 0; i < d4().rank(); ++i) {
    Word a = {{d4().atom_names()[i], 1}};
    Word conj = concat(concat(delta_d4, a), inverse(delta_d4));
    CHECK(normal_form(d4(), conj) == normal_form(d4(), a));
  }
}

TEST_CASE("factors are proper simples and left weighted") {
  std::mt19937_64 rng(99);
  for (const CoxeterSystem* sys : {&b4(), &d4()}) {
    for (int t = 0; t < 300; ++t) {
      Word w = random_atom_word(rng, *sys, static_cast<int>(rng() % 18), true);
      GarsideElement g = normal_form(*sys, w);
      for (const CoxElement& f : g.factors) {
        CHECK(!(f == sys->identity()));
        CHECK(!(f == sys->w0()));
      }
      for (std::size_t i = 0; i + 1 < g.factors.size(); ++i)
        CHECK(left_weighted_pair(*sys, g.factors[i], g.factors[i + 1]));
    }
  }
}

TEST_CASE("normal form round trips through its own word") {
  std::mt19937_64 rng(1234);
  for (int t = 0; t < 100; ++t) {
    Word w = random_atom_word(rng, d4(), static_cast<int>(rng() % 12), true);
    GarsideElement g = normal_form(d4(), w);
    Word rebuilt = power(power(parse_word("a1 a2 a3 b"), 3), g.inf);
    for (const CoxElement& f : g.factors)
      rebuilt = concat(rebuilt, simple_to_word(d4(), f));
    CHECK(normal_form(d4(), rebuilt) == g);
  }
}

TEST_CASE("simple_to_word emits reduced words") {
  for (const CoxElement& f : {d4().w0(), d4().atom(2)}) {
    Word w = simple_to_word(d4(), f);
    CHECK(static_cast<int>(w.size()) == d4().length(f));
    CHECK(normal_form(d4(), w).sup() <= 1);
  }
}

TEST_CASE("render garside shape") {
  GarsideElement one = normal_form(b4(), parse_word("a1 b a1 a2 b a1"));
  CHECK(render_garside(b4(), one) == "Δ^1 · []");
  GarsideElement atom = normal_form(b4(), parse_word("a1"));
  CHECK(render_garside(b4(), atom) == "Δ^0 · [a1]");
}
