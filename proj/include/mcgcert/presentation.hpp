#pragma once

#include <optional>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "mcgcert/word.hpp"

namespace mcgcert {

using BigInt = boost::multiprecision::cpp_int;

// Finite presentation: ordered generator names plus relator words (each
// relator asserts its word equals the identity).
struct Presentation {
  std::vector<std::string> gens;
  std::vector<Word> relators;

  bool has_gen(const std::string& name) const;
};

// Freely and cyclically reduces each relator, replaces it by the canonical
// representative of its class under rotation and inversion, drops empties,
// dedupes, and sorts by (length, rendering).
Presentation normalize_relators(const Presentation& p);

// Canonical representative used by normalize_relators: lexicographically
// least rotation among all rotations of the cyclic reduction of w and of its
// inverse.
Word canonical_relator(const Word& w);

// Removes generator g, rewriting every occurrence to `defining` (a word over
// the remaining generators). Requires a witness relator equal to
// g * defining^-1 up to rotation and inversion; throws std::runtime_error
// otherwise. Result is normalized.
Presentation eliminate_generator(const Presentation& p, const std::string& g,
                                 const Word& defining);

// Disjoint generator sets required. Relators of both parts plus commutators
// [g1, g2] for every pair across the parts.
Presentation direct_product(const Presentation& a, const Presentation& b);

Presentation quotient_by_words(const Presentation& p, const std::vector<Word>& words);

struct AbelianInvariants {
  long long rank = 0;
  std::vector<BigInt> torsion;  // each >= 2, each divides the next
  friend bool operator==(const AbelianInvariants&, const AbelianInvariants&) = default;
};

AbelianInvariants abelianization(const Presentation& p);

std::string render_abelian(const AbelianInvariants& inv);

// Text form:
//   gens: a, b, c
//   a b a b^-1 a^-1 b^-1
// '#' starts a comment; blank lines ignored.
Presentation parse_presentation(const std::string& text);
std::string render_presentation(const Presentation& p);

}  // namespace mcgcert
