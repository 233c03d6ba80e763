#pragma once

#include <optional>
#include <string>
#include <vector>

#include "mcgcert/coxeter.hpp"
#include "mcgcert/word.hpp"

namespace mcgcert {

// Left-greedy normal form Delta^inf * factors in the spherical Artin group of
// a Coxeter system. Invariant after normal_form: every factor is a simple
// strictly between the identity and w0, and each adjacent pair is
// left-weighted.
struct GarsideElement {
  int inf = 0;
  std::vector<CoxElement> factors;
  friend bool operator==(const GarsideElement&, const GarsideElement&) = default;

  int canonical_length() const { return static_cast<int>(factors.size()); }
  int sup() const { return inf + canonical_length(); }
};

// Word letters must name atoms of sys. Negative letters are handled by
// rewriting a^-1 = Delta^-1 * lift(w0 a) and commuting Delta^-1 leftwards
// (twisting the accumulated factors by conjugation with w0).
GarsideElement normal_form(const CoxeterSystem& sys, const Word& w);

bool equal_words(const CoxeterSystem& sys, const Word& u, const Word& v);

// Defined exactly when the element is a power of Delta, i.e. the normal form
// has no factors; returns that power.
std::optional<int> delta_power_of(const CoxeterSystem& sys, const Word& w);

bool is_central(const CoxeterSystem& sys, const Word& w);

// Deterministic reduced word for a simple: repeatedly take the lowest-index
// left-descent atom.
Word simple_to_word(const CoxeterSystem& sys, const CoxElement& x);

// "Delta^k · [f1, f2, ...]" with factors rendered via simple_to_word.
std::string render_garside(const CoxeterSystem& sys, const GarsideElement& g);

}  // namespace mcgcert
