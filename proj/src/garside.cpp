#include "mcgcert/garside.hpp"

#include <stdexcept>

namespace mcgcert {

namespace {

// Transfers atoms from the left of hi to the right of lo until the pair is
// left-weighted. Returns true if anything moved.
bool settle_pair(const CoxeterSystem& sys, CoxElement& lo, CoxElement& hi) {
  bool moved = false;
  for (;;) {
    LengthDescents dhi = sys.length_and_descents(hi);
    LengthDescents dlo = sys.length_and_descents(lo);
    std::uint32_t movable = dhi.left & ~dlo.right;
    if (!movable) return moved;
    int i = 0;
    while (!(movable & (1u << i))) ++i;
    lo = cox_mul(lo, sys.atom(i));
    hi = cox_mul(sys.atom(i), hi);
    moved = true;
  }
}

}  // namespace

GarsideElement normal_form(const CoxeterSystem& sys, const Word& w) {
  GarsideElement g;
  const CoxElement e = sys.identity();
  const CoxElement& w0 = sys.w0();
  for (const Letter& l : w) {
    auto ai = sys.atom_index(l.gen);
    if (!ai)
      throw std::runtime_error("letter " + l.gen + " is not an atom of the group");
    if (l.sign > 0) {
      g.factors.push_back(sys.atom(*ai));
    } else {
      g.inf -= 1;
      for (CoxElement& f : g.factors) f = cox_mul(cox_mul(w0, f), w0);
      g.factors.push_back(cox_mul(w0, sys.atom(*ai)));
    }
  }

  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i + 1 < g.factors.size();) {
      if (settle_pair(sys, g.factors[i], g.factors[i + 1])) changed = true;
      if (g.factors[i + 1] == e) {
        g.factors.erase(g.factors.begin() + static_cast<long>(i) + 1);
        continue;
      }
      ++i;
    }
    while (!g.factors.empty() && g.factors.back() == e) g.factors.pop_back();
  }

  std::size_t lead = 0;
  while (lead < g.factors.size() && g.factors[lead] == w0) ++lead;
  g.inf += static_cast<int>(lead);
  g.factors.erase(g.factors.begin(), g.factors.begin() + static_cast<long>(lead));
  for (const CoxElement& f : g.factors)
    if (f == e || f == w0)
      throw std::runtime_error("normal form invariant violated");
  return g;
}

bool equal_words(const CoxeterSystem& sys, const Word& u, const Word& v) {
  return normal_form(sys, u) == normal_form(sys, v);
}

std::optional<int> delta_power_of(const CoxeterSystem& sys, const Word& w) {
  GarsideElement g = normal_form(sys, w);
  if (!g.factors.empty()) return std::nullopt;
  return g.inf;
}

bool is_central(const CoxeterSystem& sys, const Word& w) {
  for (const std::string& a : sys.atom_names()) {
    Word left = concat(Word{{a, 1}}, w);
    Word right = concat(w, Word{{a, 1}});
    if (!equal_words(sys, left, right)) return false;
  }
  return true;
}

Word simple_to_word(const CoxeterSystem& sys, const CoxElement& x) {
  Word out;
  CoxElement cur = x;
  const CoxElement e = sys.identity();
  while (!(cur == e)) {
    LengthDescents ld = sys.length_and_descents(cur);
    if (!ld.left) throw std::runtime_error("non-identity simple without descent");
    int i = 0;
    while (!(ld.left & (1u << i))) ++i;
    out.push_back({sys.atom_names()[i], 1});
    cur = cox_mul(sys.atom(i), cur);
  }
  return out;
}

std::string render_garside(const CoxeterSystem& sys, const GarsideElement& g) {
  std::string out = "Δ^" + std::to_string(g.inf) + " · [";
  for (std::size_t i = 0; i < g.factors.size(); ++i) {
    if (i) out += ", ";
    out += render_word(simple_to_word(sys, g.factors[i]));
  }
  out += "]";
  return out;
}

}  // namespace mcgcert
