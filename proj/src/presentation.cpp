#include "mcgcert/presentation.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>

#include "mcgcert/smith.hpp"

namespace mcgcert {

namespace {

bool letter_less(const Letter& a, const Letter& b) {
  if (a.gen != b.gen) return a.gen < b.gen;
  return a.sign > b.sign;  // positive before negative
}

bool word_less(const Word& a, const Word& b) {
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end(),
                                      letter_less);
}

Word cyclic_reduce(Word w) {
  w = free_reduce(w);
  while (w.size() >= 2 && w.front().gen == w.back().gen &&
         w.front().sign == -w.back().sign) {
    w.erase(w.begin());
    w.pop_back();
  }
  return w;
}

Word min_rotation(const Word& w) {
  if (w.empty()) return w;
  Word best = w;
  Word rot = w;
  for (std::size_t k = 1; k < w.size(); ++k) {
    std::rotate(rot.begin(), rot.begin() + 1, rot.end());
    if (word_less(rot, best)) best = rot;
  }
  return best;
}

void check_letters(const Presentation& p, const Word& w, const char* what) {
  for (const Letter& l : w)
    if (!p.has_gen(l.gen))
      throw std::runtime_error(std::string(what) + " uses unknown generator " + l.gen);
}

}  // namespace

bool Presentation::has_gen(const std::string& name) const {
  return std::find(gens.begin(), gens.end(), name) != gens.end();
}

Word canonical_relator(const Word& w) {
  Word r = cyclic_reduce(w);
  if (r.empty()) return r;
  Word a = min_rotation(r);
  Word b = min_rotation(inverse(r));
  return word_less(b, a) ? b : a;
}

Presentation normalize_relators(const Presentation& p) {
  Presentation out;
  out.gens = p.gens;
  std::set<std::string> seen;
  for (const Word& r : p.relators) {
    Word c = canonical_relator(r);
    if (c.empty()) continue;
    std::string key = render_word(c);
    if (seen.insert(key).second) out.relators.push_back(std::move(c));
  }
  std::sort(out.relators.begin(), out.relators.end(), [](const Word& a, const Word& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return word_less(a, b);
  });
  return out;
}

Presentation eliminate_generator(const Presentation& p, const std::string& g,
                                 const Word& defining) {
  if (!p.has_gen(g)) throw std::runtime_error("no such generator: " + g);
  for (const Letter& l : defining)
    if (l.gen == g)
      throw std::runtime_error("defining word mentions eliminated generator " + g);
  check_letters(p, defining, "defining word");

  Word witness = canonical_relator(concat(Word{{g, 1}}, inverse(defining)));
  bool found = false;
  for (const Word& r : p.relators)
    if (canonical_relator(r) == witness) {
      found = true;
      break;
    }
  if (!found)
    throw std::runtime_error("no witness relator for eliminating " + g);

  std::unordered_map<std::string, Word> images{{g, defining}};
  Presentation out;
  for (const std::string& name : p.gens)
    if (name != g) out.gens.push_back(name);
  for (const Word& r : p.relators) out.relators.push_back(apply_map(r, images));
  return normalize_relators(out);
}

Presentation direct_product(const Presentation& a, const Presentation& b) {
  for (const std::string& g : b.gens)
    if (a.has_gen(g))
      throw std::runtime_error("direct_product: generator sets overlap at " + g);
  Presentation out;
  out.gens = a.gens;
  out.gens.insert(out.gens.end(), b.gens.begin(), b.gens.end());
  out.relators = a.relators;
  out.relators.insert(out.relators.end(), b.relators.begin(), b.relators.end());
  for (const std::string& ga : a.gens)
    for (const std::string& gb : b.gens)
      out.relators.push_back(commutator(Word{{ga, 1}}, Word{{gb, 1}}));
  return normalize_relators(out);
}

Presentation quotient_by_words(const Presentation& p, const std::vector<Word>& words) {
  Presentation out = p;
  for (const Word& w : words) {
    check_letters(p, w, "quotient word");
    out.relators.push_back(w);
  }
  return normalize_relators(out);
}

AbelianInvariants abelianization(const Presentation& p) {
  const std::size_t ng = p.gens.size();
  std::unordered_map<std::string, std::size_t> idx;
  for (std::size_t i = 0; i < ng; ++i) idx[p.gens[i]] = i;
  IntMatrix m;
  for (const Word& r : p.relators) {
    std::vector<BigInt> row(ng, 0);
    for (const Letter& l : r) row[idx.at(l.gen)] += l.sign;
    m.push_back(std::move(row));
  }
  if (m.empty()) m.push_back(std::vector<BigInt>(ng, 0));
  auto diag = smith_diagonal(std::move(m));
  AbelianInvariants inv;
  long long nonzero = 0;
  for (const BigInt& d : diag) {
    if (d == 0) continue;
    ++nonzero;
    if (d >= 2) inv.torsion.push_back(d);
  }
  inv.rank = static_cast<long long>(ng) - nonzero;
  return inv;
}

std::string render_abelian(const AbelianInvariants& inv) {
  std::vector<std::string> parts;
  if (inv.rank == 1) parts.push_back("Z");
  else if (inv.rank > 1) parts.push_back("Z^" + std::to_string(inv.rank));
  for (const BigInt& d : inv.torsion) parts.push_back("Z/" + d.str());
  if (parts.empty()) return "1";
  std::string out = parts[0];
  for (std::size_t i = 1; i < parts.size(); ++i) out += " x " + parts[i];
  return out;
}

Presentation parse_presentation(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  Presentation p;
  bool have_gens = false;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    auto hash = line.find('#');
    if (hash != std::string::npos) line.resize(hash);
    std::size_t a = line.find_first_not_of(" \t\r");
    if (a == std::string::npos) continue;
    std::size_t b = line.find_last_not_of(" \t\r");
    line = line.substr(a, b - a + 1);
    if (!have_gens) {
      if (line.rfind("gens:", 0) != 0)
        throw std::runtime_error("line " + std::to_string(lineno) +
                                 ": expected 'gens:' header");
      std::string rest = line.substr(5);
      std::istringstream gs(rest);
      std::string tok;
      while (std::getline(gs, tok, ',')) {
        std::size_t x = tok.find_first_not_of(" \t");
        if (x == std::string::npos) continue;
        std::size_t y = tok.find_last_not_of(" \t");
        std::string name = tok.substr(x, y - x + 1);
        if (p.has_gen(name))
          throw std::runtime_error("duplicate generator " + name);
        p.gens.push_back(name);
      }
      have_gens = true;
      continue;
    }
    Word r = parse_word(line);
    check_letters(p, r, "relator");
    p.relators.push_back(std::move(r));
  }
  if (!have_gens) throw std::runtime_error("missing 'gens:' header");
  return p;
}

std::string render_presentation(const Presentation& p) {
  std::string out = "gens:";
  for (std::size_t i = 0; i < p.gens.size(); ++i)
    out += (i ? ", " : " ") + p.gens[i];
  out += '\n';
  for (const Word& r : p.relators) {
    out += render_word(r);
    out += '\n';
  }
  return out;
}

}  // namespace mcgcert
