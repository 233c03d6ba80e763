#pragma once

#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

namespace mcgcert {

struct Letter {
  std::string gen;
  int sign = 1;  // +1 or -1
  friend bool operator==(const Letter&, const Letter&) = default;
};

// Immutable-by-convention sequence of letters in a free group.
using Word = std::vector<Letter>;

struct ParseError : std::runtime_error {
  std::size_t pos;
  ParseError(const std::string& msg, std::size_t p)
      : std::runtime_error(msg + " at position " + std::to_string(p)), pos(p) {}
};

// Grammar:
//   word := atom (WS atom)* | epsilon
//   atom := name | name "^" int
//   name := [A-Za-z][A-Za-z0-9_]*
//   int  := "-"? [1-9][0-9]*
Word parse_word(const std::string& text);

// Same grammar, but every name must come from the given alphabet.
Word parse_word(const std::string& text, const std::vector<std::string>& alphabet);

Word free_reduce(const Word& w);
Word inverse(const Word& w);
Word concat(const Word& a, const Word& b);
Word power(const Word& w, long long k);

// Rewrites each letter through the map; generators absent from the map pass
// through unchanged. Negative letters map to the inverted image. Result is
// freely reduced.
Word apply_map(const Word& w, const std::unordered_map<std::string, Word>& images);

// Every letter spelled out, inverses as name^-1, space separated; empty word
// renders as "".
std::string render_word(const Word& w);

Word commutator(const Word& a, const Word& b);
bool is_positive(const Word& w);

}  // namespace mcgcert
