#include "mcgcert/word.hpp"

#include <cctype>
#include <cstdlib>

namespace mcgcert {

namespace {

bool name_start(char c) { return std::isalpha(static_cast<unsigned char>(c)); }
bool name_cont(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
}

Word parse_letters(const std::string& text) {
  Word out;
  std::size_t i = 0;
  const std::size_t n = text.size();
  while (i < n) {
    if (std::isspace(static_cast<unsigned char>(text[i]))) {
      ++i;
      continue;
    }
    if (!name_start(text[i]))
      throw ParseError("expected generator name", i);
    std::size_t start = i;
    ++i;
    while (i < n && name_cont(text[i])) ++i;
    std::string name = text.substr(start, i - start);
    long long exp = 1;
    if (i < n && text[i] == '^') {
      ++i;
      std::size_t estart = i;
      bool neg = false;
      if (i < n && text[i] == '-') {
        neg = true;
        ++i;
      }
      if (i >= n || text[i] < '1' || text[i] > '9')
        throw ParseError("expected nonzero exponent", estart);
      long long mag = 0;
      while (i < n && std::isdigit(static_cast<unsigned char>(text[i]))) {
        mag = mag * 10 + (text[i] - '0');
        if (mag > 1000000) throw ParseError("exponent too large", estart);
        ++i;
      }
      exp = neg ? -mag : mag;
    }
    if (i < n && !std::isspace(static_cast<unsigned char>(text[i])))
      throw ParseError("expected whitespace after atom", i);
    int sign = exp >= 0 ? 1 : -1;
    long long mag = exp >= 0 ? exp : -exp;
    for (long long k = 0; k < mag; ++k) out.push_back({name, sign});
  }
  return out;
}

}  // namespace

Word parse_word(const std::string& text) { return free_reduce(parse_letters(text)); }

Word parse_word(const std::string& text, const std::vector<std::string>& alphabet) {
  Word raw = parse_letters(text);
  for (const Letter& l : raw) {
    bool known = false;
    for (const std::string& g : alphabet)
      if (g == l.gen) {
        known = true;
        break;
      }
    if (!known) throw ParseError("unknown generator " + l.gen, text.find(l.gen));
  }
  return free_reduce(raw);
}

Word free_reduce(const Word& w) {
  Word out;
  for (const Letter& l : w) {
    if (!out.empty() && out.back().gen == l.gen && out.back().sign == -l.sign)
      out.pop_back();
    else
      out.push_back(l);
  }
  return out;
}

Word inverse(const Word& w) {
  Word out;
  out.reserve(w.size());
  for (auto it = w.rbegin(); it != w.rend(); ++it)
    out.push_back({it->gen, -it->sign});
  return out;
}

Word concat(const Word& a, const Word& b) {
  Word out = a;
  out.insert(out.end(), b.begin(), b.end());
  return out;
}

Word power(const Word& w, long long k) {
  Word base = k >= 0 ? w : inverse(w);
  long long mag = k >= 0 ? k : -k;
  Word out;
  out.reserve(base.size() * static_cast<std::size_t>(mag));
  for (long long i = 0; i < mag; ++i)
    out.insert(out.end(), base.begin(), base.end());
  return out;
}

Word apply_map(const Word& w, const std::unordered_map<std::string, Word>& images) {
  Word out;
  for (const Letter& l : w) {
    auto it = images.find(l.gen);
    if (it == images.end()) {
      out.push_back(l);
    } else if (l.sign > 0) {
      out.insert(out.end(), it->second.begin(), it->second.end());
    } else {
      Word inv = inverse(it->second);
      out.insert(out.end(), inv.begin(), inv.end());
    }
  }
  return free_reduce(out);
}

std::string render_word(const Word& w) {
  std::string out;
  for (const Letter& l : w) {
    if (!out.empty()) out += ' ';
    out += l.gen;
    if (l.sign < 0) out += "^-1";
  }
  return out;
}

Word commutator(const Word& a, const Word& b) {
  return free_reduce(concat(concat(a, b), concat(inverse(a), inverse(b))));
}

bool is_positive(const Word& w) {
  for (const Letter& l : w)
    if (l.sign < 0) return false;
  return true;
}

}  // namespace mcgcert
