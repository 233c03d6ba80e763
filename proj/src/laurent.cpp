#include "mcgcert/laurent.hpp"

#include <algorithm>

namespace mcgcert {

namespace {

bool key_less(const LTerm& a, const LTerm& b) {
  if (a.dq != b.dq) return a.dq < b.dq;
  return a.dt < b.dt;
}

}  // namespace

LaurentPoly LaurentPoly::monomial(int dq, int dt, Coef c) {
  LaurentPoly p;
  if (c != 0) p.terms_.push_back({dq, dt, std::move(c)});
  return p;
}

bool LaurentPoly::is_one() const {
  return terms_.size() == 1 && terms_[0].dq == 0 && terms_[0].dt == 0 &&
         terms_[0].c == 1;
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly p = *this;
  for (LTerm& t : p.terms_) t.c = -t.c;
  return p;
}

LaurentPoly LaurentPoly::operator+(const LaurentPoly& o) const {
  LaurentPoly out;
  out.terms_.reserve(terms_.size() + o.terms_.size());
  std::size_t i = 0, j = 0;
  while (i < terms_.size() || j < o.terms_.size()) {
    if (j == o.terms_.size() ||
        (i < terms_.size() && key_less(terms_[i], o.terms_[j]))) {
      out.terms_.push_back(terms_[i++]);
    } else if (i == terms_.size() || key_less(o.terms_[j], terms_[i])) {
      out.terms_.push_back(o.terms_[j++]);
    } else {
      Coef c = terms_[i].c + o.terms_[j].c;
      if (c != 0) out.terms_.push_back({terms_[i].dq, terms_[i].dt, std::move(c)});
      ++i;
      ++j;
    }
  }
  return out;
}

LaurentPoly LaurentPoly::operator-(const LaurentPoly& o) const { return *this + (-o); }

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
  *this = *this + o;
  return *this;
}

LaurentPoly LaurentPoly::operator*(const LaurentPoly& o) const {
  if (is_zero() || o.is_zero()) return {};
  if (o.is_monomial())
    return shifted(o.terms_[0].dq, o.terms_[0].dt, o.terms_[0].c);
  if (is_monomial())
    return o.shifted(terms_[0].dq, terms_[0].dt, terms_[0].c);
  std::vector<LTerm> prod;
  prod.reserve(terms_.size() * o.terms_.size());
  for (const LTerm& a : terms_)
    for (const LTerm& b : o.terms_)
      prod.push_back({a.dq + b.dq, a.dt + b.dt, a.c * b.c});
  std::sort(prod.begin(), prod.end(), key_less);
  LaurentPoly out;
  for (LTerm& t : prod) {
    if (!out.terms_.empty() && out.terms_.back().dq == t.dq &&
        out.terms_.back().dt == t.dt) {
      out.terms_.back().c += t.c;
      if (out.terms_.back().c == 0) out.terms_.pop_back();
    } else if (t.c != 0) {
      out.terms_.push_back(std::move(t));
    }
  }
  return out;
}

LaurentPoly LaurentPoly::shifted(int dq, int dt, const Coef& c) const {
  LaurentPoly out;
  if (c == 0) return out;
  out.terms_.reserve(terms_.size());
  for (const LTerm& t : terms_) {
    Coef nc = t.c * c;
    if (nc != 0) out.terms_.push_back({t.dq + dq, t.dt + dt, std::move(nc)});
  }
  return out;
}

std::string LaurentPoly::str() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (std::size_t i = 0; i < terms_.size(); ++i) {
    const LTerm& t = terms_[i];
    Coef a = t.c < 0 ? Coef(-t.c) : t.c;
    if (i == 0)
      out += (t.c < 0 ? "-" : "");
    else
      out += (t.c < 0 ? " - " : " + ");
    bool has_vars = t.dq != 0 || t.dt != 0;
    if (a != 1 || !has_vars) out += a.str();
    if (t.dq != 0) {
      if (out.size() && out.back() != '-' && out.back() != ' ' && (a != 1 || !has_vars))
        out += ' ';
      out += "q";
      if (t.dq != 1) out += "^" + std::to_string(t.dq);
    }
    if (t.dt != 0) {
      if (t.dq != 0 || a != 1) out += ' ';
      out += "t";
      if (t.dt != 1) out += "^" + std::to_string(t.dt);
    }
  }
  return out;
}

}  // namespace mcgcert
