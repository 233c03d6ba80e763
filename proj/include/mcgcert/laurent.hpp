#pragma once

#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace mcgcert {

using Coef = boost::multiprecision::cpp_int;

struct LTerm {
  int dq = 0;
  int dt = 0;
  Coef c;
  friend bool operator==(const LTerm&, const LTerm&) = default;
};

// Bivariate Laurent polynomial in q, t over the integers. Terms are kept
// sorted by (dq, dt) with no zero coefficients, so equality is structural.
class LaurentPoly {
 public:
  LaurentPoly() = default;
  static LaurentPoly zero() { return {}; }
  static LaurentPoly one() { return monomial(0, 0, 1); }
  static LaurentPoly monomial(int dq, int dt, Coef c);

  bool is_zero() const { return terms_.empty(); }
  bool is_one() const;
  bool is_monomial() const { return terms_.size() == 1; }
  const std::vector<LTerm>& terms() const { return terms_; }

  friend bool operator==(const LaurentPoly&, const LaurentPoly&) = default;

  LaurentPoly operator-() const;
  LaurentPoly operator+(const LaurentPoly& o) const;
  LaurentPoly operator-(const LaurentPoly& o) const;
  LaurentPoly operator*(const LaurentPoly& o) const;
  LaurentPoly& operator+=(const LaurentPoly& o);

  // Multiply by a monomial (exact, units are invertible).
  LaurentPoly shifted(int dq, int dt, const Coef& c) const;

  std::string str() const;

 private:
  std::vector<LTerm> terms_;
};

}  // namespace mcgcert
