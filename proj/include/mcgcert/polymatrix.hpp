#pragma once

#include <optional>
#include <vector>

#include "mcgcert/laurent.hpp"

namespace mcgcert {

// Dense square matrix of Laurent polynomials, row major.
class PolyMatrix {
 public:
  PolyMatrix() = default;
  explicit PolyMatrix(int dim) : dim_(dim), e_(static_cast<std::size_t>(dim) * dim) {}
  static PolyMatrix identity(int dim);

  int dim() const { return dim_; }
  LaurentPoly& at(int i, int j) { return e_[static_cast<std::size_t>(i) * dim_ + j]; }
  const LaurentPoly& at(int i, int j) const {
    return e_[static_cast<std::size_t>(i) * dim_ + j];
  }

  friend bool operator==(const PolyMatrix&, const PolyMatrix&) = default;

  PolyMatrix operator*(const PolyMatrix& o) const;
  PolyMatrix operator+(const PolyMatrix& o) const;
  PolyMatrix scaled(const LaurentPoly& s) const;
  PolyMatrix shifted_scalar(int dq, int dt, const Coef& c) const;

  bool is_identity() const;
  bool is_zero() const;

  // Block diagonal join.
  static PolyMatrix direct_sum(const PolyMatrix& a, const PolyMatrix& b);

 private:
  int dim_ = 0;
  std::vector<LaurentPoly> e_;
};

// If m equals (monomial) * identity, returns that monomial term.
std::optional<LTerm> monomial_scalar_of(const PolyMatrix& m);

// If m2 == u * m1 for a unit monomial u, returns u. Candidate from leading
// terms, then exact entrywise verification.
std::optional<LTerm> projective_scalar_between(const PolyMatrix& m1,
                                               const PolyMatrix& m2);

}  // namespace mcgcert
