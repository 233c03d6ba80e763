#include "mcgcert/polymatrix.hpp"

#include <stdexcept>

namespace mcgcert {

PolyMatrix PolyMatrix::identity(int dim) {
  PolyMatrix m(dim);
  for (int i = 0; i < dim; ++i) m.at(i, i) = LaurentPoly::one();
  return m;
}

PolyMatrix PolyMatrix::operator*(const PolyMatrix& o) const {
  if (dim_ != o.dim_) throw std::runtime_error("matrix dimension mismatch");
  PolyMatrix out(dim_);
  for (int i = 0; i < dim_; ++i)
    for (int k = 0; k < dim_; ++k) {
      const LaurentPoly& a = at(i, k);
      if (a.is_zero()) continue;
      for (int j = 0; j < dim_; ++j) {
        const LaurentPoly& b = o.at(k, j);
        if (b.is_zero()) continue;
        out.at(i, j) += a * b;
      }
    }
  return out;
}

PolyMatrix PolyMatrix::operator+(const PolyMatrix& o) const {
  if (dim_ != o.dim_) throw std::runtime_error("matrix dimension mismatch");
  PolyMatrix out(dim_);
  for (std::size_t i = 0; i < e_.size(); ++i) out.e_[i] = e_[i] + o.e_[i];
  return out;
}

PolyMatrix PolyMatrix::scaled(const LaurentPoly& s) const {
  PolyMatrix out(dim_);
  for (std::size_t i = 0; i < e_.size(); ++i) out.e_[i] = e_[i] * s;
  return out;
}

PolyMatrix PolyMatrix::shifted_scalar(int dq, int dt, const Coef& c) const {
  PolyMatrix out(dim_);
  for (std::size_t i = 0; i < e_.size(); ++i) out.e_[i] = e_[i].shifted(dq, dt, c);
  return out;
}

bool PolyMatrix::is_identity() const {
  for (int i = 0; i < dim_; ++i)
    for (int j = 0; j < dim_; ++j) {
      if (i == j && !at(i, j).is_one()) return false;
      if (i != j && !at(i, j).is_zero()) return false;
    }
  return true;
}

bool PolyMatrix::is_zero() const {
  for (const LaurentPoly& p : e_)
    if (!p.is_zero()) return false;
  return true;
}

PolyMatrix PolyMatrix::direct_sum(const PolyMatrix& a, const PolyMatrix& b) {
  PolyMatrix out(a.dim_ + b.dim_);
  for (int i = 0; i < a.dim_; ++i)
    for (int j = 0; j < a.dim_; ++j) out.at(i, j) = a.at(i, j);
  for (int i = 0; i < b.dim_; ++i)
    for (int j = 0; j < b.dim_; ++j) out.at(a.dim_ + i, a.dim_ + j) = b.at(i, j);
  return out;
}

std::optional<LTerm> monomial_scalar_of(const PolyMatrix& m) {
  if (m.dim() == 0) return std::nullopt;
  const LaurentPoly& d = m.at(0, 0);
  if (!d.is_monomial()) return std::nullopt;
  const LTerm& t = d.terms()[0];
  if (t.c != 1 && t.c != -1) return std::nullopt;
  for (int i = 0; i < m.dim(); ++i)
    for (int j = 0; j < m.dim(); ++j) {
      if (i == j && !(m.at(i, j) == d)) return std::nullopt;
      if (i != j && !m.at(i, j).is_zero()) return std::nullopt;
    }
  return d.terms()[0];
}

std::optional<LTerm> projective_scalar_between(const PolyMatrix& m1,
                                               const PolyMatrix& m2) {
  if (m1.dim() != m2.dim()) return std::nullopt;
  const LaurentPoly* p1 = nullptr;
  const LaurentPoly* p2 = nullptr;
  for (int i = 0; i < m1.dim() && !p1; ++i)
    for (int j = 0; j < m1.dim() && !p1; ++j)
      if (!m1.at(i, j).is_zero() || !m2.at(i, j).is_zero()) {
        p1 = &m1.at(i, j);
        p2 = &m2.at(i, j);
      }
  if (!p1) return LTerm{0, 0, 1};  // both zero matrices
  if (p1->is_zero() || p2->is_zero()) return std::nullopt;
  const LTerm& l1 = p1->terms().front();
  const LTerm& l2 = p2->terms().front();
  if (l2.c % l1.c != 0) return std::nullopt;
  LTerm u{l2.dq - l1.dq, l2.dt - l1.dt, l2.c / l1.c};
  if (u.c != 1 && u.c != -1) return std::nullopt;
  for (int i = 0; i < m1.dim(); ++i)
    for (int j = 0; j < m1.dim(); ++j)
      if (!(m1.at(i, j).shifted(u.dq, u.dt, u.c) == m2.at(i, j)))
        return std::nullopt;
  return u;
}

}  // namespace mcgcert
