#include "mcgcert/coxeter.hpp"

#include <deque>
#include <stdexcept>
#include <unordered_map>

namespace mcgcert {

CoxElement CoxElement::identity(int n) {
  CoxElement e;
  e.n = static_cast<std::uint8_t>(n);
  for (int i = 0; i < n; ++i) e.img[i] = static_cast<std::int8_t>(i + 1);
  return e;
}

std::uint64_t CoxElement::key() const {
  std::uint64_t k = 0;
  for (int i = 0; i < n; ++i)
    k = (k << 5) | static_cast<std::uint64_t>(img[i] + 9);
  return k;
}

CoxElement cox_mul(const CoxElement& x, const CoxElement& y) {
  CoxElement z;
  z.n = x.n;
  for (int i = 0; i < x.n; ++i) {
    int v = y.img[i];
    int a = v < 0 ? -v : v;
    int w = x.img[a - 1];
    z.img[i] = static_cast<std::int8_t>(v < 0 ? -w : w);
  }
  return z;
}

CoxElement cox_inv(const CoxElement& x) {
  CoxElement z;
  z.n = x.n;
  for (int i = 0; i < x.n; ++i) {
    int v = x.img[i];
    int a = v < 0 ? -v : v;
    z.img[a - 1] = static_cast<std::int8_t>(v < 0 ? -(i + 1) : (i + 1));
  }
  return z;
}

CoxeterSystem CoxeterSystem::type_a(int n, std::vector<std::string> names) {
  if (n < 2 || n > 8) throw std::runtime_error("type_a degree out of range");
  CoxeterSystem sys;
  sys.kind_ = CoxKind::TypeA;
  sys.n_ = n;
  if (names.empty())
    for (int i = 1; i < n; ++i) names.push_back("s" + std::to_string(i));
  if (static_cast<int>(names.size()) != n - 1)
    throw std::runtime_error("type_a needs n-1 atom names");
  sys.names_ = std::move(names);
  for (int i = 0; i < n - 1; ++i) {
    CoxElement s = CoxElement::identity(n);
    std::swap(s.img[i], s.img[i + 1]);
    sys.atoms_.push_back(s);
  }
  sys.finish();
  return sys;
}

CoxeterSystem CoxeterSystem::type_d4(std::vector<std::string> names) {
  CoxeterSystem sys;
  sys.kind_ = CoxKind::TypeD4;
  sys.n_ = 4;
  if (names.empty()) names = {"a1", "a2", "a3", "b"};
  if (names.size() != 4) throw std::runtime_error("type_d4 needs 4 atom names");
  sys.names_ = std::move(names);
  auto swap_at = [](int i) {
    CoxElement s = CoxElement::identity(4);
    std::swap(s.img[i], s.img[i + 1]);
    return s;
  };
  CoxElement a3 = CoxElement::identity(4);  // 3 -> -4, 4 -> -3
  a3.img[2] = -4;
  a3.img[3] = -3;
  sys.atoms_ = {swap_at(0), swap_at(2), a3, swap_at(1)};
  sys.finish();
  return sys;
}

std::optional<int> CoxeterSystem::atom_index(const std::string& name) const {
  for (std::size_t i = 0; i < names_.size(); ++i)
    if (names_[i] == name) return static_cast<int>(i);
  return std::nullopt;
}

// Number of positive roots sent negative. Positive roots are e_i - e_j and,
// in the signed model, e_i + e_j (i < j); the four sign cases below are the
// conditions for each image root to be negative. Type A permutations have all
// entries positive, so the count degenerates to the inversion number.
int CoxeterSystem::length(const CoxElement& x) const {
  int cnt = 0;
  for (int i = 0; i < n_; ++i)
    for (int j = i + 1; j < n_; ++j) {
      int a = x.img[i], b = x.img[j];
      if ((a < 0) == (b < 0)) {
        if (a > b) ++cnt;
        if (a < 0) ++cnt;
      } else {
        if (a < 0) ++cnt;
        if (a + b > 0) ++cnt;
      }
    }
  return cnt;
}

LengthDescents CoxeterSystem::length_and_descents(const CoxElement& x) const {
  LengthDescents ld;
  ld.length = length(x);
  for (int i = 0; i < rank(); ++i) {
    if (length(cox_mul(atoms_[i], x)) < ld.length) ld.left |= (1u << i);
    if (length(cox_mul(x, atoms_[i])) < ld.length) ld.right |= (1u << i);
  }
  return ld;
}

CoxElement CoxeterSystem::tau(const CoxElement& x) const {
  return cox_mul(cox_mul(w0_, x), w0_);
}

void CoxeterSystem::finish() {
  EnumerationResult r = enumerate_with_w0(*this);
  order_ = r.order;
  w0_ = r.w0;
  tau_.assign(rank(), -1);
  for (int i = 0; i < rank(); ++i) {
    CoxElement t = cox_mul(cox_mul(w0_, atoms_[i]), w0_);
    for (int j = 0; j < rank(); ++j)
      if (t == atoms_[j]) {
        tau_[i] = j;
        break;
      }
    if (tau_[i] < 0) throw std::runtime_error("w0 conjugation does not permute atoms");
  }
}

EnumerationResult enumerate_with_w0(const CoxeterSystem& sys) {
  std::unordered_map<std::uint64_t, int> depth;
  std::deque<CoxElement> queue;
  CoxElement e = sys.identity();
  depth[e.key()] = 0;
  queue.push_back(e);
  EnumerationResult res;
  res.w0 = e;
  bool unique_max = true;
  while (!queue.empty()) {
    CoxElement x = queue.front();
    queue.pop_front();
    int d = depth[x.key()];
    if (sys.length(x) != d)
      throw std::runtime_error("length formula disagrees with BFS depth");
    if (d > res.max_length) {
      res.max_length = d;
      res.w0 = x;
      unique_max = true;
    } else if (d == res.max_length && !(x == res.w0)) {
      unique_max = false;
    }
    for (int i = 0; i < sys.rank(); ++i) {
      CoxElement y = cox_mul(x, sys.atom(i));
      auto [it, fresh] = depth.try_emplace(y.key(), d + 1);
      if (fresh)
        queue.push_back(y);
      else if (it->second != d + 1 && it->second != d - 1)
        throw std::runtime_error("BFS parity violation");
    }
  }
  if (!unique_max) throw std::runtime_error("longest element not unique");
  res.order = depth.size();
  return res;
}

}  // namespace mcgcert
