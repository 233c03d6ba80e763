#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace mcgcert {

// Element of a finite Coxeter group realized as a signed permutation of
// {1..n}: img[i-1] = w(i), negative for sign flip. Type A elements keep all
// values positive; type D4 elements flip an even number of signs.
struct CoxElement {
  std::uint8_t n = 0;
  std::array<std::int8_t, 8> img{};

  static CoxElement identity(int n);
  friend bool operator==(const CoxElement&, const CoxElement&) = default;
  std::uint64_t key() const;
};

CoxElement cox_mul(const CoxElement& x, const CoxElement& y);
CoxElement cox_inv(const CoxElement& x);

enum class CoxKind { TypeA, TypeD4 };

struct LengthDescents {
  int length = 0;
  std::uint32_t left = 0;   // bitmask over atom indices
  std::uint32_t right = 0;
};

class CoxeterSystem {
 public:
  // Symmetric group S_n with adjacent transpositions; default atom names
  // s1..s(n-1). 2 <= n <= 8.
  static CoxeterSystem type_a(int n, std::vector<std::string> names = {});
  // Star on four atoms ordered (a1, a2, a3, b) with b the center.
  static CoxeterSystem type_d4(std::vector<std::string> names = {});

  CoxKind kind() const { return kind_; }
  int rank() const { return static_cast<int>(atoms_.size()); }
  int degree() const { return n_; }
  const std::vector<std::string>& atom_names() const { return names_; }
  const CoxElement& atom(int i) const { return atoms_[i]; }
  std::optional<int> atom_index(const std::string& name) const;

  CoxElement identity() const { return CoxElement::identity(n_); }
  int length(const CoxElement& x) const;
  LengthDescents length_and_descents(const CoxElement& x) const;

  std::uint64_t order() const { return order_; }
  const CoxElement& w0() const { return w0_; }
  // Atom permutation induced by conjugation with w0.
  int tau_atom(int i) const { return tau_[i]; }
  CoxElement tau(const CoxElement& x) const;

 private:
  CoxeterSystem() = default;
  void finish();  // enumerate, validate lengths, find w0 and tau

  CoxKind kind_ = CoxKind::TypeA;
  int n_ = 0;
  std::vector<std::string> names_;
  std::vector<CoxElement> atoms_;
  std::uint64_t order_ = 0;
  CoxElement w0_;
  std::vector<int> tau_;
};

struct EnumerationResult {
  std::uint64_t order = 0;
  CoxElement w0;
  int max_length = 0;
};

// Breadth-first enumeration from the identity. Validates that the closed
// length formula matches BFS depth for every element and that the longest
// element is unique; throws on violation.
EnumerationResult enumerate_with_w0(const CoxeterSystem& sys);

}  // namespace mcgcert
