#pragma once

#include <string>
#include <unordered_map>
#include <vector>

#include "mcgcert/polymatrix.hpp"
#include "mcgcert/word.hpp"

namespace mcgcert {

// Matrix representation over Z[q^±1, t^±1]: exact images and inverse images
// for a fixed generator alphabet. Factories verify the defining relations and
// the inverse pairs before returning; they throw on any failure.
struct Representation {
  std::string convention;
  int dim = 0;
  std::vector<std::string> gens;
  std::vector<std::string> basis_labels;
  std::unordered_map<std::string, PolyMatrix> image;
  std::unordered_map<std::string, PolyMatrix> inverse_image;

  const PolyMatrix& of(const Letter& l) const;
};

// Braid group on n strands acting on the n(n-1)/2 two-point configurations,
// columns follow the classical table. 2 <= n <= 5. Default atom names
// s1..s(n-1).
Representation lk_representation(int n, std::vector<std::string> names = {});

// 12-dimensional representation of the Artin group on the star graph
// (a1, a2, a3, b): basis indexed by the positive roots of the underlying
// rank-4 root system, minus-roots first. Generator columns follow the same
// local shape as the braid case plus same-support spill entries on
// orthogonal roots.
Representation cw_representation_d4(std::vector<std::string> names = {});

// Rank-k free abelian representation, generator i acting by q on its own
// one-dimensional block.
Representation free_abelian_representation(const std::vector<std::string>& names);

// Block-diagonal join; generator alphabets must be disjoint.
Representation rep_direct_sum(const Representation& a, const Representation& b);

PolyMatrix evaluate_word_matrix(const Representation& rep, const Word& w);

// Inverse of a generator image satisfying (M - 1)(M + q)(M + t q^2) = 0.
PolyMatrix inverse_from_cubic(const PolyMatrix& m);

}  // namespace mcgcert
