#pragma once

#include <array>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "mcgcert/coxeter.hpp"
#include "mcgcert/presentation.hpp"

namespace mcgcert {

struct SurfaceTriple {
  int g = 0;
  int b = 0;
  int n = 0;
  friend bool operator==(const SurfaceTriple&, const SurfaceTriple&) = default;
  std::string str() const;
};

// Good handle-index triples (i,j,k) with i <= j < k over {1..3}.
std::vector<std::array<int, 3>> good_triples(int k);

enum class CurveRole { CentralB, HandleA, BoundaryC };

struct GervaisData {
  Presentation presentation;
  std::map<std::string, CurveRole> curve_roles;
  std::vector<std::string> boundary_caps;  // capping order for the chain
};

// Twist presentations for the genus-1 surfaces with 3 resp. 2 boundary
// components. Star relators are emitted in their fundamental-element form:
// cij cji = (ai b aj)^4 and c12 c23 c31 = (a1 a2 a3 b)^3.
GervaisData gervais_presentation(const SurfaceTriple& t);

// Word for (ai b aj)^4, the boundary pair product of handles i, j.
Word delta_ij_squared(int i, int j);
// Word for (a1 a2 a3 b)^3.
Word delta_123();

// Kills the boundary twist c (adds the relator c = 1, then normalizes).
Presentation cap_boundary(const Presentation& p, const std::string& c);

struct PureBraidData {
  Presentation presentation;                       // generators Aij, i < j
  std::map<std::string, Word> embedding;           // Aij -> band word over s1..s(k-1)
  int strands = 0;
};

PureBraidData pure_braid_presentation(int k);
// Ordered product A12 (A13 A23) (A14 A24 A34) ...
Word full_twist_word(int k);

// -------------------------------------------------------------------------

struct GroupExpr;
using GroupExprPtr = std::shared_ptr<const GroupExpr>;

struct GroupExpr {
  enum class Kind { ArtinA, ArtinD4, FreeAbelian, PureBraid, Product, CentralQuotient };
  Kind kind = Kind::ArtinA;
  int param = 0;                     // strand count or abelian rank
  std::vector<std::string> names;    // leaf generator names
  std::vector<GroupExprPtr> children;
  Word center;                       // CentralQuotient only

  static GroupExprPtr artin_a(int n, std::vector<std::string> names = {});
  static GroupExprPtr artin_d4(std::vector<std::string> names = {});
  static GroupExprPtr free_abelian(std::vector<std::string> names);
  static GroupExprPtr pure_braid(int k);
  static GroupExprPtr product(std::vector<GroupExprPtr> parts);
  // Validates centrality of z against the child's oracle; throws otherwise.
  static GroupExprPtr central_quotient(GroupExprPtr child, Word z);
};

std::string render_group(const GroupExpr& e);

// Word-problem oracle over a group expression. Decision routes: Garside
// normal form for Artin leaves, exponent vectors for free abelian leaves,
// band-word embedding for pure braids, componentwise splitting for products,
// and central-power matching for central quotients.
class GroupOracle {
 public:
  explicit GroupOracle(GroupExprPtr e);
  ~GroupOracle();
  GroupOracle(GroupOracle&&) noexcept;

  const GroupExpr& expr() const { return *expr_; }
  const std::vector<std::string>& alphabet() const { return alphabet_; }
  bool owns(const std::string& gen) const;
  bool is_trivial(const Word& w) const;
  bool equal(const Word& u, const Word& v) const;
  Presentation presentation() const;

 private:
  struct Impl;
  GroupExprPtr expr_;
  std::vector<std::string> alphabet_;
  std::unique_ptr<Impl> impl_;
};

}  // namespace mcgcert
