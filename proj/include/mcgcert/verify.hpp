#pragma once

#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include <json.hpp>

#include "mcgcert/garside.hpp"
#include "mcgcert/linrep.hpp"
#include "mcgcert/mcg.hpp"
#include "mcgcert/presentation.hpp"

namespace mcgcert {

using Json = nlohmann::json;

struct CertStep {
  std::string desc;
  bool ok = false;
  Json witness;
};

// A claim plus the checked steps backing it. Passes iff every step passed.
// Deterministic apart from metadata["elapsed_ms"].
struct Certificate {
  std::string claim;
  Json metadata = Json::object();
  std::vector<CertStep> steps;

  bool pass() const;
  void add(std::string desc, bool ok, Json witness = Json());
};

Json certificate_json(const Certificate& c);
Certificate certificate_from_json(const Json& j);
std::string render_certificate(const Certificate& c);

Json group_expr_json(const GroupExpr& e);
Json garside_json(const GarsideElement& g);
Json poly_json(const LaurentPoly& p);
Json matrix_json(const PolyMatrix& m);

// One presentation-simplification claim: after the listed generator
// eliminations, the surviving relators are exactly the target presentation's
// relators plus extras that are trivial in the target group. That makes the
// presented group isomorphic to the target.
struct CollapseProof {
  Presentation source;
  std::vector<std::pair<std::string, Word>> eliminations;
  GroupExprPtr target;
  Presentation target_presentation;
  std::vector<Word> extra_relators;
};

// Performs the eliminations and splits the survivors against the target's
// presentation. Missing target relators are left for verify_collapse to
// report as a failed step.
CollapseProof make_collapse(const Presentation& source,
                            std::vector<std::pair<std::string, Word>> eliminations,
                            GroupExprPtr target);

Certificate verify_collapse(const CollapseProof& cp);

// images must cover every source generator and write only letters of the
// target's alphabet; passes iff every source relator maps to a trivial word.
Certificate check_homomorphism(const Presentation& source,
                               const GroupOracle& target,
                               const std::unordered_map<std::string, Word>& images,
                               const std::string& claim);

// Worked-out reduction for one genus-1 table row: capping chain, staged
// collapses, and the re-expansion of the eliminated twists as target words.
struct GenusOnePlan {
  SurfaceTriple t;
  std::string claim;
  GervaisData base;
  std::vector<std::string> caps;
  Presentation source;  // base presentation with caps applied
  std::vector<CollapseProof> stages;
  std::unordered_map<std::string, Word> expansion;
  GroupExprPtr target;
};
GenusOnePlan genus1_plan(const SurfaceTriple& t);

// Genus-0 rows: the product model and, for m+n >= 3, the mutually inverse
// generator maps onto the second splitting.
struct GenusZeroPlan {
  SurfaceTriple t;
  std::string claim;
  GroupExprPtr first;
  GroupExprPtr second;  // null when m + n < 3
  std::unordered_map<std::string, Word> phi;  // first -> second
  std::unordered_map<std::string, Word> psi;  // second -> first
};
GenusZeroPlan genus0_plan(const SurfaceTriple& t);

// The supported table rows: seven genus-1 triples followed by (0,m,n) for
// 2 <= m and m+n <= bound.
std::vector<SurfaceTriple> table_rows(int bound = 6);

Certificate verify_row(const SurfaceTriple& t, int bound = 6);
Certificate verify_word_identities();
Certificate verify_star_identities();
Certificate verify_center_claims();
Certificate hamidi_tehrani();

// Block matrix model for a table row: the target expression's faithful
// blocks composed with the row's certified generator expansion. Projective
// mode when the target is (or contains) a central quotient: relators land on
// monomial scalars instead of the identity.
struct MatrixRep {
  bool projective = false;
  Representation rep;
  GroupExprPtr target;
  Presentation source;
  std::unordered_map<std::string, Word> expansion;
  std::unordered_map<std::string, PolyMatrix> images;
  std::unordered_map<std::string, PolyMatrix> inverse_images;
};
MatrixRep build_matrix_rep(const SurfaceTriple& t, int bound = 6);
Certificate verify_matrix_rep(const SurfaceTriple& t, int bound = 6);

std::vector<Certificate> verify_all(int bound = 6);

Json default_conventions();

}  // namespace mcgcert
