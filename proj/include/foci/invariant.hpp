#pragma once

#include <optional>
#include <string>
#include <vector>

#include "foci/expr.hpp"
#include "foci/rat.hpp"

namespace foci {

// Exact invariant value together with the ordered list of formulas that
// produced it.  Casson values are integers; lambda_FO denominators divide 8.
struct InvariantValue {
    Rat value;
    std::vector<std::string> trace;
};

// Casson invariant of a homology-sphere expression.  Throws
// NotAHomologySphere on zero-surgery input.
InvariantValue casson(const ThreePtr& y);

// Furuta-Ohta invariant of an admissible homology S1 x S3 expression.
// Throws NotAdmissible when an admissibility gate fails and Unresolvable when
// a term has no knot-theoretic reduction.
InvariantValue lambda_fo(const FourPtr& x);

// D^0 instanton count of a zero-surgered expression: Product(ZeroSurgery(K))
// or a (0,1)-surgery whose torus reduces to knot data.
InvariantValue d0_invariant(const FourPtr& x0);

// Evaluates lambda_FO of a (1,q)-surgery by iterating the q = 1 formula
// |q| times along the re-glued core torus; must agree with lambda_fo exactly.
InvariantValue expand_surgery_chain(const FourPtr& x, long steps);

struct AdmissibilityReport {
    bool pass = true;
    std::vector<std::string> reasons;
    // populated when the root expression is an excision
    std::optional<bool> homology_test;
    std::optional<bool> homology_level_test;
};

AdmissibilityReport check_admissibility(const FourPtr& x);

}  // namespace foci
