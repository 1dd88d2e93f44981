#pragma once

// Operad elements (subrepresentation families of the conormal
// representation), the two-case substitution map, group actions, and the
// machine-checkable operad axioms.

#include "fmop/quiver.hpp"

namespace fmop {

struct FMElement {
  FinSet base;  // I
  ConormalContext ctx;
  SubrepFamily family;  // aligned with build_quiver(I, S).vertices

  bool operator==(const FMElement&) const = default;
};

// Validates the subrepresentation condition.
FMElement make_element(const FinSet& base, const ConormalContext& ctx,
                       SubrepFamily family);

// The unique element over a singleton (all ambient spaces are zero).
FMElement unit_element(int label, const ConormalContext& ctx);

// All elements over `base`, in enumeration order.
std::vector<FMElement> all_elements(const FinSet& base,
                                    const ConormalContext& ctx,
                                    long long budget = kDefaultBudget);

// Substitution along the square (e2's label set glued into the slot of e1's).
// For B ⊆ K inside e2's labels the subspace is copied; otherwise it is the
// preimage of e1's subspace at the image of B under the restricted quotient.
FMElement compose(const FMElement& e1, const AcuteSquare& square,
                  const FMElement& e2);

// Transport along a bijection of label sets (with the induced change of
// conormal bases).
FMElement relabel(const FMElement& e, const SetMap& sigma);

// Diagonal action of g ∈ GL(V) on every V^J, restricted to the kernels.
FMElement gl_action(const FMElement& e, const Mat& g);

// OP-1: substitution commutes with isomorphisms of squares. f1: I_a → I_b
// (carrying slot to slot), f2: J_a → J_b; elements live over the a-side.
bool check_op1(const AcuteSquare& sq_a, const AcuteSquare& sq_b,
               const SetMap& f1, const SetMap& f2, const FMElement& e1,
               const FMElement& e2);

// OP-2: the two association orders of a nested substitution agree.
// e1 over I, e2 over J glued at i ∈ I, e3 over L glued at j ∈ J.
bool check_op2(const FinSet& i_set, int i, const FinSet& j_set, int j,
               const FinSet& l_set, const FMElement& e1, const FMElement& e2,
               const FMElement& e3);

// OP-3: substitutions at two distinct slots commute.
bool check_op3(const FinSet& i_set, int slot1, int slot2, const FinSet& j1,
               const FinSet& j2, const FMElement& e, const FMElement& e1,
               const FMElement& e2);

}  // namespace fmop
