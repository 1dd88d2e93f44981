#pragma once

// JSON schemas for the value types (schema_version 1 throughout).
// Deserialization re-validates every structural invariant.

#include <nlohmann/json.hpp>

#include "fmop/operad.hpp"
#include "fmop/subendo.hpp"
#include "fmop/typeb.hpp"

namespace fmop {

using Json = nlohmann::ordered_json;

Json subspace_to_json(const Subspace& s);
Subspace subspace_from_json(const Json& j);

Json finset_to_json(const FinSet& s);
FinSet finset_from_json(const Json& j);

Json setmap_to_json(const SetMap& f);
SetMap setmap_from_json(const Json& j);

Json square_to_json(const AcuteSquare& sq);
AcuteSquare square_from_json(const Json& j);

// Subset keys: sorted labels joined by commas ("1,3"); "" for the empty set.
std::string subset_key(const FinSet& s);

Json dim_vector_to_json(const Quiver& q, const DimVector& dv);
DimVector dim_vector_from_json(const Quiver& q, const Json& j);

Json family_to_json(const Quiver& q, const SubrepFamily& fam);

Json element_to_json(const FMElement& e);
FMElement element_from_json(const Json& j);

Json b_element_to_json(const BElement& e);
BElement b_element_from_json(const Json& j);

Json endo_to_json(const DecreasingEndo& e);
DecreasingEndo endo_from_json(const Json& j);

Json signed_perm_to_json(const SignedPermMatrix& m);
SignedPermMatrix signed_perm_from_json(const Json& j);

}  // namespace fmop
