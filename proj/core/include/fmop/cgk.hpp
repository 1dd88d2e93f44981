#pragma once

// The stable-curve component: the dimension vector cutting it out of the
// disjoint union of quiver Grassmannians, its point counts, and closure of
// the substitution map on the component.

#include "fmop/operad.hpp"

namespace fmop {

// scr(J) = d(|J|−1) − 1 for |J| > 1, and 0 on singletons.
DimVector scr(const FinSet& base, const ConormalContext& ctx);

BigInt cgk_count(const FinSet& base, const ConormalContext& ctx,
                 long long budget = kDefaultBudget);

// True iff composing two scr-dimensional elements lands in the scr component
// of the glued set.
bool cgk_closed(const FMElement& e1, const AcuteSquare& square,
                const FMElement& e2);

}  // namespace fmop
