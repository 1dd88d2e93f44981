#include "fmop/cgk.hpp"

namespace fmop {

DimVector scr(const FinSet& base, const ConormalContext& ctx) {
  Quiver q = build_quiver(base, Flavor::S);
  DimVector dv;
  for (const FinSet& j : q.vertices)
    dv.at.push_back(j.size() > 1 ? conormal_dim(j, ctx) - 1 : 0);
  return dv;
}

BigInt cgk_count(const FinSet& base, const ConormalContext& ctx,
                 long long budget) {
  Representation rep = conormal_representation(base, ctx, Flavor::S);
  return count_points(rep, scr(base, ctx), budget);
}

bool cgk_closed(const FMElement& e1, const AcuteSquare& square,
                const FMElement& e2) {
  if (!(dims_of(e1.family) == scr(e1.base, e1.ctx)) ||
      !(dims_of(e2.family) == scr(e2.base, e2.ctx)))
    throw std::invalid_argument("cgk_closed: inputs must have scr dimensions");
  FMElement out = compose(e1, square, e2);
  return dims_of(out.family) == scr(out.base, out.ctx);
}

}  // namespace fmop
