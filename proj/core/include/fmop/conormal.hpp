#pragma once

// The conormal functor: to each nonempty finite set J it assigns the kernel
// of the addition map V^J → V, with a fixed basis, and to each set map the
// induced linear map between these kernels.

#include "fmop/finset.hpp"
#include "fmop/gf.hpp"

namespace fmop {

struct ConormalContext {
  FieldConfig field;
  int d;  // dim V

  ConormalContext(FieldConfig f, int dim_v) : field(f), d(dim_v) {
    if (dim_v < 1) throw std::invalid_argument("ConormalContext: d must be >= 1");
  }

  bool operator==(const ConormalContext&) const = default;
};

inline int conormal_dim(const FinSet& j, const ConormalContext& ctx) {
  return ctx.d * (j.size() - 1);
}

// Fixed basis of ker(V^J → V): for each j ∈ J with j ≠ min(J) and each
// 0 ≤ a < d, the vector e_{j,a} − e_{min(J),a}, ordered by (j, a). Ambient
// V^J uses J sorted ascending, contiguous blocks of size d. Rows are the
// basis vectors; shape d(|J|−1) × d|J|. Cached per (J, d, p).
Mat conormal_basis(const FinSet& j, const ConormalContext& ctx);

// The ambient map V^dom → V^cod induced by f: block j is sent to block f(j),
// coordinates with the same image adding up. Shape d|cod| × d|dom|.
Mat ambient_map(const SetMap& f, const ConormalContext& ctx);

// The matrix of the conormal functor on f, in the fixed bases.
// Shape d(|cod|−1) × d(|dom|−1).
Mat pushforward(const SetMap& f, const ConormalContext& ctx);

// Exactness of 0 → C(J) → C(K) → C(I) → 0 along the square's inclusion and
// quotient.
bool verify_acute(const AcuteSquare& square, const ConormalContext& ctx);

}  // namespace fmop
