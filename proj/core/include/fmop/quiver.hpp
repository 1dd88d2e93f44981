#pragma once

// Subset quivers over a base set, the conormal representation, and
// subrepresentation enumeration / point counting over GF(p).

#include <functional>
#include <optional>

#include "fmop/conormal.hpp"
#include "fmop/finset.hpp"
#include "fmop/gf.hpp"

namespace fmop {

enum class Flavor { S, B };  // nonempty subsets / all subsets

struct Quiver {
  FinSet base;
  Flavor flavor;
  std::vector<FinSet> vertices;              // cardinality then lex
  std::vector<std::pair<int, int>> arrows;   // cover inclusions, vertex indices

  int vertex_index(const FinSet& v) const;
};

Quiver build_quiver(const FinSet& base, Flavor flavor);

struct Representation {
  Quiver quiver;
  ConormalContext ctx;
  std::vector<int> vertex_dim;  // ambient dimension per vertex
  std::vector<Mat> arrow_mat;   // aligned with quiver.arrows
};

// S-flavor: C_V(J) with inclusion pushforwards. B-flavor: V^J with
// extension-by-zero inclusions (V^∅ = 0).
Representation conormal_representation(const FinSet& base,
                                       const ConormalContext& ctx,
                                       Flavor flavor);

// One subspace per vertex, aligned with quiver.vertices.
using SubrepFamily = std::vector<Subspace>;

bool is_subrep(const SubrepFamily& fam, const Representation& rep);

struct DimVector {
  std::vector<int> at;  // aligned with quiver.vertices

  bool operator==(const DimVector&) const = default;
};

DimVector dims_of(const SubrepFamily& fam);

struct BudgetExhausted : std::runtime_error {
  BigInt partial;
  explicit BudgetExhausted(BigInt count)
      : std::runtime_error("enumeration budget exhausted"),
        partial(std::move(count)) {}
};

inline constexpr long long kDefaultBudget = 100'000'000;

// Depth-first enumeration over vertices in increasing cardinality; at each
// vertex only subspaces containing the join of the already-chosen images are
// visited. Yields each family exactly once, in a fixed deterministic order.
// Throws BudgetExhausted when more than `budget` families would be yielded.
void enumerate_subreps(const Representation& rep,
                       const std::optional<DimVector>& dv, long long budget,
                       const std::function<void(const SubrepFamily&)>& yield);

BigInt count_points(const Representation& rep, const DimVector& dv,
                    long long budget = kDefaultBudget);
BigInt count_all(const Representation& rep, long long budget = kDefaultBudget);

// Branch-parallel counting: partitions the search at the first vertex with a
// choice, counts branches on `jobs` workers. Total is independent of `jobs`.
BigInt count_parallel(const Representation& rep,
                      const std::optional<DimVector>& dv, int jobs,
                      long long budget = kDefaultBudget);

}  // namespace fmop
