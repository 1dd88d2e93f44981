#pragma once

// The type-B variant: lattices with extended signed permutation matrices as
// morphisms, the all-subsets quiver, and the resulting operad elements with
// their composition.

#include <map>

#include "fmop/operad.hpp"

namespace fmop {

struct SignedPermMatrix {
  int rows;
  int cols;
  std::vector<int> e;  // entries in {-1, 0, +1}, row-major

  SignedPermMatrix(int r, int c, std::vector<int> entries);

  static SignedPermMatrix identity(int n);
  static SignedPermMatrix zero(int r, int c) {
    return SignedPermMatrix(r, c, std::vector<int>(static_cast<size_t>(r) * c, 0));
  }

  int at(int r, int c) const { return e[static_cast<size_t>(r) * cols + c]; }
  int& at(int r, int c) { return e[static_cast<size_t>(r) * cols + c]; }

  SignedPermMatrix operator*(const SignedPermMatrix& rhs) const;
  bool is_invertible() const;

  bool operator==(const SignedPermMatrix&) const = default;
};

// m = inclusion ∘ collapse: the collapse kills the coordinates sent to zero
// (carrying signs), the inclusion embeds the survivors.
std::pair<SignedPermMatrix, SignedPermMatrix> b_image_factorization(
    const SignedPermMatrix& m);

// Count of invertible extended signed permutation matrices of size n, by
// enumeration (the hyperoctahedral group order 2^n · n!).
BigInt count_signed_perm_autos(int n);

struct BElement {
  FinSet base;  // I
  ConormalContext ctx;
  SubrepFamily family;  // aligned with build_quiver(I, B).vertices

  bool operator==(const BElement&) const = default;
};

BElement make_b_element(const FinSet& base, const ConormalContext& ctx,
                        SubrepFamily family);

std::vector<BElement> all_b_elements(const FinSet& base,
                                     const ConormalContext& ctx,
                                     long long budget = kDefaultBudget);

// Substitution of e2 into slot i of e1. The glued square is the pushout that
// collapses the glued-in coordinates: for B inside e2's labels the subspace
// is the signed image of e2's; otherwise it is the preimage of e1's subspace
// at B − J under the projection killing the B ∩ J coordinates.
BElement compose_b(const BElement& e1, int slot, const BElement& e2,
                   const std::map<int, int>& signs);

BigInt count_b(const FinSet& base, const ConormalContext& ctx,
               long long budget = kDefaultBudget);

// Transport along a signed permutation of the base labels: sigma relabels, the
// signs act diagonally on each coordinate block.
BElement relabel_b(const BElement& e, const SetMap& sigma,
                   const std::map<int, int>& signs);

}  // namespace fmop
