#pragma once

// The operad of decreasing endomorphisms of the subspace poset Sub(V), its
// explicit composition along a short exact sequence, and the dictionary
// between endomorphisms and kernel families.

#include <functional>
#include <memory>

#include "fmop/gf.hpp"

namespace fmop {

struct SubLattice {
  int ambient;
  FieldConfig field;
  std::vector<Subspace> elements;       // by dimension, then enumeration order
  std::vector<std::vector<bool>> leq;   // leq[i][j]: elements[i] ⊆ elements[j]

  static std::shared_ptr<const SubLattice> build(int ambient, FieldConfig f);

  int index_of(const Subspace& s) const;
  int size() const { return static_cast<int>(elements.size()); }
};

// ε(W) ⊆ W for all W, and W1 ⊆ W2 ⇒ ε(W1) ⊆ ε(W2).
struct DecreasingEndo {
  std::shared_ptr<const SubLattice> lattice;
  std::vector<int> map;  // element index → element index

  static DecreasingEndo identity(std::shared_ptr<const SubLattice> lat);
  static DecreasingEndo zero(std::shared_ptr<const SubLattice> lat);

  const Subspace& operator()(const Subspace& w) const;

  bool operator==(const DecreasingEndo& o) const { return map == o.map; }
};

bool is_decreasing_monotone(const SubLattice& lat, const std::vector<int>& map);

// Backtracking over elements in dimension order with monotonicity pruning.
// Throws BudgetExhausted-style overflow via the budget argument.
void enumerate_decreasing_endos(std::shared_ptr<const SubLattice> lat,
                                long long budget,
                                const std::function<void(const DecreasingEndo&)>& yield);

// Short exact sequence 0 → F^{n2} →ι V →p F^{n1} → 0, given by an injective
// inclusion matrix and a surjective projection matrix with ker p = im ι.
struct ExactSequenceData {
  Mat inclusion;   // n × n2
  Mat projection;  // n1 × n
};

ExactSequenceData make_ses(const Subspace& v2, const Mat& projection);

// γ(ε1, ε2)(W) = ε2-part when W lies inside im ι, and W ∩ p^{-1}(ε1(pW))
// otherwise.
DecreasingEndo compose_endo(const DecreasingEndo& e1, const DecreasingEndo& e2,
                            const ExactSequenceData& ses,
                            std::shared_ptr<const SubLattice> lat_total);

// The kernel family of an endomorphism: one subspace N(W) = ε(W) ⊆ W per
// lattice element, monotone in W.
using KernelFamily = std::vector<Subspace>;  // aligned with lattice elements

KernelFamily to_fm_element(const DecreasingEndo& e);
// Inverts to_fm_element; throws when the family is not decreasing+monotone.
DecreasingEndo from_fm_element(const KernelFamily& fam,
                               std::shared_ptr<const SubLattice> lat);

}  // namespace fmop
