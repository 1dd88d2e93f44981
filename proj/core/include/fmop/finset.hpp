#pragma once

// The input category of nonempty finite sets: objects, maps, acute quotients,
// image factorizations, and the substitution squares they assemble into.

#include <map>
#include <utility>
#include <vector>

#include <stdexcept>

namespace fmop {

struct FinSet {
  std::vector<int> labels;  // strictly increasing, non-negative

  FinSet() = default;
  explicit FinSet(std::vector<int> ls);

  static FinSet of(std::initializer_list<int> ls) {
    return FinSet(std::vector<int>(ls));
  }

  int size() const { return static_cast<int>(labels.size()); }
  bool contains(int l) const;
  int min() const { return labels.front(); }
  int max() const { return labels.back(); }
  // position of label l in the sorted order; throws when absent
  int index_of(int l) const;

  FinSet set_minus(const FinSet& other) const;
  FinSet set_union(const FinSet& other) const;
  FinSet set_intersect(const FinSet& other) const;
  bool subset_of(const FinSet& other) const;
  bool disjoint_from(const FinSet& other) const;

  bool operator==(const FinSet&) const = default;
  auto operator<=>(const FinSet&) const = default;
};

struct SetMap {
  FinSet domain;
  FinSet codomain;
  std::map<int, int> assignment;  // total on domain, into codomain

  SetMap() = default;
  SetMap(FinSet dom, FinSet cod, std::map<int, int> assign);

  static SetMap identity(const FinSet& s);

  int operator()(int l) const;
  FinSet image() const;
  bool is_injective() const;
  bool is_surjective() const;
  bool is_bijective() const { return is_injective() && is_surjective(); }
  SetMap inverse() const;  // bijections only
  SetMap after(const SetMap& first) const;  // this ∘ first
  SetMap restricted_to(const FinSet& sub) const;

  bool operator==(const SetMap&) const = default;
};

// The substitution square: glue J into slot i of I. Stores (I, i, J) and
// derives the glued set K = J ∪ (I − {i}) with its quotient p: K ↠ I.
struct AcuteSquare {
  FinSet outer;  // I
  int slot;      // i ∈ I
  FinSet inner;  // J
  FinSet glued;  // K

  SetMap quotient() const;   // p: K ↠ I, identity on I−{i}, J ↦ i
  SetMap inclusion() const;  // J ↪ K
};

AcuteSquare make_acute_square(const FinSet& outer, int slot, const FinSet& inner);

// Deterministic relabeling of J away from `avoid` (shift past max(avoid)),
// returned with the order-preserving bijection J → J'.
std::pair<FinSet, SetMap> relabel_disjoint(const FinSet& j, const FinSet& avoid);

// f = inclusion ∘ surjection, with the inclusion the subset embedding of
// image(f).
std::pair<SetMap, SetMap> image_factorization(const SetMap& f);

// Image factorization of p|_B for B ⊆ K: an acute quotient B ↠ p(B) followed
// by the inclusion p(B) ↪ I.
std::pair<SetMap, SetMap> restrict_quotient(const FinSet& b,
                                            const AcuteSquare& square);

// All nonempty subsets, by cardinality then lexicographically.
std::vector<FinSet> subsets(const FinSet& s);
// Same but including the empty set (first).
std::vector<FinSet> subsets_with_empty(const FinSet& s);

}  // namespace fmop
