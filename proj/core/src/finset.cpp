#include "fmop/finset.hpp"

#include <algorithm>

namespace fmop {

FinSet::FinSet(std::vector<int> ls) : labels(std::move(ls)) {
  for (size_t i = 0; i < labels.size(); ++i) {
    if (labels[i] < 0) throw std::invalid_argument("FinSet: negative label");
    if (i > 0 && labels[i] <= labels[i - 1])
      throw std::invalid_argument("FinSet: labels must be strictly increasing");
  }
}

bool FinSet::contains(int l) const {
  return std::binary_search(labels.begin(), labels.end(), l);
}

int FinSet::index_of(int l) const {
  auto it = std::lower_bound(labels.begin(), labels.end(), l);
  if (it == labels.end() || *it != l)
    throw std::invalid_argument("FinSet: label not present");
  return static_cast<int>(it - labels.begin());
}

FinSet FinSet::set_minus(const FinSet& other) const {
  std::vector<int> out;
  std::set_difference(labels.begin(), labels.end(), other.labels.begin(),
                      other.labels.end(), std::back_inserter(out));
  return FinSet(std::move(out));
}

FinSet FinSet::set_union(const FinSet& other) const {
  std::vector<int> out;
  std::set_union(labels.begin(), labels.end(), other.labels.begin(),
                 other.labels.end(), std::back_inserter(out));
  return FinSet(std::move(out));
}

FinSet FinSet::set_intersect(const FinSet& other) const {
  std::vector<int> out;
  std::set_intersection(labels.begin(), labels.end(), other.labels.begin(),
                        other.labels.end(), std::back_inserter(out));
  return FinSet(std::move(out));
}

bool FinSet::subset_of(const FinSet& other) const {
  return std::includes(other.labels.begin(), other.labels.end(),
                       labels.begin(), labels.end());
}

bool FinSet::disjoint_from(const FinSet& other) const {
  std::vector<int> out;
  std::set_intersection(labels.begin(), labels.end(), other.labels.begin(),
                        other.labels.end(), std::back_inserter(out));
  return out.empty();
}

SetMap::SetMap(FinSet dom, FinSet cod, std::map<int, int> assign)
    : domain(std::move(dom)), codomain(std::move(cod)),
      assignment(std::move(assign)) {
  for (int l : domain.labels) {
    auto it = assignment.find(l);
    if (it == assignment.end())
      throw std::invalid_argument("SetMap: assignment not total");
    if (!codomain.contains(it->second))
      throw std::invalid_argument("SetMap: image outside codomain");
  }
  if (assignment.size() != static_cast<size_t>(domain.size()))
    throw std::invalid_argument("SetMap: assignment has extra keys");
}

SetMap SetMap::identity(const FinSet& s) {
  std::map<int, int> a;
  for (int l : s.labels) a[l] = l;
  return SetMap(s, s, std::move(a));
}

int SetMap::operator()(int l) const {
  auto it = assignment.find(l);
  if (it == assignment.end())
    throw std::invalid_argument("SetMap: label outside domain");
  return it->second;
}

FinSet SetMap::image() const {
  std::vector<int> vals;
  for (auto& [k, v] : assignment) vals.push_back(v);
  std::sort(vals.begin(), vals.end());
  vals.erase(std::unique(vals.begin(), vals.end()), vals.end());
  return FinSet(std::move(vals));
}

bool SetMap::is_injective() const {
  return image().size() == domain.size();
}

bool SetMap::is_surjective() const {
  return image() == codomain;
}

SetMap SetMap::inverse() const {
  if (!is_bijective()) throw std::invalid_argument("SetMap: not a bijection");
  std::map<int, int> inv;
  for (auto& [k, v] : assignment) inv[v] = k;
  return SetMap(codomain, domain, std::move(inv));
}

SetMap SetMap::after(const SetMap& first) const {
  if (!(first.codomain == domain))
    throw std::invalid_argument("SetMap: not composable");
  std::map<int, int> a;
  for (int l : first.domain.labels) a[l] = (*this)(first(l));
  return SetMap(first.domain, codomain, std::move(a));
}

SetMap SetMap::restricted_to(const FinSet& sub) const {
  if (!sub.subset_of(domain))
    throw std::invalid_argument("SetMap: restriction outside domain");
  std::map<int, int> a;
  for (int l : sub.labels) a[l] = (*this)(l);
  return SetMap(sub, codomain, std::move(a));
}

SetMap AcuteSquare::quotient() const {
  std::map<int, int> a;
  for (int l : glued.labels) a[l] = inner.contains(l) ? slot : l;
  return SetMap(glued, outer, std::move(a));
}

SetMap AcuteSquare::inclusion() const {
  std::map<int, int> a;
  for (int l : inner.labels) a[l] = l;
  return SetMap(inner, glued, std::move(a));
}

AcuteSquare make_acute_square(const FinSet& outer, int slot,
                              const FinSet& inner) {
  if (outer.labels.empty() || inner.labels.empty())
    throw std::invalid_argument("make_acute_square: sets must be nonempty");
  if (!outer.contains(slot))
    throw std::invalid_argument("make_acute_square: slot not in outer set");
  FinSet rest = outer.set_minus(FinSet({slot}));
  if (!inner.disjoint_from(rest))
    throw std::invalid_argument(
        "make_acute_square: inner set collides with outer − slot; relabel first");
  return AcuteSquare{outer, slot, inner, inner.set_union(rest)};
}

std::pair<FinSet, SetMap> relabel_disjoint(const FinSet& j,
                                           const FinSet& avoid) {
  if (j.disjoint_from(avoid)) return {j, SetMap::identity(j)};
  int shift = avoid.max() + 1 - j.min();
  std::vector<int> ls;
  std::map<int, int> a;
  for (int l : j.labels) {
    ls.push_back(l + shift);
    a[l] = l + shift;
  }
  FinSet jp(std::move(ls));
  return {jp, SetMap(j, jp, std::move(a))};
}

std::pair<SetMap, SetMap> image_factorization(const SetMap& f) {
  FinSet img = f.image();
  std::map<int, int> surj, incl;
  for (int l : f.domain.labels) surj[l] = f(l);
  for (int l : img.labels) incl[l] = l;
  return {SetMap(f.domain, img, std::move(surj)),
          SetMap(img, f.codomain, std::move(incl))};
}

std::pair<SetMap, SetMap> restrict_quotient(const FinSet& b,
                                            const AcuteSquare& square) {
  if (!b.subset_of(square.glued))
    throw std::invalid_argument("restrict_quotient: set not inside glued set");
  return image_factorization(square.quotient().restricted_to(b));
}

namespace {

void combinations(const std::vector<int>& pool, int k,
                  std::vector<FinSet>& out) {
  std::vector<int> idx(k);
  for (int i = 0; i < k; ++i) idx[i] = i;
  const int n = static_cast<int>(pool.size());
  while (true) {
    std::vector<int> ls(k);
    for (int i = 0; i < k; ++i) ls[i] = pool[idx[i]];
    out.emplace_back(std::move(ls));
    int i = k - 1;
    while (i >= 0 && idx[i] == n - k + i) --i;
    if (i < 0) break;
    ++idx[i];
    for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

}  // namespace

std::vector<FinSet> subsets(const FinSet& s) {
  std::vector<FinSet> out;
  for (int k = 1; k <= s.size(); ++k) combinations(s.labels, k, out);
  return out;
}

std::vector<FinSet> subsets_with_empty(const FinSet& s) {
  std::vector<FinSet> out;
  out.emplace_back();  // ∅, represented by the default (empty) FinSet
  for (int k = 1; k <= s.size(); ++k) combinations(s.labels, k, out);
  return out;
}

}  // namespace fmop
