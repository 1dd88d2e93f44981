#include "fmop/subendo.hpp"

#include "fmop/quiver.hpp"  // BudgetExhausted

namespace fmop {

std::shared_ptr<const SubLattice> SubLattice::build(int ambient,
                                                    FieldConfig f) {
  auto lat = std::make_shared<SubLattice>(SubLattice{ambient, f, {}, {}});
  lat->elements = all_subspaces(ambient, f);
  const int n = lat->size();
  lat->leq.assign(n, std::vector<bool>(n, false));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      lat->leq[i][j] = contains(lat->elements[j], lat->elements[i]);
  return lat;
}

int SubLattice::index_of(const Subspace& s) const {
  for (int i = 0; i < size(); ++i)
    if (elements[i] == s) return i;
  throw std::invalid_argument("SubLattice: subspace not found");
}

DecreasingEndo DecreasingEndo::identity(std::shared_ptr<const SubLattice> lat) {
  std::vector<int> m(lat->size());
  for (int i = 0; i < lat->size(); ++i) m[i] = i;
  return DecreasingEndo{std::move(lat), std::move(m)};
}

DecreasingEndo DecreasingEndo::zero(std::shared_ptr<const SubLattice> lat) {
  int z = lat->index_of(Subspace::zero(lat->ambient, lat->field));
  std::vector<int> m(lat->size(), z);
  return DecreasingEndo{std::move(lat), std::move(m)};
}

const Subspace& DecreasingEndo::operator()(const Subspace& w) const {
  return lattice->elements[map[lattice->index_of(w)]];
}

bool is_decreasing_monotone(const SubLattice& lat,
                            const std::vector<int>& map) {
  const int n = lat.size();
  for (int i = 0; i < n; ++i)
    if (!lat.leq[map[i]][i]) return false;  // ε(W) ⊆ W
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (lat.leq[i][j] && !lat.leq[map[i]][map[j]]) return false;
  return true;
}

void enumerate_decreasing_endos(
    std::shared_ptr<const SubLattice> lat, long long budget,
    const std::function<void(const DecreasingEndo&)>& yield) {
  const int n = lat->size();
  // elements are listed by dimension, a linear extension of containment
  std::vector<int> map(n, -1);
  long long yielded = 0;

  std::function<void(int)> rec = [&](int v) {
    if (v == n) {
      if (yielded >= budget) throw BudgetExhausted(budget);
      ++yielded;
      yield(DecreasingEndo{lat, map});
      return;
    }
    for (int img = 0; img < n; ++img) {
      if (!lat->leq[img][v]) continue;  // decreasing
      bool ok = true;
      for (int u = 0; u < v && ok; ++u) {
        if (lat->leq[u][v] && !lat->leq[map[u]][img]) ok = false;
        if (lat->leq[v][u] && !lat->leq[img][map[u]]) ok = false;
      }
      if (!ok) continue;
      map[v] = img;
      rec(v + 1);
      map[v] = -1;
    }
  };
  rec(0);
}

ExactSequenceData make_ses(const Subspace& v2, const Mat& projection) {
  return ExactSequenceData{v2.basis().transpose(), projection};
}

namespace {

void validate_ses(const ExactSequenceData& ses) {
  const Mat& inc = ses.inclusion;
  const Mat& prj = ses.projection;
  if (inc.rows() != prj.cols())
    throw std::invalid_argument("ses: inclusion/projection ambient mismatch");
  if (rank(inc) != inc.cols())
    throw std::invalid_argument("ses: inclusion not injective");
  if (rank(prj) != prj.rows())
    throw std::invalid_argument("ses: projection not surjective");
  if (!(kernel(prj) == image(inc)))
    throw std::invalid_argument("ses: not exact in the middle");
  if (inc.cols() + prj.rows() != inc.rows())
    throw std::invalid_argument("ses: dimensions do not add up");
}

}  // namespace

DecreasingEndo compose_endo(const DecreasingEndo& e1, const DecreasingEndo& e2,
                            const ExactSequenceData& ses,
                            std::shared_ptr<const SubLattice> lat_total) {
  validate_ses(ses);
  const Mat& inc = ses.inclusion;
  const Mat& prj = ses.projection;
  if (lat_total->ambient != inc.rows() ||
      e1.lattice->ambient != prj.rows() || e2.lattice->ambient != inc.cols())
    throw std::invalid_argument("compose_endo: lattice dimensions mismatch");

  Subspace v2 = image(inc);
  std::vector<int> out(lat_total->size());
  for (int wi = 0; wi < lat_total->size(); ++wi) {
    const Subspace& w = lat_total->elements[wi];
    Subspace value = Subspace::zero(lat_total->ambient, lat_total->field);
    if (contains(v2, w)) {
      // pull w back to the abstract copy of V2, apply ε2, push forward
      value = apply(inc, e2(preimage(inc, w)));
    } else {
      value = intersect(w, preimage(prj, e1(apply(prj, w))));
    }
    out[wi] = lat_total->index_of(value);
  }
  DecreasingEndo result{std::move(lat_total), std::move(out)};
  if (!is_decreasing_monotone(*result.lattice, result.map))
    throw std::logic_error("compose_endo: output violates the endo invariants");
  return result;
}

KernelFamily to_fm_element(const DecreasingEndo& e) {
  KernelFamily fam;
  fam.reserve(e.map.size());
  for (int i = 0; i < e.lattice->size(); ++i)
    fam.push_back(e.lattice->elements[e.map[i]]);
  return fam;
}

DecreasingEndo from_fm_element(const KernelFamily& fam,
                               std::shared_ptr<const SubLattice> lat) {
  if (fam.size() != static_cast<size_t>(lat->size()))
    throw std::invalid_argument("from_fm_element: family size mismatch");
  std::vector<int> map;
  map.reserve(fam.size());
  for (const Subspace& s : fam) map.push_back(lat->index_of(s));
  if (!is_decreasing_monotone(*lat, map))
    throw std::invalid_argument(
        "from_fm_element: family is not a natural kernel family");
  return DecreasingEndo{std::move(lat), std::move(map)};
}

}  // namespace fmop
