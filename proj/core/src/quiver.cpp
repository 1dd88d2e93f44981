#include "fmop/quiver.hpp"

#include <algorithm>
#include <atomic>
#include <thread>

namespace fmop {

int Quiver::vertex_index(const FinSet& v) const {
  for (size_t i = 0; i < vertices.size(); ++i)
    if (vertices[i] == v) return static_cast<int>(i);
  throw std::invalid_argument("Quiver: vertex not found");
}

Quiver build_quiver(const FinSet& base, Flavor flavor) {
  Quiver q;
  q.base = base;
  q.flavor = flavor;
  q.vertices = flavor == Flavor::S ? subsets(base) : subsets_with_empty(base);
  for (size_t t = 0; t < q.vertices.size(); ++t)
    for (size_t s = 0; s < q.vertices.size(); ++s) {
      // cover inclusions only: |target| = |source| + 1
      if (q.vertices[s].size() + 1 != q.vertices[t].size()) continue;
      if (q.vertices[s].subset_of(q.vertices[t]))
        q.arrows.emplace_back(static_cast<int>(s), static_cast<int>(t));
    }
  return q;
}

namespace {

// Extension-by-zero inclusion V^src → V^tgt for the B flavor.
Mat block_inclusion(const FinSet& src, const FinSet& tgt,
                    const ConormalContext& ctx) {
  const int d = ctx.d;
  Mat m(d * tgt.size(), d * src.size(), ctx.field);
  for (int s = 0; s < src.size(); ++s) {
    int t = tgt.index_of(src.labels[s]);
    for (int a = 0; a < d; ++a) m.at(t * d + a, s * d + a) = 1;
  }
  return m;
}

SetMap inclusion_map(const FinSet& src, const FinSet& tgt) {
  std::map<int, int> a;
  for (int l : src.labels) a[l] = l;
  return SetMap(src, tgt, std::move(a));
}

}  // namespace

Representation conormal_representation(const FinSet& base,
                                       const ConormalContext& ctx,
                                       Flavor flavor) {
  Representation rep{build_quiver(base, flavor), ctx, {}, {}};
  for (const FinSet& v : rep.quiver.vertices)
    rep.vertex_dim.push_back(flavor == Flavor::S ? conormal_dim(v, ctx)
                                                 : ctx.d * v.size());
  for (auto [s, t] : rep.quiver.arrows) {
    const FinSet& src = rep.quiver.vertices[s];
    const FinSet& tgt = rep.quiver.vertices[t];
    if (flavor == Flavor::S)
      rep.arrow_mat.push_back(pushforward(inclusion_map(src, tgt), ctx));
    else
      rep.arrow_mat.push_back(block_inclusion(src, tgt, ctx));
  }
  return rep;
}

bool is_subrep(const SubrepFamily& fam, const Representation& rep) {
  if (fam.size() != rep.quiver.vertices.size())
    throw std::invalid_argument("is_subrep: family misses vertices");
  for (size_t v = 0; v < fam.size(); ++v)
    if (fam[v].ambient() != rep.vertex_dim[v])
      throw std::invalid_argument("is_subrep: ambient dimension mismatch");
  for (size_t a = 0; a < rep.quiver.arrows.size(); ++a) {
    auto [s, t] = rep.quiver.arrows[a];
    if (!contains(fam[t], apply(rep.arrow_mat[a], fam[s]))) return false;
  }
  return true;
}

DimVector dims_of(const SubrepFamily& fam) {
  DimVector dv;
  for (const Subspace& s : fam) dv.at.push_back(s.dim());
  return dv;
}

namespace {

struct SearchCtx {
  const Representation& rep;
  const std::optional<DimVector>& dv;
  long long budget;
  long long yielded = 0;
  const std::function<void(const SubrepFamily&)>& yield;
  // arrows grouped by target vertex
  std::vector<std::vector<std::pair<int, int>>> covers_into;  // (src, arrow idx)
};

Subspace floor_at(const SearchCtx& s, const SubrepFamily& chosen, int v) {
  Subspace lo = Subspace::zero(s.rep.vertex_dim[v], s.rep.ctx.field);
  for (auto [src, a] : s.covers_into[v])
    lo = sum(lo, apply(s.rep.arrow_mat[a], chosen[src]));
  return lo;
}

void dfs(SearchCtx& s, SubrepFamily& chosen, int v) {
  const int n = static_cast<int>(s.rep.quiver.vertices.size());
  if (v == n) {
    if (s.yielded >= s.budget) throw BudgetExhausted(s.budget);
    ++s.yielded;
    s.yield(chosen);
    return;
  }
  Subspace lo = floor_at(s, chosen, v);
  std::optional<int> want;
  if (s.dv) {
    want = s.dv->at[v];
    if (*want < lo.dim() || *want > s.rep.vertex_dim[v]) return;  // prune
  }
  enumerate_subspaces(s.rep.vertex_dim[v], s.rep.ctx.field, want, lo,
                      [&](const Subspace& sub) {
                        chosen.push_back(sub);
                        dfs(s, chosen, v + 1);
                        chosen.pop_back();
                        return true;
                      });
}

}  // namespace

void enumerate_subreps(const Representation& rep,
                       const std::optional<DimVector>& dv, long long budget,
                       const std::function<void(const SubrepFamily&)>& yield) {
  if (budget < 1) throw std::invalid_argument("enumerate_subreps: budget < 1");
  if (dv && dv->at.size() != rep.quiver.vertices.size())
    throw std::invalid_argument("enumerate_subreps: dimension vector size");
  SearchCtx s{rep, dv, budget, 0, yield, {}};
  s.covers_into.resize(rep.quiver.vertices.size());
  for (size_t a = 0; a < rep.quiver.arrows.size(); ++a)
    s.covers_into[rep.quiver.arrows[a].second].emplace_back(
        rep.quiver.arrows[a].first, static_cast<int>(a));
  SubrepFamily chosen;
  chosen.reserve(rep.quiver.vertices.size());
  dfs(s, chosen, 0);
}

BigInt count_points(const Representation& rep, const DimVector& dv,
                    long long budget) {
  BigInt n = 0;
  enumerate_subreps(rep, dv, budget, [&](const SubrepFamily&) { ++n; });
  return n;
}

BigInt count_all(const Representation& rep, long long budget) {
  BigInt n = 0;
  enumerate_subreps(rep, std::nullopt, budget, [&](const SubrepFamily&) { ++n; });
  return n;
}

BigInt count_parallel(const Representation& rep,
                      const std::optional<DimVector>& dv, int jobs,
                      long long budget) {
  if (jobs < 1) throw std::invalid_argument("count_parallel: jobs < 1");
  const int nv = static_cast<int>(rep.quiver.vertices.size());

  // Split at the first vertex with a genuine choice; everything before it is
  // forced (ambient 0, or dv pinned to the floor in a zero-floor prefix).
  int split = 0;
  while (split < nv && rep.vertex_dim[split] == 0) ++split;
  if (split == nv || jobs == 1)
    return dv ? count_points(rep, *dv, budget) : count_all(rep, budget);

  // Branches: choices at the split vertex (floor is zero there, since all
  // earlier vertices carry the zero space).
  if (dv)
    for (int v = 0; v < split; ++v)
      if (dv->at[v] != 0) return 0;  // forced-zero prefix can't match

  std::optional<int> want;
  if (dv) want = dv->at[split];
  std::vector<Subspace> branches =
      all_subspaces(rep.vertex_dim[split], rep.ctx.field, want);

  std::vector<std::vector<std::pair<int, int>>> covers_into(
      rep.quiver.vertices.size());
  for (size_t a = 0; a < rep.quiver.arrows.size(); ++a)
    covers_into[rep.quiver.arrows[a].second].emplace_back(
        rep.quiver.arrows[a].first, static_cast<int>(a));

  std::vector<BigInt> partial(branches.size(), 0);
  std::atomic<bool> over{false};
  std::atomic<size_t> next{0};

  auto worker = [&] {
    for (size_t b = next.fetch_add(1); b < branches.size();
         b = next.fetch_add(1)) {
      if (over.load()) return;
      // search with the split vertex pinned to this branch
      std::function<void(const SubrepFamily&)> count_one =
          [&](const SubrepFamily&) { ++partial[b]; };
      SearchCtx sc{rep, dv, budget, 0, count_one, covers_into};
      SubrepFamily chosen;
      for (int v = 0; v < split; ++v)
        chosen.push_back(Subspace::zero(rep.vertex_dim[v], rep.ctx.field));
      chosen.push_back(branches[b]);
      try {
        dfs(sc, chosen, split + 1);
      } catch (const BudgetExhausted&) {
        over.store(true);
        return;
      }
    }
  };

  std::vector<std::thread> pool;
  for (int t = 0; t < jobs; ++t) pool.emplace_back(worker);
  for (auto& t : pool) t.join();
  if (over.load()) throw BudgetExhausted(budget);
  BigInt total = 0;
  for (const BigInt& c : partial) total += c;
  if (total > budget) throw BudgetExhausted(budget);
  return total;
}

}  // namespace fmop
