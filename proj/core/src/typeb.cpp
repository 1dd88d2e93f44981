#include "fmop/typeb.hpp"

#include <algorithm>

namespace fmop {

SignedPermMatrix::SignedPermMatrix(int r, int c, std::vector<int> entries)
    : rows(r), cols(c), e(std::move(entries)) {
  if (r < 0 || c < 0 || e.size() != static_cast<size_t>(r) * c)
    throw std::invalid_argument("SignedPermMatrix: bad shape");
  for (int v : e)
    if (v < -1 || v > 1)
      throw std::invalid_argument("SignedPermMatrix: entries must be -1/0/1");
  for (int i = 0; i < r; ++i) {
    int nz = 0;
    for (int j = 0; j < c; ++j) nz += at(i, j) != 0;
    if (nz > 1)
      throw std::invalid_argument("SignedPermMatrix: row with two nonzeros");
  }
  for (int j = 0; j < c; ++j) {
    int nz = 0;
    for (int i = 0; i < r; ++i) nz += at(i, j) != 0;
    if (nz > 1)
      throw std::invalid_argument("SignedPermMatrix: column with two nonzeros");
  }
}

SignedPermMatrix SignedPermMatrix::identity(int n) {
  SignedPermMatrix m = zero(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

SignedPermMatrix SignedPermMatrix::operator*(const SignedPermMatrix& rhs) const {
  if (cols != rhs.rows)
    throw std::invalid_argument("SignedPermMatrix: not composable");
  SignedPermMatrix out = zero(rows, rhs.cols);
  for (int i = 0; i < rows; ++i)
    for (int k = 0; k < cols; ++k)
      if (at(i, k) != 0)
        for (int j = 0; j < rhs.cols; ++j)
          out.at(i, j) += at(i, k) * rhs.at(k, j);
  return SignedPermMatrix(rows, rhs.cols, out.e);  // re-validate
}

bool SignedPermMatrix::is_invertible() const {
  if (rows != cols) return false;
  for (int i = 0; i < rows; ++i) {
    bool nz = false;
    for (int j = 0; j < cols; ++j) nz |= at(i, j) != 0;
    if (!nz) return false;
  }
  for (int j = 0; j < cols; ++j) {
    bool nz = false;
    for (int i = 0; i < rows; ++i) nz |= at(i, j) != 0;
    if (!nz) return false;
  }
  return true;
}

std::pair<SignedPermMatrix, SignedPermMatrix> b_image_factorization(
    const SignedPermMatrix& m) {
  // image coordinates: target rows with a nonzero entry
  std::vector<int> hit;
  for (int i = 0; i < m.rows; ++i)
    for (int j = 0; j < m.cols; ++j)
      if (m.at(i, j) != 0) { hit.push_back(i); break; }
  const int k = static_cast<int>(hit.size());
  SignedPermMatrix collapse = SignedPermMatrix::zero(k, m.cols);
  SignedPermMatrix inclusion = SignedPermMatrix::zero(m.rows, k);
  for (int t = 0; t < k; ++t) {
    // the collapse leg keeps the hit rows verbatim (signs included); the
    // inclusion re-embeds them as coordinate rows
    for (int j = 0; j < m.cols; ++j) collapse.at(t, j) = m.at(hit[t], j);
    inclusion.at(hit[t], t) = 1;
  }
  return {collapse, inclusion};
}

BigInt count_signed_perm_autos(int n) {
  // enumerate every extended signed permutation matrix row by row, count the
  // invertible ones
  BigInt invertible = 0;
  std::vector<int> row_choice(n);  // 0 = zero row, else (col+1)*sign
  std::vector<bool> used(n, false);

  std::function<void(int)> rec = [&](int r) {
    if (r == n) {
      bool ok = true;
      for (int i = 0; i < n && ok; ++i) ok = row_choice[i] != 0;
      for (int j = 0; j < n && ok; ++j) ok = used[j];
      if (ok) ++invertible;
      return;
    }
    row_choice[r] = 0;
    rec(r + 1);
    for (int j = 0; j < n; ++j) {
      if (used[j]) continue;
      used[j] = true;
      for (int s : {1, -1}) {
        row_choice[r] = (j + 1) * s;
        rec(r + 1);
      }
      used[j] = false;
      row_choice[r] = 0;
    }
  };
  rec(0);
  return invertible;
}

BElement make_b_element(const FinSet& base, const ConormalContext& ctx,
                        SubrepFamily family) {
  Representation rep = conormal_representation(base, ctx, Flavor::B);
  BElement e{base, ctx, std::move(family)};
  if (!is_subrep(e.family, rep))
    throw std::invalid_argument("make_b_element: not a subrepresentation");
  return e;
}

std::vector<BElement> all_b_elements(const FinSet& base,
                                     const ConormalContext& ctx,
                                     long long budget) {
  Representation rep = conormal_representation(base, ctx, Flavor::B);
  std::vector<BElement> out;
  enumerate_subreps(rep, std::nullopt, budget, [&](const SubrepFamily& fam) {
    out.push_back(BElement{base, ctx, fam});
  });
  return out;
}

namespace {

// Signed block-diagonal matrix on V^B with the given per-label signs.
Mat signed_blocks(const FinSet& b, const std::map<int, int>& signs,
                  const ConormalContext& ctx) {
  const int d = ctx.d;
  Mat m(d * b.size(), d * b.size(), ctx.field);
  for (int t = 0; t < b.size(); ++t) {
    auto it = signs.find(b.labels[t]);
    int s = it == signs.end() ? 1 : it->second;
    if (s != 1 && s != -1)
      throw std::invalid_argument("signs must be +1 or -1");
    int val = s == 1 ? 1 : ctx.field.neg(1);
    for (int a = 0; a < d; ++a) m.at(t * d + a, t * d + a) = val;
  }
  return m;
}

// Coordinate projection V^src → V^tgt keeping the blocks of tgt ⊆ src.
Mat block_projection(const FinSet& src, const FinSet& tgt,
                     const ConormalContext& ctx) {
  const int d = ctx.d;
  Mat m(d * tgt.size(), d * src.size(), ctx.field);
  for (int t = 0; t < tgt.size(); ++t) {
    int s = src.index_of(tgt.labels[t]);
    for (int a = 0; a < d; ++a) m.at(t * d + a, s * d + a) = 1;
  }
  return m;
}

}  // namespace

BElement compose_b(const BElement& e1, int slot, const BElement& e2,
                   const std::map<int, int>& signs) {
  if (!(e1.ctx == e2.ctx))
    throw std::invalid_argument("compose_b: context mismatch");
  if (!e1.base.contains(slot))
    throw std::invalid_argument("compose_b: slot not in outer set");
  FinSet rest = e1.base.set_minus(FinSet({slot}));
  if (!e2.base.disjoint_from(rest))
    throw std::invalid_argument("compose_b: label collision; relabel first");
  const ConormalContext& ctx = e1.ctx;
  FinSet glued = e2.base.set_union(rest);

  Quiver qk = build_quiver(glued, Flavor::B);
  Quiver qi = build_quiver(e1.base, Flavor::B);
  Quiver qj = build_quiver(e2.base, Flavor::B);

  SubrepFamily out;
  out.reserve(qk.vertices.size());
  for (const FinSet& b : qk.vertices) {
    if (b.subset_of(e2.base)) {
      // inside the glued-in piece: signed image
      Mat sg = signed_blocks(b, signs, ctx);
      out.push_back(apply(sg, e2.family[qj.vertex_index(b)]));
    } else {
      // the pushout square collapses the glued-in coordinates outright, so
      // the image of b in the outer set is b − J
      FinSet bbar = b.set_minus(e2.base);
      Mat proj = block_projection(b, bbar, ctx);
      out.push_back(preimage(proj, e1.family[qi.vertex_index(bbar)]));
    }
  }
  return BElement{glued, ctx, std::move(out)};
}

BigInt count_b(const FinSet& base, const ConormalContext& ctx,
               long long budget) {
  return count_all(conormal_representation(base, ctx, Flavor::B), budget);
}

BElement relabel_b(const BElement& e, const SetMap& sigma,
                   const std::map<int, int>& signs) {
  if (!sigma.is_bijective())
    throw std::invalid_argument("relabel_b: map is not a bijection");
  if (!(sigma.domain == e.base))
    throw std::invalid_argument("relabel_b: domain mismatch");
  const ConormalContext& ctx = e.ctx;
  Quiver qold = build_quiver(e.base, Flavor::B);
  Quiver qnew = build_quiver(sigma.codomain, Flavor::B);
  SubrepFamily fam(qnew.vertices.size(), Subspace::zero(0, ctx.field));
  for (size_t v = 0; v < qold.vertices.size(); ++v) {
    const FinSet& j = qold.vertices[v];
    if (j.labels.empty()) {
      fam[0] = e.family[v];
      continue;
    }
    std::vector<int> tgt_labels;
    for (int l : j.labels) tgt_labels.push_back(sigma(l));
    std::sort(tgt_labels.begin(), tgt_labels.end());
    FinSet jp(tgt_labels);
    // signed block permutation V^J → V^{σJ}
    const int d = ctx.d;
    Mat m(d * jp.size(), d * j.size(), ctx.field);
    for (int s = 0; s < j.size(); ++s) {
      int t = jp.index_of(sigma(j.labels[s]));
      auto it = signs.find(j.labels[s]);
      int sg = it == signs.end() ? 1 : it->second;
      int val = sg == 1 ? 1 : ctx.field.neg(1);
      for (int a = 0; a < d; ++a) m.at(t * d + a, s * d + a) = val;
    }
    fam[qnew.vertex_index(jp)] = apply(m, e.family[v]);
  }
  return BElement{sigma.codomain, ctx, std::move(fam)};
}

}  // namespace fmop
