#include "fmop/operad.hpp"

namespace fmop {

FMElement make_element(const FinSet& base, const ConormalContext& ctx,
                       SubrepFamily family) {
  Representation rep = conormal_representation(base, ctx, Flavor::S);
  FMElement e{base, ctx, std::move(family)};
  if (!is_subrep(e.family, rep))
    throw std::invalid_argument("make_element: not a subrepresentation");
  return e;
}

FMElement unit_element(int label, const ConormalContext& ctx) {
  FinSet base({label});
  return FMElement{base, ctx, {Subspace::zero(0, ctx.field)}};
}

std::vector<FMElement> all_elements(const FinSet& base,
                                    const ConormalContext& ctx,
                                    long long budget) {
  Representation rep = conormal_representation(base, ctx, Flavor::S);
  std::vector<FMElement> out;
  enumerate_subreps(rep, std::nullopt, budget, [&](const SubrepFamily& fam) {
    out.push_back(FMElement{base, ctx, fam});
  });
  return out;
}

FMElement compose(const FMElement& e1, const AcuteSquare& square,
                  const FMElement& e2) {
  if (!(e1.ctx == e2.ctx))
    throw std::invalid_argument("compose: context mismatch");
  if (!(square.outer == e1.base) || !(square.inner == e2.base))
    throw std::invalid_argument("compose: square does not match the elements");

  const ConormalContext& ctx = e1.ctx;
  Quiver qk = build_quiver(square.glued, Flavor::S);
  Quiver qi = build_quiver(e1.base, Flavor::S);
  Quiver qj = build_quiver(e2.base, Flavor::S);

  SubrepFamily out;
  out.reserve(qk.vertices.size());
  for (const FinSet& b : qk.vertices) {
    if (b.subset_of(square.inner)) {
      // inside the glued-in piece: copy (the conormal space depends only on
      // the labels of b, which agree on both sides)
      out.push_back(e2.family[qj.vertex_index(b)]);
    } else {
      auto [acute, incl] = restrict_quotient(b, square);
      Mat m = pushforward(acute, ctx);
      out.push_back(preimage(m, e1.family[qi.vertex_index(acute.codomain)]));
    }
  }
  return FMElement{square.glued, ctx, std::move(out)};
}

FMElement relabel(const FMElement& e, const SetMap& sigma) {
  if (!sigma.is_bijective())
    throw std::invalid_argument("relabel: map is not a bijection");
  if (!(sigma.domain == e.base))
    throw std::invalid_argument("relabel: domain mismatch");
  Quiver qold = build_quiver(e.base, Flavor::S);
  Quiver qnew = build_quiver(sigma.codomain, Flavor::S);
  SubrepFamily fam(qnew.vertices.size(), Subspace::zero(0, e.ctx.field));
  for (size_t v = 0; v < qold.vertices.size(); ++v) {
    const FinSet& j = qold.vertices[v];
    SetMap restricted = sigma.restricted_to(j);
    auto [surj, incl] = image_factorization(restricted);
    FinSet jp = surj.codomain;
    SetMap bij(j, jp, surj.assignment);
    Mat t = pushforward(bij, e.ctx);  // change of basis between conventions
    fam[qnew.vertex_index(jp)] = apply(t, e.family[v]);
  }
  return FMElement{sigma.codomain, e.ctx, std::move(fam)};
}

FMElement gl_action(const FMElement& e, const Mat& g) {
  const ConormalContext& ctx = e.ctx;
  if (g.rows() != ctx.d || g.cols() != ctx.d || !(g.field() == ctx.field))
    throw std::invalid_argument("gl_action: g must be d x d over the field");
  if (rank(g) != ctx.d)
    throw std::invalid_argument("gl_action: g is singular");
  Quiver q = build_quiver(e.base, Flavor::S);
  SubrepFamily fam;
  fam.reserve(q.vertices.size());
  for (size_t v = 0; v < q.vertices.size(); ++v) {
    const FinSet& j = q.vertices[v];
    if (j.size() == 1) {
      fam.push_back(e.family[v]);
      continue;
    }
    // block-diagonal action on V^J commutes with the addition map, so it
    // restricts to the kernel; express it in the fixed basis
    Mat basis = conormal_basis(j, ctx);
    Mat blocked(ctx.d * j.size(), ctx.d * j.size(), ctx.field);
    for (int blk = 0; blk < j.size(); ++blk)
      for (int r = 0; r < ctx.d; ++r)
        for (int c = 0; c < ctx.d; ++c)
          blocked.at(blk * ctx.d + r, blk * ctx.d + c) = g.at(r, c);
    Mat action(basis.rows(), basis.rows(), ctx.field);
    for (int t = 0; t < basis.rows(); ++t) {
      auto w = blocked.apply(basis.row(t));
      auto coeffs = coordinates_in(basis, w);
      if (!coeffs) throw std::logic_error("gl_action: kernel not preserved");
      for (int r = 0; r < basis.rows(); ++r) action.at(r, t) = (*coeffs)[r];
    }
    fam.push_back(apply(action, e.family[v]));
  }
  return FMElement{e.base, ctx, std::move(fam)};
}

bool check_op1(const AcuteSquare& sq_a, const AcuteSquare& sq_b,
               const SetMap& f1, const SetMap& f2, const FMElement& e1,
               const FMElement& e2) {
  if (f1(sq_a.slot) != sq_b.slot)
    throw std::invalid_argument("check_op1: f1 does not carry slot to slot");
  // induced bijection on the glued sets
  std::map<int, int> a3;
  for (int l : sq_a.glued.labels)
    a3[l] = sq_a.inner.contains(l) ? f2(l) : f1(l);
  SetMap f3(sq_a.glued, sq_b.glued, std::move(a3));
  FMElement lhs = relabel(compose(e1, sq_a, e2), f3);
  FMElement rhs = compose(relabel(e1, f1), sq_b, relabel(e2, f2));
  return lhs == rhs;
}

bool check_op2(const FinSet& i_set, int i, const FinSet& j_set, int j,
               const FinSet& l_set, const FMElement& e1, const FMElement& e2,
               const FMElement& e3) {
  AcuteSquare sq_a = make_acute_square(i_set, i, j_set);
  AcuteSquare sq_b = make_acute_square(sq_a.glued, j, l_set);
  FMElement route1 = compose(compose(e1, sq_a, e2), sq_b, e3);

  AcuteSquare sq_c = make_acute_square(j_set, j, l_set);
  AcuteSquare sq_d = make_acute_square(i_set, i, sq_c.glued);
  FMElement route2 = compose(e1, sq_d, compose(e2, sq_c, e3));

  return route1 == route2;  // same glued label set by construction
}

bool check_op3(const FinSet& i_set, int slot1, int slot2, const FinSet& j1,
               const FinSet& j2, const FMElement& e, const FMElement& e1,
               const FMElement& e2) {
  if (slot1 == slot2)
    throw std::invalid_argument("check_op3: slots must be distinct");
  AcuteSquare sq_a = make_acute_square(i_set, slot1, j1);
  AcuteSquare sq_b = make_acute_square(sq_a.glued, slot2, j2);
  FMElement route1 = compose(compose(e, sq_a, e1), sq_b, e2);

  AcuteSquare sq_c = make_acute_square(i_set, slot2, j2);
  AcuteSquare sq_d = make_acute_square(sq_c.glued, slot1, j1);
  FMElement route2 = compose(compose(e, sq_c, e2), sq_d, e1);

  return route1 == route2;
}

}  // namespace fmop
