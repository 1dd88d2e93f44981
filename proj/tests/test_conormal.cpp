#include <doctest.h>

#include <random>

#include "fmop/conormal.hpp"

using namespace fmop;

namespace {

// independent oracle for the pushforward of a map between conormal spaces:
// restrict the ambient fiber-sum matrix to the kernels computed from scratch
Mat pushforward_oracle(const SetMap& f, const ConormalContext& ctx) {
  Mat amb = ambient_map(f, ctx);
  Mat bd = conormal_basis(f.domain, ctx);
  Mat bc = conormal_basis(f.codomain, ctx);
  Mat out(bc.rows(), bd.rows(), ctx.field);
  for (int t = 0; t < bd.rows(); ++t) {
    auto w = amb.apply(bd.row(t));
    auto c = coordinates_in(bc, w);
    REQUIRE(c.has_value());
    for (int r = 0; r < bc.rows(); ++r) out.at(r, t) = (*c)[r];
  }
  return out;
}

SetMap random_map(const FinSet& dom, const FinSet& cod, std::mt19937& rng) {
  std::uniform_int_distribution<int> pick(0, cod.size() - 1);
  std::map<int, int> a;
  for (int l : dom.labels) a[l] = cod.labels[pick(rng)];
  return SetMap(dom, cod, std::move(a));
}

FinSet range_set(int start, int n) {
  std::vector<int> ls;
  for (int t = 0; t < n; ++t) ls.push_back(start + t);
  return FinSet(ls);
}

}  // namespace

TEST_CASE("conormal basis convention") {
  ConormalContext ctx(FieldConfig(5), 1);
  Mat b = conormal_basis(FinSet({1, 2}), ctx);
  REQUIRE(b.rows() == 1);
  CHECK(b.row(0) == std::vector<int>{4, 1});  // e_2 - e_1, i.e. (-1, 1)

  CHECK(conormal_basis(FinSet({7}), ctx).rows() == 0);

  ConormalContext c2(FieldConfig(2), 1);
  Mat b3 = conormal_basis(FinSet({1, 2, 3}), c2);
  REQUIRE(b3.rows() == 2);
  // every row sums to zero mod 2
  for (int i = 0; i < 2; ++i) {
    int s = 0;
    for (int j = 0; j < 3; ++j) s += b3.at(i, j);
    CHECK(s % 2 == 0);
  }
}

TEST_CASE("conormal dimension") {
  ConormalContext ctx(FieldConfig(3), 2);
  CHECK(conormal_dim(FinSet({1}), ctx) == 0);
  CHECK(conormal_dim(FinSet({1, 5}), ctx) == 2);  // value on a 2-element set is d
  CHECK(conormal_dim(FinSet({1, 2, 3}), ctx) == 4);
}

TEST_CASE("pushforward examples") {
  ConormalContext ctx(FieldConfig(2), 1);

  SetMap incl(FinSet({1}), FinSet({1, 2}), {{1, 1}});
  Mat m1 = pushforward(incl, ctx);
  CHECK(m1.rows() == 1);
  CHECK(m1.cols() == 0);

  SetMap collapse(FinSet({1, 2}), FinSet({7}), {{1, 7}, {2, 7}});
  Mat m2 = pushforward(collapse, ctx);
  CHECK(m2.rows() == 0);
  CHECK(m2.cols() == 1);

  SetMap bij(FinSet({1, 3}), FinSet({1, 2}), {{1, 1}, {3, 2}});
  Mat m3 = pushforward(bij, ctx);
  CHECK(m3 == Mat::identity(1, ctx.field));
  CHECK(m3 == pushforward_oracle(bij, ctx));
}

TEST_CASE("functoriality on random composable pairs") {
  std::mt19937 rng(3);
  for (int d : {1, 2}) {
    ConormalContext ctx(FieldConfig(3), d);
    for (int trial = 0; trial < 40; ++trial) {
      FinSet a = range_set(0, 1 + trial % 3);
      FinSet b = range_set(10, 1 + (trial / 3) % 4);
      FinSet c = range_set(20, 1 + (trial / 12) % 3);
      SetMap f = random_map(a, b, rng);
      SetMap g = random_map(b, c, rng);
      CHECK(pushforward(g.after(f), ctx) == pushforward(g, ctx) * pushforward(f, ctx));
    }
  }
}

TEST_CASE("injections give injective matrices, acute quotients surjective ones") {
  for (int d : {1, 2}) {
    ConormalContext ctx(FieldConfig(2), d);
    SetMap incl(FinSet({1, 2}), FinSet({1, 2, 3}), {{1, 1}, {2, 2}});
    Mat mi = pushforward(incl, ctx);
    CHECK(rank(mi) == mi.cols());

    AcuteSquare sq = make_acute_square(FinSet({1, 2}), 2, FinSet({3, 4}));
    Mat mq = pushforward(sq.quotient(), ctx);
    CHECK(rank(mq) == mq.rows());
  }
}

TEST_CASE("verify_acute examples") {
  ConormalContext c1(FieldConfig(2), 1);
  AcuteSquare sq = make_acute_square(FinSet({1, 2}), 2, FinSet({3, 4}));
  CHECK(conormal_dim(sq.inner, c1) == 1);
  CHECK(conormal_dim(sq.glued, c1) == 2);
  CHECK(conormal_dim(sq.outer, c1) == 1);
  CHECK(verify_acute(sq, c1));

  ConormalContext c2(FieldConfig(2), 2);
  CHECK(verify_acute(sq, c2));

  AcuteSquare tiny = make_acute_square(FinSet({1, 2}), 1, FinSet({9}));
  CHECK(verify_acute(tiny, c1));
}

TEST_CASE("acuteness and dimension bookkeeping on all small squares") {
  for (int d : {1, 2})
    for (int p : {2, 3}) {
      ConormalContext ctx(FieldConfig(p), d);
      for (int ni = 1; ni <= 3; ++ni)
        for (int nj = 1; nj <= 3; ++nj) {
          FinSet i_set = range_set(0, ni);
          FinSet j_set = range_set(ni, nj);
          for (int slot : i_set.labels) {
            AcuteSquare sq = make_acute_square(i_set, slot, j_set);
            CHECK(conormal_dim(sq.inner, ctx) + conormal_dim(sq.outer, ctx) ==
                  conormal_dim(sq.glued, ctx));
            CHECK(verify_acute(sq, ctx));
          }
        }
    }
}
