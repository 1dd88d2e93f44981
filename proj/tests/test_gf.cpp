#include <doctest.h>

#include <functional>
#include <random>
#include <set>

#include "fmop/gf.hpp"

using namespace fmop;

namespace {

Mat random_matrix(int rows, int cols, FieldConfig f, std::mt19937& rng) {
  Mat m(rows, cols, f);
  std::uniform_int_distribution<int> dist(0, f.p - 1);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) m.at(i, j) = dist(rng);
  return m;
}

// brute-force subspace census: span every subset of vectors
std::set<std::vector<int>> brute_force_subspaces(int n, int k, FieldConfig f) {
  // all vectors of GF(p)^n
  std::vector<std::vector<int>> vecs;
  std::vector<int> v(n, 0);
  while (true) {
    vecs.push_back(v);
    int i = 0;
    for (; i < n; ++i) {
      if (++v[i] < f.p) break;
      v[i] = 0;
    }
    if (i == n) break;
  }
  std::set<std::vector<int>> found;
  // spans of all k-subsets of vectors (wasteful but independent)
  std::vector<int> idx(k, 0);
  std::function<void(int, int)> rec = [&](int depth, int start) {
    if (depth == k) {
      std::vector<std::vector<int>> rows;
      for (int t = 0; t < k; ++t) rows.push_back(vecs[idx[t]]);
      Mat m = Mat::from_rows(rows, f);
      Subspace s = Subspace::from_span(m);
      if (s.dim() != k) return;
      std::vector<int> flat;
      for (int i = 0; i < s.basis().rows(); ++i)
        for (int j = 0; j < n; ++j) flat.push_back(s.basis().at(i, j));
      found.insert(flat);
      return;
    }
    for (int i = start; i < static_cast<int>(vecs.size()); ++i) {
      idx[depth] = i;
      rec(depth + 1, i + 1);
    }
  };
  if (k == 0) {
    found.insert(std::vector<int>{});
    return found;
  }
  rec(0, 0);
  return found;
}

}  // namespace

TEST_CASE("field config validates primality") {
  CHECK_NOTHROW(FieldConfig(2));
  CHECK_NOTHROW(FieldConfig(251));
  CHECK_THROWS_AS(FieldConfig(4), std::invalid_argument);
  CHECK_THROWS_AS(FieldConfig(1), std::invalid_argument);
  CHECK_THROWS_AS(FieldConfig(256), std::invalid_argument);
}

TEST_CASE("field inverse") {
  FieldConfig f(7);
  for (int a = 1; a < 7; ++a) CHECK(f.mul(a, f.inv(a)) == 1);
  CHECK_THROWS(FieldConfig(5).inv(0));
}

TEST_CASE("rref fixed points and elimination") {
  FieldConfig f2(2);
  Mat id = Mat::identity(3, f2);
  CHECK(rref(id) == id);

  Mat m = Mat::from_rows({{1, 1}, {0, 1}}, f2);
  CHECK(rref(m) == Mat::identity(2, f2));

  Mat z(2, 3, f2);
  Mat rz = rref(z);
  CHECK(rz == z);
  CHECK(Subspace::from_span(z).dim() == 0);
}

TEST_CASE("rref idempotent and basis-independent on random input") {
  std::mt19937 rng(7);
  for (int p : {2, 3, 5}) {
    FieldConfig f(p);
    for (int trial = 0; trial < 50; ++trial) {
      Mat m = random_matrix(3, 4, f, rng);
      Mat r = rref(m);
      CHECK(rref(r) == r);
      // a second spanning set of the same row space
      Mat doubled = m.stacked(m);
      CHECK(Subspace::from_span(m) == Subspace::from_span(doubled));
    }
  }
}

TEST_CASE("kernel examples") {
  FieldConfig f2(2);
  Mat add = Mat::from_rows({{1, 1}}, f2);
  Subspace k = kernel(add);
  CHECK(k.dim() == 1);
  CHECK(k.basis().row(0) == std::vector<int>{1, 1});

  CHECK(kernel(Mat::identity(3, f2)) == Subspace::zero(3, f2));

  FieldConfig f3(3);
  CHECK(kernel(Mat(1, 3, f3)) == Subspace::full(3, f3));
}

TEST_CASE("image examples") {
  FieldConfig f2(2);
  CHECK(image(Mat::identity(2, f2)) == Subspace::full(2, f2));
  CHECK(image(Mat(3, 2, f2)) == Subspace::zero(3, f2));
  Mat r1 = Mat::from_rows({{1, 1}, {1, 1}}, f2);
  Subspace im = image(r1);
  CHECK(im.dim() == 1);
  CHECK(im.basis().row(0) == std::vector<int>{1, 1});
}

TEST_CASE("sum and intersect basics") {
  FieldConfig f2(2);
  Subspace a = Subspace::from_span(Mat::from_rows({{1, 0}}, f2));
  Subspace b = Subspace::from_span(Mat::from_rows({{0, 1}}, f2));
  CHECK(sum(a, Subspace::zero(2, f2)) == a);
  CHECK(sum(a, b) == Subspace::full(2, f2));
  CHECK(sum(a, a) == a);

  CHECK(intersect(a, Subspace::full(2, f2)) == a);
  CHECK(intersect(a, Subspace::zero(2, f2)) == Subspace::zero(2, f2));

  Subspace p1 = Subspace::from_span(Mat::from_rows({{1, 0, 0}, {0, 1, 0}}, f2));
  Subspace p2 = Subspace::from_span(Mat::from_rows({{1, 0, 0}, {0, 0, 1}}, f2));
  CHECK(intersect(p1, p2).dim() == 1);

  CHECK_THROWS_AS(sum(a, Subspace::zero(3, f2)), std::invalid_argument);
  CHECK_THROWS_AS(intersect(a, Subspace::zero(3, f2)), std::invalid_argument);
}

TEST_CASE("preimage examples") {
  FieldConfig f2(2);
  Subspace line = Subspace::from_span(Mat::from_rows({{1, 1}}, f2));
  CHECK(preimage(Mat::identity(2, f2), line) == line);
  Mat add = Mat::from_rows({{1, 1}}, f2);
  CHECK(preimage(add, Subspace::full(1, f2)) == Subspace::full(2, f2));
  CHECK(preimage(add, Subspace::zero(1, f2)) == kernel(add));
  CHECK_THROWS_AS(preimage(add, Subspace::zero(2, f2)), std::invalid_argument);
}

TEST_CASE("contains") {
  FieldConfig f2(2);
  Subspace line = Subspace::from_span(Mat::from_rows({{1, 0}}, f2));
  CHECK(contains(line, line));
  CHECK(!contains(Subspace::zero(2, f2), line));
  CHECK(contains(Subspace::full(2, f2), line));
}

TEST_CASE("modularity, rank-nullity, preimage dimension on random input") {
  std::mt19937 rng(11);
  for (int p : {2, 3}) {
    FieldConfig f(p);
    for (int trial = 0; trial < 60; ++trial) {
      Mat ma = random_matrix(2, 4, f, rng);
      Mat mb = random_matrix(2, 4, f, rng);
      Subspace a = Subspace::from_span(ma);
      Subspace b = Subspace::from_span(mb);
      CHECK(a.dim() + b.dim() == sum(a, b).dim() + intersect(a, b).dim());

      Mat m = random_matrix(3, 4, f, rng);
      CHECK(kernel(m).dim() + rank(m) == m.cols());

      Subspace s = Subspace::from_span(random_matrix(2, 3, f, rng));
      CHECK(preimage(m, s).dim() ==
            intersect(s, image(m)).dim() + kernel(m).dim());
    }
  }
}

TEST_CASE("gaussian binomial") {
  CHECK(gaussian_binomial(7, 0, 2) == 1);
  CHECK(gaussian_binomial(2, 1, 2) == 3);
  CHECK(gaussian_binomial(2, 3, 2) == 0);

  // frozen from the brute-force census below
  CHECK(gaussian_binomial(4, 2, 2) == 35);
  CHECK(gaussian_binomial(2, 1, 3) == 4);

  CHECK(brute_force_subspaces(4, 2, FieldConfig(2)).size() == 35);
  CHECK(brute_force_subspaces(2, 1, FieldConfig(3)).size() == 4);
}

TEST_CASE("enumerate_subspaces agrees with brute force and the count oracle") {
  for (int p : {2, 3}) {
    FieldConfig f(p);
    for (int n = 0; n <= 3; ++n)
      for (int k = 0; k <= n; ++k) {
        auto got = all_subspaces(n, f, k);
        CHECK(BigInt(got.size()) == gaussian_binomial(n, k, p));
        std::set<std::vector<int>> canon;
        for (const Subspace& s : got) {
          std::vector<int> flat;
          for (int i = 0; i < s.basis().rows(); ++i)
            for (int j = 0; j < n; ++j) flat.push_back(s.basis().at(i, j));
          CHECK(canon.insert(flat).second);  // no duplicates
        }
        CHECK(canon == brute_force_subspaces(n, k, f));
      }
  }
}

TEST_CASE("enumerate_subspaces with a floor") {
  FieldConfig f2(2);
  Subspace line = Subspace::from_span(Mat::from_rows({{1, 0, 0}}, f2));
  auto planes = all_subspaces(3, f2, 2, line);
  CHECK(planes.size() == 3);  // gaussian_binomial(2,1,2) in the quotient
  for (const Subspace& s : planes) CHECK(contains(s, line));

  // dimension 0 always yields exactly the zero subspace
  auto zero_only = all_subspaces(4, f2, 0);
  REQUIRE(zero_only.size() == 1);
  CHECK(zero_only[0] == Subspace::zero(4, f2));

  CHECK_THROWS_AS(all_subspaces(3, f2, 5), std::invalid_argument);
}

TEST_CASE("floor enumeration matches filtered full enumeration") {
  for (int p : {2, 3}) {
    FieldConfig f(p);
    for (const Subspace& floor : all_subspaces(3, f)) {
      auto with_floor = all_subspaces(3, f, std::nullopt, floor);
      long long expected = 0;
      for (const Subspace& s : all_subspaces(3, f))
        if (contains(s, floor)) ++expected;
      CHECK(static_cast<long long>(with_floor.size()) == expected);
    }
  }
}
