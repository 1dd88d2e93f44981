#include <doctest.h>

#include <algorithm>

#include "fmop/cgk.hpp"
#include "fmop/json_io.hpp"

using namespace fmop;

TEST_CASE("subspace round trip and validation") {
  FieldConfig f(3);
  Subspace s = Subspace::from_span(Mat::from_rows({{1, 2, 0}, {0, 0, 1}}, f));
  Json j = subspace_to_json(s);
  CHECK(subspace_from_json(j) == s);
  CHECK(subspace_from_json(subspace_to_json(Subspace::zero(4, f))) ==
        Subspace::zero(4, f));

  // non-RREF basis is rejected on the way in
  Json bad = j;
  bad["basis"] = Json::array({std::vector<int>{2, 1, 0}});
  CHECK_THROWS_AS(subspace_from_json(bad), std::invalid_argument);
}

TEST_CASE("finset, setmap, square round trips") {
  FinSet s({1, 4, 9});
  CHECK(finset_from_json(finset_to_json(s)) == s);
  CHECK_THROWS_AS(finset_from_json(Json::array({3, 1})), std::invalid_argument);

  SetMap m(FinSet({1, 2}), FinSet({7}), {{1, 7}, {2, 7}});
  CHECK(setmap_from_json(setmap_to_json(m)) == m);

  AcuteSquare sq = make_acute_square(FinSet({1, 2}), 2, FinSet({3, 4}));
  AcuteSquare back = square_from_json(square_to_json(sq));
  CHECK(back.outer == sq.outer);
  CHECK(back.slot == sq.slot);
  CHECK(back.inner == sq.inner);
  CHECK(back.glued == sq.glued);
}

TEST_CASE("subset keys") {
  CHECK(subset_key(FinSet({1, 3})) == "1,3");
  CHECK(subset_key(FinSet({7})) == "7");
  CHECK(subset_key(FinSet()) == "");
}

TEST_CASE("dimension vector round trip") {
  Quiver q = build_quiver(FinSet({1, 2, 3}), Flavor::S);
  DimVector dv{{0, 0, 0, 1, 0, 1, 2}};
  Json j = dim_vector_to_json(q, dv);
  CHECK(j.at("1,2") == 1);
  CHECK(dim_vector_from_json(q, j) == dv);
  // missing entries default to zero
  CHECK(dim_vector_from_json(q, Json::object()) == DimVector{{0, 0, 0, 0, 0, 0, 0}});
}

TEST_CASE("element round trips, all elements at a small size") {
  ConormalContext ctx(FieldConfig(2), 1);
  for (const FMElement& e : all_elements(FinSet({1, 2, 3}), ctx)) {
    Json j = element_to_json(e);
    CHECK(j.at("schema_version") == 1);
    CHECK(element_from_json(j) == e);
  }

  // a corrupted family (subrepresentation condition broken) is rejected
  auto els = all_elements(FinSet({1, 2, 3}), ctx);
  auto nonzero = std::find_if(els.begin(), els.end(), [](const FMElement& e) {
    return e.family[3].dim() == 1;  // something to violate at the top
  });
  REQUIRE(nonzero != els.end());
  Json j = element_to_json(*nonzero);
  j["family"]["1,2,3"]["basis"] = Json::array();
  CHECK_THROWS_AS(element_from_json(j), std::invalid_argument);

  // non-prime field
  Json bad_p = element_to_json(els.front());
  bad_p["p"] = 9;
  CHECK_THROWS_AS(element_from_json(bad_p), std::invalid_argument);
}

TEST_CASE("b-element round trips") {
  ConormalContext ctx(FieldConfig(2), 1);
  for (const BElement& e : all_b_elements(FinSet({1, 2}), ctx)) {
    Json j = b_element_to_json(e);
    CHECK(j.at("flavor") == "b");
    CHECK(b_element_from_json(j) == e);
  }

  // breaking the subrepresentation condition is caught: full at a singleton,
  // zero at the pair
  auto els = all_b_elements(FinSet({1, 2}), ctx);
  Json j = b_element_to_json(els.front());
  j["family"]["1"]["basis"] = Json::array({std::vector<int>{1}});
  j["family"]["1,2"]["basis"] = Json::array();
  CHECK_THROWS_AS(b_element_from_json(j), std::invalid_argument);
}

TEST_CASE("endo round trips and validation") {
  auto lat = SubLattice::build(2, FieldConfig(2));
  DecreasingEndo id = DecreasingEndo::identity(lat);
  Json j = endo_to_json(id);
  CHECK(endo_from_json(j) == id);
  CHECK(endo_from_json(endo_to_json(DecreasingEndo::zero(lat))) ==
        DecreasingEndo::zero(lat));

  Json bad = j;
  bad["map"][0] = 99;
  CHECK_THROWS_AS(endo_from_json(bad), std::invalid_argument);

  // non-monotone map: send the whole space to 0 but keep lines fixed
  Json nm = j;
  nm["map"][lat->size() - 1] = 0;
  CHECK_THROWS_AS(endo_from_json(nm), std::invalid_argument);
}

TEST_CASE("signed permutation matrix round trip") {
  SignedPermMatrix m(2, 3, {0, -1, 0, 1, 0, 0});
  CHECK(signed_perm_from_json(signed_perm_to_json(m)) == m);
  Json bad = signed_perm_to_json(m);
  bad["entries"][0][0] = 1;  // two nonzeros in a column
  CHECK_THROWS_AS(signed_perm_from_json(bad), std::invalid_argument);
}
