#include "fmop/json_io.hpp"

#include <sstream>

namespace fmop {

Json subspace_to_json(const Subspace& s) {
  Json basis = Json::array();
  for (int i = 0; i < s.basis().rows(); ++i) basis.push_back(s.basis().row(i));
  return Json{{"p", s.field().p}, {"ambient", s.ambient()}, {"basis", basis}};
}

Subspace subspace_from_json(const Json& j) {
  FieldConfig f(j.at("p").get<int>());
  int ambient = j.at("ambient").get<int>();
  std::vector<std::vector<int>> rows;
  for (const auto& r : j.at("basis")) rows.push_back(r.get<std::vector<int>>());
  Mat basis = rows.empty() ? Mat(0, ambient, f) : Mat::from_rows(rows, f);
  return Subspace::from_rref(ambient, basis);
}

Json finset_to_json(const FinSet& s) { return Json(s.labels); }

FinSet finset_from_json(const Json& j) {
  return FinSet(j.get<std::vector<int>>());
}

Json setmap_to_json(const SetMap& f) {
  Json m = Json::object();
  for (auto& [k, v] : f.assignment) m[std::to_string(k)] = v;
  return Json{{"dom", f.domain.labels}, {"cod", f.codomain.labels}, {"map", m}};
}

SetMap setmap_from_json(const Json& j) {
  FinSet dom = FinSet(j.at("dom").get<std::vector<int>>());
  FinSet cod = FinSet(j.at("cod").get<std::vector<int>>());
  std::map<int, int> a;
  for (auto& [k, v] : j.at("map").items()) a[std::stoi(k)] = v.get<int>();
  return SetMap(dom, cod, std::move(a));
}

Json square_to_json(const AcuteSquare& sq) {
  return Json{{"I", sq.outer.labels}, {"i", sq.slot}, {"J", sq.inner.labels}};
}

AcuteSquare square_from_json(const Json& j) {
  return make_acute_square(FinSet(j.at("I").get<std::vector<int>>()),
                           j.at("i").get<int>(),
                           FinSet(j.at("J").get<std::vector<int>>()));
}

std::string subset_key(const FinSet& s) {
  std::ostringstream os;
  for (size_t i = 0; i < s.labels.size(); ++i) {
    if (i) os << ',';
    os << s.labels[i];
  }
  return os.str();
}

Json dim_vector_to_json(const Quiver& q, const DimVector& dv) {
  Json out = Json::object();
  for (size_t v = 0; v < q.vertices.size(); ++v)
    out[subset_key(q.vertices[v])] = dv.at[v];
  return out;
}

DimVector dim_vector_from_json(const Quiver& q, const Json& j) {
  DimVector dv;
  for (const FinSet& v : q.vertices) {
    auto it = j.find(subset_key(v));
    dv.at.push_back(it == j.end() ? 0 : it->get<int>());
  }
  return dv;
}

Json family_to_json(const Quiver& q, const SubrepFamily& fam) {
  Json out = Json::object();
  for (size_t v = 0; v < q.vertices.size(); ++v)
    out[subset_key(q.vertices[v])] = subspace_to_json(fam[v]);
  return out;
}

namespace {

SubrepFamily family_from_json(const Quiver& q, const ConormalContext& ctx,
                              const Json& j) {
  SubrepFamily fam;
  for (const FinSet& v : q.vertices) {
    auto it = j.find(subset_key(v));
    if (it == j.end())
      throw std::invalid_argument("family: missing vertex " + subset_key(v));
    fam.push_back(subspace_from_json(*it));
  }
  return fam;
}

}  // namespace

Json element_to_json(const FMElement& e) {
  Quiver q = build_quiver(e.base, Flavor::S);
  return Json{{"schema_version", 1},
              {"I", e.base.labels},
              {"d", e.ctx.d},
              {"p", e.ctx.field.p},
              {"family", family_to_json(q, e.family)}};
}

FMElement element_from_json(const Json& j) {
  FinSet base(j.at("I").get<std::vector<int>>());
  ConormalContext ctx(FieldConfig(j.at("p").get<int>()), j.at("d").get<int>());
  Quiver q = build_quiver(base, Flavor::S);
  return make_element(base, ctx, family_from_json(q, ctx, j.at("family")));
}

Json b_element_to_json(const BElement& e) {
  Quiver q = build_quiver(e.base, Flavor::B);
  return Json{{"schema_version", 1},
              {"I", e.base.labels},
              {"d", e.ctx.d},
              {"p", e.ctx.field.p},
              {"flavor", "b"},
              {"family", family_to_json(q, e.family)}};
}

BElement b_element_from_json(const Json& j) {
  FinSet base(j.at("I").get<std::vector<int>>());
  ConormalContext ctx(FieldConfig(j.at("p").get<int>()), j.at("d").get<int>());
  Quiver q = build_quiver(base, Flavor::B);
  return make_b_element(base, ctx, family_from_json(q, ctx, j.at("family")));
}

Json endo_to_json(const DecreasingEndo& e) {
  return Json{{"schema_version", 1},
              {"n", e.lattice->ambient},
              {"p", e.lattice->field.p},
              {"map", e.map}};
}

DecreasingEndo endo_from_json(const Json& j) {
  auto lat = SubLattice::build(j.at("n").get<int>(),
                               FieldConfig(j.at("p").get<int>()));
  auto map = j.at("map").get<std::vector<int>>();
  if (map.size() != static_cast<size_t>(lat->size()))
    throw std::invalid_argument("endo: map length mismatch");
  for (int v : map)
    if (v < 0 || v >= lat->size())
      throw std::invalid_argument("endo: index out of range");
  if (!is_decreasing_monotone(*lat, map))
    throw std::invalid_argument("endo: not decreasing+monotone");
  return DecreasingEndo{std::move(lat), std::move(map)};
}

Json signed_perm_to_json(const SignedPermMatrix& m) {
  Json rows = Json::array();
  for (int i = 0; i < m.rows; ++i) {
    Json row = Json::array();
    for (int j = 0; j < m.cols; ++j) row.push_back(m.at(i, j));
    rows.push_back(row);
  }
  return Json{{"rows", m.rows}, {"cols", m.cols}, {"entries", rows}};
}

SignedPermMatrix signed_perm_from_json(const Json& j) {
  int r = j.at("rows").get<int>();
  int c = j.at("cols").get<int>();
  std::vector<int> e;
  for (const auto& row : j.at("entries"))
    for (const auto& v : row) e.push_back(v.get<int>());
  return SignedPermMatrix(r, c, std::move(e));
}

}  // namespace fmop
