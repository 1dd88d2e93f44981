// Batch interface over the operad library: point counting, CGK counts,
// composition of serialized elements, axiom verification, and Gaussian
// binomials. Exit codes: 0 ok, 1 usage error, 2 axiom violation, 3 budget
// exhausted.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <random>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "fmop/cgk.hpp"
#include "fmop/json_io.hpp"

using namespace fmop;

namespace {

FinSet parse_base(int n, const std::string& set_spec) {
  if (!set_spec.empty()) {
    std::vector<int> labels;
    std::stringstream ss(set_spec);
    std::string tok;
    while (std::getline(ss, tok, ',')) labels.push_back(std::stoi(tok));
    return FinSet(labels);
  }
  if (n < 1) throw std::invalid_argument("need --n >= 1 or --set");
  std::vector<int> labels;
  for (int t = 1; t <= n; ++t) labels.push_back(t);
  return FinSet(labels);
}

long long budget_or_env(long long flag_value) {
  if (flag_value > 0) return flag_value;
  if (const char* env = std::getenv("FMOP_BUDGET")) return std::stoll(env);
  return kDefaultBudget;
}

std::string dv_key(const Quiver& q, const DimVector& dv) {
  std::ostringstream os;
  for (size_t v = 0; v < q.vertices.size(); ++v) {
    if (v) os << ';';
    os << subset_key(q.vertices[v]) << ':' << dv.at[v];
  }
  return os.str();
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open " + path);
  return Json::parse(in);
}

void emit(const Json& doc, const std::string& format,
          const std::vector<std::pair<std::string, std::string>>& csv_rows) {
  if (format == "csv") {
    std::cout << "key,count\n";
    for (const auto& [k, v] : csv_rows) std::cout << '"' << k << "\"," << v << "\n";
  } else {
    std::cout << doc.dump(2) << "\n";
  }
}

int cmd_count(int q, int d, int n, const std::string& set_spec,
              const std::string& flavor, const std::string& dv_file,
              long long budget, int jobs, const std::string& format) {
  FinSet base = parse_base(n, set_spec);
  ConormalContext ctx(FieldConfig(q), d);
  Flavor fl = flavor == "b" ? Flavor::B : Flavor::S;
  Representation rep = conormal_representation(base, ctx, fl);

  Json doc{{"schema_version", 1}, {"command", "count"},
           {"I", base.labels},    {"q", q},
           {"d", d},              {"flavor", flavor}};
  std::vector<std::pair<std::string, std::string>> rows;

  if (!dv_file.empty()) {
    DimVector dv = dim_vector_from_json(rep.quiver, read_json_file(dv_file));
    BigInt c = count_parallel(rep, dv, jobs, budget);
    doc["dim_vector"] = dim_vector_to_json(rep.quiver, dv);
    doc["count"] = c.str();
    rows.emplace_back(dv_key(rep.quiver, dv), c.str());
    emit(doc, format, rows);
    return 0;
  }

  std::map<std::string, BigInt> table;
  enumerate_subreps(rep, std::nullopt, budget, [&](const SubrepFamily& fam) {
    table[dv_key(rep.quiver, dims_of(fam))] += 1;
  });
  BigInt total = count_parallel(rep, std::nullopt, jobs, budget);

  Json jt = Json::object();
  for (const auto& [k, v] : table) {
    jt[k] = v.str();
    rows.emplace_back(k, v.str());
  }
  doc["table"] = jt;
  doc["total"] = total.str();
  rows.emplace_back("total", total.str());
  emit(doc, format, rows);
  return 0;
}

int cmd_cgk(int q, int d, int n, const std::string& set_spec, long long budget,
            int jobs, const std::string& format) {
  FinSet base = parse_base(n, set_spec);
  ConormalContext ctx(FieldConfig(q), d);
  Representation rep = conormal_representation(base, ctx, Flavor::S);
  DimVector sv = scr(base, ctx);
  BigInt c = count_parallel(rep, sv, jobs, budget);
  Json doc{{"schema_version", 1},
           {"command", "cgk"},
           {"I", base.labels},
           {"q", q},
           {"d", d},
           {"scr", dim_vector_to_json(rep.quiver, sv)},
           {"count", c.str()}};
  emit(doc, format, {{dv_key(rep.quiver, sv), c.str()}});
  return 0;
}

int cmd_compose(const std::string& e1_file, const std::string& e2_file,
                const std::string& square_file, const std::string& flavor,
                const std::string& negate, const std::string& out_file) {
  Json sq_json = read_json_file(square_file);
  Json result;
  if (flavor == "b") {
    BElement e1 = b_element_from_json(read_json_file(e1_file));
    BElement e2 = b_element_from_json(read_json_file(e2_file));
    int slot = sq_json.at("i").get<int>();
    std::map<int, int> signs;
    if (!negate.empty()) {
      std::stringstream ss(negate);
      std::string tok;
      while (std::getline(ss, tok, ',')) signs[std::stoi(tok)] = -1;
    }
    result = b_element_to_json(compose_b(e1, slot, e2, signs));
  } else {
    FMElement e1 = element_from_json(read_json_file(e1_file));
    FMElement e2 = element_from_json(read_json_file(e2_file));
    AcuteSquare sq = square_from_json(sq_json);
    result = element_to_json(compose(e1, sq, e2));
  }
  if (out_file.empty()) {
    std::cout << result.dump(2) << "\n";
  } else {
    std::ofstream out(out_file);
    if (!out) throw std::invalid_argument("cannot write " + out_file);
    out << result.dump(2) << "\n";
  }
  return 0;
}

// ---- verify ----------------------------------------------------------------

FinSet range_set(int start, int n) {
  std::vector<int> ls;
  for (int t = 0; t < n; ++t) ls.push_back(start + t);
  return FinSet(ls);
}

FMElement random_element(const FinSet& base, const ConormalContext& ctx,
                         std::mt19937_64& rng) {
  Representation rep = conormal_representation(base, ctx, Flavor::S);
  SubrepFamily fam;
  for (size_t v = 0; v < rep.quiver.vertices.size(); ++v) {
    Subspace lo = Subspace::zero(rep.vertex_dim[v], ctx.field);
    for (size_t a = 0; a < rep.quiver.arrows.size(); ++a)
      if (rep.quiver.arrows[a].second == static_cast<int>(v))
        lo = sum(lo, apply(rep.arrow_mat[a], fam[rep.quiver.arrows[a].first]));
    auto opts = all_subspaces(rep.vertex_dim[v], ctx.field, std::nullopt, lo);
    fam.push_back(opts[rng() % opts.size()]);
  }
  return make_element(base, ctx, fam);
}

std::vector<SetMap> permutations_of(const FinSet& s) {
  std::vector<SetMap> out;
  std::vector<int> img = s.labels;
  do {
    std::map<int, int> a;
    for (int t = 0; t < s.size(); ++t) a[s.labels[t]] = img[t];
    out.push_back(SetMap(s, s, std::move(a)));
  } while (std::next_permutation(img.begin(), img.end()));
  return out;
}

struct Violation {
  std::string axiom;
  Json data;
};

// returns the number of checks performed; throws Violation on failure
long long verify_exhaustive(const ConormalContext& ctx, int max_size) {
  long long checks = 0;
  std::vector<FinSet> i_opts, j_opts, l_opts;
  for (int s = 1; s <= max_size; ++s) {
    i_opts.push_back(range_set(1, s));
    j_opts.push_back(range_set(11, s));
    l_opts.push_back(range_set(21, s));
  }
  for (const FinSet& i_set : i_opts)
    for (const FinSet& j_set : j_opts) {
      auto e1s = all_elements(i_set, ctx);
      auto e2s = all_elements(j_set, ctx);
      // OP-1 over all label permutations
      for (int slot : i_set.labels)
        for (const SetMap& f1 : permutations_of(i_set))
          for (const SetMap& f2 : permutations_of(j_set)) {
            AcuteSquare sq_a = make_acute_square(i_set, slot, j_set);
            AcuteSquare sq_b = make_acute_square(i_set, f1(slot), j_set);
            for (const FMElement& e1 : e1s)
              for (const FMElement& e2 : e2s) {
                ++checks;
                if (!check_op1(sq_a, sq_b, f1, f2, e1, e2))
                  throw Violation{"OP-1",
                                  Json{{"square", square_to_json(sq_a)},
                                       {"f1", setmap_to_json(f1)},
                                       {"f2", setmap_to_json(f2)},
                                       {"e1", element_to_json(e1)},
                                       {"e2", element_to_json(e2)}}};
              }
          }
      // OP-2 with a third stage
      for (const FinSet& l_set : l_opts) {
        auto e3s = all_elements(l_set, ctx);
        for (int i : i_set.labels)
          for (int j : j_set.labels)
            for (const FMElement& e1 : e1s)
              for (const FMElement& e2 : e2s)
                for (const FMElement& e3 : e3s) {
                  ++checks;
                  if (!check_op2(i_set, i, j_set, j, l_set, e1, e2, e3))
                    throw Violation{"OP-2",
                                    Json{{"I", i_set.labels},
                                         {"i", i},
                                         {"J", j_set.labels},
                                         {"j", j},
                                         {"L", l_set.labels},
                                         {"e1", element_to_json(e1)},
                                         {"e2", element_to_json(e2)},
                                         {"e3", element_to_json(e3)}}};
                }
      }
      // OP-3 needs two distinct slots
      if (i_set.size() < 2) continue;
      for (const FinSet& l_set : l_opts)
        for (const FMElement& e : e1s)
          for (const FMElement& e1 : e2s)
            for (const FMElement& e2 : all_elements(l_set, ctx)) {
              ++checks;
              if (!check_op3(i_set, i_set.labels[0], i_set.labels[1], j_set,
                             l_set, e, e1, e2))
                throw Violation{"OP-3",
                                Json{{"I", i_set.labels},
                                     {"J1", j_set.labels},
                                     {"J2", l_set.labels},
                                     {"e", element_to_json(e)},
                                     {"e1", element_to_json(e1)},
                                     {"e2", element_to_json(e2)}}};
            }
    }
  return checks;
}

long long verify_random(const ConormalContext& ctx, int max_size,
                        uint64_t seed, int samples) {
  std::mt19937_64 rng(seed);
  const int top = std::min(3, max_size + 1);
  long long checks = 0;
  for (int trial = 0; trial < samples; ++trial) {
    FinSet i_set = range_set(1, 2 + static_cast<int>(rng() % (top - 1)));
    FinSet j_set = range_set(11, 2 + static_cast<int>(rng() % (top - 1)));
    FinSet l_set = range_set(21, 2);
    FMElement e1 = random_element(i_set, ctx, rng);
    FMElement e2 = random_element(j_set, ctx, rng);
    FMElement e3 = random_element(l_set, ctx, rng);
    int slot = i_set.labels[rng() % i_set.size()];
    int j = j_set.labels[rng() % j_set.size()];

    auto p1s = permutations_of(i_set);
    auto p2s = permutations_of(j_set);
    const SetMap& f1 = p1s[rng() % p1s.size()];
    const SetMap& f2 = p2s[rng() % p2s.size()];
    AcuteSquare sq_a = make_acute_square(i_set, slot, j_set);
    AcuteSquare sq_b = make_acute_square(i_set, f1(slot), j_set);
    ++checks;
    if (!check_op1(sq_a, sq_b, f1, f2, e1, e2))
      throw Violation{"OP-1", Json{{"trial", trial},
                                   {"e1", element_to_json(e1)},
                                   {"e2", element_to_json(e2)}}};
    ++checks;
    if (!check_op2(i_set, slot, j_set, j, l_set, e1, e2, e3))
      throw Violation{"OP-2", Json{{"trial", trial},
                                   {"e1", element_to_json(e1)},
                                   {"e2", element_to_json(e2)},
                                   {"e3", element_to_json(e3)}}};
    int other = i_set.labels[(i_set.index_of(slot) + 1) % i_set.size()];
    ++checks;
    if (!check_op3(i_set, slot, other, j_set, l_set, e1, e2, e3))
      throw Violation{"OP-3", Json{{"trial", trial},
                                   {"e", element_to_json(e1)},
                                   {"e1", element_to_json(e2)},
                                   {"e2", element_to_json(e3)}}};
  }
  return checks;
}

int cmd_verify(int q, int d, int max_size, uint64_t seed, int samples) {
  ConormalContext ctx(FieldConfig(q), d);
  try {
    long long ex = verify_exhaustive(ctx, max_size);
    std::cout << "exhaustive: ok (" << ex << " checks, sizes <= " << max_size
              << ", q=" << q << ", d=" << d << ")\n";
    long long rd = verify_random(ctx, max_size, seed, samples);
    std::cout << "randomized: ok (" << rd << " checks, seed=" << seed
              << ", samples=" << samples << ")\n";
  } catch (const Violation& v) {
    std::cout << "violation of " << v.axiom << ":\n" << v.data.dump(2) << "\n";
    return 2;
  }
  std::cout << "verify: all axioms hold\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"quiver-Grassmannian operad toolkit"};
  app.require_subcommand(1);

  int q = 2, d = 1, n = 0, jobs = 1, k = 0, max_size = 2, samples = 100;
  long long budget = 0;
  uint64_t seed = 0;
  std::string set_spec, flavor = "s", dv_file, format = "json";
  std::string e1_file, e2_file, square_file, negate, out_file;

  auto add_common = [&](CLI::App* c) {
    c->add_option("--q", q, "field size (prime)");
    c->add_option("--d", d, "conormal block dimension");
    c->add_option("--budget", budget, "enumeration budget (default: FMOP_BUDGET env or built-in)");
    c->add_option("--format", format)->check(CLI::IsMember({"json", "csv"}));
  };

  CLI::App* count = app.add_subcommand("count", "count subrepresentation families");
  add_common(count);
  count->add_option("--n", n, "base set {1..n}");
  count->add_option("--set", set_spec, "explicit base set, e.g. 1,2,5");
  count->add_option("--flavor", flavor)->check(CLI::IsMember({"s", "b"}));
  count->add_option("--dv", dv_file, "dimension vector JSON file");
  count->add_option("--jobs", jobs, "parallel workers");

  CLI::App* cgk_cmd = app.add_subcommand("cgk", "count the scr component");
  add_common(cgk_cmd);
  cgk_cmd->add_option("--n", n);
  cgk_cmd->add_option("--set", set_spec);
  cgk_cmd->add_option("--jobs", jobs);

  CLI::App* compose_cmd = app.add_subcommand("compose", "compose two serialized elements");
  compose_cmd->add_option("--e1", e1_file)->required();
  compose_cmd->add_option("--e2", e2_file)->required();
  compose_cmd->add_option("--square", square_file, "square JSON {I,i,J}")->required();
  compose_cmd->add_option("--flavor", flavor)->check(CLI::IsMember({"s", "b"}));
  compose_cmd->add_option("--negate", negate, "labels given a -1 sign (b flavor)");
  compose_cmd->add_option("--out", out_file, "output file (default stdout)");

  CLI::App* verify = app.add_subcommand("verify", "run the operad axiom suites");
  verify->add_option("--q", q);
  verify->add_option("--d", d);
  verify->add_option("--max-size", max_size, "exhaustive up to this set size");
  verify->add_option("--seed", seed);
  verify->add_option("--samples", samples, "randomized trials");

  CLI::App* gaussian = app.add_subcommand("gaussian", "gaussian binomial [n,k]_q");
  gaussian->add_option("--n", n)->required();
  gaussian->add_option("--k", k)->required();
  gaussian->add_option("--q", q);
  gaussian->add_option("--format", format)->check(CLI::IsMember({"json", "csv"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    if (count->parsed())
      return cmd_count(q, d, n, set_spec, flavor, dv_file, budget_or_env(budget),
                       jobs, format);
    if (cgk_cmd->parsed())
      return cmd_cgk(q, d, n, set_spec, budget_or_env(budget), jobs, format);
    if (compose_cmd->parsed())
      return cmd_compose(e1_file, e2_file, square_file, flavor, negate, out_file);
    if (verify->parsed()) return cmd_verify(q, d, max_size, seed, samples);
    if (gaussian->parsed()) {
      FieldConfig check_prime(q);  // enforce the q-prime contract
      BigInt v = gaussian_binomial(n, k, q);
      if (format == "json")
        std::cout << Json{{"schema_version", 1}, {"command", "gaussian"},
                          {"n", n}, {"k", k}, {"q", q}, {"value", v.str()}}
                         .dump(2)
                  << "\n";
      else
        std::cout << v.str() << "\n";
    }
    return 0;
  } catch (const BudgetExhausted& e) {
    std::cout << Json{{"schema_version", 1},
                      {"error", "budget_exhausted"},
                      {"partial", e.partial.str()}}
                     .dump(2)
              << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
