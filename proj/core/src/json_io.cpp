#include "weylref/json_io.hpp"

#include "weylref/errors.hpp"

namespace weylref {

void check_schema(const Json& j) {
  require(j.is_object(), "expected a JSON object");
  if (j.contains("schema"))
    require(j["schema"].is_number_integer() && j["schema"].get<int>() == kSchemaVersion,
            "unsupported schema version");
}

Json root_to_json(const RootSystem& rs, int root) {
  Json out = Json::array();
  for (auto x : rs.root(root)) out.push_back(x);
  return out;
}

int root_from_json(const RootSystem& rs, const Json& j) {
  require(j.is_array() && static_cast<int>(j.size()) == rs.rank(), "root must be an array of " +
                                                                       std::to_string(rs.rank()) + " integers");
  IntVec c;
  for (const auto& x : j) {
    require(x.is_number_integer(), "root coordinates must be integers");
    c.push_back(x.get<std::int64_t>());
  }
  int r = rs.find(c);
  require(r >= 0, "not a root: " + j.dump());
  return r;
}

Json vector_to_json(const Vector& v) {
  Json out = Json::array();
  for (const auto& x : v.c) out.push_back(to_string(x));
  return out;
}

Vector vector_from_json(const RootSystem& rs, const Json& j) {
  require(j.is_array() && static_cast<int>(j.size()) == rs.rank(), "vector must have " +
                                                                       std::to_string(rs.rank()) + " entries");
  Vector v(rs.rank());
  for (std::size_t i = 0; i < j.size(); ++i) {
    if (j[i].is_number_integer())
      v[i] = Rat(static_cast<long>(j[i].get<std::int64_t>()));
    else if (j[i].is_string())
      v[i] = parse_rat(j[i].get<std::string>());
    else
      throw ValidationError("vector entries must be integers or rational strings");
  }
  return v;
}

Json to_json(const RootSystem& rs, const AffRoot& x) {
  return Json{{"root", root_to_json(rs, x.root)}, {"level", x.level}};
}

Json to_json(const RootSystem& rs, const ExtAffElement& g) {
  Json m = Json::array();
  for (std::size_t i = 0; i < g.w.matrix.size(); ++i) m.push_back(g.w.matrix[i]);
  (void)rs;
  return Json{{"w", m}, {"translation", vector_to_json(g.gamma)}};
}

Json to_json(const RootSystem& rs, const Inequality& w) {
  return Json{{"normal", root_to_json(rs, w.normal)}, {"constant", to_string(w.constant)}, {"strict", w.strict}};
}

Json to_json(const RootSystem& rs, const GFDatum& d) {
  Json g = Json::array();
  for (std::size_t i = 0; i < d.gamma.size(); ++i)
    g.push_back(Json{{"root", root_to_json(rs, d.gamma[i])}, {"f", d.f[i]}});
  return Json{{"gamma", g}};
}

GFDatum gf_from_json(const RootSystem& rs, const Json& j) {
  check_schema(j);
  require(j.contains("gamma") && j["gamma"].is_array(), "missing array 'gamma'");
  std::vector<std::pair<int, std::int64_t>> pairs;
  for (const auto& e : j["gamma"]) {
    require(e.is_object() && e.contains("root") && e.contains("f"), "gamma entries need 'root' and 'f'");
    require(e["f"].is_number_integer(), "f values must be integers");
    pairs.push_back({root_from_json(rs, e["root"]), e["f"].get<std::int64_t>()});
  }
  return GFDatum::from_pairs(std::move(pairs));
}

Json to_json(const RootSystem& rs, const PsiXPair& p) {
  const auto& info = p.info();
  Json psi = Json::array();
  for (int r : info.psi) psi.push_back(root_to_json(rs, r));
  Json comps = Json::array();
  Json lattice = Json::array();
  for (std::size_t c = 0; c < info.components.size(); ++c) {
    Json simple = Json::array();
    for (int j : info.components[c]) simple.push_back(root_to_json(rs, info.simple[j]));
    comps.push_back(simple);
    const auto& b = p.xprime().blocks[c];
    lattice.push_back(Json{{"kind", to_string(b.kind)}, {"m", b.m}});
  }
  return Json{{"psi", psi}, {"components", comps}, {"lattice", lattice}, {"a", vector_to_json(p.a())}};
}

PsiXPair psix_from_json(const RootSystem& rs, const Json& j) {
  check_schema(j);
  require(j.contains("psi") && j["psi"].is_array(), "missing array 'psi'");
  require(j.contains("a"), "missing 'a'");
  require(j.contains("lattice") && j["lattice"].is_array(), "missing array 'lattice'");
  std::vector<int> psi;
  for (const auto& r : j["psi"]) psi.push_back(root_from_json(rs, r));
  AdmissibleLattice x;
  for (const auto& b : j["lattice"]) {
    require(b.is_object() && b.contains("kind"), "lattice blocks need 'kind'");
    XBlock blk;
    blk.kind = parse_xkind(b["kind"].get<std::string>());
    if (blk.kind != XKind::Zero) {
      require(b.contains("m") && b["m"].is_number_integer(), "lattice blocks need an integer 'm'");
      blk.m = b["m"].get<std::int64_t>();
    }
    x.blocks.push_back(blk);
  }
  return validate_psix(rs, RootSubset(psi), vector_from_json(rs, j["a"]), x);
}

namespace {

Json checks_json(const std::vector<IdentityCheck>& checks) {
  Json out = Json::array();
  for (const auto& c : checks)
    out.push_back(Json{{"M", c.M}, {"lhs", c.lhs.get_str()}, {"rhs", c.rhs.get_str()}, {"pass", c.pass}});
  return out;
}

Json ints_json(const std::vector<Int>& v) {
  Json out = Json::array();
  for (const auto& x : v) out.push_back(x.get_str());
  return out;
}

}  // namespace

Json to_json(const DescentProfile& prof, const IdentityReport& rep) {
  auto sym = symmetry_unimodality_report(prof);
  return Json{{"lattice", to_string(prof.lattice)},
              {"h", prof.h},
              {"f", prof.f_phi.get_str()},
              {"c", prof.c},
              {"d", ints_json(prof.d)},
              {"divisible", rep.divisible},
              {"symmetric", sym.symmetric},
              {"unimodal", sym.unimodal},
              {"partitions_agree", rep.partitions_agree},
              {"checks", checks_json(rep.checks)},
              {"pass", rep.pass}};
}

Json to_json(const CyclicReport& rep) {
  return Json{{"n", rep.n},
              {"d", ints_json(rep.d)},
              {"matches_descent_stats", rep.matches_descent_stats},
              {"checks", checks_json(rep.checks)},
              {"pass", rep.pass}};
}

}  // namespace weylref
