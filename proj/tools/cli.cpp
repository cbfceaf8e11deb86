#include "cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "weylref/bijmap.hpp"
#include "weylref/errors.hpp"
#include "weylref/identities.hpp"
#include "weylref/json_io.hpp"
#include "weylref/lattice.hpp"

namespace weylref::cli {

namespace {

struct Config {
  std::int64_t level_bound = 6;
  std::uint64_t weyl_bound = kDefaultWeylBound;
  std::string format = "json";
};

Json header(const std::string& command, const RootSystem* rs) {
  Json j;
  j["schema"] = kSchemaVersion;
  j["command"] = command;
  if (rs) j["type"] = rs->label();
  return j;
}

// Inline JSON, "-" for stdin, or a file path.
Json read_json(const std::string& arg) {
  std::string text;
  if (!arg.empty() && (arg[0] == '{' || arg[0] == '[')) {
    text = arg;
  } else if (arg == "-") {
    std::stringstream ss;
    ss << std::cin.rdbuf();
    text = ss.str();
  } else {
    std::ifstream in(arg);
    require(in.good(), "cannot read '" + arg + "'");
    std::stringstream ss;
    ss << in.rdbuf();
    text = ss.str();
  }
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw ValidationError(std::string("invalid JSON: ") + e.what());
  }
}

GFDatum fundamental_datum(const RootSystem& rs) {
  std::vector<std::pair<int, std::int64_t>> pairs;
  for (int j = 0; j < rs.rank(); ++j) pairs.push_back({rs.simple_root(j), 0});
  for (std::size_t c = 0; c < rs.components().size(); ++c) pairs.push_back({rs.negate(rs.highest_root(c)), 1});
  return GFDatum::from_pairs(pairs);
}

// A datum given in either parameterisation, converted to the first one.
struct Datum {
  std::optional<GFPair> gf;
  std::optional<PsiXPair> psix;
};

Datum load_datum(const RootSystem& rs, const Json& j) {
  check_schema(j);
  Datum d;
  if (j.contains("gamma")) {
    d.gf = validate_gf(rs, gf_from_json(rs, j));
  } else if (j.contains("psi")) {
    d.psix = psix_from_json(rs, j);
    d.gf = validate_gf(rs, j_inverse_minimal(rs, *d.psix));
  } else {
    throw ValidationError("datum needs either 'gamma' or 'psi'");
  }
  return d;
}

void emit(std::ostream& out, const Json& j) { out << j.dump(2) << "\n"; }

int cmd_classify(const std::string& type, const Config& cfg, std::ostream& out) {
  auto rs = RootSystem::build(type);
  auto cl = enumerate_subsystems(rs, cfg.weyl_bound);
  if (cfg.format == "table") {
    out << "type " << rs.label() << ": " << cl.classes.size() << " classes";
    if (cl.fingerprint_only) out << " (fingerprint classes)";
    out << "\n";
    out << std::left << std::setw(4) << "#" << std::setw(16) << "subsystem" << std::setw(7) << "roots"
        << std::setw(8) << "closed" << "dual-closed\n";
    for (std::size_t i = 0; i < cl.classes.size(); ++i) {
      const auto& c = cl.classes[i];
      out << std::left << std::setw(4) << i + 1 << std::setw(16) << c.type << std::setw(7)
          << c.representative.size() << std::setw(8) << (c.closed ? "yes" : "no") << (c.dual_closed ? "yes" : "no")
          << "\n";
    }
    return 0;
  }
  Json j = header("classify", &rs);
  j["fingerprint_only"] = cl.fingerprint_only;
  Json classes = Json::array();
  for (const auto& c : cl.classes) {
    Json reps = Json::array();
    for (int r : c.representative) reps.push_back(root_to_json(rs, r));
    classes.push_back(Json{{"type", c.type},
                           {"roots", c.representative.size()},
                           {"closed", c.closed},
                           {"dual_closed", c.dual_closed},
                           {"representative", reps}});
  }
  j["classes"] = classes;
  emit(out, j);
  return 0;
}

int cmd_subgroup(const std::string& type, const std::string& datum, const std::string& action,
                 const std::string& lattice, const std::string& super, std::int64_t coeff_bound, const Config& cfg,
                 std::ostream& out) {
  auto rs = RootSystem::build(type);
  auto d = load_datum(rs, read_json(datum));
  const GFPair& p = *d.gf;
  Json j = header("subgroup", &rs);
  j["action"] = action;
  if (action == "roots") {
    Json roots = Json::array();
    for (const auto& x : roots_of_gf(rs, p, cfg.level_bound)) roots.push_back(to_json(rs, x));
    j["level_bound"] = cfg.level_bound;
    j["roots"] = roots;
  } else if (action == "alcove") {
    auto alc = alcove_of_gf(rs, p);
    Json walls = Json::array(), free = Json::array(), parts = Json::array();
    for (const auto& w : alc.walls) walls.push_back(to_json(rs, w));
    for (const auto& v : alc.free_directions) free.push_back(vector_to_json(v));
    for (const auto& part : alc.parts) {
      Json others = Json::array();
      for (const auto& v : part.others) others.push_back(vector_to_json(v));
      parts.push_back(Json{{"simplex", part.simplex}, {"apex", vector_to_json(part.apex)}, {"others", others}});
    }
    j["walls"] = walls;
    j["free_directions"] = free;
    j["parts"] = parts;
  } else if (action == "volume") {
    auto v = volume_of_gf(rs, p);
    if (cfg.format == "table") {
      out << (v ? v->to_string() : "infinite") << "\n";
      return 0;
    }
    j["volume"] = v ? Json(v->to_string()) : Json(nullptr);
  } else if (action == "index") {
    GFPair sup = super.empty() ? validate_gf(rs, fundamental_datum(rs)) : *load_datum(rs, read_json(super)).gf;
    auto idx = index_of_gf(rs, p, sup);
    if (cfg.format == "table") {
      out << (idx.finite ? idx.index.get_str() : "infinite") << "\n";
      return 0;
    }
    j["finite"] = idx.finite;
    j["index"] = idx.finite ? Json(idx.index.get_str()) : Json(nullptr);
  } else if (action == "cosets") {
    require(lattice == "Q" || lattice == "P", "lattice must be Q or P");
    auto lat = lattices(rs);
    auto group = weyl_group(rs, cfg.weyl_bound);
    auto reps = coset_reps(rs, p, lattice == "Q" ? lat.coroot : lat.coweight, &group);
    Json arr = Json::array();
    for (const auto& g : reps) arr.push_back(to_json(rs, g));
    j["lattice"] = lattice;
    j["count"] = reps.size();
    j["representatives"] = arr;
  } else if (action == "elements") {
    PsiXPair q = d.psix ? *d.psix : j_forward(rs, p);
    Json arr = Json::array();
    for (const auto& g : elements_of_psix(rs, q, coeff_bound)) arr.push_back(to_json(rs, g));
    j["coeff_bound"] = coeff_bound;
    j["elements"] = arr;
  } else if (action == "type") {
    j["components"] = isomorphism_type(rs, p);
  } else {
    throw ValidationError("unknown action '" + action + "'");
  }
  emit(out, j);
  return 0;
}

int cmd_bij(const std::string& type, const std::string& direction, const std::string& datum, const Config& cfg,
            std::ostream& out) {
  auto rs = RootSystem::build(type);
  Json in = read_json(datum);
  check_schema(in);
  Json j = header("bij", &rs);
  j["direction"] = direction;
  if (direction == "forward") {
    require(in.contains("gamma"), "forward direction expects a (gamma, f) datum");
    auto p = validate_gf(rs, gf_from_json(rs, in));
    j["result"] = to_json(rs, j_forward(rs, p, cfg.level_bound));
  } else if (direction == "inverse") {
    require(in.contains("psi"), "inverse direction expects a (psi, X) datum");
    auto p = psix_from_json(rs, in);
    auto a = j_inverse_minimal(rs, p);
    auto b = j_inverse_alcove(rs, p);
    ensure(a == b, "the two inverse constructions disagree");
    j["result"] = to_json(rs, a);
  } else {
    throw ValidationError("direction must be forward or inverse");
  }
  emit(out, j);
  return 0;
}

int cmd_identity(const std::string& type, const std::string& lattice, std::int64_t mmin, std::int64_t mmax,
                 const Config& cfg, std::ostream& out) {
  auto rs = RootSystem::build(type);
  auto prof = descent_stats(rs, parse_xkind(lattice), cfg.weyl_bound);
  auto rep = verify_identity(prof, mmin, mmax);
  if (cfg.format == "table") {
    out << rs.label() << " lattice " << to_string(prof.lattice) << ", h = " << prof.h
        << ", f = " << prof.f_phi.get_str() << "\nd =";
    for (const auto& x : prof.d) out << " " << x.get_str();
    out << "\n";
    for (const auto& c : rep.checks)
      out << "M = " << c.M << ": " << c.lhs.get_str() << " = " << c.rhs.get_str() << (c.pass ? "  ok" : "  FAIL")
          << "\n";
  } else {
    Json j = header("identity", &rs);
    j.update(to_json(prof, rep));
    emit(out, j);
  }
  ensure(rep.pass, "identity check failed");
  return 0;
}

int cmd_diagram(const std::string& type, const std::string& roots, bool completed, const Config& cfg,
                std::ostream& out) {
  auto rs = RootSystem::build(type);
  std::vector<int> nodes;
  if (!roots.empty()) {
    Json j = read_json(roots);
    require(j.is_array(), "roots must be a JSON array");
    for (const auto& r : j) nodes.push_back(root_from_json(rs, r));
  } else {
    for (int i = 0; i < rs.rank(); ++i) nodes.push_back(rs.simple_root(i));
    if (completed)
      for (std::size_t c = 0; c < rs.components().size(); ++c) nodes.push_back(rs.negate(rs.highest_root(c)));
  }
  auto d = dynkin_diagram(rs, nodes);
  if (cfg.format == "table") {
    out << d.render();
    return 0;
  }
  Json j = header("diagram", &rs);
  Json ns = Json::array(), es = Json::array();
  for (const auto& n : d.nodes) ns.push_back(Json{{"root", root_to_json(rs, n.root)}, {"norm2", to_string(n.norm2)}});
  for (const auto& e : d.edges) es.push_back(Json{{"a", e.a}, {"b", e.b}, {"cab", e.cab}, {"cba", e.cba}});
  j["nodes"] = ns;
  j["edges"] = es;
  emit(out, j);
  return 0;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Reflection subgroups of finite and affine Weyl groups"};
  app.require_subcommand(1);
  app.fallthrough();
  Config cfg;
  app.add_option("--level-bound", cfg.level_bound, "Level bound for affine root listings")
      ->check(CLI::PositiveNumber);
  app.add_option("--weyl-bound", cfg.weyl_bound, "Cap on Weyl group enumeration")->check(CLI::PositiveNumber);
  std::string format_opt;
  app.add_option("--format", format_opt, "Output format")->check(CLI::IsMember({"table", "json"}));

  std::string type, datum, action = "roots", lattice = "Q", super, direction, lat_kind = "P", roots;
  std::int64_t coeff_bound = 1, mmin = 1, mmax = 10;
  bool completed = false;

  auto* classify = app.add_subcommand("classify", "Conjugacy classes of root subsystems");
  classify->add_option("type", type, "Cartan type, e.g. B3 or A2xG2")->required();

  auto* subgroup = app.add_subcommand("subgroup", "Reflection subgroup given by a datum");
  subgroup->add_option("type", type)->required();
  subgroup->add_option("--datum", datum, "JSON datum: inline, a file, or - for stdin")->required();
  subgroup->add_option("--action", action)
      ->check(CLI::IsMember({"roots", "alcove", "volume", "index", "cosets", "elements", "type"}));
  subgroup->add_option("--lattice", lattice, "Translation lattice for cosets")->check(CLI::IsMember({"Q", "P"}));
  subgroup->add_option("--super", super, "Containing subgroup for index (default: the affine Weyl group)");
  subgroup->add_option("--coeff-bound", coeff_bound, "Coefficient bound for elements")
      ->check(CLI::NonNegativeNumber);

  auto* bij = app.add_subcommand("bij", "Convert between the two parameterisations");
  bij->add_option("type", type)->required();
  bij->add_option("--direction", direction)->required()->check(CLI::IsMember({"forward", "inverse"}));
  bij->add_option("--datum", datum)->required();

  auto* identity = app.add_subcommand("identity", "Check the descent identity");
  identity->add_option("--type", type)->required();
  identity->add_option("--lattice", lat_kind)->check(CLI::IsMember({"P", "Pdual"}));
  identity->add_option("--mmin", mmin)->check(CLI::PositiveNumber);
  identity->add_option("--mmax", mmax)->check(CLI::PositiveNumber);

  auto* diagram = app.add_subcommand("diagram", "Dynkin diagram of the simple roots or of an np set");
  diagram->add_option("type", type)->required();
  diagram->add_option("--roots", roots, "JSON array of roots");
  diagram->add_flag("--completed", completed, "Add minus the highest root of each component");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? 0 : 1;
  }

  try {
    if (*classify || *diagram) cfg.format = "table";
    if (!format_opt.empty()) cfg.format = format_opt;
    if (*classify) return cmd_classify(type, cfg, out);
    if (*subgroup) return cmd_subgroup(type, datum, action, lattice, super, coeff_bound, cfg, out);
    if (*bij) return cmd_bij(type, direction, datum, cfg, out);
    if (*identity) return cmd_identity(type, lat_kind, mmin, mmax, cfg, out);
    if (*diagram) return cmd_diagram(type, roots, completed, cfg, out);
  } catch (const ValidationError& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  } catch (const InternalError& e) {
    err << "internal error: " << e.what() << "\n";
    return 2;
  } catch (const ResourceError& e) {
    err << "resource limit: " << e.what() << "\n";
    return 3;
  } catch (const Json::exception& e) {
    err << "error: malformed datum: " << e.what() << "\n";
    return 1;
  }
  return 1;
}

}  // namespace weylref::cli
