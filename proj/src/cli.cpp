#include "agemo/cli.hpp"

#include "agemo/algebra_io.hpp"
#include "agemo/claim_suite.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <map>
#include <sstream>

namespace agemo::cli {

namespace {

using json = nlohmann::ordered_json;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

bool ends_with(const std::string& s, const std::string& suffix) {
  return s.size() >= suffix.size() && s.compare(s.size() - suffix.size(), suffix.size(), suffix) == 0;
}

mpq_class parse_rational(const std::string& text) {
  mpq_class v;
  if (text.empty() || v.set_str(text, 10) != 0) throw UsageFailure("not a rational number: '" + text + "'");
  v.canonicalize();
  return v;
}

// "name:k=v,k=v" -> name and key/value pairs.
std::pair<std::string, std::map<std::string, std::string>> split_spec(const std::string& spec) {
  auto colon = spec.find(':');
  std::string name = spec.substr(0, colon);
  std::map<std::string, std::string> kv;
  if (colon == std::string::npos) return {name, kv};
  std::stringstream rest(spec.substr(colon + 1));
  std::string item;
  while (std::getline(rest, item, ',')) {
    if (item.empty()) continue;
    auto eq = item.find('=');
    if (eq == std::string::npos || eq == 0) throw UsageFailure("expected key=value in '" + spec + "'");
    kv[item.substr(0, eq)] = item.substr(eq + 1);
  }
  return {name, kv};
}

void allow_keys(const std::map<std::string, std::string>& kv, std::initializer_list<const char*> keys,
                const std::string& what) {
  for (const auto& [k, v] : kv) {
    bool ok = false;
    for (const char* a : keys) ok = ok || k == a;
    if (!ok) throw UsageFailure("unknown key '" + k + "' for " + what);
  }
}

const std::string& need(const std::map<std::string, std::string>& kv, const std::string& key, const std::string& what) {
  auto it = kv.find(key);
  if (it == kv.end()) throw UsageFailure(what + " needs " + key + "=");
  return it->second;
}

Side parse_side(const std::map<std::string, std::string>& kv) {
  auto it = kv.find("side");
  if (it == kv.end() || it->second == "left") return Side::Left;
  if (it->second == "right") return Side::Right;
  throw UsageFailure("side must be left or right");
}

std::size_t parse_vertex(const LoadedAlgebra& alg, const std::string& text) {
  if (alg.quiver) {
    if (auto v = alg.quiver->presentation.vertex_index(text)) return *v;
    throw UsageFailure("unknown vertex '" + text + "'");
  }
  std::size_t pos = 0;
  unsigned long v = 0;
  try {
    v = std::stoul(text, &pos);
  } catch (const std::exception&) {
    pos = 0;
  }
  if (pos != text.size() || v >= alg.algebra->vertex_count()) throw UsageFailure("bad vertex '" + text + "'");
  return v;
}

const CompiledQuiver& need_quiver(const LoadedAlgebra& alg, const std::string& what) {
  if (!alg.quiver) throw UsageFailure(what + " needs an algebra given by a quiver");
  return *alg.quiver;
}

Namer make_namer(const LoadedAlgebra& alg) {
  if (!alg.is_lambda) return {};
  CompiledQuiver c = *alg.quiver;
  mpq_class q = alg.q;
  return [c, q](const Module& m) { return lambda_label(c, q, m); };
}

std::string display_name(const LoadedAlgebra& alg, const Module& m) {
  if (m.dim() == 0) return "0";
  if (auto n = make_namer(alg); n)
    if (auto s = n(m)) return *s;
  return fallback_name(m);
}

json module_json(const LoadedAlgebra& alg, const Module& m) {
  json j;
  j["name"] = display_name(alg, m);
  j["side"] = to_string(m.side());
  j["dim"] = m.dim();
  return j;
}

json ext_json(const ExtProfile& p) {
  json j;
  j["horizon"] = p.horizon;
  j["ext"] = json::array();
  for (const auto& e : p.dims) j["ext"].push_back(e.to_string());
  j["notes"] = p.notes;
  return j;
}

json g_json(const GCondition& g) {
  json j;
  j["holds"] = g.holds;
  j["level"] = to_string(g.level);
  if (g.level == Certification::Refuted) j["index"] = g.index;
  j["horizon"] = g.horizon;
  return j;
}

std::vector<std::string> truth_list(const std::vector<Truth>& ts) {
  std::vector<std::string> out;
  for (Truth t : ts) out.push_back(to_string(t));
  return out;
}

void flatten_text(const json& j, const std::string& prefix, std::ostringstream& os) {
  if (j.is_object()) {
    for (const auto& [k, v] : j.items()) flatten_text(v, prefix.empty() ? k : prefix + "." + k, os);
  } else if (j.is_array() && std::all_of(j.begin(), j.end(), [](const json& e) { return e.is_primitive(); })) {
    os << prefix << ":";
    for (const auto& e : j) os << " " << (e.is_string() ? e.get<std::string>() : e.dump());
    os << "\n";
  } else if (j.is_array()) {
    for (std::size_t i = 0; i < j.size(); ++i) flatten_text(j[i], prefix + "[" + std::to_string(i) + "]", os);
  } else {
    os << prefix << ": " << (j.is_string() ? j.get<std::string>() : j.dump()) << "\n";
  }
}

std::string emit(const json& j, const std::string& format) {
  if (format == "json") return j.dump(2) + "\n";
  if (format == "text") {
    std::ostringstream os;
    flatten_text(j, "", os);
    return os.str();
  }
  throw UsageFailure("format '" + format + "' is not available here");
}

SearchOptions search_of(const Config& cfg) {
  SearchOptions so;
  so.seed = cfg.seed;
  return so;
}

void write_output(const std::string& text, const std::string& out_path, std::ostream& out) {
  if (out_path.empty()) {
    out << text;
    return;
  }
  std::ofstream f(out_path, std::ios::binary);
  if (!f) throw std::runtime_error("cannot write '" + out_path + "'");
  f << text;
}

}  // namespace

LoadedAlgebra load_algebra(const std::string& spec, const Config& cfg) {
  auto [name, kv] = split_spec(spec);
  LoadedAlgebra out;
  out.source = spec;
  auto q_of = [&]() {
    allow_keys(kv, {"q"}, name);
    mpq_class q = kv.count("q") ? parse_rational(kv.at("q")) : cfg.q.value_or(2);
    if (Scalar(cfg.field, q).is_zero()) throw UsageFailure("q must be nonzero in the chosen field");
    return q;
  };
  if (name == "lambda") {
    out.q = q_of();
    out.quiver = compile_lambda(out.q, cfg.field);
    out.is_lambda = true;
  } else if (name == "lambda_prime") {
    out.q = q_of();
    out.quiver = compile_lambda_prime(out.q, cfg.field);
  } else if (name == "lambda_dprime") {
    allow_keys(kv, {}, name);
    out.quiver = compile_lambda_dprime(cfg.field);
  } else if (name == "lambda_tilde") {
    out.q = q_of();
    out.quiver = compile_lambda_tilde(out.q, cfg.field);
  } else if (spec.find('/') != std::string::npos || spec.find('.') != std::string::npos) {
    std::string text = read_file(spec);
    if (ends_with(spec, ".quiver")) {
      BuildOptions opts;
      opts.field = cfg.field;
      QuiverPresentation p = parse_quiver(text);
      if (cfg.q && p.params.count("q")) opts.overrides["q"] = *cfg.q;
      if (p.params.count("q")) out.q = opts.overrides.count("q") ? opts.overrides["q"] : p.params["q"].value_or(2);
      out.quiver = build_path_algebra(p, opts);
    } else {
      out.algebra = finalize(parse_algebra_table(text));
    }
  } else {
    throw UsageFailure("unknown builtin algebra '" + name + "'");
  }
  if (out.quiver) out.algebra = out.quiver->algebra;
  return out;
}

Module build_module(const LoadedAlgebra& alg, const std::string& spec) {
  auto [name, kv] = split_spec(spec);
  const Field f = alg.algebra->field();
  auto scalar = [&](const std::string& key) {
    try {
      return Scalar::parse(f, need(kv, key, name));
    } catch (const UsageFailure&) {
      throw;
    } catch (const std::exception& e) {
      throw UsageFailure("bad value for " + key + ": " + e.what());
    }
  };
  if (name == "M") {
    allow_keys(kv, {"alpha"}, name);
    return make_M(need_quiver(alg, name), scalar("alpha"));
  }
  if (name == "Mprime") {
    allow_keys(kv, {"alpha"}, name);
    if (need(kv, "alpha", name) == "inf") return make_M_prime(need_quiver(alg, name), std::nullopt);
    return make_M_prime(need_quiver(alg, name), scalar("alpha"));
  }
  if (name == "Mi") {
    allow_keys(kv, {"vertex", "alpha"}, name);
    const std::string& v = need(kv, "vertex", name);
    if (v != "1" && v != "2") throw UsageFailure("Mi needs vertex=1 or vertex=2");
    return make_M_i(need_quiver(alg, name), v == "1" ? 1 : 2, scalar("alpha"));
  }
  if (name == "Lm" || name == "mL" || name == "U") {
    allow_keys(kv, {"alpha"}, name);
    const CompiledQuiver& c = need_quiver(alg, name);
    Scalar a = scalar("alpha");
    if (name == "Lm") return make_left_ideal_m(c, a).module;
    if (name == "mL") return make_right_ideal_m(c, a).module;
    return make_U(c, a).module;
  }
  if (name == "A") {
    allow_keys(kv, {"side"}, name);
    return regular_module(alg.algebra, parse_side(kv));
  }
  if (name == "P" || name == "S") {
    allow_keys(kv, {"vertex", "side"}, name);
    std::size_t v = parse_vertex(alg, need(kv, "vertex", name));
    Side s = parse_side(kv);
    if (name == "P") return projective_indecomposable(alg.algebra, s, v).module;
    return simple_module(alg.algebra, s, v);
  }
  throw UsageFailure("unknown module '" + name + "'");
}

std::vector<std::string> operation_names() {
  return {"dim",         "cover",      "syzygy",   "transpose",  "cosyzygy",     "dual",       "approximation",
          "ext",         "tr-profile", "torsionless", "reflexive", "omega-period", "certify-gp", "g-status",
          "indecomposable"};
}

std::string compute(const LoadedAlgebra& alg, const Module& m, const std::string& op, const Config& cfg) {
  ExtOptions eo;
  json j;
  j["algebra"] = alg.algebra->name();
  j["module"] = module_json(alg, m);
  j["op"] = op;
  json r;
  if (op == "dim") {
    r["dim"] = m.dim();
  } else if (op == "cover") {
    ProjectiveCover c = projective_cover(m);
    r["vertices"] = c.projective.vertices;
    r["projective_dim"] = c.projective.dim();
    r["syzygy_dim"] = c.projective.dim() - m.dim();
  } else if (op == "syzygy") {
    r = module_json(alg, syzygy(m));
  } else if (op == "transpose") {
    r = module_json(alg, transpose(m));
  } else if (op == "cosyzygy") {
    r = module_json(alg, cosyzygy(m));
  } else if (op == "dual") {
    r = module_json(alg, dual(m));
  } else if (op == "approximation") {
    LeftApproximation a = minimal_left_approximation(m);
    r["target_vertices"] = a.target.vertices;
    r["target_dim"] = a.target.dim();
    r["cokernel"] = module_json(alg, a.cokernel.module);
  } else if (op == "ext") {
    r = ext_json(ext_profile(m, cfg.horizon, eo));
  } else if (op == "tr-profile") {
    TRProfile p = tr_profile(m, cfg.horizon, eo);
    r["horizon"] = p.horizon;
    r["positive"] = truth_list(p.positive);
    r["negative"] = truth_list(p.negative);
  } else if (op == "torsionless") {
    r["torsionless"] = is_torsionless(m);
    r["torsion_dim"] = torsion_dim(m);
  } else if (op == "reflexive") {
    r["reflexive"] = is_reflexive(m);
  } else if (op == "omega-period") {
    PeriodResult p = omega_period(m, cfg.horizon, search_of(cfg));
    r["period"] = p.period ? json(*p.period) : json(nullptr);
    r["inconclusive"] = p.inconclusive;
    r["note"] = p.note;
  } else if (op == "certify-gp") {
    GPVerdict v = certify_gp(m, cfg.horizon, eo);
    r["verdict"] = to_string(v.kind);
    r["period"] = v.period;
    r["witness"] = v.witness;
    r["witness_index"] = v.witness_index;
    r["horizon"] = v.horizon;
  } else if (op == "g-status") {
    GStatus g = g_status(m, cfg.horizon, eo);
    r["G1"] = g_json(g.g1);
    r["G2"] = g_json(g.g2);
    r["G3"] = g_json(g.g3);
  } else if (op == "indecomposable") {
    IndecVerdict v = is_indecomposable(m, search_of(cfg));
    r["verdict"] = v.kind == IndecVerdict::Indecomposable ? "indecomposable"
                   : v.kind == IndecVerdict::Decomposes   ? "decomposes"
                                                          : "unknown";
    r["end_dim"] = v.end_dim;
  } else {
    throw UsageFailure("unknown operation '" + op + "'");
  }
  j["result"] = r;
  return emit(j, cfg.format);
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Syzygies, cosyzygies and Omega-mho components over finite-dimensional algebras", "agemo"};
  app.require_subcommand(1);
  app.fallthrough();
  Config cfg;
  std::string field = "Q", q_text, out_path;
  std::optional<std::size_t> walk_horizon;
  app.add_option("--q", q_text, "parameter q for builtin algebras");
  app.add_option("--field", field, "Q or Fp (p prime)");
  app.add_option("--horizon", cfg.horizon, "Ext and syzygy horizon")->check(CLI::PositiveNumber);
  app.add_option("--walk-horizon", walk_horizon, "steps per direction in explore")->check(CLI::PositiveNumber);
  app.add_option("--seed", cfg.seed, "seed for randomized searches");
  auto* format_opt = app.add_option("--format", cfg.format, "json, dot or text")->check(CLI::IsMember({"json", "dot", "text"}));
  app.add_option("--out", out_path, "write the report to a file");

  std::string path, alg_spec, mod_spec, op;
  auto* validate = app.add_subcommand("validate", "check an algebra file (quiver or table)");
  validate->add_option("path", path)->required();
  auto* compile = app.add_subcommand("compile", "print the multiplication table of an algebra");
  compile->add_option("algebra", alg_spec)->required();
  auto* comp = app.add_subcommand("compute", "run one operation on a module");
  comp->add_option("algebra", alg_spec)->required();
  comp->add_option("module", mod_spec)->required();
  comp->add_option("op", op)->required();
  bool dot = false;
  auto* explore = app.add_subcommand("explore", "walk the Omega-mho component of a module");
  explore->add_option("algebra", alg_spec)->required();
  explore->add_option("module", mod_spec)->required();
  explore->add_flag("--dot", dot, "same as --format dot");
  auto* verify = app.add_subcommand("verify-paper", "run the reproduction suite");

  std::vector<std::string> argv(args.rbegin(), args.rend());
  try {
    app.parse(argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return Ok;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return UsageError;
  }

  try {
    cfg.field = Field::parse(field);
    if (!q_text.empty()) cfg.q = parse_rational(q_text);
    if (walk_horizon) cfg.walk_horizon = *walk_horizon;
    if (dot) cfg.format = "dot";

    if (*validate) {
      json j;
      j["path"] = path;
      std::string text = read_file(path);
      std::vector<std::string> problems;
      std::optional<Algebra> raw;
      if (ends_with(path, ".quiver")) {
        BuildOptions opts;
        opts.field = cfg.field;
        QuiverPresentation p = parse_quiver(text);
        if (cfg.q && p.params.count("q")) opts.overrides["q"] = *cfg.q;
        raw = *build_path_algebra(p, opts).algebra;
        j["kind"] = "quiver";
      } else {
        raw = parse_algebra_table(text);
        j["kind"] = "table";
      }
      problems = validate_algebra(*raw);
      j["name"] = raw->name();
      j["field"] = raw->field().to_string();
      j["dim"] = raw->dim();
      j["vertices"] = raw->vertex_count();
      if (problems.empty()) j["local"] = is_local(*finalize(*raw));
      j["valid"] = problems.empty();
      j["problems"] = problems;
      write_output(emit(j, cfg.format), out_path, out);
      return problems.empty() ? Ok : CheckFailed;
    }
    if (*compile) {
      LoadedAlgebra alg = load_algebra(alg_spec, cfg);
      write_output(write_algebra_table(*alg.algebra), out_path, out);
      return Ok;
    }
    if (*comp) {
      LoadedAlgebra alg = load_algebra(alg_spec, cfg);
      Module m = build_module(alg, mod_spec);
      write_output(compute(alg, m, op, cfg), out_path, out);
      return Ok;
    }
    if (*explore) {
      LoadedAlgebra alg = load_algebra(alg_spec, cfg);
      Module m = build_module(alg, mod_spec);
      WalkOptions wo;
      wo.horizon = cfg.walk_horizon;
      wo.ext_horizon = cfg.horizon;
      wo.search = search_of(cfg);
      wo.namer = make_namer(alg);
      ComponentReport rep = walk_component(m, wo);
      write_output(render_report(rep, cfg.format), out_path, out);
      return Ok;
    }
    if (*verify) {
      SuiteConfig sc;
      sc.q = cfg.q.value_or(2);
      sc.horizon = cfg.horizon;
      if (walk_horizon) sc.walk_horizon = *walk_horizon;
      sc.search = search_of(cfg);
      auto results = run_claim_suite(sc);
      std::string text;
      if (cfg.format == "json" && format_opt->count() > 0) {
        json j = json::array();
        for (const auto& r : results) {
          json c;
          c["index"] = r.index;
          c["id"] = r.id;
          c["title"] = r.title;
          c["pass"] = r.pass;
          c["summary"] = r.summary;
          c["failures"] = r.failures;
          j.push_back(c);
        }
        text = j.dump(2) + "\n";
      } else if (cfg.format == "text" || format_opt->count() == 0) {
        text = format_suite(results);
      } else {
        throw UsageFailure("verify-paper supports json and text");
      }
      write_output(text, out_path, out);
      bool all = std::all_of(results.begin(), results.end(), [](const ClaimResult& r) { return r.pass; });
      return all ? Ok : CheckFailed;
    }
  } catch (const UsageFailure& e) {
    err << "error: " << e.what() << "\n";
    return UsageError;
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return UsageError;
  } catch (const InvalidAlgebra& e) {
    err << "invalid algebra: " << e.what() << "\n";
    return CheckFailed;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return UsageError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return UsageError;
  }
  return UsageError;
}

}  // namespace agemo::cli
