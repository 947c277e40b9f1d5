#include "agemo/explorer.hpp"

#include <json.hpp>

#include <deque>
#include <sstream>
#include <stdexcept>

namespace agemo {

std::string fallback_name(const Module& m) {
  std::string canon = to_string(m.side());
  for (const auto& a : m.actions()) canon += "|" + a.to_string();
  std::ostringstream os;
  os << "X" << m.dim() << "#" << std::hex << (std::hash<std::string>{}(canon) & 0xffffffffu);
  return os.str();
}

namespace {

bool is_projective(const Module& m) { return m.dim() > 0 && syzygy(m).dim() == 0; }

}  // namespace

Step step_forward(const Module& m, const WalkOptions& opts) {
  ExtOptions eo = opts.ext;
  eo.stop_at_first_nonzero = false;
  ExtProfile e = ext_profile(m, 1, eo);
  if (e.at(1).nonzero()) return {Step::Blocked, std::nullopt, "Ext^1(M, A) != 0"};
  if (!e.at(1).exact) return {Step::Unknown, std::nullopt, "Ext^1(M, A) undecided"};
  Module next = syzygy(m);
  if (opts.check_round_trips && next.dim() > 0) {
    IsoVerdict v = is_isomorphic(cosyzygy(next), m, opts.search);
    if (v.kind == IsoVerdict::NotIsomorphic) throw std::logic_error("mho Omega M is not isomorphic to M");
  }
  return {Step::Moved, next, ""};
}

Step step_backward(const Module& m, const WalkOptions& opts) {
  if (!is_torsionless(m)) return {Step::Blocked, std::nullopt, "M is not torsionless"};
  Module next = cosyzygy(m);
  if (opts.check_round_trips && next.dim() > 0) {
    IsoVerdict v = is_isomorphic(syzygy(next), m, opts.search);
    if (v.kind == IsoVerdict::NotIsomorphic) throw std::logic_error("Omega mho M is not isomorphic to M");
  }
  return {Step::Moved, next, ""};
}

ComponentReport walk_component(const Module& m, const WalkOptions& opts) {
  if (m.dim() == 0) throw std::invalid_argument("cannot walk from the zero module");
  if (is_projective(m)) throw std::invalid_argument("cannot walk from a projective module");
  ComponentReport r;
  r.horizon = opts.horizon;
  auto name_of = [&](const Module& x) {
    if (opts.namer)
      if (auto n = opts.namer(x)) return *n;
    return fallback_name(x);
  };
  IndecVerdict start = is_indecomposable(m, opts.search);
  if (start.kind == IndecVerdict::Decomposes) throw std::invalid_argument("module is decomposable");
  if (start.kind == IndecVerdict::Unknown) {
    r.shape = "unknown";
    r.halts.push_back("indecomposability unknown at " + name_of(m));
  }

  std::deque<Module> chain{m};  // Omega side at the front
  std::vector<bool> projective_halt{false};
  std::size_t seed = 0;
  std::pair<std::size_t, std::size_t> closing{0, 0};
  bool left_closed = false, right_closed = false, cycle = false, unknown = !r.halts.empty();

  auto admit = [&](const Module& next, const std::string& step) -> int {
    IndecVerdict iv = is_indecomposable(next, opts.search);
    if (iv.kind != IndecVerdict::Indecomposable) {
      r.halts.push_back((iv.kind == IndecVerdict::Unknown ? "indecomposability unknown at " : "decomposable module at ") +
                        step);
      unknown = true;
      return -1;
    }
    for (const auto& seen : chain) {
      IsoVerdict v = is_isomorphic(next, seen, opts.search);
      if (v.kind == IsoVerdict::Isomorphic) return 1;
      if (v.kind == IsoVerdict::Unknown) {
        r.halts.push_back("isomorphism unknown at " + step);
        unknown = true;
        return -1;
      }
    }
    return 0;
  };

  Module cur = m;
  for (std::size_t s = 1; s <= opts.horizon && !unknown; ++s) {
    Step st = step_forward(cur, opts);
    std::string where = "Omega^" + std::to_string(s) + " M";
    if (st.kind == Step::Blocked) {
      left_closed = true;
      r.halts.push_back("sink " + name_of(cur) + ": " + st.reason);
      break;
    }
    if (st.kind == Step::Unknown) {
      unknown = true;
      r.halts.push_back(st.reason + " at " + name_of(cur));
      break;
    }
    if (st.module->dim() == 0 || is_projective(*st.module)) {
      left_closed = true;
      projective_halt[0] = true;
      r.halts.push_back("projective reached at " + where);
      break;
    }
    int a = admit(*st.module, where);
    if (a < 0) break;
    if (a > 0) {
      cycle = true;
      r.halts.push_back("cycle closed: " + where + " is isomorphic to M");
      closing = {0, chain.size() - 1};
      break;
    }
    chain.push_front(*st.module);
    projective_halt.insert(projective_halt.begin(), false);
    ++seed;
    cur = *st.module;
    if (s == opts.horizon) r.halts.push_back("horizon reached in the Omega direction");
  }

  cur = m;
  for (std::size_t s = 1; s <= opts.horizon && !unknown && !cycle; ++s) {
    Step st = step_backward(cur, opts);
    std::string where = "mho^" + std::to_string(s) + " M";
    if (st.kind == Step::Blocked) {
      right_closed = true;
      r.halts.push_back("source " + name_of(cur) + ": " + st.reason);
      break;
    }
    if (st.module->dim() == 0 || is_projective(*st.module)) {
      right_closed = true;
      projective_halt.back() = true;
      r.halts.push_back("projective reached at " + where);
      break;
    }
    int a = admit(*st.module, where);
    if (a < 0) break;
    if (a > 0) {
      cycle = true;
      r.halts.push_back("cycle closed: " + where + " is isomorphic to an earlier vertex");
      closing = {seed, chain.size() - 1};
      break;
    }
    chain.push_back(*st.module);
    projective_halt.push_back(false);
    cur = *st.module;
    if (s == opts.horizon) r.halts.push_back("horizon reached in the mho direction");
  }

  ExtOptions eo = opts.ext;
  eo.stop_at_first_nonzero = true;
  for (std::size_t i = 0; i < chain.size(); ++i) {
    const Module& x = chain[i];
    ComponentVertex v;
    v.name = name_of(x);
    v.dim = x.dim();
    v.torsionless = is_torsionless(x);
    v.reflexive = is_reflexive(x);
    v.semi_gp_horizon = ext_profile(x, opts.ext_horizon, eo).all_zero();
    v.projective_halt = projective_halt[i];
    r.vertices.push_back(std::move(v));
  }
  for (std::size_t i = 0; i + 1 < chain.size(); ++i) r.arrows.emplace_back(i + 1, i);
  if (cycle) r.arrows.push_back(closing);

  if (unknown) {
    r.shape = "unknown";
  } else if (cycle) {
    r.shape = "Atilde_" + std::to_string(chain.size() - 1);
    r.closed = true;
  } else if (left_closed && right_closed) {
    r.shape = "A_" + std::to_string(chain.size());
    r.closed = true;
  } else if (right_closed) {
    r.shape = "open-left";
  } else if (left_closed) {
    r.shape = "open-right";
  } else {
    r.shape = "open-both";
  }
  return r;
}

std::string render_json(const ComponentReport& r) {
  nlohmann::ordered_json j;
  j["shape"] = r.shape;
  j["horizon"] = r.horizon;
  j["closed"] = r.closed;
  j["vertices"] = nlohmann::ordered_json::array();
  for (const auto& v : r.vertices)
    j["vertices"].push_back({{"name", v.name},
                             {"dim", v.dim},
                             {"torsionless", v.torsionless},
                             {"reflexive", v.reflexive},
                             {"semi_gp_horizon", v.semi_gp_horizon},
                             {"projective_halt", v.projective_halt}});
  j["arrows"] = nlohmann::ordered_json::array();
  for (const auto& [a, b] : r.arrows) j["arrows"].push_back({a, b});
  j["halts"] = r.halts;
  return j.dump(2) + "\n";
}

namespace {

std::string dot_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out;
}

}  // namespace

std::string render_dot(const ComponentReport& r) {
  std::ostringstream os;
  os << "digraph omho {\n";
  os << "  label=\"" << dot_escape(r.shape) << " (horizon " << r.horizon << ")\";\n";
  os << "  rankdir=LR;\n";
  for (std::size_t i = 0; i < r.vertices.size(); ++i)
    os << "  n" << i << " [label=\"" << dot_escape(r.vertices[i].name) << "\"];\n";
  for (const auto& [a, b] : r.arrows) os << "  n" << a << " -> n" << b << ";\n";
  os << "}\n";
  return os.str();
}

std::string render_text(const ComponentReport& r) {
  std::ostringstream os;
  os << "shape " << r.shape << (r.closed ? " (closed)" : "") << ", horizon " << r.horizon << "\n";
  auto flag = [](bool b) { return b ? "yes" : "no"; };
  for (std::size_t i = 0; i < r.vertices.size(); ++i) {
    const auto& v = r.vertices[i];
    os << "  [" << i << "] " << v.name << "  dim " << v.dim << "  torsionless " << flag(v.torsionless)
       << "  reflexive " << flag(v.reflexive) << "  semi-GP " << flag(v.semi_gp_horizon)
       << (v.projective_halt ? "  projective-halt" : "") << "\n";
  }
  for (const auto& [a, b] : r.arrows) os << "  " << a << " -> " << b << "\n";
  for (const auto& h : r.halts) os << "  halt: " << h << "\n";
  return os.str();
}

std::string render_report(const ComponentReport& r, const std::string& format) {
  if (format == "json") return render_json(r);
  if (format == "dot") return render_dot(r);
  if (format == "text") return render_text(r);
  throw std::invalid_argument("unknown format '" + format + "'");
}

ComponentReport parse_report_json(const std::string& text) {
  auto j = nlohmann::json::parse(text);
  ComponentReport r;
  r.shape = j.at("shape").get<std::string>();
  r.horizon = j.at("horizon").get<std::size_t>();
  r.closed = j.at("closed").get<bool>();
  for (const auto& v : j.at("vertices"))
    r.vertices.push_back({v.at("name").get<std::string>(), v.at("dim").get<std::size_t>(),
                          v.at("torsionless").get<bool>(), v.at("reflexive").get<bool>(),
                          v.at("semi_gp_horizon").get<bool>(), v.at("projective_halt").get<bool>()});
  for (const auto& a : j.at("arrows")) r.arrows.emplace_back(a.at(0).get<std::size_t>(), a.at(1).get<std::size_t>());
  r.halts = j.at("halts").get<std::vector<std::string>>();
  return r;
}

}  // namespace agemo
