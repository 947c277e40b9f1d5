#pragma once

#include "agemo/syzygy.hpp"

#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace agemo {

using Namer = std::function<std::optional<std::string>(const Module&)>;

// Dimension plus a hash of the action matrices.
std::string fallback_name(const Module& m);

struct WalkOptions {
  std::size_t horizon = 12;      // steps in each direction
  std::size_t ext_horizon = 20;  // for the semi-GP flag
  SearchOptions search;
  ExtOptions ext;
  Namer namer;
  bool check_round_trips = true;
};

struct Step {
  enum Kind { Moved, Blocked, Unknown } kind = Blocked;
  std::optional<Module> module;
  std::string reason;
};

// Arrow M -> Omega M, present iff Ext^1(M, A) = 0.
Step step_forward(const Module& m, const WalkOptions& opts = {});
// Arrow mho M -> M, present iff M is torsionless.
Step step_backward(const Module& m, const WalkOptions& opts = {});

struct ComponentVertex {
  std::string name;
  std::size_t dim = 0;
  bool torsionless = false, reflexive = false, semi_gp_horizon = false, projective_halt = false;

  bool operator==(const ComponentVertex&) const = default;
};

struct ComponentReport {
  std::string shape;  // A_n, Atilde_n, open-left, open-right, open-both
  std::size_t horizon = 0;
  bool closed = false;
  // Ordered Omega^h M, ..., M, ..., mho^h M; arrows run from mho X to X.
  std::vector<ComponentVertex> vertices;
  std::vector<std::pair<std::size_t, std::size_t>> arrows;
  std::vector<std::string> halts;

  bool operator==(const ComponentReport&) const = default;
};

ComponentReport walk_component(const Module& m, const WalkOptions& opts = {});

std::string render_json(const ComponentReport& r);
std::string render_dot(const ComponentReport& r);
std::string render_text(const ComponentReport& r);
// format: json, dot or text.
std::string render_report(const ComponentReport& r, const std::string& format);
ComponentReport parse_report_json(const std::string& text);

}  // namespace agemo
