#pragma once

#include "agemo/algebra.hpp"

#include <map>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace agemo {

struct ParseError : std::runtime_error {
  ParseError(const std::string& msg, std::size_t line, std::size_t column);
  std::size_t line, column;
};

struct DimensionBlowup : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Arrow {
  std::string label;
  std::size_t source, target;
};

// Coefficient: rational constant times a product of parameter powers.
struct Coefficient {
  mpq_class constant{1};
  std::vector<std::pair<std::string, long>> powers;
};

struct RelationTerm {
  Coefficient coeff;
  // Arrow indices in application order: path[0] is applied first.
  std::vector<std::size_t> path;
};

struct Relation {
  std::vector<RelationTerm> terms;
  std::size_t source = 0, target = 0;
  std::size_t line = 0, column = 0;
  std::string text;
};

struct QuiverPresentation {
  std::string name = "quiver";
  Field field = Field::rational();
  std::vector<std::string> vertices;
  std::vector<Arrow> arrows;
  std::vector<Relation> relations;
  // Declared parameters; unbound ones map to nullopt.
  std::map<std::string, std::optional<mpq_class>> params;
  std::vector<std::string> param_order;

  std::optional<std::size_t> arrow_index(std::string_view label) const;
  std::optional<std::size_t> vertex_index(std::string_view label) const;
};

QuiverPresentation parse_quiver(std::string_view text);

struct PathBasis {
  // Each basis path as (vertex, arrows in application order); trivial paths have no arrows.
  struct Path {
    std::size_t source, target;
    std::vector<std::size_t> arrows;
  };
  std::vector<Path> paths;
  std::vector<std::string> labels;
  // First length at which every path of that length lies in the truncated ideal.
  std::size_t stable_length = 0;
};

struct CompiledQuiver {
  QuiverPresentation presentation;
  AlgebraPtr algebra;
  PathBasis basis;
  // Normal forms of all paths shorter than the stable length.
  std::map<std::vector<std::size_t>, Vec> normal_forms;
  std::vector<Vec> trivial_forms;
};

struct BuildOptions {
  std::size_t max_length = 12;
  std::size_t max_paths = 20000;
  std::map<std::string, mpq_class> overrides;
  std::optional<Field> field;
};

CompiledQuiver build_path_algebra(const QuiverPresentation& p, const BuildOptions& opts = {});

// Coordinates of a path given by arrow indices in application order.
Vec path_normal_form(const CompiledQuiver& c, std::span<const std::size_t> path);
// Path written as in the source grammar, e.g. "x*y" (y first) or "" with a vertex for trivial paths.
Vec path_normal_form(const CompiledQuiver& c, std::string_view written, std::size_t vertex = 0);

Scalar evaluate(const Coefficient& c, const std::map<std::string, mpq_class>& bindings, Field f);

}  // namespace agemo
