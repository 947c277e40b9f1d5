#pragma once

#include "agemo/module.hpp"

#include <optional>
#include <string>
#include <vector>

namespace agemo {

// Explicit direct sum of indecomposable projectives A e_j (left) or e_j A (right).
struct ProjectiveSum {
  AlgebraPtr algebra;
  Side side = Side::Left;
  std::vector<std::size_t> vertices;
  Module module;
  std::vector<std::size_t> offsets;
  std::vector<Matrix> inclusions;  // summand basis in algebra coordinates

  std::size_t dim() const { return module.dim(); }
  // Component k of v as an algebra element.
  Vec component(const Vec& v, std::size_t k) const;
};
ProjectiveSum projective_sum(const AlgebraPtr& a, Side side, std::vector<std::size_t> vertices);
// Same vertices on the other side: Hom(A e_j, A) = e_j A.
ProjectiveSum dual_projective_sum(const ProjectiveSum& p);

struct ProjectiveCover {
  ProjectiveSum projective;
  std::vector<Vec> generators;  // image of the k-th summand's idempotent
  ModuleMap map;
};
ProjectiveCover projective_cover(const Module& m);

struct ProjectivePresentation {
  ProjectiveCover cover0;
  Submodule syzygy;  // inside P0
  ProjectiveCover cover1;
  ModuleMap d1;  // P1 -> P0
};
ProjectivePresentation minimal_presentation(const Module& m);

Submodule syzygy_submodule(const Module& m);
Module syzygy(const Module& m);
Module syzygy_power(const Module& m, std::size_t t);

// Dual of the map source -> target sending the k-th generator of source to images[k].
ModuleMap dualize(const ProjectiveSum& source, const ProjectiveSum& target, const std::vector<Vec>& images);

Module transpose(const Module& m);
Module cosyzygy(const Module& m);
Module cosyzygy_power(const Module& m, std::size_t t);

struct LeftApproximation {
  ModuleMap map;  // M -> P
  ProjectiveSum target;
  Submodule cokernel;
};
LeftApproximation minimal_left_approximation(const Module& m);

// dim Hom(M, A) from the cover of M and its syzygy.
std::size_t dual_dim(const Module& m);

struct ExtEntry {
  std::size_t value = 0;
  bool exact = true;  // otherwise value is a lower bound

  ExtEntry& operator+=(const ExtEntry& o) {
    value += o.value;
    exact = exact && o.exact;
    return *this;
  }
  bool zero() const { return exact && value == 0; }
  bool nonzero() const { return value > 0; }
  std::string to_string() const;
};

struct ExtOptions {
  // Syzygies larger than this are not resolved further.
  std::size_t budget = 64;
  bool stop_at_first_nonzero = false;
};

struct ExtProfile {
  std::size_t horizon = 0;
  std::vector<ExtEntry> dims;  // dims[i-1] is Ext^i(M, A); shorter than horizon after an early stop
  std::vector<std::string> notes;

  const ExtEntry& at(std::size_t i) const { return dims.at(i - 1); }
  std::optional<std::size_t> first_nonzero() const;
  bool all_zero() const;
};
ExtProfile ext_profile(const Module& m, std::size_t horizon, const ExtOptions& opts = {});

std::size_t torsion_dim(const Module& m);  // dim K M = dim Ker phi_M
bool is_torsionless(const Module& m);
bool is_reflexive(const Module& m);

enum class Truth { Holds, Fails, Unknown };
std::string to_string(Truth t);

struct TRProfile {
  std::size_t horizon = 0;
  std::vector<Truth> positive, negative;  // index t-1 for (TR_t) and (TR_-t)
  ExtProfile ext, transpose_ext;
  Truth at(long i) const;
};
TRProfile tr_profile(const Module& m, std::size_t horizon, const ExtOptions& opts = {});

struct PeriodResult {
  std::optional<std::size_t> period;
  bool inconclusive = false;
  std::string note;
};
PeriodResult omega_period(const Module& m, std::size_t horizon, const SearchOptions& opts = {},
                          std::size_t max_dim = 256);

struct GPVerdict {
  enum Kind { GPExact, GPUpToHorizon, NotGP, Unknown } kind = Unknown;
  std::size_t period = 0;
  std::string witness;
  std::size_t witness_index = 0;
  std::size_t horizon = 0;
};
std::string to_string(GPVerdict::Kind k);
GPVerdict certify_gp(const Module& m, std::size_t horizon, const ExtOptions& opts = {});

enum class Certification { Exact, UpToHorizon, Refuted, Unknown };
std::string to_string(Certification c);

struct GCondition {
  bool holds = false;
  Certification level = Certification::Unknown;
  std::size_t index = 0;  // least failing index when refuted
  std::size_t horizon = 0;
};
struct GStatus {
  GCondition g1, g2, g3;
};
GStatus g_status(const Module& m, std::size_t horizon, const ExtOptions& opts = {});

}  // namespace agemo
