#pragma once

#include "agemo/algebra.hpp"

#include <cstdint>
#include <memory>
#include <optional>
#include <random>
#include <string>
#include <vector>

namespace agemo {

// A left or right module given by one action matrix per algebra basis element.
// For right modules the matrix of b is v -> v.b, so action(b_i b_j) = action(b_j) action(b_i).
// Copies share the underlying data.
class Module {
public:
  Module() = default;
  Module(AlgebraPtr a, Side side, std::vector<Matrix> actions, std::string name = "");

  const AlgebraPtr& algebra() const { return d_->algebra; }
  Side side() const { return d_->side; }
  std::size_t dim() const { return d_->dim; }
  Field field() const { return d_->algebra->field(); }
  const Matrix& action(std::size_t i) const { return d_->actions[i]; }
  const std::vector<Matrix>& actions() const { return d_->actions; }
  Matrix action_of(std::span<const Scalar> a) const;
  const std::string& name() const { return d_->name; }
  Module renamed(std::string name) const;
  bool valid_handle() const { return d_ != nullptr; }

private:
  struct Data {
    AlgebraPtr algebra;
    Side side;
    std::size_t dim;
    std::vector<Matrix> actions;
    std::string name;
  };
  std::shared_ptr<const Data> d_;
};

struct ModuleMap {
  Module domain, codomain;
  Matrix matrix;  // codomain.dim() x domain.dim()
};

struct SideMismatch : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

std::vector<std::string> validate_module(const Module& m);
bool is_intertwining(const ModuleMap& f);
ModuleMap compose(const ModuleMap& g, const ModuleMap& f);
ModuleMap identity_map(const Module& m);

Module regular_module(const AlgebraPtr& a, Side side);
Module zero_module(const AlgebraPtr& a, Side side);
Module simple_module(const AlgebraPtr& a, Side side, std::size_t vertex);

// A e_j for left modules, e_j A for right modules, with its inclusion into the regular module.
struct IndecomposableProjective {
  std::size_t vertex;
  Module module;
  Matrix inclusion;  // columns: basis of A e_j (or e_j A) in algebra coordinates
};
IndecomposableProjective projective_indecomposable(const AlgebraPtr& a, Side side, std::size_t vertex);

struct ProjectiveDecomposition {
  std::vector<IndecomposableProjective> left, right;
};
ProjectiveDecomposition projective_indecomposables(const AlgebraPtr& a);

std::vector<ModuleMap> hom_basis(const Module& m, const Module& n);
std::size_t hom_dim(const Module& m, const Module& n);

struct DualModule {
  Module module;
  // basis[k] is the algebra.dim() x m.dim() matrix of the k-th map M -> A.
  std::vector<Matrix> basis;
};
DualModule dual_with_basis(const Module& m);
Module dual(const Module& m);
// phi_M : M -> M**.
ModuleMap eval_map(const Module& m);

struct Submodule {
  Module module;
  ModuleMap map;  // inclusion (for submodules) or projection (for quotients)
};

// Restriction to an invariant subspace spanned by the columns of `basis` (independent).
Submodule restrict_to(const Module& m, const Matrix& basis);
// Quotient by an invariant subspace; basis chosen among standard vectors.
Submodule quotient_by(const Module& m, const Matrix& subspace);

Submodule kernel_module(const ModuleMap& f);
Submodule image_module(const ModuleMap& f);
Submodule cokernel_module(const ModuleMap& f);

struct DirectSum {
  Module module;
  std::vector<ModuleMap> injections, projections;
};
DirectSum direct_sum(const std::vector<Module>& ms);

Submodule submodule_generated(const Module& m, const std::vector<Vec>& vectors);
Submodule radical_of_module(const Module& m);
Submodule top(const Module& m);
Matrix socle_basis(const Module& m);

// M = rest + simple summands; each simple is spanned by one vector of the socle.
struct SimpleSplit {
  Submodule rest;
  std::vector<std::size_t> simple_vertices;
};
SimpleSplit split_simple_summands(const Module& m);

struct SearchOptions {
  std::uint64_t seed = 0xA19EB7A;
  std::size_t attempts = 32;
  std::size_t grid_budget = 4096;
};

struct IsoVerdict {
  enum Kind { Isomorphic, NotIsomorphic, Unknown } kind = Unknown;
  std::optional<ModuleMap> witness;
  std::string reason;
  std::size_t attempts = 0;
};
IsoVerdict is_isomorphic(const Module& m, const Module& n, const SearchOptions& opts = {});

struct IndecVerdict {
  enum Kind { Indecomposable, Decomposes, Unknown } kind = Unknown;
  std::optional<Submodule> first, second;
  std::size_t end_dim = 0, end_radical_dim = 0;
};
IndecVerdict is_indecomposable(const Module& m, const SearchOptions& opts = {});

// Radical of a subalgebra of matrices acting on a space of dimension `degree` (trace form).
Matrix endomorphism_radical(const std::vector<Matrix>& basis, Field f);

// Rational (or prime-field) roots of a polynomial given low-to-high.
std::vector<Scalar> polynomial_roots(const std::vector<Scalar>& poly);

// Deterministic small integers for randomized searches.
class SmallRandom {
public:
  explicit SmallRandom(std::uint64_t seed);
  long next(long lo, long hi);

private:
  std::mt19937_64 engine_;
};

}  // namespace agemo
