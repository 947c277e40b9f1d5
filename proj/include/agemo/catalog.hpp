#pragma once

#include "agemo/module.hpp"
#include "agemo/quiver.hpp"

#include <optional>
#include <string>

namespace agemo {

// Bundled quiver sources (identical to the files in the data directory).
const std::string& lambda_source();
const std::string& lambda_prime_source();
const std::string& lambda_dprime_source();
const std::string& lambda_tilde_source();

CompiledQuiver compile_lambda(const mpq_class& q, Field f = Field::rational());
CompiledQuiver compile_lambda_prime(const mpq_class& q, Field f = Field::rational());
CompiledQuiver compile_lambda_dprime(Field f = Field::rational());
CompiledQuiver compile_lambda_tilde(const mpq_class& q, Field f = Field::rational());

AlgebraPtr make_lambda(const mpq_class& q, Field f = Field::rational());
AlgebraPtr make_lambda_prime(const mpq_class& q, Field f = Field::rational());
AlgebraPtr make_lambda_dprime(Field f = Field::rational());
AlgebraPtr make_lambda_tilde(const mpq_class& q, Field f = Field::rational());

// Left module from a representation: basis vector k sits at vertex vertex_of[k];
// arrows[a] is the full matrix of arrow a (columns are images of basis vectors).
Module representation_module(const CompiledQuiver& c, const std::vector<std::size_t>& vertex_of,
                             const std::vector<Matrix>& arrows, std::string name = "");

std::string scalar_label(const Scalar& s);

// Basis v, v', v'' with xv = alpha v', yv = v', zv = v''.
Module make_M(const CompiledQuiver& lambda, const Scalar& alpha);
// Over the two-variable algebra: xv = alpha v', yv = v'; nullopt gives xv = v', yv = 0.
Module make_M_prime(const CompiledQuiver& lambda_prime, const std::optional<Scalar>& alpha);
// Over the two-vertex cover, with top at vertex 1 or 2.
Module make_M_i(const CompiledQuiver& lambda_tilde, std::size_t vertex, const Scalar& alpha);

// m_alpha = x - alpha y.
Vec m_element(const CompiledQuiver& lambda, const Scalar& alpha);
Submodule make_left_ideal_m(const CompiledQuiver& lambda, const Scalar& alpha);
Submodule make_right_ideal_m(const CompiledQuiver& lambda, const Scalar& alpha);
// U_alpha = span{m_alpha, yx, zx} as a left ideal.
Submodule make_U(const CompiledQuiver& lambda, const Scalar& alpha);
// Generated by an element written as a path combination, e.g. "z".
Submodule make_left_ideal(const CompiledQuiver& c, const Vec& element, std::string name);

// "q^k" when alpha is a power of q (smallest |k|, nonnegative first), else alpha itself.
std::string power_label(const Scalar& alpha, const mpq_class& q);
// Names M(alpha) and m(alpha) right ideals by canonical labels such as "M(q^3)".
std::optional<std::string> lambda_label(const CompiledQuiver& lambda, const mpq_class& q, const Module& m);

}  // namespace agemo
