#pragma once

#include "agemo/algebra.hpp"

#include <string>
#include <string_view>

namespace agemo {

// Table format, one directive per line, '#' starts a comment:
//   algebra NAME
//   field Q | Fp
//   basis L1 ... Ln
//   unit c1 ... cn
//   mul Li Lj = c1 ... cn        (omitted products are zero)
//   idempotents Li Lj ...        (basis elements)  or  idempotent c1 ... cn
//   radical Li ...               (basis elements)  or  radical_vector c1 ... cn
// The result is not validated; pass it to finalize() or validate_algebra().
Algebra parse_algebra_table(std::string_view text);

std::string write_algebra_table(const Algebra& a);

}  // namespace agemo
