#ifndef TZETA_STUFFLE_HPP
#define TZETA_STUFFLE_HPP

#include <map>
#include <string>

#include "tzeta/index.hpp"

namespace tzeta {

/// Formal integer combination of indices.
using IndexCombination = std::map<Index, long>;

/// Quasi-shuffle product on indices:
/// (a,u) * (b,v) = a.(u * (b,v)) + b.((a,u) * v) + (a+b).(u * v).
/// Numerically zeta(a) zeta(b) = sum of coefficients * zeta(term) whenever
/// every term is admissible.
IndexCombination stuffle_product(const Index& a, const Index& b);

std::string combination_str(const IndexCombination& c);

}  // namespace tzeta

#endif
