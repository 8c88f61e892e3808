#pragma once

#include <string>

#include "homalg/hom_algebra.hpp"

namespace homalg {

/// Serializes an algebra to the on-disk JSON format (rationals as "p/q"
/// strings, alpha and conjugation as dense row-major matrices).
std::string algebra_to_json(const HomAlgebra& h);
void save_algebra(const HomAlgebra& h, const std::string& path);

/// Exact inverse of save_algebra. Rejects malformed rationals, out-of-range
/// indices and unknown fields, naming the offending location.
HomAlgebra algebra_from_json(const std::string& text);
HomAlgebra load_algebra(const std::string& path);

}  // namespace homalg
