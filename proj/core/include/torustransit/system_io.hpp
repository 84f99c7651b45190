#pragma once

#include <string>

#include "torustransit/skew_product.hpp"

namespace torustransit {

/// System description schema: {"n", "base": {"matrix", "translation"},
/// "coupling", "fiber_offset", "fiber": {"breakpoints", "lift_values"}}.
/// Rationals travel as "p/q" strings, never as floats; matrix and
/// coupling entries are JSON integers (strings accepted for big values).
std::string system_to_json_text(const SkewProductSystem& sys);

SkewProductSystem system_from_json_text(const std::string& text);

SkewProductSystem load_system_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& text);

}  // namespace torustransit
