#pragma once

#include <optional>
#include <string>

#include "ryd/shapes.hpp"

namespace ryd {

// ASCII picture of Lambda_{G/P}: '#' used root, '.' open root, '*'/'o' the same for short
// (fake-short for OGeven) roots, '@'/'+' for the adjoint root.
std::string render_lambda(const Family& f, const std::optional<Shape>& overlay = std::nullopt);

}  // namespace ryd
