#pragma once

// Minimal deterministic SVG 1.1 line-chart renderer.  No external assets,
// fixed layout and palette, all coordinates formatted with fixed precision so
// identical input produces byte-identical output.

#include <string>

#include "csv.hpp"

namespace bcsreps::cli {

// Render column 0 as the x axis and every remaining column as one polyline.
// Throws DomainError when the curve has no rows or fewer than two columns,
// NumericError on NaN/Inf cells.
std::string to_svg(const CurveFile& curve, const std::string& title);

}  // namespace bcsreps::cli
