#pragma once

#include <string>

#include "surf/intersection.hpp"

namespace surf {

/// Renders the m x n component grid as a standalone SVG: lattice dots,
/// diagonal segments for runs (up-right parallel, down-right antiparallel),
/// filled dots for isolated points; components of nonzero index are colored
/// and labeled with their index.
std::string render_grid_svg(const std::vector<IndexedComponent>& components, std::size_t m,
                            std::size_t n);

/// Writes render_grid_svg output to path; throws std::runtime_error if the
/// file cannot be written.
void emit_grid_svg(const std::vector<IndexedComponent>& components, std::size_t m, std::size_t n,
                   const std::string& path);

}  // namespace surf
