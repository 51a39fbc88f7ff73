#pragma once

// Graphviz DOT rendering of ZΔ windows and of the orbit quiver ZΔ/G.

#include <string>

#include "rigidity/hammock.hpp"
#include "rigidity/quiver.hpp"

namespace rigidity {

/// DOT node id "x_t"; fork ends render as "p" and "m".
std::string dot_id(const Dynkin& delta, const Vertex& v);

/// The window x_min <= x <= x_max of ZΔ with the hammock members filled and
/// labelled by multiplicity, and the base drawn with a double border.
std::string hammock_dot(const Dynkin& delta, const Hammock& h, Int x_min, Int x_max);
/// Window spanning the hammock members.
std::string hammock_dot(const Dynkin& delta, const Hammock& h);

/// ZΔ/G drawn on the fundamental domain 0 <= x < period(), one node per
/// orbit and one arrow per mesh arrow; highlighted orbit optional.
std::string orbit_quiver_dot(const AlgebraType& atype, const Vertex* highlight = nullptr);

}  // namespace rigidity
