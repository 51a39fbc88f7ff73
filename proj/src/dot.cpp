#include "rigidity/dot.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace rigidity {

std::string dot_id(const Dynkin& delta, const Vertex& v) {
  return std::to_string(v.x) + "_" + delta.label_token(v.t);
}

namespace {

std::string quoted(const std::string& s) { return "\"" + s + "\""; }

}  // namespace

std::string hammock_dot(const Dynkin& delta, const Hammock& h, Int x_min, Int x_max) {
  std::ostringstream out;
  out << "digraph hammock {\n  rankdir=LR;\n  node [shape=circle, fontsize=10];\n";
  for (Int x = x_min; x <= x_max; ++x) {
    for (Label t : delta.labels()) {
      const Vertex v{x, t};
      const int mult = h.multiplicity(v);
      out << "  " << quoted(dot_id(delta, v)) << " [label=" << quoted(vertex_string(delta, v));
      if (mult > 0) {
        out << ", style=filled, fillcolor=lightgray, xlabel=" << quoted(std::to_string(mult));
      }
      if (v == h.base()) out << ", peripheries=2";
      out << "];\n";
    }
  }
  for (Int x = x_min; x <= x_max; ++x) {
    for (Label t : delta.labels()) {
      const Vertex v{x, t};
      for (const Vertex& w : delta.successors(v)) {
        if (w.x < x_min || w.x > x_max) continue;
        out << "  " << quoted(dot_id(delta, v)) << " -> " << quoted(dot_id(delta, w)) << ";\n";
      }
    }
  }
  out << "}\n";
  return out.str();
}

std::string hammock_dot(const Dynkin& delta, const Hammock& h) {
  Int lo = h.base().x;
  Int hi = h.base().x;
  for (const Vertex& v : h.members()) {
    lo = std::min(lo, v.x);
    hi = std::max(hi, v.x);
  }
  return hammock_dot(delta, h, lo - 1, hi + 1);
}

std::string orbit_quiver_dot(const AlgebraType& atype, const Vertex* highlight) {
  const Dynkin& delta = atype.delta();
  std::set<Vertex> nodes;
  for (Int x = 0; x < atype.period(); ++x) {
    for (Label t : delta.labels()) nodes.insert(atype.canonical(Vertex{x, t}));
  }
  const Vertex marked = highlight ? atype.canonical(*highlight) : Vertex{};
  std::ostringstream out;
  out << "digraph orbit_quiver {\n  rankdir=LR;\n  node [shape=circle, fontsize=10];\n";
  for (const Vertex& v : nodes) {
    out << "  " << quoted(dot_id(delta, v)) << " [label=" << quoted(vertex_string(delta, v));
    if (highlight && v == marked) out << ", style=filled, fillcolor=lightgray";
    out << "];\n";
  }
  for (const Vertex& v : nodes) {
    for (const Vertex& w : delta.successors(v)) {
      out << "  " << quoted(dot_id(delta, v)) << " -> "
          << quoted(dot_id(delta, atype.canonical(w))) << ";\n";
    }
  }
  out << "}\n";
  return out.str();
}

}  // namespace rigidity
