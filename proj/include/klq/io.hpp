#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "klq/moment_graph.hpp"
#include "klq/sections.hpp"

namespace klq {

// "(1,0,1)"
std::string root_coords_str(const Root& r);

// Graphviz rendering of an interval graph: vertices labelled by reduced
// word, edge labels are root coordinates, Hasse edges solid, long edges
// dashed, witness edges red. Node and edge order follow the graph's
// deterministic indexing.
void write_dot(std::ostream& os, const IntervalGraph& g, const EdgeSet* witness = nullptr);

// JSON text of the graph (vertices, labelled edges, optional witness)
std::string graph_json(const IntervalGraph& g, const EdgeSet* witness = nullptr);

// JSON text of a solution basis of V_{x,y} (per-vertex rational vectors)
std::string basis_json(const IntervalGraph& g, const std::vector<Section>& basis);

} // namespace klq
