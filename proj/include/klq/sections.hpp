#pragma once

#include <vector>

#include "klq/bigint.hpp"
#include "klq/linalg.hpp"
#include "klq/moment_graph.hpp"

namespace klq {

// Degree-2 section of the constant sheaf on an interval graph: one
// rational root-space vector per vertex, with v_y = 0 and v_z - v_{zt}
// proportional to the edge label along every edge.
struct Section {
    std::vector<std::vector<Rat>> v; // aligned with graph vertices
};

// Exact rational linear system whose solution space is V_{x,y}. The
// constraint v_y = 0 is imposed by deleting y's variables; the edge
// scalars lambda_e are determined by v (labels are nonzero), so the
// default system keeps only the v variables and encodes proportionality
// by annihilator rows. The lambda-inclusive form is kept for
// cross-checking the projection argument.
class SectionSystem {
public:
    // restrict_to_hasse drops long-edge constraints (used by the
    // invariant test that they are implied in simply-laced type)
    SectionSystem(const IntervalGraph& g, bool restrict_to_hasse = false);

    const IntervalGraph& graph() const { return *g_; }

    // dim V_{x,y}: number of v variables minus the exact rank of the
    // constraint matrix
    int dim() const;
    // same dimension from the lambda-inclusive system, built on demand;
    // cross-checks that forgetting the edge scalars loses nothing
    int dim_via_lambda_system() const;

    // deterministic basis of V_{x,y} (integer vectors, echelon order)
    std::vector<Section> basis() const;

private:
    const IntervalGraph* g_;
    bool hasse_only_;
    int rank_;
    int n_vvars_; // (|V| - 1) * rank
    std::vector<int> used_edges_;
    IntMat reduced_; // annihilator rows over v variables
};

// dim V_{x,y} for the full edge set
int dim_V(const IntervalGraph& g);

// the unique scalar with v_z - v_{zt} = lambda * alpha_t; throws when v
// does not solve the system along this edge
Rat edge_functional(const IntervalGraph& g, const Section& s, int edge);

// true iff v -> (lambda_e(v))_{e in F} is injective on V_{x,y}
bool check_injectivity(const IntervalGraph& g, const EdgeSet& f);

} // namespace klq
