#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "klq/bruhat.hpp"
#include "klq/coxeter.hpp"

namespace klq {

// Fixed-width bit vector over the edge indices of one IntervalGraph.
class EdgeSet {
public:
    EdgeSet() = default;
    explicit EdgeSet(int n) : n_(n), w_((static_cast<size_t>(n) + 63) / 64, 0) {}

    int universe_size() const { return n_; }
    bool test(int i) const { return (w_[static_cast<size_t>(i) / 64] >> (i % 64)) & 1ull; }
    void set(int i) { w_[static_cast<size_t>(i) / 64] |= 1ull << (i % 64); }
    void reset(int i) { w_[static_cast<size_t>(i) / 64] &= ~(1ull << (i % 64)); }
    int count() const {
        int c = 0;
        for (uint64_t x : w_) c += __builtin_popcountll(x);
        return c;
    }
    bool subset_of(const EdgeSet& o) const {
        for (size_t i = 0; i < w_.size(); ++i)
            if (w_[i] & ~o.w_[i]) return false;
        return true;
    }
    EdgeSet& operator|=(const EdgeSet& o) {
        for (size_t i = 0; i < w_.size(); ++i) w_[i] |= o.w_[i];
        return *this;
    }
    friend bool operator==(const EdgeSet& a, const EdgeSet& b) {
        return a.n_ == b.n_ && a.w_ == b.w_;
    }
    friend bool operator!=(const EdgeSet& a, const EdgeSet& b) { return !(a == b); }

    std::vector<int> to_indices() const {
        std::vector<int> out;
        for (int i = 0; i < n_; ++i)
            if (test(i)) out.push_back(i);
        return out;
    }
    static EdgeSet of(int n, const std::vector<int>& indices) {
        EdgeSet s(n);
        for (int i : indices) s.set(i);
        return s;
    }
    static EdgeSet full(int n) {
        EdgeSet s(n);
        for (int i = 0; i < n; ++i) s.set(i);
        return s;
    }

private:
    int n_ = 0;
    std::vector<uint64_t> w_;
};

// Labelled undirected moment graph of a Bruhat interval: an edge joins z
// and w whenever z^{-1}w is a reflection, labelled by its positive root.
// Long edges (length gap > 1) are included. Vertices are sorted by
// (length, matrix key) and edges by (min endpoint, max endpoint), so all
// indices are stable across runs.
struct IntervalGraph {
    const CoxeterSystem* sys = nullptr;
    Element x, y;

    struct Edge {
        int u, v;     // vertex indices, u < v (so length(u) < length(v))
        int root;     // positive-root index of the reflection u^{-1}v
        bool hasse;   // length gap exactly 1
    };

    std::vector<Element> vertices;
    std::vector<int> vertex_length;
    std::vector<Edge> edges;
    std::vector<std::vector<int>> incident; // vertex -> incident edge indices

    int num_vertices() const { return static_cast<int>(vertices.size()); }
    int num_edges() const { return static_cast<int>(edges.size()); }
    // -1 when (u,v) is not an edge
    int edge_index(int u, int v) const {
        auto it = edge_lookup.find(key(u, v));
        return it == edge_lookup.end() ? -1 : it->second;
    }
    int hasse_count() const {
        int c = 0;
        for (const Edge& e : edges) c += e.hasse;
        return c;
    }

    std::unordered_map<uint64_t, int> edge_lookup;
    static uint64_t key(int u, int v) {
        if (u > v) std::swap(u, v);
        return (static_cast<uint64_t>(static_cast<uint32_t>(u)) << 32) | static_cast<uint32_t>(v);
    }
};

IntervalGraph build_interval_graph(const CoxeterSystem& sys, Bruhat& order, const Element& x,
                                   const Element& y);

// A 4-cycle on four distinct vertices. verts[i] and verts[i+1 mod 4] are
// joined by edges[i]; adjacent edges of the cycle share a vertex.
struct Diamond {
    std::array<int, 4> verts;
    std::array<int, 4> edges;
};

// Every 4-cycle with 4 distinct vertices, reported once in a canonical
// order (diagonal pairs sorted). Diamonds through long edges included.
std::vector<Diamond> enumerate_diamonds(const IntervalGraph& g);

// Diamond-closure engine: precomputes the diamond list and a per-edge
// index so the fixpoint only re-examines diamonds touching newly added
// edges.
class ClosureEngine {
public:
    explicit ClosureEngine(const IntervalGraph& g);

    const IntervalGraph& graph() const { return *g_; }
    const std::vector<Diamond>& diamonds() const { return diamonds_; }

    // smallest diamond-close superset: whenever two edges of a diamond
    // sharing a vertex are present, the remaining two are added
    EdgeSet closure(const EdgeSet& f) const;
    bool is_generating(const EdgeSet& f) const;

    // true iff (Hasse subset of closure(f)) implies closure(f) is everything
    bool check_shortedges(const EdgeSet& f) const;

    EdgeSet hasse_edges() const;
    EdgeSet full_edges() const { return EdgeSet::full(g_->num_edges()); }

private:
    const IntervalGraph* g_;
    std::vector<Diamond> diamonds_;
    std::vector<std::vector<int>> diamonds_by_edge_;
};

// Canonical upper-bound witnesses: each is verified to generate by the
// caller before use.
EdgeSet coatom_edge_set(const IntervalGraph& g);
EdgeSet atom_edge_set(const IntervalGraph& g);
// lexicographically first maximal chain from x to y
EdgeSet maximal_chain_edge_set(const IntervalGraph& g);

struct GMinOptions {
    // search starts at this size (the caller passes a proven lower bound;
    // 1 when nothing is known)
    int lower_bound = 1;
    // subsets examined before giving up with explicit bounds
    uint64_t budget = 10'000'000;
};

struct GMinResult {
    bool exact = false;       // minimum established within budget
    int g = -1;               // exact minimum when exact, otherwise -1
    std::optional<EdgeSet> witness;
    int lower = 1;            // best proven lower bound
    int upper = -1;           // best verified upper bound
    std::optional<EdgeSet> upper_witness;
    uint64_t subsets_tried = 0;
    bool hasse_witness = true; // witness found among Hasse edges
};

// Exact minimum size of a diamond-generating set, by k-subset search in
// lexicographic edge order, Hasse edges first with an all-edge fallback
// per size. Never returns a wrong number: when the budget runs out the
// result carries the bounds established so far.
GMinResult g_min(const ClosureEngine& engine, const GMinOptions& opts = {});

} // namespace klq
