#include "klq/moment_graph.hpp"

#include <algorithm>
#include <stdexcept>

namespace klq {

IntervalGraph build_interval_graph(const CoxeterSystem& sys, Bruhat& order, const Element& x,
                                   const Element& y) {
    if (!order.leq(x, y))
        throw std::invalid_argument("build_interval_graph requires x <= y in Bruhat order");

    IntervalGraph g;
    g.sys = &sys;
    g.x = x;
    g.y = y;
    g.vertices = order.interval(x, y);
    const int n = g.num_vertices();
    g.vertex_length.resize(static_cast<size_t>(n));
    std::vector<Element> inverses(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) {
        g.vertex_length[static_cast<size_t>(i)] = sys.length(g.vertices[static_cast<size_t>(i)]);
        inverses[static_cast<size_t>(i)] = sys.inverse(g.vertices[static_cast<size_t>(i)]);
    }

    // all reflection edges inside the interval, long edges included;
    // vertex order is by length, so u < v gives length(u) < length(v)
    g.incident.assign(static_cast<size_t>(n), {});
    for (int u = 0; u < n; ++u) {
        for (int v = u + 1; v < n; ++v) {
            const int t = sys.reflection_index(
                sys.multiply(inverses[static_cast<size_t>(u)], g.vertices[static_cast<size_t>(v)]));
            if (t < 0) continue;
            const int id = g.num_edges();
            g.edges.push_back({u, v, t,
                               g.vertex_length[static_cast<size_t>(v)] -
                                       g.vertex_length[static_cast<size_t>(u)] ==
                                   1});
            g.incident[static_cast<size_t>(u)].push_back(id);
            g.incident[static_cast<size_t>(v)].push_back(id);
            g.edge_lookup.emplace(IntervalGraph::key(u, v), id);
        }
    }
    return g;
}

std::vector<Diamond> enumerate_diamonds(const IntervalGraph& g) {
    const int n = g.num_vertices();
    const size_t words = (static_cast<size_t>(n) + 63) / 64;
    std::vector<uint64_t> adj(static_cast<size_t>(n) * words, 0);
    for (const auto& e : g.edges) {
        adj[static_cast<size_t>(e.u) * words + static_cast<size_t>(e.v) / 64] |=
            1ull << (e.v % 64);
        adj[static_cast<size_t>(e.v) * words + static_cast<size_t>(e.u) / 64] |=
            1ull << (e.u % 64);
    }

    // a 4-cycle is determined by its two diagonal pairs; enumerate common
    // neighbors of the lexicographically smaller diagonal
    std::vector<Diamond> out;
    std::vector<int> common;
    for (int p = 0; p < n; ++p) {
        for (int q = p + 1; q < n; ++q) {
            common.clear();
            for (size_t w = 0; w < words; ++w) {
                uint64_t bits = adj[static_cast<size_t>(p) * words + w] &
                                adj[static_cast<size_t>(q) * words + w];
                while (bits) {
                    const int v = static_cast<int>(w * 64 + static_cast<size_t>(__builtin_ctzll(bits)));
                    bits &= bits - 1;
                    if (v != p && v != q) common.push_back(v);
                }
            }
            for (size_t i = 0; i < common.size(); ++i) {
                for (size_t j = i + 1; j < common.size(); ++j) {
                    const int a = common[i], b = common[j];
                    // emit once: (p,q) must be the smaller diagonal
                    if (std::pair(p, q) >= std::pair(a, b)) continue;
                    Diamond d;
                    d.verts = {p, a, q, b};
                    d.edges = {g.edge_index(p, a), g.edge_index(a, q), g.edge_index(q, b),
                               g.edge_index(b, p)};
                    out.push_back(d);
                }
            }
        }
    }
    return out;
}

ClosureEngine::ClosureEngine(const IntervalGraph& g) : g_(&g), diamonds_(enumerate_diamonds(g)) {
    diamonds_by_edge_.assign(static_cast<size_t>(g.num_edges()), {});
    for (size_t d = 0; d < diamonds_.size(); ++d)
        for (int e : diamonds_[d].edges)
            diamonds_by_edge_[static_cast<size_t>(e)].push_back(static_cast<int>(d));
}

EdgeSet ClosureEngine::closure(const EdgeSet& f) const {
    EdgeSet r = f;
    std::vector<int> stack = f.to_indices();
    while (!stack.empty()) {
        const int e = stack.back();
        stack.pop_back();
        for (int di : diamonds_by_edge_[static_cast<size_t>(e)]) {
            const Diamond& d = diamonds_[static_cast<size_t>(di)];
            int pos = 0;
            while (d.edges[static_cast<size_t>(pos)] != e) ++pos;
            // the two cycle-adjacent edges of e in this diamond
            const int left = d.edges[static_cast<size_t>((pos + 3) % 4)];
            const int right = d.edges[static_cast<size_t>((pos + 1) % 4)];
            if (!r.test(left) && !r.test(right)) continue;
            for (int de : d.edges) {
                if (!r.test(de)) {
                    r.set(de);
                    stack.push_back(de);
                }
            }
        }
    }
    return r;
}

bool ClosureEngine::is_generating(const EdgeSet& f) const {
    return closure(f).count() == g_->num_edges();
}

bool ClosureEngine::check_shortedges(const EdgeSet& f) const {
    const EdgeSet cl = closure(f);
    if (!hasse_edges().subset_of(cl)) return true; // premise fails, nothing to check
    return cl.count() == g_->num_edges();
}

EdgeSet ClosureEngine::hasse_edges() const {
    EdgeSet s(g_->num_edges());
    for (int i = 0; i < g_->num_edges(); ++i)
        if (g_->edges[static_cast<size_t>(i)].hasse) s.set(i);
    return s;
}

EdgeSet coatom_edge_set(const IntervalGraph& g) {
    EdgeSet s(g.num_edges());
    const int y = g.num_vertices() - 1;
    for (int e : g.incident[static_cast<size_t>(y)])
        if (g.edges[static_cast<size_t>(e)].hasse) s.set(e);
    return s;
}

EdgeSet atom_edge_set(const IntervalGraph& g) {
    EdgeSet s(g.num_edges());
    for (int e : g.incident[0])
        if (g.edges[static_cast<size_t>(e)].hasse) s.set(e);
    return s;
}

EdgeSet maximal_chain_edge_set(const IntervalGraph& g) {
    EdgeSet s(g.num_edges());
    int cur = 0;
    const int top = g.num_vertices() - 1;
    while (cur != top) {
        int next_edge = -1, next_vertex = -1;
        for (int e : g.incident[static_cast<size_t>(cur)]) {
            const auto& ed = g.edges[static_cast<size_t>(e)];
            if (!ed.hasse || ed.u != cur) continue; // ed.u == cur means the step goes up
            if (next_vertex < 0 || ed.v < next_vertex) {
                next_vertex = ed.v;
                next_edge = e;
            }
        }
        if (next_edge < 0) throw std::logic_error("maximal chain construction stuck below the top");
        s.set(next_edge);
        cur = next_vertex;
    }
    return s;
}

namespace {

// lexicographically next k-combination of {0..m-1}; returns false when done
bool next_combination(std::vector<int>& c, int m) {
    const int k = static_cast<int>(c.size());
    for (int i = k - 1; i >= 0; --i) {
        if (c[static_cast<size_t>(i)] < m - k + i) {
            ++c[static_cast<size_t>(i)];
            for (int j = i + 1; j < k; ++j)
                c[static_cast<size_t>(j)] = c[static_cast<size_t>(j - 1)] + 1;
            return true;
        }
    }
    return false;
}

} // namespace

GMinResult g_min(const ClosureEngine& engine, const GMinOptions& opts) {
    const IntervalGraph& g = engine.graph();
    GMinResult res;
    res.lower = std::max(1, opts.lower_bound);
    if (g.num_edges() == 0) {
        // [x,x]: the empty set already generates
        res.exact = true;
        res.g = 0;
        res.lower = 0;
        res.upper = 0;
        res.witness = EdgeSet(0);
        res.upper_witness = EdgeSet(0);
        return res;
    }

    // theorem-backed upper bounds, each verified by an explicit closure
    const EdgeSet full = engine.full_edges();
    auto consider_upper = [&](const EdgeSet& s) {
        if (s.count() == 0) return;
        if (!engine.is_generating(s)) return;
        if (res.upper < 0 || s.count() < res.upper) {
            res.upper = s.count();
            res.upper_witness = s;
        }
    };
    consider_upper(coatom_edge_set(g));
    consider_upper(atom_edge_set(g));
    consider_upper(maximal_chain_edge_set(g));
    consider_upper(full); // always generates; last resort

    std::vector<int> hasse_ids, all_ids;
    for (int i = 0; i < g.num_edges(); ++i) {
        all_ids.push_back(i);
        if (g.edges[static_cast<size_t>(i)].hasse) hasse_ids.push_back(i);
    }

    auto search_at = [&](int k, const std::vector<int>& universe, bool skip_all_hasse,
                         EdgeSet& found) -> int {
        // 1 found, 0 exhausted, -1 budget ran out
        if (k > static_cast<int>(universe.size())) return 0;
        std::vector<int> comb(static_cast<size_t>(k));
        for (int i = 0; i < k; ++i) comb[static_cast<size_t>(i)] = i;
        do {
            if (skip_all_hasse) {
                bool all_hasse = true;
                for (int i : comb)
                    if (!g.edges[static_cast<size_t>(universe[static_cast<size_t>(i)])].hasse) {
                        all_hasse = false;
                        break;
                    }
                if (all_hasse) continue; // already covered by the Hasse pass
            }
            if (++res.subsets_tried > opts.budget) return -1;
            EdgeSet f(g.num_edges());
            for (int i : comb) f.set(universe[static_cast<size_t>(i)]);
            if (engine.is_generating(f)) {
                found = f;
                return 1;
            }
        } while (next_combination(comb, static_cast<int>(universe.size())));
        return 0;
    };

    for (int k = res.lower; k <= res.upper; ++k) {
        EdgeSet found;
        int st = search_at(k, hasse_ids, false, found);
        if (st == 1) {
            res.exact = true;
            res.g = k;
            res.witness = found;
            res.hasse_witness = true;
            return res;
        }
        if (st == 0) {
            st = search_at(k, all_ids, true, found);
            if (st == 1) {
                res.exact = true;
                res.g = k;
                res.witness = found;
                res.hasse_witness = false;
                return res;
            }
        }
        if (st == -1) {
            if (k == res.upper) {
                // the value is pinned (all smaller sizes exhausted and the
                // canonical witness has size upper); only the lex-first
                // witness was not reached within budget
                res.exact = true;
                res.g = res.upper;
                res.witness = res.upper_witness;
                return res;
            }
            // sizes below k were fully exhausted, so g >= k
            res.lower = k;
            return res;
        }
        if (k == res.upper)
            throw std::logic_error("g_min: no subset of the verified upper-bound size generates");
        res.lower = k + 1;
    }
    // lower bound met the verified upper bound without searching
    res.exact = true;
    res.g = res.upper;
    res.witness = res.upper_witness;
    return res;
}

} // namespace klq
