#include "klq/sections.hpp"

#include <stdexcept>

namespace klq {

SectionSystem::SectionSystem(const IntervalGraph& g, bool restrict_to_hasse)
    : g_(&g), hasse_only_(restrict_to_hasse), rank_(g.sys->rank()) {
    const int nv = g.num_vertices();
    n_vvars_ = (nv - 1) * rank_; // vertex order puts y last; its variables are deleted
    for (int e = 0; e < g.num_edges(); ++e)
        if (!hasse_only_ || g.edges[static_cast<size_t>(e)].hasse) used_edges_.push_back(e);

    const int ne = static_cast<int>(used_edges_.size());
    reduced_ = IntMat((rank_ - 1) * ne, n_vvars_);

    const int y_index = nv - 1;
    auto vcol = [&](int vertex, int coord) { return vertex * rank_ + coord; };

    int rrow = 0;
    for (int k = 0; k < ne; ++k) {
        const auto& e = g.edges[static_cast<size_t>(used_edges_[static_cast<size_t>(k)])];
        const Root& a = g.sys->positive_root(e.root);
        int p = 0;
        while (a[p] == 0) ++p;

        // a_p (v_u - v_v)_i - a_i (v_u - v_v)_p = 0 for i != p; these
        // rows cut out exactly the multiples of the label
        for (int i = 0; i < rank_; ++i) {
            if (i == p) continue;
            if (e.u != y_index) {
                reduced_.at(rrow, vcol(e.u, i)) += a[p];
                reduced_.at(rrow, vcol(e.u, p)) -= a[i];
            }
            if (e.v != y_index) {
                reduced_.at(rrow, vcol(e.v, i)) -= a[p];
                reduced_.at(rrow, vcol(e.v, p)) += a[i];
            }
            ++rrow;
        }
    }
}

int SectionSystem::dim() const { return n_vvars_ - exact_rank(reduced_); }

int SectionSystem::dim_via_lambda_system() const {
    const int nv = g_->num_vertices();
    const int y_index = nv - 1;
    const int ne = static_cast<int>(used_edges_.size());
    IntMat full(rank_ * ne, n_vvars_ + ne);
    auto vcol = [&](int vertex, int coord) { return vertex * rank_ + coord; };
    int frow = 0;
    for (int k = 0; k < ne; ++k) {
        const auto& e = g_->edges[static_cast<size_t>(used_edges_[static_cast<size_t>(k)])];
        const Root& a = g_->sys->positive_root(e.root);
        // (v_u)_i - (v_v)_i - lambda_k a_i = 0
        for (int i = 0; i < rank_; ++i) {
            if (e.u != y_index) full.at(frow, vcol(e.u, i)) += 1;
            if (e.v != y_index) full.at(frow, vcol(e.v, i)) -= 1;
            full.at(frow, n_vvars_ + k) = -a[i];
            ++frow;
        }
    }
    return n_vvars_ + ne - exact_rank(full);
}

std::vector<Section> SectionSystem::basis() const {
    std::vector<Section> out;
    for (const std::vector<Int>& vec : kernel_basis(reduced_)) {
        Section s;
        s.v.assign(static_cast<size_t>(g_->num_vertices()),
                   std::vector<Rat>(static_cast<size_t>(rank_), Rat(0)));
        for (int vertex = 0; vertex + 1 < g_->num_vertices(); ++vertex)
            for (int c = 0; c < rank_; ++c)
                s.v[static_cast<size_t>(vertex)][static_cast<size_t>(c)] =
                    Rat(vec[static_cast<size_t>(vertex * rank_ + c)]);
        out.push_back(std::move(s));
    }
    return out;
}

int dim_V(const IntervalGraph& g) { return SectionSystem(g).dim(); }

Rat edge_functional(const IntervalGraph& g, const Section& s, int edge) {
    const auto& e = g.edges.at(static_cast<size_t>(edge));
    const Root& a = g.sys->positive_root(e.root);
    const int rank = g.sys->rank();
    std::vector<Rat> diff(static_cast<size_t>(rank));
    for (int i = 0; i < rank; ++i)
        diff[static_cast<size_t>(i)] = s.v[static_cast<size_t>(e.u)][static_cast<size_t>(i)] -
                                       s.v[static_cast<size_t>(e.v)][static_cast<size_t>(i)];
    int p = 0;
    while (a[p] == 0) ++p;
    const Rat lambda = diff[static_cast<size_t>(p)] / a[p];
    for (int i = 0; i < rank; ++i)
        if (diff[static_cast<size_t>(i)] != lambda * a[i])
            throw std::invalid_argument("edge_functional: vector is not a section along this edge");
    return lambda;
}

bool check_injectivity(const IntervalGraph& g, const EdgeSet& f) {
    {
        ClosureEngine engine(g);
        if (!engine.is_generating(f))
            throw std::invalid_argument("check_injectivity requires a diamond-generating edge set");
    }
    const std::vector<Section> basis = SectionSystem(g).basis();
    if (basis.empty()) return true;
    const std::vector<int> cols = f.to_indices();
    std::vector<std::vector<Rat>> m(basis.size(), std::vector<Rat>(cols.size()));
    for (size_t b = 0; b < basis.size(); ++b)
        for (size_t j = 0; j < cols.size(); ++j)
            m[b][j] = edge_functional(g, basis[b], cols[j]);
    return exact_rank_rational(m) == static_cast<int>(basis.size());
}

} // namespace klq
