#include "klq/io.hpp"

#include <ostream>
#include <sstream>

#include <json.hpp>

namespace klq {

std::string root_coords_str(const Root& r) {
    std::string s = "(";
    for (int i = 0; i < r.n; ++i) {
        if (i) s += ',';
        s += std::to_string(r[i]);
    }
    s += ')';
    return s;
}

void write_dot(std::ostream& os, const IntervalGraph& g, const EdgeSet* witness) {
    const CoxeterSystem& sys = *g.sys;
    os << "graph interval {\n";
    os << "  node [shape=plaintext];\n";
    for (int v = 0; v < g.num_vertices(); ++v)
        os << "  n" << v << " [label=\"" << sys.word_str(g.vertices[static_cast<size_t>(v)])
           << "\"];\n";
    for (int e = 0; e < g.num_edges(); ++e) {
        const auto& ed = g.edges[static_cast<size_t>(e)];
        os << "  n" << ed.u << " -- n" << ed.v << " [label=\""
           << root_coords_str(sys.positive_root(ed.root)) << "\", style="
           << (ed.hasse ? "solid" : "dashed");
        if (witness && witness->test(e)) os << ", color=red, penwidth=2";
        os << "];\n";
    }
    os << "}\n";
}

namespace {

nlohmann::json graph_json_obj(const IntervalGraph& g, const EdgeSet* witness) {
    const CoxeterSystem& sys = *g.sys;
    nlohmann::json j;
    j["group"] = sys.spec().str();
    j["x"] = sys.word_str(g.x);
    j["y"] = sys.word_str(g.y);
    j["vertices"] = nlohmann::json::array();
    for (int v = 0; v < g.num_vertices(); ++v) {
        j["vertices"].push_back({{"word", sys.word_str(g.vertices[static_cast<size_t>(v)])},
                                 {"length", g.vertex_length[static_cast<size_t>(v)]}});
    }
    j["edges"] = nlohmann::json::array();
    for (const auto& e : g.edges) {
        j["edges"].push_back({{"u", e.u},
                              {"v", e.v},
                              {"label", sys.positive_root(e.root).to_vector()},
                              {"hasse", e.hasse}});
    }
    if (witness) j["witness"] = witness->to_indices();
    return j;
}

} // namespace

std::string graph_json(const IntervalGraph& g, const EdgeSet* witness) {
    return graph_json_obj(g, witness).dump(2);
}

std::string basis_json(const IntervalGraph& g, const std::vector<Section>& basis) {
    const CoxeterSystem& sys = *g.sys;
    nlohmann::json j;
    j["group"] = sys.spec().str();
    j["x"] = sys.word_str(g.x);
    j["y"] = sys.word_str(g.y);
    j["dim"] = basis.size();
    j["basis"] = nlohmann::json::array();
    for (const Section& s : basis) {
        nlohmann::json vec = nlohmann::json::array();
        for (int v = 0; v < g.num_vertices(); ++v) {
            nlohmann::json coords = nlohmann::json::array();
            for (const Rat& c : s.v[static_cast<size_t>(v)]) {
                std::ostringstream os;
                os << c;
                coords.push_back(os.str());
            }
            vec.push_back({{"word", sys.word_str(g.vertices[static_cast<size_t>(v)])},
                           {"value", coords}});
        }
        j["basis"].push_back(vec);
    }
    return j.dump(2);
}

} // namespace klq
