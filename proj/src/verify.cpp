#include "klq/verify.hpp"

#include <algorithm>
#include <atomic>
#include <deque>
#include <limits>
#include <map>
#include <random>
#include <sstream>
#include <stdexcept>
#include <thread>

#include <json.hpp>

#include "klq/lifting.hpp"
#include "klq/sections.hpp"

namespace klq {

namespace {

// saturating binomial estimate for search planning
uint64_t binom_capped(uint64_t n, uint64_t k, uint64_t cap) {
    if (k > n) return 0;
    uint64_t r = 1;
    for (uint64_t i = 0; i < k; ++i) {
        if (r > cap) return cap + 1;
        r = r * (n - i) / (i + 1);
    }
    return r;
}

long long to_ll(const Int& v) {
    if (v > std::numeric_limits<long long>::max() || v < std::numeric_limits<long long>::min())
        throw std::overflow_error("coefficient exceeds int64 in report");
    return static_cast<long long>(v);
}

} // namespace

IntervalReport compute_interval_report(const CoxeterSystem& sys, Bruhat& order, KLContext& kl,
                                       const Element& x, const Element& y, const RunConfig& cfg) {
    IntervalReport rep;
    rep.x_word = sys.word_str(x);
    rep.y_word = sys.word_str(y);

    if (x == y) {
        // degenerate interval: everything is zero, checks are skipped
        rep.g = 0;
        rep.dim_v = cfg.with_dimv ? 0 : -1;
        rep.r_str = "1";
        rep.p_str = "1";
        return rep;
    }
    if (!order.leq(x, y))
        throw std::invalid_argument("x is not below y in Bruhat order");

    rep.ldiff = sys.length(y) - sys.length(x);
    IntervalGraph graph = build_interval_graph(sys, order, x, y);
    for (int len : graph.vertex_length)
        if (len == sys.length(y) - 1) ++rep.c;

    // R- and KL-polynomials, with the defining identities re-verified
    const Poly r = kl.r_polynomial(x, y);
    const Poly p = kl.kl_polynomial(x, y);
    rep.r_str = r.str();
    rep.p_str = p.str();
    for (const Int& c : r.coeffs()) rep.r_coeffs.push_back(to_ll(c));
    for (const Int& c : p.coeffs()) rep.p_coeffs.push_back(to_ll(c));
    rep.d = to_ll(kl.d_coefficient(x, y));
    rep.q = to_ll(kl.q_coefficient(x, y));

    rep.kl_ok = r.is_monic_of_degree(rep.ldiff) && p.coeff(0) == 1 &&
                p.degree() <= (rep.ldiff - 1) / 2 && rep.q >= 0;
    for (const Int& coef : p.coeffs())
        if (coef < 0) rep.kl_ok = false;
    {
        Poly rhs;
        for (const Element& z : graph.vertices)
            rhs += kl.r_polynomial(x, z) * kl.kl_polynomial(z, y);
        if (p.reversed(rep.ldiff) != rhs) rep.kl_ok = false;
    }

    if (cfg.with_dimv) {
        rep.dim_v = dim_V(graph);
        if (rep.dim_v != rep.d) rep.cross_ok = false;
    }

    ClosureEngine engine(graph);

    // theorem-backed upper bounds with explicit verified witnesses
    const EdgeSet co = coatom_edge_set(graph);
    const EdgeSet at = atom_edge_set(graph);
    const EdgeSet chain = maximal_chain_edge_set(graph);
    if (!engine.is_generating(co) || !engine.is_generating(at) || !engine.is_generating(chain))
        rep.bounds_ok = false;
    const int upper = std::min({co.count(), at.count(), chain.count()});

    // constructive witness of size d via the minimal-reflection induction
    EdgeSet witness(graph.num_edges());
    {
        std::unordered_map<Element, int, Element::Hash> vid;
        for (int v = 0; v < graph.num_vertices(); ++v)
            vid.emplace(graph.vertices[static_cast<size_t>(v)], v);
        for (const auto& [a, b] : generating_pairs(sys, order, x, y)) {
            auto ia = vid.find(a), ib = vid.find(b);
            int e = (ia == vid.end() || ib == vid.end())
                        ? -1
                        : graph.edge_index(ia->second, ib->second);
            if (e < 0) throw TheoremViolation("constructed witness pair is not an interval edge");
            witness.set(e);
        }
    }
    const bool witness_generates = engine.is_generating(witness);
    if (!witness_generates || witness.count() != rep.d) rep.cross_ok = false;
    rep.g = witness_generates ? witness.count() : upper;
    EdgeSet reported = witness_generates ? witness : co;

    // independent exact search from size 1 when affordable
    if (cfg.with_search) {
        uint64_t estimate = 0;
        const uint64_t hasse = static_cast<uint64_t>(graph.hasse_count());
        for (long long k = 1; k <= rep.d; ++k) {
            estimate += binom_capped(hasse, static_cast<uint64_t>(k), cfg.search_cap);
            if (estimate > cfg.search_cap) break;
        }
        if (estimate <= cfg.search_cap) {
            GMinOptions opts;
            opts.lower_bound = 1;
            opts.budget = cfg.budget;
            const GMinResult res = g_min(engine, opts);
            rep.search_ran = true;
            rep.budget_flag = !res.exact;
            if (res.exact) {
                rep.g_search = res.g;
                if (res.g != rep.g) rep.cross_ok = false;
                if (res.witness) reported = *res.witness; // lexicographically first
            } else {
                rep.g_lower = res.lower;
                rep.g_upper = res.upper;
            }
        }
    }
    for (int e : reported.to_indices()) {
        const auto& ed = graph.edges[static_cast<size_t>(e)];
        rep.witness_pairs.emplace_back(sys.word_str(graph.vertices[static_cast<size_t>(ed.u)]),
                                       sys.word_str(graph.vertices[static_cast<size_t>(ed.v)]));
    }

    if (!(rep.d <= rep.g && rep.g <= upper)) rep.bounds_ok = false;
    rep.theorem_ok = (rep.q == rep.c - rep.g);

    // lifting checks quantify over every minimal reflection
    const MinimalReflectionReport mins = minimal_reflections(sys, order, x, y);
    if (static_cast<int>(mins.ad.size()) < rep.ldiff) rep.cross_ok = false;
    for (int t : mins.minimal) {
        if (!verify_glt(kl, x, y, t)) rep.glt_ok = false;
        if (!check_drect(kl, x, y, t)) rep.drect_ok = false;
        try {
            const auto ch = ladder_chain(sys, order, x, y, t);
            if (!validate_ladder_chain(sys, order, x, y, t, ch)) rep.ladder_ok = false;
        } catch (const TheoremViolation&) {
            rep.ladder_ok = false;
        }
        if (rep.ldiff >= 2) {
            if (!check_onenotsmaller(sys, order, x, y, t)) rep.onenotsmaller_ok = false;
            if (!check_newmin(sys, order, x, y, t)) rep.newmin_ok = false;
        }
    }
    return rep;
}

EdgeSet reported_min_witness(const CoxeterSystem& sys, Bruhat& order, KLContext& kl,
                             const IntervalGraph& graph, const RunConfig& cfg) {
    EdgeSet witness(graph.num_edges());
    if (graph.num_vertices() <= 1) return witness;
    std::unordered_map<Element, int, Element::Hash> vid;
    for (int v = 0; v < graph.num_vertices(); ++v)
        vid.emplace(graph.vertices[static_cast<size_t>(v)], v);
    for (const auto& [a, b] : generating_pairs(sys, order, graph.x, graph.y)) {
        const int e = graph.edge_index(vid.at(a), vid.at(b));
        if (e < 0) throw TheoremViolation("constructed witness pair is not an interval edge");
        witness.set(e);
    }
    if (cfg.with_search) {
        const long long d = to_ll(kl.d_coefficient(graph.x, graph.y));
        uint64_t estimate = 0;
        for (long long k = 1; k <= d && estimate <= cfg.search_cap; ++k)
            estimate += binom_capped(static_cast<uint64_t>(graph.hasse_count()),
                                     static_cast<uint64_t>(k), cfg.search_cap);
        if (estimate <= cfg.search_cap) {
            ClosureEngine engine(graph);
            GMinOptions opts;
            opts.lower_bound = 1;
            opts.budget = cfg.budget;
            const GMinResult res = g_min(engine, opts);
            if (res.exact && res.witness) return *res.witness;
        }
    }
    return witness;
}

namespace {

struct PairTask {
    Element x, y;
    int ldiff;
};

bool task_order(const PairTask& a, const PairTask& b) {
    if (a.ldiff != b.ldiff) return a.ldiff < b.ldiff;
    if (!(a.y == b.y)) return a.y < b.y;
    return a.x < b.x;
}

// stratified quota allocation, long intervals first so they are always
// represented; deterministic
std::map<int, uint64_t> allocate_quotas(const std::map<int, uint64_t>& stratum_sizes,
                                        uint64_t want) {
    std::map<int, uint64_t> quota;
    uint64_t remaining = want;
    size_t strata_left = stratum_sizes.size();
    for (auto it = stratum_sizes.rbegin(); it != stratum_sizes.rend(); ++it, --strata_left) {
        if (remaining == 0) break;
        const uint64_t share = (remaining + strata_left - 1) / strata_left;
        const uint64_t take = std::min(share, it->second);
        quota[it->first] = take;
        remaining -= take;
    }
    // leftover capacity (some strata were smaller than their share) goes
    // to the largest strata that can still absorb it
    if (remaining > 0) {
        for (auto it = stratum_sizes.rbegin(); it != stratum_sizes.rend() && remaining > 0; ++it) {
            const uint64_t can = it->second - quota[it->first];
            const uint64_t take = std::min(can, remaining);
            quota[it->first] += take;
            remaining -= take;
        }
    }
    return quota;
}

} // namespace

VerifySummary run_verify(const RunConfig& cfg) {
    const CoxeterSystem sys = CoxeterSystem::build(cfg.group);
    if (sys.group_order() > 100000)
        throw std::invalid_argument(
            "verify sweeps are supported up to groups of order 100000 (through A7, D6, E6); " +
            cfg.group + " supports compute and export-dot only");

    Bruhat shared(sys);
    const int cap = cfg.max_ldiff.value_or(sys.num_positive_roots() * 2); // l(w0) bound

    std::vector<PairTask> tasks;
    if (shared.has_table()) {
        // comparable-pair population, stratified by length difference
        std::map<int, std::vector<PairTask>> strata;
        const auto& elems = shared.elements();
        for (size_t yi = 0; yi < elems.size(); ++yi) {
            for (size_t xi = 0; xi < yi; ++xi) {
                const int ld = shared.length_of(yi) - shared.length_of(xi);
                if (ld < 1 || ld > cap) continue;
                if (!shared.leq(elems[xi], elems[yi])) continue;
                strata[ld].push_back({elems[xi], elems[yi], ld});
            }
        }
        for (auto& [ld, v] : strata) std::sort(v.begin(), v.end(), task_order);

        if (cfg.sample_count) {
            // quota per stratum, partial Fisher-Yates inside each
            std::map<int, uint64_t> sizes;
            for (const auto& [ld, v] : strata) sizes[ld] = v.size();
            const auto quota = allocate_quotas(sizes, *cfg.sample_count);
            std::mt19937_64 rng(cfg.seed);
            for (auto& [ld, v] : strata) {
                auto qit = quota.find(ld);
                const uint64_t q = qit == quota.end() ? 0 : qit->second;
                if (q == 0) continue;
                std::vector<size_t> idx(v.size());
                for (size_t i = 0; i < idx.size(); ++i) idx[i] = i;
                for (uint64_t j = 0; j < q; ++j) {
                    const size_t pick = j + static_cast<size_t>(rng() % (idx.size() - j));
                    std::swap(idx[j], idx[pick]);
                }
                for (uint64_t j = 0; j < q; ++j) tasks.push_back(v[idx[j]]);
            }
        } else {
            for (auto& [ld, v] : strata)
                tasks.insert(tasks.end(), v.begin(), v.end());
        }
    } else {
        if (!cfg.max_ldiff || !cfg.sample_count)
            throw std::invalid_argument(
                "groups beyond order 2000 require both --max-ldiff and --sample for verify");
        // two streaming passes over the capped lower cones: count the
        // strata, then reservoir-sample each. Cover steps only, so no
        // order queries are needed and the stream order is deterministic.
        std::vector<Element> elems;
        {
            std::deque<Element> queue{sys.identity()};
            std::unordered_map<Element, bool, Element::Hash> seen;
            seen.emplace(sys.identity(), true);
            while (!queue.empty()) {
                Element w = queue.front();
                queue.pop_front();
                elems.push_back(w);
                for (int s = 0; s < sys.rank(); ++s) {
                    Element ws = sys.multiply(w, sys.generator(s));
                    if (seen.emplace(ws, true).second) queue.push_back(ws);
                }
            }
            std::sort(elems.begin(), elems.end(), [&](const Element& a, const Element& b) {
                const int la = sys.length(a), lb = sys.length(b);
                return la != lb ? la < lb : a < b;
            });
        }
        auto stream_pairs = [&](auto&& sink) {
            for (const Element& y : elems) {
                const int ly = sys.length(y);
                if (ly < 1) continue;
                std::unordered_map<Element, bool, Element::Hash> seen;
                std::deque<Element> queue{y};
                seen.emplace(y, true);
                while (!queue.empty()) {
                    Element z = queue.front();
                    queue.pop_front();
                    const int lz = sys.length(z);
                    if (ly - lz >= 1) sink(z, y, ly - lz);
                    if (ly - lz >= cap) continue; // deeper covers fall outside the cap
                    for (int t = 0; t < sys.num_positive_roots(); ++t) {
                        if (!sys.is_right_descent(z, t)) continue;
                        Element zt = sys.multiply(z, sys.reflection(t));
                        if (sys.length(zt) != lz - 1) continue;
                        if (seen.emplace(zt, true).second) queue.push_back(zt);
                    }
                }
            }
        };
        std::map<int, uint64_t> sizes;
        stream_pairs([&](const Element&, const Element&, int ld) { ++sizes[ld]; });
        const auto quota = allocate_quotas(sizes, *cfg.sample_count);
        std::map<int, std::vector<PairTask>> reservoir;
        std::map<int, uint64_t> seen_count;
        std::mt19937_64 rng(cfg.seed);
        stream_pairs([&](const Element& x, const Element& y, int ld) {
            auto qit = quota.find(ld);
            const uint64_t q = qit == quota.end() ? 0 : qit->second;
            if (q == 0) return;
            auto& res = reservoir[ld];
            const uint64_t n = ++seen_count[ld];
            if (res.size() < q) {
                res.push_back({x, y, ld});
            } else {
                const uint64_t j = rng() % n;
                if (j < q) res[static_cast<size_t>(j)] = {x, y, ld};
            }
        });
        for (auto& [ld, v] : reservoir) tasks.insert(tasks.end(), v.begin(), v.end());
    }
    std::sort(tasks.begin(), tasks.end(), task_order);

    // per-interval computations are independent; reports land at their
    // task index so the output order never depends on scheduling
    VerifySummary out;
    out.group = cfg.group;
    out.reports.resize(tasks.size());
    const int workers = std::max(1, cfg.workers);
    std::atomic<size_t> next{0};
    auto work = [&]() {
        Bruhat local_order = shared.has_table() ? Bruhat(sys, 0) : Bruhat(sys);
        Bruhat& order = shared.has_table() ? shared : local_order;
        KLContext kl(sys, order);
        while (true) {
            const size_t i = next.fetch_add(1);
            if (i >= tasks.size()) break;
            try {
                out.reports[i] = compute_interval_report(sys, order, kl, tasks[i].x, tasks[i].y, cfg);
            } catch (const std::exception& e) {
                IntervalReport rep;
                rep.x_word = sys.word_str(tasks[i].x);
                rep.y_word = sys.word_str(tasks[i].y);
                rep.ldiff = tasks[i].ldiff;
                rep.error = e.what();
                out.reports[i] = rep;
            }
        }
    };
    if (workers == 1) {
        work();
    } else {
        std::vector<std::thread> pool;
        for (int w = 0; w < workers; ++w) pool.emplace_back(work);
        for (auto& th : pool) th.join();
    }

    out.total = out.reports.size();
    for (const IntervalReport& r : out.reports) {
        if (r.failed()) ++out.failures;
        if (r.budget_flag) ++out.budget_exceeded;
        if (!r.error.empty()) ++out.errors;
    }
    return out;
}

std::string reports_csv(const VerifySummary& s) {
    std::ostringstream os;
    os << "group,x,y,ldiff,c,d,dimV,g,q,theorem_ok,glt_ok,ladder_ok,budget_flag\n";
    for (const IntervalReport& r : s.reports) {
        os << s.group << ',' << r.x_word << ',' << r.y_word << ',' << r.ldiff << ',' << r.c << ','
           << r.d << ',';
        if (r.dim_v >= 0) os << r.dim_v;
        os << ',' << r.g << ',' << r.q << ',' << (r.theorem_ok ? 1 : 0) << ','
           << (r.glt_ok ? 1 : 0) << ',' << (r.ladder_ok ? 1 : 0) << ',' << (r.budget_flag ? 1 : 0)
           << '\n';
    }
    return os.str();
}

namespace {

nlohmann::json report_obj(const IntervalReport& r) {
    nlohmann::json j;
    j["x"] = r.x_word;
    j["y"] = r.y_word;
    j["ldiff"] = r.ldiff;
    j["c"] = r.c;
    j["d"] = r.d;
    if (r.dim_v >= 0) j["dimV"] = r.dim_v;
    j["g"] = r.g;
    j["q"] = r.q;
    j["R"] = r.r_str;
    j["P"] = r.p_str;
    j["R_coeffs"] = r.r_coeffs;
    j["P_coeffs"] = r.p_coeffs;
    j["theorem_ok"] = r.theorem_ok;
    j["glt_ok"] = r.glt_ok;
    j["ladder_ok"] = r.ladder_ok;
    j["drect_ok"] = r.drect_ok;
    j["onenotsmaller_ok"] = r.onenotsmaller_ok;
    j["newmin_ok"] = r.newmin_ok;
    j["bounds_ok"] = r.bounds_ok;
    j["kl_ok"] = r.kl_ok;
    j["cross_ok"] = r.cross_ok;
    j["budget_flag"] = r.budget_flag;
    if (r.search_ran && !r.budget_flag) j["g_search"] = r.g_search;
    if (r.budget_flag) {
        j["g_search_lower"] = r.g_lower;
        j["g_search_upper"] = r.g_upper;
    }
    nlohmann::json w = nlohmann::json::array();
    for (const auto& [a, b] : r.witness_pairs) w.push_back({a, b});
    j["witness"] = w;
    if (!r.error.empty()) j["error"] = r.error;
    return j;
}

} // namespace

std::string summary_json(const VerifySummary& s) {
    nlohmann::json j;
    j["group"] = s.group;
    j["summary"] = {{"total", s.total},
                    {"failures", s.failures},
                    {"budget_exceeded", s.budget_exceeded},
                    {"errors", s.errors}};
    j["intervals"] = nlohmann::json::array();
    for (const IntervalReport& r : s.reports) j["intervals"].push_back(report_obj(r));
    return j.dump(2);
}

std::string interval_report_json(const CoxeterSystem& sys, Bruhat& order, KLContext& kl,
                                 const Element& x, const Element& y, const IntervalReport& rep) {
    nlohmann::json j = report_obj(rep);
    j["group"] = sys.spec().str();
    if (!(x == y) && order.less(x, y)) {
        const MinimalReflectionReport mins = minimal_reflections(sys, order, x, y);
        auto refl_obj = [&](int t) {
            return nlohmann::json{{"root", sys.positive_root(t).to_vector()},
                                  {"word", sys.word_str(sys.reflection(t))}};
        };
        nlohmann::json lifting;
        lifting["ad"] = nlohmann::json::array();
        for (int t : mins.ad) lifting["ad"].push_back(refl_obj(t));
        lifting["minimal"] = nlohmann::json::array();
        for (int t : mins.minimal) lifting["minimal"].push_back(refl_obj(t));
        lifting["chosen"] = refl_obj(mins.chosen);
        lifting["per_reflection"] = nlohmann::json::array();
        for (int t : mins.minimal) {
            nlohmann::json e;
            e["reflection"] = refl_obj(t);
            e["glt"] = verify_glt(kl, x, y, t);
            e["drect"] = check_drect(kl, x, y, t);
            try {
                const auto ch = ladder_chain(sys, order, x, y, t);
                nlohmann::json cj = nlohmann::json::array();
                for (const Element& z : ch) cj.push_back(sys.word_str(z));
                e["ladder"] = cj;
                e["ladder_valid"] = validate_ladder_chain(sys, order, x, y, t, ch);
            } catch (const TheoremViolation& tv) {
                e["ladder_error"] = tv.what();
            }
            lifting["per_reflection"].push_back(e);
        }
        j["lifting"] = lifting;
    }
    return j.dump(2);
}

} // namespace klq
