#include "klq/coxeter.hpp"

#include <algorithm>
#include <cctype>
#include <deque>
#include <set>
#include <sstream>
#include <stdexcept>
#include <unordered_set>

namespace klq {

bool root_dominance_less(const Root& a, const Root& b) {
    if (a.n != b.n) throw std::invalid_argument("root_dominance_less: rank mismatch");
    bool strict = false;
    for (int i = 0; i < a.n; ++i) {
        int d = b[i] - a[i];
        if (d < 0) return false;
        if (d > 0) strict = true;
    }
    return strict;
}

CoxeterSpec CoxeterSpec::parse(std::string_view s) {
    if (s.size() < 2)
        throw std::invalid_argument("group spec must be a family letter followed by a rank, e.g. \"A3\"");
    char fam = static_cast<char>(std::toupper(static_cast<unsigned char>(s[0])));
    int rank = 0;
    for (size_t i = 1; i < s.size(); ++i) {
        if (!std::isdigit(static_cast<unsigned char>(s[i])))
            throw std::invalid_argument("group spec rank must be numeric: " + std::string(s));
        rank = rank * 10 + (s[i] - '0');
    }
    CoxeterSpec spec{fam, rank};
    switch (fam) {
        case 'A':
            if (rank < 1) throw std::invalid_argument("type A requires rank >= 1");
            break;
        case 'D':
            if (rank < 4) throw std::invalid_argument("type D requires rank >= 4");
            break;
        case 'E':
            if (rank < 6 || rank > 8)
                throw std::invalid_argument("type E requires rank in {6, 7, 8}");
            break;
        default:
            throw std::invalid_argument(
                "unsupported family '" + std::string(1, fam) + "': only the simply-laced families A, D, E are supported");
    }
    if (rank > kMaxRank)
        throw std::invalid_argument("rank exceeds the supported maximum " + std::to_string(kMaxRank));
    return spec;
}

unsigned long long CoxeterSystem::group_order() const {
    const int n = rank();
    unsigned long long o = 1;
    switch (spec_.family) {
        case 'A':
            for (int i = 2; i <= n + 1; ++i) o *= static_cast<unsigned long long>(i);
            return o;
        case 'D':
            for (int i = 2; i <= n; ++i) o *= static_cast<unsigned long long>(i);
            return o << (n - 1);
        case 'E':
            if (n == 6) return 51840ull;
            if (n == 7) return 2903040ull;
            return 696729600ull;
    }
    return 0;
}

namespace {

// Dynkin diagram edges, 0-based node indices.
std::vector<std::pair<int, int>> dynkin_edges(const CoxeterSpec& spec) {
    std::vector<std::pair<int, int>> edges;
    const int n = spec.rank;
    switch (spec.family) {
        case 'A':
            for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
            break;
        case 'D':
            // chain 0-1-...-(n-2), fork: (n-3)-(n-1)
            for (int i = 0; i + 2 < n; ++i) edges.emplace_back(i, i + 1);
            edges.emplace_back(n - 3, n - 1);
            break;
        case 'E':
            // Bourbaki: chain 1-3-4-5-..., branch 2-4 (converted to 0-based)
            edges.emplace_back(0, 2);
            edges.emplace_back(2, 3);
            edges.emplace_back(1, 3);
            for (int i = 3; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
            break;
    }
    return edges;
}

} // namespace

CoxeterSystem CoxeterSystem::build(const CoxeterSpec& spec) {
    CoxeterSystem sys;
    sys.spec_ = spec;
    const int n = spec.rank;

    sys.cartan_.fill(0);
    for (int i = 0; i < n; ++i) sys.cartan_[static_cast<size_t>(i) * kMaxRank + i] = 2;
    for (auto [i, j] : dynkin_edges(spec)) {
        sys.cartan_[static_cast<size_t>(i) * kMaxRank + j] = -1;
        sys.cartan_[static_cast<size_t>(j) * kMaxRank + i] = -1;
    }

    // generator s: row s of the matrix is delta_sj - cartan[j][s]
    sys.generators_.reserve(static_cast<size_t>(n));
    for (int s = 0; s < n; ++s) {
        Element m = Element::identity(n);
        for (int j = 0; j < n; ++j) m.at(s, j) = (s == j ? 1 : 0) - sys.cartan(j, s);
        sys.generators_.push_back(m);
    }

    // positive roots: orbit of the simple roots intersected with the
    // positive cone
    std::set<Root> seen;
    std::deque<Root> queue;
    for (int s = 0; s < n; ++s) {
        Root r;
        r.n = n;
        r[s] = 1;
        seen.insert(r);
        queue.push_back(r);
    }
    while (!queue.empty()) {
        Root r = queue.front();
        queue.pop_front();
        for (int s = 0; s < n; ++s) {
            Root img = sys.apply(sys.generators_[static_cast<size_t>(s)], r);
            if (!img.is_positive() && !img.is_negative())
                throw std::logic_error("orbit produced a mixed-sign vector; Cartan data is inconsistent");
            if (img.is_positive() && seen.insert(img).second) queue.push_back(img);
        }
    }
    sys.positive_roots_.assign(seen.begin(), seen.end()); // std::set gives lex order

    // reflection along root a: v -> v - (v, a) a, i.e. I - a (C a)^T
    sys.reflections_.reserve(sys.positive_roots_.size());
    for (size_t t = 0; t < sys.positive_roots_.size(); ++t) {
        const Root& a = sys.positive_roots_[t];
        std::array<int, kMaxRank> ca{};
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k) ca[static_cast<size_t>(j)] += sys.cartan(j, k) * a[k];
        Element m = Element::identity(n);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) m.at(i, j) -= a[i] * ca[static_cast<size_t>(j)];
        sys.reflections_.push_back(m);
        sys.reflection_index_.emplace(m, static_cast<int>(t));
        sys.root_index_.emplace(a, static_cast<int>(t));
    }
    for (int s = 0; s < n; ++s) {
        Root r;
        r.n = n;
        r[s] = 1;
        sys.simple_root_index_[static_cast<size_t>(s)] = sys.root_index(r);
    }
    return sys;
}

Element CoxeterSystem::multiply(const Element& a, const Element& b) const {
    const int n = rank();
    Element r;
    r = Element::identity(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            int acc = 0;
            for (int k = 0; k < n; ++k) acc += a.at(i, k) * b.at(k, j);
            r.at(i, j) = acc;
        }
    return r;
}

namespace {

long long det_ll(std::array<std::array<long long, kMaxRank>, kMaxRank>& m, int n) {
    // fraction-free elimination; fine for the tiny matrices here
    long long prev = 1, sign = 1;
    for (int k = 0; k < n; ++k) {
        if (m[static_cast<size_t>(k)][static_cast<size_t>(k)] == 0) {
            int p = -1;
            for (int r = k + 1; r < n; ++r)
                if (m[static_cast<size_t>(r)][static_cast<size_t>(k)] != 0) { p = r; break; }
            if (p < 0) return 0;
            std::swap(m[static_cast<size_t>(k)], m[static_cast<size_t>(p)]);
            sign = -sign;
        }
        for (int r = k + 1; r < n; ++r) {
            for (int c = k + 1; c < n; ++c)
                m[static_cast<size_t>(r)][static_cast<size_t>(c)] =
                    (m[static_cast<size_t>(r)][static_cast<size_t>(c)] * m[static_cast<size_t>(k)][static_cast<size_t>(k)] -
                     m[static_cast<size_t>(r)][static_cast<size_t>(k)] * m[static_cast<size_t>(k)][static_cast<size_t>(c)]) /
                    prev;
            m[static_cast<size_t>(r)][static_cast<size_t>(k)] = 0;
        }
        prev = m[static_cast<size_t>(k)][static_cast<size_t>(k)];
    }
    return sign * prev;
}

} // namespace

Element CoxeterSystem::inverse(const Element& a) const {
    const int n = rank();
    std::array<std::array<long long, kMaxRank>, kMaxRank> m{};
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) m[static_cast<size_t>(i)][static_cast<size_t>(j)] = a.at(i, j);
    auto mm = m;
    long long det = det_ll(mm, n);
    if (det != 1 && det != -1)
        throw std::invalid_argument("element matrix is not unimodular");

    // adjugate / det with det = +-1
    Element r = Element::identity(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            std::array<std::array<long long, kMaxRank>, kMaxRank> minor{};
            int rr = 0;
            for (int p = 0; p < n; ++p) {
                if (p == j) continue;
                int cc = 0;
                for (int q = 0; q < n; ++q) {
                    if (q == i) continue;
                    minor[static_cast<size_t>(rr)][static_cast<size_t>(cc)] =
                        m[static_cast<size_t>(p)][static_cast<size_t>(q)];
                    ++cc;
                }
                ++rr;
            }
            long long cof = det_ll(minor, n - 1);
            if ((i + j) % 2 != 0) cof = -cof;
            r.at(i, j) = static_cast<int>(cof * det);
        }
    return r;
}

Root CoxeterSystem::apply(const Element& w, const Root& a) const {
    const int n = rank();
    Root r;
    r.n = n;
    for (int i = 0; i < n; ++i) {
        int acc = 0;
        for (int j = 0; j < n; ++j) acc += w.at(i, j) * a[j];
        r[i] = acc;
    }
    return r;
}

int CoxeterSystem::reflection_index(const Element& e) const {
    auto it = reflection_index_.find(e);
    return it == reflection_index_.end() ? -1 : it->second;
}

int CoxeterSystem::root_index(const Root& r) const {
    auto it = root_index_.find(r);
    return it == root_index_.end() ? -1 : it->second;
}

int CoxeterSystem::length(const Element& w) const {
    int inv = 0;
    for (const Root& a : positive_roots_)
        if (apply(w, a).is_negative()) ++inv;
    return inv;
}

bool CoxeterSystem::is_right_descent(const Element& w, int t) const {
    return apply(w, positive_root(t)).is_negative();
}

bool CoxeterSystem::is_right_descent_gen(const Element& w, int s) const {
    // w(alpha_s) < 0 iff ws < w; only column s of w matters
    const int n = rank();
    bool nonzero = false;
    for (int i = 0; i < n; ++i) {
        int v = w.at(i, s);
        if (v > 0) return false;
        if (v < 0) nonzero = true;
    }
    return nonzero;
}

std::vector<int> CoxeterSystem::descent_set(const Element& w) const {
    std::vector<int> out;
    for (int t = 0; t < num_positive_roots(); ++t)
        if (is_right_descent(w, t)) out.push_back(t);
    return out;
}

std::vector<int> CoxeterSystem::ascent_set(const Element& w) const {
    std::vector<int> out;
    for (int t = 0; t < num_positive_roots(); ++t)
        if (!is_right_descent(w, t)) out.push_back(t);
    return out;
}

Element CoxeterSystem::parse_word(std::string_view word) const {
    std::string buf(word);
    for (char& c : buf)
        if (c == ',') c = ' ';
    std::istringstream is(buf);
    std::string tok;
    Element w = identity();
    bool any = false;
    while (is >> tok) {
        any = true;
        if (tok == "e") continue;
        int idx = 0;
        for (char c : tok) {
            if (!std::isdigit(static_cast<unsigned char>(c)))
                throw std::invalid_argument("bad generator token '" + tok + "' in word");
            idx = idx * 10 + (c - '0');
        }
        if (idx < 1 || idx > rank())
            throw std::invalid_argument("generator index " + tok + " out of range 1.." + std::to_string(rank()));
        w = multiply(w, generator(idx - 1));
    }
    if (!any) throw std::invalid_argument("empty word; use \"e\" for the identity");
    return w;
}

std::vector<int> CoxeterSystem::reduced_word(const Element& w) const {
    std::vector<int> word;
    Element cur = w;
    while (!cur.is_identity()) {
        int s = -1;
        for (int i = 0; i < rank(); ++i)
            if (is_right_descent_gen(cur, i)) { s = i; break; }
        if (s < 0) throw std::logic_error("non-identity element with no descent");
        cur = multiply(cur, generator(s));
        word.push_back(s);
    }
    std::reverse(word.begin(), word.end());
    return word;
}

std::string CoxeterSystem::word_str(const Element& w) const {
    std::vector<int> word = reduced_word(w);
    if (word.empty()) return "e";
    std::string s;
    for (size_t i = 0; i < word.size(); ++i) {
        if (i) s += ' ';
        s += std::to_string(word[i] + 1);
    }
    return s;
}

} // namespace klq
