#include "primegraph/graphcore.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "primegraph/numtheory.hpp"

namespace pg::graphcore {

namespace nt = pg::numtheory;

SimpleGraph::SimpleGraph(std::vector<u64> vertices,
                         const std::vector<std::pair<u64, u64>>& edges)
    : vertices_(std::move(vertices)) {
    std::sort(vertices_.begin(), vertices_.end());
    vertices_.erase(std::unique(vertices_.begin(), vertices_.end()), vertices_.end());
    adj_.assign(vertices_.size() * vertices_.size(), 0);
    for (const auto& [u, v] : edges) add_edge_labels(u, v);
}

std::size_t SimpleGraph::index_of(u64 label) const {
    auto it = std::lower_bound(vertices_.begin(), vertices_.end(), label);
    if (it == vertices_.end() || *it != label)
        throw std::out_of_range("SimpleGraph: no such vertex " + std::to_string(label));
    return static_cast<std::size_t>(it - vertices_.begin());
}

void SimpleGraph::add_edge_labels(u64 u, u64 v) {
    if (u == v) throw std::invalid_argument("SimpleGraph: self-loops are not allowed");
    std::size_t i = index_of(u), j = index_of(v);
    adj_[i * size() + j] = adj_[j * size() + i] = 1;
}

bool SimpleGraph::adjacent_labels(u64 u, u64 v) const {
    return adjacent(index_of(u), index_of(v));
}

std::size_t SimpleGraph::degree(std::size_t i) const {
    std::size_t d = 0;
    for (std::size_t j = 0; j < size(); ++j) d += adj_[i * size() + j];
    return d;
}

std::size_t SimpleGraph::edge_count() const {
    std::size_t total = 0;
    for (std::size_t i = 0; i < size(); ++i) total += degree(i);
    return total / 2;
}

std::vector<std::pair<u64, u64>> SimpleGraph::edges() const {
    std::vector<std::pair<u64, u64>> out;
    for (std::size_t i = 0; i < size(); ++i)
        for (std::size_t j = i + 1; j < size(); ++j)
            if (adjacent(i, j)) out.emplace_back(vertices_[i], vertices_[j]);
    return out;
}

PrimeGraph build_prime_graph(const groupdata::DegreeSet& d) {
    std::vector<u64> verts;
    std::vector<std::vector<u64>> supports;
    for (u64 deg : d.degrees) {
        if (deg == 1) continue;
        std::vector<u64> s;
        for (auto p : nt::prime_support(deg)) s.push_back(static_cast<u64>(p));
        verts.insert(verts.end(), s.begin(), s.end());
        supports.push_back(std::move(s));
    }
    std::vector<std::pair<u64, u64>> edges;
    for (const auto& s : supports)
        for (std::size_t i = 0; i < s.size(); ++i)
            for (std::size_t j = i + 1; j < s.size(); ++j) edges.emplace_back(s[i], s[j]);
    return PrimeGraph{SimpleGraph(std::move(verts), edges), false};
}

DegreeGraph build_degree_graph(const groupdata::DegreeSet& d) {
    std::vector<u64> verts;
    for (u64 deg : d.degrees)
        if (deg > 1) verts.push_back(deg);
    std::vector<std::pair<u64, u64>> edges;
    for (std::size_t i = 0; i < verts.size(); ++i)
        for (std::size_t j = i + 1; j < verts.size(); ++j)
            if (std::gcd(verts[i], verts[j]) > 1) edges.emplace_back(verts[i], verts[j]);
    return DegreeGraph{SimpleGraph(std::move(verts), edges)};
}

PrimeGraph prime_graph_from_edges(const std::vector<u64>& vertices,
                                  const std::vector<std::pair<u64, u64>>& edges) {
    for (u64 v : vertices)
        if (!nt::is_prime(v))
            throw std::invalid_argument("prime graph vertex is not prime: " + std::to_string(v));
    return PrimeGraph{SimpleGraph(vertices, edges), false};
}

PrimeGraph partial_prime_graph(const groupdata::PartialVertexData& data) {
    std::vector<std::pair<u64, u64>> edges;
    for (std::size_t i = 0; i < data.complete_on.size(); ++i)
        for (std::size_t j = i + 1; j < data.complete_on.size(); ++j)
            edges.emplace_back(data.complete_on[i], data.complete_on[j]);
    return PrimeGraph{SimpleGraph(data.vertices, edges), true};
}

std::optional<std::array<u64, 3>> find_triangle(const SimpleGraph& g) {
    // vertices are sorted, so the first hit is lexicographically least
    for (std::size_t i = 0; i < g.size(); ++i)
        for (std::size_t j = i + 1; j < g.size(); ++j) {
            if (!g.adjacent(i, j)) continue;
            for (std::size_t k = j + 1; k < g.size(); ++k)
                if (g.adjacent(i, k) && g.adjacent(j, k))
                    return std::array<u64, 3>{g.vertices()[i], g.vertices()[j], g.vertices()[k]};
        }
    return std::nullopt;
}

std::optional<std::array<u64, 3>> find_triangle(const PrimeGraph& g) {
    auto t = find_triangle(g.graph);
    if (!t && g.partial)
        throw std::logic_error(
            "find_triangle: absence is inconclusive on a partial graph; "
            "use has_triangle_lower_bound");
    return t;
}

std::optional<std::array<u64, 3>> find_triangle(const DegreeGraph& g) {
    return find_triangle(g.graph);
}

bool has_triangle_lower_bound(const PrimeGraph& g) {
    return find_triangle(g.graph).has_value();
}

namespace {
void require_exact(const PrimeGraph& g, const char* op) {
    if (g.partial)
        throw std::invalid_argument(std::string(op) + ": partial graphs are not supported");
}
}  // namespace

std::vector<std::vector<u64>> connected_components(const SimpleGraph& g) {
    std::vector<int> comp(g.size(), -1);
    int ncomp = 0;
    for (std::size_t s = 0; s < g.size(); ++s) {
        if (comp[s] != -1) continue;
        std::vector<std::size_t> stack{s};
        comp[s] = ncomp;
        while (!stack.empty()) {
            std::size_t v = stack.back();
            stack.pop_back();
            for (std::size_t w = 0; w < g.size(); ++w)
                if (g.adjacent(v, w) && comp[w] == -1) {
                    comp[w] = ncomp;
                    stack.push_back(w);
                }
        }
        ++ncomp;
    }
    std::vector<std::vector<u64>> out(ncomp);
    for (std::size_t i = 0; i < g.size(); ++i) out[comp[i]].push_back(g.vertices()[i]);
    // vertices are visited in sorted order, so components come out ordered
    // by least vertex and internally sorted
    return out;
}

std::vector<std::vector<u64>> connected_components(const PrimeGraph& g) {
    require_exact(g, "connected_components");
    return connected_components(g.graph);
}

ShapePredicates shape_predicates(const SimpleGraph& g) {
    ShapePredicates out;
    std::size_t n = g.size();
    if (n == 0) return out;
    bool connected = connected_components(g).size() == 1;
    std::size_t m = g.edge_count();
    if (connected && m == n - 1) {
        out.is_tree = true;
        std::size_t deg_le2 = 0, deg1 = 0;
        for (std::size_t i = 0; i < n; ++i) {
            if (g.degree(i) <= 2) ++deg_le2;
            if (g.degree(i) == 1) ++deg1;
        }
        out.is_path = n == 1 || (deg_le2 == n && deg1 == 2);
    }
    if (connected && n >= 3 && m == n) {
        bool all_deg2 = true;
        for (std::size_t i = 0; i < n; ++i)
            if (g.degree(i) != 2) all_deg2 = false;
        out.is_cycle = all_deg2;
    }
    // complete bipartite check: 2-color greedily, then verify all cross
    // pairs are edges and no side pairs are
    if (connected && n >= 2) {
        std::vector<int> color(n, -1);
        color[0] = 0;
        std::vector<std::size_t> stack{0};
        bool bipartite = true;
        while (!stack.empty() && bipartite) {
            std::size_t v = stack.back();
            stack.pop_back();
            for (std::size_t w = 0; w < n; ++w) {
                if (!g.adjacent(v, w)) continue;
                if (color[w] == -1) {
                    color[w] = 1 - color[v];
                    stack.push_back(w);
                } else if (color[w] == color[v]) {
                    bipartite = false;
                }
            }
        }
        if (bipartite) {
            std::size_t a = 0;
            for (int c : color) a += c == 0;
            std::size_t b = n - a;
            if (m == a * b && a >= 1 && b >= 1)
                out.complete_bipartite = std::make_pair(std::min(a, b), std::max(a, b));
        }
    }
    return out;
}

ShapePredicates shape_predicates(const PrimeGraph& g) {
    require_exact(g, "shape_predicates");
    return shape_predicates(g.graph);
}

bool is_isomorphic(const SimpleGraph& a, const SimpleGraph& b) {
    if (a.size() > 8 || b.size() > 8)
        throw std::invalid_argument("is_isomorphic: graphs larger than 8 vertices are out of scope");
    std::size_t n = a.size();
    if (n != b.size() || a.edge_count() != b.edge_count()) return false;
    std::vector<std::size_t> da(n), db(n);
    for (std::size_t i = 0; i < n; ++i) {
        da[i] = a.degree(i);
        db[i] = b.degree(i);
    }
    auto sa = da, sb = db;
    std::sort(sa.begin(), sa.end());
    std::sort(sb.begin(), sb.end());
    if (sa != sb) return false;
    std::vector<std::size_t> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    do {
        bool ok = true;
        for (std::size_t i = 0; i < n && ok; ++i) {
            if (da[i] != db[perm[i]]) {
                ok = false;
                break;
            }
            for (std::size_t j = i + 1; j < n && ok; ++j)
                if (a.adjacent(i, j) != b.adjacent(perm[i], perm[j])) ok = false;
        }
        if (ok) return true;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return false;
}

bool is_isomorphic(const PrimeGraph& a, const PrimeGraph& b) {
    require_exact(a, "is_isomorphic");
    require_exact(b, "is_isomorphic");
    return is_isomorphic(a.graph, b.graph);
}

SimpleGraph figure_a_template(FigureA which) {
    if (which == FigureA::First) {
        // K_{2,3} with parts {2,3} and {5,7,11} (labels are placeholders)
        return SimpleGraph({2, 3, 5, 7, 11},
                           {{2, 5}, {2, 7}, {2, 11}, {3, 5}, {3, 7}, {3, 11}});
    }
    // isolated vertex plus two disjoint edges
    return SimpleGraph({2, 3, 5, 7, 11}, {{3, 5}, {7, 11}});
}

std::optional<FigureA> figure_a_match(const SimpleGraph& g) {
    if (g.size() != 5) return std::nullopt;
    if (is_isomorphic(g, figure_a_template(FigureA::First))) return FigureA::First;
    if (is_isomorphic(g, figure_a_template(FigureA::Second))) return FigureA::Second;
    return std::nullopt;
}

std::optional<FigureA> figure_a_match(const PrimeGraph& g) {
    require_exact(g, "figure_a_match");
    return figure_a_match(g.graph);
}

std::string figure_a_name(FigureA f) { return f == FigureA::First ? "First" : "Second"; }

namespace {
std::string dot_body(const SimpleGraph& g, bool partial) {
    std::string out = "graph G {\n";
    if (partial) out += "  // partial graph: edges are a lower bound\n";
    for (u64 v : g.vertices()) out += "  " + std::to_string(v) + ";\n";
    for (const auto& [u, v] : g.edges())
        out += "  " + std::to_string(u) + " -- " + std::to_string(v) + ";\n";
    out += "}\n";
    return out;
}
}  // namespace

std::string to_dot(const PrimeGraph& g) { return dot_body(g.graph, g.partial); }
std::string to_dot(const DegreeGraph& g) { return dot_body(g.graph, false); }

std::string to_json(const PrimeGraph& g) {
    std::string out = "{\"vertices\":[";
    bool first = true;
    for (u64 v : g.graph.vertices()) {
        if (!first) out += ',';
        first = false;
        out += std::to_string(v);
    }
    out += "],\"edges\":[";
    first = true;
    for (const auto& [u, v] : g.graph.edges()) {
        if (!first) out += ',';
        first = false;
        out += '[' + std::to_string(u) + ',' + std::to_string(v) + ']';
    }
    out += "],\"partial\":";
    out += g.partial ? "true" : "false";
    out += '}';
    return out;
}

}  // namespace pg::graphcore
