#ifndef PRIMEGRAPH_GRAPHCORE_HPP
#define PRIMEGRAPH_GRAPHCORE_HPP

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "primegraph/groupdata.hpp"

namespace pg::graphcore {

using u64 = std::uint64_t;

/// Undirected simple graph on sorted integer labels, dense symmetric
/// adjacency. Small by construction (a few dozen vertices at most).
class SimpleGraph {
public:
    SimpleGraph() = default;
    SimpleGraph(std::vector<u64> vertices, const std::vector<std::pair<u64, u64>>& edges);

    std::size_t size() const { return vertices_.size(); }
    const std::vector<u64>& vertices() const { return vertices_; }
    bool adjacent(std::size_t i, std::size_t j) const { return adj_[i * size() + j]; }
    bool adjacent_labels(u64 u, u64 v) const;
    std::size_t index_of(u64 label) const;  // throws if absent
    std::size_t degree(std::size_t i) const;
    std::size_t edge_count() const;
    std::vector<std::pair<u64, u64>> edges() const;  // sorted pairs (u < v)

    void add_edge_labels(u64 u, u64 v);

private:
    std::vector<u64> vertices_;
    std::vector<std::uint8_t> adj_;
};

/// Delta(G): vertices are the primes dividing some degree, u ~ v iff uv
/// divides some degree. A partial graph records a lower bound on edges.
struct PrimeGraph {
    SimpleGraph graph;
    bool partial = false;
};

/// Gamma(G): vertices cd(G) - {1}, a ~ b iff gcd(a, b) > 1.
struct DegreeGraph {
    SimpleGraph graph;
};

PrimeGraph build_prime_graph(const groupdata::DegreeSet& d);
DegreeGraph build_degree_graph(const groupdata::DegreeSet& d);

/// Prime graph from an explicit edge list; every vertex must be prime.
PrimeGraph prime_graph_from_edges(const std::vector<u64>& vertices,
                                  const std::vector<std::pair<u64, u64>>& edges);

/// Partial prime graph: a clique on complete_on, all other pairs unknown.
PrimeGraph partial_prime_graph(const groupdata::PartialVertexData& data);

/// Lexicographically least triangle, or nullopt. On a partial graph a
/// found triangle is conclusive; reporting absence is a contract error
/// (use has_triangle_lower_bound).
std::optional<std::array<u64, 3>> find_triangle(const SimpleGraph& g);
std::optional<std::array<u64, 3>> find_triangle(const PrimeGraph& g);
std::optional<std::array<u64, 3>> find_triangle(const DegreeGraph& g);

/// True if the recorded (lower-bound) edges of a partial graph already
/// contain a triangle.
bool has_triangle_lower_bound(const PrimeGraph& g);

/// Connected components, each sorted, ordered by least vertex.
std::vector<std::vector<u64>> connected_components(const SimpleGraph& g);
std::vector<std::vector<u64>> connected_components(const PrimeGraph& g);  // rejects partial

struct ShapePredicates {
    bool is_cycle = false;  // a single cycle on >= 3 vertices
    bool is_tree = false;   // connected and acyclic
    bool is_path = false;
    std::optional<std::pair<std::size_t, std::size_t>> complete_bipartite;  // (m, n), m <= n
};

ShapePredicates shape_predicates(const SimpleGraph& g);
ShapePredicates shape_predicates(const PrimeGraph& g);  // rejects partial

/// Brute-force isomorphism with a degree-sequence prefilter; both graphs
/// must have at most 8 vertices.
bool is_isomorphic(const SimpleGraph& a, const SimpleGraph& b);
bool is_isomorphic(const PrimeGraph& a, const PrimeGraph& b);  // rejects partial

enum class FigureA { First, Second };

/// First: K_{2,3}. Second: an isolated vertex plus two disjoint edges.
std::optional<FigureA> figure_a_match(const SimpleGraph& g);
std::optional<FigureA> figure_a_match(const PrimeGraph& g);  // rejects partial

std::string figure_a_name(FigureA f);

/// Label-preserving templates of the two Figure A graphs, for tests and
/// the classifier.
SimpleGraph figure_a_template(FigureA which);

std::string to_dot(const PrimeGraph& g);
std::string to_dot(const DegreeGraph& g);

/// {"vertices":[...],"edges":[[u,v],...],"partial":bool}
std::string to_json(const PrimeGraph& g);

}  // namespace pg::graphcore

#endif
