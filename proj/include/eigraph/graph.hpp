#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "eigraph/ring.hpp"

namespace eigraph {

// Raised when a structural guarantee of the graph family fails to hold.
class structure_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// An ideal sum I + K is essential when it is contained in every maximal ideal
// complement, which for Z_n means every exponent of the sum stays strictly
// below the corresponding exponent of n.  The unit ideal passes this test.
// The zero ideal is rejected.
bool is_essential(const IdealId& a, const FactoredInteger& f);

// Brute-force essentiality: intersects every nonzero ideal nontrivially,
// i.e. no nonzero L has componentwise max(a, L) equal to the zero ideal.
// Exists to validate is_essential, not for production use.
bool is_essential_oracle(const IdealId& a, const FactoredInteger& f);

// Two distinct proper nonzero ideals are adjacent when their sum is essential.
bool adjacent(const IdealId& a, const IdealId& b, const FactoredInteger& f);

class IdealGraph {
public:
    // Builds the graph on the nonzero proper ideals of Z_n in canonical order:
    // support size ascending, then exponent vectors ascending lexicographically.
    static IdealGraph build(const BigInt& n, std::size_t max_vertices = 4096);
    static IdealGraph build(const FactoredInteger& f, std::size_t max_vertices = 4096);

    const FactoredInteger& ring() const { return ring_; }
    const std::vector<IdealId>& vertices() const { return vertices_; }
    std::size_t vertex_count() const { return vertices_.size(); }
    std::size_t edge_count() const { return edge_count_; }

    bool edge(std::size_t i, std::size_t j) const {
        return adj_[i * vertices_.size() + j] != 0;
    }
    std::size_t degree(std::size_t i) const;

    // Dense 0/1 adjacency matrix in row-major order.
    std::vector<double> adjacency_matrix() const;

    // BFS from every vertex; entries are hop counts, -1 when unreachable.
    std::vector<int> distance_matrix() const;

private:
    FactoredInteger ring_;
    std::vector<IdealId> vertices_;
    std::vector<std::uint8_t> adj_;
    std::size_t edge_count_ = 0;

    explicit IdealGraph(FactoredInteger f) : ring_(std::move(f)) {}
};

// Vertices adjacent to every other vertex.  These are exactly the ideals whose
// exponents are all strictly below those of n, and they form a clique.
std::vector<std::size_t> universal_vertices(const IdealGraph& g);

// Split of the vertex set as (join of the rest) + (clique on the universal
// vertices).  clique_size is prod(m_i) - 1.
struct JoinDecomposition {
    std::vector<std::size_t> clique;
    std::vector<std::size_t> rest;
    std::size_t clique_size = 0;
};

// Verifies the join structure on the way out; throws structure_error if any
// claimed clique vertex misses a neighbour or the clique size is off.
JoinDecomposition join_decomposition(const IdealGraph& g);

// For squarefree n the vertices split by support size into classes V_t of
// size C(k,t), and each vertex of V_t sees exactly C(k-t,s) vertices of V_s.
struct VertexPartition {
    std::vector<std::vector<std::size_t>> classes;   // classes[t-1] = V_t
    std::vector<std::vector<std::size_t>> neighbor_counts; // [t-1][s-1]
};

VertexPartition equitable_partition(const IdealGraph& g);

} // namespace eigraph
