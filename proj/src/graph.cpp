#include "eigraph/graph.hpp"

#include <algorithm>
#include <queue>
#include <sstream>

namespace eigraph {

bool is_essential(const IdealId& a, const FactoredInteger& f) {
    if (is_zero_ideal(a, f))
        throw std::invalid_argument("essentiality undefined for the zero ideal");
    for (std::size_t i = 0; i < a.exponents.size(); ++i)
        if (a.exponents[i] >= f.exponents()[i]) return false;
    return true;
}

bool is_essential_oracle(const IdealId& a, const FactoredInteger& f) {
    if (is_zero_ideal(a, f))
        throw std::invalid_argument("essentiality undefined for the zero ideal");
    validate_ideal(a, f);
    const int k = f.prime_count();
    IdealId l;
    l.exponents.assign(k, 0);
    while (true) {
        if (!is_zero_ideal(l, f)) {
            bool max_is_zero_ideal = true;
            for (int i = 0; i < k; ++i)
                if (std::max(a.exponents[i], l.exponents[i]) < f.exponents()[i])
                    max_is_zero_ideal = false;
            if (max_is_zero_ideal) return false;
        }
        int i = k - 1;
        while (i >= 0 && l.exponents[i] == f.exponents()[i]) {
            l.exponents[i] = 0;
            --i;
        }
        if (i < 0) break;
        ++l.exponents[i];
    }
    return true;
}

bool adjacent(const IdealId& a, const IdealId& b, const FactoredInteger& f) {
    if (a == b) throw std::invalid_argument("adjacency is defined on distinct ideals");
    validate_ideal(a, f);
    validate_ideal(b, f);
    return is_essential(ideal_sum(a, b), f);
}

IdealGraph IdealGraph::build(const BigInt& n, std::size_t max_vertices) {
    return build(factorize(n), max_vertices);
}

IdealGraph IdealGraph::build(const FactoredInteger& f, std::size_t max_vertices) {
    IdealGraph g(f);
    g.vertices_ = enumerate_ideals(f);
    const std::size_t nv = g.vertices_.size();
    if (nv > max_vertices) {
        std::ostringstream msg;
        msg << "graph for n = " << f.value() << " has " << nv
            << " vertices, above the cap of " << max_vertices;
        throw std::invalid_argument(msg.str());
    }
    g.adj_.assign(nv * nv, 0);
    for (std::size_t i = 0; i < nv; ++i) {
        for (std::size_t j = i + 1; j < nv; ++j) {
            if (is_essential(ideal_sum(g.vertices_[i], g.vertices_[j]), f)) {
                g.adj_[i * nv + j] = 1;
                g.adj_[j * nv + i] = 1;
                ++g.edge_count_;
            }
        }
    }
    return g;
}

std::size_t IdealGraph::degree(std::size_t i) const {
    const std::size_t nv = vertices_.size();
    std::size_t d = 0;
    for (std::size_t j = 0; j < nv; ++j) d += adj_[i * nv + j];
    return d;
}

std::vector<double> IdealGraph::adjacency_matrix() const {
    return {adj_.begin(), adj_.end()};
}

std::vector<int> IdealGraph::distance_matrix() const {
    const std::size_t nv = vertices_.size();
    std::vector<int> dist(nv * nv, -1);
    std::vector<std::size_t> frontier;
    for (std::size_t s = 0; s < nv; ++s) {
        dist[s * nv + s] = 0;
        frontier.assign(1, s);
        int d = 0;
        while (!frontier.empty()) {
            ++d;
            std::vector<std::size_t> next;
            for (std::size_t u : frontier) {
                for (std::size_t v = 0; v < nv; ++v) {
                    if (adj_[u * nv + v] && dist[s * nv + v] < 0) {
                        dist[s * nv + v] = d;
                        next.push_back(v);
                    }
                }
            }
            frontier = std::move(next);
        }
    }
    return dist;
}

std::vector<std::size_t> universal_vertices(const IdealGraph& g) {
    std::vector<std::size_t> out;
    const std::size_t nv = g.vertex_count();
    for (std::size_t i = 0; i < nv; ++i)
        if (g.degree(i) == nv - 1) out.push_back(i);
    return out;
}

JoinDecomposition join_decomposition(const IdealGraph& g) {
    JoinDecomposition d;
    const std::size_t nv = g.vertex_count();
    std::vector<char> in_clique(nv, 0);
    for (std::size_t i = 0; i < nv; ++i) {
        if (is_essential(g.vertices()[i], g.ring())) {
            d.clique.push_back(i);
            in_clique[i] = 1;
        } else {
            d.rest.push_back(i);
        }
    }
    std::size_t expected = 1;
    for (int m : g.ring().exponents()) expected *= static_cast<std::size_t>(m);
    expected -= 1;
    if (d.clique.size() != expected)
        throw structure_error("clique size disagrees with prod(m_i) - 1");
    for (std::size_t i : d.clique)
        if (g.degree(i) != nv - 1)
            throw structure_error("essential vertex is not universal");
    for (std::size_t i : d.clique)
        for (std::size_t j : d.clique)
            if (i != j && !g.edge(i, j))
                throw structure_error("essential vertices fail to form a clique");
    d.clique_size = d.clique.size();
    return d;
}

VertexPartition equitable_partition(const IdealGraph& g) {
    if (!g.ring().squarefree())
        throw std::invalid_argument("partition defined only for squarefree n");
    const int k = g.ring().prime_count();
    VertexPartition p;
    p.classes.assign(static_cast<std::size_t>(k - 1), {});
    for (std::size_t i = 0; i < g.vertex_count(); ++i) {
        int t = g.vertices()[i].support_size();
        p.classes[static_cast<std::size_t>(t - 1)].push_back(i);
    }
    p.neighbor_counts.assign(static_cast<std::size_t>(k - 1),
                             std::vector<std::size_t>(static_cast<std::size_t>(k - 1), 0));
    for (int t = 1; t <= k - 1; ++t) {
        // Every vertex of V_t must see the same number of vertices in each V_s.
        for (int s = 1; s <= k - 1; ++s) {
            std::size_t count = 0;
            bool first = true;
            for (std::size_t i : p.classes[static_cast<std::size_t>(t - 1)]) {
                std::size_t c = 0;
                for (std::size_t j : p.classes[static_cast<std::size_t>(s - 1)])
                    if (i != j && g.edge(i, j)) ++c;
                if (first) {
                    count = c;
                    first = false;
                } else if (c != count) {
                    throw structure_error("support classes are not equitable");
                }
            }
            p.neighbor_counts[static_cast<std::size_t>(t - 1)]
                             [static_cast<std::size_t>(s - 1)] = count;
        }
    }
    return p;
}

} // namespace eigraph
