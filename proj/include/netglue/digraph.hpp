#ifndef NETGLUE_DIGRAPH_HPP
#define NETGLUE_DIGRAPH_HPP

#include <cstddef>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "netglue/errors.hpp"

namespace netglue {

/// Finite directed graph over opaque string vertex identifiers.
/// The vertex order given at construction is canonical (it is used for
/// configuration indexing in the network modules). Immutable once built.
class Digraph {
public:
    Digraph() = default;
    Digraph(std::vector<std::string> vertices,
            std::vector<std::pair<std::string, std::string>> edges);

    std::size_t size() const { return vertices_.size(); }
    std::size_t edge_count() const { return edges_.size(); }
    const std::vector<std::string>& vertices() const { return vertices_; }
    const std::string& vertex(std::size_t index) const { return vertices_[index]; }

    bool has_vertex(const std::string& id) const { return index_.count(id) != 0; }
    std::size_t index_of(const std::string& id) const;

    /// Edges as index pairs, sorted lexicographically.
    const std::vector<std::pair<std::size_t, std::size_t>>& edges() const { return edges_; }
    std::vector<std::pair<std::string, std::string>> edge_ids() const;

    bool has_edge(std::size_t from, std::size_t to) const;
    const std::vector<std::size_t>& out_neighbors(std::size_t v) const { return adjacency_[v]; }
    std::size_t out_degree(std::size_t v) const { return adjacency_[v].size(); }
    std::vector<std::size_t> in_degrees() const;

    /// Induced subgraph on the given vertex indices, keeping canonical order.
    Digraph induced(const std::vector<std::size_t>& keep) const;

    /// Disjoint union; right-hand vertices are suffixed on identifier clash.
    friend Digraph disjoint_union(const Digraph& a, const Digraph& b);

    bool operator==(const Digraph& other) const {
        return vertices_ == other.vertices_ && edges_ == other.edges_;
    }

private:
    std::vector<std::string> vertices_;
    std::unordered_map<std::string, std::size_t> index_;
    std::vector<std::pair<std::size_t, std::size_t>> edges_;
    std::vector<std::vector<std::size_t>> adjacency_;
};

/// True iff every vertex has exactly `degree` out-neighbors.
bool out_degree_exactly(const Digraph& g, std::size_t degree);

/// Picks a fresh suffix made of apostrophes so that every candidate name,
/// once suffixed, avoids the taken set. Shared by graph and decomposition
/// gluing so the two stay aligned on renamed identifiers.
std::string disambiguating_suffix(const std::vector<std::string>& candidates,
                                  const std::unordered_map<std::string, std::size_t>& taken);

}  // namespace netglue

#endif
