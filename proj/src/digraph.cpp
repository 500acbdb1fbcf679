#include "netglue/digraph.hpp"

#include <algorithm>

namespace netglue {

Digraph::Digraph(std::vector<std::string> vertices,
                 std::vector<std::pair<std::string, std::string>> edges)
    : vertices_(std::move(vertices)) {
    index_.reserve(vertices_.size());
    for (std::size_t i = 0; i < vertices_.size(); ++i) {
        if (!index_.emplace(vertices_[i], i).second)
            throw GraphError("duplicate vertex identifier: " + vertices_[i]);
    }
    edges_.reserve(edges.size());
    for (const auto& [from, to] : edges) {
        auto fi = index_.find(from);
        auto ti = index_.find(to);
        if (fi == index_.end() || ti == index_.end())
            throw GraphError("edge endpoint is not a listed vertex: (" + from + ", " + to + ")");
        edges_.emplace_back(fi->second, ti->second);
    }
    std::sort(edges_.begin(), edges_.end());
    edges_.erase(std::unique(edges_.begin(), edges_.end()), edges_.end());
    adjacency_.assign(vertices_.size(), {});
    for (const auto& [from, to] : edges_) adjacency_[from].push_back(to);
}

std::size_t Digraph::index_of(const std::string& id) const {
    auto it = index_.find(id);
    if (it == index_.end()) throw GraphError("unknown vertex: " + id);
    return it->second;
}

std::vector<std::pair<std::string, std::string>> Digraph::edge_ids() const {
    std::vector<std::pair<std::string, std::string>> out;
    out.reserve(edges_.size());
    for (const auto& [from, to] : edges_) out.emplace_back(vertices_[from], vertices_[to]);
    return out;
}

bool Digraph::has_edge(std::size_t from, std::size_t to) const {
    const auto& row = adjacency_[from];
    return std::binary_search(row.begin(), row.end(), to);
}

std::vector<std::size_t> Digraph::in_degrees() const {
    std::vector<std::size_t> in(vertices_.size(), 0);
    for (const auto& [from, to] : edges_) {
        (void)from;
        ++in[to];
    }
    return in;
}

Digraph Digraph::induced(const std::vector<std::size_t>& keep) const {
    std::vector<std::string> verts;
    verts.reserve(keep.size());
    std::vector<bool> selected(vertices_.size(), false);
    for (std::size_t idx : keep) selected[idx] = true;
    for (std::size_t i = 0; i < vertices_.size(); ++i)
        if (selected[i]) verts.push_back(vertices_[i]);
    std::vector<std::pair<std::string, std::string>> es;
    for (const auto& [from, to] : edges_)
        if (selected[from] && selected[to]) es.emplace_back(vertices_[from], vertices_[to]);
    return Digraph(std::move(verts), std::move(es));
}

std::string disambiguating_suffix(const std::vector<std::string>& candidates,
                                  const std::unordered_map<std::string, std::size_t>& taken) {
    std::string suffix;
    for (;;) {
        bool clash = false;
        for (const auto& name : candidates) {
            if (taken.count(name + suffix)) {
                clash = true;
                break;
            }
        }
        if (!clash) return suffix;
        suffix += "'";
    }
}

Digraph disjoint_union(const Digraph& a, const Digraph& b) {
    std::vector<std::string> right_names;
    right_names.reserve(b.size());
    for (const auto& v : b.vertices()) right_names.push_back(v);
    const std::string suffix = disambiguating_suffix(right_names, a.index_);

    std::vector<std::string> verts = a.vertices();
    for (const auto& v : b.vertices()) verts.push_back(v + suffix);
    std::vector<std::pair<std::string, std::string>> es = a.edge_ids();
    for (const auto& [from, to] : b.edge_ids()) es.emplace_back(from + suffix, to + suffix);
    return Digraph(std::move(verts), std::move(es));
}

bool out_degree_exactly(const Digraph& g, std::size_t degree) {
    for (std::size_t v = 0; v < g.size(); ++v)
        if (g.out_degree(v) != degree) return false;
    return true;
}

}  // namespace netglue
