#ifndef NETGLUE_TEST_HELPERS_HPP
#define NETGLUE_TEST_HELPERS_HPP

#include <map>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "netglue/ported.hpp"
#include "netglue/treedec.hpp"

namespace netglue::testing {

using Rng = std::mt19937_64;

inline std::size_t pick(Rng& rng, std::size_t bound) {
    return std::uniform_int_distribution<std::size_t>(0, bound - 1)(rng);
}

inline Digraph random_digraph(Rng& rng, std::size_t n, double edge_prob = 0.3) {
    std::vector<std::string> verts;
    for (std::size_t i = 0; i < n; ++i) verts.push_back("v" + std::to_string(i));
    std::vector<std::pair<std::string, std::string>> edges;
    std::bernoulli_distribution flip(edge_prob);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (flip(rng)) edges.emplace_back(verts[i], verts[j]);
    return Digraph(std::move(verts), std::move(edges));
}

inline Digraph random_functional_digraph(Rng& rng, std::size_t n) {
    std::vector<std::string> verts;
    for (std::size_t i = 0; i < n; ++i) verts.push_back("v" + std::to_string(i));
    std::vector<std::pair<std::string, std::string>> edges;
    for (std::size_t i = 0; i < n; ++i) edges.emplace_back(verts[i], verts[pick(rng, n)]);
    return Digraph(std::move(verts), std::move(edges));
}

inline std::vector<std::string> sample_distinct(Rng& rng,
                                                const std::vector<std::string>& pool,
                                                std::size_t count) {
    std::vector<std::string> out = pool;
    for (std::size_t i = 0; i < count; ++i) std::swap(out[i], out[i + pick(rng, out.size() - i)]);
    out.resize(count);
    return out;
}

inline PortedGraph random_ported(Rng& rng, std::size_t k, std::size_t extra) {
    const std::size_t n = k + extra;
    Digraph g = random_digraph(rng, n == 0 ? 1 : n);
    std::vector<std::string> pool = g.vertices();
    auto primary = sample_distinct(rng, pool, k);
    auto secondary = sample_distinct(rng, pool, k);
    return PortedGraph(std::move(g), std::move(primary), std::move(secondary));
}

/// A matched (gadget, decomposition) pair built top-down so the decomposition
/// is valid by construction: every child bag replaces a random subset of its
/// parent's positions with fresh vertices, and the graph's edges all stay
/// inside some bag.
struct PairedMember {
    PortedGraph gadget;
    TreeDecomp decomp;
};

inline PairedMember random_paired_member(Rng& rng, std::size_t bag_size, char tag) {
    const std::size_t node_count = 1 + pick(rng, 4);
    std::vector<std::string> nodes;
    std::map<std::string, std::string> parent;
    std::map<std::string, std::vector<std::string>> bags;

    std::size_t next_vertex = 0;
    auto fresh_vertex = [&]() {
        return std::string(1, tag) + "_" + std::to_string(next_vertex++);
    };

    std::vector<std::string> current_bag;
    for (std::size_t i = 0; i < bag_size; ++i) current_bag.push_back(fresh_vertex());

    for (std::size_t i = 0; i < node_count; ++i) {
        std::string node = std::string(1, tag) + "n" + std::to_string(i);
        nodes.push_back(node);
        if (i > 0) {
            parent[node] = nodes[i - 1];
            for (std::size_t pos = 0; pos < bag_size; ++pos)
                if (pick(rng, 2) == 0) current_bag[pos] = fresh_vertex();
        }
        bags[node] = current_bag;
    }

    std::vector<std::string> verts;
    {
        std::set<std::string> seen;
        for (const auto& [node, bag] : bags)
            for (const auto& v : bag)
                if (seen.insert(v).second) verts.push_back(v);
    }
    std::vector<std::pair<std::string, std::string>> edges;
    std::set<std::pair<std::string, std::string>> edge_set;
    for (const auto& [node, bag] : bags)
        for (const auto& u : bag)
            for (const auto& v : bag)
                if (pick(rng, 4) == 0 && edge_set.emplace(u, v).second)
                    edges.emplace_back(u, v);

    Digraph g(verts, edges);
    TreeDecomp t(nodes, parent, bags, nodes.front(), nodes.back());
    PortedGraph pg(std::move(g), t.bag(t.root()), t.bag(t.designated_leaf()));
    return PairedMember{std::move(pg), std::move(t)};
}

struct PairedFamily {
    GadgetFamily gadgets;
    DecompFamily decomps;
};

inline PairedFamily random_paired_family(Rng& rng, std::size_t member_count = 2) {
    const std::size_t bag_size = 1 + pick(rng, 3);
    std::map<char, PortedGraph> gs;
    std::map<char, TreeDecomp> ts;
    for (std::size_t i = 0; i < member_count; ++i) {
        const char tag = static_cast<char>('1' + i);
        auto member = random_paired_member(rng, bag_size, tag);
        gs.emplace(tag, std::move(member.gadget));
        ts.emplace(tag, std::move(member.decomp));
    }
    return PairedFamily{GadgetFamily(std::move(gs)), DecompFamily(std::move(ts))};
}

inline Word random_word(Rng& rng, std::size_t member_count, std::size_t max_len = 5) {
    const std::size_t len = 1 + pick(rng, max_len);
    Word w;
    for (std::size_t i = 0; i < len; ++i)
        w.push_back(static_cast<char>('1' + pick(rng, member_count)));
    return w;
}

/// Relabel a digraph by a random vertex permutation.
inline Digraph relabel(Rng& rng, const Digraph& g) {
    std::vector<std::size_t> perm(g.size());
    for (std::size_t i = 0; i < perm.size(); ++i) perm[i] = i;
    for (std::size_t i = 0; i + 1 < perm.size(); ++i)
        std::swap(perm[i], perm[i + pick(rng, perm.size() - i)]);
    std::vector<std::string> new_name(g.size());
    std::vector<std::string> ordered(g.size());
    for (std::size_t i = 0; i < g.size(); ++i) {
        new_name[i] = "r" + std::to_string(perm[i]);
        ordered[perm[i]] = new_name[i];
    }
    std::vector<std::pair<std::string, std::string>> edges;
    for (const auto& [from, to] : g.edges()) edges.emplace_back(new_name[from], new_name[to]);
    return Digraph(std::move(ordered), std::move(edges));
}

}  // namespace netglue::testing

#endif
