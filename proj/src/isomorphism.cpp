#include "netglue/isomorphism.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <tuple>
#include <vector>

namespace netglue {

namespace {

// Iterated color refinement on (self-loop, out-neighbor colors, in-neighbor
// colors). Colors are comparable between the two graphs because both are
// refined inside one disjoint union.
std::vector<std::size_t> refine(const Digraph& g) {
    const std::size_t n = g.size();
    std::vector<std::vector<std::size_t>> in(n);
    for (const auto& [from, to] : g.edges()) in[to].push_back(from);

    std::vector<std::size_t> color(n), next(n);
    for (std::size_t v = 0; v < n; ++v)
        color[v] = g.out_degree(v) * (n + 1) + in[v].size() +
                   (g.has_edge(v, v) ? (n + 1) * (n + 1) : 0);
    for (std::size_t round = 0; round < n; ++round) {
        std::map<std::tuple<std::size_t, std::vector<std::size_t>, std::vector<std::size_t>>,
                 std::size_t> ids;
        for (std::size_t v = 0; v < n; ++v) {
            std::vector<std::size_t> outc, inc;
            for (std::size_t u : g.out_neighbors(v)) outc.push_back(color[u]);
            for (std::size_t u : in[v]) inc.push_back(color[u]);
            std::sort(outc.begin(), outc.end());
            std::sort(inc.begin(), inc.end());
            auto key = std::make_tuple(color[v], std::move(outc), std::move(inc));
            next[v] = ids.emplace(std::move(key), ids.size()).first->second;
        }
        if (next == color) break;
        color = next;
    }
    return color;
}

struct Matcher {
    const Digraph& g;
    const Digraph& h;
    const std::vector<std::size_t>& order;
    const std::vector<std::size_t>& gcolor;
    const std::vector<std::size_t>& hcolor;
    std::vector<std::size_t> mapping;
    std::vector<bool> used;

    bool run(std::size_t pos) {
        if (pos == order.size()) return true;
        const std::size_t v = order[pos];
        for (std::size_t w = 0; w < h.size(); ++w) {
            if (used[w] || gcolor[v] != hcolor[w]) continue;
            bool ok = g.has_edge(v, v) == h.has_edge(w, w);
            for (std::size_t prev = 0; ok && prev < pos; ++prev) {
                const std::size_t pv = order[prev];
                const std::size_t pw = mapping[pv];
                ok = g.has_edge(v, pv) == h.has_edge(w, pw) &&
                     g.has_edge(pv, v) == h.has_edge(pw, w);
            }
            if (!ok) continue;
            mapping[v] = w;
            used[w] = true;
            if (run(pos + 1)) return true;
            used[w] = false;
        }
        return false;
    }
};

}  // namespace

bool isomorphic(const Digraph& g, const Digraph& h, std::size_t max_vertices) {
    if (g.size() > max_vertices || h.size() > max_vertices)
        throw SizeBoundExceeded("isomorphic: graph exceeds configured size bound");
    if (g.size() != h.size() || g.edge_count() != h.edge_count()) return false;
    if (g.size() == 0) return true;

    const std::size_t n = g.size();
    Digraph both = disjoint_union(g, h);
    auto colors = refine(both);
    std::vector<std::size_t> gcolor(colors.begin(), colors.begin() + n);
    std::vector<std::size_t> hcolor(colors.begin() + n, colors.end());

    std::map<std::size_t, long> balance;
    for (std::size_t c : gcolor) ++balance[c];
    for (std::size_t c : hcolor) --balance[c];
    for (const auto& [color, count] : balance)
        if (count != 0) return false;

    std::map<std::size_t, std::size_t> class_size;
    for (std::size_t c : gcolor) ++class_size[c];
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        if (class_size[gcolor[a]] != class_size[gcolor[b]])
            return class_size[gcolor[a]] < class_size[gcolor[b]];
        return a < b;
    });

    Matcher matcher{g, h, order, gcolor, hcolor,
                    std::vector<std::size_t>(n, 0), std::vector<bool>(n, false)};
    return matcher.run(0);
}

}  // namespace netglue
