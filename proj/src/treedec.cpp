#include "netglue/treedec.hpp"

#include <algorithm>
#include <unordered_map>
#include <unordered_set>

namespace netglue {

TreeDecomp::TreeDecomp(std::vector<std::string> nodes,
                       std::map<std::string, std::string> parent,
                       std::map<std::string, std::vector<std::string>> bags,
                       std::string root,
                       std::string designated_leaf)
    : nodes_(std::move(nodes)),
      parent_(std::move(parent)),
      bags_(std::move(bags)),
      root_(std::move(root)),
      leaf_(std::move(designated_leaf)) {
    std::unordered_set<std::string> node_set;
    for (const auto& n : nodes_) {
        if (!node_set.insert(n).second) throw InvalidNode("duplicate node: " + n);
        if (!bags_.count(n)) throw InvalidNode("node without a bag: " + n);
    }
    if (bags_.size() != nodes_.size()) throw InvalidNode("bag for unknown node");
    if (!node_set.count(root_)) throw InvalidNode("root is not a node");
    if (!node_set.count(leaf_)) throw InvalidNode("designated leaf is not a node");
    if (parent_.count(root_)) throw InvalidNode("root must not have a parent");

    for (const auto& n : nodes_) {
        if (n == root_) continue;
        auto it = parent_.find(n);
        if (it == parent_.end()) throw InvalidNode("non-root node without parent: " + n);
        if (!node_set.count(it->second)) throw InvalidNode("parent is not a node: " + it->second);
        children_[it->second].push_back(n);
    }
    // Rooted tree: every node reaches the root without repetition.
    for (const auto& n : nodes_) {
        std::unordered_set<std::string> seen;
        std::string cur = n;
        while (cur != root_) {
            if (!seen.insert(cur).second) throw InvalidNode("parent map has a cycle at: " + cur);
            cur = parent_.at(cur);
        }
    }
    if (!children(leaf_).empty()) throw InvalidNode("designated leaf has children");

    bag_size_ = bags_.begin()->second.size();
    for (const auto& [node, bag] : bags_) {
        if (bag.size() != bag_size_)
            throw InvalidNode("non-uniform bag size at node: " + node);
        std::unordered_set<std::string> in_bag(bag.begin(), bag.end());
        if (in_bag.size() != bag.size())
            throw InvalidNode("repeated vertex in bag of node: " + node);
    }
}

const std::vector<std::string>& TreeDecomp::bag(const std::string& node) const {
    auto it = bags_.find(node);
    if (it == bags_.end()) throw InvalidNode("unknown node: " + node);
    return it->second;
}

const std::vector<std::string>& TreeDecomp::children(const std::string& node) const {
    static const std::vector<std::string> kEmpty;
    auto it = children_.find(node);
    return it == children_.end() ? kEmpty : it->second;
}

std::vector<std::string> TreeDecomp::subtree(const std::string& node) const {
    if (!has_node(node)) throw InvalidNode("unknown node: " + node);
    std::vector<std::string> out, stack{node};
    while (!stack.empty()) {
        std::string cur = stack.back();
        stack.pop_back();
        out.push_back(cur);
        const auto& kids = children(cur);
        for (auto it = kids.rbegin(); it != kids.rend(); ++it) stack.push_back(*it);
    }
    return out;
}

std::vector<std::string> TreeDecomp::bag_union(const std::vector<std::string>& nodes) const {
    std::vector<std::string> out;
    std::unordered_set<std::string> seen;
    for (const auto& n : nodes)
        for (const auto& v : bag(n))
            if (seen.insert(v).second) out.push_back(v);
    return out;
}

std::size_t width(const TreeDecomp& t) {
    return t.bag_size() == 0 ? 0 : t.bag_size() - 1;
}

bool is_valid_decomposition(const TreeDecomp& t, const Digraph& g) {
    std::unordered_map<std::string, std::vector<std::string>> occurrences;
    for (const auto& n : t.nodes())
        for (const auto& v : t.bag(n)) occurrences[v].push_back(n);

    // 1. every vertex in some bag
    for (const auto& v : g.vertices())
        if (!occurrences.count(v)) return false;

    // 2. every edge within some bag
    for (const auto& [from, to] : g.edge_ids()) {
        bool covered = false;
        for (const auto& n : t.nodes()) {
            const auto& bag = t.bag(n);
            bool has_from = std::find(bag.begin(), bag.end(), from) != bag.end();
            bool has_to = std::find(bag.begin(), bag.end(), to) != bag.end();
            if (has_from && has_to) {
                covered = true;
                break;
            }
        }
        if (!covered) return false;
    }

    // 3. occurrence nodes of each vertex induce a connected subtree: walking
    // from each occurrence toward the root stays inside the occurrence set
    // until the topmost occurrence is reached.
    for (const auto& [vertex, nodes] : occurrences) {
        (void)vertex;
        std::unordered_set<std::string> occ(nodes.begin(), nodes.end());
        // topmost occurrence: the one whose parent is absent or not in occ
        std::string top;
        std::size_t top_count = 0;
        for (const auto& n : nodes) {
            auto it = t.parent().find(n);
            if (it == t.parent().end() || !occ.count(it->second)) {
                top = n;
                ++top_count;
            }
        }
        if (top_count != 1) return false;
    }
    return true;
}

TreeDecomp glue_td(const TreeDecomp& left, const TreeDecomp& right) {
    if (left.bag_size() != right.bag_size())
        throw WidthMismatch("glue_td: operands have different bag sizes");
    const auto& leaf_bag = left.bag(left.designated_leaf());
    const auto& root_bag = right.bag(right.root());

    // Positional vertex substitution B(right root) <- B(left leaf), with the
    // same suffix policy as graph gluing so Remark-2 pairings stay aligned.
    std::unordered_map<std::string, std::string> vsub;
    for (std::size_t i = 0; i < root_bag.size(); ++i) vsub[root_bag[i]] = leaf_bag[i];

    std::unordered_map<std::string, std::size_t> left_vertices;
    for (const auto& n : left.nodes())
        for (const auto& v : left.bag(n)) left_vertices.emplace(v, 0);
    std::vector<std::string> fresh_vertices;
    {
        std::unordered_set<std::string> seen;
        for (const auto& n : right.nodes())
            for (const auto& v : right.bag(n))
                if (!vsub.count(v) && seen.insert(v).second) fresh_vertices.push_back(v);
    }
    const std::string vsuffix = disambiguating_suffix(fresh_vertices, left_vertices);
    for (const auto& v : fresh_vertices) vsub[v] = v + vsuffix;

    // Node renaming: right's root merges into left's designated leaf; other
    // right nodes are suffixed on clash.
    std::unordered_map<std::string, std::string> nsub;
    nsub[right.root()] = left.designated_leaf();
    std::unordered_map<std::string, std::size_t> left_nodes;
    for (const auto& n : left.nodes()) left_nodes.emplace(n, 0);
    std::vector<std::string> fresh_nodes;
    for (const auto& n : right.nodes())
        if (n != right.root()) fresh_nodes.push_back(n);
    const std::string nsuffix = disambiguating_suffix(fresh_nodes, left_nodes);
    for (const auto& n : fresh_nodes) nsub[n] = n + nsuffix;

    std::vector<std::string> nodes = left.nodes();
    for (const auto& n : fresh_nodes) nodes.push_back(nsub[n]);

    std::map<std::string, std::string> parent = left.parent();
    for (const auto& n : fresh_nodes) parent[nsub[n]] = nsub.at(right.parent().at(n));

    std::map<std::string, std::vector<std::string>> bags;
    for (const auto& n : left.nodes()) bags[n] = left.bag(n);
    for (const auto& n : fresh_nodes) {
        std::vector<std::string> bag;
        bag.reserve(right.bag(n).size());
        for (const auto& v : right.bag(n)) bag.push_back(vsub.at(v));
        bags[nsub[n]] = std::move(bag);
    }

    std::string new_leaf = nsub.at(right.designated_leaf());
    return TreeDecomp(std::move(nodes), std::move(parent), std::move(bags),
                      left.root(), std::move(new_leaf));
}

TreeDecomp lambda(const DecompFamily& family, const Word& word) {
    if (word.empty()) throw UnknownSymbol("lambda: empty word");
    auto member = [&family](char symbol) -> const TreeDecomp& {
        auto it = family.members.find(symbol);
        if (it == family.members.end())
            throw UnknownSymbol(std::string("lambda: no family member '") + symbol + "'");
        return it->second;
    };
    TreeDecomp acc = member(word[0]);
    for (std::size_t i = 1; i < word.size(); ++i) acc = glue_td(acc, member(word[i]));
    return acc;
}

DecompFamily::DecompFamily(std::map<char, TreeDecomp> members_in)
    : members(std::move(members_in)) {
    if (!members.empty()) {
        width = netglue::width(members.begin()->second);
        for (const auto& [symbol, member] : members) {
            if (netglue::width(member) != width)
                throw WidthMismatch(std::string("family member '") + symbol +
                                    "' has mismatched width");
        }
    }
}

PortedGraph boundaried_subgraph(const TreeDecomp& t, const Digraph& g, const std::string& v) {
    if (!t.has_node(v)) throw InvalidNode("boundaried_subgraph: unknown node " + v);
    return region_subgraph(t, g, t.subtree(v), t.bag(v), t.bag(v));
}

PortedGraph region_subgraph(const TreeDecomp& t, const Digraph& g,
                            const std::vector<std::string>& nodes,
                            const std::vector<std::string>& primary_bag,
                            const std::vector<std::string>& secondary_bag) {
    auto vertex_ids = t.bag_union(nodes);
    std::vector<std::size_t> keep;
    keep.reserve(vertex_ids.size());
    for (const auto& id : vertex_ids) keep.push_back(g.index_of(id));
    return PortedGraph(g.induced(keep), primary_bag, secondary_bag);
}

bool n_equal(const PortedGraph& a, const PortedGraph& b) {
    if (a.primary_ports() != b.primary_ports()) return false;
    if (a.secondary_ports() != b.secondary_ports()) return false;
    auto va = a.graph().vertices();
    auto vb = b.graph().vertices();
    std::sort(va.begin(), va.end());
    std::sort(vb.begin(), vb.end());
    if (va != vb) return false;
    auto ea = a.graph().edge_ids();
    auto eb = b.graph().edge_ids();
    std::sort(ea.begin(), ea.end());
    std::sort(eb.begin(), eb.end());
    return ea == eb;
}

std::size_t n_length(const TreeDecomp& t, const Digraph& g,
                     const std::vector<std::string>& path) {
    if (path.empty()) throw InvalidPath("n_length: empty path");
    for (std::size_t i = 0; i + 1 < path.size(); ++i) {
        auto it = t.parent().find(path[i + 1]);
        if (it == t.parent().end() || it->second != path[i])
            throw InvalidPath("n_length: not a directed path in the tree");
    }
    std::vector<PortedGraph> distinct;
    for (const auto& node : path) {
        PortedGraph n = boundaried_subgraph(t, g, node);
        bool seen = false;
        for (const auto& d : distinct)
            if (n_equal(d, n)) {
                seen = true;
                break;
            }
        if (!seen) distinct.push_back(std::move(n));
    }
    return distinct.size();
}

bool remark2_check(const GadgetFamily& gamma, const DecompFamily& tfam, const Word& word) {
    if (gamma.members.size() != tfam.members.size())
        throw FamilyMismatch("remark2_check: families have different index sets");
    for (const auto& [symbol, g] : gamma.members) {
        auto it = tfam.members.find(symbol);
        if (it == tfam.members.end())
            throw FamilyMismatch(std::string("remark2_check: no decomposition for '") +
                                 symbol + "'");
        const TreeDecomp& t = it->second;
        if (t.bag(t.root()) != g.primary_ports() ||
            t.bag(t.designated_leaf()) != g.secondary_ports())
            throw FamilyMismatch(std::string("remark2_check: bag/port convention broken at '") +
                                 symbol + "'");
    }
    return is_valid_decomposition(lambda(tfam, word), delta(gamma, word).graph());
}

}  // namespace netglue
