#ifndef NETGLUE_TREEDEC_HPP
#define NETGLUE_TREEDEC_HPP

#include <map>
#include <string>
#include <vector>

#include "netglue/ported.hpp"

namespace netglue {

/// Rooted tree decomposition with ordered bags of uniform size k+1.
/// The root bag and the designated leaf bag act as primary and secondary
/// ports for decomposition gluing.
class TreeDecomp {
public:
    TreeDecomp() = default;
    TreeDecomp(std::vector<std::string> nodes,
               std::map<std::string, std::string> parent,
               std::map<std::string, std::vector<std::string>> bags,
               std::string root,
               std::string designated_leaf);

    const std::vector<std::string>& nodes() const { return nodes_; }
    const std::map<std::string, std::string>& parent() const { return parent_; }
    const std::vector<std::string>& bag(const std::string& node) const;
    const std::string& root() const { return root_; }
    const std::string& designated_leaf() const { return leaf_; }
    std::size_t bag_size() const { return bag_size_; }
    bool has_node(const std::string& node) const { return bags_.count(node) != 0; }

    const std::vector<std::string>& children(const std::string& node) const;
    /// Nodes of the subtree rooted at `node`, in preorder.
    std::vector<std::string> subtree(const std::string& node) const;
    /// Vertices appearing in the bags of the given nodes, in first-seen order.
    std::vector<std::string> bag_union(const std::vector<std::string>& nodes) const;

private:
    std::vector<std::string> nodes_;
    std::map<std::string, std::string> parent_;
    std::map<std::string, std::vector<std::string>> bags_;
    std::map<std::string, std::vector<std::string>> children_;
    std::string root_;
    std::string leaf_;
    std::size_t bag_size_ = 0;
};

struct DecompFamily {
    std::size_t width = 0;
    std::map<char, TreeDecomp> members;

    DecompFamily() = default;
    explicit DecompFamily(std::map<char, TreeDecomp> members_in);
};

std::size_t width(const TreeDecomp& t);

/// The three tree-decomposition conditions: vertex cover, edge cover,
/// connected occurrence subtrees.
bool is_valid_decomposition(const TreeDecomp& t, const Digraph& g);

/// Attach `right` at `left`'s designated leaf, rewriting right's bags by the
/// positional substitution root-bag(right) <- leaf-bag(left).
TreeDecomp glue_td(const TreeDecomp& left, const TreeDecomp& right);

TreeDecomp lambda(const DecompFamily& family, const Word& word);

/// N_T(v): induced subgraph on the bag union of the subtree rooted at v,
/// with ports B(v) (primary = secondary).
PortedGraph boundaried_subgraph(const TreeDecomp& t, const Digraph& g, const std::string& v);

/// Induced subgraph on the bag union of an arbitrary node subset, with the
/// given primary/secondary port bags. Used for pump extraction.
PortedGraph region_subgraph(const TreeDecomp& t, const Digraph& g,
                            const std::vector<std::string>& nodes,
                            const std::vector<std::string>& primary_bag,
                            const std::vector<std::string>& secondary_bag);

/// Number of distinct boundaried subgraphs along a root-to-leaf-directed path.
std::size_t n_length(const TreeDecomp& t, const Digraph& g,
                     const std::vector<std::string>& path);

/// Boundaried-subgraph equality: vertex set, edge set, and port sequences,
/// ports compared positionally.
bool n_equal(const PortedGraph& a, const PortedGraph& b);

/// Checks that lambda over the word is a valid decomposition of delta over
/// the word, given paired families with matching port/bag conventions.
bool remark2_check(const GadgetFamily& gamma, const DecompFamily& tfam, const Word& word);

}  // namespace netglue

#endif
