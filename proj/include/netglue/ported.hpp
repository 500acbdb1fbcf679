#ifndef NETGLUE_PORTED_HPP
#define NETGLUE_PORTED_HPP

#include <map>
#include <string>
#include <vector>

#include "netglue/digraph.hpp"

namespace netglue {

/// Digraph with two ordered port sequences of equal length k.
/// A boundaried graph is represented with identical primary and secondary
/// port sequences.
class PortedGraph {
public:
    PortedGraph() = default;
    PortedGraph(Digraph graph,
                std::vector<std::string> primary_ports,
                std::vector<std::string> secondary_ports);

    const Digraph& graph() const { return graph_; }
    std::size_t size() const { return graph_.size(); }
    std::size_t arity() const { return primary_.size(); }
    const std::vector<std::string>& primary_ports() const { return primary_; }
    const std::vector<std::string>& secondary_ports() const { return secondary_; }

    /// Port vertices shared by the primary and secondary sequences.
    std::vector<std::string> port_overlap() const;

private:
    Digraph graph_;
    std::vector<std::string> primary_;
    std::vector<std::string> secondary_;
};

using Word = std::string;  // each character indexes a family member

struct GadgetFamily {
    std::size_t arity = 0;
    std::map<char, PortedGraph> members;

    GadgetFamily() = default;
    GadgetFamily(std::map<char, PortedGraph> members_in);
};

/// Merge: right's primary ports are identified positionally with left's
/// secondary ports; right's remaining vertices are suffixed when their
/// identifiers clash with the left operand's.
PortedGraph glue(const PortedGraph& left, const PortedGraph& right);

/// Left fold of glue over the word's member sequence.
PortedGraph delta(const GadgetFamily& family, const Word& word);

}  // namespace netglue

#endif
