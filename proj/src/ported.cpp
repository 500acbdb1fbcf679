#include "netglue/ported.hpp"

#include <algorithm>
#include <unordered_set>

namespace netglue {

namespace {

void check_port_list(const Digraph& g, const std::vector<std::string>& ports,
                     const char* which) {
    std::unordered_set<std::string> seen;
    for (const auto& p : ports) {
        if (!g.has_vertex(p))
            throw InvalidPorts(std::string(which) + " port is not a vertex: " + p);
        if (!seen.insert(p).second)
            throw InvalidPorts(std::string(which) + " port listed twice: " + p);
    }
}

}  // namespace

PortedGraph::PortedGraph(Digraph graph,
                         std::vector<std::string> primary_ports,
                         std::vector<std::string> secondary_ports)
    : graph_(std::move(graph)),
      primary_(std::move(primary_ports)),
      secondary_(std::move(secondary_ports)) {
    if (primary_.size() != secondary_.size())
        throw InvalidPorts("primary and secondary port lists differ in length");
    check_port_list(graph_, primary_, "primary");
    check_port_list(graph_, secondary_, "secondary");
}

std::vector<std::string> PortedGraph::port_overlap() const {
    std::unordered_set<std::string> prim(primary_.begin(), primary_.end());
    std::vector<std::string> overlap;
    for (const auto& p : secondary_)
        if (prim.count(p)) overlap.push_back(p);
    return overlap;
}

GadgetFamily::GadgetFamily(std::map<char, PortedGraph> members_in)
    : members(std::move(members_in)) {
    if (!members.empty()) {
        arity = members.begin()->second.arity();
        for (const auto& [symbol, member] : members) {
            if (member.arity() != arity)
                throw PortArityMismatch(std::string("family member '") + symbol +
                                        "' has mismatched port arity");
        }
    }
}

PortedGraph glue(const PortedGraph& left, const PortedGraph& right) {
    if (left.arity() != right.arity())
        throw PortArityMismatch("glue: operands have different port arity");
    const std::size_t k = left.arity();

    // Positional merge map for the right operand's primary ports.
    std::unordered_map<std::string, std::string> rename;
    rename.reserve(right.size());
    for (std::size_t i = 0; i < k; ++i)
        rename[right.primary_ports()[i]] = left.secondary_ports()[i];

    // Remaining right vertices keep their names unless they clash with the
    // left operand; a uniform apostrophe suffix restores disjointness.
    std::unordered_map<std::string, std::size_t> taken;
    for (const auto& v : left.graph().vertices()) taken.emplace(v, 0);
    std::vector<std::string> fresh;
    for (const auto& v : right.graph().vertices())
        if (!rename.count(v)) fresh.push_back(v);
    const std::string suffix = disambiguating_suffix(fresh, taken);
    for (const auto& v : fresh) rename[v] = v + suffix;

    std::vector<std::string> verts = left.graph().vertices();
    for (const auto& v : fresh) verts.push_back(rename[v]);

    std::vector<std::pair<std::string, std::string>> es = left.graph().edge_ids();
    for (const auto& [from, to] : right.graph().edge_ids())
        es.emplace_back(rename.at(from), rename.at(to));

    std::vector<std::string> secondary;
    secondary.reserve(k);
    for (const auto& p : right.secondary_ports()) secondary.push_back(rename.at(p));

    return PortedGraph(Digraph(std::move(verts), std::move(es)),
                       left.primary_ports(), std::move(secondary));
}

PortedGraph delta(const GadgetFamily& family, const Word& word) {
    if (word.empty()) throw UnknownSymbol("delta: empty word");
    auto member = [&family](char symbol) -> const PortedGraph& {
        auto it = family.members.find(symbol);
        if (it == family.members.end())
            throw UnknownSymbol(std::string("delta: no family member '") + symbol + "'");
        return it->second;
    };
    PortedGraph acc = member(word[0]);
    for (std::size_t i = 1; i < word.size(); ++i) acc = glue(acc, member(word[i]));
    return acc;
}

}  // namespace netglue
