#include "netglue/json_io.hpp"

#include <fstream>
#include <sstream>

namespace netglue {

namespace {

const Json& field(const Json& j, const char* name) {
    auto it = j.find(name);
    if (it == j.end()) throw JsonFormatError(std::string("missing field: ") + name);
    return *it;
}

}  // namespace

Json digraph_to_json(const Digraph& g) {
    Json j;
    j["vertices"] = g.vertices();
    Json edges = Json::array();
    for (const auto& [from, to] : g.edge_ids()) edges.push_back(Json::array({from, to}));
    j["edges"] = std::move(edges);
    return j;
}

Digraph digraph_from_json(const Json& j) {
    std::vector<std::string> vertices =
        field(j, "vertices").get<std::vector<std::string>>();
    std::vector<std::pair<std::string, std::string>> edges;
    for (const auto& e : field(j, "edges")) {
        if (!e.is_array() || e.size() != 2)
            throw JsonFormatError("edge must be a two-element array");
        edges.emplace_back(e[0].get<std::string>(), e[1].get<std::string>());
    }
    try {
        return Digraph(std::move(vertices), std::move(edges));
    } catch (const GraphError& e) {
        throw JsonFormatError(e.what());
    }
}

Json ported_to_json(const PortedGraph& g) {
    Json j = digraph_to_json(g.graph());
    j["primary_ports"] = g.primary_ports();
    j["secondary_ports"] = g.secondary_ports();
    return j;
}

PortedGraph ported_from_json(const Json& j) {
    Digraph g = digraph_from_json(j);
    std::vector<std::string> primary, secondary;
    if (j.contains("primary_ports"))
        primary = j["primary_ports"].get<std::vector<std::string>>();
    if (j.contains("secondary_ports"))
        secondary = j["secondary_ports"].get<std::vector<std::string>>();
    try {
        return PortedGraph(std::move(g), std::move(primary), std::move(secondary));
    } catch (const Error& e) {
        throw JsonFormatError(e.what());
    }
}

Json treedec_to_json(const TreeDecomp& t) {
    Json j;
    j["nodes"] = t.nodes();
    j["parent"] = t.parent();
    Json bags = Json::object();
    for (const auto& n : t.nodes()) bags[n] = t.bag(n);
    j["bags"] = std::move(bags);
    j["root"] = t.root();
    j["leaf"] = t.designated_leaf();
    return j;
}

TreeDecomp treedec_from_json(const Json& j) {
    std::vector<std::string> nodes = field(j, "nodes").get<std::vector<std::string>>();
    std::map<std::string, std::string> parent =
        field(j, "parent").get<std::map<std::string, std::string>>();
    std::map<std::string, std::vector<std::string>> bags =
        field(j, "bags").get<std::map<std::string, std::vector<std::string>>>();
    try {
        return TreeDecomp(std::move(nodes), std::move(parent), std::move(bags),
                          field(j, "root").get<std::string>(),
                          field(j, "leaf").get<std::string>());
    } catch (const Error& e) {
        throw JsonFormatError(e.what());
    }
}

Json circuit_to_json(const Circuit& c) {
    Json gates = Json::array();
    for (const auto& g : c.gates()) {
        Json gate;
        gate["id"] = g.id;
        gate["op"] = gate_op_name(g.op);
        gate["args"] = g.args;
        gates.push_back(std::move(gate));
    }
    Json j;
    j["inputs"] = c.input_bit_count();
    j["gates"] = std::move(gates);
    j["outputs"] = c.output_ids();
    return j;
}

Circuit circuit_from_json(const Json& j) {
    std::vector<Gate> gates;
    for (const auto& g : field(j, "gates")) {
        Gate gate;
        gate.id = field(g, "id").get<std::uint32_t>();
        gate.op = gate_op_from_name(field(g, "op").get<std::string>());
        gate.args = field(g, "args").get<std::vector<std::uint32_t>>();
        gates.push_back(std::move(gate));
    }
    try {
        return Circuit(field(j, "inputs").get<std::size_t>(), std::move(gates),
                       field(j, "outputs").get<std::vector<std::uint32_t>>());
    } catch (const Error& e) {
        throw JsonFormatError(e.what());
    }
}

Json descriptor_to_json(const NetworkDescriptor& d) {
    Json j;
    j["kind"] = d.kind == NetworkKind::Deterministic ? "deterministic" : "nondeterministic";
    j["alphabet_sizes"] = d.alphabet_sizes;
    j["circuit"] = circuit_to_json(d.circuit);
    return j;
}

NetworkDescriptor descriptor_from_json(const Json& j) {
    const std::string kind = field(j, "kind").get<std::string>();
    if (kind != "deterministic" && kind != "nondeterministic")
        throw JsonFormatError("descriptor kind must be deterministic or nondeterministic");
    try {
        return NetworkDescriptor(
            kind == "deterministic" ? NetworkKind::Deterministic
                                    : NetworkKind::Nondeterministic,
            field(j, "alphabet_sizes").get<std::vector<std::uint32_t>>(),
            circuit_from_json(field(j, "circuit")));
    } catch (const Error& e) {
        throw JsonFormatError(e.what());
    }
}

Json layout_to_json(const Layout& l) {
    Json j;
    j["k"] = l.k;
    j["s"] = l.s;
    j["a"] = l.a;
    j["b"] = l.b;
    j["alpha"] = l.alpha;
    j["padding_copies"] = l.padding_copies;
    j["q"] = l.q;
    j["mu"] = l.mu;
    j["g2"] = {{"offset", l.g2_offset}, {"extent", l.g2_extent}};
    j["blocks"] = {{"offset", l.blocks_offset},
                   {"extent", l.block_extent},
                   {"count", l.block_count}};
    j["g3"] = {{"offset", l.g3_offset}, {"extent", l.g3_extent}};
    j["padding"] = {{"offset", l.pad_offset}, {"extent", l.pad_extent}};
    j["total"] = l.total;
    j["n"] = l.n;
    j["alphabet_sizes"] = l.alphabet_sizes;
    return j;
}

Layout layout_from_json(const Json& j) {
    Layout l;
    l.k = field(j, "k").get<std::size_t>();
    l.s = field(j, "s").get<std::uint32_t>();
    l.a = field(j, "a").get<std::uint64_t>();
    l.b = field(j, "b").get<std::uint64_t>();
    l.alpha = field(j, "alpha").get<std::uint64_t>();
    l.padding_copies = field(j, "padding_copies").get<std::uint64_t>();
    l.q = field(j, "q").get<std::uint32_t>();
    l.mu = field(j, "mu").get<std::uint32_t>();
    l.g2_offset = field(field(j, "g2"), "offset").get<std::uint64_t>();
    l.g2_extent = field(field(j, "g2"), "extent").get<std::uint64_t>();
    l.blocks_offset = field(field(j, "blocks"), "offset").get<std::uint64_t>();
    l.block_extent = field(field(j, "blocks"), "extent").get<std::uint64_t>();
    l.block_count = field(field(j, "blocks"), "count").get<std::uint64_t>();
    l.g3_offset = field(field(j, "g3"), "offset").get<std::uint64_t>();
    l.g3_extent = field(field(j, "g3"), "extent").get<std::uint64_t>();
    l.pad_offset = field(field(j, "padding"), "offset").get<std::uint64_t>();
    l.pad_extent = field(field(j, "padding"), "extent").get<std::uint64_t>();
    l.total = field(j, "total").get<std::uint64_t>();
    l.n = field(j, "n").get<std::size_t>();
    l.alphabet_sizes = field(j, "alphabet_sizes").get<std::vector<std::uint32_t>>();
    return l;
}

Json gadgets_to_json(const AssembledGadgets& g) {
    Json j;
    j["k"] = g.g1.arity();
    j["alpha"] = g.alpha;
    j["a"] = g.a;
    j["b"] = g.b;
    j["g0"] = ported_to_json(g.g0);
    j["g1"] = ported_to_json(g.g1);
    j["g2"] = ported_to_json(g.g2);
    j["g3"] = ported_to_json(g.g3);
    j["g4"] = ported_to_json(g.g4);
    return j;
}

AssembledGadgets gadgets_from_json(const Json& j) {
    AssembledGadgets g;
    g.g0 = ported_from_json(field(j, "g0"));
    g.g1 = ported_from_json(field(j, "g1"));
    g.g2 = ported_from_json(field(j, "g2"));
    g.g3 = ported_from_json(field(j, "g3"));
    g.g4 = ported_from_json(field(j, "g4"));
    g.alpha = field(j, "alpha").get<std::uint64_t>();
    g.a = field(j, "a").get<std::uint64_t>();
    g.b = field(j, "b").get<std::uint64_t>();
    return g;
}

Json triple_to_json(const PumpTriple& t) {
    Json j;
    j["g1"] = ported_to_json(t.g1);
    j["g2"] = ported_to_json(t.g2);
    j["g3"] = ported_to_json(t.g3);
    return j;
}

PumpTriple triple_from_json(const Json& j) {
    try {
        return PumpTriple(ported_from_json(field(j, "g1")), ported_from_json(field(j, "g2")),
                          ported_from_json(field(j, "g3")));
    } catch (const Error& e) {
        throw JsonFormatError(e.what());
    }
}

Json reduction_to_json(const ReductionOutput& out, const AssembledGadgets& g) {
    Json j;
    j["descriptor"] = descriptor_to_json(out.descriptor);
    j["layout"] = layout_to_json(out.layout);
    j["expected_word"] = out.expected_word;
    j["orientation"] = out.orientation == Orientation::FromSat ? "sat" : "unsat";
    j["formula"] = print_prop(out.formula);
    j["s"] = out.s;
    j["gadgets"] = gadgets_to_json(g);
    return j;
}

std::pair<ReductionOutput, AssembledGadgets> reduction_from_json(const Json& j) {
    ReductionOutput out;
    out.descriptor = descriptor_from_json(field(j, "descriptor"));
    out.layout = layout_from_json(field(j, "layout"));
    out.expected_word = field(j, "expected_word").get<std::string>();
    const std::string orient = field(j, "orientation").get<std::string>();
    if (orient != "sat" && orient != "unsat")
        throw JsonFormatError("orientation must be sat or unsat");
    out.orientation = orient == "sat" ? Orientation::FromSat : Orientation::FromUnsat;
    out.formula = parse_prop(field(j, "formula").get<std::string>());
    out.s = field(j, "s").get<std::uint32_t>();
    return {std::move(out), gadgets_from_json(field(j, "gadgets"))};
}

Json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw JsonFormatError("cannot open file: " + path);
    Json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        throw JsonFormatError(path + ": " + e.what());
    }
    return j;
}

void write_json_file(const std::string& path, const Json& j, bool pretty) {
    std::ofstream out(path);
    if (!out) throw JsonFormatError("cannot open file for writing: " + path);
    if (pretty)
        out << j.dump(2) << "\n";
    else
        out << j.dump() << "\n";
}

std::string read_text_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw JsonFormatError("cannot open file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

}  // namespace netglue
