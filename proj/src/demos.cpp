#include "netglue/demos.hpp"

namespace netglue {
namespace demos {

namespace {

PortedGraph empty_gadget() { return PortedGraph(Digraph({}, {}), {}, {}); }

PortedGraph two_cycle_gadget() {
    return PortedGraph(Digraph({"u", "v"}, {{"u", "v"}, {"v", "u"}}), {}, {});
}

PortedGraph loop_tail_gadget() {
    return PortedGraph(Digraph({"u", "v"}, {{"u", "v"}, {"v", "v"}}), {}, {});
}

}  // namespace

AssembledGadgets fixed_point_gadgets() {
    AssembledGadgets g;
    g.g0 = loop_tail_gadget();
    g.g1 = two_cycle_gadget();
    g.g2 = empty_gadget();
    g.g3 = empty_gadget();
    g.g4 = two_cycle_gadget();
    g.alpha = 1;
    g.a = 2;
    g.b = 0;
    if (!conditions_check(g)) throw Error("fixed_point_gadgets: conditions failed");
    return g;
}

AssembledGadgets q3_chain_gadgets() {
    std::vector<std::string> chain;
    std::vector<std::pair<std::string, std::string>> chain_edges;
    for (int i = 0; i <= 8; ++i) chain.push_back("v" + std::to_string(i));
    for (int i = 0; i < 8; ++i) chain_edges.emplace_back(chain[i], chain[i + 1]);

    AssembledGadgets g;
    g.g2 = PortedGraph(Digraph(chain, chain_edges), {"v0"}, {"v8"});
    g.g3 = PortedGraph(Digraph({"w"}, {}), {"w"}, {"w"});
    g.g1 = PortedGraph(Digraph({"p", "u", "v"}, {{"p", "u"}, {"u", "v"}}), {"p"}, {"v"});
    g.g0 = PortedGraph(Digraph({"p", "u", "v"}, {{"p", "u"}, {"u", "v"}, {"v", "v"}}),
                       {"p"}, {"v"});
    g.g4 = g.g1;
    g.alpha = 1;
    g.a = 2;
    g.b = 9;
    if (!conditions_check(g)) throw Error("q3_chain_gadgets: conditions failed");
    return g;
}

NetworkDescriptor cycle_gate_nan(const PropFormula& S) {
    CircuitBuilder cb;
    auto xb = cb.inputs(0, 4);
    auto yb = cb.inputs(4, 4);
    auto successor = cb.add(xb, cb.constant(1, 4));
    auto at_end = cb.eq_const(xb, 8);
    auto wrapped = cb.mux_bits(at_end, cb.constant(0, 4), successor);
    auto is_next = cb.eq(yb, wrapped);
    CircuitBuilder::Bits assignment(xb.begin(), xb.begin() + 3);
    auto gate = cb.or_(at_end, lower_prop(cb, S, assignment));
    CircuitBuilder::Bits out{cb.and_(is_next, gate)};
    return NetworkDescriptor(NetworkKind::Nondeterministic, {3, 3}, cb.build(8, out));
}

const Formula& strong_connectivity() {
    static const Formula formula = parse_formula(
        "forallS X. ((exists x. x in X) & (exists x. !(x in X))) => "
        "(exists x. exists y. (x in X) & !(y in X) & (x -> y))");
    return formula;
}

const Formula& has_fixed_point() {
    static const Formula formula = parse_formula("exists x. x -> x");
    return formula;
}

PumpFixture chain_pump_fixture() {
    std::vector<std::string> verts{"z"};
    std::vector<std::pair<std::string, std::string>> edges{{"z", "z"}};
    for (int i = 0; i <= 8; ++i) verts.push_back("a" + std::to_string(i));
    for (int i = 0; i < 8; ++i)
        edges.emplace_back("a" + std::to_string(i), "a" + std::to_string(i + 1));
    edges.emplace_back("a8", "z");
    Digraph model(verts, edges);

    std::vector<std::string> nodes;
    std::map<std::string, std::string> parent;
    std::map<std::string, std::vector<std::string>> bags;
    for (int i = 0; i < 8; ++i) {
        std::string node = "n" + std::to_string(i);
        nodes.push_back(node);
        if (i > 0) parent[node] = "n" + std::to_string(i - 1);
        bags[node] = {"z", "a" + std::to_string(i), "a" + std::to_string(i + 1)};
    }
    TreeDecomp decomp(nodes, parent, bags, "n0", "n7");

    Formula psi = parse_formula("exists x. x -> x");

    PortedGraph bag_only(Digraph({"c0", "c1", "c2"}, {}), {"c0", "c1", "c2"},
                         {"c0", "c1", "c2"});
    PortedGraph with_tail(Digraph({"c0", "c1", "c2", "d"}, {{"d", "c0"}, {"c2", "d"}}),
                          {"c0", "c1", "c2"}, {"c0", "c1", "c2"});
    ContextFamily ctx({bag_only, with_tail});

    return PumpFixture{std::move(model), std::move(decomp), std::move(psi), std::move(ctx)};
}

}  // namespace demos
}  // namespace netglue
