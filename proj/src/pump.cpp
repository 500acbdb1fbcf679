#include "netglue/pump.hpp"

#include <algorithm>
#include <set>
#include <unordered_set>

namespace netglue {

ContextFamily::ContextFamily(std::vector<PortedGraph> contexts_in)
    : contexts(std::move(contexts_in)) {
    if (contexts.empty()) throw PortArityMismatch("context family must not be empty");
    for (const auto& c : contexts)
        if (c.arity() != contexts.front().arity())
            throw PortArityMismatch("context family has mixed port arities");
}

std::size_t ContextFamily::arity() const { return contexts.front().arity(); }

bool empirical_equiv(const PortedGraph& g, const PortedGraph& h, const Formula& psi,
                     const ContextFamily& ctx, const EvalLimits& limits) {
    if (g.arity() != ctx.arity() || h.arity() != ctx.arity())
        throw PortArityMismatch("empirical_equiv: graph arity does not match contexts");
    for (const auto& context : ctx.contexts) {
        const bool left = evaluate(psi, glue(g, context).graph(), limits);
        const bool right = evaluate(psi, glue(h, context).graph(), limits);
        if (left != right) return false;
    }
    return true;
}

PumpTriple::PumpTriple(PortedGraph g1_in, PortedGraph g2_in, PortedGraph g3_in)
    : g1(std::move(g1_in)), g2(std::move(g2_in)), g3(std::move(g3_in)) {
    if (g1.arity() != g2.arity() || g1.arity() != g3.arity())
        throw PortArityMismatch("pump triple: mixed port arities");
    std::unordered_set<std::string> overlap(g1.primary_ports().begin(),
                                            g1.primary_ports().end());
    std::size_t shared = 0;
    for (const auto& p : g1.secondary_ports())
        if (overlap.count(p)) ++shared;
    if (shared == g1.size())
        throw InvalidPorts("pump triple: every vertex of g1 is a shared port, "
                           "pumping would not grow the graph");
}

GadgetFamily PumpTriple::family() const {
    return GadgetFamily({{'1', g1}, {'2', g2}, {'3', g3}});
}

namespace {

// positions (i, j) with P1[i] == P2[j]
std::set<std::pair<std::size_t, std::size_t>> overlap_pattern(const PortedGraph& g) {
    std::set<std::pair<std::size_t, std::size_t>> pattern;
    for (std::size_t i = 0; i < g.primary_ports().size(); ++i)
        for (std::size_t j = 0; j < g.secondary_ports().size(); ++j)
            if (g.primary_ports()[i] == g.secondary_ports()[j]) pattern.emplace(i, j);
    return pattern;
}

bool growth_invariant(const PortedGraph& g1) {
    std::unordered_set<std::string> prim(g1.primary_ports().begin(), g1.primary_ports().end());
    std::size_t shared = 0;
    for (const auto& p : g1.secondary_ports())
        if (prim.count(p)) ++shared;
    return shared != g1.size();
}

struct Candidate {
    std::string upper;
    std::string lower;
    PortedGraph middle;
};

std::vector<std::string> middle_nodes(const TreeDecomp& t, const std::string& v,
                                      const std::string& v_low) {
    auto inner = t.subtree(v);
    auto lower = t.subtree(v_low);
    std::unordered_set<std::string> drop(lower.begin(), lower.end());
    drop.erase(v_low);
    std::vector<std::string> out;
    for (const auto& n : inner)
        if (!drop.count(n)) out.push_back(n);
    return out;
}

}  // namespace

std::optional<PumpTriple> find_pump(const Digraph& model, const TreeDecomp& decomp,
                                    const Formula& psi, const ContextFamily& ctx,
                                    const EvalLimits& limits) {
    if (!is_valid_decomposition(decomp, model))
        throw PreconditionViolated("find_pump: decomposition is not valid for the model");

    const auto order = decomp.subtree(decomp.root());  // preorder
    std::optional<Candidate> chosen;
    PortedGraph g2, g3;

    for (const auto& v : order) {
        if (chosen) break;
        auto below = decomp.subtree(v);
        for (std::size_t i = 1; i < below.size(); ++i) {
            const auto& v_low = below[i];
            PortedGraph upper = boundaried_subgraph(decomp, model, v);
            PortedGraph lower = boundaried_subgraph(decomp, model, v_low);
            if (n_equal(upper, lower)) continue;
            if (!empirical_equiv(upper, lower, psi, ctx, limits)) continue;
            PortedGraph middle = region_subgraph(decomp, model, middle_nodes(decomp, v, v_low),
                                                 decomp.bag(v), decomp.bag(v_low));
            if (!growth_invariant(middle)) continue;

            auto all = decomp.subtree(decomp.root());
            std::unordered_set<std::string> in_sub(below.begin(), below.end());
            std::vector<std::string> outer;
            for (const auto& n : all)
                if (!in_sub.count(n) || n == v) outer.push_back(n);
            g2 = region_subgraph(decomp, model, outer, decomp.bag(decomp.root()), decomp.bag(v));
            g3 = lower;
            chosen = Candidate{v, v_low, std::move(middle)};
            break;
        }
    }
    if (!chosen) return std::nullopt;

    // Representative discipline: swap the middle part for the smallest
    // context-equivalent region with the same port-overlap pattern.
    const auto want_pattern = overlap_pattern(chosen->middle);
    PortedGraph best = chosen->middle;
    for (const auto& v : order) {
        auto below = decomp.subtree(v);
        for (std::size_t i = 1; i < below.size(); ++i) {
            const auto& v_low = below[i];
            PortedGraph middle = region_subgraph(decomp, model, middle_nodes(decomp, v, v_low),
                                                 decomp.bag(v), decomp.bag(v_low));
            if (middle.size() >= best.size()) continue;
            if (!growth_invariant(middle)) continue;
            if (overlap_pattern(middle) != want_pattern) continue;
            if (!empirical_equiv(middle, chosen->middle, psi, ctx, limits)) continue;
            best = std::move(middle);
        }
    }
    return PumpTriple(std::move(best), std::move(g2), std::move(g3));
}

bool verify_pump(const PumpTriple& t, const Formula& psi, std::size_t l_max,
                 bool require_functional, const EvalLimits& limits) {
    GadgetFamily family = t.family();
    for (std::size_t l = 0; l <= l_max; ++l) {
        Word word = "2" + std::string(l, '1') + "3";
        Digraph dynamics = delta(family, word).graph();
        if (!evaluate(psi, dynamics, limits)) return false;
        if (require_functional && !evaluate(chi(), dynamics, limits)) return false;
    }
    return true;
}

Saturation saturation_check(const Digraph& omega, const Formula& psi,
                            const std::vector<Digraph>& family, const EvalLimits& limits) {
    bool any_true = false, any_false = false;
    for (const auto& g : family) {
        if (evaluate(psi, disjoint_union(g, omega), limits))
            any_true = true;
        else
            any_false = true;
        if (any_true && any_false) return Saturation::Mixed;
    }
    return any_true ? Saturation::AllModels : Saturation::AllCounterModels;
}

namespace {

// omega + g1~, keeping g1~'s vertex names and ports; omega's vertices are
// suffixed out of the way instead.
PortedGraph union_keeping_ports(const Digraph& omega, const PortedGraph& core) {
    std::unordered_map<std::string, std::size_t> taken;
    for (const auto& v : core.graph().vertices()) taken.emplace(v, 0);
    const std::string suffix = disambiguating_suffix(omega.vertices(), taken);
    std::vector<std::string> verts = core.graph().vertices();
    for (const auto& v : omega.vertices()) verts.push_back(v + suffix);
    auto edges = core.graph().edge_ids();
    for (const auto& [from, to] : omega.edge_ids())
        edges.emplace_back(from + suffix, to + suffix);
    return PortedGraph(Digraph(std::move(verts), std::move(edges)),
                       core.primary_ports(), core.secondary_ports());
}

PortedGraph pad_with_loops(const PortedGraph& g, std::size_t count) {
    if (count == 0) return g;
    std::unordered_map<std::string, std::size_t> taken;
    for (const auto& v : g.graph().vertices()) taken.emplace(v, 0);
    std::vector<std::string> pads;
    for (std::size_t i = 0; i < count; ++i) pads.push_back("pad" + std::to_string(i));
    const std::string suffix = disambiguating_suffix(pads, taken);
    std::vector<std::string> verts = g.graph().vertices();
    auto edges = g.graph().edge_ids();
    for (const auto& p : pads) {
        verts.push_back(p + suffix);
        edges.emplace_back(p + suffix, p + suffix);
    }
    return PortedGraph(Digraph(std::move(verts), std::move(edges)),
                       g.primary_ports(), g.secondary_ports());
}

}  // namespace

GadgetFamily AssembledGadgets::family() const {
    return GadgetFamily({{'0', g0}, {'1', g1}, {'2', g2}, {'3', g3}, {'4', g4}});
}

AssembledGadgets assemble_gadgets(const PumpTriple& t, const Digraph& omega,
                                  std::optional<std::uint64_t> q) {
    AssembledGadgets out;
    const std::size_t k = t.g1.arity();
    out.a = t.g1.size() - k;
    if (out.a == 0)
        throw ConditionViolation("assemble_gadgets: pump part adds no vertices");

    // least alpha with |G1| = k + alpha*a >= |omega| + |g1~|
    std::uint64_t alpha = omega.size() / out.a + 1;
    while ((alpha - 1) * out.a < omega.size()) ++alpha;
    if (q) {
        if (*q < 2) throw PreconditionViolated("assemble_gadgets: q must be at least 2");
        std::uint64_t power = 1;
        while (power < alpha) power *= *q;
        alpha = power;
    }
    out.alpha = alpha;

    PortedGraph g1 = t.g1;
    for (std::uint64_t i = 1; i < alpha; ++i) g1 = glue(g1, t.g1);
    out.g1 = std::move(g1);

    PortedGraph tilde0 = union_keeping_ports(omega, t.g1);
    const std::size_t pad = out.g1.size() - tilde0.size();
    out.g0 = pad_with_loops(tilde0, pad);

    out.g2 = t.g2;
    out.g3 = t.g3;
    out.g4 = t.g1;
    out.b = t.g2.size() + t.g3.size() - k;

    if (!conditions_check(out))
        throw ConditionViolation("assemble_gadgets: assembled family violates the "
                                 "interchangeability conditions");
    return out;
}

bool conditions_check(const AssembledGadgets& g) {
    if (g.g0.size() != g.g1.size()) return false;

    if (overlap_pattern(g.g0) != overlap_pattern(g.g1)) return false;
    std::set<std::string> overlap0, overlap1;
    {
        std::unordered_set<std::string> prim(g.g0.primary_ports().begin(),
                                             g.g0.primary_ports().end());
        for (const auto& p : g.g0.secondary_ports())
            if (prim.count(p)) overlap0.insert(p);
    }
    {
        std::unordered_set<std::string> prim(g.g1.primary_ports().begin(),
                                             g.g1.primary_ports().end());
        for (const auto& p : g.g1.secondary_ports())
            if (prim.count(p)) overlap1.insert(p);
    }
    if (overlap0 != overlap1) return false;
    if (overlap1.size() == g.g1.size()) return false;

    for (const auto& p : overlap1) {
        auto neighbors = [](const PortedGraph& pg, const std::string& vertex) {
            std::vector<std::string> out;
            const auto& graph = pg.graph();
            for (std::size_t u : graph.out_neighbors(graph.index_of(vertex)))
                out.push_back(graph.vertex(u));
            std::sort(out.begin(), out.end());
            return out;
        };
        if (neighbors(g.g0, p) != neighbors(g.g1, p)) return false;
    }
    return true;
}

}  // namespace netglue
