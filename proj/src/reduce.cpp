#include "netglue/reduce.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <unordered_map>
#include <unordered_set>

#include "netglue/isomorphism.hpp"

namespace netglue {

// ---------------------------------------------------------------------------
// propositional formulas
// ---------------------------------------------------------------------------

PropFormula PropFormula::variable(std::uint32_t index) {
    if (index == 0) throw SyntaxError("propositional variables are 1-based");
    PropFormula f;
    f.kind = Kind::Var;
    f.var = index;
    return f;
}

PropFormula PropFormula::negation(PropFormula f) {
    PropFormula out;
    out.kind = Kind::Not;
    out.children = {std::move(f)};
    return out;
}

PropFormula PropFormula::conjunction(PropFormula a, PropFormula b) {
    PropFormula out;
    out.kind = Kind::And;
    out.children = {std::move(a), std::move(b)};
    return out;
}

PropFormula PropFormula::disjunction(PropFormula a, PropFormula b) {
    PropFormula out;
    out.kind = Kind::Or;
    out.children = {std::move(a), std::move(b)};
    return out;
}

std::uint32_t PropFormula::max_var() const {
    std::uint32_t best = kind == Kind::Var ? var : 0;
    for (const auto& child : children) best = std::max(best, child.max_var());
    return best;
}

bool PropFormula::eval(std::uint32_t assignment) const {
    switch (kind) {
        case Kind::Var: return (assignment >> (var - 1)) & 1u;
        case Kind::Not: return !children[0].eval(assignment);
        case Kind::And: return children[0].eval(assignment) && children[1].eval(assignment);
        case Kind::Or: return children[0].eval(assignment) || children[1].eval(assignment);
    }
    return false;
}

namespace {

struct PropParser {
    const std::string& text;
    std::size_t pos = 0;

    void skip() {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    }
    bool accept(char c) {
        skip();
        if (pos < text.size() && text[pos] == c) {
            ++pos;
            return true;
        }
        return false;
    }

    PropFormula parse() {
        PropFormula f = disjunction();
        skip();
        if (pos != text.size())
            throw SyntaxError("trailing input at position " + std::to_string(pos));
        return f;
    }

    PropFormula disjunction() {
        PropFormula left = conjunction();
        while (accept('|')) left = PropFormula::disjunction(std::move(left), conjunction());
        return left;
    }

    PropFormula conjunction() {
        PropFormula left = unary();
        while (accept('&')) left = PropFormula::conjunction(std::move(left), unary());
        return left;
    }

    PropFormula unary() {
        if (accept('!')) return PropFormula::negation(unary());
        if (accept('(')) {
            PropFormula f = disjunction();
            if (!accept(')')) throw SyntaxError("expected ')' at position " + std::to_string(pos));
            return f;
        }
        skip();
        if (pos < text.size() && text[pos] == 'x') {
            ++pos;
            std::size_t start = pos;
            while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
            if (start == pos)
                throw SyntaxError("expected variable index at position " + std::to_string(pos));
            return PropFormula::variable(
                static_cast<std::uint32_t>(std::stoul(text.substr(start, pos - start))));
        }
        throw SyntaxError("expected a propositional formula at position " + std::to_string(pos));
    }
};

}  // namespace

PropFormula parse_prop(const std::string& text) {
    PropParser p{text};
    return p.parse();
}

std::string print_prop(const PropFormula& f) {
    switch (f.kind) {
        case PropFormula::Kind::Var: return "x" + std::to_string(f.var);
        case PropFormula::Kind::Not: return "!(" + print_prop(f.children[0]) + ")";
        case PropFormula::Kind::And:
            return "(" + print_prop(f.children[0]) + " & " + print_prop(f.children[1]) + ")";
        case PropFormula::Kind::Or:
            return "(" + print_prop(f.children[0]) + " | " + print_prop(f.children[1]) + ")";
    }
    return "";
}

std::string truth_word(const PropFormula& S, std::uint32_t s) {
    if (s > 20) throw SizeBoundExceeded("truth_word: more than 20 variables");
    if (S.max_var() > s)
        throw PreconditionViolated("truth_word: formula uses a variable beyond s");
    std::string word(std::size_t{1} << s, '0');
    for (std::uint32_t i = 0; i < word.size(); ++i)
        if (S.eval(i)) word[i] = '1';
    return word;
}

std::string gadget_word(const std::string& truth, Orientation orient) {
    std::string w(truth.size(), '1');
    for (std::size_t i = 0; i < truth.size(); ++i) {
        const bool satisfied = truth[i] == '1';
        const bool use_g0 = orient == Orientation::FromSat ? satisfied : !satisfied;
        w[i] = use_g0 ? '0' : '1';
    }
    return w;
}

std::uint32_t lower_prop(CircuitBuilder& cb, const PropFormula& S,
                         const CircuitBuilder::Bits& assignment) {
    switch (S.kind) {
        case PropFormula::Kind::Var: {
            const std::size_t bit = S.var - 1;
            return bit < assignment.size() ? assignment[bit] : cb.const0();
        }
        case PropFormula::Kind::Not:
            return cb.not_(lower_prop(cb, S.children[0], assignment));
        case PropFormula::Kind::And:
            return cb.and_(lower_prop(cb, S.children[0], assignment),
                           lower_prop(cb, S.children[1], assignment));
        case PropFormula::Kind::Or:
            return cb.or_(lower_prop(cb, S.children[0], assignment),
                          lower_prop(cb, S.children[1], assignment));
    }
    return cb.const0();
}

// ---------------------------------------------------------------------------
// layout
// ---------------------------------------------------------------------------

Layout layout_regions(std::size_t g2_size, std::size_t g1_size, std::size_t g3_size,
                      std::size_t g4_size, std::size_t k, std::uint32_t s,
                      std::uint64_t padding_copies) {
    if (g1_size < k || g3_size < k || g4_size < k)
        throw PreconditionViolated("layout_regions: gadget smaller than its port count");
    Layout lay;
    lay.k = k;
    lay.s = s;
    lay.padding_copies = padding_copies;
    lay.g2_offset = 0;
    lay.g2_extent = g2_size;
    lay.block_extent = g1_size - k;
    lay.block_count = std::uint64_t{1} << s;
    lay.blocks_offset = lay.g2_extent;
    lay.g3_offset = lay.blocks_offset + lay.block_count * lay.block_extent;
    lay.g3_extent = g3_size - k;
    lay.pad_offset = lay.g3_offset + lay.g3_extent;
    lay.pad_extent = g4_size - k;
    lay.total = lay.pad_offset + padding_copies * lay.pad_extent;
    return lay;
}

Layout plan_layout(const AssembledGadgets& g, const PropFormula& S, std::uint32_t s,
                   const ReduceMode& mode) {
    if (S.max_var() > s)
        throw PreconditionViolated("plan_layout: formula uses a variable beyond s");
    const std::size_t k = g.g1.arity();
    if (g.g1.size() - k != g.alpha * g.a)
        throw PreconditionViolated("plan_layout: |G1| - k != alpha * a");

    BigUint big_l;
    std::size_t n = 0;
    std::uint32_t q_out = 2;
    std::uint32_t mu = 0;
    try {
        if (mode.q) {
            q_out = *mode.q;
            auto per = arith::periodicity(g.a, g.b, q_out);
            if (!per)
                throw ArithmeticInfeasible(
                    "plan_layout: no (mu, kappa) with b*q^mu = a*kappa + b, the pumped "
                    "sizes meet powers of q at most once");
            mu = per->mu;
            big_l = arith::padding_q(g.a, g.b, q_out, mu, g.alpha, s);
            n = *arith::exact_log(q_out, g.b) +
                static_cast<std::size_t>(mu) * (s + 1) +
                static_cast<std::size_t>(mu) * *arith::exact_log(q_out, g.alpha);
        } else {
            big_l = arith::padding_boolean(g.a, g.b, g.alpha, s);
            const std::uint64_t phi = arith::totient(g.a);
            n = *arith::exact_log(2, g.a + g.b) +
                static_cast<std::size_t>(*arith::exact_log(2, g.alpha)) * phi + s * phi;
        }
    } catch (const PreconditionViolated& e) {
        throw ArithmeticInfeasible(std::string("plan_layout: ") + e.what());
    }

    if (n > 62) throw BudgetExceeded("plan_layout: configuration space beyond 2^62");
    if (!big_l.fits_u64() || big_l.to_u64() > (std::uint64_t{1} << 22))
        throw BudgetExceeded("plan_layout: padding copy count too large to lay out");
    const std::uint64_t L = big_l.to_u64();

    Layout lay = layout_regions(g.g2.size(), g.g1.size(), g.g3.size(), g.g4.size(), k, s, L);
    lay.a = g.a;
    lay.b = g.b;
    lay.alpha = g.alpha;
    lay.q = q_out;
    lay.mu = mu;
    lay.n = n;
    lay.alphabet_sizes.assign(n, q_out);

    BigUint expected = BigUint::pow(q_out, n);
    BigUint claimed = BigUint{g.a} * (BigUint{g.alpha} * BigUint::pow(2, s) + big_l) +
                      BigUint{g.b};
    if (expected != claimed || BigUint{lay.total} != expected)
        throw Error("plan_layout: partition identity failed");
    return lay;
}

// ---------------------------------------------------------------------------
// compilation
// ---------------------------------------------------------------------------

namespace {

using Bits = CircuitBuilder::Bits;

/// Per-gadget local layout: inherited primary ports and offset-addressed
/// fresh vertices, with secondary ports placed identically across the two
/// valuation templates.
struct TemplateLayout {
    const PortedGraph* pg = nullptr;
    std::vector<std::string> fresh;                        // offset -> vertex
    std::unordered_map<std::string, std::size_t> offset;   // vertex -> offset
    std::unordered_map<std::string, std::size_t> primary;  // vertex -> port index
    // per secondary index: exactly one of the two is set
    std::vector<std::optional<std::size_t>> sec_fresh;     // fresh offset
    std::vector<std::optional<std::size_t>> sec_chase;     // primary index
};

TemplateLayout make_template_layout(const PortedGraph& g, bool all_fresh) {
    TemplateLayout lay;
    lay.pg = &g;
    std::unordered_set<std::string> inherited;
    if (!all_fresh)
        for (const auto& p : g.primary_ports()) inherited.insert(p);
    for (std::size_t i = 0; i < g.primary_ports().size(); ++i)
        lay.primary.emplace(g.primary_ports()[i], i);

    std::unordered_set<std::string> sec_set(g.secondary_ports().begin(),
                                            g.secondary_ports().end());
    // non-secondary fresh vertices first, then secondary ones by port position
    for (const auto& v : g.graph().vertices())
        if (!inherited.count(v) && !sec_set.count(v)) lay.fresh.push_back(v);
    for (const auto& p : g.secondary_ports())
        if (!inherited.count(p)) lay.fresh.push_back(p);
    for (std::size_t i = 0; i < lay.fresh.size(); ++i) lay.offset.emplace(lay.fresh[i], i);

    lay.sec_fresh.resize(g.secondary_ports().size());
    lay.sec_chase.resize(g.secondary_ports().size());
    for (std::size_t i = 0; i < g.secondary_ports().size(); ++i) {
        const auto& p = g.secondary_ports()[i];
        if (!all_fresh && inherited.count(p))
            lay.sec_chase[i] = lay.primary.at(p);
        else
            lay.sec_fresh[i] = lay.offset.at(p);
    }
    return lay;
}

/// Compile-time chase classification for a region's secondary port:
/// after `depth` steps leftward the vertex is fresh at `fresh_offset`, or
/// the chase is a self-loop that passes through the whole region.
struct ChaseInfo {
    bool diagonal = false;
    std::size_t depth = 0;         // steps left until fresh (when !diagonal)
    std::size_t fresh_offset = 0;
    std::size_t exit_port = 0;     // port index on leaving the region (diagonal)
};

ChaseInfo classify_chase(const TemplateLayout& lay, std::size_t port) {
    ChaseInfo info;
    std::size_t i = port;
    std::unordered_set<std::size_t> seen;
    for (;;) {
        if (lay.sec_fresh[i]) {
            info.fresh_offset = *lay.sec_fresh[i];
            return info;
        }
        const std::size_t next = *lay.sec_chase[i];
        if (next == i) {
            info.diagonal = true;
            info.exit_port = i;
            return info;
        }
        if (!seen.insert(i).second)
            throw ModeViolation("compile_reduction: secondary-port pass-through cycle of "
                                "length two or more is not supported");
        i = next;
        ++info.depth;
    }
}

struct Compiler {
    const AssembledGadgets& gadgets;
    const Layout& lay;
    const PropFormula& S;
    Orientation orient;
    NetworkKind kind;

    CircuitBuilder cb;
    std::size_t width = 0;  // index bit width

    TemplateLayout lay_g0, lay_g1, lay_g2, lay_g3, lay_g4;

    // decoded per input side
    struct Decoded {
        Bits x;
        std::uint32_t in_g2 = 0, in_w = 0, in_g3 = 0, in_pad = 0;
        Bits j, r;    // valuation block index and intra-block offset
        Bits p, rp;   // padding block index and offset
        std::uint32_t j_last = 0, p_last = 0;
    };

    explicit Compiler(const AssembledGadgets& g, const Layout& l, const PropFormula& s,
                      Orientation o, NetworkKind k)
        : gadgets(g), lay(l), S(s), orient(o), kind(k) {
        if (lay.total < 2)
            throw BudgetExceeded("compile_reduction: degenerate one-state layout");
        width = ceil_log2(lay.total);  // index bit width, not the automata count
        lay_g0 = make_template_layout(g.g0, false);
        lay_g1 = make_template_layout(g.g1, false);
        lay_g2 = make_template_layout(g.g2, true);
        lay_g3 = make_template_layout(g.g3, false);
        lay_g4 = make_template_layout(g.g4, false);
        if (lay_g0.fresh.size() != lay.block_extent || lay_g1.fresh.size() != lay.block_extent)
            throw ModeViolation("compile_reduction: valuation templates disagree with layout");
        if (lay_g0.sec_fresh != lay_g1.sec_fresh || lay_g0.sec_chase != lay_g1.sec_chase)
            throw ModeViolation("compile_reduction: valuation templates disagree on "
                                "secondary-port placement");
    }

    // --- gadget template selection -------------------------------------

    bool use_g0_at(std::uint64_t block) const {
        const bool satisfied = S.eval(static_cast<std::uint32_t>(block));
        return orient == Orientation::FromSat ? satisfied : !satisfied;
    }
    const PortedGraph& w_template(std::uint64_t block) const {
        return use_g0_at(block) ? gadgets.g0 : gadgets.g1;
    }
    const TemplateLayout& w_layout(std::uint64_t block) const {
        return use_g0_at(block) ? lay_g0 : lay_g1;
    }

    // --- absolute bases --------------------------------------------------

    std::uint64_t wbase_const(std::uint64_t block) const {
        return lay.blocks_offset + block * lay.block_extent;
    }
    std::uint64_t pbase_const(std::uint64_t block) const {
        return lay.pad_offset + block * lay.pad_extent;
    }
    Bits wbase(const Bits& j) {
        auto scaled = cb.mul_const(j, lay.block_extent, width);
        return cb.add(scaled, cb.constant(lay.blocks_offset, width));
    }
    Bits pbase(const Bits& p) {
        auto scaled = cb.mul_const(p, lay.pad_extent, width);
        return cb.add(scaled, cb.constant(lay.pad_offset, width));
    }

    // --- compile-time resolution (fixed positions) -----------------------

    enum class Region { G2, W, Pad, G3 };

    // secondary port `i` of the fixed position (region, block)
    std::uint64_t resolve_sec_const(Region region, std::uint64_t block, std::size_t i) const {
        for (;;) {
            if (region == Region::G2) {
                const auto& p = gadgets.g2.secondary_ports()[i];
                return lay.g2_offset + lay_g2.offset.at(p);
            }
            const TemplateLayout& tl = region == Region::W ? lay_g1 : lay_g4;
            if (tl.sec_fresh[i]) {
                const std::uint64_t base =
                    region == Region::W ? wbase_const(block) : pbase_const(block);
                return base + *tl.sec_fresh[i];
            }
            const std::size_t next = *tl.sec_chase[i];
            if (next == i) {
                // passes through the whole region
                if (region == Region::W) {
                    region = Region::G2;
                } else {
                    region = Region::W;
                    block = lay.block_count - 1;
                }
                continue;
            }
            i = next;
            if (block > 0) {
                --block;
            } else if (region == Region::W) {
                region = Region::G2;
            } else {
                region = Region::W;
                block = lay.block_count - 1;
            }
        }
    }

    // secondary port i of the predecessor of the position (region, block)
    std::uint64_t resolve_pred_sec_const(Region region, std::uint64_t block,
                                         std::size_t i) const {
        if (region == Region::W) {
            if (block == 0) return resolve_sec_const(Region::G2, 0, i);
            return resolve_sec_const(Region::W, block - 1, i);
        }
        if (region == Region::Pad) {
            if (block == 0) return resolve_sec_const(Region::W, lay.block_count - 1, i);
            return resolve_sec_const(Region::Pad, block - 1, i);
        }
        // G3's predecessor
        if (lay.padding_copies > 0)
            return resolve_sec_const(Region::Pad, lay.padding_copies - 1, i);
        return resolve_sec_const(Region::W, lay.block_count - 1, i);
    }

    // --- runtime resolution ----------------------------------------------

    // secondary port i of W block j (runtime)
    Bits resolve_w_sec(std::size_t i, const Bits& j, std::size_t depth = 0) {
        if (depth > gadgets.g1.arity())
            throw ModeViolation("compile_reduction: runtime port chase too deep");
        const TemplateLayout& tl = lay_g1;
        if (tl.sec_fresh[i]) {
            return cb.add(wbase(j), cb.constant(*tl.sec_fresh[i], width));
        }
        const std::size_t next = *tl.sec_chase[i];
        if (next == i)
            return cb.constant(resolve_sec_const(Region::G2, 0, i), width);
        // vertex = secondary `next` of the predecessor of block j
        return resolve_w_pred_sec(next, j, depth + 1);
    }

    // secondary port i of the predecessor of W block j (runtime j)
    Bits resolve_w_pred_sec(std::size_t i, const Bits& j, std::size_t depth = 0) {
        const std::uint64_t at_zero = resolve_sec_const(Region::G2, 0, i);
        auto j_is_zero = cb.eq_const(j, 0);
        auto j_minus_1 = cb.sub(j, cb.constant(1, width));
        auto deeper = resolve_w_sec(i, j_minus_1, depth);
        return cb.mux_bits(j_is_zero, cb.constant(at_zero, width), deeper);
    }

    // secondary port i of pad block p (runtime)
    Bits resolve_p_sec(std::size_t i, const Bits& p, std::size_t depth = 0) {
        if (depth > gadgets.g4.arity())
            throw ModeViolation("compile_reduction: runtime port chase too deep");
        const TemplateLayout& tl = lay_g4;
        if (tl.sec_fresh[i]) {
            return cb.add(pbase(p), cb.constant(*tl.sec_fresh[i], width));
        }
        const std::size_t next = *tl.sec_chase[i];
        if (next == i)
            return cb.constant(resolve_sec_const(Region::W, lay.block_count - 1, i), width);
        return resolve_p_pred_sec(next, p, depth + 1);
    }

    // secondary port i of the predecessor of pad block p (runtime p)
    Bits resolve_p_pred_sec(std::size_t i, const Bits& p, std::size_t depth = 0) {
        const std::uint64_t at_zero = resolve_sec_const(Region::W, lay.block_count - 1, i);
        auto p_is_zero = cb.eq_const(p, 0);
        auto p_minus_1 = cb.sub(p, cb.constant(1, width));
        auto deeper = resolve_p_sec(i, p_minus_1, depth);
        return cb.mux_bits(p_is_zero, cb.constant(at_zero, width), deeper);
    }

    // --- S evaluation -----------------------------------------------------


    // gate selecting G0 at block j + shift
    std::uint32_t use0_at(const Bits& j, std::uint64_t shift) {
        Bits shifted = shift == 0 ? j : cb.add(j, cb.constant(shift, width));
        Bits assignment(shifted.begin(),
                        shifted.begin() + std::min<std::size_t>(lay.s, shifted.size()));
        std::uint32_t sat = lower_prop(cb, S, assignment);
        return orient == Orientation::FromSat ? sat : cb.not_(sat);
    }

    // --- decoding ----------------------------------------------------------

    Decoded decode(std::uint32_t first_input_bit) {
        Decoded d;
        d.x = cb.inputs(first_input_bit, width);
        d.in_g2 = lay.g2_extent == 0 ? cb.const0()
                                     : cb.less_than_const(d.x, lay.g2_extent);
        const std::uint64_t w_end = lay.g3_offset;
        auto ge_blocks = cb.not_(cb.less_than_const(d.x, lay.blocks_offset));
        d.in_w = cb.and_(ge_blocks, cb.less_than_const(d.x, w_end));
        auto off_w = cb.sub(d.x, cb.constant(lay.blocks_offset, width));
        auto [jq, jr] = cb.divmod_const(off_w, lay.block_extent);
        d.j = jq;
        d.r = jr;
        d.j_last = cb.eq_const(d.j, lay.block_count - 1);
        const std::uint64_t g3_end = lay.g3_offset + lay.g3_extent;
        d.in_g3 = lay.g3_extent == 0
                      ? cb.const0()
                      : cb.and_(cb.not_(cb.less_than_const(d.x, lay.g3_offset)),
                                cb.less_than_const(d.x, g3_end));
        if (lay.padding_copies > 0) {
            d.in_pad = cb.and_(cb.not_(cb.less_than_const(d.x, lay.pad_offset)),
                               cb.less_than_const(d.x, lay.total));
            auto off_p = cb.sub(d.x, cb.constant(lay.pad_offset, width));
            auto [pq, pr] = cb.divmod_const(off_p, lay.pad_extent);
            d.p = pq;
            d.rp = pr;
            d.p_last = cb.eq_const(d.p, lay.padding_copies - 1);
        } else {
            d.in_pad = cb.const0();
            d.p = cb.constant(0, width);
            d.rp = cb.constant(0, width);
            d.p_last = cb.const0();
        }
        return d;
    }

    // --- edge classification ----------------------------------------------

    struct EdgeView {
        bool from_fresh;
        std::size_t from;  // offset or primary index
        bool to_fresh;
        std::size_t to;
    };

    std::vector<EdgeView> template_edges(const TemplateLayout& tl) const {
        std::vector<EdgeView> out;
        for (const auto& [from, to] : tl.pg->graph().edge_ids()) {
            EdgeView e{};
            if (auto it = tl.offset.find(from); it != tl.offset.end()) {
                e.from_fresh = true;
                e.from = it->second;
            } else {
                e.from_fresh = false;
                e.from = tl.primary.at(from);
            }
            if (auto it = tl.offset.find(to); it != tl.offset.end()) {
                e.to_fresh = true;
                e.to = it->second;
            } else {
                e.to_fresh = false;
                e.to = tl.primary.at(to);
            }
            out.push_back(e);
        }
        return out;
    }

    // out-edge of a fresh vertex within its template, if any
    std::optional<EdgeView> own_edge(const TemplateLayout& tl, std::size_t offset) const {
        for (const auto& e : template_edges(tl))
            if (e.from_fresh && e.from == offset) return e;
        return std::nullopt;
    }

    std::optional<EdgeView> primary_edge(const TemplateLayout& tl, std::size_t port) const {
        for (const auto& e : template_edges(tl))
            if (!e.from_fresh && e.from == port) return e;
        return std::nullopt;
    }

    // ------------------------------------------------------------------
    // deterministic image circuit
    // ------------------------------------------------------------------

    Bits masked(std::uint32_t cond, const Bits& value) {
        Bits out(value.size());
        for (std::size_t i = 0; i < value.size(); ++i) out[i] = cb.and_(cond, value[i]);
        return out;
    }

    Bits or_accumulate(const Bits& a, const Bits& b) {
        Bits out(a.size());
        for (std::size_t i = 0; i < a.size(); ++i) out[i] = cb.or_(a[i], b[i]);
        return out;
    }

    // image of the vertex seen as primary port `i` of the fixed position
    // (region, block); walks forward across positions with a pass-through
    // shortcut; compile-time.
    std::optional<std::uint64_t> forward_image_const(Region region, std::uint64_t block,
                                                     std::size_t i) const {
        std::size_t guard = 0;
        for (;;) {
            if (++guard > 4 * (gadgets.g1.arity() + 2) + 8)
                throw ModeViolation("compile_reduction: forward provider chase too long");
            if (region == Region::W) {
                if (block >= lay.block_count) {
                    region = lay.padding_copies > 0 ? Region::Pad : Region::G3;
                    block = 0;
                    continue;
                }
                const TemplateLayout& tl = w_layout(block);
                if (auto e = primary_edge(tl, i)) {
                    if (e->to_fresh) return wbase_const(block) + e->to;
                    return resolve_pred_sec_const(Region::W, block, e->to);
                }
                // no edge: the vertex must also be a secondary port here
                const auto& name = tl.pg->primary_ports()[i];
                const auto& sec = tl.pg->secondary_ports();
                auto at = std::find(sec.begin(), sec.end(), name);
                if (at == sec.end()) return std::nullopt;
                const std::size_t i2 = static_cast<std::size_t>(at - sec.begin());
                if (i2 == i) {
                    // diagonal with no edge in either template: skip the region
                    region = lay.padding_copies > 0 ? Region::Pad : Region::G3;
                    block = 0;
                } else {
                    i = i2;
                    ++block;
                }
                continue;
            }
            if (region == Region::Pad) {
                if (block >= lay.padding_copies) {
                    region = Region::G3;
                    block = 0;
                    continue;
                }
                if (auto e = primary_edge(lay_g4, i)) {
                    if (e->to_fresh) return pbase_const(block) + e->to;
                    return resolve_pred_sec_const(Region::Pad, block, e->to);
                }
                const auto& name = gadgets.g4.primary_ports()[i];
                const auto& sec = gadgets.g4.secondary_ports();
                auto at = std::find(sec.begin(), sec.end(), name);
                if (at == sec.end()) return std::nullopt;
                const std::size_t i2 = static_cast<std::size_t>(at - sec.begin());
                if (i2 == i) {
                    region = Region::G3;
                    block = 0;
                } else {
                    i = i2;
                    ++block;
                }
                continue;
            }
            // G3
            if (auto e = primary_edge(lay_g3, i)) {
                if (e->to_fresh) return lay.g3_offset + e->to;
                return resolve_pred_sec_const(Region::G3, 0, e->to);
            }
            return std::nullopt;  // no further positions
        }
    }

    // True when the template's primary port i is also its secondary port i
    // (the vertex passes through the whole region when no edge provides it).
    bool diagonal_port(const TemplateLayout& tl, std::size_t i) const {
        const auto& name = tl.pg->primary_ports()[i];
        const auto& sec = tl.pg->secondary_ports();
        return i < sec.size() && sec[i] == name;
    }

    // The secondary index the fresh vertex at offset o occupies, if any.
    std::optional<std::size_t> sec_index_of(const TemplateLayout& tl, std::size_t o) const {
        const auto& name = tl.fresh[o];
        const auto& sec = tl.pg->secondary_ports();
        auto at = std::find(sec.begin(), sec.end(), name);
        if (at == sec.end()) return std::nullopt;
        return static_cast<std::size_t>(at - sec.begin());
    }

    // image contribution of a W template for the vertex at fresh offset o of
    // runtime block j (deterministic mode only).
    Bits w_image_for_template(const TemplateLayout& tl, std::size_t o, const Decoded& d) {
        if (auto e = own_edge(tl, o)) {
            if (e->to_fresh) return cb.add(wbase(d.j), cb.constant(e->to, width));
            return resolve_w_pred_sec(e->to, d.j);
        }
        // no own edge: the out-edge is provided by the next position
        auto sec_i = sec_index_of(tl, o);
        if (!sec_i)
            throw ModeViolation("compile_reduction: vertex with no out-edge in "
                                "deterministic mode");
        const std::size_t i = *sec_i;

        // when this is the last valuation block, the provider chain starts at
        // the first pad block (or at G3 when there is no padding)
        auto img_last = lay.padding_copies > 0 ? forward_image_const(Region::Pad, 0, i)
                                               : forward_image_const(Region::G3, 0, i);
        if (!img_last)
            throw ModeViolation("compile_reduction: secondary port without provider");
        const std::uint64_t at_last = *img_last;

        // otherwise the provider is W block j+1's primary port i
        auto j_next = cb.add(d.j, cb.constant(1, width));
        auto next_value_of = [&](const TemplateLayout& tn) -> std::optional<Bits> {
            auto e = primary_edge(tn, i);
            if (!e) return std::nullopt;
            if (e->to_fresh) return cb.add(wbase(j_next), cb.constant(e->to, width));
            return resolve_w_sec(e->to, d.j);
        };
        auto v0 = next_value_of(lay_g0);
        auto v1 = next_value_of(lay_g1);
        Bits next_value;
        if (v0 && v1) {
            next_value = cb.mux_bits(use0_at(d.j, 1), *v0, *v1);
        } else if (!v0 && !v1) {
            // the port must pass through every remaining block diagonally,
            // making the provider position-independent
            if (!diagonal_port(lay_g0, i) || !diagonal_port(lay_g1, i))
                throw ModeViolation("compile_reduction: provider deeper than one position "
                                    "is not supported");
            auto img = lay.padding_copies > 0 ? forward_image_const(Region::Pad, 0, i)
                                              : forward_image_const(Region::G3, 0, i);
            if (!img) throw ModeViolation("compile_reduction: secondary port without provider");
            next_value = cb.constant(*img, width);
        } else {
            throw ModeViolation("compile_reduction: valuation templates disagree on the "
                                "providing edge");
        }
        return cb.mux_bits(d.j_last, cb.constant(at_last, width), next_value);
    }

    Bits pad_image(std::size_t o, const Decoded& d) {
        if (auto e = own_edge(lay_g4, o)) {
            if (e->to_fresh) return cb.add(pbase(d.p), cb.constant(e->to, width));
            return resolve_p_pred_sec(e->to, d.p);
        }
        auto sec_i = sec_index_of(lay_g4, o);
        if (!sec_i)
            throw ModeViolation("compile_reduction: pad vertex with no out-edge in "
                                "deterministic mode");
        const std::size_t i = *sec_i;

        auto img_last = forward_image_const(Region::G3, 0, i);
        if (!img_last)
            throw ModeViolation("compile_reduction: secondary port without provider");
        const std::uint64_t at_last = *img_last;

        Bits next_value;
        if (auto e = primary_edge(lay_g4, i)) {
            if (e->to_fresh) {
                auto p_next = cb.add(d.p, cb.constant(1, width));
                next_value = cb.add(pbase(p_next), cb.constant(e->to, width));
            } else {
                next_value = resolve_p_sec(e->to, d.p);
            }
        } else {
            if (!diagonal_port(lay_g4, i))
                throw ModeViolation("compile_reduction: provider deeper than one position "
                                    "is not supported");
            next_value = cb.constant(at_last, width);
        }
        return cb.mux_bits(d.p_last, cb.constant(at_last, width), next_value);
    }

    Circuit compile_deterministic() {
        Decoded d = decode(0);
        Bits image = cb.constant(0, width);

        // G2 vertices
        for (std::size_t o = 0; o < lay_g2.fresh.size(); ++o) {
            const auto cond = cb.eq_const(d.x, lay.g2_offset + o);
            Bits value;
            if (auto e = own_edge(lay_g2, o)) {
                value = cb.constant(lay.g2_offset + e->to, width);  // G2 is all fresh
            } else {
                const auto& name = lay_g2.fresh[o];
                const auto& sec = gadgets.g2.secondary_ports();
                auto at = std::find(sec.begin(), sec.end(), name);
                if (at == sec.end())
                    throw ModeViolation("compile_reduction: G2 vertex with no out-edge in "
                                        "deterministic mode");
                auto img = forward_image_const(Region::W, 0,
                                               static_cast<std::size_t>(at - sec.begin()));
                if (!img)
                    throw ModeViolation("compile_reduction: G2 vertex with no provider in "
                                        "deterministic mode");
                value = cb.constant(*img, width);
            }
            image = or_accumulate(image, masked(cond, value));
        }

        // valuation blocks
        for (std::size_t o = 0; o < lay.block_extent; ++o) {
            auto cond = cb.and_(d.in_w, cb.eq_const(d.r, o));
            Bits v0 = w_image_for_template(lay_g0, o, d);
            Bits v1 = w_image_for_template(lay_g1, o, d);
            Bits value = cb.mux_bits(use0_at(d.j, 0), v0, v1);
            image = or_accumulate(image, masked(cond, value));
        }

        // padding blocks
        if (lay.padding_copies > 0) {
            for (std::size_t o = 0; o < lay.pad_extent; ++o) {
                auto cond = cb.and_(d.in_pad, cb.eq_const(d.rp, o));
                Bits value = pad_image(o, d);
                image = or_accumulate(image, masked(cond, value));
            }
        }

        // G3 vertices
        for (std::size_t o = 0; o < lay.g3_extent; ++o) {
            auto cond = cb.eq_const(d.x, lay.g3_offset + o);
            Bits value;
            if (auto e = own_edge(lay_g3, o)) {
                if (e->to_fresh)
                    value = cb.constant(lay.g3_offset + e->to, width);
                else
                    value = cb.constant(resolve_pred_sec_const(Region::G3, 0, e->to), width);
            } else {
                throw ModeViolation("compile_reduction: G3 vertex with no out-edge in "
                                    "deterministic mode");
            }
            image = or_accumulate(image, masked(cond, value));
        }

        return cb.build(width, image);
    }

    // ------------------------------------------------------------------
    // non-deterministic adjacency circuit
    // ------------------------------------------------------------------

    // x == value of "secondary port i of the predecessor of W block j"
    std::uint32_t x_matches_w_pred_sec(const Bits& x, std::size_t i, const Bits& j) {
        return cb.eq(x, resolve_w_pred_sec(i, j));
    }

    Circuit compile_nondeterministic() {
        Decoded dx = decode(0);
        Decoded dy = decode(static_cast<std::uint32_t>(width));
        std::vector<std::uint32_t> clauses;

        // G2 internal edges
        for (const auto& e : template_edges(lay_g2)) {
            // all fresh in G2
            clauses.push_back(cb.and_(cb.eq_const(dx.x, lay.g2_offset + e.from),
                                      cb.eq_const(dy.x, lay.g2_offset + e.to)));
        }

        // valuation templates
        for (int t = 0; t < 2; ++t) {
            const TemplateLayout& tl = t == 0 ? lay_g0 : lay_g1;
            const TemplateLayout& other = t == 0 ? lay_g1 : lay_g0;
            for (const auto& e : template_edges(tl)) {
                auto gate_for = [&](const Bits& j, std::uint64_t shift) {
                    return t == 0 ? use0_at(j, shift) : cb.not_(use0_at(j, shift));
                };
                if (e.from_fresh && e.to_fresh) {
                    auto c = cb.and_all({dx.in_w, cb.eq_const(dx.r, e.from),
                                         gate_for(dx.j, 0), dy.in_w, cb.eq(dy.j, dx.j),
                                         cb.eq_const(dy.r, e.to)});
                    clauses.push_back(c);
                } else if (e.from_fresh && !e.to_fresh) {
                    auto target = resolve_w_pred_sec(e.to, dx.j);
                    auto c = cb.and_all({dx.in_w, cb.eq_const(dx.r, e.from),
                                         gate_for(dx.j, 0), cb.eq(dy.x, target)});
                    clauses.push_back(c);
                } else if (!e.from_fresh && e.to_fresh) {
                    auto source = resolve_w_pred_sec(e.from, dy.j);
                    auto c = cb.and_all({dy.in_w, cb.eq_const(dy.r, e.to),
                                         gate_for(dy.j, 0), cb.eq(dx.x, source)});
                    clauses.push_back(c);
                } else {
                    // port-to-port: the occurrence block is pinned by whichever
                    // side's chase lands on a fresh vertex
                    ChaseInfo cx = classify_chase(lay_g1, e.from);
                    ChaseInfo cy = classify_chase(lay_g1, e.to);
                    if (cx.diagonal && cy.diagonal) {
                        // vertex identities are block-independent, so the edge
                        // must not depend on the template either
                        bool in_other = false;
                        for (const auto& oe : template_edges(other))
                            if (!oe.from_fresh && !oe.to_fresh && oe.from == e.from &&
                                oe.to == e.to)
                                in_other = true;
                        if (!in_other)
                            throw ModeViolation("compile_reduction: pass-through edge "
                                                "present in only one valuation template");
                        if (t == 1) continue;  // already emitted for the other template
                        auto c = cb.and_(
                            cb.eq_const(dx.x, resolve_pred_sec_const(Region::W, 0, e.from)),
                            cb.eq_const(dy.x, resolve_pred_sec_const(Region::W, 0, e.to)));
                        clauses.push_back(c);
                    } else if (!cy.diagonal) {
                        // pin the block through y: y fresh at depth cy.depth
                        // y = wbase(j - 1 - cy.depth) + off  for the edge at block j
                        // i.e. j = j_y + 1 + cy.depth
                        const std::uint64_t shift = 1 + cy.depth;
                        auto j_edge = cb.add(dy.j, cb.constant(shift, width));
                        std::uint32_t gate =
                            t == 0 ? use0_at(dy.j, shift) : cb.not_(use0_at(dy.j, shift));
                        auto in_range = cb.less_than_const(
                            dy.j, lay.block_count >= shift ? lay.block_count - shift : 0);
                        auto source = resolve_w_pred_sec(e.from, j_edge);
                        auto c = cb.and_all({dy.in_w, cb.eq_const(dy.r, cy.fresh_offset),
                                             in_range, gate, cb.eq(dx.x, source)});
                        clauses.push_back(c);
                        // blocks j < shift: the y vertex lives in G2; constants
                        for (std::uint64_t jc = 0; jc < std::min<std::uint64_t>(
                                                        shift, lay.block_count); ++jc) {
                            if (use_g0_at(jc) != (t == 0)) continue;
                            auto c2 = cb.and_(
                                cb.eq_const(dx.x,
                                            resolve_pred_sec_const(Region::W, jc, e.from)),
                                cb.eq_const(dy.x,
                                            resolve_pred_sec_const(Region::W, jc, e.to)));
                            clauses.push_back(c2);
                        }
                    } else {
                        // pin through x
                        const std::uint64_t shift = 1 + cx.depth;
                        auto j_edge = cb.add(dx.j, cb.constant(shift, width));
                        std::uint32_t gate =
                            t == 0 ? use0_at(dx.j, shift) : cb.not_(use0_at(dx.j, shift));
                        auto in_range = cb.less_than_const(
                            dx.j, lay.block_count >= shift ? lay.block_count - shift : 0);
                        auto target = resolve_w_pred_sec(e.to, j_edge);
                        auto c = cb.and_all({dx.in_w, cb.eq_const(dx.r, cx.fresh_offset),
                                             in_range, gate, cb.eq(dy.x, target)});
                        clauses.push_back(c);
                        for (std::uint64_t jc = 0; jc < std::min<std::uint64_t>(
                                                        shift, lay.block_count); ++jc) {
                            if (use_g0_at(jc) != (t == 0)) continue;
                            auto c2 = cb.and_(
                                cb.eq_const(dx.x,
                                            resolve_pred_sec_const(Region::W, jc, e.from)),
                                cb.eq_const(dy.x,
                                            resolve_pred_sec_const(Region::W, jc, e.to)));
                            clauses.push_back(c2);
                        }
                    }
                }
            }
        }

        // padding templates
        if (lay.padding_copies > 0) {
            for (const auto& e : template_edges(lay_g4)) {
                if (e.from_fresh && e.to_fresh) {
                    clauses.push_back(cb.and_all({dx.in_pad, cb.eq_const(dx.rp, e.from),
                                                  dy.in_pad, cb.eq(dy.p, dx.p),
                                                  cb.eq_const(dy.rp, e.to)}));
                } else if (e.from_fresh && !e.to_fresh) {
                    auto target = resolve_p_pred_sec(e.to, dx.p);
                    clauses.push_back(cb.and_all({dx.in_pad, cb.eq_const(dx.rp, e.from),
                                                  cb.eq(dy.x, target)}));
                } else if (!e.from_fresh && e.to_fresh) {
                    auto source = resolve_p_pred_sec(e.from, dy.p);
                    clauses.push_back(cb.and_all({dy.in_pad, cb.eq_const(dy.rp, e.to),
                                                  cb.eq(dx.x, source)}));
                } else {
                    ChaseInfo cx = classify_chase(lay_g4, e.from);
                    ChaseInfo cy = classify_chase(lay_g4, e.to);
                    if (cx.diagonal && cy.diagonal) {
                        clauses.push_back(cb.and_(
                            cb.eq_const(dx.x, resolve_pred_sec_const(Region::Pad, 0, e.from)),
                            cb.eq_const(dy.x, resolve_pred_sec_const(Region::Pad, 0, e.to))));
                    } else if (!cy.diagonal) {
                        const std::uint64_t shift = 1 + cy.depth;
                        auto p_edge = cb.add(dy.p, cb.constant(shift, width));
                        auto in_range = cb.less_than_const(
                            dy.p, lay.padding_copies >= shift ? lay.padding_copies - shift : 0);
                        auto source = resolve_p_pred_sec(e.from, p_edge);
                        clauses.push_back(cb.and_all({dy.in_pad,
                                                      cb.eq_const(dy.rp, cy.fresh_offset),
                                                      in_range, cb.eq(dx.x, source)}));
                        for (std::uint64_t pc = 0; pc < std::min<std::uint64_t>(
                                                        shift, lay.padding_copies); ++pc) {
                            clauses.push_back(cb.and_(
                                cb.eq_const(dx.x,
                                            resolve_pred_sec_const(Region::Pad, pc, e.from)),
                                cb.eq_const(dy.x,
                                            resolve_pred_sec_const(Region::Pad, pc, e.to))));
                        }
                    } else {
                        const std::uint64_t shift = 1 + cx.depth;
                        auto p_edge = cb.add(dx.p, cb.constant(shift, width));
                        auto in_range = cb.less_than_const(
                            dx.p, lay.padding_copies >= shift ? lay.padding_copies - shift : 0);
                        auto target = resolve_p_pred_sec(e.to, p_edge);
                        clauses.push_back(cb.and_all({dx.in_pad,
                                                      cb.eq_const(dx.rp, cx.fresh_offset),
                                                      in_range, cb.eq(dy.x, target)}));
                        for (std::uint64_t pc = 0; pc < std::min<std::uint64_t>(
                                                        shift, lay.padding_copies); ++pc) {
                            clauses.push_back(cb.and_(
                                cb.eq_const(dx.x,
                                            resolve_pred_sec_const(Region::Pad, pc, e.from)),
                                cb.eq_const(dy.x,
                                            resolve_pred_sec_const(Region::Pad, pc, e.to))));
                        }
                    }
                }
            }
        }

        // G3
        for (const auto& e : template_edges(lay_g3)) {
            std::uint64_t sx = e.from_fresh ? lay.g3_offset + e.from
                                            : resolve_pred_sec_const(Region::G3, 0, e.from);
            std::uint64_t sy = e.to_fresh ? lay.g3_offset + e.to
                                          : resolve_pred_sec_const(Region::G3, 0, e.to);
            clauses.push_back(cb.and_(cb.eq_const(dx.x, sx), cb.eq_const(dy.x, sy)));
        }

        Bits out{cb.or_all(clauses)};
        return cb.build(2 * width, out);
    }
};

}  // namespace

ReductionOutput compile_reduction(const AssembledGadgets& g, const PropFormula& S,
                                  std::uint32_t s, NetworkKind psi_kind,
                                  const ReduceMode& mode, Orientation orient) {
    if (!conditions_check(g))
        throw ConditionViolation("compile_reduction: gadget family violates the "
                                 "interchangeability conditions");
    Layout lay = plan_layout(g, S, s, mode);

    if (psi_kind == NetworkKind::Deterministic) {
        GadgetFamily family = g.family();
        for (const auto& [symbol, member] : family.members) {
            for (std::size_t v = 0; v < member.graph().size(); ++v)
                if (member.graph().out_degree(v) > 1)
                    throw ModeViolation(std::string("compile_reduction: gadget '") + symbol +
                                        "' has out-degree above one");
        }
        // probe a small word covering every letter
        Word probe = "201";
        if (lay.padding_copies > 0) probe += "4";
        probe += "3";
        if (!out_degree_exactly(delta(family, probe).graph(), 1))
            throw ModeViolation("compile_reduction: gluing does not preserve out-degree one");
    }

    Compiler compiler(g, lay, S, orient, psi_kind);
    Circuit circuit = psi_kind == NetworkKind::Deterministic
                          ? compiler.compile_deterministic()
                          : compiler.compile_nondeterministic();

    ReductionOutput out;
    out.descriptor = NetworkDescriptor(psi_kind, lay.alphabet_sizes, std::move(circuit));
    out.layout = lay;
    out.orientation = orient;
    out.formula = S;
    out.s = s;
    out.expected_word = "2" + gadget_word(truth_word(S, s), orient) +
                        std::string(lay.padding_copies, '4') + "3";
    return out;
}

ReductionReport verify_reduction(const ReductionOutput& out, const AssembledGadgets& g,
                                 const Formula& psi, const EvalLimits& limits,
                                 std::uint64_t expand_bound) {
    ReductionReport report;
    Digraph dynamics = expand_dynamics(out.descriptor, expand_bound);
    Digraph expected = delta(g.family(), out.expected_word).graph();
    report.dynamics_matches_delta =
        isomorphic(dynamics, expected, std::max<std::uint64_t>(expand_bound, dynamics.size()));
    if (!report.dynamics_matches_delta)
        report.details += "expanded dynamics is not isomorphic to the glued word graph; ";

    const bool contains_zero =
        out.expected_word.find('0') != std::string::npos;
    const bool psi_holds = evaluate(psi, dynamics, limits);
    report.psi_matches_word = psi_holds == contains_zero;
    if (!report.psi_matches_word)
        report.details += "psi does not track the presence of the saturating gadget; ";

    const std::string truth = truth_word(out.formula, out.s);
    const bool satisfiable = truth.find('1') != std::string::npos;
    const bool word_marks = out.orientation == Orientation::FromSat
                                ? satisfiable
                                : truth.find('0') != std::string::npos;
    report.satisfiability_matches_word = word_marks == contains_zero;
    if (!report.satisfiability_matches_word)
        report.details += "truth-word marking disagrees with the gadget word; ";
    return report;
}

}  // namespace netglue
