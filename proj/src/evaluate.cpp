#include "netglue/evaluate.hpp"

#include <cstdint>
#include <vector>

namespace netglue {

namespace {

struct Evaluator {
    const Digraph& g;
    std::vector<std::size_t> points;
    std::vector<std::uint32_t> sets;

    bool eval(const Formula& f) {
        switch (f.kind) {
            case FormulaKind::EdgeAtom:
                return g.has_edge(points[f.slot], points[f.slot2]);
            case FormulaKind::EqAtom:
                return points[f.slot] == points[f.slot2];
            case FormulaKind::MemberAtom:
                return (sets[f.slot2] >> points[f.slot]) & 1u;
            case FormulaKind::Not:
                return !eval(f.children[0]);
            case FormulaKind::And:
                return eval(f.children[0]) && eval(f.children[1]);
            case FormulaKind::Or:
                return eval(f.children[0]) || eval(f.children[1]);
            case FormulaKind::Implies:
                return !eval(f.children[0]) || eval(f.children[1]);
            case FormulaKind::ExistsVertex:
                for (std::size_t v = 0; v < g.size(); ++v) {
                    points[f.slot] = v;
                    if (eval(f.children[0])) return true;
                }
                return false;
            case FormulaKind::ForallVertex:
                for (std::size_t v = 0; v < g.size(); ++v) {
                    points[f.slot] = v;
                    if (!eval(f.children[0])) return false;
                }
                return true;
            case FormulaKind::ExistsSet: {
                const std::uint32_t end = std::uint32_t{1} << g.size();
                for (std::uint32_t mask = 0; mask < end; ++mask) {
                    sets[f.slot] = mask;
                    if (eval(f.children[0])) return true;
                }
                return false;
            }
            case FormulaKind::ForallSet: {
                const std::uint32_t end = std::uint32_t{1} << g.size();
                for (std::uint32_t mask = 0; mask < end; ++mask) {
                    sets[f.slot] = mask;
                    if (!eval(f.children[0])) return false;
                }
                return true;
            }
        }
        return false;
    }
};

void check_closed(const Formula& f) {
    switch (f.kind) {
        case FormulaKind::EdgeAtom:
        case FormulaKind::EqAtom:
        case FormulaKind::MemberAtom:
            if (f.slot < 0 || f.slot2 < 0)
                throw FreeVariable("evaluate: formula has an unresolved variable");
            return;
        default:
            for (const auto& child : f.children) check_closed(child);
    }
}

}  // namespace

bool evaluate(const Formula& f, const Digraph& g, const EvalLimits& limits) {
    check_closed(f);
    if (has_set_quantifier(f)) {
        if (g.size() > limits.set_bound || limits.set_bound > 31)
            throw SizeBoundExceeded("evaluate: set quantification over " +
                                    std::to_string(g.size()) + " vertices exceeds bound");
    } else if (g.size() > limits.point_bound) {
        throw SizeBoundExceeded("evaluate: graph exceeds vertex-quantifier bound");
    }
    Evaluator ev{g,
                 std::vector<std::size_t>(point_slot_count(f), 0),
                 std::vector<std::uint32_t>(set_slot_count(f), 0)};
    return ev.eval(f);
}

namespace {

struct Game {
    std::vector<std::uint64_t> adj_g, adj_h;  // out-neighbor bit rows
    std::size_t ng, nh;
    std::vector<std::size_t> pg, ph;      // chosen points
    std::vector<std::uint64_t> sg, sh;    // chosen sets

    Game(const Digraph& g, const Digraph& h) : ng(g.size()), nh(h.size()) {
        adj_g.assign(ng, 0);
        adj_h.assign(nh, 0);
        for (const auto& [from, to] : g.edges()) adj_g[from] |= std::uint64_t{1} << to;
        for (const auto& [from, to] : h.edges()) adj_h[from] |= std::uint64_t{1} << to;
    }

    bool edge_g(std::size_t a, std::size_t b) const { return (adj_g[a] >> b) & 1u; }
    bool edge_h(std::size_t a, std::size_t b) const { return (adj_h[a] >> b) & 1u; }

    bool point_consistent(std::size_t x, std::size_t y) const {
        if (edge_g(x, x) != edge_h(y, y)) return false;
        for (std::size_t i = 0; i < pg.size(); ++i) {
            if ((x == pg[i]) != (y == ph[i])) return false;
            if (edge_g(x, pg[i]) != edge_h(y, ph[i])) return false;
            if (edge_g(pg[i], x) != edge_h(ph[i], y)) return false;
        }
        for (std::size_t j = 0; j < sg.size(); ++j)
            if (((sg[j] >> x) & 1u) != ((sh[j] >> y) & 1u)) return false;
        return true;
    }

    bool set_consistent(std::uint64_t s, std::uint64_t t) const {
        for (std::size_t i = 0; i < pg.size(); ++i)
            if (((s >> pg[i]) & 1u) != ((t >> ph[i]) & 1u)) return false;
        return true;
    }

    bool duplicator_wins(std::size_t rounds) {
        if (rounds == 0) return true;

        // point moves first: they are cheap and usually decisive
        for (std::size_t x = 0; x < ng; ++x) {
            bool answered = false;
            for (std::size_t y = 0; y < nh && !answered; ++y) {
                if (!point_consistent(x, y)) continue;
                pg.push_back(x);
                ph.push_back(y);
                answered = duplicator_wins(rounds - 1);
                pg.pop_back();
                ph.pop_back();
            }
            if (!answered) return false;
        }
        for (std::size_t y = 0; y < nh; ++y) {
            bool answered = false;
            for (std::size_t x = 0; x < ng && !answered; ++x) {
                if (!point_consistent(x, y)) continue;
                pg.push_back(x);
                ph.push_back(y);
                answered = duplicator_wins(rounds - 1);
                pg.pop_back();
                ph.pop_back();
            }
            if (!answered) return false;
        }
        const std::uint64_t endg = std::uint64_t{1} << ng;
        const std::uint64_t endh = std::uint64_t{1} << nh;
        for (std::uint64_t s = 0; s < endg; ++s) {
            bool answered = false;
            for (std::uint64_t t = 0; t < endh && !answered; ++t) {
                if (!set_consistent(s, t)) continue;
                sg.push_back(s);
                sh.push_back(t);
                answered = duplicator_wins(rounds - 1);
                sg.pop_back();
                sh.pop_back();
            }
            if (!answered) return false;
        }
        for (std::uint64_t t = 0; t < endh; ++t) {
            bool answered = false;
            for (std::uint64_t s = 0; s < endg && !answered; ++s) {
                if (!set_consistent(s, t)) continue;
                sg.push_back(s);
                sh.push_back(t);
                answered = duplicator_wins(rounds - 1);
                sg.pop_back();
                sh.pop_back();
            }
            if (!answered) return false;
        }
        return true;
    }
};

}  // namespace

bool ef_equiv(const Digraph& g, const Digraph& h, std::size_t m, const EfLimits& limits) {
    if (g.size() > limits.max_vertices || h.size() > limits.max_vertices)
        throw SizeBoundExceeded("ef_equiv: graph exceeds configured size bound");
    if (m > limits.max_rounds)
        throw SizeBoundExceeded("ef_equiv: round count exceeds configured bound");
    if (g.size() == 0 || h.size() == 0) {
        // A point move is unanswerable iff exactly one side is empty.
        return (g.size() == 0) == (h.size() == 0) || m == 0;
    }
    Game game(g, h);
    return game.duplicator_wins(m);
}

}  // namespace netglue
