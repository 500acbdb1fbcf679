#ifndef NETGLUE_EVALUATE_HPP
#define NETGLUE_EVALUATE_HPP

#include "netglue/digraph.hpp"
#include "netglue/formula.hpp"

namespace netglue {

struct EvalLimits {
    std::size_t point_bound = std::size_t{1} << 20;  // vertex quantifiers only
    std::size_t set_bound = 20;                      // when any set quantifier occurs
};

/// Brute-force MSO satisfaction on the finite digraph. Quantifiers recurse
/// with short-circuiting; set variables range over all vertex subsets.
bool evaluate(const Formula& f, const Digraph& g, const EvalLimits& limits = {});

struct EfLimits {
    std::size_t max_vertices = 6;
    std::size_t max_rounds = 3;
};

/// m-round MSO Ehrenfeucht-Fraisse game with point and set moves; true iff
/// the duplicator wins, i.e. g and h agree on all MSO sentences of
/// quantifier rank at most m.
bool ef_equiv(const Digraph& g, const Digraph& h, std::size_t m, const EfLimits& limits = {});

}  // namespace netglue

#endif
