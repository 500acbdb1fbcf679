#ifndef NETGLUE_DEMOS_HPP
#define NETGLUE_DEMOS_HPP

#include "netglue/reduce.hpp"

namespace netglue {
namespace demos {

/// Fixed-point demo family (Boolean, deterministic, no ports): each
/// valuation block is a two-vertex gadget that forms a path-with-loop when
/// the assignment satisfies S and a 2-cycle otherwise; the prefix and suffix
/// gadgets are empty.
AssembledGadgets fixed_point_gadgets();

/// Nine-state q=3 demo family (non-deterministic, one port): a nine-vertex
/// chain prefix, two-vertex blocks appending chain segments, and a loop on
/// the block's exit when the assignment satisfies S.
AssembledGadgets q3_chain_gadgets();

/// Nine-vertex, two-automaton NAN over alphabet {0,1,2}: a directed 9-cycle
/// whose edge i -> i+1 (for i < 8) is present iff assignment i satisfies S on
/// the first three input bits. Strongly connected iff S is a tautology.
NetworkDescriptor cycle_gate_nan(const PropFormula& S);

/// MSO sentence: every proper nonempty vertex subset has an outgoing edge
/// (strong connectivity).
const Formula& strong_connectivity();

/// MSO sentence: some vertex has a self-loop.
const Formula& has_fixed_point();

struct PumpFixture {
    Digraph model;        // functional: a chain feeding a looping vertex
    TreeDecomp decomp;    // path decomposition with the loop vertex in every bag
    Formula psi;          // fixed-point existence
    ContextFamily ctx;
};

PumpFixture chain_pump_fixture();

}  // namespace demos
}  // namespace netglue

#endif
