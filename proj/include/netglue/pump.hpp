#ifndef NETGLUE_PUMP_HPP
#define NETGLUE_PUMP_HPP

#include <optional>
#include <vector>

#include "netglue/evaluate.hpp"
#include "netglue/treedec.hpp"

namespace netglue {

/// Finite probing surrogate for context equivalence: a fixed list of
/// right-gluing contexts, all of one arity.
struct ContextFamily {
    std::vector<PortedGraph> contexts;

    explicit ContextFamily(std::vector<PortedGraph> contexts_in);
    std::size_t arity() const;
};

/// True iff g + H and h + H agree on psi for every context H in the family.
bool empirical_equiv(const PortedGraph& g, const PortedGraph& h, const Formula& psi,
                     const ContextFamily& ctx, const EvalLimits& limits = {});

/// Pumpable decomposition segment: glue word 2 . 1^l . 3 over {1: g1 between
/// the two cut bags, 2: prefix, 3: suffix}.
struct PumpTriple {
    PortedGraph g1;  // pumpable part
    PortedGraph g2;  // prefix, primary ports at the decomposition root
    PortedGraph g3;  // suffix below the lower cut

    PumpTriple() = default;
    PumpTriple(PortedGraph g1_in, PortedGraph g2_in, PortedGraph g3_in);

    GadgetFamily family() const;  // members '1', '2', '3'
};

/// Searches ancestor/descendant node pairs that are boundaried-subgraph
/// different yet context-equivalent, splits the decomposition there, and
/// returns the corresponding boundaried graphs. The candidate middle part is
/// afterwards swapped for the smallest context-equivalent region with the
/// same port-overlap pattern, when one exists.
std::optional<PumpTriple> find_pump(const Digraph& model, const TreeDecomp& decomp,
                                    const Formula& psi, const ContextFamily& ctx,
                                    const EvalLimits& limits = {});

/// Checks psi (and out-degree-one when requested) on every pumped word up to
/// the given repetition count.
bool verify_pump(const PumpTriple& t, const Formula& psi, std::size_t l_max,
                 bool require_functional, const EvalLimits& limits = {});

enum class Saturation { AllModels, AllCounterModels, Mixed };

/// Classifies the truth of psi over {G + omega : G in family} (disjoint
/// unions).
Saturation saturation_check(const Digraph& omega, const Formula& psi,
                            const std::vector<Digraph>& family, const EvalLimits& limits = {});

/// The five-gadget family of the metareduction, with the size bookkeeping
/// (a = |g1~| - k, b = |g2 + g3|) and the copy multiplicity alpha.
struct AssembledGadgets {
    PortedGraph g0;  // saturating copy: omega + g1~, padded with loop vertices
    PortedGraph g1;  // alpha-fold self-gluing of g1~
    PortedGraph g2;
    PortedGraph g3;
    PortedGraph g4;  // g1~
    std::uint64_t alpha = 1;
    std::uint64_t a = 0;
    std::uint64_t b = 0;

    GadgetFamily family() const;  // members '0'..'4'
};

/// Builds G0..G4 from a verified pump triple and a saturating graph. When q
/// is given, alpha is the least power of q making |G1| >= |omega + g1~|;
/// otherwise the least such integer.
AssembledGadgets assemble_gadgets(const PumpTriple& t, const Digraph& omega,
                                  std::optional<std::uint64_t> q = std::nullopt);

/// Conditions on the assembled family: equal sizes, matching port overlap
/// patterns with a vertex outside the overlap, and matching out-neighborhoods
/// on the shared overlap ports.
bool conditions_check(const AssembledGadgets& g);

}  // namespace netglue

#endif
