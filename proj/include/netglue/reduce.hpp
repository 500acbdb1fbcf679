#ifndef NETGLUE_REDUCE_HPP
#define NETGLUE_REDUCE_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "netglue/annet.hpp"
#include "netglue/arith.hpp"
#include "netglue/evaluate.hpp"
#include "netglue/pump.hpp"

namespace netglue {

/// Propositional formula over variables x1..xs.
struct PropFormula {
    enum class Kind { Var, Not, And, Or };
    Kind kind = Kind::Var;
    std::uint32_t var = 0;  // 1-based
    std::vector<PropFormula> children;

    static PropFormula variable(std::uint32_t index);
    static PropFormula negation(PropFormula f);
    static PropFormula conjunction(PropFormula a, PropFormula b);
    static PropFormula disjunction(PropFormula a, PropFormula b);

    std::uint32_t max_var() const;
    bool eval(std::uint32_t assignment) const;  // bit i-1 of assignment = x_i
};

/// Grammar: vars "x<digits>", operators ! & | and parentheses, precedence
/// ! > & > |.
PropFormula parse_prop(const std::string& text);
std::string print_prop(const PropFormula& f);

/// Length-2^s word; position i holds '1' iff assignment i satisfies S
/// (x1 = least significant bit of i).
std::string truth_word(const PropFormula& S, std::uint32_t s);

/// Lowers a propositional formula to one gate over the given assignment bits
/// (bit i-1 carries x_i; missing bits read as false).
std::uint32_t lower_prop(CircuitBuilder& cb, const PropFormula& S,
                         const CircuitBuilder::Bits& assignment);

enum class Orientation { FromSat, FromUnsat };

/// Word over gadget letters {0,1}: letter 0 marks the positions that receive
/// the saturating gadget G0 under the chosen orientation.
std::string gadget_word(const std::string& truth, Orientation orient);

struct ReduceMode {
    std::optional<std::uint32_t> q;  // empty: Boolean arithmetic; else q-uniform
};

struct Layout {
    std::size_t k = 0;
    std::uint32_t s = 0;
    std::uint64_t a = 0, b = 0, alpha = 1, padding_copies = 0;  // L
    std::uint32_t q = 2;
    std::uint32_t mu = 0;           // q-uniform exponent step (unused for Boolean)
    std::uint64_t g2_offset = 0, g2_extent = 0;
    std::uint64_t blocks_offset = 0, block_extent = 0, block_count = 0;  // 2^s blocks
    std::uint64_t g3_offset = 0, g3_extent = 0;
    std::uint64_t pad_offset = 0, pad_extent = 0;  // per pad block
    std::uint64_t total = 0;        // |X| = q^n
    std::size_t n = 0;              // automata count
    std::vector<std::uint32_t> alphabet_sizes;
};

/// Region offsets for given gadget sizes and an explicit padding count
/// (no arithmetic checks); plan_layout wraps this with the padding formulas.
Layout layout_regions(std::size_t g2_size, std::size_t g1_size, std::size_t g3_size,
                      std::size_t g4_size, std::size_t k, std::uint32_t s,
                      std::uint64_t padding_copies);

/// Computes the padding count and automata count from the matching padding
/// formula and lays out the configuration space. Throws ArithmeticInfeasible
/// when the arithmetic preconditions fail.
Layout plan_layout(const AssembledGadgets& g, const PropFormula& S, std::uint32_t s,
                   const ReduceMode& mode);

struct ReductionOutput {
    NetworkDescriptor descriptor;
    Layout layout;
    std::string expected_word;  // 2 . w . 4^L . 3
    Orientation orientation = Orientation::FromSat;
    PropFormula formula;
    std::uint32_t s = 0;
};

/// Compiles the succinct network whose dynamics is delta over
/// 2 . w . 4^L . 3: the circuit decodes the input's region, recovers the
/// valuation and intra-block position, evaluates S, and selects the
/// embedded gadget tables with port merges resolved across region
/// boundaries.
ReductionOutput compile_reduction(const AssembledGadgets& g, const PropFormula& S,
                                  std::uint32_t s, NetworkKind psi_kind,
                                  const ReduceMode& mode,
                                  Orientation orient = Orientation::FromSat);

struct ReductionReport {
    bool dynamics_matches_delta = false;
    bool psi_matches_word = false;
    bool satisfiability_matches_word = false;
    std::string details;

    bool all_ok() const {
        return dynamics_matches_delta && psi_matches_word && satisfiability_matches_word;
    }
};

/// End-to-end verifier: expands the compiled descriptor, compares with the
/// glued word graph, and checks the psi/satisfiability correspondences.
ReductionReport verify_reduction(const ReductionOutput& out, const AssembledGadgets& g,
                                 const Formula& psi, const EvalLimits& limits = {},
                                 std::uint64_t expand_bound = kDefaultExpandBound);

}  // namespace netglue

#endif
