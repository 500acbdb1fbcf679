#ifndef NETGLUE_CIRCUIT_HPP
#define NETGLUE_CIRCUIT_HPP

#include <cstdint>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "netglue/errors.hpp"

namespace netglue {

enum class GateOp : std::uint8_t { And, Or, Not, Xor, Const0, Const1, Input };

const char* gate_op_name(GateOp op);
GateOp gate_op_from_name(const std::string& name);

struct Gate {
    std::uint32_t id;
    GateOp op;
    std::vector<std::uint32_t> args;  // gate ids; for Input, the single input bit index
};

/// Boolean gate DAG: arguments must be defined before use, outputs reference
/// defined gates. Bit vectors are little-endian throughout.
class Circuit {
public:
    Circuit() = default;
    Circuit(std::size_t input_bit_count, std::vector<Gate> gates,
            std::vector<std::uint32_t> output_ids);

    std::size_t input_bit_count() const { return input_bits_; }
    std::size_t output_bit_count() const { return outputs_.size(); }
    std::size_t gate_count() const { return gates_.size(); }
    const std::vector<Gate>& gates() const { return gates_; }
    const std::vector<std::uint32_t>& output_ids() const { return outputs_; }

    std::vector<bool> eval(const std::vector<bool>& bits) const;
    /// Inputs passed as the low bits of `value`; returns outputs likewise.
    std::uint64_t eval_u64(std::uint64_t value) const;

private:
    std::size_t input_bits_ = 0;
    std::vector<Gate> gates_;
    std::vector<std::uint32_t> outputs_;
    bool dense_ = true;                        // gate ids equal positions
    std::vector<std::uint32_t> position_of_;   // id -> index when dense
    std::unordered_map<std::uint32_t, std::uint32_t> id_to_pos_;
};

std::vector<bool> eval_circuit(const Circuit& c, const std::vector<bool>& bits);

/// Incremental circuit construction; all helpers return gate ids.
class CircuitBuilder {
public:
    std::uint32_t input(std::uint32_t bit);
    std::uint32_t const0();
    std::uint32_t const1();
    std::uint32_t not_(std::uint32_t a);
    std::uint32_t and_(std::uint32_t a, std::uint32_t b);
    std::uint32_t or_(std::uint32_t a, std::uint32_t b);
    std::uint32_t xor_(std::uint32_t a, std::uint32_t b);
    std::uint32_t and_all(const std::vector<std::uint32_t>& xs);
    std::uint32_t or_all(const std::vector<std::uint32_t>& xs);
    std::uint32_t mux(std::uint32_t sel, std::uint32_t when1, std::uint32_t when0);

    using Bits = std::vector<std::uint32_t>;

    Bits inputs(std::uint32_t first_bit, std::size_t count);
    Bits constant(std::uint64_t value, std::size_t bit_width);
    Bits mux_bits(std::uint32_t sel, const Bits& when1, const Bits& when0);
    Bits add(const Bits& a, const Bits& b);                 // same width, wraps
    Bits sub(const Bits& a, const Bits& b);                 // same width, wraps
    std::uint32_t eq(const Bits& a, const Bits& b);
    std::uint32_t eq_const(const Bits& a, std::uint64_t value);
    std::uint32_t less_than(const Bits& a, const Bits& b);  // unsigned a < b
    std::uint32_t less_than_const(const Bits& a, std::uint64_t value);
    Bits mul_const(const Bits& a, std::uint64_t factor, std::size_t out_width);
    /// Unsigned division by a compile-time constant; returns {quotient, remainder}.
    std::pair<Bits, Bits> divmod_const(const Bits& a, std::uint64_t divisor);
    /// Multiplexes a table of constants by an index value (table is padded
    /// with zeros up to the next power of two).
    Bits table_lookup(const Bits& index, const std::vector<std::uint64_t>& table,
                      std::size_t out_width);

    Circuit build(std::size_t input_bit_count, const Bits& outputs) const;

private:
    std::uint32_t emit(GateOp op, std::vector<std::uint32_t> args);
    std::vector<Gate> gates_;
    std::int64_t const0_ = -1, const1_ = -1;
};

}  // namespace netglue

#endif
