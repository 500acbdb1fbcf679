#include "netglue/circuit.hpp"

#include <algorithm>
#include <unordered_map>

namespace netglue {

const char* gate_op_name(GateOp op) {
    switch (op) {
        case GateOp::And: return "AND";
        case GateOp::Or: return "OR";
        case GateOp::Not: return "NOT";
        case GateOp::Xor: return "XOR";
        case GateOp::Const0: return "CONST0";
        case GateOp::Const1: return "CONST1";
        case GateOp::Input: return "INPUT";
    }
    return "?";
}

GateOp gate_op_from_name(const std::string& name) {
    if (name == "AND") return GateOp::And;
    if (name == "OR") return GateOp::Or;
    if (name == "NOT") return GateOp::Not;
    if (name == "XOR") return GateOp::Xor;
    if (name == "CONST0") return GateOp::Const0;
    if (name == "CONST1") return GateOp::Const1;
    if (name == "INPUT") return GateOp::Input;
    throw JsonFormatError("unknown gate op: " + name);
}

Circuit::Circuit(std::size_t input_bit_count, std::vector<Gate> gates,
                 std::vector<std::uint32_t> output_ids)
    : input_bits_(input_bit_count), gates_(std::move(gates)), outputs_(std::move(output_ids)) {
    std::unordered_map<std::uint32_t, std::uint32_t> pos;
    pos.reserve(gates_.size());
    for (std::uint32_t i = 0; i < gates_.size(); ++i) {
        const Gate& gate = gates_[i];
        if (pos.count(gate.id))
            throw GraphError("circuit: duplicate gate id " + std::to_string(gate.id));
        std::size_t arity = 0;
        switch (gate.op) {
            case GateOp::And:
            case GateOp::Or:
            case GateOp::Xor: arity = 2; break;
            case GateOp::Not: arity = 1; break;
            case GateOp::Const0:
            case GateOp::Const1: arity = 0; break;
            case GateOp::Input: arity = 1; break;
        }
        if (gate.args.size() != arity)
            throw ArityMismatch("circuit: gate " + std::to_string(gate.id) +
                                " has wrong argument count");
        if (gate.op == GateOp::Input) {
            if (gate.args[0] >= input_bits_)
                throw GraphError("circuit: input index out of range at gate " +
                                 std::to_string(gate.id));
        } else {
            for (std::uint32_t arg : gate.args)
                if (!pos.count(arg))
                    throw GraphError("circuit: gate " + std::to_string(gate.id) +
                                     " uses an argument defined later or never");
        }
        pos.emplace(gate.id, i);
    }
    position_of_.assign(gates_.size(), 0);
    // compact id -> position table when ids are dense, else rebuild per eval
    dense_ = true;
    for (const auto& gate : gates_)
        if (gate.id >= gates_.size()) dense_ = false;
    if (dense_) {
        position_of_.assign(gates_.size(), 0);
        for (std::uint32_t i = 0; i < gates_.size(); ++i) position_of_[gates_[i].id] = i;
    }
    for (std::uint32_t out : outputs_)
        if (!pos.count(out)) throw GraphError("circuit: undefined output id");
    id_to_pos_ = std::move(pos);
}

std::vector<bool> Circuit::eval(const std::vector<bool>& bits) const {
    if (bits.size() != input_bits_)
        throw ArityMismatch("eval_circuit: expected " + std::to_string(input_bits_) +
                            " input bits, got " + std::to_string(bits.size()));
    std::vector<char> value(gates_.size(), 0);
    auto value_of = [&](std::uint32_t id) -> char {
        return value[dense_ ? position_of_[id] : id_to_pos_.at(id)];
    };
    for (std::size_t i = 0; i < gates_.size(); ++i) {
        const Gate& gate = gates_[i];
        char v = 0;
        switch (gate.op) {
            case GateOp::And: v = value_of(gate.args[0]) & value_of(gate.args[1]); break;
            case GateOp::Or: v = value_of(gate.args[0]) | value_of(gate.args[1]); break;
            case GateOp::Xor: v = value_of(gate.args[0]) ^ value_of(gate.args[1]); break;
            case GateOp::Not: v = !value_of(gate.args[0]); break;
            case GateOp::Const0: v = 0; break;
            case GateOp::Const1: v = 1; break;
            case GateOp::Input: v = bits[gate.args[0]] ? 1 : 0; break;
        }
        value[i] = v;
    }
    std::vector<bool> out;
    out.reserve(outputs_.size());
    for (std::uint32_t id : outputs_) out.push_back(value_of(id) != 0);
    return out;
}

std::uint64_t Circuit::eval_u64(std::uint64_t input) const {
    std::vector<bool> bits(input_bits_);
    for (std::size_t i = 0; i < input_bits_; ++i) bits[i] = (input >> i) & 1u;
    auto out = eval(bits);
    std::uint64_t v = 0;
    for (std::size_t i = 0; i < out.size() && i < 64; ++i)
        if (out[i]) v |= std::uint64_t{1} << i;
    return v;
}

std::vector<bool> eval_circuit(const Circuit& c, const std::vector<bool>& bits) {
    return c.eval(bits);
}

std::uint32_t CircuitBuilder::emit(GateOp op, std::vector<std::uint32_t> args) {
    const auto id = static_cast<std::uint32_t>(gates_.size());
    gates_.push_back(Gate{id, op, std::move(args)});
    return id;
}

std::uint32_t CircuitBuilder::input(std::uint32_t bit) { return emit(GateOp::Input, {bit}); }

std::uint32_t CircuitBuilder::const0() {
    if (const0_ < 0) const0_ = emit(GateOp::Const0, {});
    return static_cast<std::uint32_t>(const0_);
}

std::uint32_t CircuitBuilder::const1() {
    if (const1_ < 0) const1_ = emit(GateOp::Const1, {});
    return static_cast<std::uint32_t>(const1_);
}

std::uint32_t CircuitBuilder::not_(std::uint32_t a) { return emit(GateOp::Not, {a}); }
std::uint32_t CircuitBuilder::and_(std::uint32_t a, std::uint32_t b) {
    return emit(GateOp::And, {a, b});
}
std::uint32_t CircuitBuilder::or_(std::uint32_t a, std::uint32_t b) {
    return emit(GateOp::Or, {a, b});
}
std::uint32_t CircuitBuilder::xor_(std::uint32_t a, std::uint32_t b) {
    return emit(GateOp::Xor, {a, b});
}

std::uint32_t CircuitBuilder::and_all(const std::vector<std::uint32_t>& xs) {
    if (xs.empty()) return const1();
    std::uint32_t acc = xs[0];
    for (std::size_t i = 1; i < xs.size(); ++i) acc = and_(acc, xs[i]);
    return acc;
}

std::uint32_t CircuitBuilder::or_all(const std::vector<std::uint32_t>& xs) {
    if (xs.empty()) return const0();
    std::uint32_t acc = xs[0];
    for (std::size_t i = 1; i < xs.size(); ++i) acc = or_(acc, xs[i]);
    return acc;
}

std::uint32_t CircuitBuilder::mux(std::uint32_t sel, std::uint32_t when1, std::uint32_t when0) {
    return or_(and_(sel, when1), and_(not_(sel), when0));
}

CircuitBuilder::Bits CircuitBuilder::inputs(std::uint32_t first_bit, std::size_t count) {
    Bits out(count);
    for (std::size_t i = 0; i < count; ++i) out[i] = input(first_bit + static_cast<std::uint32_t>(i));
    return out;
}

CircuitBuilder::Bits CircuitBuilder::constant(std::uint64_t value, std::size_t bit_width) {
    Bits out(bit_width);
    for (std::size_t i = 0; i < bit_width; ++i)
        out[i] = ((value >> i) & 1u) ? const1() : const0();
    return out;
}

CircuitBuilder::Bits CircuitBuilder::mux_bits(std::uint32_t sel, const Bits& when1,
                                              const Bits& when0) {
    Bits out(when1.size());
    for (std::size_t i = 0; i < when1.size(); ++i) out[i] = mux(sel, when1[i], when0[i]);
    return out;
}

CircuitBuilder::Bits CircuitBuilder::add(const Bits& a, const Bits& b) {
    Bits out(a.size());
    std::uint32_t carry = const0();
    for (std::size_t i = 0; i < a.size(); ++i) {
        std::uint32_t axb = xor_(a[i], b[i]);
        out[i] = xor_(axb, carry);
        carry = or_(and_(a[i], b[i]), and_(axb, carry));
    }
    return out;
}

CircuitBuilder::Bits CircuitBuilder::sub(const Bits& a, const Bits& b) {
    // a + ~b + 1, ripple borrow folded into the initial carry
    Bits out(a.size());
    std::uint32_t carry = const1();
    for (std::size_t i = 0; i < a.size(); ++i) {
        std::uint32_t nb = not_(b[i]);
        std::uint32_t axb = xor_(a[i], nb);
        out[i] = xor_(axb, carry);
        carry = or_(and_(a[i], nb), and_(axb, carry));
    }
    return out;
}

std::uint32_t CircuitBuilder::eq(const Bits& a, const Bits& b) {
    std::vector<std::uint32_t> same;
    same.reserve(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) same.push_back(not_(xor_(a[i], b[i])));
    return and_all(same);
}

std::uint32_t CircuitBuilder::eq_const(const Bits& a, std::uint64_t value) {
    if (a.size() < 64 && (value >> a.size()) != 0) return const0();  // unrepresentable
    std::vector<std::uint32_t> lits;
    lits.reserve(a.size());
    for (std::size_t i = 0; i < a.size(); ++i)
        lits.push_back(((value >> i) & 1u) ? a[i] : not_(a[i]));
    return and_all(lits);
}

std::uint32_t CircuitBuilder::less_than(const Bits& a, const Bits& b) {
    // borrow out of a - b
    std::uint32_t carry = const1();
    for (std::size_t i = 0; i < a.size(); ++i) {
        std::uint32_t nb = not_(b[i]);
        std::uint32_t axb = xor_(a[i], nb);
        carry = or_(and_(a[i], nb), and_(axb, carry));
    }
    return not_(carry);
}

std::uint32_t CircuitBuilder::less_than_const(const Bits& a, std::uint64_t value) {
    if (a.size() < 64 && value >= (std::uint64_t{1} << a.size()))
        return const1();  // every representable a is below the bound
    return less_than(a, constant(value, a.size()));
}

CircuitBuilder::Bits CircuitBuilder::mul_const(const Bits& a, std::uint64_t factor,
                                               std::size_t out_width) {
    Bits acc = constant(0, out_width);
    for (std::size_t shift = 0; shift < out_width; ++shift) {
        if (!((factor >> shift) & 1u)) continue;
        Bits shifted = constant(0, out_width);
        for (std::size_t i = 0; i + shift < out_width && i < a.size(); ++i)
            shifted[i + shift] = a[i];
        acc = add(acc, shifted);
    }
    return acc;
}

std::pair<CircuitBuilder::Bits, CircuitBuilder::Bits> CircuitBuilder::divmod_const(
    const Bits& a, std::uint64_t divisor) {
    if (divisor == 0) throw Error("divmod_const: zero divisor");
    const std::size_t width = a.size();
    Bits quotient(width, const0());
    Bits rem = constant(0, width);
    for (std::size_t i = width; i-- > 0;) {
        // rem = (rem << 1) | a[i]
        Bits shifted(width);
        shifted[0] = a[i];
        for (std::size_t j = 1; j < width; ++j) shifted[j] = rem[j - 1];
        rem = std::move(shifted);
        std::uint32_t ge = not_(less_than_const(rem, divisor));
        Bits reduced = sub(rem, constant(divisor, width));
        rem = mux_bits(ge, reduced, rem);
        quotient[i] = ge;
    }
    return {std::move(quotient), std::move(rem)};
}

CircuitBuilder::Bits CircuitBuilder::table_lookup(const Bits& index,
                                                  const std::vector<std::uint64_t>& table,
                                                  std::size_t out_width) {
    std::size_t depth = 0;
    while ((std::size_t{1} << depth) < table.size()) ++depth;
    // recursive mux tree on the index bits
    struct Rec {
        CircuitBuilder& cb;
        const Bits& index;
        const std::vector<std::uint64_t>& table;
        std::size_t out_width;

        Bits at(std::size_t base, std::size_t level) {
            if (base >= table.size()) return cb.constant(0, out_width);
            if (level == 0) return cb.constant(table[base], out_width);
            const std::size_t half = std::size_t{1} << (level - 1);
            Bits low = at(base, level - 1);
            Bits high = at(base + half, level - 1);
            std::uint32_t sel = level - 1 < index.size() ? index[level - 1] : cb.const0();
            return cb.mux_bits(sel, high, low);
        }
    } rec{*this, index, table, out_width};
    if (table.empty()) return constant(0, out_width);
    return rec.at(0, depth);
}

Circuit CircuitBuilder::build(std::size_t input_bit_count, const Bits& outputs) const {
    return Circuit(input_bit_count, gates_, outputs);
}

}  // namespace netglue
