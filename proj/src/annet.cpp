#include "netglue/annet.hpp"

#include <string>

namespace netglue {

std::size_t ceil_log2(std::uint64_t n) {
    std::size_t bits = 0;
    while ((std::uint64_t{1} << bits) < n) ++bits;
    return bits;
}

NetworkDescriptor::NetworkDescriptor(NetworkKind kind_in,
                                     std::vector<std::uint32_t> alphabet_sizes_in,
                                     Circuit circuit_in, std::uint64_t size_budget_factor)
    : kind(kind_in), alphabet_sizes(std::move(alphabet_sizes_in)), circuit(std::move(circuit_in)) {
    if (alphabet_sizes.empty()) throw SizeMismatch("descriptor: no automata");
    for (std::uint32_t q : alphabet_sizes)
        if (q == 0) throw SizeMismatch("descriptor: empty alphabet");
    const std::uint64_t x = config_count();
    const std::size_t bits = config_bits();
    if (kind == NetworkKind::Deterministic) {
        if (circuit.input_bit_count() != bits || circuit.output_bit_count() != bits)
            throw ArityMismatch("deterministic descriptor: circuit must have ceil(log2|X|) "
                                "input and output bits");
        const std::uint64_t budget = size_budget_factor * x * (bits == 0 ? 1 : bits);
        if (circuit.gate_count() > budget)
            throw BudgetExceeded("deterministic descriptor: gate count " +
                                 std::to_string(circuit.gate_count()) + " exceeds budget " +
                                 std::to_string(budget));
    } else {
        if (circuit.input_bit_count() != 2 * bits || circuit.output_bit_count() != 1)
            throw ArityMismatch("non-deterministic descriptor: circuit must have 2*ceil(log2|X|) "
                                "input bits and one output bit");
        const std::uint64_t budget = size_budget_factor * x * x;
        if (circuit.gate_count() > budget)
            throw BudgetExceeded("non-deterministic descriptor: gate count exceeds budget");
    }
}

std::uint64_t NetworkDescriptor::config_count() const {
    std::uint64_t x = 1;
    for (std::uint32_t q : alphabet_sizes) {
        if (x > (std::uint64_t{1} << 62) / q)
            throw SizeBoundExceeded("descriptor: configuration space too large to index");
        x *= q;
    }
    return x;
}

std::size_t NetworkDescriptor::config_bits() const { return ceil_log2(config_count()); }

bool NetworkDescriptor::uniform(std::uint32_t q) const {
    for (std::uint32_t s : alphabet_sizes)
        if (s != q) return false;
    return true;
}

Configuration config_from_index(const NetworkDescriptor& d, std::uint64_t index) {
    if (index >= d.config_count())
        throw SizeMismatch("configuration index out of range: " + std::to_string(index));
    Configuration c;
    c.index = index;
    c.digits.reserve(d.alphabet_sizes.size());
    std::uint64_t rest = index;
    for (std::uint32_t q : d.alphabet_sizes) {
        c.digits.push_back(static_cast<std::uint32_t>(rest % q));
        rest /= q;
    }
    return c;
}

Configuration config_from_digits(const NetworkDescriptor& d,
                                 const std::vector<std::uint32_t>& digits) {
    if (digits.size() != d.alphabet_sizes.size())
        throw SizeMismatch("configuration digit count mismatch");
    std::uint64_t index = 0;
    for (std::size_t i = digits.size(); i-- > 0;) {
        if (digits[i] >= d.alphabet_sizes[i])
            throw SizeMismatch("configuration digit out of range");
        index = index * d.alphabet_sizes[i] + digits[i];
    }
    Configuration c;
    c.index = index;
    c.digits = digits;
    return c;
}

Configuration step(const NetworkDescriptor& d, const Configuration& x) {
    if (d.kind != NetworkKind::Deterministic)
        throw KindMismatch("step: descriptor is non-deterministic");
    const std::uint64_t raw = d.circuit.eval_u64(x.index);
    return config_from_index(d, raw % d.config_count());
}

bool adjacent(const NetworkDescriptor& d, const Configuration& x, const Configuration& y) {
    if (d.kind != NetworkKind::Nondeterministic)
        throw KindMismatch("adjacent: descriptor is deterministic");
    const std::size_t bits = d.config_bits();
    std::vector<bool> input(2 * bits);
    for (std::size_t i = 0; i < bits; ++i) {
        input[i] = (x.index >> i) & 1u;
        input[bits + i] = (y.index >> i) & 1u;
    }
    return d.circuit.eval(input)[0];
}

Digraph expand_dynamics(const NetworkDescriptor& d, std::uint64_t max_configs) {
    const std::uint64_t x_count = d.config_count();
    if (x_count > max_configs)
        throw SizeBoundExceeded("expand_dynamics: |X| = " + std::to_string(x_count) +
                                " exceeds bound " + std::to_string(max_configs));
    std::vector<std::string> verts;
    verts.reserve(x_count);
    for (std::uint64_t i = 0; i < x_count; ++i) verts.push_back(std::to_string(i));
    std::vector<std::pair<std::string, std::string>> edges;
    if (d.kind == NetworkKind::Deterministic) {
        for (std::uint64_t i = 0; i < x_count; ++i) {
            const std::uint64_t image = d.circuit.eval_u64(i) % x_count;
            edges.emplace_back(verts[i], verts[image]);
        }
    } else {
        const std::size_t bits = d.config_bits();
        std::vector<bool> input(2 * bits);
        for (std::uint64_t i = 0; i < x_count; ++i) {
            for (std::size_t b = 0; b < bits; ++b) input[b] = (i >> b) & 1u;
            for (std::uint64_t j = 0; j < x_count; ++j) {
                for (std::size_t b = 0; b < bits; ++b) input[bits + b] = (j >> b) & 1u;
                if (d.circuit.eval(input)[0]) edges.emplace_back(verts[i], verts[j]);
            }
        }
    }
    return Digraph(std::move(verts), std::move(edges));
}

NetworkDescriptor lookup_table_network(const Digraph& g,
                                       const std::vector<std::uint32_t>& alphabet_sizes) {
    std::uint64_t x_count = 1;
    for (std::uint32_t q : alphabet_sizes) x_count *= q;
    if (x_count != g.size() || alphabet_sizes.empty())
        throw SizeMismatch("lookup_table_network: |g| != product of alphabet sizes");
    const std::size_t bits = ceil_log2(x_count);

    if (out_degree_exactly(g, 1)) {
        std::vector<std::uint64_t> image(g.size());
        for (std::size_t v = 0; v < g.size(); ++v) image[v] = g.out_neighbors(v)[0];
        CircuitBuilder cb;
        auto index = cb.inputs(0, bits);
        auto out = cb.table_lookup(index, image, bits);
        return NetworkDescriptor(NetworkKind::Deterministic, alphabet_sizes,
                                 cb.build(bits, out));
    }

    std::vector<std::uint64_t> adjacency_bits(g.size() * g.size(), 0);
    for (const auto& [from, to] : g.edges()) adjacency_bits[from * g.size() + to] = 1;
    CircuitBuilder cb;
    auto xb = cb.inputs(0, bits);
    auto yb = cb.inputs(static_cast<std::uint32_t>(bits), bits);
    // pair index = x * |X| + y
    auto xs = cb.mul_const(xb, x_count, 2 * bits + 1);
    CircuitBuilder::Bits pair_index(2 * bits + 1, cb.const0());
    for (std::size_t i = 0; i < bits; ++i) pair_index[i] = yb[i];
    auto idx = cb.add(xs, pair_index);
    auto out = cb.table_lookup(idx, adjacency_bits, 1);
    return NetworkDescriptor(NetworkKind::Nondeterministic, alphabet_sizes,
                             cb.build(2 * bits, out));
}

}  // namespace netglue
