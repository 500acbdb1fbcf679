#ifndef NETGLUE_ANNET_HPP
#define NETGLUE_ANNET_HPP

#include <cstdint>
#include <vector>

#include "netglue/circuit.hpp"
#include "netglue/digraph.hpp"

namespace netglue {

enum class NetworkKind { Deterministic, Nondeterministic };

std::size_t ceil_log2(std::uint64_t n);

/// Circuit-encoded automata network. Deterministic descriptors map a
/// configuration's bits to its image's bits (read modulo |X|); a
/// non-deterministic descriptor is an adjacency predicate on configuration
/// pairs. Gate count is budgeted against the lookup-table size.
struct NetworkDescriptor {
    NetworkKind kind = NetworkKind::Deterministic;
    std::vector<std::uint32_t> alphabet_sizes;
    Circuit circuit;

    NetworkDescriptor() = default;
    NetworkDescriptor(NetworkKind kind, std::vector<std::uint32_t> alphabet_sizes,
                      Circuit circuit, std::uint64_t size_budget_factor = 64);

    std::uint64_t config_count() const;      // |X|
    std::size_t config_bits() const;         // ceil(log2 |X|)
    std::size_t automata_count() const { return alphabet_sizes.size(); }
    bool uniform(std::uint32_t q) const;
};

/// Mixed-radix configuration; the first automaton is the least significant
/// digit.
struct Configuration {
    std::uint64_t index = 0;
    std::vector<std::uint32_t> digits;
};

Configuration config_from_index(const NetworkDescriptor& d, std::uint64_t index);
Configuration config_from_digits(const NetworkDescriptor& d,
                                 const std::vector<std::uint32_t>& digits);

/// Image of x under a deterministic descriptor: circuit output mod |X|.
Configuration step(const NetworkDescriptor& d, const Configuration& x);

/// Adjacency bit of a non-deterministic descriptor on (x, y).
bool adjacent(const NetworkDescriptor& d, const Configuration& x, const Configuration& y);

inline constexpr std::uint64_t kDefaultExpandBound = std::uint64_t{1} << 16;

/// Materializes the dynamics: one vertex per configuration (decimal index
/// identifiers in canonical order).
Digraph expand_dynamics(const NetworkDescriptor& d,
                        std::uint64_t max_configs = kDefaultExpandBound);

/// Builds a descriptor whose dynamics is exactly `g` under the canonical
/// vertex-order bijection. Deterministic when g has out-degree one.
NetworkDescriptor lookup_table_network(const Digraph& g,
                                       const std::vector<std::uint32_t>& alphabet_sizes);

}  // namespace netglue

#endif
