#ifndef NETGLUE_ARITH_HPP
#define NETGLUE_ARITH_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "netglue/bigint.hpp"
#include "netglue/errors.hpp"

namespace netglue {
namespace arith {

/// Euler's totient.
std::uint64_t totient(std::uint64_t n);

std::uint64_t gcd_u64(std::uint64_t a, std::uint64_t b);

struct SolutionWitness;
struct GeomSeq;
struct Periodicity;

/// The (a, b, q) family: pumped-part size, base size, alphabet size.
struct PumpArithmetic {
    std::uint64_t a;  // at least 1
    std::uint64_t b;
    std::uint64_t q;  // at least 2

    PumpArithmetic(std::uint64_t a_in, std::uint64_t b_in, std::uint64_t q_in);

    std::vector<SolutionWitness> solutions(std::uint32_t n_max) const;
    std::optional<Periodicity> period() const;
    std::optional<GeomSeq> sequence() const;
};

/// Witness of a*K + b = q^N.
struct SolutionWitness {
    BigUint K;
    std::uint32_t N = 0;
};

/// Minimal eta with a / gcd(a, q^eta) coprime to q, and that cofactor.
struct CoprimeDecomp {
    std::uint32_t eta = 0;
    std::uint64_t a_prime = 1;
};

CoprimeDecomp coprime_power(std::uint64_t a, std::uint64_t q);

inline constexpr std::uint32_t kDefaultSolutionExponentBound = 64;

/// All witnesses of a*K + b = q^N with K >= 0 and 1 <= N <= n_max, ascending
/// in N. The N = 0 corner (b = 1, K = 0) is reported by
/// divisibility_emptiness instead.
std::vector<SolutionWitness> find_solutions(std::uint64_t a, std::uint64_t b, std::uint64_t q,
                                            std::uint32_t n_max = kDefaultSolutionExponentBound);

enum class Emptiness { Empty, UniqueAtZero, Inapplicable };

/// The q | a, q !| b case: no solution with N >= 1; b = 1 leaves the single
/// (K, N) = (0, 0) witness.
Emptiness divisibility_emptiness(std::uint64_t a, std::uint64_t b, std::uint64_t q);

/// Euclidean reduction b = a*m + b' followed by extraction of the largest
/// common q-power, with the witness transformations back to the input pair.
struct Normalized {
    std::uint64_t a = 0;
    std::uint64_t b = 0;
    std::uint64_t shift_m = 0;        // witnesses map (K, N) -> (K - m, N)
    std::uint32_t power_factor = 0;   // exponents map N -> N + power_factor
};

Normalized normalize(std::uint64_t a, std::uint64_t b, std::uint64_t q);

/// Smallest mu >= 1 with b*q^mu = a*kappa + b for some kappa >= 1, if any.
/// Cross-checked against the coprime-power characterization; disagreement
/// on solvable inputs is an internal error.
struct Periodicity {
    std::uint32_t mu = 0;
    BigUint kappa;
};

std::optional<Periodicity> periodicity(std::uint64_t a, std::uint64_t b, std::uint64_t q);

/// Geometric family q^(N0 + l*mu) inside both sequences a*k + b and q^n.
struct GeomSeq {
    std::uint64_t a = 0;
    std::uint64_t b = 0;
    std::uint64_t q = 0;
    std::uint32_t N0 = 0;   // base exponent
    std::uint32_t mu = 0;   // exponent step

    BigUint term(std::uint32_t l) const;   // q^(N0 + l*mu)
    BigUint copies(std::uint32_t l) const; // k_l = (term(l) - b) / a
};

std::optional<GeomSeq> geometric_sequence(std::uint64_t a, std::uint64_t b, std::uint64_t q);

/// Exact discrete log: the j with base^j = value, if value is a pure power.
std::optional<std::uint32_t> exact_log(std::uint64_t base, std::uint64_t value);

/// Boolean padding: with ell' = s + log2(alpha), the copy count
/// L = 2^(ell'*phi(a)) + b*(2^(ell'*phi(a)) - 1)/a - alpha*2^s, which makes
/// a*(alpha*2^s + L) + b the power of two (a+b)*2^(ell'*phi(a)).
/// Requires alpha and a+b to be powers of two.
BigUint padding_boolean(std::uint64_t a, std::uint64_t b, std::uint64_t alpha, std::uint32_t s);

/// q-uniform padding: with ell' = s + log_q(alpha) + 1, the copy count
/// L = (b/a)*(q^(ell'*mu) - 1) - alpha*2^s, making a*(alpha*2^s + L) + b equal
/// to b*q^(ell'*mu). Requires b = q^N with N >= eta, b >= a, alpha a power
/// of q, and mu a period from periodicity().
BigUint padding_q(std::uint64_t a, std::uint64_t b, std::uint64_t q, std::uint32_t mu,
                  std::uint64_t alpha, std::uint32_t s);

}  // namespace arith
}  // namespace netglue

#endif
