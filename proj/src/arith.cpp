#include "netglue/arith.hpp"

#include <string>

namespace netglue {
namespace arith {

std::uint64_t gcd_u64(std::uint64_t a, std::uint64_t b) {
    while (b != 0) {
        std::uint64_t t = a % b;
        a = b;
        b = t;
    }
    return a;
}

PumpArithmetic::PumpArithmetic(std::uint64_t a_in, std::uint64_t b_in, std::uint64_t q_in)
    : a(a_in), b(b_in), q(q_in) {
    if (a < 1 || q < 2)
        throw PreconditionViolated("PumpArithmetic: need a >= 1 and q >= 2");
}

std::vector<SolutionWitness> PumpArithmetic::solutions(std::uint32_t n_max) const {
    return find_solutions(a, b, q, n_max);
}

std::optional<Periodicity> PumpArithmetic::period() const { return periodicity(a, b, q); }

std::optional<GeomSeq> PumpArithmetic::sequence() const { return geometric_sequence(a, b, q); }

std::uint64_t totient(std::uint64_t n) {
    if (n == 0) throw PreconditionViolated("totient: n must be positive");
    std::uint64_t result = n;
    std::uint64_t m = n;
    for (std::uint64_t p = 2; p * p <= m; ++p) {
        if (m % p != 0) continue;
        while (m % p == 0) m /= p;
        result -= result / p;
    }
    if (m > 1) result -= result / m;
    return result;
}

namespace {

std::vector<std::pair<std::uint64_t, std::uint32_t>> factorize(std::uint64_t n) {
    std::vector<std::pair<std::uint64_t, std::uint32_t>> factors;
    for (std::uint64_t p = 2; p * p <= n; ++p) {
        if (n % p != 0) continue;
        std::uint32_t e = 0;
        while (n % p == 0) {
            n /= p;
            ++e;
        }
        factors.emplace_back(p, e);
    }
    if (n > 1) factors.emplace_back(n, 1);
    return factors;
}

std::uint32_t valuation(std::uint64_t n, std::uint64_t p) {
    std::uint32_t v = 0;
    while (n % p == 0) {
        n /= p;
        ++v;
    }
    return v;
}

}  // namespace

CoprimeDecomp coprime_power(std::uint64_t a, std::uint64_t q) {
    if (a == 0 || q < 2) throw PreconditionViolated("coprime_power: need a >= 1, q >= 2");
    CoprimeDecomp out;
    std::uint64_t a_prime = a;
    for (const auto& [p, e] : factorize(q)) {
        const std::uint32_t va = valuation(a, p);
        if (va == 0) continue;
        const std::uint32_t eta_p = (va + e - 1) / e;  // ceil(v_p(a) / v_p(q))
        out.eta = std::max(out.eta, eta_p);
        for (std::uint32_t i = 0; i < va; ++i) a_prime /= p;
    }
    out.a_prime = a_prime;
    return out;
}

std::vector<SolutionWitness> find_solutions(std::uint64_t a, std::uint64_t b, std::uint64_t q,
                                            std::uint32_t n_max) {
    if (a == 0 || q < 2) throw PreconditionViolated("find_solutions: need a >= 1, q >= 2");
    if (a >> 32) throw PreconditionViolated("find_solutions: a above 2^32 unsupported");
    std::vector<SolutionWitness> out;
    BigUint power{q};
    const BigUint base{b};
    for (std::uint32_t n = 1; n <= n_max; ++n) {
        if (power >= base) {
            auto dm = (power - base).divmod(static_cast<std::uint32_t>(a));
            if (dm.remainder == 0) out.push_back(SolutionWitness{std::move(dm.quotient), n});
        }
        power *= BigUint{q};
    }
    return out;
}

Emptiness divisibility_emptiness(std::uint64_t a, std::uint64_t b, std::uint64_t q) {
    if (a == 0 || q < 2) throw PreconditionViolated("divisibility_emptiness: need a >= 1, q >= 2");
    if (a % q != 0 || b % q == 0) return Emptiness::Inapplicable;
    return b == 1 ? Emptiness::UniqueAtZero : Emptiness::Empty;
}

Normalized normalize(std::uint64_t a, std::uint64_t b, std::uint64_t q) {
    if (a == 0 || q < 2) throw PreconditionViolated("normalize: need a >= 1, q >= 2");
    Normalized out;
    out.a = a;
    out.b = b;
    if (b >= a) {
        out.shift_m = b / a;
        out.b = b % a;
    }
    if (out.b != 0) {
        std::uint32_t eta0 = UINT32_MAX;
        for (const auto& [p, e] : factorize(q)) {
            const std::uint32_t bound = std::min(valuation(out.a, p), valuation(out.b, p)) / e;
            eta0 = std::min(eta0, bound);
        }
        if (eta0 != UINT32_MAX && eta0 > 0) {
            out.power_factor = eta0;
            for (std::uint32_t i = 0; i < eta0; ++i) {
                out.a /= q;
                out.b /= q;
            }
        }
    }
    return out;
}

std::optional<Periodicity> periodicity(std::uint64_t a, std::uint64_t b, std::uint64_t q) {
    if (a == 0 || q < 2) throw PreconditionViolated("periodicity: need a >= 1, q >= 2");
    if (b == 0) return std::nullopt;  // kappa would be zero

    if (a >> 24) throw PreconditionViolated("periodicity: a beyond the search bound");
    std::optional<std::uint32_t> found;
    if (a == 1) {
        found = 1;
    } else {
        // the sequence b*q^mu mod a is eventually periodic with preperiod at
        // most 64 (the q-power part stabilizes) and period below a, so any
        // existing period shows up within 64 + 2a steps
        const std::uint64_t bound = 64 + 2 * a;
        const std::uint64_t target = b % a;
        std::uint64_t t = target;
        for (std::uint64_t mu = 1; mu <= bound; ++mu) {
            t = t * (q % a) % a;
            if (t == target) {
                found = static_cast<std::uint32_t>(mu);
                break;
            }
        }
    }

    // Independent route: a period exists iff some solution has N at least
    // the coprime power (only meaningful when solutions exist at all).
    if (a > 1) {
        auto solutions = find_solutions(a, b, q);
        if (b == 1) solutions.insert(solutions.begin(), SolutionWitness{BigUint{0}, 0});
        if (!solutions.empty()) {
            const std::uint32_t eta = coprime_power(a, q).eta;
            bool expected = false;
            for (const auto& w : solutions)
                if (w.N >= eta) expected = true;
            if (expected != found.has_value())
                throw Error("periodicity: search and coprime-power characterization disagree "
                            "for a=" + std::to_string(a) + " b=" + std::to_string(b) +
                            " q=" + std::to_string(q));
        }
    }

    if (!found) return std::nullopt;
    BigUint numerator = BigUint{b} * BigUint::pow(q, *found) - BigUint{b};
    auto dm = numerator.divmod(static_cast<std::uint32_t>(a));
    if (dm.remainder != 0)
        throw Error("periodicity: internal divisibility failure");
    return Periodicity{*found, std::move(dm.quotient)};
}

BigUint GeomSeq::term(std::uint32_t l) const {
    return BigUint::pow(q, N0 + static_cast<std::uint64_t>(l) * mu);
}

BigUint GeomSeq::copies(std::uint32_t l) const {
    BigUint diff = term(l) - BigUint{b};
    auto dm = diff.divmod(static_cast<std::uint32_t>(a));
    if (dm.remainder != 0) throw Error("GeomSeq: member is not of the form a*k + b");
    return dm.quotient;
}

std::optional<GeomSeq> geometric_sequence(std::uint64_t a, std::uint64_t b, std::uint64_t q) {
    if (a == 0 || q < 2) throw PreconditionViolated("geometric_sequence: need a >= 1, q >= 2");
    if (b == 0) {
        // every solution scales by q; the smallest exponent with a | q^N
        // starts the sequence with step one
        auto sols = find_solutions(a, b, q);
        if (sols.empty()) return std::nullopt;
        return GeomSeq{a, b, q, sols.front().N, 1};
    }
    auto sols = find_solutions(a, b, q);
    if (sols.empty()) return std::nullopt;
    auto period = periodicity(a, b, q);
    if (!period) return std::nullopt;
    return GeomSeq{a, b, q, sols.front().N, period->mu};
}

std::optional<std::uint32_t> exact_log(std::uint64_t base, std::uint64_t value) {
    if (base < 2 || value == 0) return std::nullopt;
    std::uint32_t j = 0;
    while (value % base == 0) {
        value /= base;
        ++j;
    }
    if (value != 1) return std::nullopt;
    return j;
}

BigUint padding_boolean(std::uint64_t a, std::uint64_t b, std::uint64_t alpha, std::uint32_t s) {
    if (a == 0 || a >> 32) throw PreconditionViolated("padding_boolean: need 1 <= a < 2^32");
    auto log_alpha = exact_log(2, alpha);
    if (!log_alpha)
        throw PreconditionViolated("padding_boolean: alpha must be a power of two");
    if (!exact_log(2, a + b))
        throw PreconditionViolated("padding_boolean: a + b must be a power of two");
    const std::uint32_t ell = s + *log_alpha;
    const std::uint64_t phi = totient(a);
    BigUint big_pow = BigUint::pow(2, static_cast<std::uint64_t>(ell) * phi);
    BigUint middle_num = BigUint{b} * (big_pow - BigUint{1});
    auto dm = middle_num.divmod(static_cast<std::uint32_t>(a));
    if (dm.remainder != 0)
        throw Error("padding_boolean: internal divisibility failure");
    BigUint total_copies = big_pow + dm.quotient;
    BigUint claimed = BigUint{alpha} * BigUint::pow(2, s);
    if (total_copies < claimed)
        throw Error("padding_boolean: negative padding");
    return total_copies - claimed;
}

BigUint padding_q(std::uint64_t a, std::uint64_t b, std::uint64_t q, std::uint32_t mu,
                  std::uint64_t alpha, std::uint32_t s) {
    if (a == 0 || a >> 32 || q < 2 || mu == 0)
        throw PreconditionViolated("padding_q: need 1 <= a < 2^32, q >= 2, mu >= 1");
    auto big_n = exact_log(q, b);
    if (!big_n) throw PreconditionViolated("padding_q: b must be a power of q");
    if (*big_n < coprime_power(a, q).eta)
        throw PreconditionViolated("padding_q: exponent of b below the coprime power of q for a");
    if (b < a) throw PreconditionViolated("padding_q: need b >= a");
    auto log_alpha = exact_log(q, alpha);
    if (!log_alpha) throw PreconditionViolated("padding_q: alpha must be a power of q");
    const std::uint32_t ell = s + *log_alpha + 1;
    BigUint big_pow = BigUint::pow(q, static_cast<std::uint64_t>(ell) * mu);
    BigUint numerator = BigUint{b} * (big_pow - BigUint{1});
    auto dm = numerator.divmod(static_cast<std::uint32_t>(a));
    if (dm.remainder != 0)
        throw PreconditionViolated("padding_q: mu is not a period for (a, b, q)");
    BigUint claimed = BigUint{alpha} * BigUint::pow(2, s);
    if (dm.quotient < claimed) throw Error("padding_q: negative padding");
    return dm.quotient - claimed;
}

}  // namespace arith
}  // namespace netglue
