#ifndef NETGLUE_BIGINT_HPP
#define NETGLUE_BIGINT_HPP

#include <cstdint>
#include <string>
#include <vector>

namespace netglue {

/// Arbitrary-precision unsigned integer, base 2^32 limbs, little-endian.
/// Covers exactly the operations the size arithmetic needs; throws on
/// underflow and division by zero.
class BigUint {
public:
    BigUint() = default;
    BigUint(std::uint64_t v);  // NOLINT: implicit by design

    static BigUint pow(std::uint64_t base, std::uint64_t exponent);

    bool is_zero() const { return limbs_.empty(); }
    bool fits_u64() const { return limbs_.size() <= 2; }
    std::uint64_t to_u64() const;  // throws if the value does not fit
    std::string to_string() const;

    BigUint& operator+=(const BigUint& rhs);
    BigUint& operator-=(const BigUint& rhs);  // throws on underflow
    BigUint& operator*=(const BigUint& rhs);

    friend BigUint operator+(BigUint a, const BigUint& b) { return a += b; }
    friend BigUint operator-(BigUint a, const BigUint& b) { return a -= b; }
    friend BigUint operator*(BigUint a, const BigUint& b) { return a *= b; }

    /// Quotient and remainder by a small divisor.
    struct DivResult;
    DivResult divmod(std::uint32_t divisor) const;

    int compare(const BigUint& rhs) const;
    friend bool operator==(const BigUint& a, const BigUint& b) { return a.compare(b) == 0; }
    friend bool operator!=(const BigUint& a, const BigUint& b) { return a.compare(b) != 0; }
    friend bool operator<(const BigUint& a, const BigUint& b) { return a.compare(b) < 0; }
    friend bool operator<=(const BigUint& a, const BigUint& b) { return a.compare(b) <= 0; }
    friend bool operator>(const BigUint& a, const BigUint& b) { return a.compare(b) > 0; }
    friend bool operator>=(const BigUint& a, const BigUint& b) { return a.compare(b) >= 0; }

private:
    void trim();
    std::vector<std::uint32_t> limbs_;
};

struct BigUint::DivResult {
    BigUint quotient;
    std::uint32_t remainder;
};

}  // namespace netglue

#endif
