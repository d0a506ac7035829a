#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "chipfire/bigint.hpp"

namespace chipfire {

/// Finite abelian group in invariant-factor form: every factor is >= 2 and
/// each divides the next. The empty list is the trivial group.
class AbelianGroup {
public:
    AbelianGroup() = default;

    /// Canonical form of the direct sum of Z/a over `orders`. Entries equal
    /// to 1 vanish; 0 (an infinite cyclic summand) is rejected.
    static AbelianGroup from_orders(std::vector<BigInt> orders);
    static AbelianGroup from_orders(const std::vector<std::int64_t>& orders);
    /// (Z/n)^k.
    static AbelianGroup power(std::int64_t n, std::size_t k);

    const std::vector<BigInt>& factors() const noexcept { return factors_; }
    std::size_t rank() const noexcept { return factors_.size(); }
    BigInt order() const;
    bool trivial() const noexcept { return factors_.empty(); }
    bool cyclic() const noexcept { return factors_.size() <= 1; }
    /// Exponent: the largest invariant factor (1 for the trivial group).
    BigInt exponent() const;

    AbelianGroup direct_sum(const AbelianGroup& other) const;

    /// "Z/a ⊕ Z/b ⊕ ..." or "trivial".
    std::string to_string() const;

    bool operator==(const AbelianGroup&) const = default;
    auto operator<=>(const AbelianGroup& o) const { return to_string() <=> o.to_string(); }

private:
    std::vector<BigInt> factors_;
};

/// Accepts the rendering produced by to_string(); "Z/1" summands are allowed.
AbelianGroup parse_group(std::string_view text);

bool is_prime(std::int64_t p);

/// Subgroup of p-power order elements. Throws DomainError if p is not prime.
AbelianGroup sylow(const AbelianGroup& h, std::int64_t p);

/// True when |H| is a power of p (the trivial group counts).
bool is_p_group(const AbelianGroup& h, std::int64_t p);

}  // namespace chipfire
