#include "chipfire/abelian.hpp"

#include <sstream>

#include "chipfire/errors.hpp"

namespace chipfire {

AbelianGroup AbelianGroup::from_orders(std::vector<BigInt> orders) {
    for (const auto& a : orders)
        if (a <= 0) throw DomainError("cyclic factor orders must be positive, got " + a.get_str());
    // Pairwise gcd/lcm sweep; leaves a divisibility chain with the same group.
    for (std::size_t i = 0; i < orders.size(); ++i)
        for (std::size_t j = i + 1; j < orders.size(); ++j) {
            BigInt g = gcd(orders[i], orders[j]);
            BigInt l = lcm(orders[i], orders[j]);
            orders[i] = g;
            orders[j] = l;
        }
    AbelianGroup h;
    for (auto& a : orders)
        if (a != 1) h.factors_.push_back(std::move(a));
    return h;
}

AbelianGroup AbelianGroup::from_orders(const std::vector<std::int64_t>& orders) {
    std::vector<BigInt> v;
    for (auto a : orders) v.push_back(big(a));
    return from_orders(std::move(v));
}

AbelianGroup AbelianGroup::power(std::int64_t n, std::size_t k) {
    return from_orders(std::vector<std::int64_t>(k, n));
}

BigInt AbelianGroup::order() const {
    BigInt o = 1;
    for (const auto& a : factors_) o *= a;
    return o;
}

BigInt AbelianGroup::exponent() const { return factors_.empty() ? BigInt(1) : factors_.back(); }

AbelianGroup AbelianGroup::direct_sum(const AbelianGroup& other) const {
    std::vector<BigInt> v = factors_;
    v.insert(v.end(), other.factors_.begin(), other.factors_.end());
    return from_orders(std::move(v));
}

std::string AbelianGroup::to_string() const {
    if (factors_.empty()) return "trivial";
    std::string s;
    for (std::size_t i = 0; i < factors_.size(); ++i) {
        if (i) s += " ⊕ ";
        s += "Z/" + factors_[i].get_str();
    }
    return s;
}

AbelianGroup parse_group(std::string_view text) {
    std::string t(text);
    auto trim = [](std::string s) {
        auto b = s.find_first_not_of(" \t\r\n");
        auto e = s.find_last_not_of(" \t\r\n");
        return b == std::string::npos ? std::string() : s.substr(b, e - b + 1);
    };
    t = trim(t);
    if (t == "trivial") return {};
    std::vector<BigInt> orders;
    const std::string sep = "⊕";
    std::size_t pos = 0;
    while (true) {
        std::size_t next = t.find(sep, pos);
        std::string part = trim(t.substr(pos, next == std::string::npos ? std::string::npos : next - pos));
        if (part.size() < 3 || part.compare(0, 2, "Z/") != 0) throw ParseError("bad group summand '" + part + "'");
        BigInt a;
        if (a.set_str(part.substr(2), 10) != 0 || a < 1) throw ParseError("bad group summand '" + part + "'");
        orders.push_back(a);
        if (next == std::string::npos) break;
        pos = next + sep.size();
    }
    return AbelianGroup::from_orders(std::move(orders));
}

bool is_prime(std::int64_t p) {
    if (p < 2) return false;
    for (std::int64_t d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

AbelianGroup sylow(const AbelianGroup& h, std::int64_t p) {
    if (!is_prime(p)) throw DomainError(std::to_string(p) + " is not prime");
    const BigInt bp = big(p);
    std::vector<BigInt> parts;
    for (const auto& a : h.factors()) {
        BigInt part = 1, rest = a;
        while (divides(bp, rest)) {
            rest = exact_div(rest, bp);
            part *= bp;
        }
        parts.push_back(part);
    }
    return AbelianGroup::from_orders(std::move(parts));
}

bool is_p_group(const AbelianGroup& h, std::int64_t p) {
    BigInt o = h.order();
    const BigInt bp = big(p);
    while (o != 1) {
        if (!divides(bp, o)) return false;
        o = exact_div(o, bp);
    }
    return true;
}

}  // namespace chipfire
