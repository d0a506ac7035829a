#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "chipfire/bigint.hpp"
#include "chipfire/graph.hpp"

namespace chipfire {

/// Integer chip count per vertex of a host graph; negative values are debt.
struct Divisor {
    std::vector<std::int64_t> values;

    Divisor() = default;
    explicit Divisor(std::size_t n) : values(n, 0) {}
    explicit Divisor(std::vector<std::int64_t> v) : values(std::move(v)) {}

    std::size_t size() const noexcept { return values.size(); }
    std::int64_t& operator[](Vertex v) { return values[v]; }
    std::int64_t operator[](Vertex v) const { return values[v]; }

    Divisor& operator+=(const Divisor& o);
    Divisor& operator-=(const Divisor& o);
    friend Divisor operator+(Divisor a, const Divisor& b) { return a += b; }
    friend Divisor operator-(Divisor a, const Divisor& b) { return a -= b; }
    friend Divisor operator*(std::int64_t k, Divisor a);

    bool operator==(const Divisor&) const = default;
    auto operator<=>(const Divisor&) const = default;

    static Divisor unit(std::size_t n, Vertex v);
    /// x - y.
    static Divisor delta(std::size_t n, Vertex x, Vertex y);
};

/// Integer-valued function on the vertices.
using VertexFunction = std::vector<std::int64_t>;

/// Monodromy pairing value, reduced into [0, 1).
struct PairingValue {
    Rational value;

    std::string to_string() const;
    bool operator==(const PairingValue&) const = default;
};

std::int64_t degree(const Divisor& d);
bool is_effective(const Divisor& d);

Divisor fire(const Multigraph& g, Divisor d, Vertex v);
Divisor borrow(const Multigraph& g, Divisor d, Vertex v);
/// Fires every vertex of `set` once, simultaneously.
Divisor fire_set(const Multigraph& g, Divisor d, const std::vector<Vertex>& set);

/// div(f)(v) = sum over neighbours w of mult(v, w) * (f(v) - f(w)), i.e. L f.
Divisor div_of_function(const Multigraph& g, const VertexFunction& f);

/// f with div(f) == D, or nullopt if D is not principal.
std::optional<VertexFunction> is_principal(const Multigraph& g, const Divisor& d);

/// Default base vertex: the last one.
inline Vertex default_base(const Multigraph& g) { return g.size() - 1; }

/// The unique q-reduced divisor equivalent to D (g connected).
Divisor q_reduce(const Multigraph& g, const Divisor& d, Vertex q);

enum class ReducedCheck { dhar, exhaustive };

/// Dhar's burning test, or the all-subsets definition (n <= 16).
bool is_q_reduced(const Multigraph& g, const Divisor& d, Vertex q,
                  ReducedCheck mode = ReducedCheck::dhar);

bool equivalent(const Multigraph& g, const Divisor& a, const Divisor& b);
bool effective_equivalent(const Multigraph& g, const Divisor& d);
bool has_positive_rank(const Multigraph& g, const Divisor& d);

struct GonalityResult {
    std::int64_t gonality = 0;
    Divisor witness;
};

/// Brute-force search over effective divisors of increasing degree; n <= 12.
GonalityResult gonality(const Multigraph& g);

/// (D2')^T L_q^{-1} (D1') mod 1, where ' drops the coordinate at q.
PairingValue monodromy_pairing(const Multigraph& g, const Divisor& d1, const Divisor& d2,
                               Vertex q);

/// Same pairing from the definition: (1/m2) * sum D1(v) f2(v) with m2 D2 = div(f2).
PairingValue monodromy_pairing_definitional(const Multigraph& g, const Divisor& d1,
                                            const Divisor& d2);

/// All q-reduced degree-0 divisors (one per class of K(G)), sorted.
/// Limited to |K(G)| <= 100000.
std::vector<Divisor> list_q_reduced_degree0(const Multigraph& g, Vertex q);

/// Pairing table over the q-reduced representatives. Entry (i, j) is
/// numerators[i * size + j] / order.
struct PairingGram {
    std::vector<Divisor> representatives;
    std::int64_t order = 1;
    std::vector<std::int64_t> numerators;

    std::size_t size() const noexcept { return representatives.size(); }
    PairingValue at(std::size_t i, std::size_t j) const;
    /// The induced map K -> Hom(K, Q/Z) is a bijection (rows pairwise distinct).
    bool perfect() const;
    bool symmetric() const;
};

/// Limited to |K(G)| <= 5000.
PairingGram pairing_gram(const Multigraph& g, Vertex q);

/// "label:value" pairs separated by whitespace; omitted labels are 0.
Divisor parse_divisor(const Multigraph& g, std::string_view text);
/// Every vertex in index order, zeros included.
std::string write_divisor(const Multigraph& g, const Divisor& d);

}  // namespace chipfire
