#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>

#include "chipfire/abelian.hpp"
#include "chipfire/bigint.hpp"
#include "chipfire/graph.hpp"

namespace chipfire::randomlab {

/// Exact rational edge probability num/den with 0 < num < den.
struct Probability {
    std::uint64_t num = 1;
    std::uint64_t den = 2;

    static Probability parse(std::string_view text);  // "1/2"
    std::string to_string() const;
};

struct ExperimentConfig {
    std::size_t n = 30;
    Probability q;
    std::size_t samples = 1000;
    std::int64_t p = 2;
    std::uint64_t seed = 1;
    unsigned jobs = 1;

    /// Throws DomainError on an invalid configuration.
    void validate() const;
};

/// Seed for sample `index`: splitmix64(seed ^ splitmix64(index)).
std::uint64_t sample_seed(std::uint64_t seed, std::uint64_t index);

/// G(n, q) sample number `index`. Each potential edge {i, j}, i < j in
/// lexicographic order, draws one 64-bit word w from mt19937_64 seeded with
/// sample_seed; the edge is present iff w * den < num * 2^64.
Multigraph sample_er(const ExperimentConfig& config, std::uint64_t index);

struct ExperimentReport {
    ExperimentConfig config;
    std::map<std::string, std::size_t> sylow_tallies;  // keyed by group rendering
    std::size_t connected = 0;
    std::size_t disconnected = 0;
    std::size_t cyclic = 0;
    std::size_t odd_order = 0;  // |K(G)| odd
    std::size_t trivial_sylow = 0;

    /// Frequencies among connected samples.
    double trivial_sylow_frequency() const;
    double cyclic_frequency() const;
    /// JSON document with stable field order.
    std::string to_json() const;
};

/// n * samples is limited to 10^7.
ExperimentReport run_experiment(const ExperimentConfig& config);

/// Number of symmetric bilinear perfect pairings H x H -> Q/Z on a p-group,
/// by enumerating Gram tables on the invariant-factor generators.
BigInt count_pairings(const AbelianGroup& h);

/// |Aut(H)| by enumerating generator images; limited to |H| <= 512.
BigInt aut_order_bruteforce(const AbelianGroup& h);
/// |Aut(H)| from the p-primary decomposition and the closed formula for
/// abelian p-groups.
BigInt aut_order(const AbelianGroup& h);

/// prod_{k >= 0} (1 - p^(-2k-1)), stopped once p^(-2k-1) < tol.
double wood_product(std::int64_t p, double tol = 1e-15);

/// #pairings(H) / (|H| |Aut H|) * wood_product(p).
double wood_probability(const AbelianGroup& h, std::int64_t p, double tol = 1e-15);

/// Invertible symmetric m x m matrices over Z/p, by the closed formula.
BigInt macwilliams_count(std::int64_t m, std::int64_t p);
/// Same count by enumeration; p^(m(m+1)/2) <= 2^20.
BigInt macwilliams_bruteforce(std::int64_t m, std::int64_t p);

/// Riemann zeta for real s > 1.
double zeta(double s);
/// prod_{k=1..terms} 1 / zeta(2k + 1).
double cyclic_constant(std::size_t terms);

/// n^(n-2) / 2^(n-1).
Rational mean_spanning_trees(std::int64_t n);

}  // namespace chipfire::randomlab
