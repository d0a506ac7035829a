#include "chipfire/arith.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "chipfire/critgrp.hpp"
#include "chipfire/errors.hpp"

namespace chipfire::arith {

Structure validate(const Multigraph& g, const std::vector<std::int64_t>& r) {
    const std::size_t n = g.size();
    if (r.size() != n)
        throw DomainError("r has " + std::to_string(r.size()) + " entries, graph has " + std::to_string(n) +
                          " vertices");
    if (!is_connected(g)) throw GraphError("arithmetical structures need a connected graph");
    std::int64_t gg = 0;
    for (Vertex v = 0; v < n; ++v) {
        if (r[v] < 1) throw DomainError("r at vertex " + g.label(v) + " is not positive");
        gg = std::gcd(gg, r[v]);
    }
    if (gg != 1) throw DomainError("entries of r have common factor " + std::to_string(gg));
    Structure s{r, std::vector<std::int64_t>(n)};
    for (Vertex v = 0; v < n; ++v) {
        std::int64_t sum = 0;
        for (Vertex w = 0; w < n; ++w) sum += g.mult(v, w) * r[w];
        if (sum % r[v] != 0)
            throw DomainError("vertex " + g.label(v) + ": r=" + std::to_string(r[v]) +
                              " does not divide the neighbour sum " + std::to_string(sum));
        s.d[v] = sum / r[v];
    }
    return s;
}

IntegerMatrix structure_matrix(const Multigraph& g, const Structure& s) {
    const std::size_t n = g.size();
    IntegerMatrix m(n, n);
    for (Vertex i = 0; i < n; ++i)
        for (Vertex j = 0; j < n; ++j) m(i, j) = big(i == j ? s.d[i] : -g.mult(i, j));
    return m;
}

Enumeration enumerate(const Multigraph& g, std::int64_t r_max) {
    if (r_max < 1) throw DomainError("r_max must be at least 1");
    if (!is_connected(g)) throw GraphError("arithmetical structures need a connected graph");
    const std::size_t n = g.size();
    if (static_cast<double>(n) * std::log2(static_cast<double>(r_max)) > 60.0)
        throw GuardError("enumeration search space too large (n * log2(r_max) > 60)");

    // closes[i]: vertices whose closed neighbourhood is fully assigned once vertex i is.
    std::vector<std::vector<Vertex>> closes(n);
    for (Vertex v = 0; v < n; ++v) {
        Vertex last = v;
        for (Vertex w = 0; w < n; ++w)
            if (g.mult(v, w) > 0) last = std::max(last, w);
        closes[last].push_back(v);
    }

    Enumeration out;
    out.r_max = r_max;
    std::vector<std::int64_t> r(n, 0);
    auto ok_at = [&](Vertex v) {
        std::int64_t sum = 0;
        for (Vertex w = 0; w < n; ++w) sum += g.mult(v, w) * r[w];
        return sum % r[v] == 0;
    };
    auto search = [&](auto&& self, std::size_t i) -> void {
        if (i == n) {
            std::int64_t gg = 0;
            for (auto x : r) gg = std::gcd(gg, x);
            if (gg == 1) out.structures.push_back(validate(g, r));
            return;
        }
        for (std::int64_t x = 1; x <= r_max; ++x) {
            r[i] = x;
            bool ok = true;
            for (Vertex v : closes[i])
                if (!ok_at(v)) {
                    ok = false;
                    break;
                }
            if (ok) self(self, i + 1);
        }
        r[i] = 0;
    };
    if (n > 0) search(search, 0);
    return out;
}

namespace {

// The smoothing rule that applies at v, if any: 2 for the degree-2 rule, 1 for
// the degree-1 rule, 0 otherwise.
int smoothing_kind(const Multigraph& g, const Structure& s, Vertex v) {
    const auto nb = g.neighbors(v);
    const std::int64_t deg = g.degree(v);
    if (deg == 2 && nb.size() == 2 && s.r[v] > s.r[nb[0]] && s.r[v] > s.r[nb[1]]) return 2;
    if (deg == 1 && s.r[v] == s.r[nb[0]]) return 1;
    return 0;
}

}  // namespace

std::vector<Vertex> smoothable_vertices(const Multigraph& g, const Structure& s) {
    std::vector<Vertex> out;
    for (Vertex v = 0; v < g.size(); ++v)
        if (smoothing_kind(g, s, v)) out.push_back(v);
    return out;
}

bool is_smooth(const Multigraph& g, const Structure& s) { return smoothable_vertices(g, s).empty(); }

Smoothed smooth_at(const Multigraph& g, const Structure& s, Vertex v) {
    if (v >= g.size()) throw DomainError("vertex index out of range");
    const int kind = smoothing_kind(g, s, v);
    if (!kind) throw DomainError("no smoothing applies at vertex " + g.label(v));
    std::vector<Vertex> keep;
    for (Vertex w = 0; w < g.size(); ++w)
        if (w != v) keep.push_back(w);
    Multigraph h = induced_subgraph(g, keep);
    if (kind == 2) {
        const auto nb = g.neighbors(v);
        auto pos = [&](Vertex w) { return w < v ? w : w - 1; };
        h.add_edge(pos(nb[0]), pos(nb[1]));
    }
    std::vector<std::int64_t> r;
    for (Vertex w : keep) r.push_back(s.r[w]);
    return {h, validate(h, r)};
}

Multigraph g_r(const Multigraph& g, const Structure& s) {
    Multigraph h(g.labels());
    for (Vertex i = 0; i < g.size(); ++i)
        for (Vertex j = i + 1; j < g.size(); ++j)
            if (g.mult(i, j) > 0) h.set_mult(i, j, g.mult(i, j) * s.r[i] * s.r[j]);
    return h;
}

AbelianGroup critical_group(const Multigraph& g, const Structure& s) {
    return cokernel(structure_matrix(g, s)).torsion;
}

namespace {

Rational r_power(std::int64_t r, std::int64_t e) {
    Rational x = 1;
    const Rational base(big(r));
    for (std::int64_t k = 0; k < std::abs(e); ++k) x *= base;
    if (e < 0) x = 1 / x;
    return x;
}

}  // namespace

Rational order_formula_tree(const Multigraph& g, const Structure& s) {
    const std::size_t n = g.size();
    std::size_t pairs = 0;
    std::vector<std::int64_t> sdeg(n, 0);
    Rational value = 1;
    for (Vertex i = 0; i < n; ++i)
        for (Vertex j = i + 1; j < n; ++j)
            if (g.mult(i, j) > 0) {
                ++pairs;
                ++sdeg[i];
                ++sdeg[j];
                value *= Rational(big(g.mult(i, j)));
            }
    if (!is_connected(g) || pairs + 1 != n) throw DomainError("the underlying simple graph is not a tree");
    for (Vertex v = 0; v < n; ++v) value *= r_power(s.r[v], sdeg[v] - 2);
    return value;
}

Rational order_formula_spanning(const Multigraph& g, const Structure& s) {
    const auto units = g.edge_units();
    Rational total = 0;
    for (const auto& tree : spanning_tree_enumerate(g)) {
        std::vector<std::int64_t> deg(g.size(), 0);
        for (auto e : tree) {
            ++deg[units[e].first];
            ++deg[units[e].second];
        }
        Rational term = 1;
        for (Vertex v = 0; v < g.size(); ++v) term *= r_power(s.r[v], deg[v] - 2);
        total += term;
    }
    return total;
}

std::vector<Structure> kn_unit_fractions(std::size_t n) {
    if (n < 1) throw DomainError("n must be at least 1");
    if (n > 6) throw GuardError("kn_unit_fractions is limited to n <= 6");
    const Multigraph kn = family::complete(n);
    std::vector<Structure> out;
    std::vector<std::int64_t> a;
    // Nondecreasing a_1 <= a_2 <= ... with sum 1/a_i == 1; a_i = d_i + 1.
    auto search = [&](auto&& self, Rational rest) -> void {
        const std::size_t k = n - a.size();
        if (k == 0) {
            if (rest != 0) return;
            std::vector<std::int64_t> p = a;
            do {
                std::int64_t l = 1;
                for (auto x : p) l = std::lcm(l, x);
                std::vector<std::int64_t> r;
                std::int64_t gg = 0;
                for (auto x : p) {
                    r.push_back(l / x);
                    gg = std::gcd(gg, l / x);
                }
                for (auto& x : r) x /= gg;
                out.push_back(validate(kn, r));
            } while (std::next_permutation(p.begin(), p.end()));
            return;
        }
        if (rest <= 0) return;
        // 1/rest <= a <= k/rest, and a >= previous
        BigInt lo_b;
        mpz_cdiv_q(lo_b.get_mpz_t(), rest.get_den_mpz_t(), rest.get_num_mpz_t());
        std::int64_t lo = std::max<std::int64_t>(to_int64(lo_b), a.empty() ? 2 : a.back());
        if (n == 1) lo = 1;
        BigInt hi_b = floor_div(BigInt(rest.get_den() * static_cast<long>(k)), rest.get_num());
        const std::int64_t hi = to_int64(hi_b);
        for (std::int64_t x = lo; x <= hi; ++x) {
            a.push_back(x);
            Rational next = rest - Rational(1, static_cast<unsigned long>(x));
            next.canonicalize();
            self(self, next);
            a.pop_back();
        }
    };
    search(search, Rational(1));
    std::sort(out.begin(), out.end());
    return out;
}

std::string to_string(const Structure& s) {
    auto join = [](const std::vector<std::int64_t>& v) {
        std::string out = "(";
        for (std::size_t i = 0; i < v.size(); ++i) out += (i ? "," : "") + std::to_string(v[i]);
        return out + ")";
    };
    return "r=" + join(s.r) + " d=" + join(s.d);
}

std::vector<std::int64_t> parse_r(std::string_view text) {
    std::string t(text);
    for (char& c : t)
        if (c == '(' || c == ')' || c == ',') c = ' ';
    std::vector<std::int64_t> r;
    std::size_t pos = 0;
    while (pos < t.size()) {
        while (pos < t.size() && t[pos] == ' ') ++pos;
        if (pos == t.size()) break;
        std::size_t end = t.find(' ', pos);
        std::string tok = t.substr(pos, end == std::string::npos ? std::string::npos : end - pos);
        std::size_t used = 0;
        long long x = 0;
        try {
            x = std::stoll(tok, &used);
        } catch (const std::exception&) {
            used = 0;
        }
        if (used != tok.size() || tok.empty()) throw ParseError("bad r entry '" + tok + "'");
        r.push_back(x);
        pos = end == std::string::npos ? t.size() : end;
    }
    if (r.empty()) throw ParseError("empty r vector");
    return r;
}

}  // namespace chipfire::arith
