#include "chipfire/divisor.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <numeric>
#include <set>
#include <sstream>

#include "chipfire/critgrp.hpp"
#include "chipfire/errors.hpp"
#include "chipfire/exactla.hpp"

namespace chipfire {

Divisor& Divisor::operator+=(const Divisor& o) {
    if (o.size() != size()) throw DomainError("divisor sizes differ");
    for (std::size_t i = 0; i < size(); ++i) values[i] += o.values[i];
    return *this;
}

Divisor& Divisor::operator-=(const Divisor& o) {
    if (o.size() != size()) throw DomainError("divisor sizes differ");
    for (std::size_t i = 0; i < size(); ++i) values[i] -= o.values[i];
    return *this;
}

Divisor operator*(std::int64_t k, Divisor a) {
    for (auto& x : a.values) x *= k;
    return a;
}

Divisor Divisor::unit(std::size_t n, Vertex v) {
    Divisor d(n);
    d.values.at(v) = 1;
    return d;
}

Divisor Divisor::delta(std::size_t n, Vertex x, Vertex y) {
    Divisor d(n);
    d.values.at(x) += 1;
    d.values.at(y) -= 1;
    return d;
}

std::string PairingValue::to_string() const { return value.get_str(); }

std::int64_t degree(const Divisor& d) {
    return std::accumulate(d.values.begin(), d.values.end(), std::int64_t{0});
}

bool is_effective(const Divisor& d) {
    return std::all_of(d.values.begin(), d.values.end(), [](std::int64_t x) { return x >= 0; });
}

namespace {

void check_size(const Multigraph& g, const Divisor& d) {
    if (d.size() != g.size())
        throw DomainError("divisor has " + std::to_string(d.size()) + " entries, graph has " +
                          std::to_string(g.size()) + " vertices");
}

void check_vertex(const Multigraph& g, Vertex v) {
    if (v >= g.size()) throw DomainError("vertex index out of range");
}

// Fires every vertex of the set `in` k times (k may be negative).
void fire_set_times(const Multigraph& g, Divisor& d, const std::vector<char>& in, std::int64_t k) {
    const std::size_t n = g.size();
    for (Vertex v = 0; v < n; ++v) {
        if (!in[v]) continue;
        for (Vertex w = 0; w < n; ++w) {
            if (in[w]) continue;
            const std::int64_t m = g.mult(v, w);
            if (m == 0) continue;
            d[v] -= k * m;
            d[w] += k * m;
        }
    }
}

std::vector<std::int64_t> distances_from(const Multigraph& g, Vertex q) {
    std::vector<std::int64_t> dist(g.size(), -1);
    std::deque<Vertex> queue{q};
    dist[q] = 0;
    while (!queue.empty()) {
        Vertex v = queue.front();
        queue.pop_front();
        for (Vertex w = 0; w < g.size(); ++w)
            if (g.mult(v, w) > 0 && dist[w] < 0) {
                dist[w] = dist[v] + 1;
                queue.push_back(w);
            }
    }
    return dist;
}

// Burns from q; a vertex catches fire once its edges into the burnt set exceed
// its chips. Returns the unburnt set.
std::vector<char> dhar_unburnt(const Multigraph& g, const Divisor& d, Vertex q) {
    const std::size_t n = g.size();
    std::vector<char> unburnt(n, 1);
    std::vector<std::int64_t> heat(n, 0);
    std::vector<Vertex> stack{q};
    unburnt[q] = 0;
    while (!stack.empty()) {
        Vertex b = stack.back();
        stack.pop_back();
        for (Vertex v = 0; v < n; ++v) {
            if (!unburnt[v] || g.mult(b, v) == 0) continue;
            heat[v] += g.mult(b, v);
            if (heat[v] > d[v]) {
                unburnt[v] = 0;
                stack.push_back(v);
            }
        }
    }
    return unburnt;
}

}  // namespace

Divisor fire(const Multigraph& g, Divisor d, Vertex v) {
    check_size(g, d);
    check_vertex(g, v);
    for (Vertex w = 0; w < g.size(); ++w) {
        d[w] += g.mult(v, w);
        d[v] -= g.mult(v, w);
    }
    return d;
}

Divisor borrow(const Multigraph& g, Divisor d, Vertex v) {
    check_size(g, d);
    check_vertex(g, v);
    for (Vertex w = 0; w < g.size(); ++w) {
        d[w] -= g.mult(v, w);
        d[v] += g.mult(v, w);
    }
    return d;
}

Divisor fire_set(const Multigraph& g, Divisor d, const std::vector<Vertex>& set) {
    check_size(g, d);
    std::vector<char> in(g.size(), 0);
    for (Vertex v : set) {
        check_vertex(g, v);
        in[v] = 1;
    }
    fire_set_times(g, d, in, 1);
    return d;
}

Divisor div_of_function(const Multigraph& g, const VertexFunction& f) {
    if (f.size() != g.size()) throw DomainError("function size does not match the graph");
    Divisor d(g.size());
    for (Vertex v = 0; v < g.size(); ++v)
        for (Vertex w = 0; w < g.size(); ++w) d[v] += g.mult(v, w) * (f[v] - f[w]);
    return d;
}

std::optional<VertexFunction> is_principal(const Multigraph& g, const Divisor& d) {
    check_size(g, d);
    auto x = solve_integer(laplacian(g), to_big(d.values));
    if (!x) return std::nullopt;
    VertexFunction f;
    for (const auto& v : *x) f.push_back(to_int64(v));
    // Shift so that the last vertex has value 0 on each component.
    for (const auto& part : connected_components(g)) {
        std::int64_t base = f[part.back()];
        for (Vertex v : part) f[v] -= base;
    }
    return f;
}

Divisor q_reduce(const Multigraph& g, const Divisor& d, Vertex q) {
    check_size(g, d);
    check_vertex(g, q);
    if (!is_connected(g)) throw GraphError("q_reduce needs a connected graph");
    const std::size_t n = g.size();
    Divisor r = d;

    // Debt clearing, outermost distance layer first. Borrowing on the set of
    // vertices at distance >= k from q only moves chips from layer k-1 into
    // layer k, so layers already cleared stay out of debt.
    const auto dist = distances_from(g, q);
    const std::int64_t far = *std::max_element(dist.begin(), dist.end());
    for (std::int64_t k = far; k >= 1; --k) {
        std::vector<char> in(n, 0);
        for (Vertex v = 0; v < n; ++v) in[v] = dist[v] >= k;
        std::int64_t times = 0;
        for (Vertex v = 0; v < n; ++v) {
            if (dist[v] != k || r[v] >= 0) continue;
            std::int64_t out = 0;
            for (Vertex w = 0; w < n; ++w)
                if (!in[w]) out += g.mult(v, w);
            times = std::max(times, (-r[v] + out - 1) / out);
        }
        if (times > 0) fire_set_times(g, r, in, -times);
    }

    // Dhar: fire the unburnt set as often as it stays out of debt, then burn again.
    while (true) {
        auto unburnt = dhar_unburnt(g, r, q);
        if (std::none_of(unburnt.begin(), unburnt.end(), [](char c) { return c; })) break;
        std::int64_t times = std::numeric_limits<std::int64_t>::max();
        for (Vertex v = 0; v < n; ++v) {
            if (!unburnt[v]) continue;
            std::int64_t out = 0;
            for (Vertex w = 0; w < n; ++w)
                if (!unburnt[w]) out += g.mult(v, w);
            if (out > 0) times = std::min(times, r[v] / out);
        }
        fire_set_times(g, r, unburnt, times);
    }
    return r;
}

bool is_q_reduced(const Multigraph& g, const Divisor& d, Vertex q, ReducedCheck mode) {
    check_size(g, d);
    check_vertex(g, q);
    const std::size_t n = g.size();
    for (Vertex v = 0; v < n; ++v)
        if (v != q && d[v] < 0) return false;
    if (mode == ReducedCheck::dhar) {
        auto unburnt = dhar_unburnt(g, d, q);
        return std::none_of(unburnt.begin(), unburnt.end(), [](char c) { return c; });
    }
    if (n > 16) throw GuardError("exhaustive q-reduced check is limited to 16 vertices");
    std::vector<Vertex> others;
    for (Vertex v = 0; v < n; ++v)
        if (v != q) others.push_back(v);
    const std::uint32_t subsets = 1u << others.size();
    std::vector<char> in(n);
    for (std::uint32_t mask = 1; mask < subsets; ++mask) {
        std::fill(in.begin(), in.end(), 0);
        for (std::size_t i = 0; i < others.size(); ++i)
            if (mask >> i & 1u) in[others[i]] = 1;
        bool debt = false;
        for (Vertex v = 0; v < n && !debt; ++v) {
            if (!in[v]) continue;
            std::int64_t out = 0;
            for (Vertex w = 0; w < n; ++w)
                if (!in[w]) out += g.mult(v, w);
            if (d[v] < out) debt = true;
        }
        if (!debt) return false;
    }
    return true;
}

bool equivalent(const Multigraph& g, const Divisor& a, const Divisor& b) {
    check_size(g, a);
    check_size(g, b);
    if (degree(a) != degree(b)) return false;
    const Vertex q = default_base(g);
    return q_reduce(g, a, q) == q_reduce(g, b, q);
}

bool effective_equivalent(const Multigraph& g, const Divisor& d) {
    if (degree(d) < 0) return false;
    const Vertex q = default_base(g);
    return q_reduce(g, d, q)[q] >= 0;
}

bool has_positive_rank(const Multigraph& g, const Divisor& d) {
    check_size(g, d);
    if (degree(d) < 1) return false;
    for (Vertex v = 0; v < g.size(); ++v) {
        Divisor e = d;
        e[v] -= 1;
        if (!effective_equivalent(g, e)) return false;
    }
    return true;
}

GonalityResult gonality(const Multigraph& g) {
    if (!is_connected(g)) throw GraphError("gonality needs a connected graph");
    const std::size_t n = g.size();
    if (n > 12) throw GuardError("gonality search is limited to 12 vertices");
    for (std::int64_t deg = 1;; ++deg) {
        // Effective divisors of degree deg, lexicographically from (deg, 0, ..., 0) down.
        Divisor d(n);
        d[0] = deg;
        while (true) {
            if (has_positive_rank(g, d)) return {deg, d};
            // next composition in reverse-lexicographic order
            std::size_t i = n - 1;
            std::int64_t tail = d[n - 1];
            d[n - 1] = 0;
            while (i > 0 && d[i - 1] == 0) --i;
            if (i == 0) break;
            d[i - 1] -= 1;
            d[i] = tail + 1;
        }
    }
}

PairingValue monodromy_pairing(const Multigraph& g, const Divisor& d1, const Divisor& d2, Vertex q) {
    check_size(g, d1);
    check_size(g, d2);
    check_vertex(g, q);
    if (degree(d1) != 0 || degree(d2) != 0) throw DomainError("pairing needs degree-0 divisors");
    if (!is_connected(g)) throw GraphError("pairing needs a connected graph");
    if (g.size() == 1) return {Rational(0)};
    std::vector<BigInt> x1, x2;
    for (Vertex v = 0; v < g.size(); ++v) {
        if (v == q) continue;
        x1.push_back(big(d1[v]));
        x2.push_back(big(d2[v]));
    }
    RationalVector y = solve_rational(reduced_laplacian(g, q, q), x1);
    Rational s = 0;
    for (std::size_t i = 0; i < y.size(); ++i) s += y[i] * x2[i];
    return {frac(s)};
}

PairingValue monodromy_pairing_definitional(const Multigraph& g, const Divisor& d1, const Divisor& d2) {
    check_size(g, d1);
    check_size(g, d2);
    if (degree(d1) != 0 || degree(d2) != 0) throw DomainError("pairing needs degree-0 divisors");
    const std::int64_t m2 = to_int64(element_order(g, d2, default_base(g)));
    auto f2 = is_principal(g, m2 * d2);
    if (!f2) throw std::logic_error("m * D is not principal for m = order(D)");
    Rational s = 0;
    for (Vertex v = 0; v < g.size(); ++v) s += Rational(big(d1[v] * (*f2)[v]));
    s /= Rational(big(m2));
    return {frac(s)};
}

std::vector<Divisor> list_q_reduced_degree0(const Multigraph& g, Vertex q) {
    check_vertex(g, q);
    if (!is_connected(g)) throw GraphError("graph is not connected");
    if (spanning_tree_count(g) > 100000) throw GuardError("list_q_reduced_degree0 is limited to |K(G)| <= 100000");
    const std::size_t n = g.size();
    std::set<Divisor> seen{Divisor(n)};
    std::vector<Divisor> frontier{Divisor(n)};
    while (!frontier.empty()) {
        std::vector<Divisor> next;
        for (const auto& d : frontier)
            for (Vertex v = 0; v < n; ++v) {
                if (v == q) continue;
                Divisor e = q_reduce(g, d + Divisor::delta(n, v, q), q);
                if (seen.insert(e).second) next.push_back(std::move(e));
            }
        frontier = std::move(next);
    }
    return {seen.begin(), seen.end()};
}

PairingValue PairingGram::at(std::size_t i, std::size_t j) const {
    Rational r(big(numerators.at(i * size() + j)), big(order));
    r.canonicalize();
    return {r};
}

bool PairingGram::perfect() const {
    const std::size_t n = size();
    std::set<std::vector<std::int64_t>> rows;
    for (std::size_t i = 0; i < n; ++i)
        rows.emplace(numerators.begin() + static_cast<std::ptrdiff_t>(i * n),
                     numerators.begin() + static_cast<std::ptrdiff_t>((i + 1) * n));
    return rows.size() == n;
}

bool PairingGram::symmetric() const {
    for (std::size_t i = 0; i < size(); ++i)
        for (std::size_t j = i + 1; j < size(); ++j)
            if (numerators[i * size() + j] != numerators[j * size() + i]) return false;
    return true;
}

PairingGram pairing_gram(const Multigraph& g, Vertex q) {
    check_vertex(g, q);
    if (!is_connected(g)) throw GraphError("graph is not connected");
    const BigInt k = spanning_tree_count(g);
    if (k > 5000) throw GuardError("pairing_gram is limited to |K(G)| <= 5000");
    PairingGram pg;
    pg.order = to_int64(k);
    pg.representatives = list_q_reduced_degree0(g, q);
    const std::size_t n = g.size(), N = pg.size();
    pg.numerators.assign(N * N, 0);
    if (n == 1) return pg;

    // |K| * L_q^{-1} is an integer matrix (the adjugate, det L_q = |K| > 0).
    const IntegerMatrix lq = reduced_laplacian(g, q, q);
    const std::size_t m = n - 1;
    std::vector<std::vector<std::int64_t>> adj(m, std::vector<std::int64_t>(m));
    for (std::size_t j = 0; j < m; ++j) {
        std::vector<BigInt> e(m, BigInt(0));
        e[j] = 1;
        RationalVector col = solve_rational(lq, e);
        for (std::size_t i = 0; i < m; ++i) {
            Rational s = col[i] * Rational(k);
            s.canonicalize();
            adj[i][j] = to_int64(mod(s.get_num(), k));
        }
    }
    auto restrict = [&](const Divisor& d) {
        std::vector<std::int64_t> x;
        for (Vertex v = 0; v < n; ++v)
            if (v != q) x.push_back(d[v]);
        return x;
    };
    std::vector<std::vector<std::int64_t>> w(N), x(N);
    for (std::size_t a = 0; a < N; ++a) {
        x[a] = restrict(pg.representatives[a]);
        w[a].assign(m, 0);
        for (std::size_t i = 0; i < m; ++i) {
            std::int64_t s = 0;
            for (std::size_t j = 0; j < m; ++j) s = (s + adj[i][j] * x[a][j]) % pg.order;
            w[a][i] = s;
        }
    }
    for (std::size_t a = 0; a < N; ++a)
        for (std::size_t b = 0; b < N; ++b) {
            std::int64_t s = 0;
            for (std::size_t i = 0; i < m; ++i) s = (s + x[b][i] * w[a][i]) % pg.order;
            if (s < 0) s += pg.order;
            pg.numerators[a * N + b] = s;
        }
    return pg;
}

Divisor parse_divisor(const Multigraph& g, std::string_view text) {
    Divisor d(g.size());
    std::vector<char> set(g.size(), 0);
    std::istringstream in{std::string(text)};
    for (std::string tok; in >> tok;) {
        auto colon = tok.rfind(':');
        if (colon == std::string::npos || colon == 0 || colon + 1 == tok.size())
            throw ParseError("expected label:value, got '" + tok + "'");
        std::string label = tok.substr(0, colon), value = tok.substr(colon + 1);
        auto v = g.find(label);
        if (!v) throw ParseError("unknown vertex '" + label + "'");
        if (set[*v]) throw ParseError("vertex '" + label + "' given twice");
        std::size_t pos = 0;
        long long x = 0;
        try {
            x = std::stoll(value, &pos);
        } catch (const std::exception&) {
            pos = 0;
        }
        if (pos != value.size()) throw ParseError("bad chip count '" + value + "'");
        d[*v] = x;
        set[*v] = 1;
    }
    return d;
}

std::string write_divisor(const Multigraph& g, const Divisor& d) {
    check_size(g, d);
    std::string out;
    for (Vertex v = 0; v < g.size(); ++v) {
        if (v) out += ' ';
        out += g.label(v) + ":" + std::to_string(d[v]);
    }
    return out;
}

}  // namespace chipfire
