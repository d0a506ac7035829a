#include "chipfire/critgrp.hpp"

#include <numeric>
#include <stdexcept>

#include "chipfire/divisor.hpp"
#include "chipfire/errors.hpp"

namespace chipfire {

CokernelResult cokernel(const IntegerMatrix& m) {
    std::vector<BigInt> diag = smith_diagonal(m);
    CokernelResult r;
    std::size_t nonzero = 0;
    std::vector<BigInt> torsion;
    for (const auto& s : diag) {
        if (s == 0) continue;
        ++nonzero;
        torsion.push_back(abs(s));
    }
    r.free_rank = m.rows() - nonzero;
    r.torsion = AbelianGroup::from_orders(std::move(torsion));
    return r;
}

namespace {

void require_connected(const Multigraph& g) {
    if (!is_connected(g)) throw GraphError("graph is not connected");
}

}  // namespace

AbelianGroup critical_group(const Multigraph& g) {
    require_connected(g);
    const Vertex q = g.size() - 1;
    return critical_group_reduced_at(g, q, q);
}

AbelianGroup critical_group_reduced_at(const Multigraph& g, Vertex row, Vertex col) {
    require_connected(g);
    if (g.size() == 1) return {};
    return cokernel(reduced_laplacian(g, row, col)).torsion;
}

CokernelResult directed_critical_group(const DirectedMultigraph& g) {
    return cokernel(directed_laplacian(g));
}

BigInt spanning_tree_count(const Multigraph& g) {
    if (!is_connected(g)) return 0;
    if (g.size() == 1) return 1;
    const Vertex q = g.size() - 1;
    return abs(determinant(reduced_laplacian(g, q, q)));
}

std::vector<std::vector<std::size_t>> spanning_tree_enumerate(const Multigraph& g) {
    const auto units = g.edge_units();
    if (units.size() > 20) throw GuardError("spanning_tree_enumerate is limited to 20 edges");
    const std::size_t n = g.size();
    std::vector<std::vector<std::size_t>> trees;
    if (n == 0) return trees;
    const std::size_t k = n - 1;
    if (units.size() < k) return trees;
    std::vector<std::size_t> pick(k);
    std::iota(pick.begin(), pick.end(), 0);
    std::vector<std::size_t> parent(n);
    auto root = [&](std::size_t v) {
        while (parent[v] != v) v = parent[v] = parent[parent[v]];
        return v;
    };
    while (true) {
        std::iota(parent.begin(), parent.end(), 0);
        bool acyclic = true;
        for (std::size_t e : pick) {
            auto a = root(units[e].first), b = root(units[e].second);
            if (a == b) {
                acyclic = false;
                break;
            }
            parent[a] = b;
        }
        // n - 1 edges without a cycle span the graph
        if (acyclic) trees.push_back(pick);
        std::size_t i = k;
        while (i > 0 && pick[i - 1] == units.size() - k + i - 1) --i;
        if (i == 0) break;
        ++pick[i - 1];
        for (std::size_t j = i; j < k; ++j) pick[j] = pick[j - 1] + 1;
    }
    return trees;
}

BigInt element_order(const Multigraph& g, const Divisor& d, Vertex q) {
    require_connected(g);
    if (d.size() != g.size()) throw DomainError("divisor size does not match the graph");
    if (degree(d) != 0) throw DomainError("element_order needs a degree-0 divisor");
    if (q >= g.size()) throw DomainError("base vertex out of range");
    if (g.size() == 1) return 1;
    SNFResult s = smith_normal_form(reduced_laplacian(g, q, q));
    std::vector<BigInt> dp;
    for (Vertex v = 0; v < g.size(); ++v)
        if (v != q) dp.push_back(big(d[v]));
    std::vector<BigInt> y = s.U * dp;
    BigInt order = 1;
    for (std::size_t i = 0; i < y.size(); ++i) {
        const BigInt& si = s.diag[i];
        order = lcm(order, exact_div(si, gcd(si, y[i])));
    }
    return order;
}

DeltaGeneratorTest delta_generator_test(const Multigraph& g, Vertex x, Vertex y) {
    require_connected(g);
    Multigraph h = toggle_edge(g, x, y);
    if (!is_connected(h)) throw GraphError("toggled graph is not connected");
    DeltaGeneratorTest r;
    BigInt kg = spanning_tree_count(g);
    BigInt kh = spanning_tree_count(h);
    r.gcd = gcd(kg, kh);
    r.index = exact_div(kg, element_order(g, Divisor::delta(g.size(), x, y), x));
    r.generates = r.index == 1;
    if (!divides(r.index, r.gcd) || !divides(r.gcd, r.index * r.index))
        throw std::logic_error("delta_generator_test: index/gcd relation violated");
    return r;
}

BigInt cone_order_formula(const Multigraph& g, std::int64_t m) {
    if (m < 2) throw DomainError("cone_order_formula needs m >= 2");
    require_connected(g);
    const BigInt bm = big(m);
    BigInt p = abs(eval_charpoly(laplacian(g), -bm));
    if (!divides(bm, p)) throw std::logic_error("cone_order_formula: m does not divide |p(-m)|");
    const auto k = static_cast<std::int64_t>(g.size());
    return exact_div(p, bm) * pow(big(m + k), static_cast<unsigned long>(m - 1));
}

BigInt fibonacci(std::int64_t n) {
    if (n < 0) throw DomainError("fibonacci index must be nonnegative");
    BigInt a = 0, b = 1;
    for (std::int64_t i = 0; i < n; ++i) {
        BigInt c = a + b;
        a = b;
        b = c;
    }
    return a;
}

AbelianGroup predicted_circulant_group(std::int64_t n) {
    if (n < 5) throw DomainError("predicted_circulant_group needs n >= 5");
    BigInt f = fibonacci(n);
    BigInt d = gcd(big(n), f);
    return AbelianGroup::from_orders(std::vector<BigInt>{d, f, exact_div(big(n) * f, d)});
}

AbelianGroup subdivision_predict(const AbelianGroup& h, std::int64_t genus, std::int64_t k) {
    if (k < 1) throw DomainError("subdivision factor must be at least 1");
    if (genus < 0 || static_cast<std::int64_t>(h.rank()) > genus)
        throw DomainError("group rank exceeds the genus");
    std::vector<BigInt> orders(static_cast<std::size_t>(genus) - h.rank(), BigInt(1));
    orders.insert(orders.end(), h.factors().begin(), h.factors().end());
    for (auto& a : orders) a *= k;
    return AbelianGroup::from_orders(std::move(orders));
}

}  // namespace chipfire
