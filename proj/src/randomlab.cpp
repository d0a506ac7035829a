#include "chipfire/randomlab.hpp"

#include <cmath>
#include <cstdio>
#include <random>
#include <thread>

#include "json.hpp"

#include "chipfire/critgrp.hpp"
#include "chipfire/errors.hpp"

namespace chipfire::randomlab {

Probability Probability::parse(std::string_view text) {
    std::string t(text);
    auto slash = t.find('/');
    Probability q;
    try {
        std::size_t a = 0, b = 0;
        if (slash == std::string::npos) throw std::invalid_argument("no slash");
        std::string ns = t.substr(0, slash), ds = t.substr(slash + 1);
        if (ns.empty() || ds.empty() || ns[0] == '-' || ds[0] == '-') throw std::invalid_argument("sign");
        q.num = std::stoull(ns, &a);
        q.den = std::stoull(ds, &b);
        if (a != ns.size() || b != ds.size()) throw std::invalid_argument("trailing");
    } catch (const std::exception&) {
        throw ParseError("edge probability must look like 'a/b', got '" + t + "'");
    }
    if (q.den == 0 || q.num == 0 || q.num >= q.den)
        throw DomainError("edge probability must lie strictly between 0 and 1");
    const std::uint64_t g = std::gcd(q.num, q.den);
    q.num /= g;
    q.den /= g;
    return q;
}

std::string Probability::to_string() const { return std::to_string(num) + "/" + std::to_string(den); }

void ExperimentConfig::validate() const {
    if (n < 1) throw DomainError("n must be at least 1");
    if (samples < 1) throw DomainError("samples must be at least 1");
    if (q.den == 0 || q.num == 0 || q.num >= q.den) throw DomainError("edge probability must lie in (0, 1)");
    if (!is_prime(p)) throw DomainError(std::to_string(p) + " is not prime");
    if (jobs < 1) throw DomainError("jobs must be at least 1");
}

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

std::string fixed6(double x) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.6f", x);
    return buf;
}

}  // namespace

std::uint64_t sample_seed(std::uint64_t seed, std::uint64_t index) {
    return splitmix64(seed ^ splitmix64(index));
}

Multigraph sample_er(const ExperimentConfig& config, std::uint64_t index) {
    config.validate();
    std::mt19937_64 gen(sample_seed(config.seed, index));
    Multigraph g = Multigraph::with_vertices(config.n);
    const unsigned __int128 bound = static_cast<unsigned __int128>(config.q.num) << 64;
    for (Vertex i = 0; i < config.n; ++i)
        for (Vertex j = i + 1; j < config.n; ++j) {
            const std::uint64_t w = gen();
            if (static_cast<unsigned __int128>(w) * config.q.den < bound) g.add_edge(i, j);
        }
    return g;
}

double ExperimentReport::trivial_sylow_frequency() const {
    return connected ? static_cast<double>(trivial_sylow) / static_cast<double>(connected) : 0.0;
}

double ExperimentReport::cyclic_frequency() const {
    return connected ? static_cast<double>(cyclic) / static_cast<double>(connected) : 0.0;
}

namespace {

struct SampleOutcome {
    bool connected = false;
    std::string sylow;
    bool cyclic = false;
    bool odd = false;
    bool trivial_sylow = false;
};

SampleOutcome run_sample(const ExperimentConfig& config, std::uint64_t index) {
    SampleOutcome o;
    Multigraph g = sample_er(config, index);
    if (!is_connected(g)) return o;
    o.connected = true;
    AbelianGroup k;
    if (g.size() > 1) {
        const Vertex q = g.size() - 1;
        k = AbelianGroup::from_orders(smith_diagonal(reduced_laplacian(g, q, q)));
    }
    AbelianGroup s = sylow(k, config.p);
    o.sylow = s.to_string();
    o.cyclic = k.cyclic();
    o.odd = mpz_odd_p(k.order().get_mpz_t()) != 0;
    o.trivial_sylow = s.trivial();
    return o;
}

}  // namespace

ExperimentReport run_experiment(const ExperimentConfig& config) {
    config.validate();
    if (static_cast<double>(config.n) * static_cast<double>(config.samples) > 1e7)
        throw GuardError("n * samples is limited to 10^7");
    std::vector<SampleOutcome> outcomes(config.samples);
    const unsigned jobs = std::min<unsigned>(config.jobs, static_cast<unsigned>(config.samples));
    if (jobs <= 1) {
        for (std::size_t i = 0; i < config.samples; ++i) outcomes[i] = run_sample(config, i);
    } else {
        std::vector<std::thread> workers;
        for (unsigned t = 0; t < jobs; ++t)
            workers.emplace_back([&, t] {
                for (std::size_t i = t; i < config.samples; i += jobs) outcomes[i] = run_sample(config, i);
            });
        for (auto& w : workers) w.join();
    }
    ExperimentReport r;
    r.config = config;
    for (const auto& o : outcomes) {
        if (!o.connected) {
            ++r.disconnected;
            continue;
        }
        ++r.connected;
        ++r.sylow_tallies[o.sylow];
        r.cyclic += o.cyclic;
        r.odd_order += o.odd;
        r.trivial_sylow += o.trivial_sylow;
    }
    return r;
}

std::string ExperimentReport::to_json() const {
    using nlohmann::ordered_json;
    const double total = static_cast<double>(connected + disconnected);
    auto cond = [&](std::size_t k) { return fixed6(connected ? k / static_cast<double>(connected) : 0.0); };
    auto raw = [&](std::size_t k) { return fixed6(k / total); };

    ordered_json j;
    j["config"] = {{"n", config.n},
                   {"q", config.q.to_string()},
                   {"p", config.p},
                   {"samples", config.samples},
                   {"seed", config.seed}};
    j["counts"] = {{"connected", connected},
                   {"disconnected", disconnected},
                   {"cyclic", cyclic},
                   {"odd_order", odd_order},
                   {"trivial_sylow", trivial_sylow}};
    j["frequencies"] = {
        {"conditioned_on_connected",
         {{"trivial_sylow", cond(trivial_sylow)}, {"cyclic", cond(cyclic)}, {"odd_order", cond(odd_order)}}},
        {"raw",
         {{"connected", raw(connected)},
          {"trivial_sylow", raw(trivial_sylow)},
          {"cyclic", raw(cyclic)},
          {"odd_order", raw(odd_order)}}}};
    ordered_json tallies = ordered_json::array();
    for (const auto& [group, count] : sylow_tallies) {
        ordered_json t;
        t["group"] = group;
        t["count"] = count;
        t["frequency"] = cond(count);
        try {
            t["wood_probability"] = fixed6(wood_probability(parse_group(group), config.p));
        } catch (const GuardError&) {
            t["wood_probability"] = nullptr;
        }
        tallies.push_back(t);
    }
    j["sylow_tallies"] = tallies;
    j["theory"] = {{"trivial_sylow_limit", fixed6(wood_product(config.p))},
                   {"cyclic_limit", fixed6(cyclic_constant(10))}};
    return j.dump(2) + "\n";
}

namespace {

// Prime p and exponents e_i of a p-group given by its invariant factors.
std::int64_t p_group_prime(const AbelianGroup& h) {
    if (h.trivial()) return 0;
    const std::int64_t first = to_int64(h.factors().front());
    std::int64_t p = 2;
    while (first % p != 0) ++p;
    if (!is_p_group(h, p)) throw DomainError("group " + h.to_string() + " is not a p-group");
    return p;
}

std::vector<int> p_exponents(const AbelianGroup& h, std::int64_t p) {
    std::vector<int> e;
    for (const auto& f : h.factors()) {
        std::int64_t x = to_int64(f);
        int k = 0;
        while (x > 1) {
            x /= p;
            ++k;
        }
        e.push_back(k);
    }
    return e;
}

std::int64_t ipow(std::int64_t b, int e) {
    std::int64_t r = 1;
    while (e-- > 0) r *= b;
    return r;
}

}  // namespace

BigInt count_pairings(const AbelianGroup& h) {
    if (h.order() > 512) throw GuardError("count_pairings is limited to |H| <= 512");
    if (h.trivial()) return 1;
    const std::int64_t p = p_group_prime(h);
    const auto e = p_exponents(h, p);
    const std::size_t r = e.size();
    const int E = e.back();
    const std::int64_t PE = ipow(p, E);

    // Gram entries a_ij (i <= j) with a_ij in [0, p^min(e_i, e_j)).
    std::vector<std::pair<std::size_t, std::size_t>> slots;
    std::vector<std::int64_t> range;
    double grams = 1;
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = i; j < r; ++j) {
            slots.emplace_back(i, j);
            range.push_back(ipow(p, std::min(e[i], e[j])));
            grams *= static_cast<double>(range.back());
        }
    if (grams > 4194304.0) throw GuardError("count_pairings: too many Gram tables to enumerate");

    // Elements of order p: sum c_i p^(e_i - 1) g_i, c != 0.
    std::vector<std::vector<std::int64_t>> socle;
    {
        std::vector<std::int64_t> c(r, 0);
        while (true) {
            std::size_t i = 0;
            while (i < r && ++c[i] == p) c[i++] = 0;
            if (i == r) break;
            socle.push_back(c);
        }
    }

    std::vector<std::int64_t> a(slots.size(), 0);
    std::vector<std::vector<std::int64_t>> gram(r, std::vector<std::int64_t>(r));
    BigInt count = 0;
    while (true) {
        // Entry (i, j) scaled to denominator p^E.
        for (std::size_t s = 0; s < slots.size(); ++s) {
            auto [i, j] = slots[s];
            gram[i][j] = gram[j][i] = a[s] * ipow(p, E - std::min(e[i], e[j]));
        }
        bool perfect = true;
        for (const auto& c : socle) {
            bool all_zero = true;
            for (std::size_t j = 0; j < r && all_zero; ++j) {
                std::int64_t v = 0;
                for (std::size_t i = 0; i < r; ++i) v = (v + c[i] * ipow(p, e[i] - 1) % PE * gram[i][j]) % PE;
                if (v != 0) all_zero = false;
            }
            if (all_zero) {
                perfect = false;
                break;
            }
        }
        if (perfect) ++count;
        std::size_t s = 0;
        while (s < a.size() && ++a[s] == range[s]) a[s++] = 0;
        if (s == a.size()) break;
    }
    return count;
}

BigInt aut_order_bruteforce(const AbelianGroup& h) {
    if (h.order() > 512) throw GuardError("aut_order_bruteforce is limited to |H| <= 512");
    if (h.trivial()) return 1;
    std::vector<std::int64_t> n;
    for (const auto& f : h.factors()) n.push_back(to_int64(f));
    const std::size_t r = n.size();
    const std::int64_t order = to_int64(h.order());
    auto decode = [&](std::int64_t code) {
        std::vector<std::int64_t> x(r);
        for (std::size_t i = 0; i < r; ++i) {
            x[i] = code % n[i];
            code /= n[i];
        }
        return x;
    };
    auto encode = [&](const std::vector<std::int64_t>& x) {
        std::int64_t code = 0;
        for (std::size_t i = r; i-- > 0;) code = code * n[i] + x[i];
        return code;
    };
    // Candidate images of generator i: elements killed by n_i.
    std::vector<std::vector<std::int64_t>> cand(r);
    double tuples = 1;
    for (std::size_t i = 0; i < r; ++i) {
        for (std::int64_t c = 0; c < order; ++c) {
            auto x = decode(c);
            bool killed = true;
            for (std::size_t k = 0; k < r; ++k)
                if (x[k] * n[i] % n[k] != 0) killed = false;
            if (killed) cand[i].push_back(c);
        }
        tuples *= static_cast<double>(cand[i].size());
    }
    if (tuples > 4194304.0) throw GuardError("aut_order_bruteforce: too many generator images");
    std::vector<std::size_t> pick(r, 0);
    std::vector<char> hit(order);
    BigInt count = 0;
    while (true) {
        std::vector<std::vector<std::int64_t>> img(r);
        for (std::size_t i = 0; i < r; ++i) img[i] = decode(cand[i][pick[i]]);
        std::fill(hit.begin(), hit.end(), 0);
        bool bijective = true;
        for (std::int64_t c = 0; c < order && bijective; ++c) {
            auto x = decode(c);
            std::vector<std::int64_t> y(r, 0);
            for (std::size_t i = 0; i < r; ++i)
                for (std::size_t k = 0; k < r; ++k) y[k] = (y[k] + x[i] * img[i][k]) % n[k];
            auto code = encode(y);
            if (hit[code]) bijective = false;
            hit[code] = 1;
        }
        if (bijective) ++count;
        std::size_t i = 0;
        while (i < r && ++pick[i] == cand[i].size()) pick[i++] = 0;
        if (i == r) break;
    }
    return count;
}

BigInt aut_order(const AbelianGroup& h) {
    if (h.trivial()) return 1;
    // Split into Sylow subgroups; for each p-part with exponents e_1 <= ... <= e_r
    // |Aut| = prod_k (p^d_k - p^(k-1)) * prod_j p^(e_j (r - d_j)) * prod_i p^((e_i - 1)(r - c_i + 1)),
    // d_k = max{l : e_l = e_k}, c_k = min{l : e_l = e_k} (1-based).
    BigInt rest = h.exponent();
    BigInt total = 1;
    for (std::int64_t p = 2; rest > 1; ++p) {
        if (!divides(big(p), rest)) continue;
        while (divides(big(p), rest)) rest = exact_div(rest, big(p));
        AbelianGroup s = sylow(h, p);
        std::vector<int> e;
        for (const auto& f : s.factors()) {
            BigInt x = f;
            int k = 0;
            while (x > 1) {
                x = exact_div(x, big(p));
                ++k;
            }
            e.push_back(k);
        }
        const std::size_t r = e.size();
        const BigInt bp = big(p);
        for (std::size_t k = 1; k <= r; ++k) {
            std::size_t d = k, c = k;
            while (d < r && e[d] == e[k - 1]) ++d;
            while (c > 1 && e[c - 2] == e[k - 1]) --c;
            total *= pow(bp, static_cast<unsigned long>(d)) - pow(bp, static_cast<unsigned long>(k - 1));
            total *= pow(bp, static_cast<unsigned long>(e[k - 1]) * (r - d));
            total *= pow(bp, static_cast<unsigned long>(e[k - 1] - 1) * (r - c + 1));
        }
    }
    return total;
}

double wood_product(std::int64_t p, double tol) {
    if (!is_prime(p)) throw DomainError(std::to_string(p) + " is not prime");
    if (tol <= 0) throw DomainError("tolerance must be positive");
    double prod = 1;
    for (int k = 0;; ++k) {
        const double t = std::pow(static_cast<double>(p), -2.0 * k - 1.0);
        if (t < tol) break;
        prod *= 1 - t;
    }
    return prod;
}

double wood_probability(const AbelianGroup& h, std::int64_t p, double tol) {
    if (!is_prime(p)) throw DomainError(std::to_string(p) + " is not prime");
    if (!is_p_group(h, p)) throw DomainError("group " + h.to_string() + " is not a " + std::to_string(p) + "-group");
    Rational w(count_pairings(h), h.order() * aut_order(h));
    w.canonicalize();
    return w.get_d() * wood_product(p, tol);
}

BigInt macwilliams_count(std::int64_t m, std::int64_t p) {
    if (m < 0) throw DomainError("matrix size must be nonnegative");
    if (!is_prime(p)) throw DomainError(std::to_string(p) + " is not prime");
    const BigInt bp = big(p);
    Rational c(pow(bp, static_cast<unsigned long>(m * (m + 1) / 2)));
    for (std::int64_t j = 1; j <= (m + 1) / 2; ++j) {
        Rational f(BigInt(pow(bp, static_cast<unsigned long>(2 * j - 1)) - 1),
                   pow(bp, static_cast<unsigned long>(2 * j - 1)));
        f.canonicalize();
        c *= f;
    }
    c.canonicalize();
    if (c.get_den() != 1) throw std::logic_error("macwilliams_count: non-integral result");
    return c.get_num();
}

BigInt macwilliams_bruteforce(std::int64_t m, std::int64_t p) {
    if (m < 0) throw DomainError("matrix size must be nonnegative");
    if (!is_prime(p)) throw DomainError(std::to_string(p) + " is not prime");
    const std::size_t free = static_cast<std::size_t>(m * (m + 1) / 2);
    if (static_cast<double>(free) * std::log2(static_cast<double>(p)) > 20.0 + 1e-9)
        throw GuardError("macwilliams_bruteforce is limited to p^(m(m+1)/2) <= 2^20");
    const std::size_t n = static_cast<std::size_t>(m);
    std::vector<std::int64_t> a(free, 0);
    BigInt count = 0;
    while (true) {
        std::vector<std::vector<std::int64_t>> mat(n, std::vector<std::int64_t>(n));
        std::size_t s = 0;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i; j < n; ++j) mat[i][j] = mat[j][i] = a[s++];
        // rank over Z/p
        bool invertible = true;
        for (std::size_t c = 0; c < n && invertible; ++c) {
            std::size_t piv = c;
            while (piv < n && mat[piv][c] == 0) ++piv;
            if (piv == n) {
                invertible = false;
                break;
            }
            std::swap(mat[c], mat[piv]);
            std::int64_t inv = 1;
            for (std::int64_t t = 1; t < p; ++t)
                if (mat[c][c] * t % p == 1) inv = t;
            for (std::size_t i = c + 1; i < n; ++i) {
                std::int64_t f = mat[i][c] * inv % p;
                for (std::size_t j = c; j < n; ++j) mat[i][j] = ((mat[i][j] - f * mat[c][j]) % p + p) % p;
            }
        }
        if (invertible) ++count;
        std::size_t k = 0;
        while (k < free && ++a[k] == p) a[k++] = 0;
        if (k == free) break;
    }
    return count;
}

double zeta(double s) {
    if (!(s > 1)) throw DomainError("zeta needs s > 1");
    const int N = 64;
    double sum = 0;
    for (int k = N - 1; k >= 1; --k) sum += std::pow(k, -s);
    // Euler-Maclaurin tail from N on
    const double n = N;
    sum += std::pow(n, 1 - s) / (s - 1) + std::pow(n, -s) / 2 + s * std::pow(n, -s - 1) / 12 -
           s * (s + 1) * (s + 2) * std::pow(n, -s - 3) / 720 +
           s * (s + 1) * (s + 2) * (s + 3) * (s + 4) * std::pow(n, -s - 5) / 30240;
    return sum;
}

double cyclic_constant(std::size_t terms) {
    if (terms < 1) throw DomainError("terms must be at least 1");
    double c = 1;
    for (std::size_t k = 1; k <= terms; ++k) c /= zeta(2.0 * static_cast<double>(k) + 1.0);
    return c;
}

Rational mean_spanning_trees(std::int64_t n) {
    if (n < 1) throw DomainError("n must be at least 1");
    Rational num = n >= 2 ? Rational(pow(big(n), static_cast<unsigned long>(n - 2))) : Rational(1, 1);
    Rational r = num / Rational(pow(big(2), static_cast<unsigned long>(n - 1)));
    r.canonicalize();
    return r;
}

}  // namespace chipfire::randomlab
