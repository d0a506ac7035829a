#include "chipfire/exactla.hpp"

#include <algorithm>
#include <stdexcept>

#include "chipfire/errors.hpp"

namespace chipfire {

std::size_t SNFResult::rank() const {
    return static_cast<std::size_t>(
        std::count_if(diag.begin(), diag.end(), [](const BigInt& s) { return s != 0; }));
}

BigInt determinant(const IntegerMatrix& m) {
    if (!m.square()) throw DomainError("determinant of a non-square matrix");
    const std::size_t n = m.rows();
    if (n == 0) return 1;
    IntegerMatrix a = m;
    BigInt prev = 1;
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a(k, k) == 0) {
            std::size_t p = k + 1;
            while (p < n && a(p, k) == 0) ++p;
            if (p == n) return 0;
            a.swap_rows(k, p);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                BigInt v = a(i, j) * a(k, k) - a(i, k) * a(k, j);
                a(i, j) = exact_div(v, prev);
            }
            a(i, k) = 0;
        }
        prev = a(k, k);
    }
    BigInt d = a(n - 1, n - 1);
    return sign < 0 ? BigInt(-d) : d;
}

std::size_t rank(const IntegerMatrix& m) {
    IntegerMatrix a = m;
    const std::size_t rows = a.rows(), cols = a.cols();
    std::size_t r = 0;
    BigInt prev = 1;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t p = r;
        while (p < rows && a(p, c) == 0) ++p;
        if (p == rows) continue;
        a.swap_rows(r, p);
        for (std::size_t i = r + 1; i < rows; ++i) {
            for (std::size_t j = c + 1; j < cols; ++j) {
                BigInt v = a(i, j) * a(r, c) - a(i, c) * a(r, j);
                a(i, j) = exact_div(v, prev);
            }
            a(i, c) = 0;
        }
        prev = a(r, c);
        ++r;
    }
    return r;
}

namespace {

// Smallest nonzero |entry| in the block starting at (t, t); false when the block is zero.
bool find_pivot(const IntegerMatrix& a, std::size_t t, std::size_t& pi, std::size_t& pj) {
    bool found = false;
    BigInt best;
    for (std::size_t i = t; i < a.rows(); ++i)
        for (std::size_t j = t; j < a.cols(); ++j) {
            const BigInt& x = a(i, j);
            if (x == 0) continue;
            if (!found || mpz_cmpabs(x.get_mpz_t(), best.get_mpz_t()) < 0) {
                best = abs(x);
                pi = i;
                pj = j;
                found = true;
            }
        }
    return found;
}

void reduce_symmetric(BigInt& x, const BigInt& d) {
    x = mod(x, d);
    if (2 * x > d) x -= d;
}

// Diagonalises `a` in place. With U and V given, every row/column operation is
// mirrored so that U * a0 * V == a at the end. When `modulus` is nonzero the
// entries are kept reduced modulo it and the divisibility fix is skipped.
void diagonalise(IntegerMatrix& a, IntegerMatrix* U, IntegerMatrix* V, const BigInt& modulus) {
    const std::size_t n = std::min(a.rows(), a.cols());
    const bool modular = modulus != 0;
    for (std::size_t t = 0; t < n;) {
        std::size_t pi = 0, pj = 0;
        if (!find_pivot(a, t, pi, pj)) break;
        a.swap_rows(t, pi);
        a.swap_cols(t, pj);
        if (U) U->swap_rows(t, pi);
        if (V) V->swap_cols(t, pj);

        bool clean = true;
        const BigInt p = a(t, t);
        for (std::size_t i = t + 1; i < a.rows(); ++i) {
            if (a(i, t) == 0) continue;
            BigInt q = -floor_div(a(i, t), p);
            a.add_row_multiple(i, t, q);
            if (U) U->add_row_multiple(i, t, q);
            if (modular)
                for (std::size_t j = t; j < a.cols(); ++j) reduce_symmetric(a(i, j), modulus);
            if (a(i, t) != 0) clean = false;
        }
        for (std::size_t j = t + 1; j < a.cols(); ++j) {
            if (a(t, j) == 0) continue;
            BigInt q = -floor_div(a(t, j), p);
            a.add_col_multiple(j, t, q);
            if (V) V->add_col_multiple(j, t, q);
            if (modular)
                for (std::size_t i = t; i < a.rows(); ++i) reduce_symmetric(a(i, j), modulus);
            if (a(t, j) != 0) clean = false;
        }
        if (!clean) continue;

        if (!modular) {
            bool fixed = false;
            for (std::size_t i = t + 1; i < a.rows() && !fixed; ++i)
                for (std::size_t j = t + 1; j < a.cols(); ++j)
                    if (!divides(p, a(i, j))) {
                        a.add_row_multiple(t, i, 1);
                        if (U) U->add_row_multiple(t, i, 1);
                        fixed = true;
                        break;
                    }
            if (fixed) continue;
        }
        if (a(t, t) < 0) {
            a.negate_row(t);
            if (U) U->negate_row(t);
        }
        ++t;
    }
}

// gcd/lcm sweep turning a list of cyclic orders into a divisibility chain.
void to_chain(std::vector<BigInt>& v) {
    for (std::size_t i = 0; i < v.size(); ++i)
        for (std::size_t j = i + 1; j < v.size(); ++j) {
            BigInt g = gcd(v[i], v[j]);
            BigInt l = lcm(v[i], v[j]);
            v[i] = g;
            v[j] = l;
        }
}

}  // namespace

SNFResult smith_normal_form(const IntegerMatrix& m) {
    SNFResult r;
    r.S = m;
    r.U = IntegerMatrix::identity(m.rows());
    r.V = IntegerMatrix::identity(m.cols());
    diagonalise(r.S, &r.U, &r.V, 0);
    const std::size_t n = std::min(m.rows(), m.cols());
    r.diag.reserve(n);
    for (std::size_t i = 0; i < n; ++i) r.diag.push_back(r.S(i, i));
    return r;
}

std::vector<BigInt> smith_diagonal(const IntegerMatrix& m) {
    const std::size_t n = std::min(m.rows(), m.cols());
    if (m.square() && n > 0) {
        BigInt d = abs(determinant(m));
        if (d != 0) {
            // The column lattice contains d Z^n, so entries may be taken mod d.
            IntegerMatrix a = m;
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t j = 0; j < n; ++j) reduce_symmetric(a(i, j), d);
            diagonalise(a, nullptr, nullptr, d);
            std::vector<BigInt> diag(n);
            for (std::size_t i = 0; i < n; ++i) diag[i] = gcd(a(i, i), d);
            to_chain(diag);
            return diag;
        }
    }
    IntegerMatrix a = m;
    diagonalise(a, nullptr, nullptr, 0);
    std::vector<BigInt> diag(n);
    for (std::size_t i = 0; i < n; ++i) diag[i] = a(i, i);
    return diag;
}

BigInt minors_gcd(const IntegerMatrix& m, std::size_t i) {
    const std::size_t lim = std::min(m.rows(), m.cols());
    if (i == 0 || i > lim) throw DomainError("minor size out of range");
    if (lim > 8) throw GuardError("minors_gcd is limited to matrices with min(rows, cols) <= 8");
    std::vector<std::size_t> rs(i), cs(i);
    BigInt g = 0;
    auto first = [&](std::vector<std::size_t>& v) {
        for (std::size_t k = 0; k < i; ++k) v[k] = k;
    };
    auto next = [&](std::vector<std::size_t>& v, std::size_t n) {
        for (std::size_t k = i; k-- > 0;) {
            if (v[k] < n - i + k) {
                ++v[k];
                for (std::size_t l = k + 1; l < i; ++l) v[l] = v[l - 1] + 1;
                return true;
            }
        }
        return false;
    };
    first(rs);
    do {
        first(cs);
        do {
            g = gcd(g, determinant(m.submatrix(rs, cs)));
        } while (next(cs, m.cols()));
    } while (next(rs, m.rows()));
    return g;
}

namespace {

struct Rref {
    std::vector<std::vector<Rational>> a;
    std::vector<std::size_t> pivots;
};

Rref rref(const IntegerMatrix& m) {
    Rref r;
    r.a.assign(m.rows(), std::vector<Rational>(m.cols()));
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) r.a[i][j] = m(i, j);
    std::size_t row = 0;
    for (std::size_t c = 0; c < m.cols() && row < m.rows(); ++c) {
        std::size_t p = row;
        while (p < m.rows() && r.a[p][c] == 0) ++p;
        if (p == m.rows()) continue;
        std::swap(r.a[row], r.a[p]);
        Rational inv = 1 / r.a[row][c];
        for (auto& x : r.a[row]) x *= inv;
        for (std::size_t i = 0; i < m.rows(); ++i) {
            if (i == row || r.a[i][c] == 0) continue;
            Rational f = r.a[i][c];
            for (std::size_t j = c; j < m.cols(); ++j) r.a[i][j] -= f * r.a[row][j];
        }
        r.pivots.push_back(c);
        ++row;
    }
    return r;
}

}  // namespace

std::vector<RationalVector> rational_null_space(const IntegerMatrix& m) {
    Rref r = rref(m);
    std::vector<bool> is_pivot(m.cols(), false);
    for (auto c : r.pivots) is_pivot[c] = true;
    std::vector<RationalVector> basis;
    for (std::size_t f = 0; f < m.cols(); ++f) {
        if (is_pivot[f]) continue;
        RationalVector v(m.cols());
        v[f] = 1;
        for (std::size_t k = 0; k < r.pivots.size(); ++k) v[r.pivots[k]] = -r.a[k][f];
        // Scale to a primitive integer vector with positive leading entry.
        BigInt den = 1, num = 0;
        for (const auto& x : v) den = lcm(den, x.get_den());
        for (auto& x : v) {
            x *= den;
            num = gcd(num, x.get_num());
        }
        bool flip = false;
        for (const auto& x : v)
            if (x != 0) {
                flip = x < 0;
                break;
            }
        for (auto& x : v) {
            x /= num;
            if (flip) x = -x;
        }
        basis.push_back(std::move(v));
    }
    return basis;
}

std::optional<std::vector<BigInt>> solve_integer(const IntegerMatrix& m, const std::vector<BigInt>& b) {
    if (b.size() != m.rows()) throw DomainError("solve_integer: dimension mismatch");
    SNFResult s = smith_normal_form(m);
    std::vector<BigInt> ub = s.U * b;
    std::vector<BigInt> y(m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i) {
        const BigInt si = i < s.diag.size() ? s.diag[i] : BigInt(0);
        if (si == 0) {
            if (ub[i] != 0) return std::nullopt;
        } else {
            if (!divides(si, ub[i])) return std::nullopt;
            y[i] = exact_div(ub[i], si);
        }
    }
    return s.V * y;
}

RationalVector solve_rational(const IntegerMatrix& m, const std::vector<BigInt>& b) {
    if (!m.square() || b.size() != m.rows()) throw DomainError("solve_rational: dimension mismatch");
    const std::size_t n = m.rows();
    std::vector<std::vector<Rational>> a(n, std::vector<Rational>(n + 1));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) a[i][j] = m(i, j);
        a[i][n] = b[i];
    }
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t p = c;
        while (p < n && a[p][c] == 0) ++p;
        if (p == n) throw DomainError("solve_rational: singular matrix");
        std::swap(a[c], a[p]);
        for (std::size_t i = c + 1; i < n; ++i) {
            if (a[i][c] == 0) continue;
            Rational f = a[i][c] / a[c][c];
            for (std::size_t j = c; j <= n; ++j) a[i][j] -= f * a[c][j];
        }
    }
    RationalVector x(n);
    for (std::size_t i = n; i-- > 0;) {
        Rational s = a[i][n];
        for (std::size_t j = i + 1; j < n; ++j) s -= a[i][j] * x[j];
        x[i] = s / a[i][i];
    }
    return x;
}

BigInt eval_charpoly(const IntegerMatrix& m, const BigInt& t) {
    if (!m.square()) throw DomainError("characteristic polynomial of a non-square matrix");
    IntegerMatrix a(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) a(i, j) = (i == j ? t : BigInt(0)) - m(i, j);
    return determinant(a);
}

}  // namespace chipfire
