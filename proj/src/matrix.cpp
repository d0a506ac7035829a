#include "chipfire/matrix.hpp"

#include <sstream>
#include <stdexcept>

#include "chipfire/errors.hpp"

namespace chipfire {

std::int64_t to_int64(const BigInt& v) {
    if (!v.fits_slong_p()) throw std::overflow_error("integer does not fit in 64 bits: " + v.get_str());
    return static_cast<std::int64_t>(v.get_si());
}

Rational frac(const Rational& q) {
    BigInt fl;
    mpz_fdiv_q(fl.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
    Rational r = q - Rational(fl);
    r.canonicalize();
    return r;
}

IntegerMatrix::IntegerMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols) {}

IntegerMatrix::IntegerMatrix(std::initializer_list<std::initializer_list<std::int64_t>> rows) {
    rows_ = rows.size();
    cols_ = rows_ ? rows.begin()->size() : 0;
    data_.reserve(rows_ * cols_);
    for (const auto& row : rows) {
        if (row.size() != cols_) throw std::invalid_argument("ragged matrix literal");
        for (auto v : row) data_.push_back(big(v));
    }
}

IntegerMatrix IntegerMatrix::identity(std::size_t n) {
    IntegerMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

IntegerMatrix IntegerMatrix::diagonal(const std::vector<BigInt>& diag) {
    IntegerMatrix m(diag.size(), diag.size());
    for (std::size_t i = 0; i < diag.size(); ++i) m(i, i) = diag[i];
    return m;
}

IntegerMatrix IntegerMatrix::transpose() const {
    IntegerMatrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
}

IntegerMatrix IntegerMatrix::minor_matrix(std::size_t row, std::size_t col) const {
    if (row >= rows_ || col >= cols_) throw std::out_of_range("minor_matrix: index out of range");
    IntegerMatrix m(rows_ - 1, cols_ - 1);
    for (std::size_t i = 0, ii = 0; i < rows_; ++i) {
        if (i == row) continue;
        for (std::size_t j = 0, jj = 0; j < cols_; ++j) {
            if (j == col) continue;
            m(ii, jj++) = (*this)(i, j);
        }
        ++ii;
    }
    return m;
}

IntegerMatrix IntegerMatrix::submatrix(const std::vector<std::size_t>& rows,
                                       const std::vector<std::size_t>& cols) const {
    IntegerMatrix m(rows.size(), cols.size());
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < cols.size(); ++j) m(i, j) = (*this)(rows[i], cols[j]);
    return m;
}

std::vector<BigInt> IntegerMatrix::operator*(const std::vector<BigInt>& x) const {
    if (x.size() != cols_) throw std::invalid_argument("matrix-vector dimension mismatch");
    std::vector<BigInt> y(rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) {
            const BigInt& a = (*this)(i, j);
            if (a != 0) y[i] += a * x[j];
        }
    return y;
}

void IntegerMatrix::swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t j = 0; j < cols_; ++j) swap((*this)(a, j), (*this)(b, j));
}

void IntegerMatrix::swap_cols(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t i = 0; i < rows_; ++i) swap((*this)(i, a), (*this)(i, b));
}

void IntegerMatrix::add_row_multiple(std::size_t dst, std::size_t src, const BigInt& k) {
    if (k == 0) return;
    for (std::size_t j = 0; j < cols_; ++j) {
        const BigInt& s = (*this)(src, j);
        if (s != 0) (*this)(dst, j) += k * s;
    }
}

void IntegerMatrix::add_col_multiple(std::size_t dst, std::size_t src, const BigInt& k) {
    if (k == 0) return;
    for (std::size_t i = 0; i < rows_; ++i) {
        const BigInt& s = (*this)(i, src);
        if (s != 0) (*this)(i, dst) += k * s;
    }
}

void IntegerMatrix::negate_row(std::size_t r) {
    for (std::size_t j = 0; j < cols_; ++j) (*this)(r, j) = -(*this)(r, j);
}

void IntegerMatrix::negate_col(std::size_t c) {
    for (std::size_t i = 0; i < rows_; ++i) (*this)(i, c) = -(*this)(i, c);
}

IntegerMatrix operator*(const IntegerMatrix& a, const IntegerMatrix& b) {
    if (a.cols() != b.rows()) throw std::invalid_argument("matrix product dimension mismatch");
    IntegerMatrix c(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k) {
            const BigInt& x = a(i, k);
            if (x == 0) continue;
            for (std::size_t j = 0; j < b.cols(); ++j) c(i, j) += x * b(k, j);
        }
    return c;
}

IntegerMatrix operator-(const IntegerMatrix& a, const IntegerMatrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) throw std::invalid_argument("dimension mismatch");
    IntegerMatrix c(a.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) c(i, j) = a(i, j) - b(i, j);
    return c;
}

IntegerMatrix operator+(const IntegerMatrix& a, const IntegerMatrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) throw std::invalid_argument("dimension mismatch");
    IntegerMatrix c(a.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) c(i, j) = a(i, j) + b(i, j);
    return c;
}

std::vector<BigInt> to_big(const std::vector<std::int64_t>& v) {
    std::vector<BigInt> out;
    out.reserve(v.size());
    for (auto x : v) out.push_back(big(x));
    return out;
}

std::string write_matrix(const IntegerMatrix& m) {
    std::ostringstream os;
    os << m.rows() << ' ' << m.cols() << '\n';
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j) {
            if (j) os << ' ';
            os << m(i, j).get_str();
        }
        os << '\n';
    }
    return os.str();
}

namespace {

BigInt parse_big(const std::string& tok, int line) {
    BigInt v;
    std::string t = tok;
    if (!t.empty() && t[0] == '+') t.erase(0, 1);
    if (t.empty() || v.set_str(t, 10) != 0) throw ParseError("not an integer: '" + tok + "'", line);
    return v;
}

}  // namespace

IntegerMatrix parse_matrix(std::string_view text) {
    std::istringstream in{std::string(text)};
    std::string line;
    int lineno = 0;
    auto next_line = [&](std::vector<std::string>& toks) {
        while (std::getline(in, line)) {
            ++lineno;
            std::istringstream ls(line);
            toks.clear();
            for (std::string t; ls >> t;) toks.push_back(t);
            if (!toks.empty()) return true;
        }
        return false;
    };
    std::vector<std::string> toks;
    if (!next_line(toks)) throw ParseError("empty matrix text");
    if (toks.size() != 2) throw ParseError("expected 'rows cols' header", lineno);
    long rows = 0, cols = 0;
    try {
        rows = std::stol(toks[0]);
        cols = std::stol(toks[1]);
    } catch (const std::exception&) {
        throw ParseError("bad matrix header", lineno);
    }
    if (rows < 0 || cols < 0) throw ParseError("negative matrix dimension", lineno);
    IntegerMatrix m(static_cast<std::size_t>(rows), static_cast<std::size_t>(cols));
    for (long i = 0; i < rows; ++i) {
        if (!next_line(toks)) throw ParseError("missing matrix row " + std::to_string(i + 1), lineno);
        if (static_cast<long>(toks.size()) != cols)
            throw ParseError("expected " + std::to_string(cols) + " entries", lineno);
        for (long j = 0; j < cols; ++j)
            m(static_cast<std::size_t>(i), static_cast<std::size_t>(j)) = parse_big(toks[j], lineno);
    }
    if (next_line(toks)) throw ParseError("trailing data after matrix", lineno);
    return m;
}

}  // namespace chipfire
