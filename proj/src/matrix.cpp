#include "obcalc/matrix.hpp"

#include "obcalc/errors.hpp"

#include <utility>

namespace obcalc {

IntMat IntMat::identity(std::size_t n) {
    IntMat m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

std::vector<Int> IntMat::col(std::size_t c) const {
    std::vector<Int> v(rows_);
    for (std::size_t r = 0; r < rows_; ++r) v[r] = at(r, c);
    return v;
}

IntMat IntMat::transposed() const {
    IntMat t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c) t.at(c, r) = at(r, c);
    return t;
}

IntMat IntMat::operator*(const IntMat& rhs) const {
    if (cols_ != rhs.rows_) throw DimensionError("integer matrix product: shape mismatch");
    IntMat out(rows_, rhs.cols_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t k = 0; k < cols_; ++k) {
            const Int& x = at(r, k);
            if (x == 0) continue;
            for (std::size_t c = 0; c < rhs.cols_; ++c) out.at(r, c) += x * rhs.at(k, c);
        }
    return out;
}

bool IntMat::is_zero() const {
    for (const Int& x : a_)
        if (x != 0) return false;
    return true;
}

bool IntMat::is_skew_symmetric() const {
    if (rows_ != cols_) return false;
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c <= r; ++c)
            if (at(r, c) != -at(c, r)) return false;
    return true;
}

RatMat RatMat::identity(std::size_t n) {
    RatMat m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

RatMat RatMat::from_int(const IntMat& m) {
    RatMat out(m.rows(), m.cols());
    for (std::size_t r = 0; r < m.rows(); ++r)
        for (std::size_t c = 0; c < m.cols(); ++c) out.at(r, c) = Rat(m.at(r, c));
    return out;
}

RatMat RatMat::transposed() const {
    RatMat t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c) t.at(c, r) = at(r, c);
    return t;
}

RatMat RatMat::operator*(const RatMat& rhs) const {
    if (cols_ != rhs.rows_) throw DimensionError("rational matrix product: shape mismatch");
    RatMat out(rows_, rhs.cols_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t k = 0; k < cols_; ++k) {
            const Rat& x = at(r, k);
            if (x == 0) continue;
            for (std::size_t c = 0; c < rhs.cols_; ++c) out.at(r, c) += x * rhs.at(k, c);
        }
    return out;
}

bool RatMat::is_symmetric() const {
    if (rows_ != cols_) return false;
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < r; ++c)
            if (at(r, c) != at(c, r)) return false;
    return true;
}

namespace {

// Unimodular update of columns c and j of both work and track so that
// work(row, c) becomes gcd(work(row,c), work(row,j)) and work(row, j)
// becomes zero. The 2x2 column-operation matrix has determinant one.
void gcd_columns(IntMat& work, IntMat& track, std::size_t row, std::size_t c, std::size_t j) {
    const Int x = work.at(row, c);
    const Int y = work.at(row, j);
    if (y == 0) return;
    Int g, s, t;
    mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), x.get_mpz_t(), y.get_mpz_t());
    const Int p = x / g;
    const Int q = y / g;
    auto apply = [&](IntMat& m) {
        for (std::size_t r = 0; r < m.rows(); ++r) {
            Int mc = m.at(r, c);
            Int mj = m.at(r, j);
            m.at(r, c) = s * mc + t * mj;
            m.at(r, j) = p * mj - q * mc;
        }
    };
    apply(work);
    apply(track);
}

void negate_column(IntMat& m, std::size_t c) {
    for (std::size_t r = 0; r < m.rows(); ++r) m.at(r, c) = -m.at(r, c);
}

void swap_columns(IntMat& m, std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t r = 0; r < m.rows(); ++r) std::swap(m.at(r, a), m.at(r, b));
}

} // namespace

IntMat integer_kernel(const IntMat& a) {
    const std::size_t n = a.rows();
    const std::size_t k = a.cols();
    IntMat work = a;
    IntMat u = IntMat::identity(k);

    std::size_t pivot = 0;
    for (std::size_t row = 0; row < n && pivot < k; ++row) {
        std::size_t j0 = pivot;
        while (j0 < k && work.at(row, j0) == 0) ++j0;
        if (j0 == k) continue;
        swap_columns(work, pivot, j0);
        swap_columns(u, pivot, j0);
        for (std::size_t j = pivot + 1; j < k; ++j) gcd_columns(work, u, row, pivot, j);
        if (work.at(row, pivot) < 0) {
            negate_column(work, pivot);
            negate_column(u, pivot);
        }
        ++pivot;
    }

    // Columns past the pivot count were made zero in every processed row,
    // and untouched rows of A are zero linear combinations of them as well,
    // because the operations were applied to whole columns.
    IntMat kernel(k, k - pivot);
    for (std::size_t c = pivot; c < k; ++c)
        for (std::size_t r = 0; r < k; ++r) kernel.at(r, c - pivot) = u.at(r, c);
    return kernel;
}

std::vector<std::size_t> rref(RatMat& m) {
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
        std::size_t p = row;
        while (p < m.rows() && m.at(p, col) == 0) ++p;
        if (p == m.rows()) continue;
        if (p != row)
            for (std::size_t c = 0; c < m.cols(); ++c) std::swap(m.at(p, c), m.at(row, c));
        const Rat inv = Rat(1) / m.at(row, col);
        for (std::size_t c = col; c < m.cols(); ++c) m.at(row, c) *= inv;
        for (std::size_t r = 0; r < m.rows(); ++r) {
            if (r == row || m.at(r, col) == 0) continue;
            const Rat f = m.at(r, col);
            for (std::size_t c = col; c < m.cols(); ++c) m.at(r, c) -= f * m.at(row, c);
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

std::size_t rank(const RatMat& m) {
    RatMat copy = m;
    return rref(copy).size();
}

std::optional<std::vector<Rat>> solve(const RatMat& a, const std::vector<Rat>& b) {
    if (b.size() != a.rows()) throw DimensionError("solve: rhs length mismatch");
    RatMat aug(a.rows(), a.cols() + 1);
    for (std::size_t r = 0; r < a.rows(); ++r) {
        for (std::size_t c = 0; c < a.cols(); ++c) aug.at(r, c) = a.at(r, c);
        aug.at(r, a.cols()) = b[r];
    }
    const auto pivots = rref(aug);
    if (!pivots.empty() && pivots.back() == a.cols()) return std::nullopt;
    std::vector<Rat> x(a.cols(), Rat(0));
    for (std::size_t i = 0; i < pivots.size(); ++i) x[pivots[i]] = aug.at(i, a.cols());
    return x;
}

std::optional<RatMat> solve_matrix(const RatMat& a, const RatMat& b) {
    if (a.rows() != b.rows()) throw DimensionError("solve_matrix: row count mismatch");
    RatMat aug(a.rows(), a.cols() + b.cols());
    for (std::size_t r = 0; r < a.rows(); ++r) {
        for (std::size_t c = 0; c < a.cols(); ++c) aug.at(r, c) = a.at(r, c);
        for (std::size_t c = 0; c < b.cols(); ++c) aug.at(r, a.cols() + c) = b.at(r, c);
    }
    const auto pivots = rref(aug);
    for (std::size_t p : pivots)
        if (p >= a.cols()) return std::nullopt;
    RatMat x(a.cols(), b.cols());
    for (std::size_t i = 0; i < pivots.size(); ++i)
        for (std::size_t c = 0; c < b.cols(); ++c) x.at(pivots[i], c) = aug.at(i, a.cols() + c);
    return x;
}

bool lattice_contains(const IntMat& basis, const std::vector<Int>& v) {
    if (v.size() != basis.rows()) throw DimensionError("lattice_contains: vector length mismatch");
    std::vector<Rat> rhs(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) rhs[i] = Rat(v[i]);
    const auto x = solve(RatMat::from_int(basis), rhs);
    if (!x) return false;
    // A lattice basis is linearly independent, so the solution is unique and
    // membership is exactly integrality of the coefficients.
    for (const Rat& c : *x)
        if (!is_integer(c)) return false;
    return true;
}

int signature(const RatMat& sym) {
    if (!sym.is_symmetric()) throw DimensionError("signature: matrix is not symmetric");
    RatMat q = sym;
    const std::size_t n = q.rows();
    int pos = 0, neg = 0;
    for (std::size_t i = 0; i < n; ++i) {
        if (q.at(i, i) == 0) {
            std::size_t d = i + 1;
            while (d < n && q.at(d, d) == 0) ++d;
            if (d < n) {
                // congruence by the transposition (i d)
                for (std::size_t c = 0; c < n; ++c) std::swap(q.at(i, c), q.at(d, c));
                for (std::size_t r = 0; r < n; ++r) std::swap(q.at(r, i), q.at(r, d));
            } else {
                std::size_t j = i + 1;
                while (j < n && q.at(i, j) == 0) ++j;
                if (j == n) continue; // zero row and column: null direction
                // whole active diagonal is zero, so adding row/col j to
                // row/col i puts 2*q(i,j) != 0 on the diagonal
                for (std::size_t c = 0; c < n; ++c) q.at(i, c) += q.at(j, c);
                for (std::size_t r = 0; r < n; ++r) q.at(r, i) += q.at(r, j);
            }
        }
        const Rat d = q.at(i, i);
        if (d > 0)
            ++pos;
        else
            ++neg;
        for (std::size_t r = i + 1; r < n; ++r) {
            if (q.at(r, i) == 0) continue;
            const Rat f = q.at(r, i) / d;
            for (std::size_t c = i; c < n; ++c) q.at(r, c) -= f * q.at(i, c);
            for (std::size_t c = i; c < n; ++c) q.at(c, r) = q.at(r, c);
        }
    }
    return pos - neg;
}

} // namespace obcalc
