#pragma once

// Dense exact matrices and the integer/rational algorithms the handle
// calculus needs: integer kernels in Hermite style, rational solving, and
// exact signatures by congruence diagonalization.

#include "obcalc/exact.hpp"

#include <cstddef>
#include <vector>

namespace obcalc {

class IntMat {
public:
    IntMat() : rows_(0), cols_(0) {}
    IntMat(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols) {}

    static IntMat identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Int& at(std::size_t r, std::size_t c) { return a_[r * cols_ + c]; }
    const Int& at(std::size_t r, std::size_t c) const { return a_[r * cols_ + c]; }

    std::vector<Int> col(std::size_t c) const;
    IntMat transposed() const;
    IntMat operator*(const IntMat& rhs) const;

    bool operator==(const IntMat& rhs) const = default;

    bool is_zero() const;
    bool is_skew_symmetric() const;

private:
    std::size_t rows_, cols_;
    std::vector<Int> a_;
};

class RatMat {
public:
    RatMat() : rows_(0), cols_(0) {}
    RatMat(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols) {}

    static RatMat identity(std::size_t n);
    static RatMat from_int(const IntMat& m);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Rat& at(std::size_t r, std::size_t c) { return a_[r * cols_ + c]; }
    const Rat& at(std::size_t r, std::size_t c) const { return a_[r * cols_ + c]; }

    RatMat transposed() const;
    RatMat operator*(const RatMat& rhs) const;

    bool operator==(const RatMat& rhs) const = default;

    bool is_symmetric() const;

private:
    std::size_t rows_, cols_;
    std::vector<Rat> a_;
};

// Basis of the full integer kernel {x in Z^k : A x = 0}, returned as the
// columns of a k-by-r matrix. Computed with unimodular column operations,
// so the result is a lattice basis of the kernel and needs no saturation
// step: the integer kernel of an integer matrix is already primitive.
IntMat integer_kernel(const IntMat& a);

// Reduce m to reduced row echelon form in place; returns the pivot columns.
std::vector<std::size_t> rref(RatMat& m);

std::size_t rank(const RatMat& m);

// One rational solution of A x = b, or nullopt when inconsistent. For
// underdetermined systems the free variables are set to zero.
std::optional<std::vector<Rat>> solve(const RatMat& a, const std::vector<Rat>& b);

// Solve A X = B column by column; nullopt if any column is inconsistent.
std::optional<RatMat> solve_matrix(const RatMat& a, const RatMat& b);

// Whether v lies in the lattice spanned by the columns of basis.
bool lattice_contains(const IntMat& basis, const std::vector<Int>& v);

// Signature (#positive minus #negative eigenvalues) of a symmetric rational
// matrix, computed exactly by symmetric congruence diagonalization.
// Zero eigenvalues contribute nothing. Throws DimensionError if not symmetric.
int signature(const RatMat& sym);

} // namespace obcalc
