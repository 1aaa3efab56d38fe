#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "dhh/errors.hpp"
#include "dhh/kernels.hpp"

namespace dhh::linfp {

using Vec = std::vector<std::uint8_t>;

bool is_prime(std::uint32_t n);
std::uint32_t inv_mod(std::uint32_t a, std::uint32_t p);

// Dense matrix over F_p, p prime <= 251, entries stored as residues in one
// byte, row-major. Eliminations over F_2 run bit-packed (64 columns per word);
// the generic byte path is kept as the reference and both are equivalence-
// tested against each other.
class Matrix {
public:
    Matrix() = default;
    Matrix(std::uint32_t rows, std::uint32_t cols, std::uint32_t p);

    static Matrix identity(std::uint32_t n, std::uint32_t p);
    static Matrix zero(std::uint32_t rows, std::uint32_t cols, std::uint32_t p) {
        return Matrix(rows, cols, p);
    }
    static Matrix from_rows(const std::vector<Vec>& rows, std::uint32_t cols, std::uint32_t p);

    std::uint32_t rows() const { return rows_; }
    std::uint32_t cols() const { return cols_; }
    std::uint32_t p() const { return p_; }

    std::uint8_t at(std::uint32_t r, std::uint32_t c) const { return data_[std::size_t(r) * cols_ + c]; }
    void set(std::uint32_t r, std::uint32_t c, std::uint32_t v) {
        data_[std::size_t(r) * cols_ + c] = static_cast<std::uint8_t>(v % p_);
    }
    std::uint8_t* row(std::uint32_t r) { return data_.data() + std::size_t(r) * cols_; }
    const std::uint8_t* row(std::uint32_t r) const { return data_.data() + std::size_t(r) * cols_; }
    Vec row_vec(std::uint32_t r) const;
    void set_row(std::uint32_t r, const Vec& v);
    Vec col_vec(std::uint32_t c) const;

    bool is_zero() const;
    bool is_identity() const;
    bool operator==(const Matrix& o) const { return rows_ == o.rows_ && cols_ == o.cols_ && p_ == o.p_ && data_ == o.data_; }
    bool operator!=(const Matrix& o) const { return !(*this == o); }

    Matrix operator+(const Matrix& o) const;
    Matrix operator-(const Matrix& o) const;
    Matrix operator*(const Matrix& o) const;
    Matrix scaled(std::uint32_t c) const;
    Matrix transpose() const;
    Matrix kron(const Matrix& o) const;  // row-major Kronecker product
    Matrix pow(std::uint64_t e) const;

    Vec apply(const Vec& x) const;       // this * x (column vector)
    Vec apply_t(const Vec& x) const;     // x^T * this, as a row vector

    Matrix hstack(const Matrix& o) const;
    Matrix vstack(const Matrix& o) const;
    Matrix sub_cols(std::uint32_t from, std::uint32_t count) const;
    Matrix sub_rows(std::uint32_t from, std::uint32_t count) const;
    Matrix select_rows(const std::vector<std::uint32_t>& idx) const;

    std::string to_string() const;

private:
    std::uint32_t rows_ = 0, cols_ = 0, p_ = 2;
    std::vector<std::uint8_t> data_;
};

struct RrefResult {
    Matrix rref;
    std::vector<std::uint32_t> pivots;
    Matrix transform;  // transform * input == rref (only when requested)
    bool has_transform = false;
};

RrefResult rref_generic(const Matrix& m, bool want_transform = false);
RrefResult rref_packed_f2(const Matrix& m, bool want_transform = false);  // p == 2 only
RrefResult rref(const Matrix& m, bool want_transform = false);            // dispatches on p

std::uint32_t rank(const Matrix& m);
Matrix row_space(const Matrix& m);           // RREF basis of the row space, zero rows dropped
Matrix kernel_basis_matrix(const Matrix& m); // rows = RREF basis of {v : m v = 0}
Matrix inverse(const Matrix& m);             // throws SingularMatrix
std::optional<Vec> solve(const Matrix& a, const Vec& b);  // one solution of a x = b

Vec vec_add(const Vec& a, const Vec& b, std::uint32_t p);
Vec vec_sub(const Vec& a, const Vec& b, std::uint32_t p);
Vec vec_scale(const Vec& a, std::uint32_t c, std::uint32_t p);
bool vec_is_zero(const Vec& a);
Vec unit_vec(std::uint32_t n, std::uint32_t i, std::uint32_t p);
Vec outer_flat(const Vec& a, const Vec& b, std::uint32_t p);  // (a ⊗ b) row-major

// Subspace of F_p^n spanned by independent rows held in reduced row-echelon
// form, so equal subspaces compare bit-identically.
struct Subspace {
    std::uint32_t ambient = 0;
    Matrix basis;  // dim() x ambient, RREF

    static Subspace from_rows(const Matrix& rows);
    static Subspace zero(std::uint32_t ambient, std::uint32_t p);
    static Subspace full(std::uint32_t ambient, std::uint32_t p);

    std::uint32_t dim() const { return basis.rows(); }
    bool contains(const Vec& v) const;
    bool contains(const Subspace& other) const;
    bool operator==(const Subspace& o) const { return ambient == o.ambient && basis == o.basis; }
};

std::uint32_t rank_of(const Subspace& s);
Subspace kernel_basis(const Matrix& m);
Subspace image_basis(const Matrix& m);  // column space, returned as row vectors

// Representatives of a complement of `coboundaries` inside `cocycles`.
// The lifts are rows of the cocycle RREF basis, so they are canonical.
struct SubquotientBasis {
    Matrix lifts;       // dim x ambient
    std::uint32_t dim = 0;
};
SubquotientBasis subquotient(const Subspace& cocycles, const Subspace& coboundaries);

// Coordinates with respect to a fixed independent row family K: solves
// x K = w exactly, refusing vectors outside the span. Precomputes the
// elimination once so repeated solves are matrix-vector products.
class SpanSolver {
public:
    SpanSolver() = default;
    explicit SpanSolver(const Matrix& row_basis);

    std::uint32_t rank() const { return rank_; }
    std::uint32_t ambient() const { return n_; }
    std::optional<Vec> coords(const Vec& w) const;
    Vec coords_or_throw(const Vec& w, const char* what) const;
    // Column-wise coordinates of W (n x m): returns rank x m, throws if any
    // column is outside the span.
    Matrix coords_cols(const Matrix& w, const char* what) const;

private:
    std::uint32_t rank_ = 0, n_ = 0;
    bool identity_ = false;
    std::uint32_t p_ = 2;
    Matrix t_;  // n x n with t_ * basis^T = [I; 0]
};

// Incremental row-echelon rank tracker.
class EchelonAccumulator {
public:
    EchelonAccumulator(std::uint32_t ambient, std::uint32_t p) : n_(ambient), p_(p) {}
    bool add_row(Vec v);  // true if the row increased the rank
    std::uint32_t rank() const { return static_cast<std::uint32_t>(rows_.size()); }

private:
    std::uint32_t n_, p_;
    std::vector<Vec> rows_;
    std::vector<std::uint32_t> pivot_;
};

}  // namespace dhh::linfp
