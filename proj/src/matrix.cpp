#include "dhh/matrix.hpp"

#include <algorithm>
#include <sstream>

namespace dhh::linfp {

bool is_prime(std::uint32_t n) {
    if (n < 2) return false;
    for (std::uint32_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

std::uint32_t inv_mod(std::uint32_t a, std::uint32_t p) {
    // Fermat; p is prime and a != 0 mod p.
    a %= p;
    if (a == 0) throw SingularMatrix("inverse of 0 mod " + std::to_string(p));
    std::uint64_t r = 1, b = a, e = p - 2;
    while (e) {
        if (e & 1) r = r * b % p;
        b = b * b % p;
        e >>= 1;
    }
    return static_cast<std::uint32_t>(r);
}

Matrix::Matrix(std::uint32_t rows, std::uint32_t cols, std::uint32_t p)
    : rows_(rows), cols_(cols), p_(p), data_(std::size_t(rows) * cols, 0) {
    if (!is_prime(p) || p > 251) throw AxiomViolation("modulus " + std::to_string(p) + " is not a prime <= 251");
}

Matrix Matrix::identity(std::uint32_t n, std::uint32_t p) {
    Matrix m(n, n, p);
    for (std::uint32_t i = 0; i < n; ++i) m.set(i, i, 1);
    return m;
}

Matrix Matrix::from_rows(const std::vector<Vec>& rows, std::uint32_t cols, std::uint32_t p) {
    Matrix m(static_cast<std::uint32_t>(rows.size()), cols, p);
    for (std::uint32_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != cols) throw ShapeMismatch("from_rows: row length");
        std::copy(rows[i].begin(), rows[i].end(), m.row(i));
    }
    return m;
}

Vec Matrix::row_vec(std::uint32_t r) const { return Vec(row(r), row(r) + cols_); }

void Matrix::set_row(std::uint32_t r, const Vec& v) {
    if (v.size() != cols_) throw ShapeMismatch("set_row");
    std::copy(v.begin(), v.end(), row(r));
}

Vec Matrix::col_vec(std::uint32_t c) const {
    Vec v(rows_);
    for (std::uint32_t r = 0; r < rows_; ++r) v[r] = at(r, c);
    return v;
}

bool Matrix::is_zero() const {
    return std::all_of(data_.begin(), data_.end(), [](std::uint8_t x) { return x == 0; });
}

bool Matrix::is_identity() const {
    if (rows_ != cols_) return false;
    for (std::uint32_t r = 0; r < rows_; ++r)
        for (std::uint32_t c = 0; c < cols_; ++c)
            if (at(r, c) != (r == c ? 1 : 0)) return false;
    return true;
}

Matrix Matrix::operator+(const Matrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_ || p_ != o.p_) throw ShapeMismatch("matrix add");
    Matrix m(rows_, cols_, p_);
    for (std::size_t i = 0; i < data_.size(); ++i)
        m.data_[i] = static_cast<std::uint8_t>((data_[i] + o.data_[i]) % p_);
    return m;
}

Matrix Matrix::operator-(const Matrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_ || p_ != o.p_) throw ShapeMismatch("matrix sub");
    Matrix m(rows_, cols_, p_);
    for (std::size_t i = 0; i < data_.size(); ++i)
        m.data_[i] = static_cast<std::uint8_t>((data_[i] + p_ - o.data_[i]) % p_);
    return m;
}

Matrix Matrix::scaled(std::uint32_t c) const {
    Matrix m = *this;
    c %= p_;
    if (c == 1) return m;
    const Kernels& k = active_kernels();
    if (c == 0) return Matrix(rows_, cols_, p_);
    k.scale_row(m.data_.data(), c, m.data_.size(), p_);
    return m;
}

namespace {

// Packed F_2 rows: 64 columns per word.
struct Packed {
    std::uint32_t rows = 0, cols = 0, words = 0;
    std::vector<std::uint64_t> w;

    Packed(std::uint32_t r, std::uint32_t c)
        : rows(r), cols(c), words((c + 63) / 64), w(std::size_t(r) * words, 0) {}

    static Packed pack(const Matrix& m) {
        Packed pk(m.rows(), m.cols());
        for (std::uint32_t r = 0; r < m.rows(); ++r) {
            const std::uint8_t* src = m.row(r);
            std::uint64_t* dst = pk.row(r);
            for (std::uint32_t c = 0; c < m.cols(); ++c)
                if (src[c]) dst[c >> 6] |= std::uint64_t{1} << (c & 63);
        }
        return pk;
    }

    Matrix unpack() const {
        Matrix m(rows, cols, 2);
        for (std::uint32_t r = 0; r < rows; ++r) {
            const std::uint64_t* src = row(r);
            for (std::uint32_t c = 0; c < cols; ++c)
                if (src[c >> 6] >> (c & 63) & 1) m.set(r, c, 1);
        }
        return m;
    }

    std::uint64_t* row(std::uint32_t r) { return w.data() + std::size_t(r) * words; }
    const std::uint64_t* row(std::uint32_t r) const { return w.data() + std::size_t(r) * words; }
    bool get(std::uint32_t r, std::uint32_t c) const { return row(r)[c >> 6] >> (c & 63) & 1; }
    void swap_rows(std::uint32_t a, std::uint32_t b) {
        if (a != b) std::swap_ranges(row(a), row(a) + words, row(b));
    }
};

Matrix mul_f2(const Matrix& a, const Matrix& b) {
    Packed pb = Packed::pack(b);
    Packed pc(a.rows(), b.cols());
    const Kernels& k = active_kernels();
    for (std::uint32_t i = 0; i < a.rows(); ++i) {
        const std::uint8_t* arow = a.row(i);
        std::uint64_t* crow = pc.row(i);
        for (std::uint32_t j = 0; j < a.cols(); ++j)
            if (arow[j]) k.xor_rows(crow, pb.row(j), pb.words);
    }
    return pc.unpack();
}

}  // namespace

Matrix Matrix::operator*(const Matrix& o) const {
    if (cols_ != o.rows_ || p_ != o.p_) throw ShapeMismatch("matrix mul " + std::to_string(cols_) + " vs " + std::to_string(o.rows_));
    if (std::size_t(rows_) * o.cols_ > 65536) {
        if (o.is_identity()) return *this;
        if (is_identity()) return o;
    }
    if (p_ == 2 && std::size_t(rows_) * cols_ > 4096) return mul_f2(*this, o);
    Matrix m(rows_, o.cols_, p_);
    const Kernels& k = active_kernels();
    for (std::uint32_t i = 0; i < rows_; ++i) {
        std::uint8_t* dst = m.row(i);
        const std::uint8_t* arow = row(i);
        for (std::uint32_t j = 0; j < cols_; ++j)
            if (arow[j]) k.axpy_rows(dst, o.row(j), arow[j], o.cols_, p_);
    }
    return m;
}

Matrix Matrix::transpose() const {
    Matrix m(cols_, rows_, p_);
    for (std::uint32_t r = 0; r < rows_; ++r)
        for (std::uint32_t c = 0; c < cols_; ++c) m.set(c, r, at(r, c));
    return m;
}

Matrix Matrix::kron(const Matrix& o) const {
    if (p_ != o.p_) throw ShapeMismatch("kron modulus");
    Matrix m(rows_ * o.rows_, cols_ * o.cols_, p_);
    for (std::uint32_t r = 0; r < rows_; ++r)
        for (std::uint32_t c = 0; c < cols_; ++c) {
            std::uint32_t v = at(r, c);
            if (!v) continue;
            for (std::uint32_t r2 = 0; r2 < o.rows_; ++r2) {
                std::uint8_t* dst = m.row(r * o.rows_ + r2) + std::size_t(c) * o.cols_;
                const std::uint8_t* src = o.row(r2);
                for (std::uint32_t c2 = 0; c2 < o.cols_; ++c2)
                    dst[c2] = static_cast<std::uint8_t>(v * src[c2] % p_);
            }
        }
    return m;
}

Matrix Matrix::pow(std::uint64_t e) const {
    if (rows_ != cols_) throw ShapeMismatch("pow of non-square");
    Matrix r = identity(rows_, p_), b = *this;
    while (e) {
        if (e & 1) r = r * b;
        b = b * b;
        e >>= 1;
    }
    return r;
}

Vec Matrix::apply(const Vec& x) const {
    if (x.size() != cols_) throw ShapeMismatch("apply");
    Vec y(rows_);
    for (std::uint32_t r = 0; r < rows_; ++r) {
        const std::uint8_t* a = row(r);
        std::uint64_t acc = 0;
        for (std::uint32_t c = 0; c < cols_; ++c) acc += std::uint64_t(a[c]) * x[c];
        y[r] = static_cast<std::uint8_t>(acc % p_);
    }
    return y;
}

Vec Matrix::apply_t(const Vec& x) const {
    if (x.size() != rows_) throw ShapeMismatch("apply_t");
    Vec y(cols_, 0);
    const Kernels& k = active_kernels();
    for (std::uint32_t r = 0; r < rows_; ++r)
        if (x[r]) k.axpy_rows(y.data(), row(r), x[r], cols_, p_);
    return y;
}

Matrix Matrix::hstack(const Matrix& o) const {
    if (rows_ != o.rows_ || p_ != o.p_) throw ShapeMismatch("hstack");
    Matrix m(rows_, cols_ + o.cols_, p_);
    for (std::uint32_t r = 0; r < rows_; ++r) {
        std::copy(row(r), row(r) + cols_, m.row(r));
        std::copy(o.row(r), o.row(r) + o.cols_, m.row(r) + cols_);
    }
    return m;
}

Matrix Matrix::vstack(const Matrix& o) const {
    if (cols_ != o.cols_ || p_ != o.p_) throw ShapeMismatch("vstack");
    Matrix m(rows_ + o.rows_, cols_, p_);
    for (std::uint32_t r = 0; r < rows_; ++r) std::copy(row(r), row(r) + cols_, m.row(r));
    for (std::uint32_t r = 0; r < o.rows_; ++r) std::copy(o.row(r), o.row(r) + cols_, m.row(rows_ + r));
    return m;
}

Matrix Matrix::sub_cols(std::uint32_t from, std::uint32_t count) const {
    Matrix m(rows_, count, p_);
    for (std::uint32_t r = 0; r < rows_; ++r) std::copy(row(r) + from, row(r) + from + count, m.row(r));
    return m;
}

Matrix Matrix::sub_rows(std::uint32_t from, std::uint32_t count) const {
    Matrix m(count, cols_, p_);
    for (std::uint32_t r = 0; r < count; ++r) std::copy(row(from + r), row(from + r) + cols_, m.row(r));
    return m;
}

Matrix Matrix::select_rows(const std::vector<std::uint32_t>& idx) const {
    Matrix m(static_cast<std::uint32_t>(idx.size()), cols_, p_);
    for (std::uint32_t r = 0; r < idx.size(); ++r) std::copy(row(idx[r]), row(idx[r]) + cols_, m.row(r));
    return m;
}

std::string Matrix::to_string() const {
    std::ostringstream os;
    for (std::uint32_t r = 0; r < rows_; ++r) {
        os << (r ? "\n[" : "[");
        for (std::uint32_t c = 0; c < cols_; ++c) os << (c ? " " : "") << int(at(r, c));
        os << "]";
    }
    return os.str();
}

RrefResult rref_generic(const Matrix& m, bool want_transform) {
    RrefResult res;
    res.rref = m;
    res.has_transform = want_transform;
    Matrix& a = res.rref;
    Matrix t = want_transform ? Matrix::identity(m.rows(), m.p()) : Matrix();
    const Kernels& k = active_kernels();
    const std::uint32_t p = m.p();
    std::uint32_t r = 0;
    for (std::uint32_t c = 0; c < m.cols() && r < m.rows(); ++c) {
        std::uint32_t piv = r;
        while (piv < m.rows() && a.at(piv, c) == 0) ++piv;
        if (piv == m.rows()) continue;
        if (piv != r) {
            std::swap_ranges(a.row(piv), a.row(piv) + a.cols(), a.row(r));
            if (want_transform) std::swap_ranges(t.row(piv), t.row(piv) + t.cols(), t.row(r));
        }
        std::uint32_t inv = inv_mod(a.at(r, c), p);
        if (inv != 1) {
            k.scale_row(a.row(r), inv, a.cols(), p);
            if (want_transform) k.scale_row(t.row(r), inv, t.cols(), p);
        }
        for (std::uint32_t r2 = 0; r2 < m.rows(); ++r2) {
            if (r2 == r) continue;
            std::uint32_t v = a.at(r2, c);
            if (!v) continue;
            k.axpy_rows(a.row(r2), a.row(r), p - v, a.cols(), p);
            if (want_transform) k.axpy_rows(t.row(r2), t.row(r), p - v, t.cols(), p);
        }
        res.pivots.push_back(c);
        ++r;
    }
    res.transform = std::move(t);
    return res;
}

RrefResult rref_packed_f2(const Matrix& m, bool want_transform) {
    if (m.p() != 2) throw ShapeMismatch("rref_packed_f2 requires p == 2");
    Packed a = Packed::pack(m);
    Packed t(want_transform ? m.rows() : 0, want_transform ? m.rows() : 1);
    if (want_transform)
        for (std::uint32_t i = 0; i < m.rows(); ++i) t.row(i)[i >> 6] |= std::uint64_t{1} << (i & 63);
    const Kernels& k = active_kernels();
    RrefResult res;
    res.has_transform = want_transform;
    std::uint32_t r = 0;
    for (std::uint32_t c = 0; c < m.cols() && r < m.rows(); ++c) {
        std::uint32_t piv = r;
        while (piv < m.rows() && !a.get(piv, c)) ++piv;
        if (piv == m.rows()) continue;
        a.swap_rows(piv, r);
        if (want_transform) t.swap_rows(piv, r);
        for (std::uint32_t r2 = 0; r2 < m.rows(); ++r2) {
            if (r2 != r && a.get(r2, c)) {
                k.xor_rows(a.row(r2), a.row(r), a.words);
                if (want_transform) k.xor_rows(t.row(r2), t.row(r), t.words);
            }
        }
        res.pivots.push_back(c);
        ++r;
    }
    res.rref = a.unpack();
    if (want_transform) res.transform = t.unpack();
    return res;
}

RrefResult rref(const Matrix& m, bool want_transform) {
    if (m.p() == 2) return rref_packed_f2(m, want_transform);
    return rref_generic(m, want_transform);
}

std::uint32_t rank(const Matrix& m) { return static_cast<std::uint32_t>(rref(m).pivots.size()); }

Matrix row_space(const Matrix& m) {
    RrefResult r = rref(m);
    return r.rref.sub_rows(0, static_cast<std::uint32_t>(r.pivots.size()));
}

Matrix kernel_basis_matrix(const Matrix& m) {
    RrefResult r = rref(m);
    const std::uint32_t p = m.p();
    std::vector<bool> is_pivot(m.cols(), false);
    for (std::uint32_t c : r.pivots) is_pivot[c] = true;
    std::vector<Vec> basis;
    for (std::uint32_t f = 0; f < m.cols(); ++f) {
        if (is_pivot[f]) continue;
        Vec v(m.cols(), 0);
        v[f] = 1;
        for (std::uint32_t i = 0; i < r.pivots.size(); ++i) {
            std::uint32_t e = r.rref.at(i, f);
            if (e) v[r.pivots[i]] = static_cast<std::uint8_t>(p - e);
        }
        basis.push_back(std::move(v));
    }
    return row_space(Matrix::from_rows(basis, m.cols(), p));
}

Matrix inverse(const Matrix& m) {
    if (m.rows() != m.cols()) throw ShapeMismatch("inverse of non-square");
    RrefResult r = rref(m, true);
    if (r.pivots.size() != m.rows()) throw SingularMatrix("matrix of rank " + std::to_string(r.pivots.size()));
    return r.transform;
}

std::optional<Vec> solve(const Matrix& a, const Vec& b) {
    if (b.size() != a.rows()) throw ShapeMismatch("solve");
    Matrix aug = a.hstack(Matrix::from_rows({b}, a.rows(), a.p()).transpose());
    RrefResult r = rref(aug);
    Vec x(a.cols(), 0);
    for (std::uint32_t i = 0; i < r.pivots.size(); ++i) {
        if (r.pivots[i] == a.cols()) return std::nullopt;  // pivot in the augmented column
        x[r.pivots[i]] = r.rref.at(i, a.cols());
    }
    return x;
}

Vec vec_add(const Vec& a, const Vec& b, std::uint32_t p) {
    Vec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = static_cast<std::uint8_t>((a[i] + b[i]) % p);
    return r;
}

Vec vec_sub(const Vec& a, const Vec& b, std::uint32_t p) {
    Vec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = static_cast<std::uint8_t>((a[i] + p - b[i]) % p);
    return r;
}

Vec vec_scale(const Vec& a, std::uint32_t c, std::uint32_t p) {
    Vec r(a.size());
    c %= p;
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = static_cast<std::uint8_t>(a[i] * c % p);
    return r;
}

bool vec_is_zero(const Vec& a) {
    return std::all_of(a.begin(), a.end(), [](std::uint8_t x) { return x == 0; });
}

Vec unit_vec(std::uint32_t n, std::uint32_t i, std::uint32_t p) {
    (void)p;
    Vec v(n, 0);
    v[i] = 1;
    return v;
}

Vec outer_flat(const Vec& a, const Vec& b, std::uint32_t p) {
    Vec r(a.size() * b.size(), 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (!a[i]) continue;
        for (std::size_t j = 0; j < b.size(); ++j)
            r[i * b.size() + j] = static_cast<std::uint8_t>(a[i] * b[j] % p);
    }
    return r;
}

Subspace Subspace::from_rows(const Matrix& rows) {
    Subspace s;
    s.ambient = rows.cols();
    s.basis = row_space(rows);
    return s;
}

Subspace Subspace::zero(std::uint32_t ambient, std::uint32_t p) {
    Subspace s;
    s.ambient = ambient;
    s.basis = Matrix(0, ambient, p);
    return s;
}

Subspace Subspace::full(std::uint32_t ambient, std::uint32_t p) {
    Subspace s;
    s.ambient = ambient;
    s.basis = Matrix::identity(ambient, p);
    return s;
}

bool Subspace::contains(const Vec& v) const {
    // Reduce v against the RREF basis; v is in the span iff the residue is 0.
    Vec w = v;
    const std::uint32_t p = basis.p();
    for (std::uint32_t i = 0; i < basis.rows(); ++i) {
        std::uint32_t piv = 0;
        while (piv < ambient && basis.at(i, piv) == 0) ++piv;
        if (piv == ambient) continue;
        std::uint32_t c = w[piv];
        if (c) {
            const Kernels& k = active_kernels();
            k.axpy_rows(w.data(), basis.row(i), p - c, ambient, p);
        }
    }
    return vec_is_zero(w);
}

bool Subspace::contains(const Subspace& other) const {
    for (std::uint32_t i = 0; i < other.basis.rows(); ++i)
        if (!contains(other.basis.row_vec(i))) return false;
    return true;
}

std::uint32_t rank_of(const Subspace& s) { return s.dim(); }

Subspace kernel_basis(const Matrix& m) {
    Subspace s;
    s.ambient = m.cols();
    s.basis = kernel_basis_matrix(m);
    return s;
}

Subspace image_basis(const Matrix& m) {
    Subspace s;
    s.ambient = m.rows();
    s.basis = row_space(m.transpose());
    return s;
}

SubquotientBasis subquotient(const Subspace& cocycles, const Subspace& coboundaries) {
    if (cocycles.ambient != coboundaries.ambient)
        throw ShapeMismatch("subquotient ambient dims");
    if (!cocycles.contains(coboundaries))
        throw ContainmentViolation("coboundaries not contained in cocycles (broken differential upstream)");
    // Coordinates of the coboundary rows in the cocycle RREF basis are read
    // off at the pivot columns; the complement is spanned by the cocycle
    // basis rows avoiding the coboundary pivot positions in those coordinates.
    const Matrix& cb = cocycles.basis;
    std::vector<std::uint32_t> piv_cols;
    for (std::uint32_t i = 0; i < cb.rows(); ++i) {
        std::uint32_t c = 0;
        while (c < cb.cols() && cb.at(i, c) == 0) ++c;
        piv_cols.push_back(c);
    }
    Matrix in_coords(coboundaries.basis.rows(), cb.rows(), cb.p());
    for (std::uint32_t i = 0; i < coboundaries.basis.rows(); ++i)
        for (std::uint32_t j = 0; j < cb.rows(); ++j)
            in_coords.set(i, j, coboundaries.basis.at(i, piv_cols[j]));
    RrefResult r = rref(in_coords);
    std::vector<bool> used(cb.rows(), false);
    for (std::uint32_t c : r.pivots) used[c] = true;
    std::vector<std::uint32_t> keep;
    for (std::uint32_t j = 0; j < cb.rows(); ++j)
        if (!used[j]) keep.push_back(j);
    SubquotientBasis out;
    out.lifts = cb.select_rows(keep);
    out.dim = static_cast<std::uint32_t>(keep.size());
    return out;
}

SpanSolver::SpanSolver(const Matrix& row_basis) {
    rank_ = row_basis.rows();
    n_ = row_basis.cols();
    p_ = row_basis.p();
    if (row_basis.is_identity()) {
        identity_ = true;
        return;
    }
    RrefResult r = rref(row_basis.transpose(), true);
    if (r.pivots.size() != rank_)
        throw ShapeMismatch("SpanSolver: rows are not independent (rank " +
                            std::to_string(r.pivots.size()) + " of " + std::to_string(rank_) + ")");
    t_ = std::move(r.transform);
}

std::optional<Vec> SpanSolver::coords(const Vec& w) const {
    if (w.size() != n_) throw ShapeMismatch("SpanSolver::coords");
    if (identity_) return w;
    Vec y = t_.apply(w);
    for (std::uint32_t i = rank_; i < n_; ++i)
        if (y[i]) return std::nullopt;
    y.resize(rank_);
    return y;
}

Vec SpanSolver::coords_or_throw(const Vec& w, const char* what) const {
    auto c = coords(w);
    if (!c) throw ContainmentViolation(std::string(what) + ": vector outside span");
    return *c;
}

Matrix SpanSolver::coords_cols(const Matrix& w, const char* what) const {
    if (w.rows() != n_) throw ShapeMismatch("SpanSolver::coords_cols");
    if (identity_) return w;
    Matrix y = t_ * w;
    for (std::uint32_t i = rank_; i < n_; ++i)
        for (std::uint32_t j = 0; j < y.cols(); ++j)
            if (y.at(i, j)) throw ContainmentViolation(std::string(what) + ": column outside span");
    return y.sub_rows(0, rank_);
}

bool EchelonAccumulator::add_row(Vec v) {
    const Kernels& k = active_kernels();
    for (std::size_t i = 0; i < rows_.size(); ++i) {
        std::uint32_t c = v[pivot_[i]];
        if (c) k.axpy_rows(v.data(), rows_[i].data(), p_ - c, n_, p_);
    }
    std::uint32_t piv = 0;
    while (piv < n_ && v[piv] == 0) ++piv;
    if (piv == n_) return false;
    std::uint32_t inv = inv_mod(v[piv], p_);
    if (inv != 1) k.scale_row(v.data(), inv, n_, p_);
    rows_.push_back(std::move(v));
    pivot_.push_back(piv);
    return true;
}

}  // namespace dhh::linfp
