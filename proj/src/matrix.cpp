#include "potnil/matrix.hpp"

#include <algorithm>
#include <utility>

#include "potnil/error.hpp"

namespace potnil {

namespace {

void require_dims(bool ok, const char* what) {
    if (!ok) throw Error(ErrorCode::DimensionMismatch, what);
}

void require_square(const Matrix& a, const char* what) { require_dims(a.is_square(), what); }

struct Echelon {
    Matrix reduced;
    std::vector<std::size_t> pivots;
};

// Reduced row echelon form by Gauss-Jordan elimination.
Echelon rref(Matrix m) {
    const auto& f = *m.field();
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
        std::size_t pivot = row;
        while (pivot < m.rows() && m(pivot, col) == 0) ++pivot;
        if (pivot == m.rows()) continue;
        if (pivot != row) {
            for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(pivot, j), m(row, j));
        }
        const Code scale = f.inv(m(row, col));
        for (std::size_t j = 0; j < m.cols(); ++j) m(row, j) = f.mul(m(row, j), scale);
        for (std::size_t i = 0; i < m.rows(); ++i) {
            if (i == row || m(i, col) == 0) continue;
            const Code factor = m(i, col);
            for (std::size_t j = 0; j < m.cols(); ++j) m(i, j) = f.sub(m(i, j), f.mul(factor, m(row, j)));
        }
        pivots.push_back(col);
        ++row;
    }
    return {std::move(m), std::move(pivots)};
}

}  // namespace

Matrix::Matrix(FieldPtr field, std::size_t rows, std::size_t cols)
    : field_(std::move(field)), rows_(rows), cols_(cols), entries_(rows * cols, 0) {
    if (!field_) throw Error(ErrorCode::InvalidArgument, "null field");
}

Matrix::Matrix(FieldPtr field, std::size_t rows, std::size_t cols, std::vector<Code> entries)
    : field_(std::move(field)), rows_(rows), cols_(cols), entries_(std::move(entries)) {
    if (!field_) throw Error(ErrorCode::InvalidArgument, "null field");
    require_dims(entries_.size() == rows_ * cols_, "entry count does not match dimensions");
    for (auto c : entries_) {
        if (c >= field_->order()) throw Error(ErrorCode::InvalidArgument, "matrix entry out of range");
    }
}

Matrix::Matrix(FieldPtr field, std::initializer_list<std::initializer_list<long long>> rows)
    : field_(std::move(field)), rows_(rows.size()), cols_(rows.size() == 0 ? 0 : rows.begin()->size()) {
    for (const auto& r : rows) {
        require_dims(r.size() == cols_, "ragged matrix literal");
        for (auto t : r) entries_.push_back(field_->from_int(t));
    }
}

Matrix Matrix::identity(const FieldPtr& field, std::size_t n) {
    Matrix m(field, n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

Matrix Matrix::diag(const FieldPtr& field, std::span<const Code> values) {
    Matrix m(field, values.size(), values.size());
    for (std::size_t i = 0; i < values.size(); ++i) m(i, i) = values[i];
    return m;
}

Matrix Matrix::diag(const std::vector<FieldElement>& values) {
    if (values.empty()) throw Error(ErrorCode::InvalidArgument, "diag of an empty list");
    std::vector<Code> codes;
    for (const auto& v : values) {
        require_same_field(*values.front().field(), *v.field());
        codes.push_back(v.code());
    }
    return diag(values.front().field(), codes);
}

Matrix Matrix::block_diag(const FieldPtr& field, std::span<const Matrix> blocks) {
    std::size_t n = 0;
    for (const auto& b : blocks) {
        require_square(b, "block_diag needs square blocks");
        require_same_field(*field, *b.field());
        n += b.rows();
    }
    Matrix m(field, n, n);
    std::size_t offset = 0;
    for (const auto& b : blocks) {
        for (std::size_t i = 0; i < b.rows(); ++i) {
            for (std::size_t j = 0; j < b.cols(); ++j) m(offset + i, offset + j) = b(i, j);
        }
        offset += b.rows();
    }
    return m;
}

FieldElement Matrix::at(std::size_t i, std::size_t j) const {
    if (i >= rows_ || j >= cols_) throw Error(ErrorCode::DimensionMismatch, "index out of range");
    return {field_, (*this)(i, j)};
}

void Matrix::set(std::size_t i, std::size_t j, const FieldElement& value) {
    if (i >= rows_ || j >= cols_) throw Error(ErrorCode::DimensionMismatch, "index out of range");
    require_same_field(*field_, *value.field());
    (*this)(i, j) = value.code();
}

std::vector<Code> Matrix::column(std::size_t j) const {
    std::vector<Code> c(rows_);
    for (std::size_t i = 0; i < rows_; ++i) c[i] = (*this)(i, j);
    return c;
}

void Matrix::set_column(std::size_t j, std::span<const Code> values) {
    require_dims(values.size() == rows_, "column length mismatch");
    for (std::size_t i = 0; i < rows_; ++i) (*this)(i, j) = values[i];
}

Matrix Matrix::block(std::size_t row0, std::size_t col0, std::size_t rows, std::size_t cols) const {
    require_dims(row0 + rows <= rows_ && col0 + cols <= cols_, "block out of range");
    Matrix m(field_, rows, cols);
    for (std::size_t i = 0; i < rows; ++i) {
        for (std::size_t j = 0; j < cols; ++j) m(i, j) = (*this)(row0 + i, col0 + j);
    }
    return m;
}

Matrix Matrix::transpose() const {
    Matrix m(field_, cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t j = 0; j < cols_; ++j) m(j, i) = (*this)(i, j);
    }
    return m;
}

bool Matrix::is_zero() const noexcept {
    for (auto c : entries_) {
        if (c != 0) return false;
    }
    return true;
}

bool Matrix::is_identity() const noexcept {
    if (!is_square()) return false;
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t j = 0; j < cols_; ++j) {
            if ((*this)(i, j) != (i == j ? 1u : 0u)) return false;
        }
    }
    return true;
}

bool Matrix::is_upper_triangular() const noexcept {
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t j = 0; j < i && j < cols_; ++j) {
            if ((*this)(i, j) != 0) return false;
        }
    }
    return true;
}

bool Matrix::is_unit_upper_triangular() const noexcept {
    if (!is_square() || !is_upper_triangular()) return false;
    for (std::size_t i = 0; i < rows_; ++i) {
        if ((*this)(i, i) != 1) return false;
    }
    return true;
}

Matrix operator+(const Matrix& a, const Matrix& b) {
    require_same_field(*a.field_, *b.field_);
    require_dims(a.rows_ == b.rows_ && a.cols_ == b.cols_, "matrix sum of different shapes");
    Matrix m(a.field_, a.rows_, a.cols_);
    for (std::size_t i = 0; i < a.entries_.size(); ++i) m.entries_[i] = a.field_->add(a.entries_[i], b.entries_[i]);
    return m;
}

Matrix operator-(const Matrix& a, const Matrix& b) {
    require_same_field(*a.field_, *b.field_);
    require_dims(a.rows_ == b.rows_ && a.cols_ == b.cols_, "matrix difference of different shapes");
    Matrix m(a.field_, a.rows_, a.cols_);
    for (std::size_t i = 0; i < a.entries_.size(); ++i) m.entries_[i] = a.field_->sub(a.entries_[i], b.entries_[i]);
    return m;
}

Matrix Matrix::operator-() const {
    Matrix m(field_, rows_, cols_);
    for (std::size_t i = 0; i < entries_.size(); ++i) m.entries_[i] = field_->neg(entries_[i]);
    return m;
}

Matrix Matrix::scaled(Code c) const {
    Matrix m(field_, rows_, cols_);
    for (std::size_t i = 0; i < entries_.size(); ++i) m.entries_[i] = field_->mul(entries_[i], c);
    return m;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
    require_same_field(*a.field_, *b.field_);
    require_dims(a.cols_ == b.rows_, "matrix product with incompatible inner dimensions");
    const auto& f = *a.field_;
    Matrix m(a.field_, a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i) {
        for (std::size_t k = 0; k < a.cols_; ++k) {
            const Code aik = a(i, k);
            if (aik == 0) continue;
            for (std::size_t j = 0; j < b.cols_; ++j) m(i, j) = f.add(m(i, j), f.mul(aik, b(k, j)));
        }
    }
    return m;
}

bool operator==(const Matrix& a, const Matrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) return false;
    require_same_field(*a.field_, *b.field_);
    return a.entries_ == b.entries_;
}

std::vector<Code> Matrix::apply(std::span<const Code> v) const {
    require_dims(v.size() == cols_, "vector length mismatch");
    std::vector<Code> out(rows_, 0);
    for (std::size_t i = 0; i < rows_; ++i) {
        Code acc = 0;
        for (std::size_t j = 0; j < cols_; ++j) acc = field_->add(acc, field_->mul((*this)(i, j), v[j]));
        out[i] = acc;
    }
    return out;
}

std::string Matrix::to_string() const {
    std::string out;
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t j = 0; j < cols_; ++j) {
            if (j) out += ' ';
            out += field_->format((*this)(i, j));
        }
        out += '\n';
    }
    return out;
}

Matrix mat_add(const Matrix& a, const Matrix& b) { return a + b; }
Matrix mat_sub(const Matrix& a, const Matrix& b) { return a - b; }
Matrix mat_mul(const Matrix& a, const Matrix& b) { return a * b; }

Matrix mat_pow(const Matrix& a, std::uint64_t e) {
    require_square(a, "power of a non-square matrix");
    Matrix result = Matrix::identity(a.field(), a.rows());
    Matrix base = a;
    while (e > 0) {
        if (e & 1) result = result * base;
        e >>= 1;
        if (e > 0) base = base * base;
    }
    return result;
}

Matrix mat_inv(const Matrix& a) {
    require_square(a, "inverse of a non-square matrix");
    const std::size_t n = a.rows();
    Matrix aug(a.field(), n, 2 * n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) aug(i, j) = a(i, j);
        aug(i, n + i) = 1;
    }
    auto [r, pivots] = rref(std::move(aug));
    if (pivots.size() < n || pivots[n - 1] != n - 1) throw Error(ErrorCode::Singular, "matrix is singular");
    return r.block(0, n, n, n);
}

Matrix unit_upper_inverse(const Matrix& a) {
    if (!a.is_unit_upper_triangular()) throw Error(ErrorCode::InvalidArgument, "matrix is not unit upper triangular");
    const auto& f = *a.field();
    const std::size_t n = a.rows();
    Matrix inv = Matrix::identity(a.field(), n);
    // column j of the inverse: solve a x = e_j from the bottom up
    for (std::size_t j = 0; j < n; ++j) {
        for (std::size_t i = j; i-- > 0;) {
            Code acc = 0;
            for (std::size_t k = i + 1; k <= j; ++k) acc = f.add(acc, f.mul(a(i, k), inv(k, j)));
            inv(i, j) = f.neg(acc);
        }
    }
    return inv;
}

std::size_t rank(const Matrix& a) { return rref(a).pivots.size(); }

Matrix kernel(const Matrix& a) {
    auto [r, pivots] = rref(a);
    const auto& f = *a.field();
    std::vector<bool> is_pivot(a.cols(), false);
    for (auto c : pivots) is_pivot[c] = true;
    Matrix basis(a.field(), a.cols(), a.cols() - pivots.size());
    std::size_t out = 0;
    for (std::size_t free = 0; free < a.cols(); ++free) {
        if (is_pivot[free]) continue;
        basis(free, out) = 1;
        for (std::size_t k = 0; k < pivots.size(); ++k) basis(pivots[k], out) = f.neg(r(k, free));
        ++out;
    }
    return basis;
}

std::optional<std::vector<Code>> solve(const Matrix& a, std::span<const Code> b) {
    require_dims(b.size() == a.rows(), "right-hand side length mismatch");
    Matrix aug(a.field(), a.rows(), a.cols() + 1);
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j) aug(i, j) = a(i, j);
        aug(i, a.cols()) = b[i];
    }
    auto [r, pivots] = rref(std::move(aug));
    if (!pivots.empty() && pivots.back() == a.cols()) return std::nullopt;
    std::vector<Code> x(a.cols(), 0);
    for (std::size_t k = 0; k < pivots.size(); ++k) x[pivots[k]] = r(k, a.cols());
    return x;
}

FieldElement trace(const Matrix& a) {
    require_square(a, "trace of a non-square matrix");
    Code t = 0;
    for (std::size_t i = 0; i < a.rows(); ++i) t = a.field()->add(t, a(i, i));
    return {a.field(), t};
}

Polynomial charpoly(const Matrix& a) {
    require_square(a, "characteristic polynomial of a non-square matrix");
    const auto& fp = a.field();
    const auto& f = *fp;
    const std::size_t n = a.rows();
    Matrix h = a;

    // Upper Hessenberg form by elementary similarity transforms.
    for (std::size_t j = 0; j + 2 < n; ++j) {
        std::size_t pivot = j + 1;
        while (pivot < n && h(pivot, j) == 0) ++pivot;
        if (pivot == n) continue;
        if (pivot != j + 1) {
            for (std::size_t k = 0; k < n; ++k) std::swap(h(pivot, k), h(j + 1, k));
            for (std::size_t k = 0; k < n; ++k) std::swap(h(k, pivot), h(k, j + 1));
        }
        const Code pivot_inv = f.inv(h(j + 1, j));
        for (std::size_t r = j + 2; r < n; ++r) {
            if (h(r, j) == 0) continue;
            const Code factor = f.mul(h(r, j), pivot_inv);
            for (std::size_t k = 0; k < n; ++k) h(r, k) = f.sub(h(r, k), f.mul(factor, h(j + 1, k)));
            for (std::size_t k = 0; k < n; ++k) h(k, j + 1) = f.add(h(k, j + 1), f.mul(factor, h(k, r)));
        }
    }

    // p_m = (X - h_mm) p_{m-1} - sum_{i<m} h_im (prod_{t=i}^{m-1} h_{t,t-1}) p_{i-1}, 1-based
    std::vector<Polynomial> chain;
    chain.reserve(n + 1);
    chain.push_back(Polynomial::constant(fp, 1));
    for (std::size_t m = 1; m <= n; ++m) {
        Polynomial pm = Polynomial::linear_root(fp, h(m - 1, m - 1)) * chain[m - 1];
        Code subdiag = 1;
        for (std::size_t i = m - 1; i >= 1; --i) {
            subdiag = f.mul(subdiag, h(i, i - 1));
            if (subdiag == 0) break;
            const Code coeff = f.mul(h(i - 1, m - 1), subdiag);
            if (coeff != 0) pm = pm - chain[i - 1].scaled(coeff);
        }
        chain.push_back(std::move(pm));
    }
    return chain[n];
}

Polynomial local_minpoly(const Matrix& a, std::span<const Code> v) {
    require_square(a, "annihilator under a non-square matrix");
    require_dims(v.size() == a.rows(), "vector length mismatch");
    const auto& fp = a.field();
    const auto& f = *fp;
    const std::size_t n = a.rows();

    struct Row {
        std::vector<Code> vec;
        std::vector<Code> comb;  // vec = sum comb_i A^i v
        std::size_t pivot;
    };
    std::vector<Row> basis;
    std::vector<Code> w(v.begin(), v.end());
    for (std::size_t k = 0; k <= n; ++k) {
        std::vector<Code> r = w;
        std::vector<Code> comb(n + 1, 0);
        comb[k] = 1;
        for (const auto& b : basis) {
            const Code c = r[b.pivot];
            if (c == 0) continue;
            for (std::size_t i = 0; i < n; ++i) r[i] = f.sub(r[i], f.mul(c, b.vec[i]));
            for (std::size_t i = 0; i <= n; ++i) comb[i] = f.sub(comb[i], f.mul(c, b.comb[i]));
        }
        std::size_t pivot = 0;
        while (pivot < n && r[pivot] == 0) ++pivot;
        if (pivot == n) {
            comb.resize(k + 1);
            return Polynomial(fp, std::move(comb));
        }
        const Code s = f.inv(r[pivot]);
        for (auto& x : r) x = f.mul(x, s);
        for (auto& x : comb) x = f.mul(x, s);
        basis.push_back({std::move(r), std::move(comb), pivot});
        w = a.apply(w);
    }
    throw Error(ErrorCode::Internal, "Krylov sequence failed to become dependent");
}

Polynomial minpoly(const Matrix& a) {
    require_square(a, "minimal polynomial of a non-square matrix");
    const std::size_t n = a.rows();
    Polynomial m = Polynomial::constant(a.field(), 1);
    std::vector<Code> e(n, 0);
    for (std::size_t i = 0; i < n; ++i) {
        std::fill(e.begin(), e.end(), 0);
        e[i] = 1;
        m = lcm(m, local_minpoly(a, e));
    }
    return m;
}

Matrix eval_at(const Polynomial& f, const Matrix& a) {
    require_square(a, "polynomial of a non-square matrix");
    require_same_field(*f.field(), *a.field());
    Matrix acc(a.field(), a.rows(), a.cols());
    const Matrix id = Matrix::identity(a.field(), a.rows());
    for (std::size_t i = f.coeffs().size(); i-- > 0;) acc = acc * a + id.scaled(f.coeffs()[i]);
    return acc;
}

bool is_nilpotent(const Matrix& a) {
    require_square(a, "nilpotency of a non-square matrix");
    return charpoly(a) == Polynomial::monomial(a.field(), a.rows());
}

std::optional<std::size_t> nilpotency_index(const Matrix& a) {
    require_square(a, "nilpotency of a non-square matrix");
    Matrix power = a;
    for (std::size_t e = 1; e <= std::max<std::size_t>(a.rows(), 1); ++e) {
        if (power.is_zero()) return e;
        power = power * a;
    }
    return std::nullopt;
}

bool is_p_potent(const Matrix& a) {
    require_square(a, "p-potency of a non-square matrix");
    return mat_pow(a, a.field()->characteristic()) == a;
}

SimilarityWitness::SimilarityWitness(Matrix p, Matrix p_inv) : p_(std::move(p)), p_inv_(std::move(p_inv)) {
    require_square(p_, "similarity witness must be square");
    if (!(p_ * p_inv_).is_identity()) throw Error(ErrorCode::InvalidArgument, "P * P_inv is not the identity");
}

SimilarityWitness SimilarityWitness::identity(const FieldPtr& field, std::size_t n) {
    return {Matrix::identity(field, n), Matrix::identity(field, n)};
}

SimilarityWitness SimilarityWitness::from(Matrix p) {
    Matrix inv = p.is_unit_upper_triangular() ? unit_upper_inverse(p) : mat_inv(p);
    return {std::move(p), std::move(inv)};
}

SimilarityWitness SimilarityWitness::compose(const SimilarityWitness& inner) const {
    return {p_ * inner.p_, inner.p_inv_ * p_inv_};
}

Matrix conjugate(const Matrix& d, const SimilarityWitness& w) {
    require_dims(d.is_square() && d.rows() == w.dim(), "conjugation dimension mismatch");
    return w.p() * d * w.p_inv();
}

}  // namespace potnil
