#include "potnil/companion.hpp"

#include <string>
#include <utility>

#include "potnil/error.hpp"

namespace potnil {

CompanionMatrix::CompanionMatrix(FieldPtr field, std::vector<Code> coeffs)
    : field_(std::move(field)), coeffs_(std::move(coeffs)) {
    if (!field_) throw Error(ErrorCode::InvalidArgument, "null field");
    if (coeffs_.empty()) throw Error(ErrorCode::InvalidArgument, "companion matrix needs n >= 1");
    for (auto c : coeffs_) {
        if (c >= field_->order()) throw Error(ErrorCode::InvalidArgument, "companion coefficient out of range");
    }
}

CompanionMatrix CompanionMatrix::from_poly(const Polynomial& q) {
    if (q.degree() < 1 || !q.is_monic()) {
        throw Error(ErrorCode::NotMonic, "companion matrix needs a monic polynomial of degree >= 1, got " + q.to_string());
    }
    std::vector<Code> c(q.coeffs().begin(), q.coeffs().end() - 1);
    return {q.field(), std::move(c)};
}

std::optional<CompanionMatrix> CompanionMatrix::recognize(const Matrix& m) {
    if (!m.is_square() || m.rows() == 0) return std::nullopt;
    const std::size_t n = m.rows();
    std::vector<Code> c(n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j + 1 < n; ++j) {
            if (m(i, j) != (i == j + 1 ? 1u : 0u)) return std::nullopt;
        }
        c[i] = m.field()->neg(m(i, n - 1));
    }
    return CompanionMatrix(m.field(), std::move(c));
}

Polynomial CompanionMatrix::poly() const {
    std::vector<Code> q = coeffs_;
    q.push_back(1);
    return {field_, std::move(q)};
}

FieldElement CompanionMatrix::trace() const { return {field_, field_->neg(coeffs_.back())}; }

Matrix CompanionMatrix::realize() const {
    const std::size_t n = coeffs_.size();
    Matrix m(field_, n, n);
    for (std::size_t i = 0; i + 1 < n; ++i) m(i + 1, i) = 1;
    for (std::size_t i = 0; i < n; ++i) m(i, n - 1) = field_->neg(coeffs_[i]);
    return m;
}

ModifiedCompanion::ModifiedCompanion(CompanionMatrix base, std::vector<Code> prefix)
    : base_(std::move(base)), prefix_(std::move(prefix)) {
    if (prefix_.size() > base_.dim()) throw Error(ErrorCode::PrefixTooLong, "diagonal prefix longer than the dimension");
    for (auto a : prefix_) {
        if (a >= base_.field()->order()) throw Error(ErrorCode::InvalidArgument, "prefix entry out of range");
    }
}

Matrix ModifiedCompanion::realize() const {
    Matrix m = base_.realize();
    const auto& f = *base_.field();
    for (std::size_t i = 0; i < prefix_.size(); ++i) m(i, i) = f.add(m(i, i), prefix_[i]);
    return m;
}

namespace {

// Reads the companion C' off M = diag(prefix) + C' and checks the shape exactly.
CompanionMatrix extract_base(const Matrix& m, std::span<const Code> prefix) {
    const auto& f = *m.field();
    Matrix stripped = m;
    for (std::size_t i = 0; i < prefix.size(); ++i) stripped(i, i) = f.sub(stripped(i, i), prefix[i]);
    auto base = CompanionMatrix::recognize(stripped);
    if (!base) throw Error(ErrorCode::Internal, "change of basis did not produce a modified companion matrix");
    return *base;
}

}  // namespace

SimilarityResult shift_similarity(const CompanionMatrix& c, std::span<const Code> prefix) {
    const std::size_t n = c.dim();
    if (prefix.size() + 1 > n) {
        throw Error(ErrorCode::PrefixTooLong, "prefix of length " + std::to_string(prefix.size()) +
                                                  " needs dimension > " + std::to_string(prefix.size()) + ", got " +
                                                  std::to_string(n));
    }
    const auto& fp = c.field();
    const auto& f = *fp;
    const Matrix cm = c.realize();

    Matrix p(fp, n, n);
    std::vector<Code> fi(n, 0);
    fi[0] = 1;
    p.set_column(0, fi);
    for (std::size_t i = 1; i < n; ++i) {
        std::vector<Code> next = cm.apply(fi);
        if (i <= prefix.size()) {
            const Code a = prefix[i - 1];
            for (std::size_t r = 0; r < n; ++r) next[r] = f.sub(next[r], f.mul(a, fi[r]));
        }
        fi = std::move(next);
        p.set_column(i, fi);
    }

    SimilarityWitness w = SimilarityWitness::from(std::move(p));
    const Matrix m = w.p_inv() * cm * w.p();
    ModifiedCompanion d(extract_base(m, prefix), std::vector<Code>(prefix.begin(), prefix.end()));
    return {std::move(d), std::move(w)};
}

UniformShiftResult uniform_shift_similarity(const CompanionMatrix& c, Code a) {
    const std::size_t n = c.dim();
    const auto& fp = c.field();
    const Matrix shifted_op = c.realize() - Matrix::identity(fp, n).scaled(a);

    Matrix p(fp, n, n);
    std::vector<Code> v(n, 0);
    v[0] = 1;
    for (std::size_t i = 0; i < n; ++i) {
        p.set_column(i, v);
        v = shifted_op.apply(v);
    }
    if (!p.is_unit_upper_triangular()) {
        throw Error(ErrorCode::Internal, "e_1 is not a cyclic vector of C - aI");
    }
    SimilarityWitness w = SimilarityWitness::from(std::move(p));
    CompanionMatrix c1 = CompanionMatrix::from_poly(c.poly().shift_argument(a));

    const Matrix target = Matrix::identity(fp, n).scaled(a) + c1.realize();
    if (!(conjugate(target, w) == c.realize())) {
        throw Error(ErrorCode::Internal, "uniform shift similarity failed its roundtrip check");
    }
    return {std::move(c1), std::move(w)};
}

SimilarityResult full_shift_similarity(const CompanionMatrix& c, std::span<const Code> prefix) {
    const std::size_t n = c.dim();
    if (prefix.size() != n) {
        throw Error(ErrorCode::BadPrefixLength,
                    "full shift needs a prefix of length " + std::to_string(n) + ", got " + std::to_string(prefix.size()));
    }
    const auto& f = *c.field();
    const Code last = prefix[n - 1];
    UniformShiftResult uniform = uniform_shift_similarity(c, last);

    std::vector<Code> diffs(n - 1);
    for (std::size_t i = 0; i + 1 < n; ++i) diffs[i] = f.sub(prefix[i], last);
    SimilarityResult inner = shift_similarity(uniform.shifted, diffs);

    SimilarityWitness w = uniform.witness.compose(inner.witness);
    ModifiedCompanion d(inner.modified.base(), std::vector<Code>(prefix.begin(), prefix.end()));
    if (!(conjugate(d.realize(), w) == c.realize())) {
        throw Error(ErrorCode::Internal, "full shift similarity failed its roundtrip check");
    }
    return {std::move(d), std::move(w)};
}

}  // namespace potnil
