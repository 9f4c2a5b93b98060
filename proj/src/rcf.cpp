#include "potnil/rcf.hpp"

#include <algorithm>
#include <random>
#include <utility>

#include "potnil/error.hpp"

namespace potnil {

namespace {

constexpr std::uint64_t kVectorSearchSeed = 0x5eed5eedULL;
constexpr int kMaxRandomTries = 10000;

// A vector whose annihilator is the full minimal polynomial.
std::vector<Code> maximal_vector(const Matrix& a, long target_degree, std::mt19937_64& rng) {
    const std::size_t n = a.rows();
    std::vector<Code> v(n, 0);
    for (std::size_t i = 0; i < n; ++i) {
        std::fill(v.begin(), v.end(), 0);
        v[i] = 1;
        if (local_minpoly(a, v).degree() == target_degree) return v;
    }
    std::uniform_int_distribution<Code> dist(0, a.field()->order() - 1);
    for (int attempt = 0; attempt < kMaxRandomTries; ++attempt) {
        for (auto& x : v) x = dist(rng);
        if (local_minpoly(a, v).degree() == target_degree) return v;
    }
    throw Error(ErrorCode::Internal, "no vector with maximal annihilator found");
}

struct CyclicSplit {
    std::vector<Polynomial> factors;  // largest first
    Matrix p;
};

CyclicSplit split_cyclic(const Matrix& a, std::mt19937_64& rng) {
    const auto& fp = a.field();
    const std::size_t n = a.rows();
    if (n == 0) return {{}, Matrix(fp, 0, 0)};

    const Polynomial mu = minpoly(a);
    const std::size_t d = static_cast<std::size_t>(mu.degree());
    const std::vector<Code> v = maximal_vector(a, mu.degree(), rng);

    Matrix krylov(fp, n, d);
    std::vector<Code> w = v;
    for (std::size_t j = 0; j < d; ++j) {
        krylov.set_column(j, w);
        w = a.apply(w);
    }
    if (d == n) return {{mu}, std::move(krylov)};

    // phi vanishes on A^i v for i < d-1 and is 1 on A^{d-1} v.
    std::vector<Code> rhs(d, 0);
    rhs[d - 1] = 1;
    const auto phi = solve(krylov.transpose(), rhs);
    if (!phi) throw Error(ErrorCode::Internal, "Krylov basis is rank deficient");

    // The common kernel of phi A^i, i < d, is an A-invariant complement.
    Matrix dual(fp, d, n);
    Matrix row(fp, 1, n, *phi);
    for (std::size_t i = 0; i < d; ++i) {
        for (std::size_t j = 0; j < n; ++j) dual(i, j) = row(0, j);
        row = row * a;
    }
    const Matrix complement = kernel(dual);
    if (complement.cols() != n - d) throw Error(ErrorCode::Internal, "complement has the wrong dimension");

    Matrix q(fp, n, n);
    for (std::size_t j = 0; j < d; ++j) q.set_column(j, krylov.column(j));
    for (std::size_t j = 0; j < n - d; ++j) q.set_column(d + j, complement.column(j));
    const Matrix reduced = mat_inv(q) * a * q;
    const Matrix rest = reduced.block(d, d, n - d, n - d);

    CyclicSplit inner = split_cyclic(rest, rng);
    const Matrix blocks[] = {Matrix::identity(fp, d), inner.p};
    CyclicSplit out{{mu}, q * Matrix::block_diag(fp, blocks)};
    for (auto& f : inner.factors) out.factors.push_back(std::move(f));
    return out;
}

}  // namespace

std::vector<CompanionMatrix> FrobeniusForm::blocks() const {
    std::vector<CompanionMatrix> out;
    for (const auto& q : invariant_factors) out.push_back(CompanionMatrix::from_poly(q));
    return out;
}

Matrix FrobeniusForm::block_diagonal() const {
    std::vector<Matrix> realized;
    for (const auto& b : blocks()) realized.push_back(b.realize());
    return Matrix::block_diag(witness.p().field(), realized);
}

FrobeniusForm frobenius_form(const Matrix& a) {
    if (!a.is_square() || a.rows() == 0) throw Error(ErrorCode::DimensionMismatch, "Frobenius form needs a square matrix");
    const auto& fp = a.field();
    const std::size_t n = a.rows();
    std::mt19937_64 rng(kVectorSearchSeed);
    CyclicSplit split = split_cyclic(a, rng);

    // Reverse to ascending divisibility, moving the column groups of P along.
    std::vector<std::size_t> offsets;
    std::size_t offset = 0;
    for (const auto& f : split.factors) {
        offsets.push_back(offset);
        offset += static_cast<std::size_t>(f.degree());
    }
    Matrix p(fp, n, n);
    std::vector<Polynomial> factors;
    std::size_t col = 0;
    for (std::size_t b = split.factors.size(); b-- > 0;) {
        const auto deg = static_cast<std::size_t>(split.factors[b].degree());
        for (std::size_t j = 0; j < deg; ++j) p.set_column(col++, split.p.column(offsets[b] + j));
        factors.push_back(split.factors[b]);
    }

    FrobeniusForm form{std::move(factors), SimilarityWitness::from(std::move(p))};
    if (!(conjugate(form.block_diagonal(), form.witness) == a)) {
        throw Error(ErrorCode::Internal, "Frobenius witness failed its roundtrip check");
    }
    return form;
}

Decomposition decompose_matrix(const Matrix& a, std::size_t m) {
    if (m == 0) throw Error(ErrorCode::InvalidArgument, "number of p-potent summands must be positive");
    const FrobeniusForm form = frobenius_form(a);
    const auto& fp = a.field();
    const auto blocks = form.blocks();

    std::vector<std::vector<Matrix>> potent_blocks(m);
    std::vector<Matrix> nil_blocks;
    for (std::size_t i = 0; i < blocks.size(); ++i) {
        if (!can_decompose(blocks[i])) throw BlockCriterionFailed(i, blocks[i].trace().to_string());
        Decomposition part = decompose_m_potents(blocks[i], m);
        for (std::size_t j = 0; j < m; ++j) potent_blocks[j].push_back(std::move(part.potents[j]));
        nil_blocks.push_back(std::move(part.nilpotent));
    }

    std::vector<Matrix> potents;
    for (const auto& pb : potent_blocks) potents.push_back(conjugate(Matrix::block_diag(fp, pb), form.witness));
    Matrix nilpotent = conjugate(Matrix::block_diag(fp, nil_blocks), form.witness);
    Certificate cert = certify(a, potents, nilpotent);
    if (!cert.all_passed()) {
        throw Error(ErrorCode::Internal, "assembled decomposition failed certification:\n" + cert.to_string());
    }
    return {std::move(potents), std::move(nilpotent), std::move(cert)};
}

}  // namespace potnil
