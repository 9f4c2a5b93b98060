#include "potnil/decompose.hpp"

#include <string>
#include <utility>

#include "potnil/error.hpp"
#include "search.hpp"

namespace potnil {

bool Certificate::all_passed() const noexcept {
    if (checked_p_potency.empty() || !checked_nilpotency || !checked_sum) return false;
    for (bool ok : checked_p_potency) {
        if (!ok) return false;
    }
    return true;
}

std::string Certificate::to_string() const {
    auto yes_no = [](bool b) { return b ? "true" : "false"; };
    std::string out;
    for (std::size_t i = 0; i < checked_p_potency.size(); ++i) {
        out += "p_potent[" + std::to_string(i + 1) + "]: " + yes_no(checked_p_potency[i]) + "\n";
    }
    out += "nilpotent: " + std::string(yes_no(checked_nilpotency)) + "\n";
    out += "nilpotency_index: " + std::to_string(nilpotency_witness) + "\n";
    out += "sum: " + std::string(yes_no(checked_sum)) + "\n";
    out += "verified: " + std::string(yes_no(all_passed())) + "\n";
    return out;
}

Certificate certify(const Matrix& target, const std::vector<Matrix>& potents, const Matrix& nilpotent) {
    Certificate cert;
    const bool shapes_ok = target.is_square() && nilpotent.rows() == target.rows() && nilpotent.cols() == target.cols();
    Matrix sum = nilpotent;
    bool sum_shapes = shapes_ok;
    for (const auto& e : potents) {
        const bool ok = e.is_square() && e.rows() == target.rows();
        cert.checked_p_potency.push_back(ok && is_p_potent(e));
        if (ok && sum_shapes) sum = sum + e;
        else sum_shapes = false;
    }
    if (nilpotent.is_square()) {
        cert.checked_nilpotency = is_nilpotent(nilpotent);
        cert.nilpotency_witness = nilpotency_index(nilpotent).value_or(0);
    }
    cert.checked_sum = sum_shapes && sum == target;
    return cert;
}

const Matrix& Decomposition::potent() const {
    if (potents.size() != 1) throw Error(ErrorCode::InvalidArgument, "decomposition has more than one p-potent part");
    return potents.front();
}

namespace {

Decomposition finish(const Matrix& target, std::vector<Matrix> potents, Matrix nilpotent) {
    Certificate cert = certify(target, potents, nilpotent);
    if (!cert.all_passed()) {
        throw Error(ErrorCode::Internal, "constructed decomposition failed certification:\n" + cert.to_string());
    }
    return {std::move(potents), std::move(nilpotent), std::move(cert)};
}

// Subdiagonal shift: the companion matrix of X^n.
Matrix shift_matrix(const FieldPtr& field, std::size_t n) {
    return CompanionMatrix(field, std::vector<Code>(n, 0)).realize();
}

// E0 = D - N0 on the modified companion, conjugated back through the witness.
Decomposition lift_from_modified(const CompanionMatrix& c, const SimilarityResult& sim) {
    const std::size_t n = c.dim();
    const Matrix n0 = shift_matrix(c.field(), n);
    const Matrix e0 = sim.modified.realize() - n0;
    return finish(c.realize(), {conjugate(e0, sim.witness)}, conjugate(n0, sim.witness));
}

void require_criterion(const CompanionMatrix& c) {
    if (!can_decompose(c)) throw CriterionFailed(c.trace().to_string());
}

}  // namespace

bool can_decompose(const CompanionMatrix& c) { return c.trace().in_prime_subfield(); }

std::optional<Admissible> corollary_admissible(const CompanionMatrix& c) {
    const std::size_t n = c.dim();
    const FieldElement t = c.trace();
    if (n < 2) throw Error(ErrorCode::InvalidArgument, "admissibility needs n >= 2");
    if (!t.in_prime_subfield() || t.is_zero()) {
        throw Error(ErrorCode::InvalidArgument, "admissibility needs a nonzero trace in the prime subfield");
    }
    const auto& fp = c.field();
    const std::uint64_t p = fp->characteristic();
    for (std::uint64_t k = 1; k + 1 <= n; ++k) {
        const FieldElement kk = FieldElement::from_int(fp, static_cast<long long>(k % p));
        if (kk.is_zero() || kk == t) continue;
        const FieldElement a = t / kk - FieldElement::one(fp);
        // a is a prime-subfield element; as an integer it must lie in 1..p-2
        if (a.code() >= 1 && a.code() <= p - 2) return Admissible{k, a};
    }
    return std::nullopt;
}

Decomposition decompose_traceless(const CompanionMatrix& c) {
    if (!c.trace().is_zero()) throw Error(ErrorCode::NonzeroTrace, "traceless construction on trace " + c.trace().to_string());
    const auto& fp = c.field();
    const auto& f = *fp;
    const std::size_t n = c.dim();

    if (n == 1) return finish(c.realize(), {Matrix::zero(fp, 1)}, Matrix::zero(fp, 1));
    if (n == 2) {
        Matrix e(fp, 2, 2);
        e(0, 1) = 1;
        e(1, 0) = 1;
        Matrix nil(fp, 2, 2);
        nil(0, 1) = f.sub(f.neg(c.coeffs()[0]), 1);
        return finish(c.realize(), {std::move(e)}, std::move(nil));
    }

    // a = 1 in both branches; in the even branch a != -1 keeps -a-1 away from 0.
    const Code a = 1;
    const Code minus_a = f.neg(a);
    std::vector<Code> prefix;
    if (n % 2 == 1) {
        const std::size_t k = (n - 1) / 2;
        prefix.assign(k, a);
        prefix.insert(prefix.end(), k, minus_a);
    } else {
        const std::size_t k = (n - 2) / 2;
        prefix.assign(k, a);
        prefix.insert(prefix.end(), k - 1, minus_a);
        prefix.push_back(f.sub(minus_a, 1));
        prefix.push_back(1);
    }
    const SimilarityResult sim = shift_similarity(c, prefix);
    if (sim.modified.base().coeffs().back() != 0) {
        throw Error(ErrorCode::Internal, "similarity changed the trace of the base companion");
    }
    return lift_from_modified(c, sim);
}

std::uint64_t arrow_parameter(std::uint64_t p, std::size_t n, Code t) {
    const std::uint64_t n_mod = n % p;
    for (std::uint64_t a = 1; a < p; ++a) {
        if (n_mod * a % p != t) return a;
    }
    throw Error(ErrorCode::Internal, "no arrow parameter exists");
}

Decomposition decompose_companion(const CompanionMatrix& c) {
    require_criterion(c);
    const auto& fp = c.field();
    const std::size_t n = c.dim();
    const FieldElement t = c.trace();

    if (n == 1) return finish(c.realize(), {Matrix::diag(fp, std::vector<Code>{t.code()})}, Matrix::zero(fp, 1));
    if (t.is_zero()) return decompose_traceless(c);

    // Arrow construction: D = diag(a, ..., a, 0) + C', E0 = D - shift is upper
    // triangular with diagonal (a, ..., a, t - (n-1)a) and eigenvalues a != t - (n-1)a.
    const Code a = arrow_parameter(fp->characteristic(), n, t.code());
    const std::vector<Code> prefix(n - 1, a);
    return lift_from_modified(c, shift_similarity(c, prefix));
}

Decomposition decompose_m_potents(const CompanionMatrix& c, std::size_t m) {
    if (m == 0) throw Error(ErrorCode::InvalidArgument, "number of p-potent summands must be positive");
    if (m == 1) return decompose_companion(c);
    require_criterion(c);

    const auto& fp = c.field();
    const std::size_t n = c.dim();
    const std::vector<Code> prefix{1};
    const SimilarityResult sim = n == 1 ? full_shift_similarity(c, prefix) : shift_similarity(c, prefix);
    const Decomposition inner = decompose_m_potents(sim.modified.base(), m - 1);

    std::vector<Code> unit(n, 0);
    unit[0] = 1;
    std::vector<Matrix> potents;
    potents.reserve(m);
    potents.push_back(conjugate(Matrix::diag(fp, unit), sim.witness));
    for (const auto& e : inner.potents) potents.push_back(conjugate(e, sim.witness));
    return finish(c.realize(), std::move(potents), conjugate(inner.nilpotent, sim.witness));
}

ModifiedCompanion PrescribedTarget::modified_companion(const FieldPtr& field) const {
    return ModifiedCompanion(CompanionMatrix(field, d), std::vector<Code>(k, field->from_int(static_cast<long long>(a))));
}

Polynomial PrescribedTarget::target_charpoly(const FieldPtr& field) const {
    const std::size_t n = d.size();
    std::vector<Code> coeffs(n + 1, 0);
    coeffs[n] = 1;
    coeffs[n - 1] = field->add(field->from_int(static_cast<long long>(k)), d[n - 1]);
    return Polynomial(field, std::move(coeffs)) + g;
}

std::optional<Matrix> prescribed_charpoly_search(const ModifiedCompanion& d, const PrescribedTarget& target,
                                                 std::uint64_t budget, unsigned jobs) {
    const auto& fp = d.base().field();
    const std::size_t n = d.dim();
    const std::uint64_t p = fp->characteristic();
    if (!fp->is_prime_field()) throw Error(ErrorCode::InvalidArgument, "prescribed search runs over prime fields only");
    if (n < 2 || target.d.size() != n) throw Error(ErrorCode::InvalidArgument, "prescribed search needs n >= 2 and |d| = n");
    if (target.k < 1 || target.k >= n) throw Error(ErrorCode::InvalidArgument, "k must lie in 1..n-1");
    if (target.a < 1 || target.a + 2 > p) throw Error(ErrorCode::InvalidArgument, "a must lie in 1..p-2");
    require_same_field(*fp, *target.g.field());
    if (target.g.degree() > static_cast<long>(n) - 2) throw Error(ErrorCode::InvalidArgument, "deg g must be <= n-2");
    if (!(d.base().coeffs() == target.d) || d.prefix() != std::vector<Code>(target.k, target.a)) {
        throw Error(ErrorCode::InvalidArgument, "modified companion does not match the prescribed target");
    }

    const std::uint64_t total = detail::matrix_space_size(fp->order(), n, budget);
    const Matrix dm = d.realize();
    const Polynomial chi = target.target_charpoly(fp);
    auto hit = detail::first_hit(total, jobs, [&](std::uint64_t index) {
        const Matrix e = detail::matrix_at_index(fp, n, index);
        return is_p_potent(e) && charpoly(dm - e) == chi;
    });
    if (!hit) return std::nullopt;
    return detail::matrix_at_index(fp, n, *hit);
}

}  // namespace potnil
