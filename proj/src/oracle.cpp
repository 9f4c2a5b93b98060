#include "potnil/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <exception>
#include <numeric>
#include <random>
#include <thread>
#include <utility>

#include "potnil/error.hpp"
#include "search.hpp"

namespace potnil {

namespace {

// Runs body(i) for i in [0, count) across `jobs` threads in contiguous chunks.
template <class Body>
void parallel_for(std::uint64_t count, unsigned jobs, const Body& body) {
    jobs = std::max(1u, jobs);
    if (jobs == 1 || count < 2) {
        for (std::uint64_t i = 0; i < count; ++i) body(i);
        return;
    }
    const std::uint64_t chunk = (count + jobs - 1) / jobs;
    std::vector<std::thread> workers;
    std::vector<std::exception_ptr> errors(jobs);
    for (unsigned w = 0; w < jobs; ++w) {
        workers.emplace_back([&, w] {
            try {
                const std::uint64_t end = std::min(count, (w + 1) * chunk);
                for (std::uint64_t i = w * chunk; i < end; ++i) body(i);
            } catch (...) {
                errors[w] = std::current_exception();
            }
        });
    }
    for (auto& t : workers) t.join();
    for (auto& e : errors) {
        if (e) std::rethrow_exception(e);
    }
}

// All p-potent n x n matrices in enumeration order.
std::vector<Matrix> p_potent_candidates(const FieldPtr& field, std::size_t n, std::uint64_t total, unsigned jobs) {
    std::vector<char> keep(total, 0);
    parallel_for(total, jobs, [&](std::uint64_t i) { keep[i] = is_p_potent(detail::matrix_at_index(field, n, i)); });
    std::vector<Matrix> out;
    for (std::uint64_t i = 0; i < total; ++i) {
        if (keep[i]) out.push_back(detail::matrix_at_index(field, n, i));
    }
    return out;
}

std::vector<Code> index_to_coeffs(std::uint64_t index, std::uint64_t q, std::size_t n) {
    std::vector<Code> c(n);
    for (std::size_t i = n; i-- > 0;) {
        c[i] = index % q;
        index /= q;
    }
    return c;
}

std::string format_vector(const FieldSpec& f, const std::vector<Code>& v) {
    std::string out = "(";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) out += ',';
        out += f.format(v[i]);
    }
    return out + ")";
}

}  // namespace

std::optional<Decomposition> brute_force_decompose(const Matrix& a, std::uint64_t budget, unsigned jobs) {
    if (!a.is_square()) throw Error(ErrorCode::DimensionMismatch, "brute force needs a square matrix");
    const auto& fp = a.field();
    const std::size_t n = a.rows();
    const std::uint64_t total = detail::matrix_space_size(fp->order(), n, budget);
    auto hit = detail::first_hit(total, jobs, [&](std::uint64_t index) {
        const Matrix e = detail::matrix_at_index(fp, n, index);
        return is_p_potent(e) && is_nilpotent(a - e);
    });
    if (!hit) return std::nullopt;
    Matrix e = detail::matrix_at_index(fp, n, *hit);
    Matrix nil = a - e;
    std::vector<Matrix> potents{std::move(e)};
    Certificate cert = certify(a, potents, nil);
    if (!cert.all_passed()) throw Error(ErrorCode::Internal, "brute-force hit failed certification");
    return Decomposition{std::move(potents), std::move(nil), std::move(cert)};
}

EnumerationReport enumerate_theorem(const FieldPtr& field, std::size_t n, const EnumerationOptions& options) {
    if (n == 0) throw Error(ErrorCode::InvalidArgument, "dimension must be positive");
    const std::uint64_t q = field->order();
    const auto total = detail::checked_power(q, n, options.budget);
    if (!total) throw Error(ErrorCode::BudgetExceeded, "number of companion matrices exceeds the budget");

    std::vector<Matrix> candidates;
    if (options.with_oracle) {
        const std::uint64_t space = detail::matrix_space_size(q, n, options.budget);
        candidates = p_potent_candidates(field, n, space, options.jobs);
    }

    EnumerationReport report;
    report.field = field;
    report.n = n;
    report.total = *total;
    report.instances.resize(*total);
    parallel_for(*total, options.jobs, [&](std::uint64_t index) {
        InstanceResult& r = report.instances[index];
        r.coeffs = index_to_coeffs(index, q, n);
        const CompanionMatrix c(field, r.coeffs);
        r.criterion = can_decompose(c);
        try {
            r.constructive = decompose_companion(c).certificate.all_passed();
        } catch (const CriterionFailed&) {
            r.constructive = false;
        }
        if (options.with_oracle) {
            const Matrix cm = c.realize();
            r.oracle = std::any_of(candidates.begin(), candidates.end(),
                                   [&](const Matrix& e) { return is_nilpotent(cm - e); });
        }
    });

    if (options.with_oracle) report.oracle_pass = 0;
    for (const auto& r : report.instances) {
        report.criterion_pass += r.criterion;
        report.constructive_pass += r.constructive;
        if (r.oracle) *report.oracle_pass += *r.oracle;
        if (!r.agrees()) report.mismatches.push_back(r.coeffs);
    }
    std::sort(report.mismatches.begin(), report.mismatches.end());
    return report;
}

std::string EnumerationReport::summary() const {
    std::string out;
    out += "field: " + field->describe() + "\n";
    out += "n: " + std::to_string(n) + "\n";
    out += "total: " + std::to_string(total) + "\n";
    out += "criterion: " + std::to_string(criterion_pass) + "\n";
    out += "constructive: " + std::to_string(constructive_pass) + "\n";
    out += "oracle: " + (oracle_pass ? std::to_string(*oracle_pass) : std::string("skipped")) + "\n";
    out += "mismatches: " + std::to_string(mismatches.size()) + "\n";
    for (const auto& m : mismatches) out += "mismatch: " + format_vector(*field, m) + "\n";
    out += std::to_string(constructive_pass) + "/" + std::to_string(total) + " decomposable\n";
    return out;
}

std::string EnumerationReport::to_csv() const {
    auto yes_no = [](bool b) { return b ? "true" : "false"; };
    std::string out = "instance,criterion,constructive,oracle\n";
    for (std::size_t i = 0; i < instances.size(); ++i) {
        const auto& r = instances[i];
        out += std::to_string(i) + "," + yes_no(r.criterion) + "," + yes_no(r.constructive) + "," +
               (r.oracle ? yes_no(*r.oracle) : "skipped") + "\n";
    }
    return out;
}

std::string PrescribedInstance::describe() const {
    std::string out = "k=" + std::to_string(k) + " a=" + std::to_string(a) + " d=(";
    for (std::size_t i = 0; i < d.size(); ++i) out += (i ? "," : "") + std::to_string(d[i]);
    out += ") g=(";
    for (std::size_t i = 0; i < g.size(); ++i) out += (i ? "," : "") + std::to_string(g[i]);
    return out + ")";
}

PrescribedReport enumerate_prescribed(std::uint64_t p, std::size_t n, const PrescribedOptions& options) {
    const FieldPtr field = FieldSpec::prime(p);
    if (n < 2) throw Error(ErrorCode::InvalidArgument, "prescribed sweep needs n >= 2");
    if (!(options.sample > 0.0 && options.sample <= 1.0)) {
        throw Error(ErrorCode::InvalidArgument, "sample fraction must lie in (0, 1]");
    }
    detail::matrix_space_size(p, n, options.budget);

    const std::uint64_t d_count = *detail::checked_power(p, n, options.budget);
    const std::uint64_t g_count = *detail::checked_power(p, n - 1, options.budget);
    std::vector<PrescribedInstance> all;
    for (std::size_t k = 1; k < n; ++k) {
        for (std::uint64_t a = 1; a + 2 <= p; ++a) {
            for (std::uint64_t di = 0; di < d_count; ++di) {
                for (std::uint64_t gi = 0; gi < g_count; ++gi) {
                    // g digits ascending: g_0 is the most significant enumeration digit
                    all.push_back({k, a, index_to_coeffs(di, p, n), index_to_coeffs(gi, p, n - 1)});
                }
            }
        }
    }

    PrescribedReport report;
    report.p = p;
    report.n = n;
    report.total_instances = all.size();

    std::vector<std::size_t> chosen(all.size());
    std::iota(chosen.begin(), chosen.end(), 0);
    if (options.sample < 1.0) {
        const auto keep = static_cast<std::size_t>(std::ceil(options.sample * static_cast<double>(all.size())));
        std::mt19937_64 rng(options.seed);
        std::shuffle(chosen.begin(), chosen.end(), rng);
        chosen.resize(std::max<std::size_t>(keep, 1));
        std::sort(chosen.begin(), chosen.end());
    }
    report.searched = chosen.size();

    std::vector<char> found(chosen.size(), 0);
    parallel_for(chosen.size(), options.jobs, [&](std::uint64_t i) {
        const PrescribedInstance& inst = all[chosen[i]];
        const PrescribedTarget target{Polynomial(field, inst.g), inst.k, inst.a, inst.d};
        const auto e = prescribed_charpoly_search(target.modified_companion(field), target, options.budget, 1);
        if (!e) return;
        // re-verify the postcondition independently of the search predicate
        const Matrix dm = target.modified_companion(field).realize();
        found[i] = is_p_potent(*e) && charpoly(dm - *e) == target.target_charpoly(field);
    });
    for (std::size_t i = 0; i < chosen.size(); ++i) {
        if (found[i]) ++report.found;
        else report.failures.push_back(all[chosen[i]]);
    }
    return report;
}

std::string PrescribedReport::summary() const {
    std::string out;
    out += "p: " + std::to_string(p) + "\n";
    out += "n: " + std::to_string(n) + "\n";
    out += "instances: " + std::to_string(total_instances) + "\n";
    out += "searched: " + std::to_string(searched) + "\n";
    out += "found: " + std::to_string(found) + "\n";
    out += "failures: " + std::to_string(failures.size()) + "\n";
    for (const auto& f : failures) out += "failure: " + f.describe() + "\n";
    return out;
}

}  // namespace potnil
