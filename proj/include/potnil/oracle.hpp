#ifndef POTNIL_ORACLE_HPP
#define POTNIL_ORACLE_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "potnil/decompose.hpp"

namespace potnil {

/// First E in row-major lexicographic order with E^p = E and A - E
/// nilpotent, certified. Throws BudgetExceeded when q^{n^2} > budget.
std::optional<Decomposition> brute_force_decompose(const Matrix& a, std::uint64_t budget = kDefaultBudget,
                                                   unsigned jobs = 1);

struct EnumerationOptions {
    std::uint64_t budget = kDefaultBudget;
    unsigned jobs = 1;
    /// Run the brute-force oracle on every instance (needs q^{n^2} <= budget).
    bool with_oracle = true;
};

struct InstanceResult {
    std::vector<Code> coeffs;  // (c_0, ..., c_{n-1})
    bool criterion = false;
    bool constructive = false;
    std::optional<bool> oracle;

    bool agrees() const noexcept {
        return criterion == constructive && (!oracle || *oracle == criterion);
    }
};

struct EnumerationReport {
    FieldPtr field;
    std::size_t n = 0;
    std::uint64_t total = 0;
    std::uint64_t criterion_pass = 0;
    std::uint64_t constructive_pass = 0;
    std::optional<std::uint64_t> oracle_pass;
    /// Coefficient vectors where the three verdicts disagree, sorted.
    std::vector<std::vector<Code>> mismatches;
    /// One row per companion matrix, in enumeration order.
    std::vector<InstanceResult> instances;

    std::string summary() const;
    /// Header `instance,criterion,constructive,oracle`.
    std::string to_csv() const;
};

/**
 * Runs the trace criterion, the constructive decomposer and (optionally) the
 * brute-force oracle on every companion matrix of size n over the field.
 * Coefficient vectors are enumerated with c_0 as the most significant digit.
 */
EnumerationReport enumerate_theorem(const FieldPtr& field, std::size_t n, const EnumerationOptions& options = {});

struct PrescribedInstance {
    std::size_t k;
    std::uint64_t a;
    std::vector<Code> d;
    std::vector<Code> g;  // ascending, deg <= n-2

    std::string describe() const;
};

struct PrescribedOptions {
    std::uint64_t budget = kDefaultBudget;
    unsigned jobs = 1;
    /// Fraction of instances searched, in (0, 1]; 1 is exhaustive.
    double sample = 1.0;
    std::uint64_t seed = 1;
};

struct PrescribedReport {
    std::uint64_t p = 0;
    std::size_t n = 0;
    std::uint64_t total_instances = 0;
    std::uint64_t searched = 0;
    std::uint64_t found = 0;
    std::vector<PrescribedInstance> failures;

    std::string summary() const;
};

/// Every admissible (k, a), d in F_p^n and g of degree <= n-2 (or a seeded
/// sample of them), each checked by prescribed_charpoly_search.
PrescribedReport enumerate_prescribed(std::uint64_t p, std::size_t n, const PrescribedOptions& options = {});

}  // namespace potnil

#endif  // POTNIL_ORACLE_HPP
