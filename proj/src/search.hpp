#ifndef POTNIL_SRC_SEARCH_HPP
#define POTNIL_SRC_SEARCH_HPP

// Internal helpers for exhaustive enumeration of matrices.

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <limits>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include "potnil/error.hpp"
#include "potnil/matrix.hpp"

namespace potnil::detail {

/// base^exp, or nullopt when it exceeds `cap`.
inline std::optional<std::uint64_t> checked_power(std::uint64_t base, std::uint64_t exp, std::uint64_t cap) {
    std::uint64_t r = 1;
    for (std::uint64_t i = 0; i < exp; ++i) {
        if (r > cap / base) return std::nullopt;
        r *= base;
    }
    return r;
}

/// q^{n^2}, throwing BudgetExceeded above `budget`.
inline std::uint64_t matrix_space_size(std::uint64_t q, std::size_t n, std::uint64_t budget) {
    auto total = checked_power(q, static_cast<std::uint64_t>(n) * n, budget);
    if (!total) {
        throw Error(ErrorCode::BudgetExceeded, "search space " + std::to_string(q) + "^" + std::to_string(n * n) +
                                                   " exceeds the budget of " + std::to_string(budget) +
                                                   " candidate matrices");
    }
    return *total;
}

/// The index-th n x n matrix in row-major lexicographic order: entry (0,0) is
/// the most significant base-q digit.
inline Matrix matrix_at_index(const FieldPtr& field, std::size_t n, std::uint64_t index) {
    const std::uint64_t q = field->order();
    std::vector<Code> entries(n * n, 0);
    for (std::size_t i = entries.size(); i-- > 0;) {
        entries[i] = index % q;
        index /= q;
    }
    return Matrix(field, n, n, std::move(entries));
}

/**
 * Smallest index in [0, total) satisfying pred, or nullopt. Work is split in
 * contiguous chunks across `jobs` threads; a worker stops once a smaller hit
 * is known, so the answer does not depend on the thread count.
 */
template <class Pred>
std::optional<std::uint64_t> first_hit(std::uint64_t total, unsigned jobs, const Pred& pred) {
    constexpr std::uint64_t none = std::numeric_limits<std::uint64_t>::max();
    jobs = std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(std::min<std::uint64_t>(total, 256))));
    if (jobs <= 1) {
        for (std::uint64_t i = 0; i < total; ++i) {
            if (pred(i)) return i;
        }
        return std::nullopt;
    }
    std::atomic<std::uint64_t> best{none};
    const std::uint64_t chunk = (total + jobs - 1) / jobs;
    std::vector<std::thread> workers;
    for (unsigned w = 0; w < jobs; ++w) {
        workers.emplace_back([&, w] {
            const std::uint64_t begin = w * chunk;
            const std::uint64_t end = std::min(total, begin + chunk);
            for (std::uint64_t i = begin; i < end; ++i) {
                if (i >= best.load(std::memory_order_relaxed)) return;
                if (pred(i)) {
                    std::uint64_t cur = best.load();
                    while (i < cur && !best.compare_exchange_weak(cur, i)) {
                    }
                    return;
                }
            }
        });
    }
    for (auto& t : workers) t.join();
    const std::uint64_t hit = best.load();
    if (hit == none) return std::nullopt;
    return hit;
}

}  // namespace potnil::detail

#endif  // POTNIL_SRC_SEARCH_HPP
