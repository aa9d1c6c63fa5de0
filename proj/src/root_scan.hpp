#pragma once

// Grid scan + bisection shared by the curve and family solvers.

#include "qpdeg/errors.hpp"

#include <cmath>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace qpdeg::detail {

struct Bracket {
    double lo;
    double hi;
    double f_lo;
};

// Refine a sign change of f on [lo, hi] until the midpoint no longer moves.
template <typename F>
double bisect(F&& f, Bracket b, int max_steps) {
    if (b.lo == b.hi) {
        return b.lo;
    }
    double lo = b.lo;
    double hi = b.hi;
    double f_lo = b.f_lo;
    for (int step = 0; step < max_steps; ++step) {
        const double mid = 0.5 * (lo + hi);
        if (mid <= lo || mid >= hi) {
            break;
        }
        const double f_mid = f(mid);
        if (f_mid == 0.0) {
            return mid;
        }
        if (std::signbit(f_mid) == std::signbit(f_lo)) {
            lo = mid;
            f_lo = f_mid;
        } else {
            hi = mid;
        }
    }
    return 0.5 * (lo + hi);
}

// Evaluates f on `points` (points where f returns nullopt are skipped) and
// collects every exact zero and sign change between neighbours.
template <typename F>
std::vector<Bracket> scan_sign_changes(F&& f, const std::vector<double>& points) {
    std::vector<Bracket> found;
    std::optional<Bracket> prev; // reuse {x, x, f(x)}
    for (const double x : points) {
        const std::optional<double> fx = f(x);
        if (!fx) {
            continue;
        }
        if (*fx == 0.0) {
            found.push_back({x, x, 0.0});
        } else if (prev && prev->f_lo != 0.0 && std::signbit(prev->f_lo) != std::signbit(*fx)) {
            found.push_back({prev->lo, x, prev->f_lo});
        }
        prev = Bracket{x, x, *fx};
    }
    return found;
}

// Inclusive uniform grid of `count` points on [lo, hi]; the last point is hi exactly.
inline std::vector<double> uniform_grid(double lo, double hi, std::size_t count) {
    std::vector<double> grid(count);
    const double last = static_cast<double>(count - 1);
    for (std::size_t i = 0; i < count; ++i) {
        grid[i] = lo + (hi - lo) * (static_cast<double>(i) / last);
    }
    grid.back() = hi;
    return grid;
}

// At most one bracket is acceptable; several mean the uniqueness assumption failed.
inline std::optional<Bracket> unique_bracket(const std::vector<Bracket>& found, const std::string& what) {
    if (found.empty()) {
        return std::nullopt;
    }
    if (found.size() > 1) {
        std::string where;
        for (const auto& b : found) {
            where += " [" + std::to_string(b.lo) + ", " + std::to_string(b.hi) + "]";
        }
        throw ConsistencyError(what + ": " + std::to_string(found.size()) + " roots found near" + where);
    }
    return found.front();
}

} // namespace qpdeg::detail
