#pragma once

#include "segcalc/segments.hpp"

#include <memory>
#include <set>
#include <string>
#include <vector>

namespace segcalc::testing {

/// A self-dual line S, a dual pair A/A*, and a self-dual line T with k=2.
inline std::shared_ptr<const LineRegistry> standard_lines(int l = 1) {
    return LineRegistry::build({
        {"A", 1, l, "A*", Sign::plus()},
        {"A*", 1, l, "A", Sign::plus()},
        {"S", 1, l, "S", Sign::minus()},
        {"T", 2, 2, "T", Sign::plus()},
    });
}

/// Point set of a segment, independent of the interval formulas.
inline std::set<int> points(int a, int b, int step = 1) {
    std::set<int> out;
    for (int x = a; x <= b; x += step) out.insert(x);
    return out;
}

/// Linkedness from point sets: union is a lattice interval and neither set
/// contains the other.
inline bool sets_linked(const std::set<int>& x, const std::set<int>& y, int step = 1) {
    std::set<int> u = x;
    u.insert(y.begin(), y.end());
    for (auto it = u.begin(); std::next(it) != u.end(); ++it)
        if (*std::next(it) - *it != step) return false;
    auto subset = [](const std::set<int>& p, const std::set<int>& q) {
        for (int v : p)
            if (!q.contains(v)) return false;
        return true;
    };
    return !subset(x, y) && !subset(y, x);
}

}  // namespace segcalc::testing
