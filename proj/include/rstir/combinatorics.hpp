#pragma once

#include <functional>
#include <vector>

namespace rstir {

// Calls f(v) for every v in N0^parts with sum == total and v[i] >= min_part,
// in lexicographic order.
inline void for_each_composition(long total, long parts, long min_part,
                                 const std::function<void(const std::vector<long>&)>& f) {
    if (parts == 0) {
        if (total == 0) f({});
        return;
    }
    if (total < parts * min_part) return;
    std::vector<long> v(static_cast<std::size_t>(parts), min_part);
    std::function<void(long, long)> rec = [&](long idx, long left) {
        if (idx == parts - 1) {
            v[idx] = left;
            f(v);
            return;
        }
        long rest_min = (parts - 1 - idx) * min_part;
        for (long x = min_part; x + rest_min <= left; ++x) {
            v[idx] = x;
            rec(idx + 1, left - x);
        }
    };
    rec(0, total);
}

// Vectors in N0^parts with sum <= total, lexicographic.
inline void for_each_bounded_vector(long total, long parts,
                                    const std::function<void(const std::vector<long>&)>& f) {
    std::vector<long> v(static_cast<std::size_t>(parts), 0);
    std::function<void(long, long)> rec = [&](long idx, long left) {
        if (idx == parts) {
            f(v);
            return;
        }
        for (long x = 0; x <= left; ++x) {
            v[idx] = x;
            rec(idx + 1, left - x);
        }
        v[idx] = 0;
    };
    rec(0, total);
}

}  // namespace rstir
