#include "qdl/genus_bounds.hpp"

#include "qdl/checked.hpp"
#include "qdl/errors.hpp"

namespace qdl {

std::string to_string(Region r) {
    switch (r) {
        case Region::A: return "A";
        case Region::B: return "B";
        default: return "Outside";
    }
}

std::int64_t gmax(std::int64_t d, std::int64_t s) {
    if (s < 2) throw domain_error("gmax: s must be >= 2");
    require_bounded(d, "gmax: d");
    require_bounded(s, "gmax: s");
    if (d <= mul64(s, s - 1))
        throw domain_error("gmax: requires d > s(s-1)");

    // G(d,s) = [d^2 + s(s-4)d + 2s - (s-1)v(s-v)] / (2s),  v = d mod s.
    std::int64_t nu = d % s; // d > 0 here, so this is the true residue
    std::int64_t num = add64(mul64(d, d), mul64(mul64(s, s - 4), d));
    num = add64(num, 2 * s);
    num = sub64(num, mul64(mul64(s - 1, nu), s - nu));
    std::int64_t den = 2 * s;
    if (num % den != 0)
        throw internal_invariant_error("gmax: formula did not evaluate to an integer");
    return num / den;
}

std::int64_t fd2(std::int64_t d, std::int64_t x) {
    require_bounded(d, "fd2: d");
    require_bounded(x, "fd2: x");
    return mul64(x - 1, d - x);
}

Region region_of(std::int64_t d, std::int64_t g) {
    require_bounded(d, "region_of: d");
    require_bounded(g, "region_of: g");
    if (d < 95) return Region::Outside;
    if (g <= gmax(d, 8)) return Region::Outside;
    if (d <= 146) {
        // 2g <= 73(d-74), compared exactly (the right side is odd for odd d)
        if (mul64(2, g) <= mul64(73, d - 74)) return Region::A;
        return Region::Outside;
    }
    if (mul64(8, g) <= mul64(d - 1, d - 1)) return Region::B;
    return Region::Outside;
}

} // namespace qdl
