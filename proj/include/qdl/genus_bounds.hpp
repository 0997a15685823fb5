#ifndef QDL_GENUS_BOUNDS_HPP
#define QDL_GENUS_BOUNDS_HPP

#include <cstdint>
#include <string>

namespace qdl {

/// Classification of a (d, g) pair.
///
/// A: 95 <= d <= 146,  G(d,8) < g  and  2g <= 73(d-74)
/// B: d >= 147,        G(d,8) < g  and  8g <= (d-1)^2
enum class Region { A, B, Outside };

std::string to_string(Region r);

/// Maximal genus G(d, s) of smooth connected space curves of degree d not
/// lying on a surface of degree s-1.  Closed form, valid for d > s(s-1);
/// the rational expression is evaluated over scaled integers and must come
/// out integral.
///
/// Throws domain_error when d <= s(s-1) or s < 2, internal_invariant_error
/// if the formula fails to produce an integer.
std::int64_t gmax(std::int64_t d, std::int64_t s);

/// Twice the parabola F_d:  fd2(d, x) = (x-1)(d-x) = 2*F_d(x).
/// Doubled so that half-integral values of F_d stay exact.
std::int64_t fd2(std::int64_t d, std::int64_t x);

/// Region membership of (d, g).  All comparisons are done on scaled
/// integers (2g vs 73(d-74), 8g vs (d-1)^2) -- no floors, no floats.
Region region_of(std::int64_t d, std::int64_t g);

} // namespace qdl

#endif
