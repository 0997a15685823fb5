#ifndef QDL_LINE_IDEAL_COUNTS_HPP
#define QDL_LINE_IDEAL_COUNTS_HPP

#include <cstdint>

namespace qdl {

/// Number of degree-n monomials X0^a X1^b X2^c X3^e with a + b >= k, i.e.
/// sections of the k-th power of the ideal of the line X0 = X1 = 0 twisted
/// by n.  Computed both by direct enumeration and by the closed form
/// C(n+3,3) - sum_{j<k} (j+1)(n-j+1); the two must agree.
std::int64_t h0_line_ideal(std::int64_t n, std::int64_t k);

/// Sections of the conormal bundle of a line twisted by n: two copies of
/// the degree-(n-1) forms on the line, so 2n.  Requires n >= 1.
std::int64_t h0_conormal_twist(std::int64_t n);

/// Tangent dimension of the space of (line, quartic-with-that-double-line)
/// pairs: 4 (the Grassmannian of lines) + projective dimension of the
/// quartics double along a fixed line = 4 + (h0_line_ideal(4,2) - 1) = 25.
std::int64_t tangent_dim_Q();

} // namespace qdl

#endif
