#ifndef QDL_PICARD_LATTICE_HPP
#define QDL_PICARD_LATTICE_HPP

#include <array>
#include <cstdint>

namespace qdl {

/// A divisor class D = a*Delta - sum_i m_i E_i in the rank-10 lattice of
/// the plane blown up at 9 points (signature (1,9), orthogonal basis
/// {Delta, -E_1, ..., -E_9}).  The m-sign convention is chosen so that a
/// certificate decuple (delta, m_1..m_9) embeds verbatim; the exceptional
/// class E_9 is then (0; 0,...,0,-1).
struct DivisorClass {
    std::int64_t a = 0;
    std::array<std::int64_t, 9> m{};

    friend DivisorClass operator+(const DivisorClass& x, const DivisorClass& y);
    friend DivisorClass operator-(const DivisorClass& x, const DivisorClass& y);
    friend DivisorClass operator-(const DivisorClass& x);
    friend DivisorClass operator*(std::int64_t c, const DivisorClass& x);
    friend bool operator==(const DivisorClass& x, const DivisorClass& y) = default;
};

/// Hyperplane class H = (4; 2,1^8): the map to projective 3-space.
DivisorClass class_H();
/// Canonical class K = (-3; -1^9).
DivisorClass class_K();
/// Double-curve preimage Ltilde = -K = (3; 1^9).
DivisorClass class_Ltilde();
/// Delta = (1; 0^9), pullback of a general plane line (nef).
DivisorClass class_Delta();
/// Exceptional class E_i, i in [1,9].
DivisorClass class_E(int i);

/// Intersection pairing: a*a' - sum m_i m_i'.
std::int64_t pair(const DivisorClass& x, const DivisorClass& y);

/// Space degree D.H = 4*delta - 2*m_1 - sum_{i>=2} m_i.
std::int64_t degree(const DivisorClass& d);

/// Adjunction genus (D^2 + D.K)/2 + 1.  Throws parity_error when
/// D^2 + D.K is odd (impossible for integer classes, kept loud anyway).
std::int64_t genus(const DivisorClass& d);

/// r = D.Ltilde = 3*delta - sum m_i, the number of double-line crossings.
std::int64_t r_intersections(const DivisorClass& d);

/// Euler characteristic by Riemann-Roch: 1 + (D^2 - D.K)/2.
std::int64_t chi(const DivisorClass& d);

/// True iff D.Delta < 0, which certifies h^0(D) = 0 (Delta is nef).
bool delta_degree_obstruction(const DivisorClass& d);

/// Skiti's vanishing criterion.  Writing L = (a; b_1..b_9) with the b's
/// sorted descending: h^1(L) = 0 is certified when a > b_1 >= ... >= b_9,
/// a >= b_1 + b_2 + b_3, L.Ltilde > 0 and b_9 >= -1.
bool h1_vanishes_skiti(const DivisorClass& l);

/// Flags of the smooth-curve existence test for D = (delta; m_1..m_9):
///   cond1  delta >= m_1 + m_2 + m_3
///   cond2  m_1 > m_2 >= ... >= m_9 >= 1
///   cond3  r >= 3
///   condB  delta > 13      (kills h^0(4H - Ltilde - C))
///   condC  delta > 28      (kills h^0(7H - C))
///   condD  m_9 >= 4, m_1 >= m_2 + 4, r >= 9, delta > m_1 + 10
///                          (kills h^1(4H - C) via Skiti)
struct Prop312Report {
    bool cond1 = false;
    bool cond2 = false;
    bool cond3 = false;
    bool condB = false;
    bool condC = false;
    bool condD = false;
    std::int64_t d = 0;
    std::int64_t g = 0;
    std::int64_t r = 0;

    bool all() const { return cond1 && cond2 && cond3 && condB && condC && condD; }
};

/// Evaluate all flags plus the derived (d, g, r).  When the full
/// hypothesis set (cond1-3 and condD) holds, the Skiti criterion applied to
/// -Ltilde - 4H + D is re-checked; a failure there is an arithmetic bug
/// and raises internal_invariant_error.
Prop312Report check_prop312(const DivisorClass& d);

} // namespace qdl

#endif
