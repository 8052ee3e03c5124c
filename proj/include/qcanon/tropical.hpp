#pragma once

// Piecewise-linear label maps in min-plus arithmetic: the A2 and B2 maps,
// their increment/relabel compositions with the closed-form case splits,
// and the braid-move chain for simply-laced words.

#include <array>
#include <vector>

#include "qcanon/cartan.hpp"

namespace qcanon {

using Trop3 = std::array<long, 3>;
using Trop4 = std::array<long, 4>;

/// (c2 + c3 - m, m, c1 + c2 - m), m = min(c1, c3). An involution.
Trop3 phi_a2(const Trop3& x);

/// Label change from (1,2,1,2) to (2,1,2,1) for B2.
Trop4 phi_b2(const Trop4& x);
Trop4 phi_b2_inv(const Trop4& x);

/// x -> x + e_1.
template <std::size_t N>
std::array<long, N> inc(std::array<long, N> x) {
  ++x[0];
  return x;
}

/// phi^-1(phi(x) + e_1) for A2, by cases.
Trop3 a2_shift(const Trop3& x);

/// Which form of the second guard of the B2 case split to use. The two
/// printed forms differ by the sign of the min(a, c) term.
enum class ShiftGuard { Quotient, Product };

struct CaseResult {
  int which = 0;  // 1-based case number
  int fired = 0;  // number of guards that held
  Trop4 value{};
};

/// phi_b2_inv(phi_b2(x) + e_1) by the three-way case split.
CaseResult b2_shift_cases(const Trop4& x, ShiftGuard g = ShiftGuard::Quotient);
/// phi_b2(phi_b2_inv(x) + e_1) by the four-way case split.
CaseResult b2_inverse_shift_cases(const Trop4& x);

enum class Side { H, HPrime };
/// Relabel to the other word, raise the first exponent, relabel back.
Trop4 bullet_ops(const Trop4& c, Side side);

/// Image of the label c under the braid moves of a shortest path from h to
/// target: the A2 map on a three-letter move, a swap on a commutation.
std::vector<long> pl_chain(const CartanDatum& d, const Word& h, const Word& target, const std::vector<long>& c);
/// Same along an explicit sequence of moves.
std::vector<long> pl_along(const CartanDatum& d, Word h, const std::vector<BraidMove>& path, std::vector<long> c);

}  // namespace qcanon
