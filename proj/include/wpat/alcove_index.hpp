#pragma once

#include <optional>

#include "wpat/report.hpp"
#include "wpat/weights.hpp"

namespace wpat {

/// Dominant e-alcoves meeting W_{r,e,w} are indexed by the weak
/// compositions of w of length r; entry t is the bead row on the t-th
/// nonempty runner of the single-bead-per-runner configuration.

/// All labels, i.e. weak compositions of w of length r, in lexicographic
/// order; there are C(w+r-1, r-1) of them.
std::vector<WeakComposition> enumerate_labels(int r, Int w);

/// The label of the fundamental e-alcove: with w = r*m + n (0 <= n < r),
/// n entries equal to m+1 followed by r-n entries equal to m.
WeakComposition fundamental_label(int r, Int w);

/// The Shi vector of the alcove carrying the label: place bead t at row
/// label_t of runner e-r+t-1, apply Omega, and read the Shi vector. The
/// constructed weight lies strictly inside the alcove. Requires e > r.
ShiVector label_to_shi(const WeakComposition& label, Int e);

/// Partial right action of the affine Weyl group generator sigma_g on
/// labels. For 1 <= g <= r-1 the entries g and g+1 swap; sigma_0 maps
/// (m_1, ..., m_r) to (m_r + 1, m_2, ..., m_{r-1}, m_1 - 1) and is defined
/// only when m_1 >= 1 (nullopt otherwise).
std::optional<WeakComposition> apply_generator(const WeakComposition& label, int g);

/// Checks that crossing the wall matches the label action: the two Shi
/// vectors are identical exactly in the fixed-point cases, and otherwise
/// differ in exactly one coordinate, by exactly 1.
CheckReport verify_wall_crossing(const WeakComposition& label, int g, Int e);

} // namespace wpat
