#pragma once

#include <string>
#include <vector>

#include "wpat/abacus.hpp"

namespace wpat {

/// A dominant integral weight of sl_r in the fundamental-weight basis:
/// coefficients (a_1, ..., a_{r-1}), all nonnegative.
class DominantWeight {
public:
    DominantWeight() = default;
    explicit DominantWeight(std::vector<Int> coeffs);

    const std::vector<Int>& coeffs() const { return coeffs_; }
    int rank() const { return static_cast<int>(coeffs_.size()) + 1; }
    /// 1-based coefficient access.
    Int coeff(int i) const { return coeffs_.at(static_cast<size_t>(i - 1)); }

    auto operator<=>(const DominantWeight&) const = default;

    /// "[a_1,...,a_{r-1}]"
    std::string str() const;

private:
    std::vector<Int> coeffs_;
};

/// Positive root eps_i - eps_j = alpha_i + ... + alpha_{j-1}, 1 <= i < j <= r.
struct PositiveRoot {
    int i = 1;
    int j = 2;
    auto operator<=>(const PositiveRoot&) const = default;
};

/// All positive roots of A_{r-1} in lexicographic (i, j) order.
std::vector<PositiveRoot> positive_roots(int r);

/// <alpha^vee, w> = a_i + ... + a_{j-1}.
Int pairing(const DominantWeight& w, PositiveRoot root);

/// Shi coefficients of the dominant e-alcove assigned to a weight, indexed
/// by positive roots in lexicographic order.
class ShiVector {
public:
    ShiVector() = default;
    ShiVector(int rank, Int level, std::vector<Int> entries);

    int rank() const { return rank_; }
    Int level() const { return level_; }
    const std::vector<Int>& entries() const { return entries_; }
    Int entry(PositiveRoot root) const;

    auto operator<=>(const ShiVector&) const = default;
    std::string str() const;

private:
    int rank_ = 2;
    Int level_ = 2;
    std::vector<Int> entries_;
};

/// The Shi vector of the alcove assigned to w at level e. For a pairing p:
/// floor(p/e) when e does not divide p; p/e - 1 when e divides p > 0 (a
/// weight on a wall is assigned the alcove on the origin side); 0 when p = 0.
ShiVector shi_vector(const DominantWeight& w, Int e);

/// True iff the assigned e-alcoves of w1 and w2 coincide.
bool same_e_alcove(const DominantWeight& w1, const DominantWeight& w2, Int e);

/// True iff every coefficient is a positive multiple of e, i.e. the weight
/// lies on level-e hyperplanes for all positive roots.
bool is_affine_vertex(const DominantWeight& w, Int e);

/// Omega(lambda) = sum (lambda_i - lambda_{i+1} + 1) Lambda_i, the
/// consecutive differences of the r-beta numbers. Requires r >= 2.
DominantWeight omega(const Partition& lam, int r);
DominantWeight omega(const BetaSequence& bs);

} // namespace wpat
