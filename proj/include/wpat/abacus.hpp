#pragma once

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "wpat/partition.hpp"

namespace wpat {

/// Strictly decreasing sequence of r nonnegative integers; the r-beta
/// numbers of a partition with at most r parts.
class BetaSequence {
public:
    BetaSequence() = default;
    explicit BetaSequence(std::vector<Int> betas);

    const std::vector<Int>& betas() const { return betas_; }
    int rank() const { return static_cast<int>(betas_.size()); }
    /// 1-based access: beta(1) is the largest beta number.
    Int beta(int i) const { return betas_.at(static_cast<size_t>(i - 1)); }

    auto operator<=>(const BetaSequence&) const = default;

private:
    std::vector<Int> betas_;
};

/// beta_i = lambda_i + r - i. Requires r >= length(lambda).
BetaSequence beta_numbers(const Partition& lam, int r);

/// Inverse of beta_numbers at the same rank; trailing zeros trimmed.
Partition partition_of_beta(const BetaSequence& bs);

/// Bead positions on an e-runner abacus. Position = row*e + runner.
struct AbacusConfig {
    Int e = 2;
    std::set<Int> positions;

    int bead_count() const { return static_cast<int>(positions.size()); }
};

enum class BeadMove { up, down, left, right };

AbacusConfig abacus_of(const BetaSequence& bs, Int e);
BetaSequence betas_of_abacus(const AbacusConfig& ab);

/// Moves a single bead to the adjacent position (up: pos-e, down: pos+e,
/// left: pos-1, right: pos+1). Throws if pos holds no bead, the target is
/// occupied, or the move would leave the abacus (up from row 0, left from
/// position 0).
AbacusConfig shift_bead(const AbacusConfig& ab, Int pos, BeadMove move);

/// Text rendering for debugging: e columns, rows downward, one row per
/// line, beads as a filled dot and gaps as a middle dot.
std::string render_text(const AbacusConfig& ab);

/// The e-quotient: one partition per runner, read from the bead row indices.
struct EQuotient {
    std::vector<Partition> components;

    Int total_size() const;
    auto operator<=>(const EQuotient&) const = default;
};

Partition e_core(const Partition& lam, Int e, int r);

/// w_e(lambda) = (|lambda| - |core)|)/e.
Int e_weight(const Partition& lam, Int e, int r);

EQuotient e_quotient(const Partition& lam, Int e, int r);

/// Rebuilds the unique partition with the given e-core and e-quotient at
/// rank r. Throws if core is not an e-core, or if some quotient component
/// has more parts than the core abacus has beads on the matching runner.
Partition from_core_and_quotient(const Partition& core, const EQuotient& q, Int e, int r);

/// If every beta number sits on its own runner (all distinct mod e),
/// returns sum of floor(beta_i / e), which equals the e-weight; otherwise
/// returns nullopt.
std::optional<Int> weight_if_single_bead_runners(const BetaSequence& bs, Int e);

/// Lower bound sum_i i*(ceil((beta_i - beta_{i+1})/e) - 1) <= w_e.
Int weight_lower_bound(const BetaSequence& bs, Int e);

} // namespace wpat
