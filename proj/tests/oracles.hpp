#pragma once

// Test-only oracles. These stay independent of the library code paths they
// check: the e-weight oracle counts actual bead slides, and the
// multipartition oracle builds tuples through a different generator.

#include <random>
#include <vector>

#include "wpat/abacus.hpp"
#include "wpat/partition.hpp"

namespace wpat::testing {

/// e-weight by definition: repeatedly slide any bead one row up into a gap
/// until no move is possible, counting the moves.
Int sliding_e_weight(const Partition& lam, Int e, int r);

/// All tuples of partitions with total size w and per-slot length bounds,
/// assembled by an odometer over independently generated slot candidates.
/// Returned as raw part vectors, unordered.
std::vector<std::vector<std::vector<Int>>> brute_multipartitions(const std::vector<Int>& bounds,
                                                                 Int w);

/// Random partition with at most max_parts parts, each at most max_part.
Partition random_partition(std::mt19937& rng, int max_parts, Int max_part);

} // namespace wpat::testing
