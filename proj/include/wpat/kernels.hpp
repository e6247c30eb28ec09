#pragma once

#include <cstdint>

#include "wpat/patterns.hpp"

namespace wpat {

/// Independent oracle for W_{r,e,w}: enumerates every strictly decreasing
/// beta sequence beta_1 > ... > beta_r >= 0 with beta_1 < e*(w+r) + extra,
/// keeps those of e-weight w, and collects the Omega images. Returned
/// sorted and duplicate-free. The default bound covers all weights: from
/// the flush core configuration each bead descends at most w rows.
///
/// The serial version is the reference; the unqualified version runs the
/// outer loop under OpenMP and produces identical output.
std::vector<DominantWeight> oracle_weight_set_serial(const GenericTriple& t, Int extra = 0);
std::vector<DominantWeight> oracle_weight_set(const GenericTriple& t, Int extra = 0);

/// Exhaustive check that inserting an empty runner preserves Shi vectors
/// across levels, over all partitions with at most max_parts parts, parts
/// at most max_part, every level in `levels`, and every insertion index.
struct StabilitySweep {
    std::uint64_t cases = 0;
    std::vector<std::string> failures;
    bool pass() const { return failures.empty(); }
};

StabilitySweep shi_stability_sweep_serial(int max_parts, Int max_part,
                                          const std::vector<Int>& levels);
StabilitySweep shi_stability_sweep(int max_parts, Int max_part, const std::vector<Int>& levels);

/// OpenMP variant of block_weights_only: the mu-components are enumerated
/// concurrently and merged; output identical to the serial enumeration.
std::set<DominantWeight> block_weights_parallel(const GenericTriple& t,
                                                bool allow_degenerate = false);

/// Wall-crossing sweep over all labels of Gamma_r(w) for w <= wmax and all
/// defined generators at level e. The serial version is the reference; the
/// unqualified one distributes labels under OpenMP.
struct WallCrossingSweep {
    std::uint64_t crossings = 0;
    std::vector<std::string> failures;
    bool pass() const { return failures.empty(); }
};

WallCrossingSweep wall_crossing_sweep_serial(int r, Int e, Int wmax);
WallCrossingSweep wall_crossing_sweep(int r, Int e, Int wmax);

/// All partitions with at most max_parts parts and every part at most
/// max_part, in lexicographic order of padded part vectors.
std::vector<Partition> partitions_in_box(int max_parts, Int max_part);

} // namespace wpat
