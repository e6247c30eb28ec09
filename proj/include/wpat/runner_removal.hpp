#pragma once

#include "wpat/report.hpp"
#include "wpat/weights.hpp"

namespace wpat {

/// Insertion of one empty runner immediately to the left of runner k of an
/// e-runner abacus read at rank r.
struct RunnerInsertion {
    Int e = 2;
    int r = 1;
    Int k = 0;
};

/// lambda^+: decompose each beta number as beta = a*e + b (0 <= b < e) and
/// map it to a*(e+1) + b + [b >= k].
Partition insert_empty_runner(const Partition& lam, const RunnerInsertion& ins);

/// Checks that Omega(lambda) at level e and Omega(lambda^+) at level e+1
/// have identical Shi coefficients for every positive root.
CheckReport verify_shi_stability(const Partition& lam, const RunnerInsertion& ins);

/// Checks the runner-insertion pair statement at the combinatorial level:
/// hypotheses (same e-core and e-weight, mu e-regular), then Shi stability
/// of both partitions, (e+1)-regularity of mu^+, and that lambda^+ and mu^+
/// share their (e+1)-core and (e+1)-weight. When a hypothesis fails the
/// report stops there.
CheckReport verify_theorem_pair(const Partition& lam, const Partition& mu,
                                const RunnerInsertion& ins);

} // namespace wpat
