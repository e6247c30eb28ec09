#include "wpat/runner_removal.hpp"

#include <sstream>

namespace wpat {

namespace {

void validate(const RunnerInsertion& ins) {
    if (ins.e < 2) throw std::invalid_argument("e must be at least 2");
    if (ins.k < 0 || ins.k >= ins.e)
        throw std::invalid_argument("runner index must lie in [0, e-1]");
}

} // namespace

Partition insert_empty_runner(const Partition& lam, const RunnerInsertion& ins) {
    validate(ins);
    const auto bs = beta_numbers(lam, ins.r);
    std::vector<Int> betas;
    betas.reserve(static_cast<size_t>(ins.r));
    for (Int beta : bs.betas()) {
        const Int a = beta / ins.e;
        const Int b = beta % ins.e;
        betas.push_back(a * (ins.e + 1) + b + (b >= ins.k ? 1 : 0));
    }
    // The map is strictly increasing in beta, so the order is preserved.
    return partition_of_beta(BetaSequence(std::move(betas)));
}

CheckReport verify_shi_stability(const Partition& lam, const RunnerInsertion& ins) {
    validate(ins);
    if (ins.r < 2) throw std::invalid_argument("rank must be at least 2");
    CheckReport report{"shi-stability"};
    const auto plus = insert_empty_runner(lam, ins);
    const auto before = shi_vector(omega(lam, ins.r), ins.e);
    const auto after = shi_vector(omega(plus, ins.r), ins.e + 1);
    if (before.entries() != after.entries()) {
        const auto roots = positive_roots(ins.r);
        for (size_t i = 0; i < roots.size(); ++i) {
            if (before.entries()[i] == after.entries()[i]) continue;
            std::ostringstream os;
            os << "lambda=(" << lam.str() << ") e=" << ins.e << " k=" << ins.k << " root ("
               << roots[i].i << ',' << roots[i].j << "): level-" << ins.e << " coefficient "
               << before.entries()[i] << " vs level-" << (ins.e + 1) << " coefficient "
               << after.entries()[i];
            report.fail(os.str());
        }
    }
    return report;
}

CheckReport verify_theorem_pair(const Partition& lam, const Partition& mu,
                                const RunnerInsertion& ins) {
    validate(ins);
    CheckReport report{"runner-removal-pair"};
    if (ins.r < lam.length() || ins.r < mu.length())
        throw std::invalid_argument("rank must cover both partitions");

    bool hypotheses_ok = true;
    if (e_core(lam, ins.e, ins.r) != e_core(mu, ins.e, ins.r) ||
        e_weight(lam, ins.e, ins.r) != e_weight(mu, ins.e, ins.r)) {
        report.fail("hypothesis: partitions do not lie in the same block (core or weight differ)");
        hypotheses_ok = false;
    }
    if (!is_e_regular(mu, ins.e)) {
        report.fail("hypothesis: second partition is not e-regular");
        hypotheses_ok = false;
    }
    if (!hypotheses_ok) return report;

    const auto stab_lam = verify_shi_stability(lam, ins);
    const auto stab_mu = verify_shi_stability(mu, ins);
    for (const auto& w : stab_lam.witnesses) report.fail(w);
    for (const auto& w : stab_mu.witnesses) report.fail(w);
    if (!stab_lam.pass || !stab_mu.pass) report.pass = false;

    const auto lam_plus = insert_empty_runner(lam, ins);
    const auto mu_plus = insert_empty_runner(mu, ins);
    if (!is_e_regular(mu_plus, ins.e + 1))
        report.fail("inserted partition mu+ is not (e+1)-regular");
    if (e_core(lam_plus, ins.e + 1, ins.r) != e_core(mu_plus, ins.e + 1, ins.r) ||
        e_weight(lam_plus, ins.e + 1, ins.r) != e_weight(mu_plus, ins.e + 1, ins.r))
        report.fail("lambda+ and mu+ do not lie in the same (e+1)-block");

    if (report.pass)
        report.note(
            "alcove-level statement verified: both weights keep their Shi vectors across "
            "levels, mu+ stays regular, and the pair stays in one block; the equality of "
            "graded decomposition numbers follows via the Kazhdan-Lusztig identification, "
            "which is outside this library");
    return report;
}

} // namespace wpat
