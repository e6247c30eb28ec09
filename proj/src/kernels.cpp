#include "wpat/kernels.hpp"

#include <algorithm>
#include <functional>

#include "wpat/alcove_index.hpp"
#include "wpat/runner_removal.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace wpat {

namespace {

// e-weight of a beta sequence without building partitions: total row index
// minus the flush row sum per runner.
Int beta_e_weight(const std::vector<Int>& betas, Int e, std::vector<Int>& runner_count) {
    std::fill(runner_count.begin(), runner_count.end(), 0);
    Int rows = 0;
    for (Int b : betas) {
        rows += b / e;
        ++runner_count[static_cast<size_t>(b % e)];
    }
    for (Int c : runner_count) rows -= c * (c - 1) / 2;
    return rows;
}

// Collects Omega images of all beta sequences with first entry `first` and
// e-weight w into `out` (as raw coefficient vectors).
void collect_for_first(const GenericTriple& t, Int first, std::vector<std::vector<Int>>& out) {
    std::vector<Int> betas(static_cast<size_t>(t.r));
    std::vector<Int> runner_count(static_cast<size_t>(t.e));
    betas[0] = first;
    std::function<void(int)> rec = [&](int i) {
        if (i == t.r) {
            if (beta_e_weight(betas, t.e, runner_count) == t.w) {
                std::vector<Int> coeffs(static_cast<size_t>(t.r - 1));
                for (int m = 0; m + 1 < t.r; ++m)
                    coeffs[static_cast<size_t>(m)] =
                        betas[static_cast<size_t>(m)] - betas[static_cast<size_t>(m + 1)];
                out.push_back(std::move(coeffs));
            }
            return;
        }
        for (Int b = betas[static_cast<size_t>(i - 1)] - 1; b >= t.r - 1 - i; --b) {
            betas[static_cast<size_t>(i)] = b;
            rec(i + 1);
        }
    };
    rec(1);
}

std::vector<DominantWeight> finish(std::vector<std::vector<Int>> raw) {
    std::sort(raw.begin(), raw.end());
    raw.erase(std::unique(raw.begin(), raw.end()), raw.end());
    std::vector<DominantWeight> out;
    out.reserve(raw.size());
    for (auto& coeffs : raw) out.emplace_back(std::move(coeffs));
    return out;
}

} // namespace

std::vector<DominantWeight> oracle_weight_set_serial(const GenericTriple& t, Int extra) {
    if (!t.is_generic()) throw std::invalid_argument("triple is not generic (need e > r >= 3)");
    const Int bound = t.e * (t.w + t.r) + extra;
    std::vector<std::vector<Int>> raw;
    for (Int first = t.r - 1; first <= bound; ++first) collect_for_first(t, first, raw);
    return finish(std::move(raw));
}

std::vector<DominantWeight> oracle_weight_set(const GenericTriple& t, Int extra) {
    if (!t.is_generic()) throw std::invalid_argument("triple is not generic (need e > r >= 3)");
    const Int bound = t.e * (t.w + t.r) + extra;
    const Int lo = t.r - 1;
    std::vector<std::vector<Int>> raw;
#pragma omp parallel
    {
        std::vector<std::vector<Int>> local;
#pragma omp for schedule(dynamic, 4) nowait
        for (Int first = lo; first <= bound; ++first) collect_for_first(t, first, local);
#pragma omp critical
        raw.insert(raw.end(), std::make_move_iterator(local.begin()),
                   std::make_move_iterator(local.end()));
    }
    return finish(std::move(raw));
}

std::vector<Partition> partitions_in_box(int max_parts, Int max_part) {
    std::vector<Partition> out;
    std::vector<Int> parts;
    std::function<void(Int)> rec = [&](Int cap) {
        out.emplace_back(parts);
        if (static_cast<int>(parts.size()) == max_parts) return;
        for (Int p = cap; p >= 1; --p) {
            parts.push_back(p);
            rec(p);
            parts.pop_back();
        }
    };
    rec(max_part);
    std::sort(out.begin(), out.end());
    return out;
}

namespace {

StabilitySweep run_sweep(int max_parts, Int max_part, const std::vector<Int>& levels,
                         bool parallel) {
    if (max_parts < 2) throw std::invalid_argument("need at least two rows for weights");
    const auto box = partitions_in_box(max_parts, max_part);
    StabilitySweep sweep;

    const auto check_one = [&](const Partition& lam, std::vector<std::string>& failures) {
        Int cases = 0;
        for (Int e : levels) {
            for (Int k = 0; k < e; ++k) {
                const auto report = verify_shi_stability(lam, {e, max_parts, k});
                ++cases;
                if (!report.pass)
                    failures.insert(failures.end(), report.witnesses.begin(),
                                    report.witnesses.end());
            }
        }
        return cases;
    };

    if (!parallel) {
        for (const auto& lam : box) sweep.cases += static_cast<std::uint64_t>(
            check_one(lam, sweep.failures));
        return sweep;
    }

    const auto n = static_cast<long long>(box.size());
    std::vector<std::vector<std::string>> failures(box.size());
    std::uint64_t cases = 0;
#pragma omp parallel for schedule(dynamic, 16) reduction(+ : cases)
    for (long long i = 0; i < n; ++i)
        cases += static_cast<std::uint64_t>(
            check_one(box[static_cast<size_t>(i)], failures[static_cast<size_t>(i)]));
    sweep.cases = cases;
    for (auto& f : failures)
        sweep.failures.insert(sweep.failures.end(), std::make_move_iterator(f.begin()),
                              std::make_move_iterator(f.end()));
    return sweep;
}

} // namespace

StabilitySweep shi_stability_sweep_serial(int max_parts, Int max_part,
                                          const std::vector<Int>& levels) {
    return run_sweep(max_parts, max_part, levels, false);
}

StabilitySweep shi_stability_sweep(int max_parts, Int max_part, const std::vector<Int>& levels) {
    return run_sweep(max_parts, max_part, levels, true);
}

std::set<DominantWeight> block_weights_parallel(const GenericTriple& t, bool allow_degenerate) {
    if (!allow_degenerate && !t.is_generic())
        throw std::invalid_argument("triple is not generic (need e > r >= 3)");
    const auto comps = compositions_of(t.r);
    const auto n = static_cast<long long>(comps.size());
    std::vector<std::set<DominantWeight>> parts(comps.size());
#pragma omp parallel for schedule(dynamic)
    for (long long i = 0; i < n; ++i)
        parts[static_cast<size_t>(i)] = component_weights(t, comps[static_cast<size_t>(i)]);
    std::set<DominantWeight> out;
    for (auto& part : parts) {
        for (const auto& w : part)
            if (!out.insert(w).second)
                throw std::logic_error("duplicate weight across components");
    }
    return out;
}

namespace {

WallCrossingSweep run_wall_sweep(int r, Int e, Int wmax, bool parallel) {
    WallCrossingSweep sweep;
    std::vector<WeakComposition> labels;
    for (Int w = 0; w <= wmax; ++w) {
        const auto batch = enumerate_labels(r, w);
        labels.insert(labels.end(), batch.begin(), batch.end());
    }
    const auto n = static_cast<long long>(labels.size());
    std::vector<std::vector<std::string>> failures(labels.size());
    std::uint64_t crossings = 0;

    const auto check_label = [&](const WeakComposition& label, std::vector<std::string>& out) {
        Int done = 0;
        for (int g = 0; g < r; ++g) {
            if (!apply_generator(label, g)) continue;
            const auto report = verify_wall_crossing(label, g, e);
            ++done;
            if (!report.pass)
                out.insert(out.end(), report.witnesses.begin(), report.witnesses.end());
        }
        return done;
    };

    if (parallel) {
#pragma omp parallel for schedule(dynamic, 8) reduction(+ : crossings)
        for (long long i = 0; i < n; ++i)
            crossings += static_cast<std::uint64_t>(
                check_label(labels[static_cast<size_t>(i)], failures[static_cast<size_t>(i)]));
    } else {
        for (long long i = 0; i < n; ++i)
            crossings += static_cast<std::uint64_t>(
                check_label(labels[static_cast<size_t>(i)], failures[static_cast<size_t>(i)]));
    }
    sweep.crossings = crossings;
    for (auto& f : failures)
        sweep.failures.insert(sweep.failures.end(), std::make_move_iterator(f.begin()),
                              std::make_move_iterator(f.end()));
    return sweep;
}

} // namespace

WallCrossingSweep wall_crossing_sweep_serial(int r, Int e, Int wmax) {
    return run_wall_sweep(r, e, wmax, false);
}

WallCrossingSweep wall_crossing_sweep(int r, Int e, Int wmax) {
    return run_wall_sweep(r, e, wmax, true);
}

} // namespace wpat
