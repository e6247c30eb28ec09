#include "wpat/patterns.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <sstream>

namespace wpat {

namespace {

void require_generic(const GenericTriple& t, bool allow_degenerate) {
    if (t.w < 0) throw std::invalid_argument("e-weight must be nonnegative");
    if (!allow_degenerate && !t.is_generic())
        throw std::invalid_argument("triple is not generic (need e > r >= 3)");
}

DominantWeight weight_from_multipliers(std::span<const Int> a, Int e) {
    std::vector<Int> coeffs(a.size());
    for (size_t i = 0; i < a.size(); ++i) coeffs[i] = a[i] * e;
    return DominantWeight(std::move(coeffs));
}

// sum i*(a_i - 1) for the vertex condition.
Int vertex_defect(std::span<const Int> a) {
    Int s = 0;
    for (size_t i = 0; i < a.size(); ++i) s += static_cast<Int>(i + 1) * (a[i] - 1);
    return s;
}

// True iff the weight lies on no level-e hyperplane.
bool strictly_inside_alcove(const DominantWeight& w, Int e) {
    for (const auto& root : positive_roots(w.rank()))
        if (pairing(w, root) % e == 0) return false;
    return true;
}

} // namespace

void BlockWeightSet::insert(DominantWeight w, ComponentKey key) {
    auto [it, inserted] = entries_.emplace(std::move(w), std::move(key));
    if (!inserted)
        throw std::logic_error("duplicate weight in block weight enumeration: " + it->first.str());
}

std::set<DominantWeight> BlockWeightSet::weight_set() const {
    std::set<DominantWeight> out;
    for (const auto& [w, key] : entries_) out.insert(w);
    return out;
}

namespace {

// Bead rows per nonempty runner: the mu_i-beta numbers of the i-th
// restricted quotient component.
std::vector<std::vector<Int>> bead_rows(const Composition& mu, const MultiPartition& q) {
    const int j = mu.length();
    std::vector<std::vector<Int>> rows(static_cast<size_t>(j));
    for (int i = 1; i <= j; ++i) {
        const Int count = mu.part(i);
        auto& r = rows[static_cast<size_t>(i - 1)];
        for (Int m = 1; m <= count; ++m)
            r.push_back(q.component(i).part(static_cast<int>(m)) + count - m);
    }
    return rows;
}

BetaSequence place_beads(const GenericTriple& t, const std::vector<std::vector<Int>>& rows,
                         std::span<const Int> gaps) {
    std::vector<Int> betas;
    betas.reserve(static_cast<size_t>(t.r));
    Int runner = 0; // first nonempty runner normalized to 0
    for (size_t i = 0; i < rows.size(); ++i) {
        for (Int row : rows[i]) betas.push_back(row * t.e + runner);
        runner += gaps[i] + 1;
    }
    std::sort(betas.rbegin(), betas.rend());
    return BetaSequence(std::move(betas));
}

template <typename Emit>
void enumerate_component(const GenericTriple& t, const Composition& mu, Emit&& emit) {
    const int j = mu.length();
    if (t.e - j < 0) return;
    const auto gap_tuples = weak_compositions(t.e - j, j);
    for (const auto& q : enumerate_multipartitions(mu, t.w)) {
        const auto rows = bead_rows(mu, q);
        for (const auto& gaps : gap_tuples)
            emit(omega(place_beads(t, rows, gaps.parts())), mu, gaps, q);
    }
}

template <typename Emit>
void enumerate_core(const GenericTriple& t, bool allow_degenerate, Emit&& emit) {
    require_generic(t, allow_degenerate);
    for (const auto& mu : compositions_of(t.r)) enumerate_component(t, mu, emit);
}

} // namespace

BetaSequence betas_of_component(const GenericTriple& t, const ComponentKey& key) {
    return place_beads(t, bead_rows(key.mu, key.quotient), key.gaps);
}

BlockWeightSet enumerate_block_weights(const GenericTriple& t, bool allow_degenerate) {
    BlockWeightSet out(t);
    enumerate_core(t, allow_degenerate,
                   [&](DominantWeight w, const Composition& mu, const WeakComposition& gaps,
                       const MultiPartition& q) {
                       out.insert(std::move(w), ComponentKey{mu, gaps.parts(), q});
                   });
    return out;
}

std::set<DominantWeight> block_weights_only(const GenericTriple& t, bool allow_degenerate) {
    std::set<DominantWeight> out;
    enumerate_core(t, allow_degenerate,
                   [&](DominantWeight w, const Composition&, const WeakComposition&,
                       const MultiPartition&) {
                       if (!out.insert(std::move(w)).second)
                           throw std::logic_error("duplicate weight in block weight enumeration");
                   });
    return out;
}

std::set<DominantWeight> component_weights(const GenericTriple& t, const Composition& mu) {
    if (mu.size() != t.r) throw std::invalid_argument("composition must sum to the rank");
    std::set<DominantWeight> out;
    enumerate_component(t, mu,
                        [&](DominantWeight w, const Composition&, const WeakComposition&,
                            const MultiPartition&) { out.insert(std::move(w)); });
    return out;
}

std::uint64_t count_block_weights(const GenericTriple& t, bool allow_degenerate) {
    require_generic(t, allow_degenerate);
    std::uint64_t total = 0;
    for (const auto& mu : compositions_of(t.r)) {
        const std::uint64_t copies = count_multipartitions(mu, t.w);
        const std::uint64_t simplex = binomial(t.e - 1, mu.length() - 1);
        total = checked_add(total, checked_mul(copies, simplex));
    }
    return total;
}

bool affine_vertex_membership(const GenericTriple& t, std::span<const Int> a) {
    require_generic(t, false);
    if (static_cast<int>(a.size()) != t.r - 1)
        throw std::invalid_argument("vertex multiplier count must be r-1");
    for (Int ai : a)
        if (ai < 1) throw std::invalid_argument("vertex multipliers must be positive");
    const Int d = vertex_defect(a);
    return t.w >= d && (t.w - d) % t.r == 0;
}

std::vector<DominantWeight> boundary_affine_vertices(const GenericTriple& t) {
    require_generic(t, false);
    std::vector<DominantWeight> out;
    std::vector<Int> a(static_cast<size_t>(t.r - 1), 1);
    // lexicographic enumeration of multipliers with sum i*(a_i - 1) = w
    std::function<void(int, Int)> rec = [&](int i, Int rem) {
        if (i == t.r - 1) {
            if (rem == 0) out.push_back(weight_from_multipliers(a, t.e));
            return;
        }
        for (Int x = 0; static_cast<Int>(i + 1) * x <= rem; ++x) {
            a[static_cast<size_t>(i)] = x + 1;
            rec(i + 1, rem - static_cast<Int>(i + 1) * x);
        }
        a[static_cast<size_t>(i)] = 1;
    };
    rec(0, t.w);
    return out;
}

std::vector<DominantWeight> interior_affine_vertices(const GenericTriple& t) {
    const auto boundary = boundary_affine_vertices(t);
    std::vector<Int> box(static_cast<size_t>(t.r - 1), 1);
    for (const auto& b : boundary)
        for (int i = 1; i < t.r; ++i)
            box[static_cast<size_t>(i - 1)] = std::max(box[static_cast<size_t>(i - 1)],
                                                       b.coeff(i) / t.e);
    std::vector<DominantWeight> out;
    std::vector<Int> a(static_cast<size_t>(t.r - 1), 1);
    std::function<void(int)> rec = [&](int i) {
        if (i == t.r - 1) {
            const auto u = weight_from_multipliers(a, t.e);
            for (const auto& b : boundary) {
                bool dominated = true;
                bool strict = false;
                for (int k = 1; k < t.r; ++k) {
                    if (u.coeff(k) > b.coeff(k)) { dominated = false; break; }
                    if (u.coeff(k) < b.coeff(k)) strict = true;
                }
                if (dominated && strict) {
                    out.push_back(u);
                    break;
                }
            }
            return;
        }
        for (Int x = 1; x <= box[static_cast<size_t>(i)]; ++x) {
            a[static_cast<size_t>(i)] = x;
            rec(i + 1);
        }
    };
    rec(0);
    return out;
}

std::vector<VertexPair> classify_pairs(const GenericTriple& t) {
    const auto boundary = boundary_affine_vertices(t);
    const auto interior = interior_affine_vertices(t);
    const std::set<DominantWeight> boundary_set(boundary.begin(), boundary.end());
    const std::set<DominantWeight> interior_set(interior.begin(), interior.end());

    std::vector<VertexPair> out;
    for (const auto& v1 : interior) {
        auto coeffs = v1.coeffs();
        coeffs.back() += t.e;
        DominantWeight v2(coeffs);
        if (boundary_set.count(v2)) {
            out.push_back({v1, v2, PairKind::bad});
            continue;
        }
        if (!interior_set.count(v2)) continue;
        std::vector<Int> a1(v1.coeffs()), a2(v2.coeffs());
        for (auto& x : a1) x /= t.e;
        for (auto& x : a2) x /= t.e;
        if (!affine_vertex_membership(t, a1) && affine_vertex_membership(t, a2))
            out.push_back({v1, v2, PairKind::good});
    }
    return out;
}

std::vector<DominantWeight> cell_points(const DominantWeight& v, Int e, bool open) {
    if (!is_affine_vertex(v, e))
        throw std::invalid_argument("cell centre must be an affine vertex");
    const int r = v.rank();
    const auto roots = positive_roots(r);
    std::vector<DominantWeight> out;
    std::vector<Int> u(static_cast<size_t>(r - 1));
    std::function<void(int)> rec = [&](int i) {
        if (i == r - 1) {
            DominantWeight cand(u);
            for (const auto& root : roots) {
                const Int d = pairing(cand, root) - pairing(v, root);
                const Int ad = d < 0 ? -d : d;
                if (open ? ad >= e : ad > e) return;
            }
            out.push_back(std::move(cand));
            return;
        }
        const Int lo = std::max<Int>(0, v.coeff(i + 1) - e);
        const Int hi = v.coeff(i + 1) + e;
        for (Int x = lo; x <= hi; ++x) {
            u[static_cast<size_t>(i)] = x;
            rec(i + 1);
        }
    };
    rec(0);
    return out;
}

namespace {

// Nonemptiness of the region {k_a e < <a, x> < (k_a + 1) e}: writing
// T_i = <alpha_{i,r}, x>/e (T_r = 0), the constraints become the strict
// difference system k_{ij} < T_i - T_j < k_{ij} + 1. With integer bounds the
// system is feasible iff every directed cycle of the constraint graph has
// positive total weight.
bool alcove_candidate_feasible(int r, const std::vector<PositiveRoot>& roots,
                               const std::vector<Int>& k) {
    constexpr Int inf = 1'000'000'000;
    std::vector<std::vector<Int>> dist(static_cast<size_t>(r),
                                       std::vector<Int>(static_cast<size_t>(r), inf));
    for (size_t idx = 0; idx < roots.size(); ++idx) {
        const int a = roots[idx].i - 1;
        const int b = roots[idx].j - 1;
        // T_a - T_b < k+1  (edge b -> a), and T_b - T_a < -k (edge a -> b)
        dist[static_cast<size_t>(b)][static_cast<size_t>(a)] =
            std::min(dist[static_cast<size_t>(b)][static_cast<size_t>(a)], k[idx] + 1);
        dist[static_cast<size_t>(a)][static_cast<size_t>(b)] =
            std::min(dist[static_cast<size_t>(a)][static_cast<size_t>(b)], -k[idx]);
    }
    for (int m = 0; m < r; ++m)
        for (int a = 0; a < r; ++a)
            for (int b = 0; b < r; ++b) {
                const Int via = dist[static_cast<size_t>(a)][static_cast<size_t>(m)] +
                                dist[static_cast<size_t>(m)][static_cast<size_t>(b)];
                if (dist[static_cast<size_t>(a)][static_cast<size_t>(m)] < inf &&
                    dist[static_cast<size_t>(m)][static_cast<size_t>(b)] < inf)
                    dist[static_cast<size_t>(a)][static_cast<size_t>(b)] =
                        std::min(dist[static_cast<size_t>(a)][static_cast<size_t>(b)], via);
            }
    for (int a = 0; a < r; ++a)
        if (dist[static_cast<size_t>(a)][static_cast<size_t>(a)] <= 0) return false;
    return true;
}

// Enumerate feasible Shi vectors k_a = base_a + c_a with c_a in {-1, 0},
// where `movable` marks the roots whose offset is free.
std::vector<ShiVector> feasible_alcoves(int r, Int e, const std::vector<Int>& base,
                                        const std::vector<bool>& movable) {
    const auto roots = positive_roots(r);
    std::vector<int> free_idx;
    for (size_t i = 0; i < roots.size(); ++i)
        if (movable[i]) free_idx.push_back(static_cast<int>(i));

    std::vector<ShiVector> out;
    std::vector<Int> k = base;
    const size_t combos = size_t{1} << free_idx.size();
    for (size_t mask = 0; mask < combos; ++mask) {
        for (size_t b = 0; b < free_idx.size(); ++b)
            k[static_cast<size_t>(free_idx[b])] =
                base[static_cast<size_t>(free_idx[b])] - ((mask >> b) & 1 ? 1 : 0);
        if (alcove_candidate_feasible(r, roots, k))
            out.emplace_back(r, e, k);
    }
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace

std::vector<ShiVector> alcoves_around_vertex(const DominantWeight& v, Int e) {
    if (!is_affine_vertex(v, e))
        throw std::invalid_argument("expected an affine vertex");
    const int r = v.rank();
    const auto roots = positive_roots(r);
    std::vector<Int> base(roots.size());
    for (size_t i = 0; i < roots.size(); ++i) base[i] = pairing(v, roots[i]) / e;
    const std::vector<bool> movable(roots.size(), true);
    return feasible_alcoves(r, e, base, movable);
}

std::vector<ShiVector> tail_supporting_alcoves(const VertexPair& pair, Int e) {
    const int r = pair.v1.rank();
    if (!is_affine_vertex(pair.v1, e) || !is_affine_vertex(pair.v2, e))
        throw std::invalid_argument("pair members must be affine vertices");
    {
        auto expected = pair.v1.coeffs();
        expected.back() += e;
        if (pair.v2.coeffs() != expected)
            throw std::invalid_argument("pair members are not adjacent in the last coordinate");
    }
    const auto roots = positive_roots(r);
    std::vector<Int> base(roots.size());
    std::vector<bool> movable(roots.size());
    for (size_t i = 0; i < roots.size(); ++i) {
        base[i] = pairing(pair.v1, roots[i]) / e;
        // Roots reaching the last coordinate separate v1 from v2, so the
        // Shi coefficient is forced; the rest may sit on either side.
        movable[i] = roots[i].j != r;
    }
    return feasible_alcoves(r, e, base, movable);
}

std::vector<DominantWeight> alcove_interior_points(const ShiVector& shi) {
    const int r = shi.rank();
    const Int e = shi.level();
    const auto roots = positive_roots(r);
    std::vector<DominantWeight> out;
    std::vector<Int> u(static_cast<size_t>(r - 1));
    std::function<void(int)> rec = [&](int i) {
        if (i == r - 1) {
            DominantWeight cand(u);
            for (const auto& root : roots) {
                const Int p = pairing(cand, root);
                const Int k = shi.entry(root);
                if (p <= k * e || p >= (k + 1) * e) return;
            }
            out.push_back(std::move(cand));
            return;
        }
        const Int k = shi.entry({i + 1, i + 2});
        const Int lo = std::max<Int>(0, k * e + 1);
        const Int hi = (k + 1) * e - 1;
        for (Int x = lo; x <= hi; ++x) {
            u[static_cast<size_t>(i)] = x;
            rec(i + 1);
        }
    };
    rec(0);
    return out;
}

CheckReport verify_tail_separation(const GenericTriple& t) {
    return verify_tail_separation(t, block_weights_only(t));
}

CheckReport verify_tail_separation(const GenericTriple& t,
                                   const std::set<DominantWeight>& weights) {
    CheckReport report{"tail-separation"};
    const auto pairs = classify_pairs(t);
    bool any_bad = false;
    for (const auto& pair : pairs) {
        if (pair.kind != PairKind::bad) continue;
        any_bad = true;
        std::set<std::vector<Int>> forbidden;
        for (const auto& shi : tail_supporting_alcoves(pair, t.e))
            forbidden.insert(shi.entries());
        for (const auto& w : weights) {
            if (!strictly_inside_alcove(w, t.e)) continue;
            if (forbidden.count(shi_vector(w, t.e).entries())) {
                std::ostringstream os;
                os << "weight " << w.str() << " lies in a tail-supporting alcove of the bad pair ("
                   << pair.v1.str() << ", " << pair.v2.str() << ")";
                report.fail(os.str());
            }
        }
    }
    if (!any_bad) report.note("no bad pairs; vacuously true");
    return report;
}

namespace {

RegularPatternReport check_regular_alcoves(
    const GenericTriple& t, const std::set<DominantWeight>& weights, const char* name,
    const std::function<std::vector<ShiVector>(const VertexPair&)>& alcoves_of) {
    RegularPatternReport report;
    report.check = name;
    bool any_good = false;
    for (const auto& pair : classify_pairs(t)) {
        if (pair.kind != PairKind::good) continue;
        any_good = true;
        bool pair_ok = true;
        for (const auto& shi : alcoves_of(pair)) {
            for (const auto& point : alcove_interior_points(shi)) {
                if (!weights.count(point)) {
                    std::ostringstream os;
                    os << "good pair (" << pair.v1.str() << ", " << pair.v2.str()
                       << "): interior point " << point.str() << " of alcove [" << shi.str()
                       << "] is missing";
                    report.fail(os.str());
                    pair_ok = false;
                }
            }
        }
        if (!pair_ok) report.failed_pairs.push_back(pair);
    }
    if (!any_good) report.note("no good pairs; vacuously true");
    return report;
}

} // namespace

RegularPatternReport verify_regular_pattern(const GenericTriple& t) {
    return verify_regular_pattern(t, block_weights_only(t));
}

RegularPatternReport verify_regular_pattern(const GenericTriple& t,
                                            const std::set<DominantWeight>& weights) {
    if (t.r != 3)
        throw std::invalid_argument("hexagon witness construction requires rank 3");
    return check_regular_alcoves(t, weights, "regular-pattern", [&](const VertexPair& pair) {
        const Int a1 = pair.v1.coeff(1), a2 = pair.v1.coeff(2);
        // One witness point inside each of the six alcoves adjacent to v1.
        const std::vector<DominantWeight> witnesses = {
            DominantWeight({a1 + 1, a2 + 1}), DominantWeight({a1 + 2, a2 - 1}),
            DominantWeight({a1 + 1, a2 - 2}), DominantWeight({a1 - 1, a2 - 1}),
            DominantWeight({a1 - 2, a2 + 1}), DominantWeight({a1 - 1, a2 + 2})};
        std::vector<ShiVector> alcoves;
        for (const auto& p : witnesses) {
            if (!strictly_inside_alcove(p, t.e))
                throw std::logic_error("hexagon witness point lies on a wall");
            alcoves.push_back(shi_vector(p, t.e));
        }
        return alcoves;
    });
}

RegularPatternReport verify_regular_pattern_general(const GenericTriple& t) {
    return verify_regular_pattern_general(t, block_weights_only(t));
}

RegularPatternReport verify_regular_pattern_general(const GenericTriple& t,
                                                    const std::set<DominantWeight>& weights) {
    return check_regular_alcoves(t, weights, "regular-pattern-general",
                                 [&](const VertexPair& pair) {
                                     return alcoves_around_vertex(pair.v1, t.e);
                                 });
}

StingrayRegion stingray(const GenericTriple& t, const VertexPair& pair) {
    return stingray(t, pair, block_weights_only(t));
}

StingrayRegion stingray(const GenericTriple& t, const VertexPair& pair,
                        const std::set<DominantWeight>& weights) {
    if (pair.kind != PairKind::bad)
        throw std::invalid_argument("stingray patterns are attached to bad pairs");
    {
        std::vector<Int> b2(pair.v2.coeffs());
        b2.back() -= t.e;
        if (pair.v1.coeffs() != b2)
            throw std::invalid_argument("pair members are not adjacent in the last coordinate");
    }

    StingrayRegion region;
    for (Int k = 1; k <= t.e; ++k) {
        auto coeffs = pair.v1.coeffs();
        coeffs.back() += k;
        region.tail.emplace_back(std::move(coeffs));
    }
    const std::set<DominantWeight> tail_set(region.tail.begin(), region.tail.end());

    std::set<DominantWeight> pattern;
    for (const auto& u : cell_points(pair.v1, t.e, /*open=*/true))
        if (weights.count(u)) pattern.insert(u);
    pattern.insert(pair.v2);
    for (const auto& u : pattern)
        if (!tail_set.count(u)) region.body.push_back(u);
    return region;
}

CheckReport verify_embedding(const GenericTriple& t) {
    CheckReport report{"embedding"};
    const auto lower = block_weights_only(t);
    const auto upper = block_weights_only({t.r, t.e, t.w + 1});

    std::set<DominantWeight> shifted;
    for (const auto& w : lower) {
        auto coeffs = w.coeffs();
        coeffs.front() += t.e;
        shifted.emplace(std::move(coeffs));
    }
    std::set<DominantWeight> beyond;
    for (const auto& w : upper)
        if (w.coeff(1) > t.e) beyond.insert(w);

    for (const auto& w : shifted)
        if (!beyond.count(w))
            report.fail("translated weight " + w.str() + " missing at e-weight " +
                        std::to_string(t.w + 1));
    for (const auto& w : beyond)
        if (!shifted.count(w))
            report.fail("weight " + w.str() + " beyond the first wall has no preimage at e-weight " +
                        std::to_string(t.w));
    return report;
}

} // namespace wpat
