#pragma once

#include <cstdint>
#include <map>
#include <set>
#include <span>

#include "wpat/report.hpp"
#include "wpat/weights.hpp"

namespace wpat {

/// Parameters (r, e, w): rank, level, and e-weight. The structural theorems
/// require the generic range e > r >= 3; the degenerate cases are still
/// enumerable on request.
struct GenericTriple {
    int r = 3;
    Int e = 4;
    Int w = 0;

    bool is_generic() const { return r >= 3 && e > r; }
    auto operator<=>(const GenericTriple&) const = default;
};

/// Abacus provenance of one enumerated weight: the composition mu of r
/// giving the bead counts of the nonempty runners, the runner gaps
/// (g_1..g_j, with the first nonempty runner normalized to runner 0), and
/// the restricted e-quotient of type mu.
struct ComponentKey {
    Composition mu;
    std::vector<Int> gaps;
    MultiPartition quotient;
};

/// The set W_{r,e,w} of dominant weights of partitions with at most r parts
/// and e-weight w, with the abacus provenance of each weight.
class BlockWeightSet {
public:
    explicit BlockWeightSet(GenericTriple t) : triple_(t) {}

    const GenericTriple& triple() const { return triple_; }
    const std::map<DominantWeight, ComponentKey>& entries() const { return entries_; }
    size_t size() const { return entries_.size(); }
    bool contains(const DominantWeight& w) const { return entries_.count(w) != 0; }
    const ComponentKey& key_of(const DominantWeight& w) const { return entries_.at(w); }
    std::set<DominantWeight> weight_set() const;

    /// Throws std::logic_error on a duplicate weight: the constructive
    /// enumeration is a bijection, so a collision is a defect.
    void insert(DominantWeight w, ComponentKey key);

private:
    GenericTriple triple_;
    std::map<DominantWeight, ComponentKey> entries_;
};

/// Constructive enumeration of W_{r,e,w}: for each composition mu of r,
/// each gap tuple, and each type-mu multipartition of w, place the beads
/// and apply Omega. Throws on a non-generic triple unless allow_degenerate.
BlockWeightSet enumerate_block_weights(const GenericTriple& t, bool allow_degenerate = false);

/// The same weights without their provenance keys; lighter for big sweeps.
std::set<DominantWeight> block_weights_only(const GenericTriple& t,
                                            bool allow_degenerate = false);

/// The weights of a single mu-component of the decomposition.
std::set<DominantWeight> component_weights(const GenericTriple& t, const Composition& mu);

/// The beta numbers placed by one step of the constructive enumeration.
BetaSequence betas_of_component(const GenericTriple& t, const ComponentKey& key);

/// |W_{r,e,w}| = sum over compositions mu of r of A(mu;w) * C(e-1, len(mu)-1).
std::uint64_t count_block_weights(const GenericTriple& t, bool allow_degenerate = false);

/// Membership of the affine vertex sum(a_i e Lambda_i) in W_{r,e,w}:
/// true iff w >= sum i*(a_i - 1) and w == sum i*(a_i - 1) mod r.
/// All a_i must be >= 1.
bool affine_vertex_membership(const GenericTriple& t, std::span<const Int> a);

/// All boundary affine vertices: sum(a_i e Lambda_i) with a_i >= 1 and
/// sum i*(a_i - 1) = w, in lexicographic order of (a_1, ..., a_{r-1}).
std::vector<DominantWeight> boundary_affine_vertices(const GenericTriple& t);

/// All interior affine vertices: vertices dominated coordinatewise by some
/// boundary vertex with at least one strict inequality. Membership in W is
/// not required.
std::vector<DominantWeight> interior_affine_vertices(const GenericTriple& t);

enum class PairKind { bad, good };

/// Adjacent affine vertices v2 = v1 + e*Lambda_{r-1}. A bad pair has v1
/// interior and v2 boundary; a good pair has both interior with v1 not in
/// W_{r,e,w} and v2 in it.
struct VertexPair {
    DominantWeight v1;
    DominantWeight v2;
    PairKind kind = PairKind::bad;
};

std::vector<VertexPair> classify_pairs(const GenericTriple& t);

/// Dominant lattice points u with |<alpha, u - v>| <= e for all positive
/// roots (strict when open); the cell centred at the affine vertex v.
std::vector<DominantWeight> cell_points(const DominantWeight& v, Int e, bool open);

/// The stingray pattern of a bad pair: full pattern = (open cell of v1
/// intersected with W) united with {v2}; the tail is the segment
/// {v1 + k*Lambda_{r-1} : 1 <= k <= e}; the body is pattern minus tail.
struct StingrayRegion {
    std::vector<DominantWeight> body;
    std::vector<DominantWeight> tail;
};

StingrayRegion stingray(const GenericTriple& t, const VertexPair& pair);
StingrayRegion stingray(const GenericTriple& t, const VertexPair& pair,
                        const std::set<DominantWeight>& weights);

/// Shi vectors of the e-alcoves whose closure contains the whole segment
/// from v1 to v2 = v1 + e*Lambda_{r-1}; there are exactly (r-1)! of them.
std::vector<ShiVector> tail_supporting_alcoves(const VertexPair& pair, Int e);

/// Shi vectors of all e-alcoves whose closure contains the affine vertex v.
std::vector<ShiVector> alcoves_around_vertex(const DominantWeight& v, Int e);

/// All dominant lattice points strictly inside the e-alcove with the given
/// Shi vector.
std::vector<DominantWeight> alcove_interior_points(const ShiVector& shi);

/// For every bad pair, checks that no enumerated weight lies strictly
/// inside a tail-supporting alcove.
CheckReport verify_tail_separation(const GenericTriple& t);
CheckReport verify_tail_separation(const GenericTriple& t,
                                   const std::set<DominantWeight>& weights);

/// Regular-pattern checks. For r = 3 the six alcoves adjacent to v1 are
/// located through the explicit witness points of the hexagon construction;
/// the general variant sweeps every alcove around v1 and is expected to
/// fail for some triples with r > 3.
struct RegularPatternReport : CheckReport {
    std::vector<VertexPair> failed_pairs;
};

RegularPatternReport verify_regular_pattern(const GenericTriple& t);
RegularPatternReport verify_regular_pattern(const GenericTriple& t,
                                            const std::set<DominantWeight>& weights);
RegularPatternReport verify_regular_pattern_general(const GenericTriple& t);
RegularPatternReport verify_regular_pattern_general(const GenericTriple& t,
                                                    const std::set<DominantWeight>& weights);

/// Checks that translation by e*Lambda_1 maps W_{r,e,w} onto the part of
/// W_{r,e,w+1} with first coefficient > e.
CheckReport verify_embedding(const GenericTriple& t);

} // namespace wpat
