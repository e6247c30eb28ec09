#include "wpat/abacus.hpp"

#include <algorithm>
#include <sstream>

namespace wpat {

BetaSequence::BetaSequence(std::vector<Int> betas) : betas_(std::move(betas)) {
    for (size_t i = 0; i < betas_.size(); ++i) {
        if (betas_[i] < 0)
            throw std::invalid_argument("beta numbers must be nonnegative");
        if (i > 0 && betas_[i - 1] <= betas_[i])
            throw std::invalid_argument("beta numbers must be strictly decreasing");
    }
}

BetaSequence beta_numbers(const Partition& lam, int r) {
    if (r < lam.length())
        throw std::invalid_argument("rank must be at least the number of parts");
    std::vector<Int> betas(static_cast<size_t>(r));
    for (int i = 1; i <= r; ++i)
        betas[static_cast<size_t>(i - 1)] = lam.part(i) + r - i;
    return BetaSequence(std::move(betas));
}

Partition partition_of_beta(const BetaSequence& bs) {
    const int r = bs.rank();
    std::vector<Int> parts(static_cast<size_t>(r));
    for (int i = 1; i <= r; ++i)
        parts[static_cast<size_t>(i - 1)] = bs.beta(i) - (r - i);
    return Partition(std::move(parts));
}

AbacusConfig abacus_of(const BetaSequence& bs, Int e) {
    if (e < 2) throw std::invalid_argument("e must be at least 2");
    AbacusConfig ab;
    ab.e = e;
    ab.positions.insert(bs.betas().begin(), bs.betas().end());
    return ab;
}

BetaSequence betas_of_abacus(const AbacusConfig& ab) {
    std::vector<Int> betas(ab.positions.rbegin(), ab.positions.rend());
    return BetaSequence(std::move(betas));
}

AbacusConfig shift_bead(const AbacusConfig& ab, Int pos, BeadMove move) {
    if (!ab.positions.count(pos))
        throw std::invalid_argument("no bead at the given position");
    Int target = 0;
    switch (move) {
        case BeadMove::up:
            if (pos < ab.e) throw std::invalid_argument("cannot slide up from row 0");
            target = pos - ab.e;
            break;
        case BeadMove::down:
            target = pos + ab.e;
            break;
        case BeadMove::left:
            if (pos == 0) throw std::invalid_argument("cannot shift left from position 0");
            target = pos - 1;
            break;
        case BeadMove::right:
            target = pos + 1;
            break;
    }
    if (ab.positions.count(target))
        throw std::invalid_argument("target position is occupied");
    AbacusConfig out = ab;
    out.positions.erase(pos);
    out.positions.insert(target);
    return out;
}

std::string render_text(const AbacusConfig& ab) {
    Int max_row = 0;
    for (Int pos : ab.positions) max_row = std::max(max_row, pos / ab.e);
    std::ostringstream os;
    for (Int row = 0; row <= max_row; ++row) {
        for (Int col = 0; col < ab.e; ++col) {
            if (col) os << ' ';
            os << (ab.positions.count(row * ab.e + col) ? "●" : "·");
        }
        os << '\n';
    }
    return os.str();
}

Int EQuotient::total_size() const {
    Int s = 0;
    for (const auto& c : components) s += c.size();
    return s;
}

namespace {

// Bead rows per runner, each sorted decreasing.
std::vector<std::vector<Int>> runner_rows(const BetaSequence& bs, Int e) {
    std::vector<std::vector<Int>> rows(static_cast<size_t>(e));
    for (Int b : bs.betas())
        rows[static_cast<size_t>(b % e)].push_back(b / e);
    for (auto& v : rows) std::sort(v.rbegin(), v.rend());
    return rows;
}

BetaSequence flushed_betas(const BetaSequence& bs, Int e) {
    auto rows = runner_rows(bs, e);
    std::vector<Int> betas;
    for (Int j = 0; j < e; ++j) {
        const Int count = static_cast<Int>(rows[static_cast<size_t>(j)].size());
        for (Int a = 0; a < count; ++a) betas.push_back(a * e + j);
    }
    std::sort(betas.rbegin(), betas.rend());
    return BetaSequence(std::move(betas));
}

} // namespace

Partition e_core(const Partition& lam, Int e, int r) {
    if (e < 2) throw std::invalid_argument("e must be at least 2");
    return partition_of_beta(flushed_betas(beta_numbers(lam, r), e));
}

Int e_weight(const Partition& lam, Int e, int r) {
    return (lam.size() - e_core(lam, e, r).size()) / e;
}

EQuotient e_quotient(const Partition& lam, Int e, int r) {
    if (e < 2) throw std::invalid_argument("e must be at least 2");
    auto rows = runner_rows(beta_numbers(lam, r), e);
    EQuotient q;
    q.components.reserve(static_cast<size_t>(e));
    for (Int j = 0; j < e; ++j)
        q.components.push_back(partition_of_beta(BetaSequence(rows[static_cast<size_t>(j)])));
    return q;
}

Partition from_core_and_quotient(const Partition& core, const EQuotient& q, Int e, int r) {
    if (e < 2) throw std::invalid_argument("e must be at least 2");
    if (static_cast<Int>(q.components.size()) != e)
        throw std::invalid_argument("quotient must have exactly e components");
    if (core.length() > r)
        throw std::invalid_argument("rank must be at least the core length");
    if (e_core(core, e, r) != core)
        throw std::invalid_argument("first argument is not an e-core");

    auto rows = runner_rows(beta_numbers(core, r), e);
    std::vector<Int> betas;
    betas.reserve(static_cast<size_t>(r));
    for (Int j = 0; j < e; ++j) {
        const Int count = static_cast<Int>(rows[static_cast<size_t>(j)].size());
        const Partition& comp = q.components[static_cast<size_t>(j)];
        if (comp.length() > count)
            throw std::invalid_argument(
                "quotient component needs more beads than the core runner holds");
        // The component's count-beta numbers are the bead rows on this runner.
        for (Int m = 1; m <= count; ++m)
            betas.push_back((comp.part(static_cast<int>(m)) + count - m) * e + j);
    }
    std::sort(betas.rbegin(), betas.rend());
    return partition_of_beta(BetaSequence(std::move(betas)));
}

std::optional<Int> weight_if_single_bead_runners(const BetaSequence& bs, Int e) {
    if (e < 2) throw std::invalid_argument("e must be at least 2");
    std::set<Int> residues;
    Int total = 0;
    for (Int b : bs.betas()) {
        if (!residues.insert(b % e).second) return std::nullopt;
        total += b / e;
    }
    return total;
}

Int weight_lower_bound(const BetaSequence& bs, Int e) {
    if (e < 2) throw std::invalid_argument("e must be at least 2");
    Int bound = 0;
    for (int i = 1; i < bs.rank(); ++i) {
        const Int gap = bs.beta(i) - bs.beta(i + 1);
        const Int m = (gap + e - 1) / e;
        bound += static_cast<Int>(i) * (m - 1);
    }
    return bound;
}

} // namespace wpat
