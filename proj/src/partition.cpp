#include "wpat/partition.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

namespace wpat {

namespace {

std::string join(const std::vector<Int>& v, const char* empty_repr) {
    if (v.empty()) return empty_repr;
    std::ostringstream os;
    for (size_t i = 0; i < v.size(); ++i) {
        if (i) os << ',';
        os << v[i];
    }
    return os.str();
}

} // namespace

Partition::Partition(std::vector<Int> parts) : parts_(std::move(parts)) {
    while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
    if (!is_partition(parts_))
        throw std::invalid_argument("parts must be weakly decreasing and positive");
}

Int Partition::size() const {
    Int s = 0;
    for (Int p : parts_) s += p;
    return s;
}

Int Partition::part(int i) const {
    if (i < 1) throw std::out_of_range("part index is 1-based");
    return i <= length() ? parts_[static_cast<size_t>(i - 1)] : 0;
}

std::string Partition::str() const { return join(parts_, "-"); }

bool is_partition(std::span<const Int> seq) {
    for (size_t i = 0; i < seq.size(); ++i) {
        if (seq[i] <= 0) return false;
        if (i > 0 && seq[i - 1] < seq[i]) return false;
    }
    return true;
}

bool is_e_regular(const Partition& lam, Int e) {
    if (e < 2) throw std::invalid_argument("e must be at least 2");
    const auto& p = lam.parts();
    Int run = 0;
    for (size_t i = 0; i < p.size(); ++i) {
        run = (i > 0 && p[i] == p[i - 1]) ? run + 1 : 1;
        if (run >= e) return false;
    }
    return true;
}

Composition::Composition(std::vector<Int> parts) : parts_(std::move(parts)) {
    if (parts_.empty()) throw std::invalid_argument("composition must be nonempty");
    for (Int p : parts_)
        if (p < 1) throw std::invalid_argument("composition parts must be positive");
}

Int Composition::size() const {
    Int s = 0;
    for (Int p : parts_) s += p;
    return s;
}

std::string Composition::str() const { return join(parts_, ""); }

WeakComposition::WeakComposition(std::vector<Int> parts) : parts_(std::move(parts)) {
    for (Int p : parts_)
        if (p < 0) throw std::invalid_argument("weak composition entries must be nonnegative");
}

Int WeakComposition::size() const {
    Int s = 0;
    for (Int p : parts_) s += p;
    return s;
}

std::string WeakComposition::str() const { return join(parts_, ""); }

Int MultiPartition::total_size() const {
    Int s = 0;
    for (const auto& c : components_) s += c.size();
    return s;
}

std::string MultiPartition::str() const {
    std::ostringstream os;
    os << '(';
    for (size_t i = 0; i < components_.size(); ++i) {
        if (i) os << '|';
        os << components_[i].str();
    }
    os << ')';
    return os.str();
}

namespace {

// Partitions of n with at most max_len parts and largest part at most
// max_part, emitted in descending lexicographic order.
void gen_partitions(Int n, Int max_part, Int max_len, std::vector<Int>& acc,
                    std::vector<Partition>& out) {
    if (n == 0) {
        out.emplace_back(acc);
        return;
    }
    if (max_len == 0) return;
    Int top = std::min(n, max_part);
    for (Int p = top; p >= 1; --p) {
        acc.push_back(p);
        gen_partitions(n - p, p, max_len - 1, acc, out);
        acc.pop_back();
    }
}

// Count partitions of n into at most m parts (table up to w).
std::vector<std::uint64_t> partitions_max_length_counts(Int w, Int m) {
    std::vector<std::uint64_t> dp(static_cast<size_t>(w) + 1, 0);
    dp[0] = 1;
    // dp after k loop iterations counts partitions with parts of count <= m
    // via the conjugate formulation: parts of size <= m, generated per size.
    for (Int s = 1; s <= m; ++s)
        for (Int n = s; n <= w; ++n)
            dp[static_cast<size_t>(n)] =
                checked_add(dp[static_cast<size_t>(n)], dp[static_cast<size_t>(n - s)]);
    return dp;
}

} // namespace

std::vector<Partition> partitions_max_length(Int n, Int max_len) {
    if (n < 0) throw std::invalid_argument("n must be nonnegative");
    std::vector<Partition> out;
    std::vector<Int> acc;
    gen_partitions(n, n, max_len, acc, out);
    return out;
}

std::uint64_t count_multipartitions(const Composition& mu, Int w) {
    if (w < 0) throw std::invalid_argument("w must be nonnegative");
    // Convolve the per-component counts N_{mu_i}(s) across components.
    std::vector<std::uint64_t> acc(static_cast<size_t>(w) + 1, 0);
    acc[0] = 1;
    for (Int m : mu.parts()) {
        auto comp = partitions_max_length_counts(w, m);
        std::vector<std::uint64_t> next(static_cast<size_t>(w) + 1, 0);
        for (Int t = 0; t <= w; ++t) {
            if (acc[static_cast<size_t>(t)] == 0) continue;
            for (Int s = 0; t + s <= w; ++s)
                next[static_cast<size_t>(t + s)] =
                    checked_add(next[static_cast<size_t>(t + s)],
                                checked_mul(acc[static_cast<size_t>(t)],
                                            comp[static_cast<size_t>(s)]));
        }
        acc = std::move(next);
    }
    return acc[static_cast<size_t>(w)];
}

std::vector<MultiPartition> enumerate_multipartitions(const Composition& mu, Int w) {
    if (w < 0) throw std::invalid_argument("w must be nonnegative");
    const int l = mu.length();
    std::vector<MultiPartition> out;
    std::vector<Partition> acc;

    // Candidates for one slot: all partitions of size <= budget with the slot's
    // length bound, merged across sizes in descending lexicographic order.
    auto slot_candidates = [](Int budget, Int max_len) {
        std::vector<Partition> cands;
        for (Int s = 0; s <= budget; ++s) {
            auto ps = partitions_max_length(s, max_len);
            cands.insert(cands.end(), ps.begin(), ps.end());
        }
        std::sort(cands.begin(), cands.end(), [](const Partition& a, const Partition& b) {
            return std::lexicographical_compare(b.parts().begin(), b.parts().end(),
                                                a.parts().begin(), a.parts().end());
        });
        return cands;
    };

    std::function<void(int, Int)> rec = [&](int slot, Int remaining) {
        if (slot == l) {
            if (remaining == 0) out.emplace_back(acc);
            return;
        }
        for (auto& cand : slot_candidates(remaining, mu.part(slot + 1))) {
            Int s = cand.size();
            if (s > remaining) continue;
            if (slot == l - 1 && s != remaining) continue;
            acc.push_back(std::move(cand));
            rec(slot + 1, remaining - s);
            acc.pop_back();
        }
    };
    rec(0, w);
    return out;
}

std::vector<WeakComposition> weak_compositions(Int total, int len) {
    std::vector<WeakComposition> out;
    if (total < 0) return out;
    if (len == 0) {
        if (total == 0) out.emplace_back(std::vector<Int>{});
        return out;
    }
    std::vector<Int> acc(static_cast<size_t>(len), 0);
    std::function<void(int, Int)> rec = [&](int i, Int rem) {
        if (i == len - 1) {
            acc[static_cast<size_t>(i)] = rem;
            out.emplace_back(acc);
            return;
        }
        for (Int v = 0; v <= rem; ++v) {
            acc[static_cast<size_t>(i)] = v;
            rec(i + 1, rem - v);
        }
    };
    rec(0, total);
    return out;
}

std::vector<Composition> compositions_of(Int r) {
    std::vector<Composition> out;
    if (r <= 0) return out;
    std::vector<Int> acc;
    std::function<void(Int)> rec = [&](Int rem) {
        if (rem == 0) {
            out.emplace_back(acc);
            return;
        }
        for (Int p = 1; p <= rem; ++p) {
            acc.push_back(p);
            rec(rem - p);
            acc.pop_back();
        }
    };
    rec(r);
    return out;
}

} // namespace wpat
