#include "wpat/weights.hpp"

#include <sstream>

namespace wpat {

DominantWeight::DominantWeight(std::vector<Int> coeffs) : coeffs_(std::move(coeffs)) {
    if (coeffs_.empty())
        throw std::invalid_argument("rank must be at least 2");
    for (Int a : coeffs_)
        if (a < 0) throw std::invalid_argument("dominant weight coefficients must be nonnegative");
}

std::string DominantWeight::str() const {
    std::ostringstream os;
    os << '[';
    for (size_t i = 0; i < coeffs_.size(); ++i) {
        if (i) os << ',';
        os << coeffs_[i];
    }
    os << ']';
    return os.str();
}

std::vector<PositiveRoot> positive_roots(int r) {
    if (r < 2) throw std::invalid_argument("rank must be at least 2");
    std::vector<PositiveRoot> roots;
    roots.reserve(static_cast<size_t>(r) * (static_cast<size_t>(r) - 1) / 2);
    for (int i = 1; i < r; ++i)
        for (int j = i + 1; j <= r; ++j) roots.push_back({i, j});
    return roots;
}

Int pairing(const DominantWeight& w, PositiveRoot root) {
    if (root.i < 1 || root.i >= root.j || root.j > w.rank())
        throw std::invalid_argument("root is not rank-compatible with the weight");
    Int p = 0;
    for (int k = root.i; k < root.j; ++k) p += w.coeff(k);
    return p;
}

ShiVector::ShiVector(int rank, Int level, std::vector<Int> entries)
    : rank_(rank), level_(level), entries_(std::move(entries)) {
    if (entries_.size() != static_cast<size_t>(rank_) * (static_cast<size_t>(rank_) - 1) / 2)
        throw std::invalid_argument("Shi vector has the wrong number of entries");
}

Int ShiVector::entry(PositiveRoot root) const {
    if (root.i < 1 || root.i >= root.j || root.j > rank_)
        throw std::invalid_argument("root is not rank-compatible with the Shi vector");
    // lexicographic position of (i, j) among the positive roots
    const int before_i = (root.i - 1) * (2 * rank_ - root.i) / 2;
    return entries_[static_cast<size_t>(before_i + root.j - root.i - 1)];
}

std::string ShiVector::str() const {
    std::ostringstream os;
    size_t idx = 0;
    for (const auto& root : positive_roots(rank_)) {
        if (idx) os << ' ';
        os << '(' << root.i << ',' << root.j << "):" << entries_[idx];
        ++idx;
    }
    return os.str();
}

ShiVector shi_vector(const DominantWeight& w, Int e) {
    if (e < 2) throw std::invalid_argument("e must be at least 2");
    std::vector<Int> entries;
    const auto roots = positive_roots(w.rank());
    entries.reserve(roots.size());
    for (const auto& root : roots) {
        const Int p = pairing(w, root);
        entries.push_back(p == 0 ? 0 : (p - 1) / e);
    }
    return ShiVector(w.rank(), e, std::move(entries));
}

bool same_e_alcove(const DominantWeight& w1, const DominantWeight& w2, Int e) {
    if (w1.rank() != w2.rank())
        throw std::invalid_argument("weights have different ranks");
    return shi_vector(w1, e).entries() == shi_vector(w2, e).entries();
}

bool is_affine_vertex(const DominantWeight& w, Int e) {
    if (e < 2) throw std::invalid_argument("e must be at least 2");
    for (Int a : w.coeffs())
        if (a <= 0 || a % e != 0) return false;
    return true;
}

DominantWeight omega(const BetaSequence& bs) {
    if (bs.rank() < 2) throw std::invalid_argument("rank must be at least 2");
    std::vector<Int> coeffs(static_cast<size_t>(bs.rank() - 1));
    for (int i = 1; i < bs.rank(); ++i)
        coeffs[static_cast<size_t>(i - 1)] = bs.beta(i) - bs.beta(i + 1);
    return DominantWeight(std::move(coeffs));
}

DominantWeight omega(const Partition& lam, int r) {
    return omega(beta_numbers(lam, r));
}

} // namespace wpat
