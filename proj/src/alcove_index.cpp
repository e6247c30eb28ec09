#include "wpat/alcove_index.hpp"

#include <algorithm>
#include <sstream>

namespace wpat {

std::vector<WeakComposition> enumerate_labels(int r, Int w) {
    if (r < 1) throw std::invalid_argument("rank must be at least 1");
    if (w < 0) throw std::invalid_argument("e-weight must be nonnegative");
    return weak_compositions(w, r);
}

WeakComposition fundamental_label(int r, Int w) {
    if (r < 1) throw std::invalid_argument("rank must be at least 1");
    if (w < 0) throw std::invalid_argument("e-weight must be nonnegative");
    const Int m = w / r;
    const Int n = w % r;
    std::vector<Int> parts(static_cast<size_t>(r), m);
    for (Int i = 0; i < n; ++i) parts[static_cast<size_t>(i)] = m + 1;
    return WeakComposition(std::move(parts));
}

ShiVector label_to_shi(const WeakComposition& label, Int e) {
    const int r = label.length();
    if (e <= r) throw std::invalid_argument("need e > r for the alcove labeling");
    std::vector<Int> betas(static_cast<size_t>(r));
    for (int t = 1; t <= r; ++t)
        betas[static_cast<size_t>(t - 1)] = label.part(t) * e + (e - r + t - 1);
    std::sort(betas.rbegin(), betas.rend());
    return shi_vector(omega(BetaSequence(std::move(betas))), e);
}

std::optional<WeakComposition> apply_generator(const WeakComposition& label, int g) {
    const int r = label.length();
    if (g < 0 || g > r - 1) throw std::invalid_argument("generator index out of range");
    auto parts = label.parts();
    if (g == 0) {
        if (parts.front() < 1) return std::nullopt;
        const Int first = parts.front();
        parts.front() = parts.back() + 1;
        parts.back() = first - 1;
    } else {
        std::swap(parts[static_cast<size_t>(g - 1)], parts[static_cast<size_t>(g)]);
    }
    return WeakComposition(std::move(parts));
}

CheckReport verify_wall_crossing(const WeakComposition& label, int g, Int e) {
    CheckReport report{"wall-crossing"};
    const int r = label.length();
    const auto image = apply_generator(label, g);
    if (!image)
        throw std::invalid_argument("generator action undefined on this label");

    const bool fixed_by_label =
        g == 0 ? label.part(1) == label.part(r) + 1 : label.part(g) == label.part(g + 1);

    const auto before = label_to_shi(label, e).entries();
    const auto after = label_to_shi(*image, e).entries();
    int diffs = 0;
    bool unit_step = true;
    for (size_t i = 0; i < before.size(); ++i) {
        if (before[i] == after[i]) continue;
        ++diffs;
        const Int d = after[i] - before[i];
        if (d != 1 && d != -1) unit_step = false;
    }

    std::ostringstream os;
    os << "label (" << label.str() << ") sigma_" << g << " -> (" << image->str() << "): ";
    if (fixed_by_label && diffs == 0) {
        os << "fixed point, identical Shi vectors";
        report.note(os.str());
    } else if (!fixed_by_label && diffs == 1 && unit_step) {
        os << "crossed one wall";
        report.note(os.str());
    } else {
        os << diffs << " Shi coordinates changed"
           << (fixed_by_label ? " on a label fixed point" : "");
        report.fail(os.str());
    }
    return report;
}

} // namespace wpat
