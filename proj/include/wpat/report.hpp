#pragma once

#include <string>
#include <vector>

namespace wpat {

/// Outcome of a verification sweep. A failed check carries one witness
/// string per violation; a passing check may carry informational notes.
struct CheckReport {
    std::string check;
    bool pass = true;
    std::vector<std::string> witnesses;

    CheckReport() = default;
    explicit CheckReport(std::string name) : check(std::move(name)) {}

    void fail(std::string witness) {
        pass = false;
        witnesses.push_back(std::move(witness));
    }
    void note(std::string text) { witnesses.push_back(std::move(text)); }
};

} // namespace wpat
