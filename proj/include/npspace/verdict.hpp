#pragma once

#include "npspace/geometry.hpp"

#include <string>
#include <vector>

namespace npspace {

/// Yes/no answer carrying a witness when the answer is negative.
struct Verdict {
    bool holds = true;
    std::vector<Vertex> witness;
    std::string reason;

    explicit operator bool() const { return holds; }

    static Verdict yes() { return {}; }
    static Verdict no(std::vector<Vertex> witness, std::string reason) {
        return {false, std::move(witness), std::move(reason)};
    }
};

} // namespace npspace
