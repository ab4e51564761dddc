#pragma once

#include "shalika/branch.hpp"

#include <vector>

namespace shalika::testing {

// Ramified step lists of length <= max_len with slopes from the given set and degree <= max_n.
inline std::vector<BranchSpec> ramified_family(const NewtonPairs& slopes, int max_n, int max_len = 3) {
    std::vector<BranchSpec> out;
    std::vector<BranchSpec> frontier{BranchSpec{}};
    for (int len = 1; len <= max_len; ++len) {
        std::vector<BranchSpec> next;
        for (const auto& b : frontier)
            for (auto [p, q] : slopes) {
                BranchSpec c = b;
                c.steps.push_back(Step::ramified(p, q));
                if (c.degree() > max_n) continue;
                next.push_back(c);
                out.push_back(c);
            }
        frontier = std::move(next);
    }
    return out;
}

inline const NewtonPairs& acceptance_slopes() {
    static const NewtonPairs s{{2, 1}, {2, 3}, {1, 2}, {3, 5}};
    return s;
}

inline GammaSpec single(const BranchSpec& b) {
    GammaSpec g;
    g.branches.push_back(b);
    return g;
}

inline std::string describe(const BranchSpec& b) {
    std::string s;
    for (const auto& st : b.steps) {
        if (!s.empty()) s += ";";
        if (st.kind == Step::Kind::ramified) s += std::to_string(st.p) + "," + std::to_string(st.q);
        else s += "u:" + std::to_string(st.f) + "," + std::to_string(st.a);
    }
    return s;
}

}  // namespace shalika::testing
