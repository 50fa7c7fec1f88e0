#pragma once

// Independent Kauffman bracket oracle: naive skein recursion with explicit
// label rewriting. Exponential; meant for small reference diagrams only.
// Shares no evaluation machinery with the library's state sum or the
// contraction evaluator.

#include <vector>

#include "latticeknots/bracket.hpp"

namespace latknot::testoracle {

namespace detail {

inline latknot::LaurentPoly skein(std::vector<std::array<int, 4>> crossings, int loops) {
    using latknot::LaurentPoly;
    const LaurentPoly delta = latknot::loop_factor();
    if (crossings.empty()) return delta.pow(loops);

    std::array<int, 4> x = crossings.back();
    crossings.pop_back();

    LaurentPoly total;
    for (int smoothing = 0; smoothing < 2; ++smoothing) {
        auto rest = crossings;
        int extra_loops = 0;
        std::array<std::pair<int, int>, 2> joins;
        if (smoothing == 0)
            joins = {{{x[0], x[1]}, {x[2], x[3]}}};
        else
            joins = {{{x[0], x[3]}, {x[1], x[2]}}};

        for (std::size_t jn = 0; jn < 2; ++jn) {
            auto [a, b] = joins[jn];
            if (a == b) {
                ++extra_loops;
                continue;
            }
            for (auto& t : rest)
                for (int& e : t)
                    if (e == b) e = a;
            if (jn == 0 && joins[1].first == b) joins[1].first = a;
            if (jn == 0 && joins[1].second == b) joins[1].second = a;
        }
        total += LaurentPoly::monomial(smoothing == 0 ? 1 : -1, 1) *
                 skein(std::move(rest), loops + extra_loops);
    }
    return total;
}

}  // namespace detail

// Bracket with <unknot> = 1, same normalization as the library.
inline latknot::LaurentPoly skein_bracket(const latknot::PDCode& pd) {
    using latknot::LaurentPoly;
    const LaurentPoly delta = latknot::loop_factor();
    if (pd.crossings.empty()) {
        if (pd.free_loops == 0) return LaurentPoly::one();
        return delta.pow(static_cast<int>(pd.free_loops) - 1);
    }
    LaurentPoly raw = detail::skein(pd.crossings, static_cast<int>(pd.free_loops));
    return divide_exact(raw, delta);
}

}  // namespace latknot::testoracle
