#pragma once

// Stick-count-preserving normalization moves: half-space expansion and
// proper leveling.
//
// Proper leveling: along each axis, every coordinate level hosts either
// exactly two stick endpoints of that axis (equivalently, one maximal chain
// of transverse sticks) or one planar trivial component, and the occupied
// levels are exactly 1..m. Conflicting chains are separated by scaling the
// axis first, so the inserted level is guaranteed empty; separation and the
// final monotone compaction both preserve the isotopy class.

#include <algorithm>
#include <map>
#include <vector>

#include "latticeknots/conformation.hpp"

namespace latknot {

// Translates everything strictly on `side` of {coord[axis] == level} away by
// `amount`; sticks along `axis` that cross the plane are lengthened. Stick
// count and knot type are unchanged.
inline Conformation expand_halfspace(const Conformation& c, Axis axis, Coord level, int side,
                                     Coord amount) {
    if (side != +1 && side != -1) throw std::invalid_argument("expand_halfspace: side must be +-1");
    if (amount < 0) throw std::invalid_argument("expand_halfspace: amount must be >= 0");
    require_valid(c, "expand_halfspace");
    Conformation out = c;
    for (auto& k : out.components)
        for (auto& p : k.corners) {
            if (side == +1 && p[axis] > level) p[axis] += amount;
            if (side == -1 && p[axis] < level) p[axis] -= amount;
        }
    return out;
}

namespace detail {

// One occupant of a coordinate level along some axis: either a maximal run
// of transverse sticks (a chain, with its two attached axis-stick endpoints)
// or a whole planar component.
struct LevelOccupant {
    std::size_t component = 0;
    // corner indices whose axis-coordinate moves with this occupant
    std::vector<std::size_t> corners;
    std::size_t order_key = 0;  // first stick index; deterministic tie-break
    bool planar = false;
};

inline std::map<Coord, std::vector<LevelOccupant>> occupants_by_level(const Conformation& c,
                                                                      Axis axis) {
    std::map<Coord, std::vector<LevelOccupant>> levels;
    for (std::size_t ci = 0; ci < c.components.size(); ++ci) {
        const Component& k = c.components[ci];
        const std::size_t n = k.size();
        bool has_axis_stick = false;
        for (std::size_t i = 0; i < n; ++i)
            if (k.stick(i).axis == axis) has_axis_stick = true;

        if (!has_axis_stick) {
            LevelOccupant occ;
            occ.component = ci;
            occ.planar = true;
            occ.order_key = 0;
            for (std::size_t i = 0; i < n; ++i) occ.corners.push_back(i);
            levels[k.corners.front()[axis]].push_back(std::move(occ));
            continue;
        }

        // Chains: maximal cyclic runs of transverse sticks between axis-sticks.
        std::size_t start = 0;
        while (k.stick(start).axis != axis) ++start;
        std::size_t i = start;
        do {
            // k.stick(i) is an axis-stick; the chain begins after it.
            std::size_t j = (i + 1) % n;
            LevelOccupant occ;
            occ.component = ci;
            occ.order_key = j;
            occ.corners.push_back((i + 1) % n);  // corner between stick i and stick j
            while (k.stick(j).axis != axis) {
                occ.corners.push_back((j + 1) % n);
                j = (j + 1) % n;
            }
            levels[k.corner(i + 1)[axis]].push_back(std::move(occ));
            i = j;
        } while (i != start);
    }
    return levels;
}

}  // namespace detail

inline bool is_properly_leveled(const Conformation& c) {
    for (Axis axis : kAxes) {
        auto levels = detail::occupants_by_level(c, axis);
        Coord want = 1;
        for (auto& [level, occs] : levels) {
            if (occs.size() != 1) return false;
            if (level != want) return false;
            ++want;
        }
    }
    return true;
}

// Monotone level reassignment into 1..m per axis, separating conflicting
// chains first. Stick count and knot/link type are unchanged; the result is
// translation-normalized, so the operation is idempotent.
inline Conformation properly_level(const Conformation& c) {
    require_valid(c, "properly_level");
    Conformation out = c;

    for (Axis axis : kAxes) {
        auto levels = detail::occupants_by_level(out, axis);

        Coord max_mult = 1;
        for (auto& [level, occs] : levels)
            max_mult = std::max(max_mult, static_cast<Coord>(occs.size()));

        if (max_mult > 1) {
            // Scale the axis so each old level has empty space right above it.
            for (auto& k : out.components)
                for (auto& p : k.corners) p[axis] *= max_mult;
            // Spread occupants into the fresh adjacent levels, later-indexed
            // occupants moving further.
            for (auto& [level, occs] : levels) {
                std::sort(occs.begin(), occs.end(),
                          [](const detail::LevelOccupant& a, const detail::LevelOccupant& b) {
                              return std::tie(a.component, a.order_key) <
                                     std::tie(b.component, b.order_key);
                          });
                for (std::size_t idx = 1; idx < occs.size(); ++idx)
                    for (std::size_t corner : occs[idx].corners)
                        out.components[occs[idx].component].corners[corner][axis] +=
                            static_cast<Coord>(idx);
            }
        }

        // Compact occupied levels to 1..m (strictly monotone, isotopy-safe).
        std::vector<Coord> occupied;
        for (auto& k : out.components)
            for (auto& p : k.corners) occupied.push_back(p[axis]);
        std::sort(occupied.begin(), occupied.end());
        occupied.erase(std::unique(occupied.begin(), occupied.end()), occupied.end());
        std::map<Coord, Coord> remap;
        for (std::size_t r = 0; r < occupied.size(); ++r) remap[occupied[r]] = static_cast<Coord>(r + 1);
        for (auto& k : out.components)
            for (auto& p : k.corners) p[axis] = remap[p[axis]];
    }

    require_valid(out, "properly_level (result)");
    return out;
}

}  // namespace latknot
