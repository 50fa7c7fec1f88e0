#pragma once

// Closed axis-parallel self-avoiding polygons in the cubic lattice.
//
// A component is stored as its cyclic corner list; sticks (maximal segments)
// are derived, so segment maximality is an invariant of the representation
// rather than a bookkeeping concern. Validation is O(n^2) over stick pairs
// with exact integer interval tests.

#include <optional>
#include <string>
#include <vector>

#include "latticeknots/geometry.hpp"

namespace latknot {

struct Component {
    std::vector<LatticePoint> corners;  // cyclic order, length >= 4

    std::size_t size() const { return corners.size(); }

    const LatticePoint& corner(std::size_t i) const { return corners[i % corners.size()]; }

    // Stick i runs from corner i to corner i+1 (cyclically).
    Segment stick(std::size_t i) const {
        return Segment::between(corner(i), corner(i + 1));
    }

    std::vector<Segment> sticks() const {
        std::vector<Segment> out;
        out.reserve(corners.size());
        for (std::size_t i = 0; i < corners.size(); ++i) out.push_back(stick(i));
        return out;
    }

    // True when every corner shares the same coordinate along `a` (the
    // component lies in a plane perpendicular to `a`).
    bool planar_in(Axis a) const {
        for (const auto& p : corners)
            if (p[a] != corners.front()[a]) return false;
        return true;
    }

    std::optional<Axis> planar_axis() const {
        for (Axis a : kAxes)
            if (planar_in(a)) return a;
        return std::nullopt;
    }
};

struct Conformation {
    std::vector<Component> components;

    std::size_t total_sticks() const {
        std::size_t n = 0;
        for (const auto& c : components) n += c.size();
        return n;
    }
};

// Addresses one stick: component index, stick index within the cyclic order.
struct StickRef {
    std::size_t component = 0;
    std::size_t stick = 0;
    Axis axis = Axis::X;
    LatticePoint a, b;  // endpoints; differ only along `axis`

    friend bool operator==(const StickRef&, const StickRef&) = default;

    std::string str() const {
        return "c" + std::to_string(component) + ":s" + std::to_string(stick) + ":" +
               axis_name(axis) + a.str() + "-" + b.str();
    }
};

inline StickRef stick_ref(const Conformation& c, std::size_t comp, std::size_t idx) {
    const Component& k = c.components[comp];
    Segment s = k.stick(idx);
    return StickRef{comp, idx % k.size(), s.axis, s.a, s.b};
}

struct AxisStickCounts {
    std::size_t px = 0, py = 0, pz = 0;  // sticks parallel to each axis
    std::size_t cx = 0, cy = 0, cz = 0;  // trivial components planar in each axis

    std::size_t total() const { return px + py + pz; }
    std::size_t sticks(Axis a) const {
        switch (a) {
            case Axis::X: return px;
            case Axis::Y: return py;
            default: return pz;
        }
    }
    std::size_t planar_components(Axis a) const {
        switch (a) {
            case Axis::X: return cx;
            case Axis::Y: return cy;
            default: return cz;
        }
    }
};

struct Violation {
    std::string kind;
    std::string message;
    std::vector<StickRef> sticks;
};

struct ValidationReport {
    std::vector<Violation> violations;
    bool ok() const { return violations.empty(); }

    std::string str() const {
        if (ok()) return "ok";
        std::string s;
        for (const auto& v : violations) {
            s += v.kind + ": " + v.message;
            for (const auto& r : v.sticks) s += " [" + r.str() + "]";
            s += "\n";
        }
        return s;
    }
};

namespace detail {

inline int count_diff_axes(const LatticePoint& p, const LatticePoint& q) {
    int n = 0;
    for (Axis a : kAxes)
        if (p[a] != q[a]) ++n;
    return n;
}

}  // namespace detail

// Checks every structural invariant: corner counts, axis-parallel steps,
// corner maximality (no collinear consecutive sticks) and self-avoidance
// within and across components. Violations are data, not errors.
inline ValidationReport validate(const Conformation& c) {
    ValidationReport rep;
    if (c.components.empty()) {
        rep.violations.push_back({"empty", "conformation has no components", {}});
        return rep;
    }

    for (std::size_t ci = 0; ci < c.components.size(); ++ci) {
        const Component& k = c.components[ci];
        if (k.size() < 4) {
            rep.violations.push_back(
                {"too-few-corners",
                 "component " + std::to_string(ci) + " has " + std::to_string(k.size()) +
                     " corners (minimum 4)",
                 {}});
            continue;
        }
        bool steps_ok = true;
        for (std::size_t i = 0; i < k.size(); ++i) {
            int nd = detail::count_diff_axes(k.corner(i), k.corner(i + 1));
            if (nd != 1) {
                rep.violations.push_back(
                    {"bad-step",
                     "corners " + k.corner(i).str() + " -> " + k.corner(i + 1).str() +
                         " differ in " + std::to_string(nd) + " axes (want 1)",
                     {}});
                steps_ok = false;
            }
        }
        if (!steps_ok) continue;

        for (std::size_t i = 0; i < k.size(); ++i) {
            Segment s = k.stick(i);
            Segment t = k.stick(i + 1);
            if (s.axis == t.axis) {
                rep.violations.push_back({"collinear-consecutive-sticks",
                                          "sticks " + std::to_string(i) + " and " +
                                              std::to_string((i + 1) % k.size()) +
                                              " of component " + std::to_string(ci) +
                                              " share axis " + axis_name(s.axis),
                                          {stick_ref(c, ci, i), stick_ref(c, ci, i + 1)}});
            }
        }
    }
    if (!rep.ok()) return rep;  // geometry below assumes well-formed corner lists

    // Self-avoidance: non-adjacent sticks must be disjoint; adjacent sticks
    // meet exactly at their shared corner.
    for (std::size_t ci = 0; ci < c.components.size(); ++ci) {
        const Component& k = c.components[ci];
        const std::size_t n = k.size();
        for (std::size_t i = 0; i < n; ++i) {
            Segment si = k.stick(i);
            for (std::size_t j = i + 1; j < n; ++j) {
                Segment sj = k.stick(j);
                const bool adjacent = (j == i + 1) || (i == 0 && j == n - 1);
                if (adjacent) {
                    const LatticePoint& shared = (j == i + 1) ? k.corner(j) : k.corner(0);
                    if (!segments_meet_only_at(si, sj, shared)) {
                        rep.violations.push_back({"self-intersection",
                                                  "adjacent sticks overlap beyond their shared corner",
                                                  {stick_ref(c, ci, i), stick_ref(c, ci, j)}});
                    }
                } else if (segments_intersect(si, sj)) {
                    rep.violations.push_back({"self-intersection",
                                              "non-adjacent sticks intersect",
                                              {stick_ref(c, ci, i), stick_ref(c, ci, j)}});
                }
            }
        }
    }

    for (std::size_t ci = 0; ci < c.components.size(); ++ci)
        for (std::size_t cj = ci + 1; cj < c.components.size(); ++cj) {
            const Component& a = c.components[ci];
            const Component& b = c.components[cj];
            for (std::size_t i = 0; i < a.size(); ++i)
                for (std::size_t j = 0; j < b.size(); ++j)
                    if (segments_intersect(a.stick(i), b.stick(j)))
                        rep.violations.push_back({"component-intersection",
                                                  "sticks of distinct components intersect",
                                                  {stick_ref(c, ci, i), stick_ref(c, cj, j)}});
        }

    return rep;
}

inline void require_valid(const Conformation& c, const char* who) {
    ValidationReport r = validate(c);
    if (!r.ok()) throw std::invalid_argument(std::string(who) + ": invalid conformation\n" + r.str());
}

inline AxisStickCounts stick_count(const Conformation& c) {
    require_valid(c, "stick_count");
    AxisStickCounts n;
    for (const auto& k : c.components) {
        for (std::size_t i = 0; i < k.size(); ++i) {
            switch (k.stick(i).axis) {
                case Axis::X: ++n.px; break;
                case Axis::Y: ++n.py; break;
                case Axis::Z: ++n.pz; break;
            }
        }
        if (auto a = k.planar_axis()) {
            switch (*a) {
                case Axis::X: ++n.cx; break;
                case Axis::Y: ++n.cy; break;
                case Axis::Z: ++n.cz; break;
            }
        }
    }
    return n;
}

// Applies a signed-permutation isometry + scale + translation. Stick counts
// are preserved (and permuted across axes per the isometry).
inline Conformation transformed(const Conformation& c, const Transform& t) {
    t.check();
    require_valid(c, "transform");
    Conformation out;
    out.components.reserve(c.components.size());
    for (const auto& k : c.components) {
        Component nk;
        nk.corners.reserve(k.size());
        for (const auto& p : k.corners) nk.corners.push_back(t.apply(p));
        out.components.push_back(std::move(nk));
    }
    return out;
}

struct BoundingBox {
    LatticePoint lo, hi;
    Coord extent(Axis a) const { return hi[a] - lo[a]; }
    Coord max_extent() const {
        Coord m = 0;
        for (Axis a : kAxes)
            if (extent(a) > m) m = extent(a);
        return m;
    }
};

inline BoundingBox bounding_box(const Conformation& c) {
    BoundingBox b;
    bool first = true;
    for (const auto& k : c.components)
        for (const auto& p : k.corners) {
            if (first) {
                b.lo = b.hi = p;
                first = false;
                continue;
            }
            for (Axis a : kAxes) {
                if (p[a] < b.lo[a]) b.lo[a] = p[a];
                if (p[a] > b.hi[a]) b.hi[a] = p[a];
            }
        }
    if (first) throw std::invalid_argument("bounding_box: empty conformation");
    return b;
}

}  // namespace latknot
