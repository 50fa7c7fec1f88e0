#pragma once

// Geometric features used by the constructions: torsion sticks and the
// four-stick hooks (clean / exterior L's) that serve as gluing sites.

#include <vector>

#include "latticeknots/conformation.hpp"

namespace latknot {

// A stick whose two neighbors look perpendicular when sighted along it,
// i.e. the neighbor axes differ.
inline std::vector<StickRef> torsion_sticks(const Conformation& c) {
    require_valid(c, "torsion_sticks");
    if (c.components.size() != 1)
        throw std::invalid_argument("torsion_sticks: expects a single component");
    const Component& k = c.components[0];
    const std::size_t n = k.size();
    std::vector<StickRef> out;
    for (std::size_t i = 0; i < n; ++i) {
        Axis prev = k.stick((i + n - 1) % n).axis;
        Axis next = k.stick(i + 1).axis;
        if (prev != next) out.push_back(stick_ref(c, 0, i));
    }
    return out;
}

// Four consecutive sticks s1..s4 with s1 || s4 and s2, s3 spanning a closed
// rectangle R that the rest of the conformation avoids, with s1 and s4
// hanging off the same side of R's plane.
struct CleanL {
    StickRef s1, s2, s3, s4;
    Axis normal = Axis::Z;   // axis of s1/s4; normal of R's plane
    Coord level = 0;         // plane coordinate
    Axis u_axis = Axis::X, v_axis = Axis::Y;
    Interval u_range, v_range;
    int side = 0;            // sign of the half-space holding s1 and s4
    LatticePoint A, B, C, D;  // A = s1^s2, B = s2^s3, C = s3^s4, D opposite B
};

namespace detail {

inline bool stick_hits_rectangle(const Segment& s, const CleanL& L) {
    Interval n_overlap = Interval::meet(s.extent(L.normal), Interval{L.level, L.level});
    if (n_overlap.empty()) return false;
    if (Interval::meet(s.extent(L.u_axis), L.u_range).empty()) return false;
    if (Interval::meet(s.extent(L.v_axis), L.v_range).empty()) return false;
    return true;
}

}  // namespace detail

inline std::vector<CleanL> detect_clean_Ls(const Conformation& c) {
    require_valid(c, "detect_clean_Ls");
    std::vector<CleanL> out;
    for (std::size_t ci = 0; ci < c.components.size(); ++ci) {
        const Component& k = c.components[ci];
        const std::size_t n = k.size();
        for (std::size_t i = 0; i < n; ++i) {
            Segment s1 = k.stick(i), s2 = k.stick(i + 1), s3 = k.stick(i + 2), s4 = k.stick(i + 3);
            if (s1.axis != s4.axis) continue;  // consecutive-stick validity gives the rest

            CleanL L;
            L.s1 = stick_ref(c, ci, i);
            L.s2 = stick_ref(c, ci, i + 1);
            L.s3 = stick_ref(c, ci, i + 2);
            L.s4 = stick_ref(c, ci, i + 3);
            L.normal = s1.axis;
            L.A = k.corner(i + 1);
            L.B = k.corner(i + 2);
            L.C = k.corner(i + 3);
            L.level = L.A[L.normal];
            L.u_axis = s2.axis;
            L.v_axis = s3.axis;
            L.u_range = Interval::of(L.A[L.u_axis], L.B[L.u_axis]);
            L.v_range = Interval::of(L.B[L.v_axis], L.C[L.v_axis]);
            L.D = L.A;
            L.D[L.v_axis] = L.C[L.v_axis];

            const Coord h1 = k.corner(i)[L.normal] - L.level;
            const Coord h4 = k.corner(i + 4)[L.normal] - L.level;
            if ((h1 > 0) != (h4 > 0)) continue;  // s1, s4 on opposite sides
            L.side = h1 > 0 ? +1 : -1;

            // R meets the conformation only within s1..s4.
            bool clean = true;
            for (std::size_t cj = 0; cj < c.components.size() && clean; ++cj) {
                const Component& kj = c.components[cj];
                for (std::size_t j = 0; j < kj.size() && clean; ++j) {
                    if (cj == ci) {
                        std::size_t rel = (j + n - i) % n;
                        if (rel <= 3) continue;  // s1..s4 themselves
                    }
                    if (detail::stick_hits_rectangle(kj.stick(j), L)) clean = false;
                }
            }
            if (clean) out.push_back(L);
        }
    }
    return out;
}

// Clean L's whose rectangle plane bounds the whole conformation on the side
// of s1 and s4.
inline std::vector<CleanL> detect_exterior_Ls(const Conformation& c) {
    std::vector<CleanL> out;
    for (const CleanL& L : detect_clean_Ls(c)) {
        bool exterior = true;
        for (const auto& k : c.components) {
            for (const auto& p : k.corners) {
                Coord d = p[L.normal] - L.level;
                if (d != 0 && ((d > 0) != (L.side > 0))) {
                    exterior = false;
                    break;
                }
            }
            if (!exterior) break;
        }
        if (exterior) out.push_back(L);
    }
    return out;
}

}  // namespace latknot
