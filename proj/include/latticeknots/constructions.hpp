#pragma once

// Parametric conformation generators: the 6p-stick (p,p+1)-torus family,
// connected sum at the cost of six sticks, parallel-copy satellite links and
// permutation-word satellites, and the 4n+4-stick two-braid link family.
//
// The torus generator walks 2p rounds of (x,y,z) sticks whose per-axis level
// cycles are the perfect shuffle (x), the reversing shuffle (y) and its
// inverse (z); correctness is certified by stick counts and Jones values
// against the closed torus formula, not by construction.

#include <algorithm>
#include <numeric>
#include <vector>

#include "latticeknots/conformation.hpp"
#include "latticeknots/features.hpp"
#include "latticeknots/moves.hpp"

namespace latknot {

namespace detail {

// next-level maps on 1..2p, stored 1-based in index 0..2p
struct LevelCycles {
    std::vector<int> sx, sy, sz;
};

inline LevelCycles torus_level_cycles(int p) {
    const int m = 2 * p;
    std::vector<int> S(m + 1), R(m + 1), Rinv(m + 1);
    for (int i = 1; i <= p; ++i) S[i] = p + i;
    for (int j = p + 1; j < m; ++j) S[j] = j - p + 1;
    S[m] = 1;
    for (int i = 1; i <= p; ++i) R[i] = m + 1 - i;
    R[p + 1] = 1;
    for (int j = p + 2; j <= m; ++j) R[j] = m + 2 - j;
    for (int v = 1; v <= m; ++v) Rinv[R[v]] = v;
    return {S, R, Rinv};
}

}  // namespace detail

// Composite of two conformations: k1 glued at an exterior L, k2 at a clean
// L, eliminating six sticks. k2 is expanded around its hook to make room,
// both hook rectangles are scaled to congruent squares, and the four hanging
// sticks consolidate into two sticks through the shared plane. Only
// orientation-preserving placements are used, so chirality is preserved and
// the Jones polynomials multiply.
struct ComposePick {
    std::size_t exterior_index = 0;  // into detect_exterior_Ls(k1)
    std::size_t clean_index = 0;     // into detect_clean_Ls(k2)
};

namespace detail {

inline CleanL find_hook(const Conformation& c, const LatticePoint& corner_b, bool exterior) {
    auto hooks = exterior ? detect_exterior_Ls(c) : detect_clean_Ls(c);
    for (const CleanL& L : hooks)
        if (L.B == corner_b) return L;  // corner points are unique in a valid polygon
    throw std::logic_error("compose: hook lost while normalizing");
}

// Rotate+translate so the hook's rectangle lies in {z == 0} with the hanging
// sticks on `want_side`; returns the conformation with the hook re-detected.
inline std::pair<Conformation, CleanL> orient_hook_to_plane(const Conformation& c, const CleanL& L,
                                                            int want_side, bool exterior) {
    Transform rot = rotation_taking(L.normal, L.side, Axis::Z, want_side);
    LatticePoint a_img = rot.apply(L.A);
    Conformation out = transformed(transformed(c, rot),
                                   Transform::translation(LatticePoint{0, 0, -a_img.z}));
    LatticePoint b_img = rot.apply(L.B);
    b_img.z -= a_img.z;
    CleanL hook = find_hook(out, b_img, exterior);
    return {std::move(out), hook};
}

}  // namespace detail

inline Conformation compose(const Conformation& k1, const Conformation& k2,
                            const ComposePick& pick = {}) {
    require_valid(k1, "compose (first factor)");
    require_valid(k2, "compose (second factor)");
    if (k1.components.size() != 1 || k2.components.size() != 1)
        throw std::invalid_argument("compose: factors must be single-component conformations");

    auto exts = detect_exterior_Ls(k1);
    if (exts.empty() || pick.exterior_index >= exts.size())
        throw std::invalid_argument("compose: first factor has no usable exterior L");
    auto cleans = detect_clean_Ls(k2);
    if (cleans.empty() || pick.clean_index >= cleans.size())
        throw std::invalid_argument("compose: second factor has no usable clean L");

    // place k1 above z=0 with its hook rectangle in the plane, k2 below
    auto [a, la] = detail::orient_hook_to_plane(k1, exts[pick.exterior_index], +1, true);
    auto [b, lb] = detail::orient_hook_to_plane(k2, cleans[pick.clean_index], -1, false);

    // square both rectangles with the least common side
    auto xlen = [](const CleanL& L) {
        return L.u_axis == Axis::X ? L.u_range.length() : L.v_range.length();
    };
    auto ylen = [](const CleanL& L) {
        return L.u_axis == Axis::Y ? L.u_range.length() : L.v_range.length();
    };
    const Coord side = std::lcm(std::lcm(xlen(la), ylen(la)), std::lcm(xlen(lb), ylen(lb)));
    {
        LatticePoint ba = la.B, bb = lb.B;
        ba.x *= side / xlen(la);
        ba.y *= side / ylen(la);
        bb.x *= side / xlen(lb);
        bb.y *= side / ylen(lb);
        a = transformed(a, Transform::scaling(side / xlen(la), side / ylen(la), 1));
        b = transformed(b, Transform::scaling(side / xlen(lb), side / ylen(lb), 1));
        la = detail::find_hook(a, ba, true);
        lb = detail::find_hook(b, bb, false);
    }

    // open a moat around k2's hook big enough for all of k1
    const Coord room = bounding_box(a).max_extent() + 2;
    b = expand_halfspace(b, Axis::Z, 0, +1, room);
    b = expand_halfspace(b, Axis::X, std::min(lb.A.x, lb.C.x), -1, room);
    b = expand_halfspace(b, Axis::X, std::max(lb.A.x, lb.C.x), +1, room);
    b = expand_halfspace(b, Axis::Y, std::min(lb.A.y, lb.C.y), -1, room);
    b = expand_halfspace(b, Axis::Y, std::max(lb.A.y, lb.C.y), +1, room);
    lb = detail::find_hook(b, lb.B, false);

    // align k1's square onto k2's: middle corner to middle corner, and the
    // hook paths must coincide, using rotations about z only
    for (int quarter = 0; quarter < 4; ++quarter) {
        Transform rz;  // (x,y) -> (-y,x), applied `quarter` times below
        rz.perm = {1, 0, 2};
        rz.sign = {+1, -1, +1};
        Conformation cand = a;
        for (int q = 0; q < quarter; ++q) cand = transformed(cand, rz);
        CleanL lc = [&] {
            LatticePoint p = la.B;
            for (int q = 0; q < quarter; ++q) {
                Coord nx = -p.y, ny = p.x;
                p.x = nx;
                p.y = ny;
            }
            return detail::find_hook(cand, p, true);
        }();
        Transform shift = Transform::translation(
            LatticePoint{lb.B.x - lc.B.x, lb.B.y - lc.B.y, 0});
        cand = transformed(cand, shift);
        lc = detail::find_hook(cand, lb.B, true);
        // the two squares must coincide corner for corner
        bool a_on_a = lc.A == lb.A && lc.C == lb.C;
        bool a_on_c = lc.A == lb.C && lc.C == lb.A;
        if (!a_on_a && !a_on_c) continue;

        // splice: drop s2,s3 of both hooks, fuse the hanging sticks
        const Component& ka = cand.components[0];
        const Component& kb = b.components[0];
        auto arc_after_hook = [](const Component& k, const CleanL& L) {
            // corners from the hook's far end (after s4) around to before s1
            std::vector<LatticePoint> out;
            const std::size_t n = k.size();
            std::size_t begin = (L.s4.stick + 1) % n;  // corner index after s4
            for (std::size_t i = 0; i < n - 3; ++i) out.push_back(k.corner(begin + i));
            return out;  // starts at s4's outer corner, ends at s1's outer corner
        };
        std::vector<LatticePoint> arc_a = arc_after_hook(ka, lc);
        std::vector<LatticePoint> arc_b = arc_after_hook(kb, lb);
        // arc_a runs s4_outer..s1_outer; when a's s1 fuses with b's s1 (both
        // at corner A), b's arc must be walked back from its s1 end
        if (a_on_a) std::reverse(arc_b.begin(), arc_b.end());
        Component merged;
        merged.corners = arc_a;
        merged.corners.insert(merged.corners.end(), arc_b.begin(), arc_b.end());
        Conformation out{{merged}};
        ValidationReport rep = validate(out);
        if (!rep.ok())
            throw std::logic_error("compose: aligned splice failed validation:\n" + rep.str());
        return out;
    }
    throw std::logic_error("compose: no aligning rotation matched the hook squares");
}

// Minimal-stick conformation of the (p, p+1)-torus knot: 6p sticks, 2p per
// axis, properly leveled by construction.
inline Conformation torus_knot(int p) {
    if (p < 2) throw std::invalid_argument("torus_knot: need p >= 2");
    auto cyc = detail::torus_level_cycles(p);
    Component k;
    LatticePoint cur{1, 1, p};
    for (int round = 0; round < 2 * p; ++round) {
        k.corners.push_back(cur);
        cur.x = cyc.sx[cur.x];
        k.corners.push_back(cur);
        cur.y = cyc.sy[cur.y];
        k.corners.push_back(cur);
        cur.z = cyc.sz[cur.z];
    }
    if (!(cur == k.corners.front()))
        throw std::logic_error("torus_knot: walk failed to close");
    Conformation c{{k}};
    require_valid(c, "torus_knot");
    return c;
}

// ---- satellites -----------------------------------------------------------

// A braid word in which any two strands cross at most once, all crossings
// with the same handedness. Letters are +-g for adjacent positions (g, g+1),
// 1-based; the sign must be uniform.
struct PermutationWord {
    int strands = 1;
    std::vector<int> letters;

    int sign() const {
        if (letters.empty()) return 0;
        return letters.front() > 0 ? +1 : -1;
    }

    // strand starting at position i ends at position permutation()[i]
    std::vector<int> permutation() const {
        std::vector<int> pos(strands);
        for (int i = 0; i < strands; ++i) pos[i] = i;
        for (int letter : letters) {
            int g = letter > 0 ? letter : -letter;
            if (g < 1 || g >= strands)
                throw std::invalid_argument("permutation word: generator out of range");
            std::swap(pos[g - 1], pos[g]);
        }
        std::vector<int> perm(strands);
        for (int p = 0; p < strands; ++p) perm[pos[p]] = p;
        return perm;
    }

    void check() const {
        if (strands < 1) throw std::invalid_argument("permutation word: need at least one strand");
        std::vector<std::vector<int>> crossed(strands, std::vector<int>(strands, 0));
        std::vector<int> pos(strands);
        for (int i = 0; i < strands; ++i) pos[i] = i;
        for (int letter : letters) {
            if ((letter > 0) != (letters.front() > 0))
                throw std::invalid_argument("permutation word: crossings must share one sign");
            int g = letter > 0 ? letter : -letter;
            if (g < 1 || g >= strands)
                throw std::invalid_argument("permutation word: generator out of range");
            int a = pos[g - 1], b = pos[g];
            if (++crossed[std::min(a, b)][std::max(a, b)] > 1)
                throw std::invalid_argument("permutation word: a strand pair crosses twice");
            std::swap(pos[g - 1], pos[g]);
        }
    }
};

namespace detail {

inline Coord satellite_scale(const Conformation& j, int n) {
    return (static_cast<Coord>(n) + 1) * bounding_box(j).max_extent();
}

}  // namespace detail

// The n-component link of parallel scaled copies of j, successive copies
// translated by (1,1,-1).
inline Conformation satellite_base(const Conformation& j, int n) {
    require_valid(j, "satellite_base");
    if (j.components.size() != 1)
        throw std::invalid_argument("satellite_base: companion must be a single component");
    if (n < 1) throw std::invalid_argument("satellite_base: need n >= 1");
    const Coord f = detail::satellite_scale(j, n);
    Conformation scaled = transformed(j, Transform::scaling(f, f, f));
    Conformation out;
    for (int k = 0; k < n; ++k) {
        Transform t = Transform::translation(LatticePoint{k, k, -k});
        out.components.push_back(transformed(scaled, t).components[0]);
    }
    require_valid(out, "satellite_base (result)");
    return out;
}

// Satellite that differs from the parallel-copy link by one permutation word
// inserted at a torsion stick: the n parallel copies of that stick are
// replaced by connectors joining copy i's incoming neighbor to copy
// perm(i)'s outgoing neighbor, extending or shortening the neighbor sticks
// to meet. Total stick count is exactly n times the companion's. The
// handedness of the inserted crossings follows the word's sign (realized by
// reversing the companion's traversal when needed).
inline Conformation satellite(const Conformation& j, const PermutationWord& w,
                              const StickRef& torsion) {
    require_valid(j, "satellite");
    if (j.components.size() != 1)
        throw std::invalid_argument("satellite: companion must be a single component");
    w.check();
    const int n = w.strands;
    if (n == 1 || w.letters.empty()) return satellite_base(j, n);

    // the chosen stick must be a torsion stick
    bool is_torsion = false;
    for (const StickRef& s : torsion_sticks(j))
        if (s.component == torsion.component && s.stick == torsion.stick) is_torsion = true;
    if (!is_torsion) throw std::invalid_argument("satellite: chosen stick is not a torsion stick");

    // rotate the torsion stick onto the z-axis
    Segment t_seg = j.components[0].stick(torsion.stick);
    Conformation base = transformed(j, rotation_taking(t_seg.axis, +1, Axis::Z, +1));
    std::size_t t_idx = torsion.stick;

    // realize the requested handedness: the geometric sign of the inserted
    // crossings flips with the traversal direction
    {
        const Component& k = base.components[0];
        Coord zb = k.corner(t_idx).z, zc = k.corner(t_idx + 1).z;
        int natural = zb > zc ? +1 : -1;
        if (w.sign() != 0 && w.sign() != natural) {
            Component rev;
            const std::size_t m = k.size();
            for (std::size_t i = 0; i < m; ++i) rev.corners.push_back(k.corner(m - 1 - i));
            // stick t (corners t_idx -> t_idx+1) is now stick m-2-t_idx
            t_idx = (m - 2 - t_idx + m) % m;
            base = Conformation{{rev}};
        }
    }

    const Coord f = detail::satellite_scale(base, n);
    base = transformed(base, Transform::scaling(f, f, f));
    const Component& k0 = base.components[0];
    const std::size_t m = k0.size();

    std::vector<int> perm = w.permutation();

    // copy i's corners, translated; corner indices preserved
    auto copy_corner = [&](int i, std::size_t idx) {
        LatticePoint p = k0.corner(idx);
        p.x += i;
        p.y += i;
        p.z -= i;
        return p;
    };

    // axes of the neighbors of the torsion stick (one x-stick, one y-stick)
    Axis before_axis = k0.stick((t_idx + m - 1) % m).axis;

    Conformation out;
    std::vector<bool> visited(n, false);
    for (int seed = 0; seed < n; ++seed) {
        if (visited[seed]) continue;
        Component merged;
        int i = seed;
        do {
            visited[i] = true;
            const int target = perm[i];
            // walk copy i from the corner after the torsion stick (C side)
            // around to the corner before it (B side)
            // B = corner(t_idx) ends the incoming neighbor, C = corner(t_idx+1)
            // starts the outgoing one
            LatticePoint c_corner = copy_corner(i, t_idx + 1);
            LatticePoint b_corner = copy_corner(i, t_idx);
            // adjust B to meet the connector toward copy `target`
            LatticePoint b_new = b_corner, c_of_target = copy_corner(target, t_idx + 1);
            if (before_axis == Axis::X)
                b_new.x = c_of_target.x;  // x-neighbor extends to the target column
            else
                b_new.y = c_of_target.y;
            // adjust C to meet the connector from the copy wired into us
            int source = 0;
            for (int s = 0; s < n; ++s)
                if (perm[s] == i) source = s;
            LatticePoint b_of_source = copy_corner(source, t_idx);
            LatticePoint c_new = c_corner;
            if (before_axis == Axis::X)
                c_new.y = b_of_source.y;
            else
                c_new.x = b_of_source.x;

            merged.corners.push_back(c_new);
            for (std::size_t step = 2; step < m; ++step)
                merged.corners.push_back(copy_corner(i, t_idx + step));
            merged.corners.push_back(b_new);
            i = target;
        } while (i != seed);
        out.components.push_back(std::move(merged));
    }
    require_valid(out, "satellite (result)");
    if (out.total_sticks() != n * m)
        throw std::logic_error("satellite: stick count drifted");
    return out;
}

// ---- two-braid links -------------------------------------------------------

// Two-component link with |linking number| n built from 4n+4 sticks: a planar
// rectangle plus a coil of 2n xy-sticks and 2n sticks through the plane,
// each xy-stick crossing the rectangle boundary exactly once. Realizable for
// n = 1 and n >= 4; the 4n+4 count is impossible for n = 2, 3.
inline Conformation two_braid_link(int n) {
    if (n < 1) throw std::invalid_argument("two_braid_link: need n >= 1");
    if (n == 2 || n == 3)
        throw std::invalid_argument(
            "two_braid_link: 4n+4 sticks cannot realize n = 2 or 3; use the catalog");

    const Coord W = n + 4;
    Conformation out;
    {
        Component rect;
        rect.corners = {{0, 0, 0}, {W, 0, 0}, {W, W, 0}, {0, W, 0}};
        out.components.push_back(rect);
    }

    Component coil;
    auto pt = [&](Coord x, Coord y, Coord z) { coil.corners.push_back(LatticePoint{x, y, z}); };

    if (n == 1) {
        Coord r = 2;
        pt(-1, r, 1);
        pt(2, r, 1);
        pt(2, r, -1);
        pt(-1, r, -1);
        out.components.push_back(coil);
        require_valid(out, "two_braid_link");
        return out;
    }

    const int m = n / 2;
    const bool odd = n % 2 == 1;
    // rows descend along the cycle so returning strands clear earlier risers
    auto row = [&](int k) { return static_cast<Coord>(m + 3 - k); };  // r_0 > r_1 > ...
    auto col = [&](int k) { return static_cast<Coord>(k + 2); };

    pt(-1, row(0), 2);  // first over-x enters from the west
    for (int k = 0; k + 1 < m; ++k) {
        pt(col(k), row(k), 2);        // over-x(r_k) ends inside
        pt(col(k), row(k), -2);
        pt(col(k), -1, -2);           // under-y exits south
        pt(col(k), -1, 1);
        pt(col(k), row(k + 1), 1);    // over-y re-enters
        pt(col(k), row(k + 1), -1);
        pt(-1, row(k + 1), -1);       // under-x exits west
        pt(-1, row(k + 1), 2);        // riser to the next over-x
    }
    if (!odd) {
        pt(col(m - 1), row(m - 1), 2);
        pt(col(m - 1), row(m - 1), -2);
        pt(col(m - 1), -1, -2);
        pt(col(m - 1), -1, 3);
        pt(col(m - 1), row(0), 3);    // wrap over-y back to the top row
        pt(col(m - 1), row(0), -3);
        pt(-1, row(0), -3);           // final under-x; closes via the west riser
    } else {
        // the last stage doubles up with an east excursion and wraps from an
        // extra column east of all the others
        const Coord a = col(m - 1) + 1;
        pt(col(m - 1), row(m - 1), 2);
        pt(col(m - 1), row(m - 1), -4);
        pt(W + 1, row(m - 1), -4);    // under-x exits east
        pt(W + 1, row(m - 1), 4);
        pt(a, row(m - 1), 4);         // second over-x enters from the east
        pt(a, row(m - 1), -2);
        pt(a, -1, -2);                // under-y exits south
        pt(a, -1, 5);
        pt(a, row(0), 5);             // wrap over-y back to the top row
        pt(a, row(0), -3);
        pt(-1, row(0), -3);           // final under-x; closes via the west riser
    }
    out.components.push_back(coil);
    require_valid(out, "two_braid_link");
    return out;
}

}  // namespace latknot
