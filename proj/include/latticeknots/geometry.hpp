#pragma once

// Exact integer lattice geometry: points, axes, axis-aligned segments and
// the signed-permutation isometries of the lattice. No floating point.

#include <array>
#include <cstdint>
#include <cstdlib>
#include <stdexcept>
#include <string>

namespace latknot {

using Coord = long long;

enum class Axis : int { X = 0, Y = 1, Z = 2 };

inline constexpr std::array<Axis, 3> kAxes = {Axis::X, Axis::Y, Axis::Z};

inline int axis_index(Axis a) { return static_cast<int>(a); }
inline Axis axis_from_index(int i) {
    if (i < 0 || i > 2) throw std::invalid_argument("axis index out of range");
    return static_cast<Axis>(i);
}
inline char axis_name(Axis a) { return "xyz"[axis_index(a)]; }

// The two axes orthogonal to a, in cyclic order (a, u, v).
inline std::pair<Axis, Axis> other_axes(Axis a) {
    int i = axis_index(a);
    return {axis_from_index((i + 1) % 3), axis_from_index((i + 2) % 3)};
}

struct LatticePoint {
    Coord x = 0, y = 0, z = 0;

    Coord operator[](Axis a) const {
        switch (a) {
            case Axis::X: return x;
            case Axis::Y: return y;
            default: return z;
        }
    }
    Coord& operator[](Axis a) {
        switch (a) {
            case Axis::X: return x;
            case Axis::Y: return y;
            default: return z;
        }
    }

    friend bool operator==(const LatticePoint&, const LatticePoint&) = default;
    friend auto operator<=>(const LatticePoint&, const LatticePoint&) = default;

    friend LatticePoint operator+(LatticePoint p, const LatticePoint& q) {
        p.x += q.x; p.y += q.y; p.z += q.z; return p;
    }
    friend LatticePoint operator-(LatticePoint p, const LatticePoint& q) {
        p.x -= q.x; p.y -= q.y; p.z -= q.z; return p;
    }

    std::string str() const {
        return "(" + std::to_string(x) + "," + std::to_string(y) + "," + std::to_string(z) + ")";
    }
};

// Closed integer interval [lo, hi]; degenerate (lo == hi) for a fixed coordinate.
struct Interval {
    Coord lo = 0, hi = 0;

    static Interval of(Coord a, Coord b) { return a <= b ? Interval{a, b} : Interval{b, a}; }
    bool contains(Coord v) const { return lo <= v && v <= hi; }
    bool contains_strictly(Coord v) const { return lo < v && v < hi; }
    Coord length() const { return hi - lo; }

    friend bool operator==(const Interval&, const Interval&) = default;

    // Intersection; empty() when disjoint.
    static Interval meet(const Interval& a, const Interval& b) {
        return Interval{a.lo > b.lo ? a.lo : b.lo, a.hi < b.hi ? a.hi : b.hi};
    }
    bool empty() const { return lo > hi; }
    bool is_point() const { return lo == hi; }
};

// An axis-parallel segment, stored as its per-axis extents (exactly one axis
// has positive length).
struct Segment {
    LatticePoint a, b;
    Axis axis = Axis::X;

    static Segment between(const LatticePoint& p, const LatticePoint& q) {
        int ndiff = 0;
        Axis ax = Axis::X;
        for (Axis c : kAxes) {
            if (p[c] != q[c]) { ++ndiff; ax = c; }
        }
        if (ndiff != 1) throw std::invalid_argument("segment endpoints must differ in exactly one axis");
        return Segment{p, q, ax};
    }

    Interval extent(Axis c) const { return Interval::of(a[c], b[c]); }
    Coord length() const { return extent(axis).length(); }
    // +1 when the segment runs toward increasing coordinates.
    int direction() const { return b[axis] > a[axis] ? +1 : -1; }

    // Intersection of two axis-parallel segments is a box; for validity checks
    // we only care whether it is empty, a single point, or larger.
    friend bool segments_intersect(const Segment& s, const Segment& t) {
        for (Axis c : kAxes)
            if (Interval::meet(s.extent(c), t.extent(c)).empty()) return false;
        return true;
    }

    friend bool segments_meet_only_at(const Segment& s, const Segment& t, const LatticePoint& p) {
        for (Axis c : kAxes) {
            Interval m = Interval::meet(s.extent(c), t.extent(c));
            if (m.empty()) return false;
            if (!(m.is_point() && m.lo == p[c])) return false;
        }
        return true;
    }
};

// Signed coordinate permutation (one of the 48 lattice point symmetries),
// followed by a per-axis positive integer scale, followed by a translation.
struct Transform {
    std::array<int, 3> perm = {0, 1, 2};   // image axis index of source axis i
    std::array<int, 3> sign = {1, 1, 1};   // sign applied on the image axis
    std::array<Coord, 3> scale = {1, 1, 1};  // per IMAGE axis, >= 1
    LatticePoint translate{};

    static Transform identity() { return Transform{}; }

    static Transform translation(const LatticePoint& t) {
        Transform m;
        m.translate = t;
        return m;
    }

    static Transform scaling(Coord sx, Coord sy, Coord sz) {
        Transform m;
        m.scale = {sx, sy, sz};
        m.check();
        return m;
    }

    void check() const {
        std::array<bool, 3> seen{false, false, false};
        for (int i = 0; i < 3; ++i) {
            if (perm[i] < 0 || perm[i] > 2) throw std::invalid_argument("transform: bad permutation");
            seen[perm[i]] = true;
            if (sign[i] != 1 && sign[i] != -1) throw std::invalid_argument("transform: bad sign");
            if (scale[i] < 1) throw std::invalid_argument("transform: scale must be >= 1");
        }
        if (!(seen[0] && seen[1] && seen[2])) throw std::invalid_argument("transform: bad permutation");
    }

    // Determinant of the signed permutation part: +1 for rotations.
    int det() const {
        int parity = 1;
        for (int i = 0; i < 3; ++i)
            for (int j = i + 1; j < 3; ++j)
                if (perm[i] > perm[j]) parity = -parity;
        return parity * sign[0] * sign[1] * sign[2];
    }

    LatticePoint apply(const LatticePoint& p) const {
        std::array<Coord, 3> in = {p.x, p.y, p.z};
        std::array<Coord, 3> out = {0, 0, 0};
        for (int i = 0; i < 3; ++i) out[perm[i]] = static_cast<Coord>(sign[i]) * in[i];
        for (int i = 0; i < 3; ++i) out[i] = out[i] * scale[i];
        return LatticePoint{out[0] + translate.x, out[1] + translate.y, out[2] + translate.z};
    }

    Axis image_axis(Axis a) const { return axis_from_index(perm[axis_index(a)]); }
};

// Rotation (det +1) carrying source axis `from` with direction `from_dir`
// onto axis `to` with direction `to_dir`; the other two axes follow cyclically.
inline Transform rotation_taking(Axis from, int from_dir, Axis to, int to_dir) {
    if (std::abs(from_dir) != 1 || std::abs(to_dir) != 1)
        throw std::invalid_argument("rotation_taking: directions must be +-1");
    Transform m;
    int f = axis_index(from), t = axis_index(to);
    int shift = ((t - f) % 3 + 3) % 3;
    for (int i = 0; i < 3; ++i) m.perm[i] = (i + shift) % 3;
    m.sign = {1, 1, 1};
    m.sign[f] = from_dir * to_dir;
    if (m.det() != 1) {
        // flip one of the remaining axes to restore orientation
        int other = (f + 1) % 3;
        m.sign[other] = -m.sign[other];
    }
    m.check();
    return m;
}

}  // namespace latknot
