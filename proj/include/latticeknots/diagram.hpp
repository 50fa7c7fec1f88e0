#pragma once

// Axis projection of a properly leveled conformation into a valid link
// diagram.
//
// Coincident stick images are separated combinatorially instead of by
// epsilon arithmetic: sticks sharing an image line are ranked by height
// along the projection axis, and every 2D coordinate is an exact pair
// (integer base, integer rank) compared lexicographically. Projection-axis
// sticks contract to corner joints or tiny connector segments that can
// never be involved in a crossing, so every crossing pairs one x-stick
// image with one y-stick image, transverse, with over/under decided by
// height.

#include <algorithm>
#include <array>
#include <cassert>
#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "latticeknots/conformation.hpp"
#include "latticeknots/moves.hpp"

namespace latknot {

// base + rank * epsilon, exact.
struct Pcoord {
    Coord base = 0;
    long long rank = 0;

    friend auto operator<=>(const Pcoord&, const Pcoord&) = default;
};

struct Pt2 {
    Pcoord x, y;
    friend bool operator==(const Pt2&, const Pt2&) = default;
};

// One stick image in the projected picture.
struct TracePiece {
    enum Kind { Horizontal, Vertical, Connector } kind = Connector;
    std::size_t component = 0;
    std::size_t stick = 0;   // index in the source component
    Pt2 from, to;
    Coord height = 0;        // projection-axis coordinate (constant per stick)
    int dir2[2] = {0, 0};    // walk direction in the diagram plane
};

struct Crossing {
    std::size_t over_piece = 0, under_piece = 0;  // indices into pieces
    std::size_t over_component = 0, under_component = 0;
    Pt2 at;
    int sign = 0;  // det(over_dir, under_dir)
    // PD edge labels, filled by the arc walk: a = incoming under, then ccw.
    std::array<int, 4> pd = {0, 0, 0, 0};
};

struct PDCode {
    std::vector<std::array<int, 4>> crossings;
    int edge_count = 0;
    std::size_t free_loops = 0;  // closed components with no crossings
};

struct PlanarDiagram {
    Axis projection = Axis::Z;
    std::size_t component_count = 0;
    std::vector<TracePiece> pieces;        // all components, concatenated
    std::vector<std::size_t> piece_begin;  // per component, index into pieces
    std::vector<Crossing> crossings;
    std::size_t free_loops = 0;
    int edge_count = 0;
};

namespace detail {

inline int angle_quadrant(int dx, int dy) {
    if (dx == 1 && dy == 0) return 0;
    if (dx == 0 && dy == 1) return 1;
    if (dx == -1 && dy == 0) return 2;
    if (dx == 0 && dy == -1) return 3;
    throw std::logic_error("angle_quadrant: not an axis direction");
}

struct PieceCrossing {
    std::size_t crossing = 0;
    bool under = false;
    Pcoord along;  // position along the piece, in walk coordinates
};

}  // namespace detail

// Projects down `axis`. The conformation must be properly leveled; level it
// first if necessary.
inline PlanarDiagram project(const Conformation& input, Axis axis) {
    require_valid(input, "project");
    if (!is_properly_leveled(input))
        throw std::invalid_argument("project: conformation is not properly leveled (call properly_level first)");

    // Rotate so the projection direction is -z; cyclic (det +1) rotations
    // keep crossing signs and linking numbers comparable across axes.
    Conformation c = input;
    if (axis == Axis::X) {
        Transform t;  // (x,y,z) -> (y,z,x)
        t.perm = {2, 0, 1};
        c = transformed(c, t);
    } else if (axis == Axis::Y) {
        Transform t;  // (x,y,z) -> (z,x,y)
        t.perm = {1, 2, 0};
        c = transformed(c, t);
    }

    PlanarDiagram d;
    d.projection = axis;
    d.component_count = c.components.size();

    // Rank sticks sharing an image line by height (ties between collinear
    // sticks at equal height cannot cross; break by extent for determinism).
    struct StickKey {
        std::size_t comp, idx;
    };
    std::map<Coord, std::vector<StickKey>> xsticks_by_y, ysticks_by_x;
    for (std::size_t ci = 0; ci < c.components.size(); ++ci) {
        const Component& k = c.components[ci];
        for (std::size_t i = 0; i < k.size(); ++i) {
            Segment s = k.stick(i);
            if (s.axis == Axis::X) xsticks_by_y[s.a.y].push_back({ci, i});
            if (s.axis == Axis::Y) ysticks_by_x[s.a.x].push_back({ci, i});
        }
    }
    std::map<std::pair<std::size_t, std::size_t>, long long> rank;
    auto assign_ranks = [&](std::map<Coord, std::vector<StickKey>>& groups) {
        for (auto& [line, group] : groups) {
            std::sort(group.begin(), group.end(), [&](const StickKey& a, const StickKey& b) {
                Segment sa = c.components[a.comp].stick(a.idx);
                Segment sb = c.components[b.comp].stick(b.idx);
                if (sa.a.z != sb.a.z) return sa.a.z < sb.a.z;
                Axis ax = sa.axis;
                return sa.extent(ax).lo < sb.extent(ax).lo;
            });
            for (std::size_t r = 0; r < group.size(); ++r)
                rank[{group[r].comp, group[r].idx}] = static_cast<long long>(r + 1);
        }
    };
    assign_ranks(xsticks_by_y);
    assign_ranks(ysticks_by_x);

    // Build the trace, one component at a time.
    for (std::size_t ci = 0; ci < c.components.size(); ++ci) {
        const Component& k = c.components[ci];
        const std::size_t n = k.size();
        d.piece_begin.push_back(d.pieces.size());

        auto stick_rank = [&](std::size_t idx) { return rank[{ci, idx % n}]; };

        // Offset contributed at the joint between stick i and stick i+1,
        // as seen from stick i's end (and symmetrically stick i+1's start).
        // For an xy corner both sides land on each other's line; through a
        // z-stick the far stick's line is used; z-z chains cannot occur.
        auto joint_offset_for = [&](std::size_t me, std::size_t other) -> long long {
            Segment mine = k.stick(me % n);
            Segment theirs = k.stick(other % n);
            Axis cross_axis = mine.axis == Axis::X ? Axis::Y : Axis::X;
            if (theirs.axis == cross_axis) return stick_rank(other);
            return 0;  // same-axis beyond a z-stick: unperturbed endpoint
        };

        for (std::size_t i = 0; i < n; ++i) {
            Segment s = k.stick(i);
            const LatticePoint from3 = k.corner(i);
            const LatticePoint to3 = k.corner(i + 1);
            TracePiece p;
            p.component = ci;
            p.stick = i;
            p.height = s.a.z;

            if (s.axis == Axis::X) {
                std::size_t prev = (i + n - 1) % n, next = (i + 1) % n;
                // via z-sticks, look one further
                long long f0 = k.stick(prev).axis == Axis::Z ? joint_offset_for(i, prev + n - 1)
                                                             : joint_offset_for(i, prev);
                long long f1 = k.stick(next).axis == Axis::Z ? joint_offset_for(i, next + 1)
                                                             : joint_offset_for(i, next);
                p.kind = TracePiece::Horizontal;
                p.from = {{from3.x, f0}, {from3.y, stick_rank(i)}};
                p.to = {{to3.x, f1}, {to3.y, stick_rank(i)}};
                p.dir2[0] = to3.x > from3.x ? 1 : -1;
                p.dir2[1] = 0;
            } else if (s.axis == Axis::Y) {
                std::size_t prev = (i + n - 1) % n, next = (i + 1) % n;
                long long f0 = k.stick(prev).axis == Axis::Z ? joint_offset_for(i, prev + n - 1)
                                                             : joint_offset_for(i, prev);
                long long f1 = k.stick(next).axis == Axis::Z ? joint_offset_for(i, next + 1)
                                                             : joint_offset_for(i, next);
                p.kind = TracePiece::Vertical;
                p.from = {{from3.x, stick_rank(i)}, {from3.y, f0}};
                p.to = {{to3.x, stick_rank(i)}, {to3.y, f1}};
                p.dir2[0] = 0;
                p.dir2[1] = to3.y > from3.y ? 1 : -1;
            } else {
                // projection-axis stick: connector between the two neighbor
                // images. The neighbor on each side sees through this stick
                // to the far neighbor for its endpoint offset.
                std::size_t prev = (i + n - 1) % n, next = (i + 1) % n;
                p.kind = TracePiece::Connector;
                auto image_end = [&](std::size_t nb_idx, std::size_t far_idx,
                                     const LatticePoint& at) -> Pt2 {
                    long long f = joint_offset_for(nb_idx, far_idx);
                    if (k.stick(nb_idx).axis == Axis::X)
                        return {{at.x, f}, {at.y, stick_rank(nb_idx)}};
                    return {{at.x, stick_rank(nb_idx)}, {at.y, f}};
                };
                p.from = image_end(prev, next, from3);
                p.to = image_end(next, prev, to3);
                p.height = s.extent(Axis::Z).lo;
            }
            d.pieces.push_back(p);
        }
    }
    d.piece_begin.push_back(d.pieces.size());

    // Crossings: horizontal x vertical interiors only.
    for (std::size_t hi = 0; hi < d.pieces.size(); ++hi) {
        const TracePiece& h = d.pieces[hi];
        if (h.kind != TracePiece::Horizontal) continue;
        Pcoord hx_lo = std::min(h.from.x, h.to.x), hx_hi = std::max(h.from.x, h.to.x);
        for (std::size_t vi = 0; vi < d.pieces.size(); ++vi) {
            const TracePiece& v = d.pieces[vi];
            if (v.kind != TracePiece::Vertical) continue;
            Pcoord vy_lo = std::min(v.from.y, v.to.y), vy_hi = std::max(v.from.y, v.to.y);
            if (!(hx_lo < v.from.x && v.from.x < hx_hi)) continue;
            if (!(vy_lo < h.from.y && h.from.y < vy_hi)) continue;
            assert(h.height != v.height && "crossing sticks at equal height would intersect in 3D");
            Crossing x;
            bool h_over = h.height > v.height;
            x.over_piece = h_over ? hi : vi;
            x.under_piece = h_over ? vi : hi;
            x.over_component = d.pieces[x.over_piece].component;
            x.under_component = d.pieces[x.under_piece].component;
            x.at = {v.from.x, h.from.y};
            const TracePiece& o = d.pieces[x.over_piece];
            const TracePiece& u = d.pieces[x.under_piece];
            x.sign = o.dir2[0] * u.dir2[1] - o.dir2[1] * u.dir2[0];
            d.crossings.push_back(x);
        }
    }

    // Arc walk: assign PD edge labels. Edges are numbered 1.. along each
    // component in walk order, components consecutively.
    std::vector<std::vector<detail::PieceCrossing>> per_piece(d.pieces.size());
    for (std::size_t xi = 0; xi < d.crossings.size(); ++xi) {
        const Crossing& x = d.crossings[xi];
        const TracePiece& o = d.pieces[x.over_piece];
        const TracePiece& u = d.pieces[x.under_piece];
        per_piece[x.over_piece].push_back(
            {xi, false, o.kind == TracePiece::Horizontal ? x.at.x : x.at.y});
        per_piece[x.under_piece].push_back(
            {xi, true, u.kind == TracePiece::Horizontal ? x.at.x : x.at.y});
    }

    int next_edge = 1;
    for (std::size_t ci = 0; ci < d.component_count; ++ci) {
        // gather passages in walk order
        struct Passage {
            std::size_t crossing;
            bool under;
        };
        std::vector<Passage> walk;
        for (std::size_t pi = d.piece_begin[ci]; pi < d.piece_begin[ci + 1]; ++pi) {
            auto& list = per_piece[pi];
            const TracePiece& p = d.pieces[pi];
            bool increasing = p.kind == TracePiece::Horizontal ? p.dir2[0] > 0 : p.dir2[1] > 0;
            std::sort(list.begin(), list.end(),
                      [&](const detail::PieceCrossing& a, const detail::PieceCrossing& b) {
                          return increasing ? a.along < b.along : b.along < a.along;
                      });
            for (auto& pc : list) walk.push_back({pc.crossing, pc.under});
        }
        if (walk.empty()) {
            ++d.free_loops;
            continue;
        }
        const int base = next_edge;
        const int m = static_cast<int>(walk.size());
        next_edge += m;
        for (int j = 0; j < m; ++j) {
            int incoming = base + ((j + m - 1) % m);
            int outgoing = base + j;
            Crossing& x = d.crossings[walk[j].crossing];
            const TracePiece& o = d.pieces[x.over_piece];
            const TracePiece& u = d.pieces[x.under_piece];
            int start = (detail::angle_quadrant(u.dir2[0], u.dir2[1]) + 2) % 4;
            auto slot_of = [&](int dx, int dy) {
                int q = detail::angle_quadrant(dx, dy);
                return (q - start + 4) % 4;
            };
            if (walk[j].under) {
                x.pd[0] = incoming;                                // slot 0: -u
                x.pd[slot_of(u.dir2[0], u.dir2[1])] = outgoing;    // slot 2: +u
            } else {
                x.pd[slot_of(-o.dir2[0], -o.dir2[1])] = incoming;  // -o
                x.pd[slot_of(o.dir2[0], o.dir2[1])] = outgoing;    // +o
            }
        }
    }
    d.edge_count = next_edge - 1;
    return d;
}

inline std::size_t crossing_count(const PlanarDiagram& d) { return d.crossings.size(); }

inline int writhe(const PlanarDiagram& d) {
    int w = 0;
    for (const auto& x : d.crossings) w += x.sign;
    return w;
}

// Half the signed sum of crossings between two distinct components.
inline long long linking_number(const PlanarDiagram& d, std::size_t a, std::size_t b) {
    if (a == b) throw std::invalid_argument("linking_number: components must differ");
    if (a >= d.component_count || b >= d.component_count)
        throw std::invalid_argument("linking_number: component index out of range");
    long long s = 0;
    for (const auto& x : d.crossings) {
        if ((x.over_component == a && x.under_component == b) ||
            (x.over_component == b && x.under_component == a))
            s += x.sign;
    }
    if (s % 2 != 0) throw std::logic_error("linking_number: odd signed crossing sum");
    return s / 2;
}

inline PDCode pd_code(const PlanarDiagram& d) {
    PDCode pd;
    pd.edge_count = d.edge_count;
    pd.free_loops = d.free_loops;
    for (const auto& x : d.crossings) pd.crossings.push_back(x.pd);
    return pd;
}

// Text form: version header, one orientation annotation per component,
// then one X[a,b,c,d] line per crossing.
inline std::string pd_to_text(const PlanarDiagram& d) {
    std::ostringstream os;
    os << "pd-code/1\n";
    int shown = 0;
    for (std::size_t ci = 0; ci < d.component_count; ++ci) {
        std::size_t pieces = 0;
        for (std::size_t pi = d.piece_begin[ci]; pi < d.piece_begin[ci + 1]; ++pi) ++pieces;
        os << "component " << ci << " oriented by corner order (" << pieces << " stick images)\n";
        ++shown;
    }
    for (const auto& x : d.crossings)
        os << "X[" << x.pd[0] << "," << x.pd[1] << "," << x.pd[2] << "," << x.pd[3] << "]\n";
    return os.str();
}

inline PDCode pd_from_text(const std::string& text) {
    PDCode pd;
    std::istringstream is(text);
    std::string line;
    bool header_seen = false;
    while (std::getline(is, line)) {
        if (line.empty()) continue;
        if (!header_seen) {
            if (line != "pd-code/1") throw std::invalid_argument("pd_from_text: bad header");
            header_seen = true;
            continue;
        }
        if (line.rfind("component", 0) == 0) continue;
        if (line.rfind("X[", 0) != 0) throw std::invalid_argument("pd_from_text: bad line: " + line);
        std::array<int, 4> t{};
        if (std::sscanf(line.c_str(), "X[%d,%d,%d,%d]", &t[0], &t[1], &t[2], &t[3]) != 4)
            throw std::invalid_argument("pd_from_text: bad crossing: " + line);
        pd.crossings.push_back(t);
        for (int v : t) pd.edge_count = std::max(pd.edge_count, v);
    }
    return pd;
}

}  // namespace latknot
