#pragma once

// Open-book arc presentations and their conversion to lattice conformations
// with at most 6*pages - 16 sticks.
//
// Layout: the binding is the z-axis, binding level L sitting at z = 4L so
// short connector sticks can live on the axis between arc ends. The first
// three pages flatten to the +y, -x and -y half-planes with three sticks
// each; every remaining page flattens into the +x region as a spoke pair at
// y = 0 with a bridge pushed to y = -1 or +1 according to its angular
// position. The two pages meeting the second page's arc extend its spokes
// straight through the binding, which is where six sticks are saved.

#include <algorithm>
#include <map>
#include <optional>
#include <vector>

#include "latticeknots/conformation.hpp"

namespace latknot {

struct ArcPresentation {
    // pages in angular order; each joins two distinct binding levels 1..size
    std::vector<std::pair<int, int>> pages;

    int size() const { return static_cast<int>(pages.size()); }

    void check() const {
        const int n = size();
        if (n < 2) throw std::invalid_argument("arc presentation: need at least two pages");
        std::vector<int> uses(n + 1, 0);
        for (auto& [a, b] : pages) {
            if (a < 1 || a > n || b < 1 || b > n)
                throw std::invalid_argument("arc presentation: level out of range");
            if (a == b) throw std::invalid_argument("arc presentation: page joins a level to itself");
            ++uses[a];
            ++uses[b];
        }
        for (int l = 1; l <= n; ++l)
            if (uses[l] != 2)
                throw std::invalid_argument("arc presentation: every level must be used by exactly two pages");
        if (!single_cycle())
            throw std::invalid_argument("arc presentation: pages must trace a single closed cycle");
    }

    bool single_cycle() const {
        const int n = size();
        // walk page -> shared level -> other page
        std::vector<std::vector<int>> level_pages(n + 1);
        for (int p = 0; p < n; ++p) {
            level_pages[pages[p].first].push_back(p);
            level_pages[pages[p].second].push_back(p);
        }
        int page = 0, level = pages[0].first, steps = 0;
        do {
            int exit_level = pages[page].first == level ? pages[page].second : pages[page].first;
            auto& lp = level_pages[exit_level];
            page = lp[0] == page ? lp[1] : lp[0];
            level = exit_level;
            ++steps;
        } while (!(page == 0 && level == pages[0].first) && steps <= 2 * n);
        return steps == n;
    }

    ArcPresentation rotated(int r) const {
        ArcPresentation out;
        const int n = size();
        for (int i = 0; i < n; ++i) out.pages.push_back(pages[(i + r) % n]);
        return out;
    }
};

namespace detail {

inline bool pages_share_level(const std::pair<int, int>& a, const std::pair<int, int>& b) {
    return a.first == b.first || a.first == b.second || a.second == b.first ||
           a.second == b.second;
}

}  // namespace detail

// Lattice conformation of the presentation's knot using at most
// 6*alpha - 16 sticks (alpha >= 7 pages).
inline Conformation from_arc_presentation(const ArcPresentation& input) {
    input.check();
    const int alpha = input.size();
    if (alpha < 7)
        throw std::invalid_argument(
            "from_arc_presentation: fewer than seven pages only arises for the smallest knots; "
            "use catalog conformations instead");

    // rotate until the second page shares no level with its neighbors
    std::optional<ArcPresentation> rotated;
    for (int r = 0; r < alpha; ++r) {
        ArcPresentation cand = input.rotated(r);
        if (!detail::pages_share_level(cand.pages[1], cand.pages[0]) &&
            !detail::pages_share_level(cand.pages[1], cand.pages[2])) {
            rotated = std::move(cand);
            break;
        }
    }
    if (!rotated)
        throw std::invalid_argument(
            "from_arc_presentation: no rotation separates the second page from its neighbors");
    const ArcPresentation& a = *rotated;

    // the pages attached to page 1's arc
    const int i1 = a.pages[1].first, j1 = a.pages[1].second;
    int page_a = -1, page_b = -1;  // share j1 / i1 respectively
    for (int p = 0; p < alpha; ++p) {
        if (p == 1) continue;
        if (a.pages[p].first == j1 || a.pages[p].second == j1) page_a = p;
        if (a.pages[p].first == i1 || a.pages[p].second == i1) page_b = p;
    }

    // depths and sides for the +x pages (indices 3..alpha-1)
    std::vector<Coord> depth(alpha, 0);
    std::vector<Coord> side(alpha, 0);
    {
        Coord before_d = 3, after_d = 3;
        // walk outward from page_a toward both ends of the angular range
        for (int p = page_a - 1; p >= 3; --p) {
            side[p] = -1;
            depth[p] = before_d;  // assigned shallow-to-deep toward page_a below
        }
        for (int p = 3; p < page_a; ++p) depth[p] = before_d++;
        for (int p = alpha - 1; p > page_a; --p) {
            side[p] = +1;
            depth[p] = after_d++;
        }
        depth[page_a] = alpha;
        side[page_a] = 0;
    }

    auto zlevel = [](int level, int off) { return static_cast<Coord>(4 * level + off); };

    // connector offsets: at each level the two incident arc ends either form
    // a corner (different axes), merge (straight through) or need a short
    // z-stick on the binding (two +x spokes)
    auto end_axis = [&](int page, int level) -> char {
        if (page == 0 || page == 2) return 'y';
        if (page == 1) return '-';  // never a binding end
        if ((page == page_a && level == j1) || (page == page_b && level == i1)) return '-';
        return 'x';
    };

    // walk the cycle
    struct Visit {
        int page, in_level, out_level;
    };
    std::vector<Visit> walk;
    {
        std::vector<std::vector<int>> level_pages(alpha + 1);
        for (int p = 0; p < alpha; ++p) {
            level_pages[a.pages[p].first].push_back(p);
            level_pages[a.pages[p].second].push_back(p);
        }
        int page = 0, in_level = a.pages[0].first;
        do {
            int out_level = a.pages[page].first == in_level ? a.pages[page].second
                                                            : a.pages[page].first;
            walk.push_back({page, in_level, out_level});
            auto& lp = level_pages[out_level];
            page = lp[0] == page ? lp[1] : lp[0];
            in_level = out_level;
        } while (page != 0);
    }

    // offsets per (page, level) binding end
    std::map<std::pair<int, int>, int> off;
    for (std::size_t w = 0; w < walk.size(); ++w) {
        const Visit& cur = walk[w];
        const Visit& next = walk[(w + 1) % walk.size()];
        int level = cur.out_level;
        if (end_axis(cur.page, level) == 'x' && end_axis(next.page, level) == 'x') {
            off[{cur.page, level}] = 0;
            off[{next.page, level}] = 1;
        }
    }
    auto zend = [&](int page, int level) {
        auto it = off.find({page, level});
        return zlevel(level, it == off.end() ? 0 : it->second);
    };

    const Coord d0 = 2, d1 = 2, d2 = 2;

    std::vector<LatticePoint> corners;
    auto pt = [&](Coord x, Coord y, Coord z) { corners.push_back(LatticePoint{x, y, z}); };

    for (const Visit& v : walk) {
        const int p = v.page;
        const Coord zin = zend(p, v.in_level), zout = zend(p, v.out_level);
        if (p == 0) {
            pt(0, 0, zin);
            pt(0, d0, zin);
            pt(0, d0, zout);
            pt(0, 0, zout);
        } else if (p == 2) {
            pt(0, 0, zin);
            pt(0, -d2, zin);
            pt(0, -d2, zout);
            pt(0, 0, zout);
        } else if (p == 1) {
            pt(-d1, 0, zlevel(v.in_level, 0));
            pt(-d1, 0, zlevel(v.out_level, 0));
        } else if (p == page_a) {
            // spoke through the binding on the page-1 end, plain spoke on the other
            if (v.in_level == j1) {
                pt(depth[p], 0, zlevel(j1, 0));
                pt(depth[p], 0, zout);
                pt(0, 0, zout);
            } else {
                pt(0, 0, zin);
                pt(depth[p], 0, zin);
                pt(depth[p], 0, zlevel(j1, 0));
            }
        } else if (p == page_b) {
            const Coord s = side[p] == 0 ? 1 : side[p];
            if (v.in_level == i1) {
                pt(depth[p], 0, zlevel(i1, 0));
                pt(depth[p], s, zlevel(i1, 0));
                pt(depth[p], s, zout);
                pt(depth[p], 0, zout);
                pt(0, 0, zout);
            } else {
                pt(0, 0, zin);
                pt(depth[p], 0, zin);
                pt(depth[p], s, zin);
                pt(depth[p], s, zlevel(i1, 0));
                pt(depth[p], 0, zlevel(i1, 0));
            }
        } else {
            const Coord s = side[p];
            pt(0, 0, zin);
            pt(depth[p], 0, zin);
            pt(depth[p], s, zin);
            pt(depth[p], s, zout);
            pt(depth[p], 0, zout);
            pt(0, 0, zout);
        }
    }

    // cleanup: drop repeated corners and merge collinear runs
    std::vector<LatticePoint> clean;
    for (const auto& c : corners)
        if (clean.empty() || !(clean.back() == c)) clean.push_back(c);
    while (clean.size() > 1 && clean.front() == clean.back()) clean.pop_back();
    std::vector<LatticePoint> final_corners;
    const std::size_t n = clean.size();
    for (std::size_t i = 0; i < n; ++i) {
        const LatticePoint& prev = clean[(i + n - 1) % n];
        const LatticePoint& cur = clean[i];
        const LatticePoint& next = clean[(i + 1) % n];
        // skip corners where the walk continues straight
        int diffs = 0;
        for (Axis ax : kAxes)
            if ((cur[ax] - prev[ax]) * (next[ax] - cur[ax]) != 0) ++diffs;
        bool straight = false;
        for (Axis ax : kAxes) {
            Coord d_in = cur[ax] - prev[ax], d_out = next[ax] - cur[ax];
            if (d_in != 0 && d_out != 0) {
                bool others_zero = true;
                for (Axis o : kAxes)
                    if (o != ax && (cur[o] != prev[o] || next[o] != cur[o])) others_zero = false;
                if (others_zero && (d_in > 0) == (d_out > 0)) straight = true;
            }
        }
        (void)diffs;
        if (!straight) final_corners.push_back(cur);
    }

    Conformation out{{Component{final_corners}}};
    require_valid(out, "from_arc_presentation");
    if (out.total_sticks() > static_cast<std::size_t>(6 * alpha - 16))
        throw std::logic_error("from_arc_presentation: stick budget exceeded");
    return out;
}

// Canonical spiral presentation of the (2, n) torus knot on n+2 pages
// (n odd): page k joins levels k and k+2 cyclically.
inline ArcPresentation torus2_arc_presentation(int n) {
    if (n < 3 || n % 2 == 0)
        throw std::invalid_argument("torus2_arc_presentation: need odd n >= 3");
    ArcPresentation a;
    const int m = n + 2;
    for (int k = 1; k <= m; ++k) {
        int to = (k + 1) % m + 1;
        a.pages.push_back({k, to});
    }
    a.check();
    return a;
}

}  // namespace latknot
