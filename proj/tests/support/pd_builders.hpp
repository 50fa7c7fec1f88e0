#pragma once

// Reference diagrams built directly as PD codes, independent of the lattice
// projection pipeline: braid closures, braid closures with an encircling
// ring, and grid diagrams (verticals over horizontals). Used as knot-type
// oracles in tests.

#include <array>
#include <map>
#include <set>
#include <stdexcept>
#include <vector>

#include "latticeknots/diagram.hpp"
#include "latticeknots/invariants.hpp"

namespace latknot::testref {

struct RefDiagram {
    PDCode pd;
    int writhe = 0;
};

inline LaurentPoly jones_of(const RefDiagram& ref) {
    LaurentPoly br = bracket_auto(ref.pd);
    LaurentPoly v = LaurentPoly::monomial(-3 * ref.writhe, (ref.writhe % 2 == 0) ? 1 : -1) * br;
    LaurentPoly q;
    for (auto& [e, c] : v.terms()) {
        if (e % 2 != 0) throw std::logic_error("jones_of: odd A-exponent");
        q.add_term(-e / 2, c);
    }
    return q;
}

// Closure of a braid word on `strands` strands. Letters are +-g for the
// generator crossing positions g-1 and g (1-based g); positive letters put
// the left strand on top.
inline RefDiagram braid_closure(int strands, const std::vector<int>& word) {
    if (strands < 1) throw std::invalid_argument("braid_closure: need at least one strand");
    RefDiagram out;
    int next_edge = 1;
    std::vector<int> bottom(strands), cur(strands);
    for (int i = 0; i < strands; ++i) bottom[i] = cur[i] = next_edge++;

    for (int letter : word) {
        int g = letter > 0 ? letter : -letter;
        if (g < 1 || g >= strands) throw std::invalid_argument("braid_closure: bad generator");
        int L = g - 1, R = g;
        int aL = cur[L], aR = cur[R];
        int cL = next_edge++, cR = next_edge++;
        if (letter > 0) {
            // left strand over; under enters bottom-right
            out.pd.crossings.push_back({aR, cR, cL, aL});
            out.writhe += 1;
        } else {
            out.pd.crossings.push_back({aL, aR, cR, cL});
            out.writhe -= 1;
        }
        cur[L] = cL;
        cur[R] = cR;
    }

    // close the braid: identify top edges with bottom edges
    for (int i = 0; i < strands; ++i) {
        if (cur[i] == bottom[i]) {
            ++out.pd.free_loops;  // strand with no crossings
            continue;
        }
        for (auto& t : out.pd.crossings)
            for (int& e : t)
                if (e == cur[i]) e = bottom[i];
    }
    out.pd.edge_count = next_edge - 1;
    return out;
}

// Braid closure with one extra unknotted component encircling strand
// positions [lo, hi] (0-based, inclusive), inserted after `position` braid
// letters. Each encircled strand goes under the ring's bottom arc and over
// its top arc and contributes +1 to the pairwise linking number.
inline RefDiagram braid_closure_with_ring(int strands, const std::vector<int>& word, int lo,
                                          int hi, int position = 0) {
    if (lo < 0 || hi >= strands || lo > hi)
        throw std::invalid_argument("braid_closure_with_ring: bad strand range");
    if (position < 0 || position > static_cast<int>(word.size()))
        throw std::invalid_argument("braid_closure_with_ring: bad insertion position");
    RefDiagram out;
    int next_edge = 1;
    std::vector<int> bottom(strands), cur(strands);
    for (int i = 0; i < strands; ++i) bottom[i] = cur[i] = next_edge++;

    auto add_ring = [&]() {
        const int k = hi - lo + 1;
        std::vector<int> ring_edges;
        for (int i = 0; i < 2 * k; ++i) ring_edges.push_back(next_edge++);
        for (int p = lo; p <= hi; ++p) {
            int idx = p - lo;
            int ring_in = ring_edges[idx], ring_out = ring_edges[idx + 1];
            int s_in = cur[p], s_out = next_edge++;
            // under = strand (0,1): tuple (under_in, over_out, under_out, over_in)
            out.pd.crossings.push_back({s_in, ring_out, s_out, ring_in});
            out.writhe += 1;
            cur[p] = s_out;
        }
        for (int p = hi; p >= lo; --p) {
            int idx = k + (hi - p);
            int ring_in = ring_edges[idx],
                ring_out = idx + 1 < 2 * k ? ring_edges[idx + 1] : ring_edges[0];
            int s_in = cur[p], s_out = next_edge++;
            // under = ring (-1,0): tuple (ring_in, strand_out, ring_out, strand_in)
            out.pd.crossings.push_back({ring_in, s_out, ring_out, s_in});
            out.writhe += 1;
            cur[p] = s_out;
        }
    };

    int done = 0;
    if (position == 0) add_ring();
    for (int letter : word) {
        int g = letter > 0 ? letter : -letter;
        if (g < 1 || g >= strands) throw std::invalid_argument("braid_closure_with_ring: bad generator");
        int L = g - 1, R = g;
        int aL = cur[L], aR = cur[R];
        int cL = next_edge++, cR = next_edge++;
        if (letter > 0) {
            out.pd.crossings.push_back({aR, cR, cL, aL});
            out.writhe += 1;
        } else {
            out.pd.crossings.push_back({aL, aR, cR, cL});
            out.writhe -= 1;
        }
        cur[L] = cL;
        cur[R] = cR;
        if (++done == position) add_ring();
    }

    for (int i = 0; i < strands; ++i) {
        if (cur[i] == bottom[i]) {
            ++out.pd.free_loops;
            continue;
        }
        for (auto& t : out.pd.crossings)
            for (int& e : t)
                if (e == cur[i]) e = bottom[i];
    }
    out.pd.edge_count = next_edge - 1;
    return out;
}

// Grid diagram: column c (1-based) joins the two rows of pages[c-1],
// verticals drawn over horizontals. Rows pair the two columns that share a
// level. Must trace a single cycle.
inline RefDiagram grid_diagram(const std::vector<std::pair<int, int>>& pages) {
    const int n = static_cast<int>(pages.size());
    std::map<int, std::vector<int>> row_cols;  // level -> columns using it
    for (int c = 0; c < n; ++c) {
        row_cols[pages[c].first].push_back(c + 1);
        row_cols[pages[c].second].push_back(c + 1);
    }
    for (auto& [lvl, cols] : row_cols)
        if (cols.size() != 2)
            throw std::invalid_argument("grid_diagram: each level must be used by exactly two pages");

    struct Seg {
        bool vertical;
        int fixed;       // column x or row y
        int lo, hi;      // span
        int dir;         // +1 increasing along walk
    };

    // walk the cycle: start at column 1 from its first level
    std::vector<Seg> walk;
    std::set<std::pair<bool, int>> used;  // (vertical?, index)
    int col = 1;
    int at_level = pages[0].first;
    do {
        if (used.count({true, col})) throw std::invalid_argument("grid_diagram: walk revisits a column");
        used.insert({true, col});
        int other_level = pages[col - 1].first == at_level ? pages[col - 1].second : pages[col - 1].first;
        walk.push_back({true, col, std::min(at_level, other_level), std::max(at_level, other_level),
                        other_level > at_level ? +1 : -1});
        at_level = other_level;
        auto& cols = row_cols[at_level];
        int next_col = cols[0] == col ? cols[1] : cols[0];
        walk.push_back({false, at_level, std::min(col, next_col), std::max(col, next_col),
                        next_col > col ? +1 : -1});
        col = next_col;
    } while (!(col == 1 && at_level == pages[0].first));
    if (used.size() != static_cast<std::size_t>(n))
        throw std::invalid_argument("grid_diagram: pages trace more than one cycle");

    // crossings between vertical walk segments and horizontal ones
    struct Hit {
        std::size_t other;  // index of crossing in pd
        int along;          // coordinate along this segment
        bool under;
    };
    RefDiagram out;
    std::vector<std::vector<Hit>> hits(walk.size());
    for (std::size_t vi = 0; vi < walk.size(); ++vi) {
        if (!walk[vi].vertical) continue;
        for (std::size_t hi2 = 0; hi2 < walk.size(); ++hi2) {
            if (walk[hi2].vertical) continue;
            const Seg& v = walk[vi];
            const Seg& h = walk[hi2];
            if (!(v.lo < h.fixed && h.fixed < v.hi)) continue;
            if (!(h.lo < v.fixed && v.fixed < h.hi)) continue;
            std::size_t xi = out.pd.crossings.size();
            out.pd.crossings.push_back({0, 0, 0, 0});
            hits[vi].push_back({xi, h.fixed, false});
            hits[hi2].push_back({xi, v.fixed, true});
            // sign: over = vertical (0, v.dir), under = horizontal (h.dir, 0)
            out.writhe += -v.dir * h.dir > 0 ? 1 : -1;  // det((0,vd),(hd,0)) = -vd*hd
        }
    }

    // edge labels along the walk; tuples filled by the quadrant rule
    struct Passage {
        std::size_t xi;
        bool under;
        int dx, dy;  // walk direction at the passage
    };
    std::vector<Passage> seq;
    for (std::size_t si = 0; si < walk.size(); ++si) {
        auto& list = hits[si];
        const Seg& s = walk[si];
        std::sort(list.begin(), list.end(), [&](const Hit& a, const Hit& b) {
            return s.dir > 0 ? a.along < b.along : b.along < a.along;
        });
        for (auto& h : list)
            seq.push_back({h.other, h.under, s.vertical ? 0 : s.dir, s.vertical ? s.dir : 0});
    }
    if (seq.empty()) {
        out.pd.free_loops = 1;
        return out;
    }
    const int m = static_cast<int>(seq.size());
    std::vector<std::array<int, 2>> under_dir(out.pd.crossings.size()),
        over_dir(out.pd.crossings.size());
    std::vector<std::array<int, 2>> over_edges(out.pd.crossings.size());
    for (int j = 0; j < m; ++j) {
        int incoming = 1 + ((j + m - 1) % m);
        int outgoing = 1 + j;
        const Passage& p = seq[j];
        if (p.under) {
            under_dir[p.xi] = {p.dx, p.dy};
            out.pd.crossings[p.xi][0] = incoming;
            out.pd.crossings[p.xi][2] = outgoing;
        } else {
            over_dir[p.xi] = {p.dx, p.dy};
            over_edges[p.xi] = {incoming, outgoing};
        }
    }
    for (std::size_t xi = 0; xi < out.pd.crossings.size(); ++xi) {
        int start = (detail::angle_quadrant(under_dir[xi][0], under_dir[xi][1]) + 2) % 4;
        auto slot_of = [&](int dx, int dy) {
            return (detail::angle_quadrant(dx, dy) - start + 4) % 4;
        };
        out.pd.crossings[xi][slot_of(-over_dir[xi][0], -over_dir[xi][1])] = over_edges[xi][0];
        out.pd.crossings[xi][slot_of(over_dir[xi][0], over_dir[xi][1])] = over_edges[xi][1];
    }
    out.pd.edge_count = m;
    return out;
}

}  // namespace latknot::testref
