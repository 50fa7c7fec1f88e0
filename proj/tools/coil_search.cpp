// Offline design search for two-braid link coils: a cycle of n windings
// around a planar rectangle, each winding crossing the boundary once over
// (inward) and once under (outward), joined by sticks through the plane.
// Optionally one extra non-crossing jog stick along the outside (the 4n+5
// family). Hits are certified by linking number, an embedded coil image,
// and the Jones polynomial of the (2,2n) torus link.

#include <cstdio>
#include <cstdlib>
#include <vector>

#include "latticeknots/constructions.hpp"
#include "latticeknots/json_io.hpp"
#include "latticeknots/search.hpp"
#include "support/pd_builders.hpp"

using namespace latknot;
using namespace latknot::testref;

namespace {

struct Stick {
    LatticePoint a, b;
};

struct Dfs {
    int n;
    Coord W;
    LaurentPoly target;
    int zmax;
    bool allow_jog = false;
    int found = 0;
    int found_limit = 3;
    long long nodes = 0, cap;

    struct Entry {
        char side;   // 'S','N','W','E'
        Coord line;  // column for S/N, row for W/E
    };

    std::vector<Stick> sticks;
    Entry first{};
    Coord alpha0 = 0;
    static constexpr Coord kFirstDepth = 1;

    Dfs(int n_, int zmax_, long long cap_) : n(n_), W(n_ + 4), zmax(zmax_), cap(cap_) {
        target = jones_of(braid_closure(2, std::vector<int>(2 * n_, 1)));
    }

    bool clear(const Stick& s, const LatticePoint* shared,
               const LatticePoint* closing = nullptr) const {
        Segment cand = Segment::between(s.a, s.b);
        for (std::size_t i = 0; i < sticks.size(); ++i) {
            Segment t = Segment::between(sticks[i].a, sticks[i].b);
            if (shared && i + 1 == sticks.size()) {
                if (!segments_meet_only_at(t, cand, *shared)) return false;
            } else if (closing && i == 0) {
                if (!segments_meet_only_at(t, cand, *closing)) return false;
            } else if (segments_intersect(t, cand)) {
                return false;
            }
        }
        LatticePoint r0{0, 0, 0}, r1{W, 0, 0}, r2{W, W, 0}, r3{0, W, 0};
        const Stick rect[4] = {{r0, r1}, {r1, r2}, {r2, r3}, {r3, r0}};
        for (auto& rs : rect)
            if (segments_intersect(Segment::between(rs.a, rs.b), cand)) return false;
        return true;
    }

    LatticePoint outside(const Entry& e, Coord z, Coord o) const {
        switch (e.side) {
            case 'S': return {e.line, -o, z};
            case 'N': return {e.line, W + o, z};
            case 'W': return {-o, e.line, z};
            default: return {W + o, e.line, z};
        }
    }
    LatticePoint through(const Entry& e, Coord d, Coord z) const {
        if (e.side == 'S' || e.side == 'N') return {e.line, d, z};
        return {d, e.line, z};
    }

    void run() {
        first = {'S', 1};
        for (alpha0 = 1; alpha0 <= zmax; ++alpha0) {
            sticks.clear();
            wind(0, first, alpha0, kFirstDepth, !allow_jog);
            if (found >= found_limit || nodes > cap) return;
        }
    }

    void wind(int k, Entry entry, Coord alpha, Coord odepth, bool jog_used) {
        if (found >= found_limit || ++nodes > cap) return;
        if (k == n) {
            if (entry.side == first.side && entry.line == first.line && alpha == alpha0 &&
                odepth == kFirstDepth && (jog_used || !allow_jog))
                emit();
            return;
        }
        for (Coord d = 1; d <= W - 1; ++d) {
            LatticePoint o_start = outside(entry, alpha, odepth);
            LatticePoint o_end = through(entry, d, alpha);
            if (o_start == o_end) continue;
            Stick over{o_start, o_end};
            if (!clear(over, k == 0 ? nullptr : &o_start)) continue;
            sticks.push_back(over);
            for (Coord beta = -1; beta >= -zmax; --beta) {
                LatticePoint u_start = through(entry, d, beta);
                Stick riser{o_end, u_start};
                if (!clear(riser, &o_end)) {
                    continue;
                }
                sticks.push_back(riser);
                const bool vertical = entry.side == 'S' || entry.side == 'N';
                for (char exit_side : {'S', 'N', 'W', 'E'}) {
                    Entry next{};
                    if (vertical)
                        next = (exit_side == 'S' || exit_side == 'N') ? Entry{exit_side, entry.line}
                                                                      : Entry{exit_side, d};
                    else
                        next = (exit_side == 'W' || exit_side == 'E') ? Entry{exit_side, entry.line}
                                                                      : Entry{exit_side, d};
                    for (Coord no = 1; no <= 2; ++no) {
                        LatticePoint u_end = outside(next, beta, no);
                        if (u_end == u_start) continue;
                        Stick under{u_start, u_end};
                        if (!clear(under, &u_start)) continue;
                        sticks.push_back(under);
                        descend(k, next, beta, no, jog_used, u_end);
                        sticks.pop_back();
                        if (found >= found_limit || nodes > cap) {
                            sticks.pop_back();
                            sticks.pop_back();
                            return;
                        }
                    }
                }
                sticks.pop_back();
            }
            sticks.pop_back();
        }
    }

    // after the under-stick: optional jog, then the rising stick to the
    // next winding's over level
    void descend(int k, Entry next, Coord beta, Coord odepth, bool jog_used,
                 LatticePoint u_end) {
        const int jog_max = (allow_jog && !jog_used) ? 1 : 0;
        for (int use_jog = 0; use_jog <= jog_max; ++use_jog) {
            std::vector<Coord> lines;
            if (use_jog == 0)
                lines.push_back(next.line);
            else
                for (Coord l = 1; l <= W - 1; ++l)
                    if (l != next.line) lines.push_back(l);
            for (Coord jline : lines) {
                Entry hop = next;
                hop.line = jline;
                LatticePoint anchor = u_end;
                std::size_t pushed = 0;
                if (use_jog) {
                    LatticePoint jog_end = outside(hop, beta, odepth);
                    Stick jog{u_end, jog_end};
                    if (jog_end == u_end) continue;
                    if (!clear(jog, &u_end)) continue;
                    sticks.push_back(jog);
                    ++pushed;
                    anchor = jog_end;
                }
                for (Coord next_alpha = 1; next_alpha <= zmax; ++next_alpha) {
                    if (k + 1 == n && !(hop.side == first.side && hop.line == first.line &&
                                        next_alpha == alpha0 && odepth == kFirstDepth))
                        continue;
                    LatticePoint next_start = outside(hop, next_alpha, odepth);
                    Stick riser2{anchor, next_start};
                    const bool closing = k + 1 == n;
                    if (!clear(riser2, &anchor, closing ? &next_start : nullptr)) continue;
                    sticks.push_back(riser2);
                    wind(k + 1, hop, next_alpha, odepth, jog_used || use_jog);
                    sticks.pop_back();
                    if (found >= found_limit || nodes > cap) {
                        while (pushed--) sticks.pop_back();
                        return;
                    }
                }
                while (pushed > 0) {
                    sticks.pop_back();
                    --pushed;
                }
            }
        }
    }

    void emit() {
        Conformation out;
        Component rect;
        rect.corners = {{0, 0, 0}, {W, 0, 0}, {W, W, 0}, {0, W, 0}};
        out.components.push_back(rect);
        Component coil;
        for (auto& s : sticks) coil.corners.push_back(s.a);
        out.components.push_back(coil);
        if (!validate(out).ok()) return;
        // the coil's own image must be an embedded curve
        Conformation coil_only{{out.components[1]}};
        if (crossing_count(project(properly_level(coil_only), Axis::Z)) != 0) return;
        Conformation lv = properly_level(out);
        if (std::llabs(linking_number(project(lv, Axis::Z), 0, 1)) != n) return;
        LaurentPoly v = jones(project(lv, Axis::Z));
        if (!jones_equal_up_to_mirror(v, target)) return;
        ++found;
        std::printf("HIT n=%d sticks=%zu  %s\n", n, out.total_sticks(), to_json(out).c_str());
        std::fflush(stdout);
    }
};

}  // namespace

int main(int argc, char** argv) {
    int n = argc > 1 ? std::atoi(argv[1]) : 4;
    int zmax = argc > 2 ? std::atoi(argv[2]) : n + 1;
    long long cap = argc > 3 ? std::atoll(argv[3]) : 2000000000LL;
    Dfs dfs(n, zmax, cap);
    dfs.allow_jog = argc > 4 && std::atoi(argv[4]) == 1;
    dfs.run();
    std::printf("n=%d nodes=%lld found=%d\n", n, dfs.nodes, dfs.found);
    return dfs.found > 0 ? 0 : 1;
}
