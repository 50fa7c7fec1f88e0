#pragma once

// Bounded exhaustive enumeration of properly leveled lattice polygons.
//
// A properly leveled polygon with per-axis stick counts (px,py,pz) visits,
// along each axis, every level 1..p exactly once; so the search space is
// (cyclic axis word with no equal neighbors) x (one level-visit cycle per
// axis) x (start phase), pruned by incremental self-avoidance and per-axis
// closability. Results are deduplicated up to signed coordinate
// permutations (including reflections) and walk rotation/reversal.

#include <array>
#include <atomic>
#include <cstdint>
#include <functional>
#include <optional>
#include <set>
#include <string>
#include <thread>
#include <vector>

#include "latticeknots/conformation.hpp"
#include "latticeknots/diagram.hpp"
#include "latticeknots/invariants.hpp"
#include "latticeknots/moves.hpp"

namespace latknot {

struct EnumerationSpec {
    int total = 0;
    std::optional<std::array<int, 3>> split;  // fixed (px,py,pz); otherwise sweep
    bool reduce_symmetry = true;
    int workers = 1;
    // Restrict to conformations whose stick directions alternate along every
    // axis (the taut normal form of stick-minimal conformations).
    bool alternating = false;
};

inline constexpr int kEnumerationBudget = 14;

namespace detail {

// Canonical key of a single-component leveled polygon under the full signed
// permutation group (with level re-normalization) and walk rotation and
// reversal: the lexicographically least flattened corner sequence. Levels
// run 1..m per axis, so a sign flip is exactly v -> m+1-v.
inline std::vector<Coord> polygon_canonical_key(const Conformation& c) {
    static const int perms[6][3] = {{0, 1, 2}, {0, 2, 1}, {1, 0, 2},
                                    {1, 2, 0}, {2, 0, 1}, {2, 1, 0}};
    const auto& corners = c.components[0].corners;
    const std::size_t n = corners.size();

    Coord maxv[3] = {0, 0, 0};
    for (const auto& p : corners)
        for (int i = 0; i < 3; ++i)
            if (p[axis_from_index(i)] > maxv[i]) maxv[i] = p[axis_from_index(i)];

    std::vector<Coord> best;
    std::vector<Coord> flat(3 * n);
    std::vector<Coord> cand(3 * n);
    for (auto& perm : perms) {
        for (int signs = 0; signs < 8; ++signs) {
            for (std::size_t j = 0; j < n; ++j) {
                const LatticePoint& p = corners[j];
                for (int i = 0; i < 3; ++i) {
                    Coord v = p[axis_from_index(i)];
                    if (signs >> i & 1) v = maxv[i] + 1 - v;
                    flat[3 * j + perm[i]] = v;
                }
            }
            // minimal rotation / reversal of the corner cycle
            for (int dir = 0; dir < 2; ++dir)
                for (std::size_t s = 0; s < n; ++s) {
                    bool better = best.empty();
                    bool worse = false;
                    for (std::size_t j = 0; j < n && !better && !worse; ++j) {
                        std::size_t src = dir == 0 ? (s + j) % n : (s + n - j) % n;
                        for (int i = 0; i < 3 && !better && !worse; ++i) {
                            Coord v = flat[3 * src + i];
                            Coord b = best[3 * j + i];
                            if (v < b) better = true;
                            else if (v > b) worse = true;
                        }
                    }
                    if (better) {
                        for (std::size_t j = 0; j < n; ++j) {
                            std::size_t src = dir == 0 ? (s + j) % n : (s + n - j) % n;
                            for (int i = 0; i < 3; ++i) cand[3 * j + i] = flat[3 * src + i];
                        }
                        best = cand;
                    }
                }
        }
    }
    return best;
}

struct PolygonDfs {
    std::array<int, 3> split{};
    int total = 0;
    bool alternating = false;
    std::vector<Axis> forced_word;  // when set, stick k's axis is pinned

    // branch filter for worker partitioning; depth-1 branch counter
    int worker_count = 1;
    int worker_id = 0;

    std::function<bool(Conformation&&)> sink;
    bool stopped = false;
    std::uint64_t nodes = 0;

    std::vector<LatticePoint> corners;
    std::vector<Axis> axes;
    std::array<std::vector<bool>, 3> level_used;
    std::array<int, 3> remaining{};
    std::array<int, 3> last_dir{0, 0, 0};
    LatticePoint start;
    long long branch_counter = 0;

    int count(Axis a) const { return split[axis_index(a)]; }

    bool stick_ok(const LatticePoint& from, const LatticePoint& to, std::size_t k) const {
        Segment cand = Segment::between(from, to);
        const std::size_t placed = k;  // sticks 0..k-1 exist
        for (std::size_t j = 0; j < placed; ++j) {
            Segment sj = Segment::between(corners[j], corners[j + 1]);
            bool adjacent = (j + 1 == k);
            bool closing_adjacent = (k + 1 == static_cast<std::size_t>(total)) && j == 0;
            if (adjacent) {
                if (!segments_meet_only_at(sj, cand, corners[k])) return false;
            } else if (closing_adjacent) {
                if (!segments_meet_only_at(sj, cand, corners[0])) return false;
            } else if (segments_intersect(sj, cand)) {
                return false;
            }
        }
        return true;
    }

    void emit() {
        Component k;
        k.corners.assign(corners.begin(), corners.end() - 1);  // last corner == start
        Conformation c{{k}};
        if (!sink(std::move(c))) stopped = true;
    }

    void recurse(std::size_t k) {
        if (stopped) return;
        ++nodes;
        if (k == static_cast<std::size_t>(total)) {
            emit();
            return;
        }
        const Axis prev = k > 0 ? axes[k - 1] : Axis::X;
        for (Axis a : kAxes) {
            if (!forced_word.empty() && a != forced_word[k]) continue;
            if (remaining[axis_index(a)] == 0) continue;
            if (k > 0 && a == prev) continue;
            if (k + 1 == static_cast<std::size_t>(total) && a == axes[0]) continue;

            // word feasibility after taking a
            std::array<int, 3> rem = remaining;
            rem[axis_index(a)]--;
            int rtot = rem[0] + rem[1] + rem[2];
            int rmax = std::max({rem[0], rem[1], rem[2]});
            if (rtot > 0 && 2 * rmax > rtot + 1) continue;

            const LatticePoint cur = corners[k];
            const bool closing_axis = remaining[axis_index(a)] == 1;
            std::vector<Coord> targets;
            if (closing_axis) {
                targets.push_back(start[a]);
            } else {
                for (Coord lvl = 1; lvl <= count(a); ++lvl)
                    if (!level_used[axis_index(a)][lvl]) targets.push_back(lvl);
            }
            for (Coord target : targets) {
                if (target == cur[a]) continue;
                int dir = target > cur[a] ? +1 : -1;
                if (alternating && last_dir[axis_index(a)] != 0 &&
                    dir != -last_dir[axis_index(a)])
                    continue;
                LatticePoint next = cur;
                next[a] = target;
                if (!stick_ok(cur, next, k)) continue;

                // branch partition at depth 1
                if (k == 1 && worker_count > 1) {
                    long long id = branch_counter++;
                    if (id % worker_count != worker_id) continue;
                }

                corners.push_back(next);
                axes.push_back(a);
                remaining[axis_index(a)]--;
                int saved_dir = last_dir[axis_index(a)];
                last_dir[axis_index(a)] = dir;
                bool used_flag = !closing_axis;
                if (used_flag) level_used[axis_index(a)][target] = true;

                recurse(k + 1);

                if (used_flag) level_used[axis_index(a)][target] = false;
                last_dir[axis_index(a)] = saved_dir;
                remaining[axis_index(a)]++;
                axes.pop_back();
                corners.pop_back();
                if (stopped) return;
            }
        }
    }

    void run() {
        remaining = split;
        for (int i = 0; i < 3; ++i) level_used[i].assign(split[i] + 2, false);
        // root the walk at the first axis with sticks
        Axis root = split[0] > 0 ? Axis::X : Axis::Y;
        if (!forced_word.empty()) root = forced_word[0];
        if (split[axis_index(root)] == 0) return;

        std::array<Coord, 3> phase_max;
        for (int i = 0; i < 3; ++i) phase_max[i] = split[i] > 0 ? split[i] : 1;
        for (Coord x0 = 1; x0 <= phase_max[0] && !stopped; ++x0)
            for (Coord y0 = 1; y0 <= phase_max[1] && !stopped; ++y0)
                for (Coord z0 = 1; z0 <= phase_max[2] && !stopped; ++z0) {
                    start = LatticePoint{x0, y0, z0};
                    corners.assign(1, start);
                    axes.clear();
                    for (int i = 0; i < 3; ++i) {
                        std::fill(level_used[i].begin(), level_used[i].end(), false);
                        level_used[i][start[axis_from_index(i)]] = true;
                        last_dir[i] = 0;
                    }
                    branch_counter = 0;
                    place_first(root);  // stick 0 axis is pinned to the root
                }
    }

    void place_first(Axis root) {
        const LatticePoint cur = corners[0];
        const bool closing_axis = remaining[axis_index(root)] == 1;
        if (closing_axis) return;  // counts >= 2 always
        for (Coord target = 1; target <= count(root); ++target) {
            if (level_used[axis_index(root)][target]) continue;
            if (target == cur[root]) continue;
            int dir = target > cur[root] ? +1 : -1;
            LatticePoint next = cur;
            next[root] = target;
            corners.push_back(next);
            axes.push_back(root);
            remaining[axis_index(root)]--;
            last_dir[axis_index(root)] = dir;
            level_used[axis_index(root)][target] = true;

            recurse(1);

            level_used[axis_index(root)][target] = false;
            last_dir[axis_index(root)] = 0;
            remaining[axis_index(root)]++;
            axes.pop_back();
            corners.pop_back();
            if (stopped) return;
        }
    }
};

inline std::vector<std::array<int, 3>> sweep_splits(int total) {
    std::vector<std::array<int, 3>> out;
    for (int px = 0; px <= total; ++px)
        for (int py = px; py <= total; ++py) {
            int pz = total - px - py;
            if (pz < py) continue;  // canonical px <= py <= pz
            auto bad = [](int v) { return v == 1; };
            if (bad(px) || bad(py) || bad(pz)) continue;
            if (py == 0) continue;  // need at least two axes with sticks
            if (2 * pz > total) continue;  // cyclic word feasibility
            out.push_back({px, py, pz});
        }
    return out;
}

}  // namespace detail

// Emits every valid properly leveled single-component polygon with the given
// split (or all splits of the total when none is fixed), exactly once up to
// signed coordinate permutations and level relabeling when reduce_symmetry
// is set. The sink returns false to stop early.
inline std::uint64_t enumerate_polygons(const EnumerationSpec& spec,
                                        const std::function<bool(const Conformation&)>& sink) {
    if (spec.total > kEnumerationBudget)
        throw std::invalid_argument("enumerate_polygons: budget exceeded (total " +
                                    std::to_string(spec.total) + " > " +
                                    std::to_string(kEnumerationBudget) + ")");
    if (spec.total < 4) throw std::invalid_argument("enumerate_polygons: need at least 4 sticks");

    std::vector<std::array<int, 3>> splits;
    if (spec.split) {
        auto sp = *spec.split;
        if (sp[0] + sp[1] + sp[2] != spec.total)
            throw std::invalid_argument("enumerate_polygons: split does not sum to total");
        splits.push_back(sp);
    } else {
        splits = detail::sweep_splits(spec.total);
    }

    std::set<std::vector<Coord>> seen;
    std::uint64_t emitted = 0;
    bool stop = false;

    auto handle = [&](Conformation&& c) {
        if (stop) return false;
        if (spec.reduce_symmetry) {
            std::vector<Coord> key = detail::polygon_canonical_key(c);
            if (!seen.insert(std::move(key)).second) return true;
        }
        ++emitted;
        if (!sink(c)) {
            stop = true;
            return false;
        }
        return true;
    };

    for (auto& sp : splits) {
        if (stop) break;
        if (spec.workers <= 1) {
            detail::PolygonDfs dfs;
            dfs.split = sp;
            dfs.total = spec.total;
            dfs.alternating = spec.alternating;
            dfs.sink = handle;
            dfs.run();
        } else {
            // workers each enumerate their share; results are merged through
            // the same dedup set, so counts are worker-count independent
            std::vector<std::vector<Conformation>> found(spec.workers);
            std::vector<std::thread> pool;
            for (int w = 0; w < spec.workers; ++w)
                pool.emplace_back([&, w]() {
                    detail::PolygonDfs dfs;
                    dfs.split = sp;
                    dfs.total = spec.total;
                    dfs.alternating = spec.alternating;
                    dfs.worker_count = spec.workers;
                    dfs.worker_id = w;
                    dfs.sink = [&, w](Conformation&& c) {
                        found[w].push_back(std::move(c));
                        return true;
                    };
                    dfs.run();
                });
            for (auto& th : pool) th.join();
            for (auto& bucket : found)
                for (auto& c : bucket)
                    if (!handle(std::move(c))) break;
        }
    }
    return emitted;
}

// Jones certificate of a leveled polygon via its cheapest projection.
inline LaurentPoly jones_certificate(const Conformation& leveled) {
    PlanarDiagram best = project(leveled, Axis::X);
    for (Axis a : {Axis::Y, Axis::Z}) {
        PlanarDiagram d = project(leveled, a);
        if (crossing_count(d) < crossing_count(best)) best = d;
    }
    // a diagram with fewer than three crossings is always trivial
    if (crossing_count(best) <= 2 && best.component_count == 1) return LaurentPoly::one();
    return jones(best);
}

struct MinimalityResult {
    bool found = false;
    int budget = 0;
    Conformation witness;
};

// Least stick count at which the target Jones polynomial (up to mirror)
// appears among enumerated polygons.
inline MinimalityResult minimality_certificate(const LaurentPoly& target_q, int max_budget) {
    MinimalityResult res;
    for (int s = 4; s <= max_budget && !res.found; ++s) {
        EnumerationSpec spec;
        spec.total = s;
        enumerate_polygons(spec, [&](const Conformation& c) {
            if (jones_equal_up_to_mirror(jones_certificate(c), target_q)) {
                res.found = true;
                res.budget = s;
                res.witness = c;
                return false;
            }
            return true;
        });
    }
    return res;
}

}  // namespace latknot
