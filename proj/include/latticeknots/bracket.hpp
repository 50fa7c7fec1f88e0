#pragma once

// Kauffman bracket evaluation from PD codes.
//
// Two exact routes:
//   * kauffman_bracket: the full 2^c state sum with union-find loop
//     counting, budget-capped (the classic desk-scale method);
//   * bracket_contracted: processes crossings one at a time, carrying a map
//     from open-strand pairings to Laurent coefficients. Same values, much
//     larger crossing budgets on the narrow diagrams lattice projections
//     produce.
//
// PD convention: X[a,b,c,d] lists the four incident edges counterclockwise
// starting from the incoming under-strand edge a. The A-smoothing joins
// a-b and c-d; the B-smoothing joins a-d and b-c.

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>
#include <vector>

#include "latticeknots/diagram.hpp"
#include "latticeknots/laurent.hpp"

namespace latknot {

inline LaurentPoly loop_factor() {
    LaurentPoly d;
    d.add_term(2, -1);
    d.add_term(-2, -1);
    return d;  // -A^2 - A^-2
}

namespace detail {

struct Dsu {
    std::vector<int> parent;
    explicit Dsu(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    int find(int v) {
        while (parent[v] != v) v = parent[v] = parent[parent[v]];
        return v;
    }
    void unite(int a, int b) { parent[find(a)] = find(b); }
};

}  // namespace detail

// State-sum bracket, normalized so the bracket of one unknot is 1.
inline LaurentPoly kauffman_bracket(const PDCode& pd, int max_crossings = 25) {
    const int c = static_cast<int>(pd.crossings.size());
    if (c > max_crossings)
        throw std::invalid_argument("kauffman_bracket: crossing budget exceeded: " +
                                    std::to_string(c) + " > " + std::to_string(max_crossings));

    const LaurentPoly delta = loop_factor();
    if (c == 0) {
        if (pd.free_loops == 0) return LaurentPoly::one();
        return delta.pow(static_cast<int>(pd.free_loops) - 1);
    }

    std::vector<int> edges;
    for (const auto& t : pd.crossings)
        for (int e : t) edges.push_back(e);
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
    std::map<int, int> edge_index;
    for (std::size_t i = 0; i < edges.size(); ++i) edge_index[edges[i]] = static_cast<int>(i);
    const int ne = static_cast<int>(edges.size());

    LaurentPoly total;
    for (unsigned long state = 0; state < (1ull << c); ++state) {
        detail::Dsu dsu(ne);
        int a_count = 0;
        for (int i = 0; i < c; ++i) {
            const auto& t = pd.crossings[i];
            if (state >> i & 1) {
                ++a_count;  // A: a-b, c-d
                dsu.unite(edge_index[t[0]], edge_index[t[1]]);
                dsu.unite(edge_index[t[2]], edge_index[t[3]]);
            } else {
                dsu.unite(edge_index[t[0]], edge_index[t[3]]);
                dsu.unite(edge_index[t[1]], edge_index[t[2]]);
            }
        }
        int loops = 0;
        for (int e = 0; e < ne; ++e)
            if (dsu.find(e) == e) ++loops;
        int exponent = a_count - (c - a_count);
        total += LaurentPoly::monomial(exponent, 1) *
                 delta.pow(loops - 1 + static_cast<int>(pd.free_loops));
    }
    return total;
}

// Exact evaluation by sequential crossing absorption. The state maps each
// pairing of open strand ends to its accumulated coefficient; crossings are
// taken greedily by adjacency to keep the open boundary narrow.
inline LaurentPoly bracket_contracted(const PDCode& pd) {
    const int c = static_cast<int>(pd.crossings.size());
    const LaurentPoly delta = loop_factor();
    if (c == 0) {
        if (pd.free_loops == 0) return LaurentPoly::one();
        return delta.pow(static_cast<int>(pd.free_loops) - 1);
    }

    // Plug = one of the two occurrences of an edge across all tuples.
    // plug id = 2*edge_slot_index; trivial partner = the other occurrence.
    std::map<int, int> seen_once;  // edge -> plug id of first occurrence
    std::vector<std::array<int, 4>> plugs(c);  // per crossing slot
    std::map<int, int> trivial;                // plug -> its partner plug
    int next_plug = 0;
    for (int i = 0; i < c; ++i)
        for (int s = 0; s < 4; ++s) {
            int e = pd.crossings[i][s];
            int p = next_plug++;
            plugs[i][s] = p;
            auto it = seen_once.find(e);
            if (it == seen_once.end()) {
                seen_once[e] = p;
            } else {
                trivial[p] = it->second;
                trivial[it->second] = p;
                seen_once.erase(it);
            }
        }
    if (!seen_once.empty())
        throw std::invalid_argument("bracket: some edge label does not appear exactly twice");

    // Deterministic greedy order: absorb the crossing sharing the most edges
    // with the processed region.
    std::vector<int> order;
    std::vector<bool> done(c, false);
    std::map<int, bool> edge_open;
    for (int step = 0; step < c; ++step) {
        int best = -1, best_score = -1;
        for (int i = 0; i < c; ++i) {
            if (done[i]) continue;
            int score = 0;
            for (int s = 0; s < 4; ++s) {
                auto it = edge_open.find(pd.crossings[i][s]);
                if (it != edge_open.end() && it->second) ++score;
            }
            if (score > best_score) {
                best_score = score;
                best = i;
            }
        }
        order.push_back(best);
        done[best] = true;
        for (int s = 0; s < 4; ++s) {
            bool& open = edge_open[pd.crossings[best][s]];
            open = !open;  // first occurrence opens the edge, second closes it
        }
    }

    using Pairing = std::vector<std::pair<int, int>>;
    auto canon = [](std::map<int, int>& m) {
        Pairing key;
        for (auto& [a, b] : m)
            if (a < b) key.emplace_back(a, b);
        return key;
    };

    std::map<Pairing, LaurentPoly> states;
    states[{}] = LaurentPoly::one();

    for (int idx : order) {
        const auto& pl = plugs[idx];
        std::map<Pairing, LaurentPoly> next;
        for (const auto& [key, poly] : states) {
            for (int smoothing = 0; smoothing < 2; ++smoothing) {
                std::map<int, int> m(key.begin(), key.end());
                for (auto& [a, b] : key) m[b] = a;
                int loops = 0;
                auto get_other = [&](int p) {
                    auto it = m.find(p);
                    if (it != m.end()) return it->second;
                    return trivial.at(p);
                };
                auto erase_plug = [&](int p) { m.erase(p); };
                auto arc = [&](int pa, int pb) {
                    int ea = get_other(pa);
                    erase_plug(pa);
                    if (ea == pb) {
                        ++loops;
                        erase_plug(pb);
                        return;
                    }
                    int eb = get_other(pb);
                    erase_plug(pb);
                    erase_plug(ea);
                    erase_plug(eb);
                    m[ea] = eb;
                    m[eb] = ea;
                };
                if (smoothing == 0) {  // A: slots 0-1, 2-3
                    arc(pl[0], pl[1]);
                    arc(pl[2], pl[3]);
                } else {  // B: slots 0-3, 1-2
                    arc(pl[0], pl[3]);
                    arc(pl[1], pl[2]);
                }
                LaurentPoly contrib =
                    poly * LaurentPoly::monomial(smoothing == 0 ? 1 : -1, 1) * delta.pow(loops);
                Pairing nk = canon(m);
                auto it = next.find(nk);
                if (it == next.end())
                    next.emplace(std::move(nk), std::move(contrib));
                else
                    it->second += contrib;
            }
        }
        states = std::move(next);
    }

    if (states.size() != 1 || !states.begin()->first.empty())
        throw std::logic_error("bracket_contracted: dangling strands at end");
    LaurentPoly total = states.begin()->second;
    total = total * delta.pow(static_cast<int>(pd.free_loops));
    return divide_exact(total, delta);
}

// Dispatch: state sum where it is cheap, contraction beyond.
inline LaurentPoly bracket_auto(const PDCode& pd) {
    if (pd.crossings.size() <= 8) return kauffman_bracket(pd, 8);
    return bracket_contracted(pd);
}

}  // namespace latknot
