// Maintenance searches for the multi-component catalog entries: rectangle
// companions around frozen knot conformations, the 13-stick two-component
// link, and the three-rectangle links. Matches are certified by Jones values
// of reference diagrams built directly from braid closures.

#include <cstdio>
#include <cstring>
#include <set>
#include <string>

#include "latticeknots/constructions.hpp"
#include "latticeknots/json_io.hpp"
#include "latticeknots/search.hpp"
#include "support/pd_builders.hpp"
#include "support/shapes.hpp"

using namespace latknot;
using namespace latknot::testref;

static Conformation figure8_14() {
    Component k;
    k.corners = {{1, 2, 1}, {3, 2, 1}, {3, 2, 4}, {3, 4, 4}, {2, 4, 4}, {2, 4, 2}, {2, 1, 2},
                 {2, 1, 6}, {2, 3, 6}, {2, 3, 3}, {4, 3, 3}, {4, 2, 3}, {4, 2, 5}, {1, 2, 5}};
    return Conformation{{k}};
}

static LaurentPoly link_jones(const Conformation& c) {
    return jones(project(properly_level(c), Axis::Z));
}

static void classify(const char* tag, const Conformation& c,
                     const std::vector<std::pair<std::string, LaurentPoly>>& refs) {
    LaurentPoly v = link_jones(c);
    for (auto& [name, ref] : refs)
        if (jones_equal_up_to_mirror(v, ref)) {
            std::printf("%s MATCH %s  %s\n", tag, name.c_str(), to_json(c).c_str());
            return;
        }
    std::printf("%s unmatched jones=%s\n", tag, jones_str_t(v).c_str());
}

// every axis-aligned rectangle with corners in [lo, hi]^3
template <typename F>
static void for_each_rectangle(Coord lo, Coord hi, F&& f) {
    for (Axis normal : kAxes)
        for (Coord level = lo; level <= hi; ++level)
            for (Coord a0 = lo; a0 <= hi; ++a0)
                for (Coord a1 = a0 + 1; a1 <= hi; ++a1)
                    for (Coord b0 = lo; b0 <= hi; ++b0)
                        for (Coord b1 = b0 + 1; b1 <= hi; ++b1)
                            f(latknot::testshapes::rectangle(normal, level, a0, a1, b0, b1));
}

static void hunt_ring_companion(const char* tag, const Conformation& knot, Coord lo, Coord hi,
                                const std::vector<std::pair<std::string, LaurentPoly>>& refs,
                                int want_crossings) {
    std::set<std::string> seen;
    int hits = 0;
    for_each_rectangle(lo, hi, [&](const Component& rect) {
        if (hits >= 40) return;
        Conformation c = knot;
        c.components.push_back(rect);
        if (!validate(c).ok()) return;
        Conformation lv = properly_level(c);
        PlanarDiagram d = project(lv, Axis::Z);
        long long lk = linking_number(d, 0, 1);
        LaurentPoly v = jones(d);
        std::string key = jones_str_t(v);
        std::string mkey = jones_str_t(v.inverted_variable());
        if (mkey < key) key = mkey;
        if (!seen.insert(key).second) return;
        for (auto& [name, ref] : refs)
            if (jones_equal_up_to_mirror(v, ref)) {
                ++hits;
                std::printf("%s MATCH %s lk=%lld  %s\n", tag, name.c_str(), lk,
                            to_json(c).c_str());
                return;
            }
        (void)want_crossings;
    });
    std::printf("%s done (%zu distinct jones classes)\n", tag, seen.size());
}

int main(int argc, char** argv) {
    std::string mode = argc > 1 ? argv[1] : "all";

    if (mode == "borromean" || mode == "all") {
        Conformation c;
        c.components.push_back(latknot::testshapes::rectangle(Axis::Z, 0, -2, 2, -1, 1));
        c.components.push_back(latknot::testshapes::rectangle(Axis::X, 0, -2, 2, -1, 1));
        c.components.push_back(latknot::testshapes::rectangle(Axis::Y, 0, -1, 1, -2, 2));
        std::printf("borromean valid=%d sticks=%zu\n", validate(c).ok() ? 1 : 0,
                    c.total_sticks());
        if (validate(c).ok()) {
            Conformation lv = properly_level(c);
            PlanarDiagram d = project(lv, Axis::Z);
            std::printf("  lk01=%lld lk02=%lld lk12=%lld\n", linking_number(d, 0, 1),
                        linking_number(d, 0, 2), linking_number(d, 1, 2));
            LaurentPoly v = jones(d);
            LaurentPoly ref = jones_of(braid_closure(3, {1, -2, 1, -2, 1, -2}));
            std::printf("  jones_vs_borromean_braid=%d  %s\n",
                        jones_equal_up_to_mirror(v, ref) ? 1 : 0, to_json(c).c_str());
        }
    }

    if (mode == "triple" || mode == "all") {
        Conformation c;
        c.components.push_back(latknot::testshapes::rectangle(Axis::Z, 0, 0, 10, 0, 10));
        c.components.push_back(latknot::testshapes::rectangle(Axis::Y, 5, -2, 2, -3, 1));
        c.components.push_back(latknot::testshapes::rectangle(Axis::X, 1, -2, 6, -2, 2));
        std::printf("triple valid=%d sticks=%zu\n", validate(c).ok() ? 1 : 0, c.total_sticks());
        if (validate(c).ok()) {
            Conformation lv = properly_level(c);
            PlanarDiagram d = project(lv, Axis::Z);
            std::printf("  lk01=%lld lk02=%lld lk12=%lld\n", linking_number(d, 0, 1),
                        linking_number(d, 0, 2), linking_number(d, 1, 2));
            LaurentPoly v = jones(d);
            LaurentPoly t33 = jones_of(braid_closure(3, {1, 2, 1, 2, 1, 2}));
            std::printf("  jones_vs_T33=%d jones=%s\n  %s\n",
                        jones_equal_up_to_mirror(v, t33) ? 1 : 0, jones_str_t(v).c_str(),
                        to_json(c).c_str());
        }
    }

    if (mode == "ring3" || mode == "all") {
        // trefoil with an encircling rectangle: the braid-axis link (lk 2)
        std::vector<std::pair<std::string, LaurentPoly>> refs;
        refs.emplace_back("3_1+axis(lk2,7x)",
                          jones_of(braid_closure_with_ring(2, {1, 1, 1}, 0, 1)));
        hunt_ring_companion("ring3", transformed(torus_knot(2), Transform::scaling(2, 2, 2)), -1, 9, refs, 7);
    }

    if (mode == "ring8" || mode == "all") {
        // figure-8 with a rectangle around two adjacent braid strands, tried
        // at every height along the braid
        std::vector<std::pair<std::string, LaurentPoly>> refs;
        std::set<std::string> ref_seen;
        std::vector<int> w8 = {1, -2, 1, -2};
        for (int pos = 0; pos <= 4; ++pos)
            for (int lo = 0; lo < 3; ++lo)
                for (int hi = lo; hi < 3; ++hi) {
                    LaurentPoly v = jones_of(braid_closure_with_ring(3, w8, lo, hi, pos));
                    std::string key = std::min(jones_str_t(v), jones_str_t(v.inverted_variable()));
                    if (!ref_seen.insert(key).second) continue;
                    char name[64];
                    std::snprintf(name, sizeof name, "4_1+ring[%d..%d]@%d", lo, hi, pos);
                    refs.emplace_back(name, v);
                }
        std::printf("ring8: %zu distinct reference classes\n", refs.size());
        hunt_ring_companion("ring8", transformed(figure8_14(), Transform::scaling(2, 2, 2)), -1,
                            13, refs, 8);
    }

    if (mode == "l4" || mode == "all") {
        // 13-stick two-component link with linking number 2: a 6-stick bent
        // hexagon plus a 7-stick companion, over scalings and placements
        LaurentPoly ref = jones_of(braid_closure(2, {1, 1, 1, 1}));  // (2,4) torus link

        std::vector<Component> shapes7;
        {
            EnumerationSpec spec;
            spec.total = 7;
            enumerate_polygons(spec, [&](const Conformation& b7) {
                shapes7.push_back(b7.components[0]);
                return true;
            });
        }
        std::printf("l4: %zu seven-stick classes\n", shapes7.size());

        Component hexa_base;
        hexa_base.corners = {{0, 0, 0}, {1, 0, 0}, {1, 1, 0}, {1, 1, 1}, {0, 1, 1}, {0, 0, 1}};

        static const int perms[6][3] = {{0, 1, 2}, {0, 2, 1}, {1, 0, 2},
                                        {1, 2, 0}, {2, 0, 1}, {2, 1, 0}};
        int found = 0;
        for (Coord h1 = 2; h1 <= 3 && found < 3; ++h1)
        for (Coord h2 = 2; h2 <= 3 && found < 3; ++h2)
        for (Coord h3 = 2; h3 <= 3 && found < 3; ++h3) {
            Conformation hexa{{hexa_base}};
            hexa = transformed(hexa, Transform::scaling(h1, h2, h3));
            BoundingBox hb = bounding_box(hexa);
            for (const Component& shape : shapes7) {
                for (auto& perm : perms)
                for (int signs = 0; signs < 8 && found < 3; ++signs)
                for (Coord s1 = 1; s1 <= 2; ++s1)
                for (Coord s2 = 1; s2 <= 2; ++s2)
                for (Coord s3 = 1; s3 <= 2; ++s3) {
                    Transform t;
                    t.perm = {perm[0], perm[1], perm[2]};
                    t.sign = {(signs & 1) ? -1 : 1, (signs & 2) ? -1 : 1, (signs & 4) ? -1 : 1};
                    t.scale = {s1, s2, s3};
                    Conformation c2 = transformed(Conformation{{shape}}, t);
                    BoundingBox cb = bounding_box(c2);
                    for (Coord tx = hb.lo.x - cb.hi.x; tx <= hb.hi.x - cb.lo.x; ++tx)
                    for (Coord ty = hb.lo.y - cb.hi.y; ty <= hb.hi.y - cb.lo.y; ++ty)
                    for (Coord tz = hb.lo.z - cb.hi.z; tz <= hb.hi.z - cb.lo.z; ++tz) {
                        Conformation pair = hexa;
                        Conformation moved =
                            transformed(c2, Transform::translation({tx, ty, tz}));
                        pair.components.push_back(moved.components[0]);
                        if (!validate(pair).ok()) continue;
                        Conformation lv = properly_level(pair);
                        PlanarDiagram d = project(lv, Axis::Z);
                        if (std::llabs(linking_number(d, 0, 1)) != 2) continue;
                        LaurentPoly v = jones(d);
                        if (!jones_equal_up_to_mirror(v, ref)) continue;
                        std::printf("l4 HIT  %s\n", to_json(pair).c_str());
                        std::fflush(stdout);
                        if (++found >= 3) goto l4done;
                    }
                }
            }
        }
        l4done:
        std::printf("l4 done found=%d\n", found);
    }

    return 0;
}
