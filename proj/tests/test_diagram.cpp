#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "latticeknots/diagram.hpp"
#include "latticeknots/invariants.hpp"
#include "latticeknots/moves.hpp"
#include "support/shapes.hpp"

using namespace latknot;
using namespace latknot::testshapes;

static Conformation mirrored_x(const Conformation& c) {
    Transform t;
    t.sign = {-1, +1, +1};
    return transformed(c, t);
}

TEST_CASE("projection requires proper leveling") {
    CHECK_THROWS_AS(project(unit_square(), Axis::Z), std::invalid_argument);
    CHECK_NOTHROW(project(properly_level(unit_square()), Axis::Z));
}

TEST_CASE("planar square projects with no crossings") {
    PlanarDiagram d = project(properly_level(unit_square()), Axis::Z);
    CHECK(crossing_count(d) == 0);
    CHECK(d.free_loops == 1);
    CHECK(writhe(d) == 0);
    CHECK(pd_code(d).crossings.empty());
}

TEST_CASE("split squares: no crossings, zero linking") {
    Conformation lv = properly_level(split_squares());
    for (Axis a : kAxes) {
        PlanarDiagram d = project(lv, a);
        CHECK(crossing_count(d) == 0);
        CHECK(linking_number(d, 0, 1) == 0);
    }
}

TEST_CASE("hopf link: two crossings, linking number +-1 on every axis") {
    Conformation lv = properly_level(hopf());
    long long first = 0;
    for (Axis a : kAxes) {
        PlanarDiagram d = project(lv, a);
        CHECK(d.component_count == 2);
        long long lk = linking_number(d, 0, 1);
        CHECK(std::abs(lk) == 1);
        if (a == Axis::X)
            first = lk;
        else
            CHECK(lk == first);  // rotation-consistent projections agree in sign
        CHECK(linking_number(d, 1, 0) == lk);
        CHECK_THROWS_AS(linking_number(d, 0, 0), std::invalid_argument);
    }
    PlanarDiagram dz = project(lv, Axis::Z);
    CHECK(crossing_count(dz) == 2);
}

TEST_CASE("reversing one component negates the linking number") {
    Conformation lv = properly_level(hopf());
    long long lk = linking_number(project(lv, Axis::Z), 0, 1);
    Conformation rev = properly_level(reversed_component(hopf(), 1));
    long long lk_rev = linking_number(project(rev, Axis::Z), 0, 1);
    CHECK(lk == -lk_rev);
}

TEST_CASE("mirroring negates the writhe") {
    Conformation lv = properly_level(hopf());
    Conformation mir = properly_level(mirrored_x(hopf()));
    int w = writhe(project(lv, Axis::Z));
    int wm = writhe(project(mir, Axis::Z));
    CHECK(w == -wm);
    CHECK(w != 0);  // hopf projects with both crossings of one sign
}

TEST_CASE("crossing count respects the px*py bound") {
    for (const Conformation& c : {hopf(), hexagon6(), split_squares()}) {
        Conformation lv = properly_level(c);
        AxisStickCounts n = stick_count(lv);
        PlanarDiagram d = project(lv, Axis::Z);
        CHECK(crossing_count(d) <= n.px * n.py);
    }
}

TEST_CASE("PD code structural audit: every edge appears exactly twice") {
    Conformation lv = properly_level(hopf());
    PDCode pd = pd_code(project(lv, Axis::Z));
    std::map<int, int> uses;
    for (auto& t : pd.crossings)
        for (int e : t) ++uses[e];
    for (auto& [e, n] : uses) CHECK(n == 2);
    CHECK(uses.size() == 2 * pd.crossings.size());
}

TEST_CASE("PD text round trip") {
    Conformation lv = properly_level(hopf());
    PlanarDiagram d = project(lv, Axis::Z);
    std::string text = pd_to_text(d);
    CHECK(text.rfind("pd-code/1\n", 0) == 0);
    PDCode back = pd_from_text(text);
    CHECK(back.crossings == pd_code(d).crossings);
}
