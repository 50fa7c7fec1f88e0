#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "latticeknots/arc.hpp"
#include "latticeknots/constructions.hpp"
#include "latticeknots/search.hpp"
#include "support/pd_builders.hpp"
#include "support/shapes.hpp"

using namespace latknot;
using namespace latknot::testref;

static LaurentPoly knot_jones(const Conformation& c) {
    return jones_certificate(properly_level(c));
}

TEST_CASE("torus family: counts, leveling, jones certificates") {
    for (int p = 2; p <= 5; ++p) {
        Conformation c = torus_knot(p);
        CHECK(validate(c).ok());
        AxisStickCounts n = stick_count(c);
        CHECK(n.total() == static_cast<std::size_t>(6 * p));
        CHECK(n.px == static_cast<std::size_t>(2 * p));
        CHECK(n.py == static_cast<std::size_t>(2 * p));
        CHECK(n.pz == static_cast<std::size_t>(2 * p));
        CHECK(is_properly_leveled(c));
        CHECK(jones_equal_up_to_mirror(knot_jones(c), torus_jones_oracle(p, p + 1)));
    }
    CHECK_THROWS_AS(torus_knot(1), std::invalid_argument);
}

TEST_CASE("compose: counts and jones multiplicativity") {
    Conformation t = torus_knot(2);
    LaurentPoly vt = knot_jones(t);

    Conformation tt = compose(t, t);
    CHECK(validate(tt).ok());
    CHECK(stick_count(tt).total() == 18);
    CHECK(knot_jones(tt) == vt * vt);

    Conformation t34 = torus_knot(3);
    Conformation mix = compose(t, t34);
    CHECK(stick_count(mix).total() == 24);
    CHECK(knot_jones(mix) == vt * knot_jones(t34));
}

TEST_CASE("compose: trefoil chains shrink by six sticks per factor") {
    Conformation t = torus_knot(2);
    LaurentPoly vt = knot_jones(t);
    Conformation chain = t;
    LaurentPoly expect = vt;
    for (int n = 2; n <= 4; ++n) {
        chain = compose(chain, t);
        expect = expect * vt;
        CHECK(validate(chain).ok());
        CHECK(stick_count(chain).total() == static_cast<std::size_t>(6 * n + 6));
    }
    CHECK(knot_jones(chain) == expect);
}

TEST_CASE("compose rejects factors without hooks") {
    // a planar square has no clean L at all
    CHECK_THROWS_AS(compose(latknot::testshapes::unit_square(), torus_knot(2)),
                    std::invalid_argument);
}

TEST_CASE("satellite_base: parallel copies") {
    Conformation t = torus_knot(2);
    for (int n = 1; n <= 3; ++n) {
        Conformation jn = satellite_base(t, n);
        CHECK(validate(jn).ok());
        CHECK(jn.components.size() == static_cast<std::size_t>(n));
        CHECK(stick_count(jn).total() == static_cast<std::size_t>(12 * n));
    }
    // all parallel copies share the same pairwise linking number
    Conformation j3 = properly_level(satellite_base(t, 3));
    PlanarDiagram d = project(j3, Axis::Z);
    long long l01 = linking_number(d, 0, 1);
    CHECK(l01 != 0);
    CHECK(linking_number(d, 0, 2) == l01);
    CHECK(linking_number(d, 1, 2) == l01);
}

TEST_CASE("satellite with a one-crossing word") {
    Conformation t = torus_knot(2);
    auto tors = torsion_sticks(t);
    REQUIRE(tors.size() >= 2);  // nontrivial knots always have at least two

    PermutationWord w;
    w.strands = 2;
    w.letters = {1};
    Conformation s = satellite(t, w, tors[0]);
    CHECK(validate(s).ok());
    CHECK(s.components.size() == 1);
    CHECK(stick_count(s).total() == 24);
    LaurentPoly v = knot_jones(s);
    CHECK(v != LaurentPoly::one());
    CHECK_FALSE(jones_equal_up_to_mirror(v, knot_jones(t)));
}

TEST_CASE("satellite: identity word reproduces the parallel link") {
    Conformation t = torus_knot(2);
    auto tors = torsion_sticks(t);
    for (int n = 1; n <= 3; ++n) {
        PermutationWord w;
        w.strands = n;
        Conformation s = satellite(t, w, tors[0]);
        CHECK(stick_count(s).total() == static_cast<std::size_t>(12 * n));
        CHECK(s.components.size() == static_cast<std::size_t>(n));
    }
}

TEST_CASE("satellite rejects bad words and non-torsion sticks") {
    Conformation t = torus_knot(2);
    auto tors = torsion_sticks(t);

    PermutationWord mixed;
    mixed.strands = 3;
    mixed.letters = {1, -2};
    CHECK_THROWS_AS(satellite(t, mixed, tors[0]), std::invalid_argument);

    PermutationWord twice;
    twice.strands = 2;
    twice.letters = {1, 1};
    CHECK_THROWS_AS(satellite(t, twice, tors[0]), std::invalid_argument);

    // the planar square has no torsion sticks; fake a ref pointing at one
    StickRef not_torsion = tors[0];
    not_torsion.stick = 9999;
    PermutationWord w;
    w.strands = 2;
    w.letters = {1};
    CHECK_THROWS_AS(satellite(t, w, not_torsion), std::invalid_argument);
}

TEST_CASE("two_braid_link family") {
    for (int n : {1, 4, 5, 6}) {
        Conformation c = two_braid_link(n);
        CHECK(validate(c).ok());
        CHECK(stick_count(c).total() == static_cast<std::size_t>(4 * n + 4));
        CHECK(c.components.size() == 2);
        CHECK(c.components[0].planar_axis().has_value());
        Conformation lv = properly_level(c);
        long long first = 0;
        for (Axis a : kAxes) {
            long long lk = linking_number(project(lv, a), 0, 1);
            CHECK(std::abs(lk) == n);
            if (a == Axis::X)
                first = lk;
            else
                CHECK(lk == first);
        }
    }
    CHECK_THROWS_AS(two_braid_link(2), std::invalid_argument);
    CHECK_THROWS_AS(two_braid_link(3), std::invalid_argument);
    CHECK_THROWS_AS(two_braid_link(0), std::invalid_argument);
}

TEST_CASE("arc presentation validation") {
    ArcPresentation bad;
    bad.pages = {{1, 2}, {2, 3}, {3, 1}};  // levels used twice but only 3 pages
    CHECK_NOTHROW(bad.check());

    ArcPresentation dup;
    dup.pages = {{1, 2}, {1, 2}, {3, 4}, {3, 4}};  // two 2-cycles
    CHECK_THROWS_AS(dup.check(), std::invalid_argument);

    ArcPresentation self_loop;
    self_loop.pages = {{1, 1}, {2, 2}};
    CHECK_THROWS_AS(self_loop.check(), std::invalid_argument);
}

TEST_CASE("arc conversion: seven-page (2,5)-torus presentation") {
    ArcPresentation a = torus2_arc_presentation(5);
    REQUIRE(a.size() == 7);
    Conformation c = from_arc_presentation(a);
    CHECK(validate(c).ok());
    CHECK(c.total_sticks() <= 26);
    LaurentPoly v = knot_jones(c);
    CHECK(jones_equal_up_to_mirror(v, torus_jones_oracle(2, 5)));
    CHECK(jones_equal_up_to_mirror(v, jones_of(grid_diagram(a.pages))));
}

TEST_CASE("arc conversion matches the grid oracle on assorted presentations") {
    std::vector<ArcPresentation> cases;
    cases.push_back(torus2_arc_presentation(7));  // 9 pages
    {
        // stabilized 8-page presentation of the (2,5)-torus knot: the spiral
        // with one arc split across a fresh level inserted below its end
        ArcPresentation a;
        a.pages = {{1, 3}, {3, 4}, {2, 5}, {4, 6}, {5, 7}, {6, 8}, {7, 1}, {8, 2}};
        a.check();
        Conformation c = from_arc_presentation(a);
        CHECK(c.total_sticks() <= 32);
        CHECK(jones_equal_up_to_mirror(jones_certificate(properly_level(c)),
                                       torus_jones_oracle(2, 5)));
        cases.push_back(a);
    }
    {
        ArcPresentation a;  // a 7-page presentation of another knot
        a.pages = {{1, 5}, {2, 6}, {3, 7}, {4, 1}, {5, 2}, {6, 3}, {7, 4}};
        a.check();
        cases.push_back(a);
    }
    for (const auto& a : cases) {
        Conformation c = from_arc_presentation(a);
        CHECK(validate(c).ok());
        CHECK(c.total_sticks() <= static_cast<std::size_t>(6 * a.size() - 16));
        CHECK(jones_equal_up_to_mirror(knot_jones(c), jones_of(grid_diagram(a.pages))));
    }
}

TEST_CASE("arc conversion rejects small or unusable presentations") {
    ArcPresentation tiny;
    tiny.pages = {{1, 3}, {2, 4}, {3, 5}, {4, 1}, {5, 2}};  // 5-page trefoil
    CHECK_THROWS_AS(from_arc_presentation(tiny), std::invalid_argument);
}
