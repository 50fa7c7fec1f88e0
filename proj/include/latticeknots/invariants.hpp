#pragma once

// Knot-type certificates and stick-count bound formulas.
//
// The Jones polynomial is computed from the Kauffman bracket and reported in
// the variable q = A^-2 = t^(1/2); knots land in even q-powers (integral t),
// links may use odd ones. Mirroring a link inverts the variable.

#include <cmath>
#include <optional>
#include <string>
#include <vector>

#include "latticeknots/bracket.hpp"
#include "latticeknots/conformation.hpp"
#include "latticeknots/diagram.hpp"
#include "latticeknots/laurent.hpp"

namespace latknot {

// (-A)^(-3w) * <D>, re-expressed in q.
inline LaurentPoly jones(const PlanarDiagram& d) {
    PDCode pd = pd_code(d);
    LaurentPoly br = bracket_auto(pd);
    const int w = writhe(d);
    LaurentPoly v = LaurentPoly::monomial(-3 * w, (w % 2 == 0) ? 1 : -1) * br;
    LaurentPoly q;
    for (auto& [e, coeff] : v.terms()) {
        if (e % 2 != 0) throw std::logic_error("jones: odd A-exponent");
        q.add_term(-e / 2, coeff);
    }
    return q;
}

inline LaurentPoly mirror_jones(const LaurentPoly& jones_q) { return jones_q.inverted_variable(); }

inline bool jones_equal_up_to_mirror(const LaurentPoly& a, const LaurentPoly& b) {
    return a == b || a == b.inverted_variable();
}

// Jones of the (p,q)-torus knot by the closed formula
//   V = t^((p-1)(q-1)/2) (1 - t^(p+1) - t^(q+1) + t^(p+q)) / (1 - t^2),
// returned in the same q-variable convention as jones().
inline LaurentPoly torus_jones_oracle(int p, int q) {
    if (p < 2 || q < 2) throw std::invalid_argument("torus_jones_oracle: need p, q >= 2");
    if (std::gcd(p, q) != 1) throw std::invalid_argument("torus_jones_oracle: p, q must be coprime");
    auto t_mono = [](int texp, long long c) { return LaurentPoly::monomial(2 * texp, c); };
    LaurentPoly num = t_mono(0, 1) - t_mono(p + 1, 1) - t_mono(q + 1, 1) + t_mono(p + q, 1);
    num = LaurentPoly::monomial((p - 1) * (q - 1), 1) * num;  // t^((p-1)(q-1)/2)
    LaurentPoly den = t_mono(0, 1) - t_mono(2, 1);
    return divide_exact(num, den);
}

// Renders a q-form Jones polynomial over t, using half-integer exponents
// where a link forces them.
inline std::string jones_str_t(const LaurentPoly& jq) {
    if (jq.is_zero()) return "0";
    bool integral = true;
    for (auto& [e, c] : jq.terms())
        if (e % 2 != 0) integral = false;
    std::string out;
    bool first = true;
    for (auto it = jq.terms().rbegin(); it != jq.terms().rend(); ++it) {
        long long c = it->second;
        int e = it->first;
        if (first) {
            if (c < 0) out += "-";
        } else {
            out += c < 0 ? " - " : " + ";
        }
        long long ac = c < 0 ? -c : c;
        bool show_coeff = ac != 1 || e == 0;
        if (show_coeff) out += std::to_string(ac);
        if (e != 0) {
            if (show_coeff) out += "*";
            out += "t^";
            if (integral) {
                out += std::to_string(e / 2);
            } else {
                out += "(" + std::to_string(e) + "/2)";
            }
        }
        first = false;
    }
    return out;
}

// |V(-1)|, defined for polynomials with integral t-powers.
inline long long determinant_from_jones(const LaurentPoly& jq) {
    long long s = 0;
    for (auto& [e, c] : jq.terms()) {
        if (e % 2 != 0) throw std::invalid_argument("determinant_from_jones: half-integer powers");
        s += (e / 2) % 2 == 0 ? c : -c;
    }
    return s < 0 ? -s : s;
}

// ---- stick-count bounds -------------------------------------------------

inline int bound_bridge_lower(int b) {
    if (b < 1) throw std::invalid_argument("bound_bridge_lower: bridge index must be >= 1");
    return 6 * b;
}

// ceil(3 sqrt(c+2)): least m with m^2 >= 9(c+2).
inline int bound_crossing_lower(int c) {
    if (c < 0) throw std::invalid_argument("bound_crossing_lower: negative crossing number");
    long long target = 9LL * (c + 2);
    int m = 0;
    while (1LL * m * m < target) ++m;
    return m;
}

inline int bound_arc_upper(int alpha) {
    if (alpha < 7)
        throw std::invalid_argument(
            "bound_arc_upper: needs at least seven pages (smaller presentations are special-cased "
            "knots; use the catalog)");
    return 6 * alpha - 16;
}

inline int bound_crossing_upper(int c) {
    if (c < 0) throw std::invalid_argument("bound_crossing_upper: negative crossing number");
    return 6 * c - 4;
}

inline int bound_link_planar(int n) {
    if (n < 1) throw std::invalid_argument("bound_link_planar: linking number must be >= 1");
    return (n == 2 || n == 3) ? 4 * n + 5 : 4 * n + 4;
}

// ---- curated index records ----------------------------------------------

struct KnotRecord {
    std::string name;
    int components = 1;
    int bridge = 0;              // 0 = unknown
    int crossing = -1;           // -1 = unknown
    int arc = 0;                 // 0 = unknown
    int s_cl = 0;                // known lattice stick index; 0 = unknown
    LaurentPoly jones_q;         // reference Jones in q
    bool has_jones = false;
    std::string source;
};

struct BoundCheck {
    std::string what;
    long long lower = 0, value = 0;
    bool ok = false;
};

struct BoundReport {
    std::string name;
    std::size_t stick_total = 0;
    std::vector<BoundCheck> checks;
    bool minimal = false;  // stick_total equals the recorded index
    bool ok() const {
        for (auto& c : checks)
            if (!c.ok) return false;
        return true;
    }
};

// Confronts a conformation with the record's indices: bridge and crossing
// lower bounds (knots only; a planar link component invalidates the bridge
// argument), plus the recorded stick index when present.
inline BoundReport check_bounds(const KnotRecord& r, const Conformation& c) {
    BoundReport rep;
    rep.name = r.name;
    rep.stick_total = stick_count(c).total();
    const bool knot = c.components.size() == 1;
    if (knot && r.bridge >= 1) {
        long long lb = bound_bridge_lower(r.bridge);
        rep.checks.push_back({"6b <= s", lb, static_cast<long long>(rep.stick_total),
                              lb <= static_cast<long long>(rep.stick_total)});
    }
    if (knot && r.crossing >= 0) {
        long long lb = bound_crossing_lower(r.crossing);
        rep.checks.push_back({"ceil(3 sqrt(c+2)) <= s", lb, static_cast<long long>(rep.stick_total),
                              lb <= static_cast<long long>(rep.stick_total)});
    }
    if (r.s_cl > 0) {
        rep.checks.push_back({"s >= known index", r.s_cl, static_cast<long long>(rep.stick_total),
                              r.s_cl <= static_cast<long long>(rep.stick_total)});
        rep.minimal = rep.stick_total == static_cast<std::size_t>(r.s_cl);
    }
    return rep;
}

}  // namespace latknot
