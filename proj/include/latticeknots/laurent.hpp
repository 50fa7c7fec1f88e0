#pragma once

// Sparse integer Laurent polynomials in one variable.
// Exact arithmetic only; no zero coefficients are ever stored.

#include <cstdint>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>

namespace latknot {

class LaurentPoly {
public:
    using Exp = int;
    using Coeff = long long;

    LaurentPoly() = default;

    static LaurentPoly zero() { return LaurentPoly{}; }
    static LaurentPoly one() { return monomial(0, 1); }

    static LaurentPoly monomial(Exp e, Coeff c) {
        LaurentPoly p;
        if (c != 0) p.terms_[e] = c;
        return p;
    }

    bool is_zero() const { return terms_.empty(); }

    Coeff coeff(Exp e) const {
        auto it = terms_.find(e);
        return it == terms_.end() ? 0 : it->second;
    }

    Exp min_exp() const {
        if (terms_.empty()) throw std::logic_error("min_exp of zero polynomial");
        return terms_.begin()->first;
    }
    Exp max_exp() const {
        if (terms_.empty()) throw std::logic_error("max_exp of zero polynomial");
        return terms_.rbegin()->first;
    }

    const std::map<Exp, Coeff>& terms() const { return terms_; }

    void add_term(Exp e, Coeff c) {
        if (c == 0) return;
        auto it = terms_.find(e);
        if (it == terms_.end()) {
            terms_.emplace(e, c);
        } else {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    LaurentPoly& operator+=(const LaurentPoly& o) {
        for (auto& [e, c] : o.terms_) add_term(e, c);
        return *this;
    }
    LaurentPoly& operator-=(const LaurentPoly& o) {
        for (auto& [e, c] : o.terms_) add_term(e, -c);
        return *this;
    }

    friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { a += b; return a; }
    friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { a -= b; return a; }

    friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
        LaurentPoly r;
        for (auto& [ea, ca] : a.terms_)
            for (auto& [eb, cb] : b.terms_)
                r.add_term(ea + eb, ca * cb);
        return r;
    }
    LaurentPoly& operator*=(const LaurentPoly& o) { *this = *this * o; return *this; }

    friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
        return a.terms_ == b.terms_;
    }
    friend bool operator!=(const LaurentPoly& a, const LaurentPoly& b) { return !(a == b); }

    // x -> x^-1
    LaurentPoly inverted_variable() const {
        LaurentPoly r;
        for (auto& [e, c] : terms_) r.terms_[-e] = c;
        return r;
    }

    // x -> x^k (k != 0)
    LaurentPoly substituted_power(int k) const {
        if (k == 0) throw std::invalid_argument("substituted_power: k must be nonzero");
        LaurentPoly r;
        for (auto& [e, c] : terms_) r.terms_[e * k] = c;
        return r;
    }

    LaurentPoly pow(int n) const {
        if (n < 0) throw std::invalid_argument("pow: negative exponent");
        LaurentPoly r = one();
        for (int i = 0; i < n; ++i) r *= *this;
        return r;
    }

    // Exact division; throws if the remainder is nonzero.
    friend LaurentPoly divide_exact(const LaurentPoly& num, const LaurentPoly& den) {
        if (den.is_zero()) throw std::invalid_argument("divide_exact: zero divisor");
        LaurentPoly rem = num, quot;
        const Exp dmax = den.max_exp();
        const Coeff dlead = den.terms_.rbegin()->second;
        while (!rem.is_zero()) {
            const Exp rmax = rem.max_exp();
            const Coeff rlead = rem.terms_.rbegin()->second;
            if (rlead % dlead != 0) throw std::domain_error("divide_exact: inexact division");
            LaurentPoly t = monomial(rmax - dmax, rlead / dlead);
            quot += t;
            rem -= t * den;
            if (!rem.is_zero() && rem.max_exp() >= rmax)
                throw std::logic_error("divide_exact: no progress");
        }
        return quot;
    }

    // Evaluate with the variable set to -1 (exponent parity decides sign).
    Coeff eval_at_minus_one() const {
        Coeff s = 0;
        for (auto& [e, c] : terms_) s += (e % 2 == 0) ? c : -c;
        return s;
    }

    std::string str(const std::string& var = "x") const {
        if (terms_.empty()) return "0";
        std::ostringstream os;
        bool first = true;
        for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
            Coeff c = it->second;
            Exp e = it->first;
            if (first) {
                if (c < 0) os << "-";
            } else {
                os << (c < 0 ? " - " : " + ");
            }
            Coeff ac = c < 0 ? -c : c;
            if (ac != 1 || e == 0) os << ac;
            if (e != 0) {
                if (ac != 1) os << "*";
                os << var;
                if (e != 1) os << "^" << e;
            }
            first = false;
        }
        return os.str();
    }

private:
    std::map<Exp, Coeff> terms_;
};

}  // namespace latknot
