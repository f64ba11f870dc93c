#pragma once

#include <gmpxx.h>

#include <map>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <utility>

namespace ctilde {

using Rational = mpq_class;

/// Sparse Laurent polynomial in q over Q; no zero coefficients are stored.
class LaurentPoly {
public:
    LaurentPoly() = default;
    LaurentPoly(long c) { add(0, Rational(c)); }  // NOLINT(google-explicit-constructor)
    LaurentPoly(const Rational& c) { add(0, c); }  // NOLINT(google-explicit-constructor)

    static LaurentPoly monomial(int exp, const Rational& c = 1) {
        LaurentPoly p;
        p.add(exp, c);
        return p;
    }
    static LaurentPoly q() { return monomial(1); }
    /// p = q^-1.
    static LaurentPoly p() { return monomial(-1); }

    const std::map<int, Rational>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    Rational coefficient(int exp) const {
        auto it = terms_.find(exp);
        return it == terms_.end() ? Rational(0) : it->second;
    }

    int min_exponent() const { return terms_.empty() ? 0 : terms_.begin()->first; }
    int max_exponent() const { return terms_.empty() ? 0 : terms_.rbegin()->first; }

    /// a when the polynomial is exactly q^a.
    std::optional<int> pure_power() const {
        if (terms_.size() == 1 && terms_.begin()->second == 1) return terms_.begin()->first;
        return std::nullopt;
    }

    Rational evaluate(const Rational& x) const {
        Rational acc = 0;
        for (const auto& [e, c] : terms_) {
            mpz_class num = x.get_num();
            mpz_class den = x.get_den();
            const unsigned long k = static_cast<unsigned long>(e < 0 ? -e : e);
            mpz_class pn, pd;
            mpz_pow_ui(pn.get_mpz_t(), num.get_mpz_t(), k);
            mpz_pow_ui(pd.get_mpz_t(), den.get_mpz_t(), k);
            Rational xe = e >= 0 ? Rational(pn, pd) : Rational(pd, pn);
            xe.canonicalize();
            acc += c * xe;
        }
        return acc;
    }

    Rational at_one() const {
        Rational acc = 0;
        for (const auto& [e, c] : terms_) acc += c;
        return acc;
    }

    LaurentPoly& operator+=(const LaurentPoly& o) {
        for (const auto& [e, c] : o.terms_) add(e, c);
        return *this;
    }
    LaurentPoly& operator-=(const LaurentPoly& o) {
        for (const auto& [e, c] : o.terms_) add(e, -c);
        return *this;
    }
    LaurentPoly operator-() const {
        LaurentPoly r;
        for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
        return r;
    }
    friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
    friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
    friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
        LaurentPoly r;
        for (const auto& [ea, ca] : a.terms_)
            for (const auto& [eb, cb] : b.terms_) r.add(ea + eb, ca * cb);
        return r;
    }
    LaurentPoly& operator*=(const LaurentPoly& o) { return *this = *this * o; }

    /// Multiplication by q^k.
    LaurentPoly shifted(int k) const {
        LaurentPoly r;
        for (const auto& [e, c] : terms_) r.terms_.emplace(e + k, c);
        return r;
    }

    friend bool operator==(const LaurentPoly&, const LaurentPoly&) = default;

    std::string to_string() const {
        if (terms_.empty()) return "0";
        std::ostringstream os;
        bool first = true;
        for (const auto& [e, c] : terms_) {
            if (!first) os << (sgn(c) < 0 ? " - " : " + ");
            else if (sgn(c) < 0) os << "-";
            first = false;
            const Rational a = abs(c);
            if (e == 0) {
                os << a.get_str();
                continue;
            }
            if (a != 1) os << a.get_str() << "*";
            os << "q";
            if (e != 1) os << "^" << e;
        }
        return os.str();
    }

    friend std::ostream& operator<<(std::ostream& os, const LaurentPoly& p) { return os << p.to_string(); }

private:
    void add(int e, const Rational& c) {
        if (c == 0) return;
        auto [it, inserted] = terms_.emplace(e, c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    std::map<int, Rational> terms_;
};

}  // namespace ctilde
