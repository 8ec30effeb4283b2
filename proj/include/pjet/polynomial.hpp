#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <ostream>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "pjet/errors.hpp"
#include "pjet/monomial.hpp"
#include "pjet/numeric.hpp"
#include "pjet/variable.hpp"

namespace pjet {

// Exact multivariate polynomial over the integers. Sparse: a map from
// monomials to nonzero coefficients, kept in descending canonical order so
// iteration and printing coincide. Values are immutable in spirit: all
// operations build new polynomials, nothing is shared.
class Polynomial {
public:
    using TermMap = std::map<Monomial, BigInt, std::greater<Monomial>>;

    Polynomial() = default;

    Polynomial(const BigInt& c) {
        if (c != 0) terms_.emplace(Monomial::one(), c);
    }
    Polynomial(int c) : Polynomial(BigInt(c)) {}
    Polynomial(const Variable& v) { terms_.emplace(Monomial::variable(v), 1); }

    static Polynomial term(const Monomial& m, const BigInt& c) {
        Polynomial p;
        if (c != 0) p.terms_.emplace(m, c);
        return p;
    }

    const TermMap& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }
    std::size_t term_count() const noexcept { return terms_.size(); }

    bool is_constant() const noexcept {
        return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_one());
    }

    BigInt constant_term() const {
        auto it = terms_.find(Monomial::one());
        return it == terms_.end() ? BigInt(0) : it->second;
    }

    BigInt coefficient(const Monomial& m) const {
        auto it = terms_.find(m);
        return it == terms_.end() ? BigInt(0) : it->second;
    }

    // Total degree; -1 for the zero polynomial.
    std::int64_t degree() const noexcept {
        std::int64_t d = -1;
        for (const auto& [m, c] : terms_)
            if (m.degree() > d) d = m.degree();
        return d;
    }

    std::uint32_t max_jet_order() const noexcept {
        std::uint32_t k = 0;
        for (const auto& [m, c] : terms_)
            if (m.max_jet_order() > k) k = m.max_jet_order();
        return k;
    }

    std::set<Variable> variables() const {
        std::set<Variable> vs;
        for (const auto& [m, c] : terms_)
            for (const auto& [v, e] : m.factors()) vs.insert(v);
        return vs;
    }

    void add_term(const Monomial& m, const BigInt& c) {
        if (c == 0) return;
        auto [it, inserted] = terms_.emplace(m, c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
        check_term_limit(terms_.size(), "polynomial arithmetic");
    }

    Polynomial& operator+=(const Polynomial& o) {
        for (const auto& [m, c] : o.terms_) add_term(m, c);
        return *this;
    }

    Polynomial& operator-=(const Polynomial& o) {
        for (const auto& [m, c] : o.terms_) add_term(m, -c);
        return *this;
    }

    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }

    Polynomial operator-() const {
        Polynomial r = *this;
        for (auto& [m, c] : r.terms_) c = -c;
        return r;
    }

    friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
        Polynomial r;
        for (const auto& [ma, ca] : a.terms_)
            for (const auto& [mb, cb] : b.terms_) r.add_term(ma * mb, ca * cb);
        return r;
    }

    Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }

    Polynomial& operator*=(const BigInt& c) {
        if (c == 0) {
            terms_.clear();
        } else {
            for (auto& [m, v] : terms_) v *= c;
        }
        return *this;
    }

    friend Polynomial operator*(Polynomial a, const BigInt& c) { return a *= c; }
    friend Polynomial operator*(const BigInt& c, Polynomial a) { return a *= c; }

    friend bool operator==(const Polynomial& a, const Polynomial& b) = default;

    // Canonical text form: terms in descending canonical order, explicit
    // `*` between factors, `^k` for k >= 2, unit coefficients elided.
    std::string str() const {
        if (terms_.empty()) return "0";
        std::string s;
        bool first = true;
        for (const auto& [m, c] : terms_) {
            BigInt a = c;
            if (first) {
                if (a < 0) {
                    s += "-";
                    a = -a;
                }
                first = false;
            } else {
                if (a < 0) {
                    s += " - ";
                    a = -a;
                } else {
                    s += " + ";
                }
            }
            if (m.is_one()) {
                s += a.str();
            } else if (a == 1) {
                s += m.str();
            } else {
                s += a.str() + "*" + m.str();
            }
        }
        return s;
    }

    friend std::ostream& operator<<(std::ostream& os, const Polynomial& p) {
        return os << p.str();
    }

private:
    TermMap terms_;
};

inline Polynomial pow(const Polynomial& a, std::uint64_t e) {
    Polynomial r(1);
    Polynomial base = a;
    while (e != 0) {
        if (e & 1) r *= base;
        e >>= 1;
        if (e != 0) base *= base;
    }
    return r;
}

// Simultaneous substitution. Variables absent from the map are fixed.
// A ring homomorphism: applied term by term, images of repeated variables
// are cached per call.
inline Polynomial substitute(const Polynomial& f,
                             const std::map<Variable, Polynomial>& images) {
    std::map<std::pair<Variable, std::int64_t>, Polynomial> power_cache;
    auto image_power = [&](const Variable& v, std::int64_t e) -> const Polynomial& {
        auto key = std::make_pair(v, e);
        auto it = power_cache.find(key);
        if (it != power_cache.end()) return it->second;
        auto img = images.find(v);
        Polynomial value = (img != images.end())
                               ? pow(img->second, static_cast<std::uint64_t>(e))
                               : Polynomial::term(Monomial::variable(v, e), 1);
        return power_cache.emplace(key, std::move(value)).first->second;
    };

    Polynomial result;
    for (const auto& [m, c] : f.terms()) {
        Polynomial t(c);
        for (const auto& [v, e] : m.factors()) t *= image_power(v, e);
        result += t;
    }
    return result;
}

// Exact division of every coefficient by m. Throws NotDivisible with the
// first offending monomial in canonical order.
inline Polynomial divide_exact(const Polynomial& f, const BigInt& m) {
    if (m == 0) throw InvalidInput("divide_exact: divisor must be nonzero");
    Polynomial r;
    for (const auto& [mono, c] : f.terms()) {
        if (c % m != 0) {
            throw NotDivisible("coefficient " + c.str() + " of monomial " + mono.str() +
                                   " is not divisible by " + m.str(),
                               mono.str());
        }
        r.add_term(mono, c / m);
    }
    return r;
}

// Coefficients reduced into the canonical representatives [0, p-1];
// vanishing terms are dropped.
inline Polynomial reduce_coefficients_mod(const Polynomial& f, const BigInt& p) {
    if (p <= 0) throw InvalidInput("reduce_coefficients_mod: modulus must be positive");
    Polynomial r;
    for (const auto& [m, c] : f.terms()) {
        BigInt v = c % p;
        if (v < 0) v += p;
        r.add_term(m, v);
    }
    return r;
}

} // namespace pjet
