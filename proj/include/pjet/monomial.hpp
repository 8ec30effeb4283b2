#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "pjet/errors.hpp"
#include "pjet/variable.hpp"

namespace pjet {

// A power product of jet variables. Exponents are strictly positive; the
// empty product is the constant monomial 1. Factors are kept sorted by
// variable so equal monomials have equal representations.
class Monomial {
public:
    using Factor = std::pair<Variable, std::int64_t>;

    Monomial() = default;

    static Monomial one() { return Monomial(); }

    static Monomial variable(const Variable& v, std::int64_t exponent = 1) {
        Monomial m;
        if (exponent < 0) throw InvalidInput("negative exponent on " + v.str());
        if (exponent > 0) m.factors_.emplace_back(v, exponent);
        return m;
    }

    const std::vector<Factor>& factors() const noexcept { return factors_; }
    bool is_one() const noexcept { return factors_.empty(); }

    std::int64_t degree() const noexcept {
        std::int64_t d = 0;
        for (const auto& [v, e] : factors_) d += e;
        return d;
    }

    std::uint32_t max_jet_order() const noexcept {
        std::uint32_t k = 0;
        for (const auto& [v, e] : factors_)
            if (v.order() > k) k = v.order();
        return k;
    }

    std::int64_t exponent(const Variable& v) const noexcept {
        for (const auto& [w, e] : factors_)
            if (w == v) return e;
        return 0;
    }

    friend Monomial operator*(const Monomial& a, const Monomial& b) {
        Monomial r;
        r.factors_.reserve(a.factors_.size() + b.factors_.size());
        auto ia = a.factors_.begin(), ea = a.factors_.end();
        auto ib = b.factors_.begin(), eb = b.factors_.end();
        while (ia != ea && ib != eb) {
            if (ia->first < ib->first) {
                r.factors_.push_back(*ia++);
            } else if (ib->first < ia->first) {
                r.factors_.push_back(*ib++);
            } else {
                r.factors_.emplace_back(ia->first, ia->second + ib->second);
                ++ia;
                ++ib;
            }
        }
        r.factors_.insert(r.factors_.end(), ia, ea);
        r.factors_.insert(r.factors_.end(), ib, eb);
        return r;
    }

    // Canonical monomial order. Lexicographic: the largest variable in
    // which two monomials differ decides, larger exponent first. Canonical
    // polynomial output lists terms in descending order, so x@1 > x^2 > x
    // and y > x^2.
    friend std::strong_ordering operator<=>(const Monomial& a, const Monomial& b) {
        auto ra = a.factors_.rbegin(), ea = a.factors_.rend();
        auto rb = b.factors_.rbegin(), eb = b.factors_.rend();
        while (ra != ea && rb != eb) {
            if (ra->first > rb->first) return std::strong_ordering::greater;
            if (rb->first > ra->first) return std::strong_ordering::less;
            if (auto c = ra->second <=> rb->second; c != 0) return c;
            ++ra;
            ++rb;
        }
        if (ra != ea) return std::strong_ordering::greater;
        if (rb != eb) return std::strong_ordering::less;
        return std::strong_ordering::equal;
    }
    friend bool operator==(const Monomial& a, const Monomial& b) = default;

    // Factors in ascending variable order, `*`-separated, `^k` for k >= 2.
    // The constant monomial prints as "1".
    std::string str() const {
        if (factors_.empty()) return "1";
        std::string s;
        for (const auto& [v, e] : factors_) {
            if (!s.empty()) s += "*";
            s += v.str();
            if (e >= 2) s += "^" + std::to_string(e);
        }
        return s;
    }

private:
    std::vector<Factor> factors_;
};

} // namespace pjet
