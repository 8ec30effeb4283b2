#pragma once

#include <compare>
#include <cstdint>
#include <string>

#include "pjet/errors.hpp"

namespace pjet {

// A jet variable: a base name plus a non-negative jet order k, written
// `x@k` in the text grammar. Order 0 is the base variable and prints as a
// bare name; x@1, x@2, ... play the role of x', x'', ...
class Variable {
public:
    Variable(std::string base, std::uint32_t order = 0)
        : base_(std::move(base)), order_(order) {
        if (!valid_name(base_)) {
            throw InvalidInput("invalid variable name '" + base_ +
                               "': expected [a-zA-Z][a-zA-Z0-9]*");
        }
    }

    static bool valid_name(const std::string& s) {
        if (s.empty()) return false;
        auto alpha = [](char c) { return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z'); };
        auto alnum = [&](char c) { return alpha(c) || (c >= '0' && c <= '9'); };
        if (!alpha(s[0])) return false;
        for (char c : s)
            if (!alnum(c)) return false;
        return true;
    }

    const std::string& base() const noexcept { return base_; }
    std::uint32_t order() const noexcept { return order_; }

    // Same base name, jet order shifted up by one; the image of this
    // variable under a p-derivation.
    Variable successor() const { return Variable(base_, order_ + 1); }

    // Canonical variable ordering: base name lexicographic, then jet order
    // ascending. Monomial comparison treats later variables as more
    // significant.
    friend std::strong_ordering operator<=>(const Variable& a, const Variable& b) {
        if (auto c = a.base_ <=> b.base_; c != 0) return c;
        return a.order_ <=> b.order_;
    }
    friend bool operator==(const Variable& a, const Variable& b) = default;

    std::string str() const {
        if (order_ == 0) return base_;
        return base_ + "@" + std::to_string(order_);
    }

private:
    std::string base_;
    std::uint32_t order_;
};

} // namespace pjet
