#pragma once

#include <cstdint>
#include <map>
#include <string>

#include "pjet/errors.hpp"
#include "pjet/numeric.hpp"
#include "pjet/polynomial.hpp"

namespace pjet {

// Fixes the odd prime p for the p-derivation calculus. Construction
// validates primality deterministically; p = 2 is rejected because the
// whole calculus here assumes an odd prime.
class DeltaContext {
public:
    explicit DeltaContext(std::uint64_t p) : p_(p) {
        if (p == 2) {
            throw InvalidInput("p = 2 is not supported: the calculus assumes an odd prime");
        }
        if (!is_prime(p)) {
            throw InvalidInput("p = " + std::to_string(p) + " is not prime");
        }
    }

    std::uint64_t p() const noexcept { return p_; }

private:
    std::uint64_t p_;
};

// (c - c^p)/p, an integer by Fermat's little theorem. This is delta of a
// constant: the Frobenius lift fixes the integers pointwise.
inline BigInt fermat_quotient(const BigInt& c, const DeltaContext& ctx) {
    return (c - pow(c, ctx.p())) / BigInt(ctx.p());
}

// The Frobenius lift phi: v@k maps to v@k^p + p*v@(k+1) for every variable,
// integer coefficients are fixed. A ring homomorphism reducing to the
// p-power map modulo p.
inline Polynomial frobenius_substitution(const Polynomial& f, const DeltaContext& ctx) {
    std::map<Variable, Polynomial> images;
    for (const Variable& v : f.variables()) {
        Polynomial img = Polynomial::term(Monomial::variable(v, static_cast<std::int64_t>(ctx.p())), 1);
        img += Polynomial::term(Monomial::variable(v.successor()), BigInt(ctx.p()));
        images.emplace(v, std::move(img));
    }
    return substitute(f, images);
}

// The p-derivation, defined through its Frobenius lift:
// delta(f) = (phi(f) - f^p)/p. The divisibility holds identically; a
// failure means the calculus itself is broken, not the input.
inline Polynomial delta(const Polynomial& f, const DeltaContext& ctx) {
    Polynomial numerator = frobenius_substitution(f, ctx) - pow(f, ctx.p());
    try {
        return divide_exact(numerator, BigInt(ctx.p()));
    } catch (const NotDivisible& e) {
        throw InternalError(std::string("delta: phi(f) - f^p not divisible by p: ") + e.what());
    }
}

// r-fold composition of delta; jet orders grow by one per application.
inline Polynomial delta_iter(const Polynomial& f, const DeltaContext& ctx, unsigned r) {
    if (r == 0) throw InvalidInput("delta_iter: iteration count must be >= 1");
    Polynomial g = f;
    for (unsigned i = 0; i < r; ++i) g = delta(g, ctx);
    return g;
}

} // namespace pjet
