#pragma once

// Shared helpers for the test suites: deterministic random generators for
// polynomials and series, and an independent structural-recursion
// implementation of the p-derivation used as an oracle against the
// production (phi(f) - f^p)/p code path.

#include <random>
#include <string>
#include <vector>

#include "pjet/chow.hpp"
#include "pjet/delta.hpp"
#include "pjet/polynomial.hpp"

namespace testsupport {

inline pjet::Polynomial random_polynomial(std::mt19937& rng, int max_vars = 3, int max_terms = 4,
                                          int max_degree = 4, int coeff_bound = 9,
                                          unsigned max_order = 0) {
    static const char* names[] = {"x", "y", "z"};
    std::uniform_int_distribution<int> nvars_dist(1, max_vars);
    std::uniform_int_distribution<int> nterms_dist(1, max_terms);
    std::uniform_int_distribution<int> coeff_dist(-coeff_bound, coeff_bound);
    std::uniform_int_distribution<int> degree_dist(0, max_degree);

    const int vars = nvars_dist(rng);
    std::uniform_int_distribution<int> var_dist(0, vars - 1);
    std::uniform_int_distribution<unsigned> order_dist(0, max_order);

    pjet::Polynomial p;
    const int terms = nterms_dist(rng);
    for (int t = 0; t < terms; ++t) {
        pjet::Monomial m;
        const int d = degree_dist(rng);
        for (int i = 0; i < d; ++i) {
            m = m * pjet::Monomial::variable(pjet::Variable(names[var_dist(rng)], order_dist(rng)));
        }
        int c = coeff_dist(rng);
        if (c == 0) c = 1;
        p += pjet::Polynomial::term(m, c);
    }
    return p;
}

// m with the exponent of its first factor lowered by one.
inline pjet::Monomial drop_one_factor(const pjet::Monomial& m) {
    pjet::Monomial r;
    bool first = true;
    for (const auto& [v, e] : m.factors()) {
        if (first) {
            if (e > 1) r = r * pjet::Monomial::variable(v, e - 1);
            first = false;
        } else {
            r = r * pjet::Monomial::variable(v, e);
        }
    }
    return r;
}

// delta of a monomial by repeated application of the product identity
// delta(xy) = x^p delta(y) + y^p delta(x) + p delta(x) delta(y), with
// delta(v@k) = v@(k+1) as the base case.
inline pjet::Polynomial delta_oracle_monomial(const pjet::Monomial& m,
                                              const pjet::DeltaContext& ctx) {
    using namespace pjet;
    if (m.is_one()) return Polynomial();
    const auto& [v, e] = m.factors().front();
    Polynomial dv{v.successor()};
    if (m.degree() == 1) return dv;
    Monomial rest = drop_one_factor(m);
    Polynomial drest = delta_oracle_monomial(rest, ctx);
    Polynomial vp = pow(Polynomial(v), ctx.p());
    Polynomial restp = pow(Polynomial::term(rest, 1), ctx.p());
    return vp * drest + restp * dv + BigInt(ctx.p()) * dv * drest;
}

// delta by structural recursion on terms: the product identity handles a
// single term, the sum identity glues terms together. Never touches the
// Frobenius-substitution code path.
inline pjet::Polynomial delta_oracle(const pjet::Polynomial& f, const pjet::DeltaContext& ctx) {
    using namespace pjet;
    if (f.is_zero()) return Polynomial();
    const auto& [mono, coeff] = *f.terms().begin();
    Polynomial head = Polynomial::term(mono, coeff);

    BigInt dc = fermat_quotient(coeff, ctx);
    Polynomial dm = delta_oracle_monomial(mono, ctx);
    BigInt cp = pow(coeff, ctx.p());
    Polynomial mp = pow(Polynomial::term(mono, 1), ctx.p());
    Polynomial dhead = cp * dm + dc * mp + BigInt(ctx.p()) * dc * dm;

    Polynomial rest = f - head;
    if (rest.is_zero()) return dhead;
    Polynomial drest = delta_oracle(rest, ctx);
    Polynomial correction = divide_exact(
        pow(head, ctx.p()) + pow(rest, ctx.p()) - pow(f, ctx.p()), BigInt(ctx.p()));
    return dhead + drest + correction;
}

// All exponent vectors over `arity` symbols with entry sum `codim`.
inline void enumerate_monomials(unsigned arity, unsigned codim,
                                std::vector<std::uint32_t>& prefix,
                                std::vector<std::vector<std::uint32_t>>& out) {
    if (prefix.size() + 1 == arity) {
        prefix.push_back(codim);
        out.push_back(prefix);
        prefix.pop_back();
        return;
    }
    for (unsigned e = 0; e <= codim; ++e) {
        prefix.push_back(e);
        enumerate_monomials(arity, codim - e, prefix, out);
        prefix.pop_back();
    }
}

inline pjet::CycleClass random_cycle_class(std::mt19937& rng, const pjet::AmbientSpec& ambient,
                                           unsigned codim, int coeff_bound = 9) {
    std::vector<std::vector<std::uint32_t>> monomials;
    std::vector<std::uint32_t> prefix;
    enumerate_monomials(static_cast<unsigned>(ambient.symbols.size()), codim, prefix, monomials);
    std::uniform_int_distribution<int> coeff_dist(-coeff_bound, coeff_bound);
    pjet::CycleClass cls = pjet::CycleClass::zero(ambient);
    for (const auto& m : monomials) {
        int c = coeff_dist(rng);
        if (c != 0) cls += pjet::CycleClass::term(ambient, m, c);
    }
    return cls;
}

// A random series with unit constant term, suitable for inversion tests.
inline pjet::ChernSeries random_unit_series(std::mt19937& rng, const pjet::AmbientSpec& ambient,
                                            unsigned truncation) {
    pjet::ChernSeries s = pjet::ChernSeries::one(ambient, truncation);
    for (unsigned i = 1; i <= truncation; ++i) {
        s.set_component(i, random_cycle_class(rng, ambient, i));
    }
    return s;
}

} // namespace testsupport
