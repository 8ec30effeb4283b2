#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "pjet/chow.hpp"
#include "pjet/errors.hpp"
#include "pjet/numeric.hpp"

namespace pjet {

// The degree inputs of the torsion-coset bound: entry i is the degree of
// the signed codimension-i Segre class of the Frobenius pullback of the
// cotangent bundle, intersected with O(3*theta)^(d-i). For a genus-g curve
// in its Jacobian these are (3g, p(2g-2)).
struct SegreDegreeVector {
    std::vector<BigInt> entries; // N_0 .. N_d

    SegreDegreeVector() = default;
    explicit SegreDegreeVector(std::vector<BigInt> values) : entries(std::move(values)) {}
};

// The assembled bound together with its factor decomposition:
//   bound = coset_constant * translate_factor * interior
//         = p^n * (p^{2n} * 3^n * n!) * interior.
// `assumptions` lists the hypotheses the arithmetic cannot verify;
// `warnings` lists checkable hypotheses that failed without invalidating
// the arithmetic.
struct BoundReport {
    std::uint64_t p = 0;
    unsigned n = 0;
    unsigned d = 0;
    BigInt interior;
    BigInt coset_constant;   // p^n
    BigInt translate_factor; // p^{2n} * 3^n * n!
    BigInt bound;
    std::vector<std::string> warnings;
    std::vector<std::string> assumptions;
};

// The interior degree: sum_{i=0}^{d} C(2d, d+i) * N_i, exact.
inline BigInt interior_degree(unsigned d, const SegreDegreeVector& segre) {
    if (segre.entries.size() != static_cast<std::size_t>(d) + 1) {
        throw InvalidInput("interior_degree: expected " + std::to_string(d + 1) +
                           " entries, got " + std::to_string(segre.entries.size()));
    }
    BigInt sum = 0;
    for (unsigned i = 0; i <= d; ++i) {
        sum += binomial(2 * d, d + i) * segre.entries[i];
    }
    return sum;
}

namespace detail {

inline void require_odd_prime(std::uint64_t p) {
    if (p == 2) throw InvalidInput("p = 2 is not supported: the bound assumes an odd prime");
    if (!is_prime(p)) throw InvalidInput("p = " + std::to_string(p) + " is not prime");
}

} // namespace detail

// The general torsion-coset bound for a smooth d-dimensional subvariety of
// an n-dimensional abelian variety: p^{3n} * 3^n * n! times the interior
// degree, reported with the factor split p^n (coset count) times
// p^{2n} * 3^n * n! (translate degree).
inline BoundReport theorem_b_bound(std::uint64_t p, unsigned n, unsigned d,
                                   const SegreDegreeVector& segre) {
    detail::require_odd_prime(p);
    if (d < 1 || d > n) {
        throw InvalidInput("theorem_b_bound: need 1 <= d <= n, got d = " + std::to_string(d) +
                           ", n = " + std::to_string(n));
    }
    BoundReport report;
    report.p = p;
    report.n = n;
    report.d = d;
    report.interior = interior_degree(d, segre);
    report.coset_constant = pow(BigInt(p), n);
    report.translate_factor = pow(BigInt(p), 2 * n) * pow(BigInt(3), n) * factorial(n);
    report.bound = report.coset_constant * report.translate_factor * report.interior;
    report.assumptions = {
        "the special fiber of X has ample cotangent bundle",
        "X contains a smooth curve of genus g >= 2 with p > 2*d^2*g",
        "p is a prime of good reduction",
        "theta is a theta divisor of the ambient abelian variety",
    };
    return report;
}

// The curve specialization: a smooth genus-g curve inside its principally
// polarized Jacobian (n = g, d = 1), with degree vector (3g, p(2g-2)) and
// interior degree 6g + p(2g-2). The hypothesis p > 2g is the d = 1 case of
// p > 2*d^2*g and is enforced.
inline BoundReport buium_curve_bound(std::uint64_t p, unsigned g) {
    detail::require_odd_prime(p);
    if (g < 2) throw InvalidInput("buium_curve_bound: genus must be >= 2");
    if (p <= 2 * static_cast<std::uint64_t>(g)) {
        throw HypothesisViolation("curve bound requires p > 2*g: p = " + std::to_string(p) +
                                  ", g = " + std::to_string(g));
    }
    SegreDegreeVector segre;
    segre.entries = {BigInt(3) * g, BigInt(p) * (BigInt(2) * g - 2)};
    BoundReport report = theorem_b_bound(p, g, 1, segre);

    BigInt closed_form = BigInt(6) * g + BigInt(p) * (BigInt(2) * g - 2);
    if (report.interior != closed_form) {
        throw InternalError("buium_curve_bound: interior degree " + report.interior.str() +
                            " does not match 6g + p(2g-2) = " + closed_form.str());
    }
    report.assumptions = {
        "p is a prime of good reduction for the curve and its Jacobian",
        "N0 uses deg_theta(X) = g for a curve in its principally polarized Jacobian",
    };
    return report;
}

// The complete-intersection pipeline: X = H_1 cap ... cap H_c inside an
// abelian variety of dimension n, d = n - c. The degree vector comes from
// the conormal-sequence Segre series evaluated against the user's
// intersection table:
//   N_i = (-1)^i * deg(component_i(prod_j (1 - p h_j)) * (3 theta)^{d-i} * [X])
// with [X] = prod_j h_j. The sign normalization makes every N_i
// nonnegative for nonnegative tables.
inline BoundReport complete_intersection_bound(std::uint64_t p, const AmbientSpec& ambient,
                                               const std::vector<DivisorSymbol>& hyps,
                                               const IntersectionTable& table) {
    detail::require_odd_prime(p);
    if (!(table.ambient() == ambient)) {
        throw AmbientMismatch("complete_intersection_bound: table ambient differs");
    }
    const unsigned n = ambient.n;
    const unsigned c = static_cast<unsigned>(hyps.size());
    if (c > n || n - c < 1) {
        throw InvalidInput("complete_intersection_bound: need d = n - c >= 1, got n = " +
                           std::to_string(n) + ", c = " + std::to_string(c));
    }
    const unsigned d = n - c;
    ambient.require_index("theta");

    const ChernSeries segre_series = ci_cotangent_segre(ambient, hyps, p);
    const CycleClass theta = CycleClass::symbol(ambient, "theta");

    SegreDegreeVector segre;
    segre.entries.reserve(d + 1);
    BigInt sign = 1;
    for (unsigned i = 0; i <= d; ++i) {
        CycleClass cls = segre_series.component(i);
        for (unsigned k = 0; k < d - i; ++k) cls *= theta * BigInt(3);
        segre.entries.push_back(sign * evaluate(restrict_to_ci(cls, hyps), table));
        sign = -sign;
    }

    // consistency of the provenance pipeline: N_0 = 3^d * deg(theta^d * [X])
    CycleClass theta_d = CycleClass::one(ambient);
    for (unsigned k = 0; k < d; ++k) theta_d *= theta;
    BigInt n0_check = pow(BigInt(3), d) * evaluate(restrict_to_ci(theta_d, hyps), table);
    if (segre.entries[0] != n0_check) {
        throw InternalError("complete_intersection_bound: N_0 = " + segre.entries[0].str() +
                            " does not match 3^d * deg(theta^d * [X]) = " + n0_check.str());
    }

    BoundReport report = theorem_b_bound(p, n, d, segre);
    report.assumptions = {
        "the hypersurfaces are general and sufficiently ample",
        "p is a sufficiently large prime of good reduction",
        "X = H1 * ... * Hc is a smooth complete intersection of dimension n - c",
        "theta is a theta divisor of the ambient abelian variety",
    };
    if (2 * c <= n) {
        report.warnings.push_back(
            "c <= n/2: ample cotangent bundle is not guaranteed at this codimension");
    }
    return report;
}

} // namespace pjet
