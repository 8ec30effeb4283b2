#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "pjet/delta.hpp"
#include "pjet/errors.hpp"
#include "pjet/polynomial.hpp"

namespace pjet {

// A finite presentation of the order-r jet algebra of an affine variety
// cut out by the input generators: jet variables v@0..v@r for each base
// variable, and generator slices G_0..G_r with G_i = delta^i applied to
// the inputs. Presentations are syntactic objects; no ideal-membership or
// generator-independence question is decided here.
struct JetPresentation {
    std::uint64_t p = 0;
    unsigned r = 0;
    std::vector<Variable> base_vars;             // jet order 0, sorted
    std::vector<std::vector<Polynomial>> slices; // slices[i][j] = delta^i of generator j

    // All jet variables of the presentation: m(r+1) of them.
    std::vector<Variable> variables() const {
        std::vector<Variable> vs;
        vs.reserve(base_vars.size() * (r + 1));
        for (const Variable& v : base_vars)
            for (unsigned k = 0; k <= r; ++k) vs.emplace_back(v.base(), k);
        std::sort(vs.begin(), vs.end());
        return vs;
    }

    // s(r+1) generators in total.
    std::size_t generator_count() const {
        std::size_t n = 0;
        for (const auto& slice : slices) n += slice.size();
        return n;
    }
};

// Same data with every coefficient reduced into [0, p-1]; the image of the
// presentation over the prime field.
struct SpecialFiberPresentation {
    std::uint64_t p = 0;
    unsigned r = 0;
    std::vector<Variable> base_vars;
    std::vector<std::vector<Polynomial>> slices;
};

// Builds the presentation: G_0 is the input list (in input order), and
// each following slice applies delta once more. Generators must be in the
// base variables only (jet order 0).
inline JetPresentation jet_presentation(const std::vector<Polynomial>& generators,
                                        const DeltaContext& ctx, unsigned r,
                                        std::optional<std::vector<Variable>> base_vars = {}) {
    std::set<Variable> used;
    for (std::size_t j = 0; j < generators.size(); ++j) {
        if (generators[j].max_jet_order() != 0) {
            throw InvalidInput("generator " + std::to_string(j + 1) +
                               " mentions a jet variable of positive order");
        }
        auto vs = generators[j].variables();
        used.insert(vs.begin(), vs.end());
    }

    JetPresentation pres;
    pres.p = ctx.p();
    pres.r = r;
    if (base_vars) {
        pres.base_vars = std::move(*base_vars);
        std::sort(pres.base_vars.begin(), pres.base_vars.end());
        for (const Variable& v : pres.base_vars) {
            if (v.order() != 0) {
                throw InvalidInput("base variable " + v.str() + " has positive jet order");
            }
        }
        for (const Variable& v : used) {
            if (!std::binary_search(pres.base_vars.begin(), pres.base_vars.end(), v)) {
                throw InvalidInput("generator variable " + v.str() +
                                   " is not among the declared base variables");
            }
        }
    } else {
        pres.base_vars.assign(used.begin(), used.end());
    }

    pres.slices.resize(r + 1);
    pres.slices[0] = generators;
    for (unsigned i = 1; i <= r; ++i) {
        pres.slices[i].reserve(generators.size());
        for (const Polynomial& g : pres.slices[i - 1]) {
            pres.slices[i].push_back(delta(g, ctx));
        }
    }
    return pres;
}

// Checks that delta commutes with the slice maps of the tower: applying
// delta to slice i reproduces slice i+1 entry by entry. True by
// construction for jet_presentation output; guards refactoring and
// hand-built presentations.
inline bool prolongation_commutation_check(const JetPresentation& pres, const DeltaContext& ctx) {
    for (std::size_t i = 0; i + 1 < pres.slices.size(); ++i) {
        if (pres.slices[i].size() != pres.slices[i + 1].size()) return false;
        for (std::size_t j = 0; j < pres.slices[i].size(); ++j) {
            if (delta(pres.slices[i][j], ctx) != pres.slices[i + 1][j]) return false;
        }
    }
    return true;
}

inline SpecialFiberPresentation special_fiber(const JetPresentation& pres) {
    SpecialFiberPresentation fiber;
    fiber.p = pres.p;
    fiber.r = pres.r;
    fiber.base_vars = pres.base_vars;
    fiber.slices.reserve(pres.slices.size());
    for (const auto& slice : pres.slices) {
        std::vector<Polynomial> reduced;
        reduced.reserve(slice.size());
        for (const Polynomial& g : slice) {
            reduced.push_back(reduce_coefficients_mod(g, BigInt(pres.p)));
        }
        fiber.slices.push_back(std::move(reduced));
    }
    return fiber;
}

} // namespace pjet
