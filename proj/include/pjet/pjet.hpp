#pragma once

// Umbrella header: exact polynomial arithmetic over the integers,
// p-derivations and Frobenius lifts, jet-algebra presentations, formal
// Chern/Segre class calculus, and explicit torsion-coset bounds.

#include "pjet/bound.hpp"
#include "pjet/chow.hpp"
#include "pjet/delta.hpp"
#include "pjet/errors.hpp"
#include "pjet/jetspace.hpp"
#include "pjet/monomial.hpp"
#include "pjet/numeric.hpp"
#include "pjet/parse.hpp"
#include "pjet/polynomial.hpp"
#include "pjet/variable.hpp"
