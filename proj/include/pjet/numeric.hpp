#pragma once

#include <atomic>
#include <cstdint>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

#include "pjet/errors.hpp"

namespace pjet {

// Exact signed integer of arbitrary size. Every coefficient, degree bound
// and intersection number in the library is one of these; no floating
// point appears anywhere.
using BigInt = boost::multiprecision::cpp_int;

inline std::string to_string(const BigInt& v) { return v.str(); }

inline BigInt pow(BigInt base, std::uint64_t e) {
    BigInt r = 1;
    while (e != 0) {
        if (e & 1) r *= base;
        e >>= 1;
        if (e != 0) base *= base;
    }
    return r;
}

inline BigInt factorial(unsigned n) {
    BigInt r = 1;
    for (unsigned i = 2; i <= n; ++i) r *= i;
    return r;
}

inline BigInt binomial(unsigned n, unsigned k) {
    if (k > n) return 0;
    if (k > n - k) k = n - k;
    BigInt r = 1;
    for (unsigned i = 1; i <= k; ++i) {
        r *= n - k + i;
        r /= i; // always exact: r is binomial(n-k+i, i) after this step
    }
    return r;
}

namespace detail {

inline std::uint64_t mulmod_u64(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % m);
}

inline std::uint64_t powmod_u64(std::uint64_t b, std::uint64_t e, std::uint64_t m) {
    std::uint64_t r = 1 % m;
    b %= m;
    while (e != 0) {
        if (e & 1) r = mulmod_u64(r, b, m);
        b = mulmod_u64(b, b, m);
        e >>= 1;
    }
    return r;
}

} // namespace detail

// Deterministic Miller-Rabin; the witness set below decides primality for
// every 64-bit integer.
inline bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t q : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (n == q) return true;
        if (n % q == 0) return false;
    }
    std::uint64_t d = n - 1;
    unsigned s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    for (std::uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        std::uint64_t x = detail::powmod_u64(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (unsigned i = 1; i < s; ++i) {
            x = detail::mulmod_u64(x, x, n);
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite) return false;
    }
    return true;
}

// Global cap on the number of terms a polynomial operation may produce.
// Read-mostly; operations stay pure, this only bounds their appetite.
inline std::atomic<std::size_t>& term_limit_storage() {
    static std::atomic<std::size_t> limit{1'000'000};
    return limit;
}

inline std::size_t term_limit() { return term_limit_storage().load(std::memory_order_relaxed); }

inline void set_term_limit(std::size_t n) {
    term_limit_storage().store(n, std::memory_order_relaxed);
}

inline void check_term_limit(std::size_t count, const char* where) {
    if (count > term_limit()) {
        throw ResourceLimit(std::string(where) + ": term count " + std::to_string(count) +
                            " exceeds the configured limit of " + std::to_string(term_limit()));
    }
}

} // namespace pjet
