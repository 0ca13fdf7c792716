#pragma once

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "seq.hpp"
#include "series.hpp"
#include "value.hpp"

namespace seqcalc {

namespace detail {

/// Primes up to 10^5, built once; enough to factor anything below 10^10
/// by trial division plus at most one residual prime cofactor check.
inline const std::vector<std::uint32_t>& small_primes() {
    static const std::vector<std::uint32_t> primes = [] {
        constexpr std::uint32_t limit = 100000;
        std::vector<bool> composite(limit + 1, false);
        std::vector<std::uint32_t> out;
        for (std::uint32_t i = 2; i <= limit; ++i) {
            if (composite[i]) continue;
            out.push_back(i);
            for (std::uint64_t j = static_cast<std::uint64_t>(i) * i; j <= limit; j += i)
                composite[static_cast<std::size_t>(j)] = true;
        }
        return out;
    }();
    return primes;
}

}  // namespace detail

inline bool is_prime(unsigned long n) {
    if (n < 2) return false;
    for (std::uint32_t p : detail::small_primes()) {
        if (static_cast<unsigned long>(p) * p > n) return true;
        if (n % p == 0) return n == p;
    }
    // beyond the sieve's square reach: continue odd trial division
    for (unsigned long d = 100001; d * d <= n; d += 2)
        if (n % d == 0) return false;
    return true;
}

/// Prime factorization of n with strictly increasing primes; n >= 1.
struct Valuation {
    unsigned long n = 1;
    std::vector<std::pair<unsigned long, int>> factors;
};

inline Valuation factorize(unsigned long n) {
    if (n < 1) throw std::invalid_argument("factorize: n must be >= 1");
    Valuation v;
    v.n = n;
    unsigned long rest = n;
    for (std::uint32_t p : detail::small_primes()) {
        if (static_cast<unsigned long>(p) * p > rest) break;
        if (rest % p != 0) continue;
        int e = 0;
        while (rest % p == 0) {
            rest /= p;
            ++e;
        }
        v.factors.emplace_back(p, e);
    }
    if (rest >= 100000ul * 100000ul) {
        for (unsigned long d = 100001; d * d <= rest; d += 2) {
            if (rest % d != 0) continue;
            int e = 0;
            while (rest % d == 0) {
                rest /= d;
                ++e;
            }
            v.factors.emplace_back(d, e);
        }
    }
    if (rest > 1) v.factors.emplace_back(rest, 1);
    return v;
}

/// Largest e with p^e | n; p must pass the deterministic primality check.
inline int padic_valuation(unsigned long n, unsigned long p) {
    if (n < 1) throw std::invalid_argument("padic_valuation: n must be >= 1");
    if (!is_prime(p)) throw NotPrime("padic_valuation: " + std::to_string(p) + " is not prime");
    int e = 0;
    while (n % p == 0) {
        n /= p;
        ++e;
    }
    return e;
}

/// Dirichlet convolution c_n = sum_{d|n} a_d b_{n/d}, truncated to the
/// shorter operand.
inline Seq dirichlet_mul(const Seq& a, const Seq& b) {
    detail::require_same_ring_seq(a, b, "dirichlet_mul");
    const int n = std::min(a.length(), b.length());
    std::vector<Value> c(static_cast<std::size_t>(n), Value::zero(a.ring()));
    for (int d = 1; d <= n; ++d) {
        if (a.at(d).is_zero()) continue;
        for (int m = 1; d * m <= n; ++m) {
            if (b.at(m).is_zero()) continue;
            auto& slot = c[static_cast<std::size_t>(d * m - 1)];
            slot = add(slot, mul(a.at(d), b.at(m)));
        }
    }
    return Seq(a.ring(), std::move(c));
}

/// The multiplicative transform b_n = prod_i a_{nu_i(n) + 1} over the prime
/// valuations of n. Requires a_1 = 1; every prime with valuation 0
/// contributes the factor a_1 = 1, so the product is finite and exact.
/// Needs a up to index floor(log2 n_terms) + 1.
inline Seq f_transform(const Seq& a, int n_terms) {
    if (n_terms < 1) throw std::invalid_argument("f_transform: n_terms must be >= 1");
    if (!a.at(1).is_one()) throw BadConstantTerm("f_transform: a_1 must be 1");
    std::vector<Value> b;
    b.reserve(static_cast<std::size_t>(n_terms));
    b.push_back(Value::one(a.ring()));
    for (int n = 2; n <= n_terms; ++n) {
        Value prod = Value::one(a.ring());
        for (const auto& [p, e] : factorize(static_cast<unsigned long>(n)).factors) {
            if (e + 1 > a.length())
                throw InsufficientInput("f_transform: index " + std::to_string(n) + " needs input term " +
                                        std::to_string(e + 1) + ", have " + std::to_string(a.length()));
            prod = mul(prod, a.at(e + 1));
        }
        b.push_back(std::move(prod));
    }
    return Seq(a.ring(), std::move(b));
}

struct FMismatch {
    int index;
    Value lhs;  // F(a * b)_index
    Value rhs;  // (F(a) (.) F(b))_index
};

struct FHomomorphismReport {
    int terms = 0;
    std::vector<FMismatch> mismatches;
    bool ok() const { return mismatches.empty(); }
};

/// Compares F(a * b) with F(a) (.) F(b) up to n_terms and reports every
/// differing index (expected: none).
inline FHomomorphismReport verify_f_homomorphism(const Seq& a, const Seq& b, int n_terms) {
    if (!a.at(1).is_one() || !b.at(1).is_one())
        throw BadConstantTerm("verify_f_homomorphism: both inputs must start with 1");
    FHomomorphismReport report;
    report.terms = n_terms;
    Seq lhs = f_transform(cauchy_mul(a, b), n_terms);
    Seq rhs = dirichlet_mul(f_transform(a, n_terms), f_transform(b, n_terms));
    for (int n = 1; n <= n_terms; ++n)
        if (lhs.at(n) != rhs.at(n)) report.mismatches.push_back({n, lhs.at(n), rhs.at(n)});
    return report;
}

struct FReadBack {
    int t;
    Value from_image;  // F(a)_{2^t}
    Value original;    // a_{t+1}
};

struct FInjectivityReport {
    int terms = 0;
    bool kernel_member = false;  // F(a) equals the Dirichlet identity
    std::vector<FReadBack> read_backs;
    bool read_back_consistent = true;
    /// Kernel membership forces the readable prefix of a to vanish.
    bool ok() const { return read_back_consistent; }
};

/// Reads a back out of F(a) along the powers of two: a_{t+1} = F(a)_{2^t}.
/// If F(a) is the identity up to n_terms this certifies a_2 = ... = a_T = 0
/// for T = floor(log2 n_terms) + 1.
inline FInjectivityReport verify_f_injectivity(const Seq& a, int n_terms) {
    FInjectivityReport report;
    report.terms = n_terms;
    Seq image = f_transform(a, n_terms);
    report.kernel_member = image == Seq::cauchy_identity(a.ring(), n_terms);
    for (int t = 1, idx = 2; idx <= n_terms; ++t, idx *= 2) {
        FReadBack rb{t, image.at(idx), a.at(t + 1)};
        if (rb.from_image != rb.original) report.read_back_consistent = false;
        report.read_backs.push_back(std::move(rb));
    }
    return report;
}

}  // namespace seqcalc
