#pragma once

#include <functional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "bell.hpp"
#include "errors.hpp"
#include "seq.hpp"
#include "series.hpp"
#include "value.hpp"

namespace seqcalc {

namespace detail {

inline void require_exponent_ring(const Seq& a, const char* op) {
    // (1+t)^e with fractional scalar e leaves the coefficient ring; exponent
    // sequences are restricted to int and polyx.
    if (a.ring() == RingTag::Rat)
        throw UnsupportedRing(std::string(op) + ": exponent sequences over rat are not supported");
}

inline Seq phi_signed(const Seq& a, int n_terms, int sign) {
    if (n_terms < 1) throw std::invalid_argument("phi: n_terms must be >= 1");
    if (n_terms > a.length() + 1)
        throw InsufficientInput("phi: " + std::to_string(n_terms) + " terms need " +
                                std::to_string(n_terms - 1) + " exponents, have " +
                                std::to_string(a.length()));
    Seq acc = Seq::cauchy_identity(a.ring(), n_terms);
    for (int k = 1; k < n_terms; ++k) {
        if (a.at(k).is_zero()) continue;  // factor (1 +- t^k)^0
        acc = cauchy_mul(acc, binomial_factor(k, a.at(k), sign, n_terms).coeffs());
    }
    return acc;
}

/// Sum over all (i_1, ..., i_n) with i_1 + 2 i_2 + ... + n i_n = n of
/// sign^{i_1+...+i_n} prod_j binomial(a_j, i_j).
inline Value phi_multinomial(const Seq& a, int n, bool alternating) {
    if (n < 1 || n > a.length())
        throw std::invalid_argument("phi coefficient: n out of range");
    Value total = Value::zero(a.ring());
    std::function<void(int, int, const Value&, bool)> walk =
        [&](int part, int remaining, const Value& acc, bool odd) {
            if (remaining == 0) {
                total = add(total, (alternating && odd) ? neg(acc) : acc);
                return;
            }
            if (part == 0) return;
            for (int count = 0; count * part <= remaining; ++count) {
                Value next = count == 0 ? acc : mul(acc, binomial(a.at(part), count));
                walk(part - 1, remaining - count * part, next, odd != (count % 2 == 1));
            }
        };
    walk(n, n, Value::one(a.ring()), false);
    return total;
}

inline Seq phi_inverse_impl(const Seq& u, bool minus_variant) {
    if (!u.at(1).is_one()) throw BadConstantTerm("phi inverse: u_1 must be 1");
    if (u.length() < 2)
        throw InsufficientInput("phi inverse: need at least two coefficients");
    const bool promote = u.ring() == RingTag::Int;
    const RingTag work = promote ? RingTag::Rat : u.ring();
    if (work == RingTag::Int)
        throw UnsupportedRing("phi inverse: unreachable ring state");

    const int n_out = u.length() - 1;
    std::vector<Value> shifted;  // x_m = u_{m+1}
    shifted.reserve(static_cast<std::size_t>(n_out));
    for (int m = 1; m <= n_out; ++m) shifted.push_back(convert(u.at(m + 1), work));
    BellTable table(Seq(work, std::move(shifted)), n_out);

    std::vector<Value> a;
    a.reserve(static_cast<std::size_t>(n_out));
    for (int n = 1; n <= n_out; ++n) {
        Value s = Value::zero(work);
        for (int h = 1; h <= n; ++h) {
            if (table.ordinary(n, h).is_zero()) continue;
            s = add(s, mul_by_rat(table.ordinary(n, h), make_rational(h % 2 == 1 ? 1 : -1, h)));
        }
        if (minus_variant) s = neg(s);
        for (int k = 1; k < n; ++k) {
            if (n % k != 0 || a[static_cast<std::size_t>(k - 1)].is_zero()) continue;
            mpq_class c = minus_variant
                              ? make_rational(-k, n)
                              : make_rational((n / k) % 2 == 0 ? k : -k, n);
            s = add(s, mul_by_rat(a[static_cast<std::size_t>(k - 1)], c));
        }
        a.push_back(std::move(s));
    }

    Seq result(work, std::move(a));
    if (!promote) return result;
    std::vector<Value> ints;
    ints.reserve(static_cast<std::size_t>(result.length()));
    for (const auto& v : result.terms()) {
        if (v.as_rat().get_den() != 1)
            throw IntegralityViolation("phi inverse: non-integral exponent " + v.as_rat().get_str() +
                                       " recovered from an int sequence");
        ints.push_back(Value(mpz_class(v.as_rat().get_num())));
    }
    return Seq(RingTag::Int, std::move(ints));
}

}  // namespace detail

/// u = phi(a): the coefficient sequence of prod_{k>=1} (1 + t^k)^{a_k},
/// truncated to n_terms; u_1 = 1. Turns componentwise sums of exponent
/// sequences into Cauchy products.
inline Seq phi_plus(const Seq& a, int n_terms) {
    detail::require_exponent_ring(a, "phi_plus");
    return detail::phi_signed(a, n_terms, +1);
}
inline Seq phi_plus(const Seq& a) { return phi_plus(a, a.length() + 1); }

/// Coefficient sequence of prod_{k>=1} (1 - t^k)^{a_k}.
inline Seq phi_minus(const Seq& a, int n_terms) {
    detail::require_exponent_ring(a, "phi_minus");
    return detail::phi_signed(a, n_terms, -1);
}
inline Seq phi_minus(const Seq& a) { return phi_minus(a, a.length() + 1); }

/// u_{n+1} by the direct multinomial sum over i_1 + 2 i_2 + ... + n i_n = n;
/// exponential in n, intended as a small-n cross-check of phi_plus.
inline Value phi_coefficient_direct(const Seq& a, int n) {
    detail::require_exponent_ring(a, "phi_coefficient_direct");
    return detail::phi_multinomial(a, n, false);
}

/// The alternating multinomial sum matching phi_minus.
inline Value phi_minus_coefficient_direct(const Seq& a, int n) {
    detail::require_exponent_ring(a, "phi_minus_coefficient_direct");
    return detail::phi_multinomial(a, n, true);
}

/// Recover a from u = phi_plus(a): a_1 = u_2 and for n >= 2
/// a_n = sum_{k|n, k<n} (k/n)(-1)^{n/k} a_k
///     + sum_{h=1}^{n} ((-1)^{h-1}/h) B0_{n,h}(u_2, ..., u_{n-h+2}).
/// Int input is promoted to rat internally and checked integral on return.
inline Seq phi_inverse_plus(const Seq& u) { return detail::phi_inverse_impl(u, false); }

/// Recover a from the minus-sign product:
/// a_1 = -u_2, a_n = -sum_{k|n, k<n} (k/n) a_k - sum_h ((-1)^{h-1}/h) B0_{n,h}(...).
inline Seq phi_inverse_minus(const Seq& u) { return detail::phi_inverse_impl(u, true); }

/// hat(a)_n = n! sum_{k|n} (k/n)(-1)^{n/k-1} a_k = sum_{k|n} k (n-1)! (-1)^{n/k-1} a_k.
/// Feeding hat(a) to u_{n+1} = (1/n!) sum_h B_{n,h}(hat(a)_1, ...) rebuilds phi_plus(a).
inline Seq hat_transform(const Seq& a) {
    std::vector<Value> out;
    out.reserve(static_cast<std::size_t>(a.length()));
    mpz_class fact = 1;  // (n-1)!
    for (int n = 1; n <= a.length(); ++n) {
        if (n > 1) fact *= n - 1;
        Value s = Value::zero(a.ring());
        for (int k = 1; k <= n; ++k) {
            if (n % k != 0 || a.at(k).is_zero()) continue;
            mpz_class scalar = fact * k;
            if ((n / k) % 2 == 0) scalar = -scalar;
            s = add(s, mul_by_int(a.at(k), scalar));
        }
        out.push_back(std::move(s));
    }
    return Seq(a.ring(), std::move(out));
}

/// bar(a)_n = -n! sum_{k|n} (k/n) a_k = -(n-1)! sum_{k|n} k a_k; the
/// minus-product counterpart of hat_transform.
inline Seq bar_transform(const Seq& a) {
    std::vector<Value> out;
    out.reserve(static_cast<std::size_t>(a.length()));
    mpz_class fact = 1;
    for (int n = 1; n <= a.length(); ++n) {
        if (n > 1) fact *= n - 1;
        Value s = Value::zero(a.ring());
        for (int k = 1; k <= n; ++k) {
            if (n % k != 0 || a.at(k).is_zero()) continue;
            s = add(s, mul_by_int(a.at(k), mpz_class(-fact * k)));
        }
        out.push_back(std::move(s));
    }
    return Seq(a.ring(), std::move(out));
}

}  // namespace seqcalc
