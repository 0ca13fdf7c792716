#pragma once

#include <numeric>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "bell.hpp"
#include "errors.hpp"
#include "phi.hpp"
#include "poly.hpp"
#include "seq.hpp"
#include "series.hpp"
#include "value.hpp"

namespace seqcalc {

/// Sum of divisors sigma(m) by trial division to sqrt(m).
inline mpz_class sigma(unsigned long m) {
    if (m < 1) throw std::invalid_argument("sigma: m must be >= 1");
    mpz_class s = 0;
    for (unsigned long d = 1; d * d <= m; ++d) {
        if (m % d != 0) continue;
        s += d;
        if (d != m / d) s += m / d;
    }
    return s;
}

/// phi_n(x): coefficient of t^{n-1} in prod_{k>=1} (1 - t^k)^{-x}.
/// phi_1 = 1, deg phi_n = n-1, and (n-1)! phi_n has integer coefficients
/// (the D'Arcais numbers). phi_n(1) counts partitions of n-1 and
/// phi_n(-24) is the Ramanujan tau function.
struct DArcaisPoly {
    int n = 1;
    Poly value;
};

namespace detail {

inline std::vector<DArcaisPoly> collect_polys(const Seq& u) {
    std::vector<DArcaisPoly> out;
    out.reserve(static_cast<std::size_t>(u.length()));
    for (int n = 1; n <= u.length(); ++n) out.push_back({n, u.at(n).as_poly()});
    return out;
}

}  // namespace detail

/// phi_1..phi_N via the truncated factor product: phi_minus applied to the
/// constant exponent sequence (-x, -x, ...).
inline std::vector<DArcaisPoly> darcais_product(int n_polys) {
    if (n_polys < 1) throw std::invalid_argument("darcais_product: n_polys must be >= 1");
    Poly minus_x({mpq_class(0), mpq_class(-1)});
    Seq a = Seq::constant(Value(minus_x), std::max(n_polys - 1, 1));
    return detail::collect_polys(phi_minus(a, n_polys));
}

/// phi_1..phi_N through the Bell layer:
/// phi_{n+1}(x) = sum_{h=1}^{n} (1/h!) B0_{n,h}(sigma(1), sigma(2)/2, ...,
/// sigma(n-h+1)/(n-h+1)) x^h.
inline std::vector<DArcaisPoly> darcais_bell(int n_polys) {
    if (n_polys < 1) throw std::invalid_argument("darcais_bell: n_polys must be >= 1");
    std::vector<DArcaisPoly> out;
    out.reserve(static_cast<std::size_t>(n_polys));
    out.push_back({1, Poly::constant(1)});
    if (n_polys == 1) return out;

    const int top = n_polys - 1;
    std::vector<Value> s;  // s_m = sigma(m)/m
    s.reserve(static_cast<std::size_t>(top));
    for (int m = 1; m <= top; ++m)
        s.push_back(Value(make_rational(sigma(static_cast<unsigned long>(m)), m)));
    BellTable table(Seq(RingTag::Rat, std::move(s)), top);

    std::vector<mpz_class> factorials{mpz_class(1)};
    for (int h = 1; h <= top; ++h) factorials.push_back(factorials.back() * h);
    for (int n = 1; n <= top; ++n) {
        std::vector<mpq_class> coeffs(static_cast<std::size_t>(n) + 1, mpq_class(0));
        for (int h = 1; h <= n; ++h)
            coeffs[static_cast<std::size_t>(h)] =
                table.ordinary(n, h).as_rat() / mpq_class(factorials[static_cast<std::size_t>(h)]);
        out.push_back({n + 1, Poly(std::move(coeffs))});
    }
    return out;
}

/// phi_1..phi_N as the coefficients of exp(x sum_{k>=1} (sigma(k)/k) t^k).
inline std::vector<DArcaisPoly> darcais_exp(int n_polys) {
    if (n_polys < 1) throw std::invalid_argument("darcais_exp: n_polys must be >= 1");
    if (n_polys == 1) return {{1, Poly::constant(1)}};
    std::vector<Value> w(static_cast<std::size_t>(n_polys), Value(Poly()));
    for (int k = 1; k < n_polys; ++k) {
        mpq_class c = make_rational(sigma(static_cast<unsigned long>(k)), k);
        w[static_cast<std::size_t>(k)] = Value(Poly({mpq_class(0), c}));  // (sigma(k)/k) x
    }
    Series u = series_exp(Series(Seq(RingTag::PolyX, std::move(w))));
    return detail::collect_polys(u.coeffs());
}

/// Canonical table accessor; all three construction routes agree, this one
/// is the cheapest at large N.
inline std::vector<DArcaisPoly> darcais_polynomials(int n_polys) { return darcais_exp(n_polys); }

struct TauValue {
    int n = 1;
    mpz_class value{1};
};

namespace detail {

inline TauValue tau_from_poly(const DArcaisPoly& p) {
    mpq_class v = p.value.eval(mpq_class(-24));
    if (v.get_den() != 1)
        throw IntegralityViolation("ramanujan_tau: phi_" + std::to_string(p.n) +
                                   "(-24) is not an integer");
    return {p.n, mpz_class(v.get_num())};
}

inline mpz_class integral_specialization(const Poly& p, long x, const char* what) {
    mpq_class v = p.eval(mpq_class(x));
    if (v.get_den() != 1) throw IntegralityViolation(std::string(what) + ": non-integer value");
    return mpz_class(v.get_num());
}

}  // namespace detail

/// tau(n) = phi_n(-24), evaluated exactly; IntegralityViolation would flag
/// an implementation bug, never valid input.
inline TauValue ramanujan_tau(int n) {
    if (n < 1) throw std::invalid_argument("ramanujan_tau: n must be >= 1");
    return detail::tau_from_poly(darcais_polynomials(n).back());
}

inline std::vector<TauValue> ramanujan_tau_prefix(int n_terms) {
    if (n_terms < 1) throw std::invalid_argument("ramanujan_tau_prefix: n_terms must be >= 1");
    std::vector<TauValue> out;
    out.reserve(static_cast<std::size_t>(n_terms));
    for (const auto& p : darcais_polynomials(n_terms)) out.push_back(detail::tau_from_poly(p));
    return out;
}

struct TauPairResidual {
    int m = 1;
    int n = 1;
    mpq_class residual;  // (phi_{mn} - phi_m phi_n)(-24)
};

struct TauMultiplicativityReport {
    int bound = 2;
    std::vector<TauPairResidual> pairs;
    bool all_zero = true;
};

/// For every coprime pair m <= n with mn <= bound, evaluates
/// phi_{mn}(x) - phi_m(x) phi_n(x) at x = -24 and records the residual.
/// Only the root evaluation is checked; nothing is asserted about the
/// difference polynomial beyond that.
inline TauMultiplicativityReport tau_multiplicativity_experiment(int bound) {
    if (bound < 2) throw std::invalid_argument("tau_multiplicativity_experiment: bound must be >= 2");
    TauMultiplicativityReport report;
    report.bound = bound;
    auto polys = darcais_polynomials(bound);
    for (int m = 1; m * m <= bound; ++m) {
        for (int n = m; m * n <= bound; ++n) {
            if (std::gcd(m, n) != 1) continue;
            Poly diff = polys[static_cast<std::size_t>(m * n - 1)].value -
                        polys[static_cast<std::size_t>(m - 1)].value *
                            polys[static_cast<std::size_t>(n - 1)].value;
            TauPairResidual r{m, n, diff.eval(mpq_class(-24))};
            if (r.residual != 0) report.all_zero = false;
            report.pairs.push_back(std::move(r));
        }
    }
    return report;
}

/// phi_n(1): the partition numbers (1, 1, 2, 3, 5, 7, ...); phi_n(1) counts
/// the partitions of n - 1 (OEIS A000041, offset 0 there).
inline Seq partition_numbers(int n_terms) {
    std::vector<Value> p;
    p.reserve(static_cast<std::size_t>(n_terms));
    for (const auto& d : darcais_polynomials(n_terms))
        p.push_back(Value(detail::integral_specialization(d.value, 1, "partition_numbers")));
    return Seq(RingTag::Int, std::move(p));
}

/// phi_n(-1): the expansion of prod (1 - t^k), OEIS A010815 (offset 0 there).
inline Seq a010815(int n_terms) {
    std::vector<Value> p;
    p.reserve(static_cast<std::size_t>(n_terms));
    for (const auto& d : darcais_polynomials(n_terms))
        p.push_back(Value(detail::integral_specialization(d.value, -1, "a010815")));
    return Seq(RingTag::Int, std::move(p));
}

}  // namespace seqcalc
