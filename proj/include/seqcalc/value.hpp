#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <utility>
#include <variant>

#include "errors.hpp"
#include "poly.hpp"

namespace seqcalc {

/// Supported exact coefficient rings: arbitrary-precision integers,
/// rationals, and univariate polynomials over the rationals.
enum class RingTag { Int, Rat, PolyX };

inline const char* ring_name(RingTag tag) {
    switch (tag) {
        case RingTag::Int: return "int";
        case RingTag::Rat: return "rat";
        case RingTag::PolyX: return "polyx";
    }
    return "?";
}

inline mpz_class factorial(unsigned long n) {
    mpz_class r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return r;
}

/// num/den in lowest terms with positive denominator; den must be nonzero.
inline mpq_class make_rational(const mpz_class& num, const mpz_class& den) {
    if (den == 0) throw std::invalid_argument("make_rational: zero denominator");
    mpq_class q(num);
    q /= mpq_class(den);
    return q;
}

/// One exact ring element. Rationals are stored in lowest terms with positive
/// denominator and polynomials without trailing zeros, so operator== is
/// structural equality of canonical forms.
class Value {
public:
    Value() : v_(mpz_class(0)) {}
    explicit Value(mpz_class z) : v_(std::move(z)) {}
    explicit Value(long z) : v_(mpz_class(z)) {}
    explicit Value(mpq_class q) : v_(canonicalized(std::move(q))) {}
    explicit Value(Poly p) : v_(std::move(p)) {}

    RingTag tag() const {
        if (std::holds_alternative<mpz_class>(v_)) return RingTag::Int;
        if (std::holds_alternative<mpq_class>(v_)) return RingTag::Rat;
        return RingTag::PolyX;
    }

    const mpz_class& as_int() const { return std::get<mpz_class>(v_); }
    const mpq_class& as_rat() const { return std::get<mpq_class>(v_); }
    const Poly& as_poly() const { return std::get<Poly>(v_); }

    bool is_zero() const {
        switch (tag()) {
            case RingTag::Int: return as_int() == 0;
            case RingTag::Rat: return as_rat() == 0;
            case RingTag::PolyX: return as_poly().is_zero();
        }
        return false;
    }

    bool is_one() const {
        switch (tag()) {
            case RingTag::Int: return as_int() == 1;
            case RingTag::Rat: return as_rat() == 1;
            case RingTag::PolyX: {
                const Poly& p = as_poly();
                return p.is_constant() && p.constant_value() == 1;
            }
        }
        return false;
    }

    static Value zero(RingTag tag) {
        switch (tag) {
            case RingTag::Int: return Value(mpz_class(0));
            case RingTag::Rat: return Value(mpq_class(0));
            case RingTag::PolyX: return Value(Poly());
        }
        throw std::invalid_argument("Value::zero: bad tag");
    }

    static Value one(RingTag tag) {
        switch (tag) {
            case RingTag::Int: return Value(mpz_class(1));
            case RingTag::Rat: return Value(mpq_class(1));
            case RingTag::PolyX: return Value(Poly::constant(1));
        }
        throw std::invalid_argument("Value::one: bad tag");
    }

    bool operator==(const Value& o) const { return v_ == o.v_; }
    bool operator!=(const Value& o) const { return !(*this == o); }

private:
    static mpq_class canonicalized(mpq_class q) {
        q.canonicalize();
        return q;
    }

    std::variant<mpz_class, mpq_class, Poly> v_;
};

inline void require_same_ring(const Value& a, const Value& b, const char* op) {
    if (a.tag() != b.tag())
        throw MixedRing(std::string(op) + ": operands in different rings (" +
                        ring_name(a.tag()) + " vs " + ring_name(b.tag()) + ")");
}

inline Value add(const Value& a, const Value& b) {
    require_same_ring(a, b, "add");
    switch (a.tag()) {
        case RingTag::Int: return Value(mpz_class(a.as_int() + b.as_int()));
        case RingTag::Rat: return Value(mpq_class(a.as_rat() + b.as_rat()));
        case RingTag::PolyX: return Value(a.as_poly() + b.as_poly());
    }
    throw std::logic_error("add: unreachable");
}

inline Value sub(const Value& a, const Value& b) {
    require_same_ring(a, b, "sub");
    switch (a.tag()) {
        case RingTag::Int: return Value(mpz_class(a.as_int() - b.as_int()));
        case RingTag::Rat: return Value(mpq_class(a.as_rat() - b.as_rat()));
        case RingTag::PolyX: return Value(a.as_poly() - b.as_poly());
    }
    throw std::logic_error("sub: unreachable");
}

inline Value mul(const Value& a, const Value& b) {
    require_same_ring(a, b, "mul");
    switch (a.tag()) {
        case RingTag::Int: return Value(mpz_class(a.as_int() * b.as_int()));
        case RingTag::Rat: return Value(mpq_class(a.as_rat() * b.as_rat()));
        case RingTag::PolyX: return Value(a.as_poly() * b.as_poly());
    }
    throw std::logic_error("mul: unreachable");
}

inline Value neg(const Value& a) {
    switch (a.tag()) {
        case RingTag::Int: return Value(mpz_class(-a.as_int()));
        case RingTag::Rat: return Value(mpq_class(-a.as_rat()));
        case RingTag::PolyX: return Value(-a.as_poly());
    }
    throw std::logic_error("neg: unreachable");
}

/// Lift an integer scalar into the given ring.
inline Value from_integer(RingTag tag, const mpz_class& z) {
    switch (tag) {
        case RingTag::Int: return Value(z);
        case RingTag::Rat: return Value(mpq_class(z));
        case RingTag::PolyX: return Value(Poly::constant(mpq_class(z)));
    }
    throw std::invalid_argument("from_integer: bad tag");
}

/// Lift a rational scalar; into Int only when it is integral.
inline Value from_rational(RingTag tag, const mpq_class& q) {
    switch (tag) {
        case RingTag::Int:
            if (q.get_den() != 1) throw NotDivisible("from_rational: " + q.get_str() + " is not an integer");
            return Value(mpz_class(q.get_num()));
        case RingTag::Rat: return Value(q);
        case RingTag::PolyX: return Value(Poly::constant(q));
    }
    throw std::invalid_argument("from_rational: bad tag");
}

inline Value mul_by_int(const Value& v, const mpz_class& k) {
    switch (v.tag()) {
        case RingTag::Int: return Value(mpz_class(v.as_int() * k));
        case RingTag::Rat: return Value(mpq_class(v.as_rat() * mpq_class(k)));
        case RingTag::PolyX: return Value(v.as_poly().scaled(mpq_class(k)));
    }
    throw std::logic_error("mul_by_int: unreachable");
}

inline Value mul_by_rat(const Value& v, const mpq_class& q) {
    switch (v.tag()) {
        case RingTag::Int: {
            mpq_class r = mpq_class(v.as_int()) * q;
            if (r.get_den() != 1) throw NotDivisible("mul_by_rat: product not integral in int ring");
            return Value(mpz_class(r.get_num()));
        }
        case RingTag::Rat: return Value(mpq_class(v.as_rat() * q));
        case RingTag::PolyX: return Value(v.as_poly().scaled(q));
    }
    throw std::logic_error("mul_by_rat: unreachable");
}

inline Value div_by_int(const Value& v, const mpz_class& k) {
    if (k == 0) throw std::invalid_argument("div_by_int: zero divisor");
    switch (v.tag()) {
        case RingTag::Int: {
            if (!mpz_divisible_p(v.as_int().get_mpz_t(), k.get_mpz_t()))
                throw NotDivisible("div_by_int: " + v.as_int().get_str() + " not divisible by " + k.get_str());
            mpz_class r;
            mpz_divexact(r.get_mpz_t(), v.as_int().get_mpz_t(), k.get_mpz_t());
            return Value(r);
        }
        case RingTag::Rat: return Value(mpq_class(v.as_rat() / mpq_class(k)));
        case RingTag::PolyX: return Value(v.as_poly().scaled(make_rational(1, k)));
    }
    throw std::logic_error("div_by_int: unreachable");
}

/// Generalized binomial coefficient a(a-1)...(a-i+1)/i! with ring-element
/// upper argument; exact in all three rings (integral for Int input).
inline Value binomial(const Value& a, int i) {
    if (i < 0) throw std::invalid_argument("binomial: lower index must be >= 0");
    if (i == 0) return Value::one(a.tag());
    Value term = a;
    Value num = a;
    const Value unit = Value::one(a.tag());
    for (int j = 1; j < i; ++j) {
        term = sub(term, unit);
        num = mul(num, term);
    }
    return div_by_int(num, factorial(static_cast<unsigned long>(i)));
}

/// Multiplicative inverse of a unit: +-1 in Int, nonzero in Rat, nonzero
/// constant in PolyX.
inline Value invert(const Value& a) {
    switch (a.tag()) {
        case RingTag::Int:
            if (a.as_int() == 1 || a.as_int() == -1) return a;
            throw NotAUnit("invert: " + a.as_int().get_str() + " is not a unit in int");
        case RingTag::Rat:
            if (a.as_rat() == 0) throw NotAUnit("invert: zero is not a unit");
            return Value(mpq_class(mpq_class(1) / a.as_rat()));
        case RingTag::PolyX: {
            const Poly& p = a.as_poly();
            if (!p.is_constant() || p.is_zero())
                throw NotAUnit("invert: only nonzero constants are units in polyx");
            return Value(Poly::constant(mpq_class(1) / p.constant_value()));
        }
    }
    throw std::logic_error("invert: unreachable");
}

/// Ring conversions used by the transforms: Int <-> Rat and lifts into PolyX.
inline Value convert(const Value& v, RingTag target) {
    if (v.tag() == target) return v;
    switch (v.tag()) {
        case RingTag::Int:
            return target == RingTag::Rat ? Value(mpq_class(v.as_int()))
                                          : Value(Poly::constant(mpq_class(v.as_int())));
        case RingTag::Rat:
            if (target == RingTag::Int) {
                if (v.as_rat().get_den() != 1)
                    throw NotDivisible("convert: " + v.as_rat().get_str() + " is not an integer");
                return Value(mpz_class(v.as_rat().get_num()));
            }
            return Value(Poly::constant(v.as_rat()));
        case RingTag::PolyX:
            throw std::invalid_argument("convert: cannot lower polyx values");
    }
    throw std::logic_error("convert: unreachable");
}

}  // namespace seqcalc
