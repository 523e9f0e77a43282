#pragma once

// Exact coefficient arithmetic: prime fields F_p (word-sized p) and the
// rationals with arbitrary precision. No floating point anywhere.

#include <cstdint>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

#include "entrolab/errors.hpp"

namespace entrolab {

using BigInt = boost::multiprecision::cpp_int;
using BigRat = boost::multiprecision::cpp_rational;

namespace detail {

inline std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return static_cast<std::uint64_t>(
        (static_cast<unsigned __int128>(a) * b) % m);
}

inline std::uint64_t powmod(std::uint64_t base, std::uint64_t exp, std::uint64_t m) {
    std::uint64_t r = 1 % m;
    base %= m;
    while (exp) {
        if (exp & 1) r = mulmod(r, base, m);
        base = mulmod(base, base, m);
        exp >>= 1;
    }
    return r;
}

// Deterministic Miller-Rabin for 64-bit inputs.
inline bool is_prime_u64(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull,
                            19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (n % p == 0) return n == p;
    }
    std::uint64_t d = n - 1;
    int s = 0;
    while ((d & 1) == 0) { d >>= 1; ++s; }
    for (std::uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull,
                            19ull, 23ull, 29ull, 31ull, 37ull}) {
        std::uint64_t x = powmod(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (int i = 0; i < s - 1; ++i) {
            x = mulmod(x, x, n);
            if (x == n - 1) { composite = false; break; }
        }
        if (composite) return false;
    }
    return true;
}

} // namespace detail

// Coefficient domain: characteristic 0 (rationals) or a prime p.
// Primality is checked at construction.
class FieldSpec {
public:
    explicit FieldSpec(std::uint64_t characteristic) : ch_(characteristic) {
        if (ch_ != 0 && !detail::is_prime_u64(ch_))
            throw structural_error("characteristic " + std::to_string(ch_) +
                                   " is neither 0 nor a prime");
    }

    std::uint64_t characteristic() const { return ch_; }
    bool is_prime_field() const { return ch_ != 0; }

    bool operator==(const FieldSpec& o) const { return ch_ == o.ch_; }

private:
    std::uint64_t ch_;
};

// Element of F_p. Each value carries its modulus so cross-field arithmetic
// is caught instead of silently wrapping.
class Fp {
public:
    Fp(std::uint64_t value, std::uint64_t p) : v_(value % p), p_(p) {}

    static Fp from_integer(const BigInt& z, std::uint64_t p) {
        BigInt r = z % p;
        if (r < 0) r += p;
        return Fp(r.convert_to<std::uint64_t>(), p);
    }

    std::uint64_t value() const { return v_; }
    std::uint64_t modulus() const { return p_; }

    bool is_zero() const { return v_ == 0; }

    Fp operator-() const { return Fp(v_ == 0 ? 0 : p_ - v_, p_); }

    friend Fp operator+(const Fp& a, const Fp& b) {
        a.check(b);
        std::uint64_t s = a.v_ + b.v_;
        // s < a.v_ detects wraparound for p near 2^64; a+b-p always fits.
        if (s < a.v_ || s >= a.p_) s -= a.p_;
        return Fp(s, a.p_);
    }
    friend Fp operator-(const Fp& a, const Fp& b) {
        a.check(b);
        return Fp(a.v_ >= b.v_ ? a.v_ - b.v_ : a.v_ + a.p_ - b.v_, a.p_);
    }
    friend Fp operator*(const Fp& a, const Fp& b) {
        a.check(b);
        return Fp(detail::mulmod(a.v_, b.v_, a.p_), a.p_);
    }
    friend Fp operator/(const Fp& a, const Fp& b) { return a * b.inverse(); }

    Fp inverse() const {
        if (v_ == 0) throw structural_error("division by zero in F_p");
        // Fermat: v^(p-2); safe for the whole 64-bit prime range.
        return Fp(detail::powmod(v_, p_ - 2, p_), p_);
    }

    friend bool operator==(const Fp& a, const Fp& b) {
        return a.p_ == b.p_ && a.v_ == b.v_;
    }

private:
    void check(const Fp& o) const {
        if (p_ != o.p_)
            throw structural_error("mixed moduli in F_p arithmetic: " +
                                   std::to_string(p_) + " vs " +
                                   std::to_string(o.p_));
    }

    std::uint64_t v_;
    std::uint64_t p_;
};

// Exact rational. cpp_rational keeps values in lowest terms with a positive
// denominator, which is exactly the canonical form we want.
using Rat = BigRat;

inline bool is_zero(const Fp& a) { return a.is_zero(); }
inline bool is_zero(const Rat& a) { return a == 0; }

inline Fp one_like(const Fp& a) { return Fp(1, a.modulus()); }
inline Rat one_like(const Rat&) { return Rat(1); }

inline std::string coeff_to_string(const Fp& a) { return std::to_string(a.value()); }
inline std::string coeff_to_string(const Rat& a) { return a.str(); }

// Prime fields render residues in [0, p), never with a sign.
inline bool displays_negative(const Fp&) { return false; }
inline bool displays_negative(const Rat& a) { return a < 0; }
inline Fp display_abs(const Fp& a) { return a; }
inline Rat display_abs(const Rat& a) { return a < 0 ? Rat(-a) : a; }

inline bool is_display_one(const Fp& a) { return a.value() == 1; }
inline bool is_display_one(const Rat& a) { return a == 1; }

// Field handles: tie a scalar type to a FieldSpec so generic code can make
// constants. These are what the parser and the CLI dispatch on.
struct PrimeField {
    using Elem = Fp;

    explicit PrimeField(FieldSpec s) : spec(s) {
        if (!spec.is_prime_field())
            throw structural_error("PrimeField requires a prime characteristic");
    }

    FieldSpec spec;

    Fp from_integer(const BigInt& z) const {
        return Fp::from_integer(z, spec.characteristic());
    }
    Fp zero() const { return Fp(0, spec.characteristic()); }
    Fp one() const { return Fp(1, spec.characteristic()); }
};

struct RationalField {
    using Elem = Rat;

    RationalField() : spec(0) {}

    FieldSpec spec;

    Rat from_integer(const BigInt& z) const { return Rat(z); }
    Rat zero() const { return Rat(0); }
    Rat one() const { return Rat(1); }
};

} // namespace entrolab
