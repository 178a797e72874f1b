#pragma once

#include "kercok/bigint.hpp"

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <variant>

namespace kercok {

enum class RingKind { Integers, Rationals, PrimeField };

/// Runtime name of a coefficient ring: INT, RAT or FP(p).
struct RingTag {
    RingKind kind = RingKind::Integers;
    std::uint32_t p = 0;

    friend bool operator==(const RingTag&, const RingTag&) = default;

    std::string str() const
    {
        switch (kind) {
        case RingKind::Integers:
            return "INT";
        case RingKind::Rationals:
            return "RAT";
        case RingKind::PrimeField:
            return "FP(" + std::to_string(p) + ")";
        }
        return "?";
    }

    /// Accepts "INT", "RAT", "FP(p)" or "FP p".
    static RingTag parse(const std::string& text);
};

class RingMismatch : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

class DimensionMismatch : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

inline bool is_prime(std::uint64_t n)
{
    if (n < 2)
        return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0)
            return false;
    return true;
}

/// The ring of integers. Euclidean with |x| as norm; canonical associates are
/// non-negative.
struct IntegerRing {
    using Scalar = BigInt;
    static constexpr bool is_field = false;

    RingTag tag() const { return {RingKind::Integers, 0}; }
    friend bool operator==(const IntegerRing&, const IntegerRing&) { return true; }

    Scalar zero() const { return 0; }
    Scalar one() const { return 1; }
    Scalar from_int(long long v) const { return v; }
    const Scalar& reduce(const Scalar& x) const { return x; }

    Scalar add(const Scalar& a, const Scalar& b) const { return a + b; }
    Scalar sub(const Scalar& a, const Scalar& b) const { return a - b; }
    Scalar mul(const Scalar& a, const Scalar& b) const { return a * b; }
    Scalar neg(const Scalar& a) const { return -a; }

    bool is_zero(const Scalar& a) const { return a.is_zero(); }
    bool is_unit(const Scalar& a) const { return a == BigInt(1) || a == BigInt(-1); }
    Scalar norm(const Scalar& a) const { return abs(a); }

    /// Floor-style Euclidean division: a = q*b + r with 0 <= r < |b|.
    std::pair<Scalar, Scalar> divmod(const Scalar& a, const Scalar& b) const
    {
        Scalar q = a / b;
        Scalar r = a - q * b;
        if (r.sign() < 0) {
            if (b.sign() > 0) {
                q -= 1;
                r += b;
            } else {
                q += 1;
                r -= b;
            }
        }
        return {std::move(q), std::move(r)};
    }

    /// Unit u with u*a the canonical associate of a.
    Scalar normalizing_unit(const Scalar& a) const { return a.sign() < 0 ? -1 : 1; }
    Scalar unit_inverse(const Scalar& u) const { return u; }

    /// Representative of a modulo (d) in [0, |d|); d == 0 leaves a unchanged.
    Scalar residue(const Scalar& a, const Scalar& d) const
    {
        if (d.is_zero())
            return a;
        return divmod(a, d).second;
    }
};

/// The rational numbers.
struct RationalField {
    using Scalar = Rational;
    static constexpr bool is_field = true;

    RingTag tag() const { return {RingKind::Rationals, 0}; }
    friend bool operator==(const RationalField&, const RationalField&) { return true; }

    Scalar zero() const { return 0; }
    Scalar one() const { return 1; }
    Scalar from_int(long long v) const { return v; }
    const Scalar& reduce(const Scalar& x) const { return x; }

    Scalar add(const Scalar& a, const Scalar& b) const { return a + b; }
    Scalar sub(const Scalar& a, const Scalar& b) const { return a - b; }
    Scalar mul(const Scalar& a, const Scalar& b) const { return a * b; }
    Scalar neg(const Scalar& a) const { return -a; }

    bool is_zero(const Scalar& a) const { return a.is_zero(); }
    bool is_unit(const Scalar& a) const { return !a.is_zero(); }
    int norm(const Scalar& a) const { return a.is_zero() ? 0 : 1; }

    std::pair<Scalar, Scalar> divmod(const Scalar& a, const Scalar& b) const { return {a / b, 0}; }
    Scalar normalizing_unit(const Scalar& a) const { return Scalar(1) / a; }
    Scalar unit_inverse(const Scalar& u) const { return Scalar(1) / u; }
    Scalar residue(const Scalar&, const Scalar&) const { return 0; }
};

/// Residues modulo a prime p < 2^16, stored reduced in [0, p).
struct PrimeField {
    using Scalar = std::int64_t;
    static constexpr bool is_field = true;
    static constexpr std::uint32_t max_modulus = 1u << 16;

    std::uint32_t p = 2;

    PrimeField() = default;
    explicit PrimeField(std::uint32_t modulus) : p(modulus)
    {
        if (modulus >= max_modulus || !is_prime(modulus))
            throw std::invalid_argument("FP modulus must be a prime below 2^16, got " +
                                        std::to_string(modulus));
    }

    RingTag tag() const { return {RingKind::PrimeField, p}; }
    friend bool operator==(const PrimeField& a, const PrimeField& b) { return a.p == b.p; }

    Scalar zero() const { return 0; }
    Scalar one() const { return 1; }
    Scalar from_int(long long v) const { return reduce(v); }
    Scalar reduce(Scalar x) const
    {
        x %= static_cast<Scalar>(p);
        return x < 0 ? x + p : x;
    }

    Scalar add(Scalar a, Scalar b) const { return reduce(a + b); }
    Scalar sub(Scalar a, Scalar b) const { return reduce(a - b); }
    Scalar mul(Scalar a, Scalar b) const { return reduce(a * b); }
    Scalar neg(Scalar a) const { return reduce(-a); }

    bool is_zero(Scalar a) const { return a == 0; }
    bool is_unit(Scalar a) const { return a != 0; }
    int norm(Scalar a) const { return a == 0 ? 0 : 1; }

    Scalar inverse(Scalar a) const
    {
        if (a == 0)
            throw std::domain_error("inverse of zero in FP(" + std::to_string(p) + ")");
        // Fermat: a^(p-2)
        Scalar result = 1, base = reduce(a);
        for (std::uint32_t e = p - 2; e; e >>= 1) {
            if (e & 1)
                result = mul(result, base);
            base = mul(base, base);
        }
        return result;
    }

    std::pair<Scalar, Scalar> divmod(Scalar a, Scalar b) const { return {mul(a, inverse(b)), 0}; }
    Scalar normalizing_unit(Scalar a) const { return inverse(a); }
    Scalar unit_inverse(Scalar u) const { return inverse(u); }
    Scalar residue(Scalar, Scalar) const { return 0; }
};

using AnyRing = std::variant<IntegerRing, RationalField, PrimeField>;

inline AnyRing make_ring(const RingTag& tag)
{
    switch (tag.kind) {
    case RingKind::Integers:
        return IntegerRing{};
    case RingKind::Rationals:
        return RationalField{};
    case RingKind::PrimeField:
        return PrimeField(tag.p);
    }
    throw std::invalid_argument("unknown ring");
}

inline RingTag RingTag::parse(const std::string& text)
{
    if (text == "INT" || text == "Z")
        return {RingKind::Integers, 0};
    if (text == "RAT" || text == "Q")
        return {RingKind::Rationals, 0};
    if (text.rfind("FP", 0) == 0) {
        std::string digits;
        for (char c : text.substr(2))
            if (c >= '0' && c <= '9')
                digits += c;
            else if (c != '(' && c != ')' && c != ' ')
                throw std::invalid_argument("malformed ring tag: " + text);
        if (digits.empty() || digits.size() > 6)
            throw std::invalid_argument("malformed ring tag: " + text);
        auto p = static_cast<std::uint32_t>(std::stoul(digits));
        PrimeField check(p); // validates primality and bound
        return check.tag();
    }
    throw std::invalid_argument("unknown ring tag: " + text);
}

/// Decimal rendering of a scalar (big integers and "num/den" rationals).
inline std::string scalar_to_string(const BigInt& v) { return v.str(); }
inline std::string scalar_to_string(const Rational& v) { return to_string(v); }
inline std::string scalar_to_string(std::int64_t v) { return std::to_string(v); }

inline BigInt parse_scalar(const IntegerRing&, const std::string& text) { return BigInt::parse(text); }
inline Rational parse_scalar(const RationalField&, const std::string& text) { return parse_rational(text); }
inline std::int64_t parse_scalar(const PrimeField& ring, const std::string& text)
{
    BigInt v = BigInt::parse(text);
    BigInt r = IntegerRing{}.residue(v, BigInt(static_cast<long long>(ring.p)));
    return r.to_int64();
}

} // namespace kercok
