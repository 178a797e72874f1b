#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <Eigen/Core>

#include <climits>
#include <compare>
#include <cstdint>
#include <memory>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>

namespace kercok {

/// Arbitrary-precision signed integer.
///
/// Values that fit in a machine word are kept inline; anything larger is
/// promoted to a shared, immutable boost::multiprecision::cpp_int. Every
/// operation re-normalizes, so a value has exactly one representation and
/// equality is structural.
class BigInt {
public:
    using Big = boost::multiprecision::number<boost::multiprecision::cpp_int_backend<>, boost::multiprecision::et_off>;

    BigInt() = default;
    BigInt(int v) : small_(v) {}
    BigInt(long v) : small_(v) {}
    BigInt(long long v) : small_(v) {}
    BigInt(unsigned v) : small_(v) {}
    explicit BigInt(const Big& v) { assign(v); }

    static BigInt parse(std::string_view text)
    {
        if (text.empty())
            throw std::invalid_argument("empty integer literal");
        std::size_t i = (text[0] == '-' || text[0] == '+') ? 1 : 0;
        if (i == text.size())
            throw std::invalid_argument("malformed integer literal");
        for (std::size_t k = i; k < text.size(); ++k)
            if (text[k] < '0' || text[k] > '9')
                throw std::invalid_argument("malformed integer literal: " + std::string(text));
        Big v(std::string(text.substr(i)));
        if (text[0] == '-')
            v = -v;
        return BigInt(v);
    }

    bool is_small() const { return !big_; }
    std::int64_t small() const { return small_; }
    Big to_big() const { return big_ ? *big_ : Big(small_); }

    /// Narrowing conversion; throws when the value does not fit.
    std::int64_t to_int64() const
    {
        if (big_)
            throw std::overflow_error("integer does not fit in 64 bits");
        return small_;
    }

    std::string str() const { return big_ ? big_->str() : std::to_string(small_); }

    int sign() const
    {
        if (big_)
            return big_->sign();
        return (small_ > 0) - (small_ < 0);
    }
    bool is_zero() const { return !big_ && small_ == 0; }

    friend BigInt operator+(const BigInt& a, const BigInt& b)
    {
        std::int64_t r;
        if (!a.big_ && !b.big_ && !__builtin_add_overflow(a.small_, b.small_, &r))
            return BigInt(r);
        return BigInt(a.to_big() + b.to_big());
    }
    friend BigInt operator-(const BigInt& a, const BigInt& b)
    {
        std::int64_t r;
        if (!a.big_ && !b.big_ && !__builtin_sub_overflow(a.small_, b.small_, &r))
            return BigInt(r);
        return BigInt(a.to_big() - b.to_big());
    }
    friend BigInt operator*(const BigInt& a, const BigInt& b)
    {
        std::int64_t r;
        if (!a.big_ && !b.big_ && !__builtin_mul_overflow(a.small_, b.small_, &r))
            return BigInt(r);
        return BigInt(a.to_big() * b.to_big());
    }
    /// Truncating division, as for built-in integers.
    friend BigInt operator/(const BigInt& a, const BigInt& b)
    {
        if (b.is_zero())
            throw std::domain_error("integer division by zero");
        if (!a.big_ && !b.big_ && !(a.small_ == INT64_MIN && b.small_ == -1))
            return BigInt(a.small_ / b.small_);
        return BigInt(Big(a.to_big() / b.to_big()));
    }
    /// Remainder with the sign of the dividend.
    friend BigInt operator%(const BigInt& a, const BigInt& b)
    {
        if (b.is_zero())
            throw std::domain_error("integer division by zero");
        if (!a.big_ && !b.big_) {
            if (b.small_ == -1)
                return BigInt(0);
            return BigInt(a.small_ % b.small_);
        }
        return BigInt(Big(a.to_big() % b.to_big()));
    }
    BigInt operator-() const
    {
        if (!big_ && small_ != INT64_MIN)
            return BigInt(-small_);
        return BigInt(Big(-to_big()));
    }
    BigInt operator+() const { return *this; }

    BigInt& operator+=(const BigInt& o) { return *this = *this + o; }
    BigInt& operator-=(const BigInt& o) { return *this = *this - o; }
    BigInt& operator*=(const BigInt& o) { return *this = *this * o; }
    BigInt& operator/=(const BigInt& o) { return *this = *this / o; }
    BigInt& operator%=(const BigInt& o) { return *this = *this % o; }

    friend bool operator==(const BigInt& a, const BigInt& b)
    {
        if (!a.big_ && !b.big_)
            return a.small_ == b.small_;
        if (!a.big_ || !b.big_)
            return false; // normalized: a big value never fits in 64 bits
        return *a.big_ == *b.big_;
    }
    friend std::strong_ordering operator<=>(const BigInt& a, const BigInt& b)
    {
        if (!a.big_ && !b.big_)
            return a.small_ <=> b.small_;
        int c = a.to_big().compare(b.to_big());
        return c < 0 ? std::strong_ordering::less
                     : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
    }

    friend std::ostream& operator<<(std::ostream& os, const BigInt& v) { return os << v.str(); }

private:
    void assign(const Big& v)
    {
        if (v >= Big(INT64_MIN) && v <= Big(INT64_MAX)) {
            small_ = static_cast<std::int64_t>(v);
            big_.reset();
        } else {
            small_ = 0;
            big_ = std::make_shared<const Big>(v);
        }
    }

    std::int64_t small_ = 0;
    std::shared_ptr<const Big> big_;
};

inline BigInt abs(const BigInt& v)
{
    if (v.sign() < 0)
        return -v;
    return v;
}

inline BigInt gcd(BigInt a, BigInt b)
{
    a = abs(a);
    b = abs(b);
    while (!b.is_zero()) {
        BigInt r = a % b;
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}


/// Exact fraction num/den in lowest terms with den > 0.
class Rational {
public:
    Rational() = default;
    Rational(int v) : num_(v) {}
    Rational(long v) : num_(v) {}
    Rational(long long v) : num_(v) {}
    Rational(BigInt v) : num_(std::move(v)) {}
    Rational(BigInt num, BigInt den) : num_(std::move(num)), den_(std::move(den))
    {
        if (den_.is_zero())
            throw std::domain_error("rational with zero denominator");
        normalize();
    }

    const BigInt& numerator() const { return num_; }
    const BigInt& denominator() const { return den_; }
    bool is_integer() const { return den_ == BigInt(1); }
    bool is_zero() const { return num_.is_zero(); }

    friend Rational operator+(const Rational& a, const Rational& b)
    {
        if (a.is_integer() && b.is_integer())
            return Rational(a.num_ + b.num_);
        return Rational(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    }
    friend Rational operator-(const Rational& a, const Rational& b)
    {
        if (a.is_integer() && b.is_integer())
            return Rational(a.num_ - b.num_);
        return Rational(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
    }
    friend Rational operator*(const Rational& a, const Rational& b)
    {
        if (a.is_integer() && b.is_integer())
            return Rational(a.num_ * b.num_);
        return Rational(a.num_ * b.num_, a.den_ * b.den_);
    }
    friend Rational operator/(const Rational& a, const Rational& b)
    {
        if (b.is_zero())
            throw std::domain_error("rational division by zero");
        return Rational(a.num_ * b.den_, a.den_ * b.num_);
    }
    Rational operator-() const
    {
        Rational r = *this;
        r.num_ = -r.num_;
        return r;
    }

    Rational& operator+=(const Rational& o) { return *this = *this + o; }
    Rational& operator-=(const Rational& o) { return *this = *this - o; }
    Rational& operator*=(const Rational& o) { return *this = *this * o; }
    Rational& operator/=(const Rational& o) { return *this = *this / o; }

    friend bool operator==(const Rational& a, const Rational& b)
    {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b)
    {
        return a.num_ * b.den_ <=> b.num_ * a.den_;
    }

    friend std::ostream& operator<<(std::ostream& os, const Rational& q)
    {
        os << q.num_;
        if (!q.is_integer())
            os << '/' << q.den_;
        return os;
    }

private:
    void normalize()
    {
        if (den_.sign() < 0) {
            num_ = -num_;
            den_ = -den_;
        }
        if (den_ == BigInt(1))
            return;
        BigInt g = gcd(num_, den_);
        if (g != BigInt(1)) {
            num_ = num_ / g;
            den_ = den_ / g;
        }
    }

    BigInt num_{0};
    BigInt den_{1};
};

inline Rational abs(const Rational& q) { return q.numerator().sign() < 0 ? -q : q; }

inline std::string to_string(const BigInt& v) { return v.str(); }
inline std::string to_string(const Rational& q)
{
    if (q.denominator() == BigInt(1))
        return q.numerator().str();
    return q.numerator().str() + "/" + q.denominator().str();
}

/// Parses "a" or "a/b" into a rational in lowest terms.
inline Rational parse_rational(std::string_view text)
{
    auto slash = text.find('/');
    if (slash == std::string_view::npos)
        return Rational(BigInt::parse(text));
    BigInt den = BigInt::parse(text.substr(slash + 1));
    if (den.is_zero())
        throw std::invalid_argument("zero denominator in rational literal");
    return Rational(BigInt::parse(text.substr(0, slash)), den);
}

} // namespace kercok


namespace Eigen {
template <>
struct NumTraits<kercok::BigInt> : GenericNumTraits<kercok::BigInt> {
    using Real = kercok::BigInt;
    using NonInteger = kercok::Rational;
    using Literal = kercok::BigInt;
    using Nested = kercok::BigInt;
    enum {
        IsInteger = 1,
        IsSigned = 1,
        IsComplex = 0,
        RequireInitialization = 1,
        ReadCost = 1,
        AddCost = 3,
        MulCost = 3
    };
    static inline int digits10() { return 0; }
    static inline Real epsilon() { return Real(0); }
    static inline Real dummy_precision() { return Real(0); }
};

template <>
struct NumTraits<kercok::Rational> : GenericNumTraits<kercok::Rational> {
    using Real = kercok::Rational;
    using NonInteger = kercok::Rational;
    using Literal = kercok::Rational;
    using Nested = kercok::Rational;
    enum {
        IsInteger = 0,
        IsSigned = 1,
        IsComplex = 0,
        RequireInitialization = 1,
        ReadCost = 1,
        AddCost = 6,
        MulCost = 6
    };
    static inline int digits10() { return 0; }
    static inline Real epsilon() { return Real(0); }
    static inline Real dummy_precision() { return Real(0); }
};
} // namespace Eigen
