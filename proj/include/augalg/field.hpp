#pragma once

// Exact ground fields: the rationals (GMP) and prime fields GF(p).
//
// Algorithms are templated on a field object K exposing
//   value_type, characteristic(), zero(), one(), from_int(), inv(),
//   to_string(), parse()
// while the element types themselves carry the usual arithmetic operators.

#include <gmpxx.h>

#include <concepts>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace augalg {

inline bool is_zero(const mpq_class& a) { return sgn(a) == 0; }

/// Element of GF(p). The modulus travels with the value; a default-constructed
/// element is an unbound zero that adopts the modulus of whatever it meets.
class ModP {
public:
    ModP() = default;

    std::uint32_t value() const { return v_; }
    std::uint32_t modulus() const { return p_; }

    friend ModP operator+(ModP a, ModP b) {
        std::uint32_t p = a.p_ ? a.p_ : b.p_;
        std::uint64_t s = std::uint64_t(a.v_) + b.v_;
        return ModP(std::uint32_t(p ? s % p : s), p);
    }
    friend ModP operator-(ModP a, ModP b) {
        std::uint32_t p = a.p_ ? a.p_ : b.p_;
        if (!p) return ModP(0, 0);
        return ModP(std::uint32_t((std::uint64_t(a.v_) + p - b.v_) % p), p);
    }
    friend ModP operator-(ModP a) {
        if (!a.p_ || a.v_ == 0) return ModP(0, a.p_);
        return ModP(a.p_ - a.v_, a.p_);
    }
    friend ModP operator*(ModP a, ModP b) {
        std::uint32_t p = a.p_ ? a.p_ : b.p_;
        if (!p) return ModP(0, 0);
        return ModP(std::uint32_t(std::uint64_t(a.v_) * b.v_ % p), p);
    }
    friend ModP operator/(ModP a, ModP b) { return a * b.inverse(); }
    ModP& operator+=(ModP b) { return *this = *this + b; }
    ModP& operator-=(ModP b) { return *this = *this - b; }
    ModP& operator*=(ModP b) { return *this = *this * b; }
    ModP& operator/=(ModP b) { return *this = *this / b; }
    friend bool operator==(ModP a, ModP b) { return a.v_ == b.v_; }

    ModP inverse() const {
        if (v_ == 0) throw std::domain_error("division by zero in GF(p)");
        // a^(p-2) by square-and-multiply
        std::uint64_t result = 1, base = v_, e = p_ - 2;
        while (e) {
            if (e & 1) result = result * base % p_;
            base = base * base % p_;
            e >>= 1;
        }
        return ModP(std::uint32_t(result), p_);
    }

private:
    friend class PrimeField;
    ModP(std::uint32_t v, std::uint32_t p) : v_(v), p_(p) {}
    std::uint32_t v_ = 0;
    std::uint32_t p_ = 0;
};

inline bool is_zero(ModP a) { return a.value() == 0; }

class RationalField {
public:
    using value_type = mpq_class;

    unsigned characteristic() const { return 0; }
    value_type zero() const { return 0; }
    value_type one() const { return 1; }
    value_type from_int(long n) const { return mpq_class(n); }
    value_type inv(const value_type& a) const {
        if (is_zero(a)) throw std::domain_error("division by zero in Q");
        return mpq_class(1) / a;
    }
    /// "p/q" in lowest terms, or plain "p" when q = 1.
    std::string to_string(const value_type& a) const {
        mpq_class c(a);
        c.canonicalize();
        if (c.get_den() == 1) return c.get_num().get_str();
        return c.get_num().get_str() + "/" + c.get_den().get_str();
    }
    value_type parse(const std::string& s) const {
        mpq_class r;
        if (r.set_str(s, 10) != 0) throw std::invalid_argument("bad rational: " + s);
        if (r.get_den() == 0) throw std::invalid_argument("zero denominator: " + s);
        r.canonicalize();
        return r;
    }
    friend bool operator==(const RationalField&, const RationalField&) { return true; }
};

inline bool is_prime(unsigned p) {
    if (p < 2) return false;
    for (unsigned d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

class PrimeField {
public:
    using value_type = ModP;

    PrimeField() = default;  // GF(2)
    explicit PrimeField(unsigned p) : p_(p) {
        if (!is_prime(p)) throw std::invalid_argument("characteristic must be prime: " + std::to_string(p));
        if (p >= (1u << 31)) throw std::invalid_argument("prime too large");
    }

    unsigned characteristic() const { return p_; }
    value_type zero() const { return ModP(0, p_); }
    value_type one() const { return ModP(1 % p_, p_); }
    value_type from_int(long n) const {
        long r = n % long(p_);
        if (r < 0) r += p_;
        return ModP(std::uint32_t(r), p_);
    }
    value_type inv(value_type a) const { return bind(a).inverse(); }
    std::string to_string(value_type a) const { return std::to_string(a.value()); }
    value_type parse(const std::string& s) const {
        std::size_t pos = 0;
        long n = std::stol(s, &pos);
        if (pos != s.size()) throw std::invalid_argument("bad GF(p) scalar: " + s);
        return from_int(n);
    }
    value_type bind(value_type a) const { return ModP(a.value() % p_, p_); }
    friend bool operator==(const PrimeField& a, const PrimeField& b) { return a.p_ == b.p_; }

private:
    unsigned p_ = 2;
};

template <class K>
concept Field = requires(const K k, typename K::value_type a, long n, std::string s) {
    { k.characteristic() } -> std::convertible_to<unsigned>;
    { k.zero() } -> std::convertible_to<typename K::value_type>;
    { k.one() } -> std::convertible_to<typename K::value_type>;
    { k.from_int(n) } -> std::convertible_to<typename K::value_type>;
    { k.inv(a) } -> std::convertible_to<typename K::value_type>;
    { k.to_string(a) } -> std::convertible_to<std::string>;
    { k.parse(s) } -> std::convertible_to<typename K::value_type>;
    { is_zero(a) } -> std::convertible_to<bool>;
};

template <Field K>
using Scalar = typename K::value_type;

/// Runs f with the field object matching characteristic `p` (0 = rationals).
template <class F>
decltype(auto) with_field(unsigned p, F&& f) {
    if (p == 0) return f(RationalField{});
    return f(PrimeField(p));
}

}  // namespace augalg
