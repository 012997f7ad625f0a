#pragma once

// Built-in algebras addressed by name:
//   k                     the ground field
//   trunc-poly:r          k[x]/x^r
//   rad-square-zero:n     k[x_1..x_n]/(x_1..x_n)^2
//   gf3-triple            k[a]/a^3 * k[b]/b^2 * k[c]/c^2
//   product(A,B)          A * B
//   coproduct(A,B,D)      A ⊔ B truncated above weight D
// Variables of truncated polynomial factors are named in order of
// appearance, so "product(trunc-poly:2,trunc-poly:2)" has basis 1, x, y.

#include "augalg/constructions.hpp"

#include <cctype>

namespace augalg {

namespace detail {

template <Field K>
class RegistryParser {
public:
    RegistryParser(K k, std::string text) : k_(k), s_(std::move(text)) {}

    Algebra<K> parse() {
        auto a = expr();
        if (pos_ != s_.size()) fail("trailing characters");
        return a;
    }

private:
    [[noreturn]] void fail(const std::string& why) const {
        throw MalformedInput("algebra name '" + s_ + "': " + why + " at position " + std::to_string(pos_));
    }
    std::string ident() {
        const std::size_t start = pos_;
        while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '-')) ++pos_;
        if (start == pos_) fail("expected a name");
        return s_.substr(start, pos_ - start);
    }
    std::size_t number() {
        const std::size_t start = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        if (start == pos_) fail("expected a number");
        if (pos_ - start > 6) fail("number too large");
        return std::stoul(s_.substr(start, pos_ - start));
    }
    void expect(char c) {
        if (pos_ >= s_.size() || s_[pos_] != c) fail(std::string("expected '") + c + "'");
        ++pos_;
    }
    std::string next_var() {
        static const char* names = "xyzwuvst";
        const std::size_t i = vars_++;
        return i < 8 ? std::string(1, names[i]) : "x" + std::to_string(i);
    }
    Algebra<K> expr() {
        const std::string name = ident();
        if (name == "k") return ground_algebra(k_);
        if (name == "trunc-poly" || name == "rad-square-zero") {
            expect(':');
            const std::size_t n = number();
            if (n == 0) fail("parameter must be positive");
            return name == "trunc-poly" ? truncated_polynomial(k_, n, next_var()) : rad_square_zero(k_, n);
        }
        if (name == "gf3-triple") {
            auto ab = product(truncated_polynomial(k_, 3, "a"), truncated_polynomial(k_, 2, "b")).algebra;
            return product(ab, truncated_polynomial(k_, 2, "c")).algebra;
        }
        if (name == "product" || name == "coproduct") {
            expect('(');
            auto left = expr();
            expect(',');
            auto right = expr();
            if (name == "product") {
                expect(')');
                return product(left, right).algebra;
            }
            expect(',');
            const std::size_t d = number();
            expect(')');
            return coproduct(left, right, int(d)).algebra.algebra;
        }
        fail("unknown algebra '" + name + "'");
    }

    K k_;
    std::string s_;
    std::size_t pos_ = 0;
    std::size_t vars_ = 0;
};

}  // namespace detail

template <Field K>
Algebra<K> registry_algebra(const K& k, const std::string& name) {
    std::string compact;
    for (char c : name)
        if (!std::isspace(static_cast<unsigned char>(c))) compact += c;
    return detail::RegistryParser<K>(k, compact).parse();
}

/// The built-in examples in a fixed order.
inline const std::vector<std::string>& registry_names() {
    static const std::vector<std::string> names{
        "k",
        "trunc-poly:2",
        "trunc-poly:3",
        "trunc-poly:4",
        "rad-square-zero:2",
        "gf3-triple",
        "product(trunc-poly:2,trunc-poly:2)",
        "product(trunc-poly:3,trunc-poly:2)",
        "product(trunc-poly:3,trunc-poly:3)",
        "coproduct(trunc-poly:2,trunc-poly:2,4)",
    };
    return names;
}

}  // namespace augalg
