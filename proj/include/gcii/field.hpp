#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "gcii/errors.hpp"

namespace gcii {

/// Field element in polynomial-basis representation, value < 2^b.
using gf = std::uint16_t;

enum class Notation {
    Power,   // 0, 1, a, a^k
    Integer  // decimal polynomial-basis value
};

/// Arithmetic context for GF(2^b), 3 <= b <= 16, built over a primitive
/// polynomial. Multiplication and inversion are table driven; the antilog
/// table is stored twice so products need no modular reduction. Instances
/// are immutable after construction and safe to share across threads.
class Field {
  public:
    Field(int b, std::uint32_t poly) : b_(b), poly_(poly) {
        if (b < 3 || b > 16) throw BadDegree("field bit width must be in 3..16, got " + std::to_string(b));
        const std::uint32_t degree_bit = 1u << b;
        if ((poly & degree_bit) == 0 || poly >= (degree_bit << 1))
            throw BadDegree("polynomial 0x" + hex(poly) + " does not have degree " + std::to_string(b));

        order_ = (1 << b) - 1;
        log_.assign(std::size_t(1) << b, 0);
        antilog_.assign(std::size_t(2) * order_, 0);
        std::vector<bool> seen(std::size_t(1) << b, false);

        std::uint32_t v = 1;
        for (int e = 0; e < order_; ++e) {
            if (v == 0 || seen[v]) throw NonPrimitivePolynomial("0x" + hex(poly) + " is not primitive over GF(2)");
            seen[v] = true;
            antilog_[e] = static_cast<gf>(v);
            antilog_[e + order_] = static_cast<gf>(v);
            log_[v] = static_cast<gf>(e);
            v <<= 1;
            if (v & degree_bit) v ^= poly;
        }
        if (v != 1)  // alpha's order is not 2^b - 1
            throw NonPrimitivePolynomial("0x" + hex(poly) + " is not primitive over GF(2)");
    }

    int bits() const { return b_; }
    std::uint32_t poly() const { return poly_; }
    /// Number of nonzero elements, 2^b - 1 = multiplicative order of alpha.
    int order() const { return order_; }
    int size() const { return order_ + 1; }
    gf alpha() const { return 2; }

    bool same_spec(const Field& other) const { return b_ == other.b_ && poly_ == other.poly_; }

    gf add(gf a, gf b) const { return a ^ b; }

    gf mul(gf a, gf b) const {
        if (a == 0 || b == 0) return 0;
        return antilog_[log_[a] + log_[b]];
    }

    gf inv(gf a) const {
        if (a == 0) throw DivideByZero("inverse of zero");
        return antilog_[order_ - log_[a]];
    }

    gf div(gf a, gf b) const { return mul(a, inv(b)); }

    /// a^e with signed e; exponents reduce mod 2^b - 1. 0^0 = 1.
    gf pow(gf a, long long e) const {
        if (a == 0) {
            if (e < 0) throw DivideByZero("zero to a negative power");
            return e == 0 ? gf(1) : gf(0);
        }
        long long le = (static_cast<long long>(log_[a]) * e) % order_;
        if (le < 0) le += order_;
        return antilog_[le];
    }

    /// alpha^e for signed e.
    gf alpha_pow(long long e) const {
        long long le = e % order_;
        if (le < 0) le += order_;
        return antilog_[le];
    }

    /// Discrete log base alpha; a must be nonzero.
    int log(gf a) const {
        if (a == 0) throw DivideByZero("log of zero");
        return log_[a];
    }

    std::string format(gf v, Notation notation) const {
        if (notation == Notation::Integer) return std::to_string(v);
        if (v == 0) return "0";
        const int e = log_[v];
        if (e == 0) return "1";
        if (e == 1) return "a";
        return "a^" + std::to_string(e);
    }

    /// Accepts "0", "1", "a", "a^k" (k any integer) and decimal values.
    gf parse(const std::string& token) const {
        if (token.empty()) throw ParseError("empty field element token");
        if (token[0] == 'a') {
            if (token.size() == 1) return alpha();
            if (token[1] != '^' || token.size() == 2)
                throw ParseError("malformed power token '" + token + "'");
            long long e = 0;
            try {
                std::size_t used = 0;
                e = std::stoll(token.substr(2), &used);
                if (used != token.size() - 2) throw ParseError("");
            } catch (const std::exception&) {
                throw ParseError("malformed exponent in token '" + token + "'");
            }
            return alpha_pow(e);
        }
        unsigned long v = 0;
        try {
            std::size_t used = 0;
            v = std::stoul(token, &used, 10);
            if (used != token.size()) throw ParseError("");
        } catch (const std::exception&) {
            throw ParseError("malformed field element token '" + token + "'");
        }
        if (v > static_cast<unsigned long>(order_))
            throw ParseError("value " + token + " out of range for GF(2^" + std::to_string(b_) + ")");
        return static_cast<gf>(v);
    }

    static std::string hex(std::uint32_t v) {
        static const char* digits = "0123456789abcdef";
        std::string s;
        do {
            s.insert(s.begin(), digits[v & 0xF]);
            v >>= 4;
        } while (v);
        return s;
    }

    /// Built-in primitive polynomial for each supported width.
    static std::uint32_t default_poly(int b) {
        switch (b) {
            case 3: return 0xB;       // x^3+x+1
            case 4: return 0x13;      // x^4+x+1
            case 5: return 0x25;      // x^5+x^2+1
            case 6: return 0x43;      // x^6+x+1
            case 7: return 0x89;      // x^7+x^3+1
            case 8: return 0x11D;     // x^8+x^4+x^3+x^2+1
            case 9: return 0x211;     // x^9+x^4+1
            case 10: return 0x409;    // x^10+x^3+1
            case 11: return 0x805;    // x^11+x^2+1
            case 12: return 0x1053;   // x^12+x^6+x^4+x+1
            case 13: return 0x201B;   // x^13+x^4+x^3+x+1
            case 14: return 0x4443;   // x^14+x^10+x^6+x+1
            case 15: return 0x8003;   // x^15+x+1
            case 16: return 0x1100B;  // x^16+x^12+x^3+x+1
            default: throw BadDegree("no default polynomial for b = " + std::to_string(b));
        }
    }

  private:
    int b_;
    std::uint32_t poly_;
    int order_;
    std::vector<gf> log_;
    std::vector<gf> antilog_;
};

using FieldPtr = std::shared_ptr<const Field>;

inline FieldPtr field_new(int b, std::uint32_t poly) { return std::make_shared<const Field>(b, poly); }

inline FieldPtr field_default(int b) { return field_new(b, Field::default_poly(b)); }

}  // namespace gcii
