#pragma once

// Commutative rig instances: exact rationals (via GMP), naturals, and
// booleans. A rig type supplies zero/one/add/mul/eq plus parsing, printing
// and sampling; all instances are stateless.

#include <gmpxx.h>

#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>

namespace corel {

/// Parse an exact rational from "p/q", integer, or decimal ("6.7") form.
inline mpq_class parse_rational(const std::string& s) {
    if (s.empty()) throw std::invalid_argument("parse_rational: empty string");
    auto dot = s.find('.');
    if (dot != std::string::npos) {
        std::string digits = s.substr(0, dot) + s.substr(dot + 1);
        std::size_t frac_len = s.size() - dot - 1;
        mpz_class num(digits, 10);
        mpz_class den;
        mpz_ui_pow_ui(den.get_mpz_t(), 10, frac_len);
        mpq_class q(num, den);
        q.canonicalize();
        return q;
    }
    mpq_class q;
    if (q.set_str(s, 10) != 0) throw std::invalid_argument("parse_rational: bad rational '" + s + "'");
    q.canonicalize();
    if (q.get_den() == 0) throw std::invalid_argument("parse_rational: zero denominator");
    return q;
}

struct RationalRig {
    using value_type = mpq_class;
    static constexpr const char* name = "rational";
    static value_type zero() { return mpq_class(0); }
    static value_type one() { return mpq_class(1); }
    static value_type add(const value_type& a, const value_type& b) { return a + b; }
    static value_type mul(const value_type& a, const value_type& b) { return a * b; }
    static bool eq(const value_type& a, const value_type& b) { return cmp(a, b) == 0; }
    static std::string str(const value_type& v) { return v.get_str(); }
    static value_type parse(const std::string& s) { return parse_rational(s); }
    static value_type sample(std::mt19937_64& rng) {
        std::uniform_int_distribution<int> num(-5, 5);
        std::uniform_int_distribution<int> den(1, 4);
        mpq_class q(num(rng), den(rng));
        q.canonicalize();
        return q;
    }
};

struct NatRig {
    using value_type = std::uint64_t;
    static constexpr const char* name = "nat";
    static value_type zero() { return 0; }
    static value_type one() { return 1; }
    static value_type add(value_type a, value_type b) { return a + b; }
    static value_type mul(value_type a, value_type b) { return a * b; }
    static bool eq(value_type a, value_type b) { return a == b; }
    static std::string str(value_type v) { return std::to_string(v); }
    static value_type parse(const std::string& s) {
        std::size_t pos = 0;
        unsigned long long v = std::stoull(s, &pos);
        if (pos != s.size()) throw std::invalid_argument("NatRig: bad natural '" + s + "'");
        return v;
    }
    static value_type sample(std::mt19937_64& rng) {
        std::uniform_int_distribution<value_type> d(0, 5);
        return d(rng);
    }
};

/// Booleans with or/and.
struct BoolRig {
    using value_type = bool;
    static constexpr const char* name = "bool";
    static value_type zero() { return false; }
    static value_type one() { return true; }
    static value_type add(value_type a, value_type b) { return a || b; }
    static value_type mul(value_type a, value_type b) { return a && b; }
    static bool eq(value_type a, value_type b) { return a == b; }
    static std::string str(value_type v) { return v ? "1" : "0"; }
    static value_type parse(const std::string& s) {
        if (s == "1" || s == "true") return true;
        if (s == "0" || s == "false") return false;
        throw std::invalid_argument("BoolRig: bad boolean '" + s + "'");
    }
    static value_type sample(std::mt19937_64& rng) {
        return std::uniform_int_distribution<int>(0, 1)(rng) == 1;
    }
};

/// The support homomorphism from naturals to booleans (0 -> false, n>0 -> true).
inline bool nat_to_bool(std::uint64_t v) { return v != 0; }

} // namespace corel
