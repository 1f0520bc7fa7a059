#pragma once

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>

#include <gmpxx.h>

namespace cotan {

// Coefficient field for all cohomology ranks: the rationals, or a prime
// field with p < 2^16. Never floating point.
struct FieldChoice {
    bool is_rational = true;
    std::uint32_t p = 0;

    static FieldChoice rationals() { return FieldChoice{}; }

    static FieldChoice prime(std::uint32_t p) {
        if (p < 2 || p >= (1u << 16)) throw std::invalid_argument("prime field modulus out of range");
        for (std::uint32_t d = 2; d * d <= p; ++d)
            if (p % d == 0) throw std::invalid_argument("prime field modulus is composite");
        return FieldChoice{false, p};
    }

    // "q" for the rationals, "gf<p>" for a prime field.
    static FieldChoice parse(const std::string& s) {
        if (s == "q") return rationals();
        if (s.size() > 2 && s.compare(0, 2, "gf") == 0) {
            std::size_t used = 0;
            unsigned long v = std::stoul(s.substr(2), &used, 10);
            if (used != s.size() - 2) throw std::invalid_argument("bad field spec: " + s);
            return prime(static_cast<std::uint32_t>(v));
        }
        throw std::invalid_argument("bad field spec: " + s);
    }

    [[nodiscard]] std::string label() const {
        return is_rational ? "q" : ("gf" + std::to_string(p));
    }

    bool operator==(const FieldChoice&) const = default;
};

// Thrown by the int64 rational fast path; callers retry with GMP.
struct RatOverflow : std::runtime_error {
    RatOverflow() : std::runtime_error("int64 rational overflow") {}
};

// Reduced fraction with int64 components. All intermediates run through
// __int128; anything that cannot be reduced back into int64 throws.
struct Rat64 {
    std::int64_t num = 0;
    std::int64_t den = 1;

    static Rat64 make(__int128 n, __int128 d) {
        if (d == 0) throw std::logic_error("zero denominator");
        if (d < 0) {
            n = -n;
            d = -d;
        }
        __int128 g = gcd128(n < 0 ? -n : n, d);
        if (g > 1) {
            n /= g;
            d /= g;
        }
        if (n > INT64_MAX || n < INT64_MIN || d > INT64_MAX) throw RatOverflow{};
        return Rat64{static_cast<std::int64_t>(n), static_cast<std::int64_t>(d)};
    }

    friend Rat64 operator+(Rat64 a, Rat64 b) {
        return make(static_cast<__int128>(a.num) * b.den + static_cast<__int128>(b.num) * a.den,
                    static_cast<__int128>(a.den) * b.den);
    }
    friend Rat64 operator-(Rat64 a, Rat64 b) {
        return make(static_cast<__int128>(a.num) * b.den - static_cast<__int128>(b.num) * a.den,
                    static_cast<__int128>(a.den) * b.den);
    }
    friend Rat64 operator*(Rat64 a, Rat64 b) {
        return make(static_cast<__int128>(a.num) * b.num, static_cast<__int128>(a.den) * b.den);
    }
    friend Rat64 operator/(Rat64 a, Rat64 b) {
        if (b.num == 0) throw std::logic_error("division by zero");
        return make(static_cast<__int128>(a.num) * b.den, static_cast<__int128>(a.den) * b.num);
    }

private:
    static __int128 gcd128(__int128 a, __int128 b) {
        while (b != 0) {
            __int128 t = a % b;
            a = b;
            b = t;
        }
        return a == 0 ? 1 : a;
    }
};

struct Rat64Field {
    using Elem = Rat64;
    static Elem zero() { return Rat64{0, 1}; }
    static Elem one() { return Rat64{1, 1}; }
    static Elem from_int(int v) { return Rat64{v, 1}; }
    static bool is_zero(const Elem& e) { return e.num == 0; }
    static Elem add(const Elem& a, const Elem& b) { return a + b; }
    static Elem sub(const Elem& a, const Elem& b) { return a - b; }
    static Elem mul(const Elem& a, const Elem& b) { return a * b; }
    static Elem div(const Elem& a, const Elem& b) { return a / b; }
    static Elem neg(const Elem& a) { return Rat64{-a.num, a.den}; }
    // Pivot preference: unit entries keep the elimination integral.
    static bool is_unit_pivot(const Elem& e) { return e.den == 1 && (e.num == 1 || e.num == -1); }
};

// Arbitrary-precision fallback; only runs when Rat64 overflows, so speed is
// irrelevant and exactness is everything.
struct GmpRatField {
    using Elem = mpq_class;
    static Elem zero() { return mpq_class(0); }
    static Elem one() { return mpq_class(1); }
    static Elem from_int(int v) { return mpq_class(v); }
    static bool is_zero(const Elem& e) { return sgn(e) == 0; }
    static Elem add(const Elem& a, const Elem& b) { return a + b; }
    static Elem sub(const Elem& a, const Elem& b) { return a - b; }
    static Elem mul(const Elem& a, const Elem& b) { return a * b; }
    static Elem div(const Elem& a, const Elem& b) { return a / b; }
    static Elem neg(const Elem& a) { return -a; }
    static bool is_unit_pivot(const Elem& e) { return e == 1 || e == -1; }
};

// Runs fn with the arithmetic matching a runtime FieldChoice. Rational
// requests try the int64 path first and redo the whole computation over GMP
// if any intermediate overflows.
template <class Fn>
auto with_field_arith(FieldChoice field, Fn&& fn);

struct PrimeFieldArith {
    std::uint32_t p;
    using Elem = std::uint32_t;
    [[nodiscard]] Elem zero() const { return 0; }
    [[nodiscard]] Elem one() const { return 1 % p; }
    [[nodiscard]] Elem from_int(int v) const {
        std::int64_t r = v % static_cast<std::int64_t>(p);
        if (r < 0) r += p;
        return static_cast<Elem>(r);
    }
    [[nodiscard]] static bool is_zero(Elem e) { return e == 0; }
    [[nodiscard]] Elem add(Elem a, Elem b) const { return (a + b) % p; }
    [[nodiscard]] Elem sub(Elem a, Elem b) const { return (a + p - b) % p; }
    [[nodiscard]] Elem mul(Elem a, Elem b) const {
        return static_cast<Elem>(static_cast<std::uint64_t>(a) * b % p);
    }
    [[nodiscard]] Elem inv(Elem a) const {
        // Extended Euclid; p is prime and a nonzero.
        std::int64_t t = 0, nt = 1, r = p, nr = a;
        while (nr != 0) {
            std::int64_t q = r / nr;
            std::int64_t tmp = t - q * nt;
            t = nt;
            nt = tmp;
            tmp = r - q * nr;
            r = nr;
            nr = tmp;
        }
        if (t < 0) t += p;
        return static_cast<Elem>(t);
    }
    [[nodiscard]] Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }
    [[nodiscard]] Elem neg(Elem a) const { return (p - a) % p; }
    [[nodiscard]] static bool is_unit_pivot(Elem) { return true; }
};

template <class Fn>
auto with_field_arith(FieldChoice field, Fn&& fn) {
    if (!field.is_rational) return fn(PrimeFieldArith{field.p});
    try {
        return fn(Rat64Field{});
    } catch (const RatOverflow&) {
        return fn(GmpRatField{});
    }
}

}  // namespace cotan
