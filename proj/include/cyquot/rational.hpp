#pragma once

#include <cstdint>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <string>

namespace cyquot {

using i64 = long long;
using i128 = __int128;

// Exact rational number, always stored fully reduced with positive
// denominator. Arithmetic goes through 128-bit intermediates; a stored
// value that does not fit in 64 bits after reduction is an error, never a
// silent wrap.
struct Rat {
    i64 num = 0;
    i64 den = 1;

    Rat() = default;
    Rat(i64 n) : num(n), den(1) {}
    Rat(i64 n, i64 d) { *this = make(n, d); }

    static Rat make(i128 n, i128 d) {
        if (d == 0) throw std::domain_error("Rat: zero denominator");
        if (d < 0) { n = -n; d = -d; }
        i128 g = gcd128(n < 0 ? -n : n, d);
        if (g > 1) { n /= g; d /= g; }
        if (n == 0) d = 1;
        if (n > std::numeric_limits<i64>::max() || n < std::numeric_limits<i64>::min() ||
            d > std::numeric_limits<i64>::max())
            throw std::overflow_error("Rat: value exceeds 64-bit storage");
        Rat r;
        r.num = (i64)n;
        r.den = (i64)d;
        return r;
    }

    bool is_zero() const { return num == 0; }
    bool is_integer() const { return den == 1; }

    friend Rat operator+(const Rat& x, const Rat& y) {
        return make((i128)x.num * y.den + (i128)y.num * x.den, (i128)x.den * y.den);
    }
    friend Rat operator-(const Rat& x, const Rat& y) {
        return make((i128)x.num * y.den - (i128)y.num * x.den, (i128)x.den * y.den);
    }
    friend Rat operator*(const Rat& x, const Rat& y) {
        return make((i128)x.num * y.num, (i128)x.den * y.den);
    }
    friend Rat operator/(const Rat& x, const Rat& y) {
        if (y.num == 0) throw std::domain_error("Rat: division by zero");
        return make((i128)x.num * y.den, (i128)x.den * y.num);
    }
    Rat operator-() const { Rat r; r.num = -num; r.den = den; return r; }

    friend bool operator==(const Rat& x, const Rat& y) { return x.num == y.num && x.den == y.den; }
    friend bool operator!=(const Rat& x, const Rat& y) { return !(x == y); }
    friend bool operator<(const Rat& x, const Rat& y) {
        return (i128)x.num * y.den < (i128)y.num * x.den;
    }

    // floor(num/den), exact for negative values as well
    i64 floor() const {
        i64 q = num / den;
        if (num % den != 0 && num < 0) --q;
        return q;
    }

    std::string str() const {
        return std::to_string(num) + "/" + std::to_string(den);
    }

private:
    static i128 gcd128(i128 a, i128 b) {
        while (b) { i128 t = a % b; a = b; b = t; }
        return a;
    }
};

} // namespace cyquot
