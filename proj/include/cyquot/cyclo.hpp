#pragma once

#include <string>
#include <vector>

#include "cyquot/rational.hpp"

namespace cyquot {

// Exact element of Q(zeta_m) for prime m (here m = 3 or 7), stored in the
// power basis {1, zeta, ..., zeta^(m-2)}. Reduction uses
// zeta^(m-1) = -(1 + zeta + ... + zeta^(m-2)).
struct CycNum {
    int order = 3;
    std::vector<Rat> coeffs; // size order-1

    CycNum() : coeffs(2) {}
    explicit CycNum(int m) : order(m), coeffs(m - 1) {}
    CycNum(int m, const Rat& r) : order(m), coeffs(m - 1) { coeffs[0] = r; }

    static CycNum zeta(int m, int power = 1) {
        CycNum x(m);
        power %= m;
        if (power < 0) power += m;
        if (power == m - 1) {
            for (auto& c : x.coeffs) c = Rat(-1);
        } else {
            x.coeffs[power] = Rat(1);
        }
        return x;
    }

    bool is_zero() const {
        for (const auto& c : coeffs)
            if (!c.is_zero()) return false;
        return true;
    }

    bool is_rational() const {
        for (size_t i = 1; i < coeffs.size(); ++i)
            if (!coeffs[i].is_zero()) return false;
        return true;
    }

    Rat rational_part() const { return coeffs[0]; }

    friend CycNum operator+(const CycNum& x, const CycNum& y) {
        check_orders(x, y);
        CycNum r(x.order);
        for (size_t i = 0; i < r.coeffs.size(); ++i) r.coeffs[i] = x.coeffs[i] + y.coeffs[i];
        return r;
    }
    friend CycNum operator-(const CycNum& x, const CycNum& y) {
        check_orders(x, y);
        CycNum r(x.order);
        for (size_t i = 0; i < r.coeffs.size(); ++i) r.coeffs[i] = x.coeffs[i] - y.coeffs[i];
        return r;
    }
    CycNum operator-() const {
        CycNum r(order);
        for (size_t i = 0; i < coeffs.size(); ++i) r.coeffs[i] = -coeffs[i];
        return r;
    }

    friend CycNum operator*(const CycNum& x, const CycNum& y) {
        check_orders(x, y);
        int m = x.order;
        // convolve with exponents folded modulo m (zeta^m = 1)
        std::vector<Rat> acc(m);
        for (int i = 0; i < m - 1; ++i) {
            if (x.coeffs[i].is_zero()) continue;
            for (int j = 0; j < m - 1; ++j) {
                if (y.coeffs[j].is_zero()) continue;
                acc[(i + j) % m] = acc[(i + j) % m] + x.coeffs[i] * y.coeffs[j];
            }
        }
        return from_folded(m, acc);
    }

    friend CycNum operator*(const Rat& s, const CycNum& x) {
        CycNum r(x.order);
        for (size_t i = 0; i < r.coeffs.size(); ++i) r.coeffs[i] = s * x.coeffs[i];
        return r;
    }

    friend bool operator==(const CycNum& x, const CycNum& y) {
        return x.order == y.order && x.coeffs == y.coeffs;
    }
    friend bool operator!=(const CycNum& x, const CycNum& y) { return !(x == y); }

    // Galois twist zeta -> zeta^j, gcd(j, m) = 1.
    CycNum galois(int j) const {
        int m = order;
        j %= m;
        if (j < 0) j += m;
        std::vector<Rat> acc(m);
        for (int i = 0; i < m - 1; ++i)
            acc[(i * j) % m] = acc[(i * j) % m] + coeffs[i];
        return from_folded(m, acc);
    }

    // complex conjugation zeta -> zeta^(-1)
    CycNum conj() const { return galois(order - 1); }

    // product over all embeddings; always rational
    Rat norm() const {
        CycNum p(order, Rat(1));
        for (int j = 1; j < order; ++j) p = p * galois(j);
        if (!p.is_rational()) throw std::logic_error("CycNum: norm not rational");
        return p.rational_part();
    }

    CycNum inverse() const {
        if (is_zero()) throw std::domain_error("CycNum: inverse of zero");
        // x * prod_{j>=2} galois_j(x) = norm(x)
        CycNum p(order, Rat(1));
        for (int j = 2; j < order; ++j) p = p * galois(j);
        return (Rat(1) / norm()) * p;
    }

    std::string str() const {
        std::string s;
        for (size_t i = 0; i < coeffs.size(); ++i) {
            if (i) s += "+";
            s += coeffs[i].str();
            if (i == 1) s += "*z";
            else if (i > 1) s += "*z^" + std::to_string(i);
        }
        return s;
    }

private:
    static void check_orders(const CycNum& x, const CycNum& y) {
        if (x.order != y.order) throw std::invalid_argument("CycNum: mismatched cyclotomic orders");
    }

    static CycNum from_folded(int m, const std::vector<Rat>& acc) {
        CycNum r(m);
        // eliminate zeta^(m-1)
        for (int i = 0; i < m - 1; ++i) r.coeffs[i] = acc[i] - acc[m - 1];
        return r;
    }
};

inline CycNum cyc_rat(int m, i64 n, i64 d = 1) { return CycNum(m, Rat(n, d)); }

// the six units of Z[zeta_3]: +-1, +-zeta, +-zeta^2
inline std::vector<CycNum> eisenstein_units() {
    std::vector<CycNum> us;
    for (int p = 0; p < 3; ++p) {
        us.push_back(CycNum::zeta(3, p));
        us.push_back(-CycNum::zeta(3, p));
    }
    return us;
}

} // namespace cyquot
