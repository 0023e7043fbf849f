#ifndef RIGIDBOUND_NUMERIC_HPP
#define RIGIDBOUND_NUMERIC_HPP

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace rigidbound {

using BigInt = boost::multiprecision::cpp_int;
using BigRat = boost::multiprecision::cpp_rational;

// Overflow of the 128-bit fast path; callers fall back to BigRat.
struct NarrowOverflow : std::runtime_error {
    NarrowOverflow() : std::runtime_error("128-bit rational overflow") {}
};

namespace detail {

inline __int128 gcd128(__int128 a, __int128 b) {
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b) {
        __int128 t = a % b;
        a = b;
        b = t;
    }
    return a;
}

inline __int128 checked_mul(__int128 a, __int128 b) {
    __int128 r;
    if (__builtin_mul_overflow(a, b, &r)) throw NarrowOverflow();
    return r;
}

inline __int128 checked_add(__int128 a, __int128 b) {
    __int128 r;
    if (__builtin_add_overflow(a, b, &r)) throw NarrowOverflow();
    return r;
}

}  // namespace detail

// Exact rational on __int128, gcd-reduced, throwing NarrowOverflow when a
// product no longer fits. Fast path for the linear-programming kernels;
// magnitudes there stay far below 2^127 in practice.
class Rat128 {
public:
    Rat128() : num_(0), den_(1) {}
    Rat128(long long v) : num_(v), den_(1) {}        // NOLINT(google-explicit-constructor)
    Rat128(__int128 n, __int128 d) : num_(n), den_(d) { normalize(); }

    __int128 num() const { return num_; }
    __int128 den() const { return den_; }

    int sign() const { return num_ > 0 ? 1 : (num_ < 0 ? -1 : 0); }
    bool is_zero() const { return num_ == 0; }

    friend Rat128 operator+(const Rat128& a, const Rat128& b) {
        using detail::checked_add;
        using detail::checked_mul;
        return Rat128(checked_add(checked_mul(a.num_, b.den_), checked_mul(b.num_, a.den_)),
                      checked_mul(a.den_, b.den_));
    }
    friend Rat128 operator-(const Rat128& a, const Rat128& b) {
        using detail::checked_add;
        using detail::checked_mul;
        return Rat128(checked_add(checked_mul(a.num_, b.den_), -checked_mul(b.num_, a.den_)),
                      checked_mul(a.den_, b.den_));
    }
    friend Rat128 operator*(const Rat128& a, const Rat128& b) {
        return Rat128(detail::checked_mul(a.num_, b.num_), detail::checked_mul(a.den_, b.den_));
    }
    friend Rat128 operator/(const Rat128& a, const Rat128& b) {
        if (b.num_ == 0) throw std::domain_error("Rat128: division by zero");
        return Rat128(detail::checked_mul(a.num_, b.den_), detail::checked_mul(a.den_, b.num_));
    }
    Rat128 operator-() const { return Rat128(-num_, den_); }

    friend bool operator==(const Rat128& a, const Rat128& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator<(const Rat128& a, const Rat128& b) { return (a - b).sign() < 0; }
    friend bool operator>(const Rat128& a, const Rat128& b) { return (a - b).sign() > 0; }
    friend bool operator<=(const Rat128& a, const Rat128& b) { return (a - b).sign() <= 0; }
    friend bool operator>=(const Rat128& a, const Rat128& b) { return (a - b).sign() >= 0; }

private:
    void normalize() {
        if (den_ == 0) throw std::domain_error("Rat128: zero denominator");
        if (den_ < 0) {
            num_ = -num_;
            den_ = -den_;
        }
        if (num_ == 0) {
            den_ = 1;
            return;
        }
        __int128 g = detail::gcd128(num_, den_);
        num_ /= g;
        den_ /= g;
    }

    __int128 num_;
    __int128 den_;
};

// Adapters so the LP / elimination templates can use either number type.
inline int sign_of(const Rat128& x) { return x.sign(); }
inline int sign_of(const BigRat& x) { return x.sign(); }
inline bool is_zero(const Rat128& x) { return x.is_zero(); }
inline bool is_zero(const BigRat& x) { return x.is_zero(); }

// Exact determinant of a small integer matrix (fraction-free Bareiss).
inline BigInt integer_det(std::vector<std::vector<BigInt>> m) {
    size_t k = m.size();
    if (k == 0) return 1;
    BigInt prev = 1;
    int sign = 1;
    for (size_t c = 0; c + 1 < k; ++c) {
        size_t piv = c;
        while (piv < k && m[piv][c] == 0) ++piv;
        if (piv == k) return 0;
        if (piv != c) {
            std::swap(m[piv], m[c]);
            sign = -sign;
        }
        for (size_t r = c + 1; r < k; ++r) {
            for (size_t cc = c + 1; cc < k; ++cc)
                m[r][cc] = (m[r][cc] * m[c][c] - m[r][c] * m[c][cc]) / prev;
            m[r][c] = 0;
        }
        prev = m[c][c];
    }
    return sign > 0 ? m[k - 1][k - 1] : -m[k - 1][k - 1];
}

namespace modarith {

inline uint64_t mulmod(uint64_t a, uint64_t b, uint64_t p) {
    return uint64_t((__uint128_t(a) * b) % p);
}

inline uint64_t addmod(uint64_t a, uint64_t b, uint64_t p) {
    uint64_t s = a + b;
    return s >= p ? s - p : s;
}

inline uint64_t submod(uint64_t a, uint64_t b, uint64_t p) { return addmod(a, p - b % p, p); }

inline uint64_t powmod(uint64_t a, uint64_t e, uint64_t p) {
    uint64_t r = 1;
    a %= p;
    while (e) {
        if (e & 1) r = mulmod(r, a, p);
        a = mulmod(a, a, p);
        e >>= 1;
    }
    return r;
}

inline uint64_t invmod(uint64_t a, uint64_t p) { return powmod(a % p, p - 2, p); }

// Determinant modulo a prime; Gaussian elimination with inverse pivots.
inline uint64_t det_mod(std::vector<std::vector<uint64_t>> m, uint64_t p) {
    size_t k = m.size();
    uint64_t det = 1;
    for (size_t c = 0; c < k; ++c) {
        size_t piv = c;
        while (piv < k && m[piv][c] % p == 0) ++piv;
        if (piv == k) return 0;
        if (piv != c) {
            std::swap(m[piv], m[c]);
            det = p - det;
        }
        det = mulmod(det, m[c][c] % p, p);
        uint64_t inv = invmod(m[c][c], p);
        for (size_t r = c + 1; r < k; ++r) {
            if (m[r][c] % p == 0) continue;
            uint64_t f = mulmod(m[r][c] % p, inv, p);
            for (size_t cc = c; cc < k; ++cc)
                m[r][cc] = submod(m[r][cc] % p, mulmod(f, m[c][cc] % p, p), p);
        }
    }
    return det % p;
}

// 62-bit primes for randomized coefficient certification.
inline constexpr uint64_t kPrimes[6] = {
    0x3fffffffffffffc7ull, 0x3fffffffffffffa9ull, 0x3fffffffffffff8bull,
    0x3fffffffffffff71ull, 0x3fffffffffffff67ull, 0x3fffffffffffff59ull,
};

}  // namespace modarith

// splitmix64: deterministic stream generator for seeds and residues.
struct SplitMix64 {
    uint64_t state;

    explicit SplitMix64(uint64_t seed) : state(seed) {}

    uint64_t next() {
        uint64_t z = (state += 0x9e3779b97f4a7c15ull);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }

    // uniform-ish in [lo, hi); modulo bias is irrelevant for genericity
    uint64_t range(uint64_t lo, uint64_t hi) { return lo + next() % (hi - lo); }
};

inline uint64_t mix_seed(uint64_t a, uint64_t b) {
    SplitMix64 s(a ^ (b + 0x9e3779b97f4a7c15ull + (a << 6) + (a >> 2)));
    return s.next();
}

// Rank of a small integer matrix, fraction-free on __int128; throws
// NarrowOverflow if entries outgrow 128 bits.
inline int integer_rank_i128(std::vector<std::vector<__int128>> m) {
    if (m.empty()) return 0;
    size_t rows = m.size(), cols = m[0].size();
    size_t r = 0;
    for (size_t c = 0; c < cols && r < rows; ++c) {
        size_t piv = r;
        while (piv < rows && m[piv][c] == 0) ++piv;
        if (piv == rows) continue;
        std::swap(m[piv], m[r]);
        for (size_t rr = r + 1; rr < rows; ++rr) {
            if (m[rr][c] == 0) continue;
            __int128 f1 = m[r][c], f2 = m[rr][c];
            for (size_t cc = c; cc < cols; ++cc) {
                __int128 a = detail::checked_mul(m[rr][cc], f1);
                __int128 b = detail::checked_mul(m[r][cc], f2);
                m[rr][cc] = detail::checked_add(a, -b);
            }
        }
        ++r;
    }
    return int(r);
}

// Rank of an integer matrix via fraction-free elimination.
inline int integer_rank(std::vector<std::vector<BigInt>> m) {
    if (m.empty()) return 0;
    size_t rows = m.size(), cols = m[0].size();
    size_t r = 0;
    for (size_t c = 0; c < cols && r < rows; ++c) {
        size_t piv = r;
        while (piv < rows && m[piv][c] == 0) ++piv;
        if (piv == rows) continue;
        std::swap(m[piv], m[r]);
        for (size_t rr = r + 1; rr < rows; ++rr) {
            if (m[rr][c] == 0) continue;
            BigInt f1 = m[r][c], f2 = m[rr][c];
            for (size_t cc = c; cc < cols; ++cc) m[rr][cc] = m[rr][cc] * f1 - m[r][cc] * f2;
        }
        ++r;
    }
    return int(r);
}

}  // namespace rigidbound

#endif
