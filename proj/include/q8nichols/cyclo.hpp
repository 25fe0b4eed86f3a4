#pragma once

// Exact arithmetic in a fixed cyclotomic field Q(zeta_m).
//
// A value is a rational-coefficient vector of length phi(m) over the power
// basis 1, z, ..., z^{phi(m)-1}, reduced modulo the m-th cyclotomic
// polynomial Phi_m. Reduction modulo Phi_m (not x^m - 1) makes equality a
// plain coefficient comparison. The modulus is fixed per computation
// context; mixing moduli throws rather than coercing.
//
// Text form: `term (± term)*` with term = `[rational][*]z<m>^<k>` or a bare
// rational, e.g. "z4^1", "1/2 + 1/2*z4^2", "-3". For even m the formatter
// keeps printed coefficients positive by using z^{k+m/2} = -z^k.

#include <gmpxx.h>

#include <algorithm>
#include <cstddef>
#include <map>
#include <mutex>
#include <numeric>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "q8nichols/error.hpp"
#include "q8nichols/rational.hpp"

namespace q8n {

namespace detail {

// Ascending-coefficient integer polynomials; leading zeros allowed.
using ZPoly = std::vector<mpz_class>;

inline std::size_t zdegree(const ZPoly& p) {
    std::size_t d = p.size();
    while (d > 0 && p[d - 1] == 0) --d;
    return d == 0 ? 0 : d - 1; // degree of the zero polynomial reported as 0
}

// Exact division by a monic divisor over Z. Remainder must vanish.
inline ZPoly zdiv_exact_monic(ZPoly num, const ZPoly& den) {
    std::size_t dd = zdegree(den);
    std::size_t dn = zdegree(num);
    ZPoly quot(dn >= dd ? dn - dd + 1 : 1, 0);
    for (std::size_t k = dn + 1; k-- > dd;) {
        mpz_class c = num[k];
        if (c == 0) continue;
        quot[k - dd] = c;
        for (std::size_t j = 0; j <= dd; ++j) num[k - dd + j] -= c * den[j];
    }
    for (const auto& c : num)
        if (c != 0) throw Error("internal: cyclotomic polynomial division not exact");
    return quot;
}

struct CycContext {
    unsigned m = 1;
    unsigned phi = 1;       // degree of Phi_m = basis length
    ZPoly min_poly;         // Phi_m, monic, ascending, length phi+1
    // x^{phi+j} reduced to the basis, for all exponents that arise in a
    // product of two reduced values or a conjugation (up to max(2phi-2, m-1)).
    std::vector<std::vector<mpz_class>> pow_red;
};

inline const CycContext& cyc_context(unsigned m) {
    static std::mutex mu;
    static std::map<unsigned, CycContext> cache;
    std::lock_guard<std::mutex> lock(mu);

    // Phi_m for all divisors of m may be needed; compute recursively via
    // x^d - 1 = prod_{e | d} Phi_e.
    auto compute = [&](auto&& self, unsigned d) -> const CycContext& {
        auto it = cache.find(d);
        if (it != cache.end()) return it->second;
        ZPoly poly(d + 1, 0);
        poly[0] = -1;
        poly[d] = 1; // x^d - 1
        for (unsigned e = 1; e < d; ++e)
            if (d % e == 0) poly = zdiv_exact_monic(std::move(poly), self(self, e).min_poly);

        CycContext ctx;
        ctx.m = d;
        ctx.phi = static_cast<unsigned>(zdegree(poly));
        if (ctx.phi == 0) ctx.phi = 1; // d = 1: Phi_1 = x - 1, basis {1}
        ctx.min_poly = std::move(poly);

        unsigned top = std::max(2 * ctx.phi >= 2 ? 2 * ctx.phi - 2 : 0, d - 1);
        if (top >= ctx.phi) {
            std::vector<mpz_class> row(ctx.phi);
            for (unsigned j = 0; j < ctx.phi; ++j) row[j] = -ctx.min_poly[j]; // x^phi
            ctx.pow_red.push_back(row);
            for (unsigned k = ctx.phi + 1; k <= top; ++k) {
                std::vector<mpz_class> next(ctx.phi, 0);
                for (unsigned j = 0; j + 1 < ctx.phi; ++j) next[j + 1] = row[j];
                const mpz_class& carry = row[ctx.phi - 1];
                if (carry != 0)
                    for (unsigned j = 0; j < ctx.phi; ++j)
                        next[j] -= carry * ctx.min_poly[j];
                ctx.pow_red.push_back(next);
                row = std::move(next);
            }
        }
        return cache.emplace(d, std::move(ctx)).first->second;
    };
    if (m == 0) throw Error("cyclotomic modulus must be positive");
    return compute(compute, m);
}

// Polynomials over Q for the extended-gcd inverse.
using QPoly = std::vector<mpq_class>;

inline std::size_t qlen(const QPoly& p) {
    std::size_t d = p.size();
    while (d > 0 && p[d - 1] == 0) --d;
    return d;
}

inline QPoly qdivmod(QPoly& rem, const QPoly& den) {
    std::size_t ld = qlen(den);
    QPoly quot;
    std::size_t lr = qlen(rem);
    if (lr >= ld) quot.assign(lr - ld + 1, 0);
    while ((lr = qlen(rem)) >= ld && lr > 0) {
        mpq_class c = rem[lr - 1] / den[ld - 1];
        quot[lr - ld] = c;
        for (std::size_t j = 0; j < ld; ++j) rem[lr - ld + j] -= c * den[j];
        rem[lr - 1] = 0;
    }
    return quot;
}

} // namespace detail

class CycNum {
public:
    CycNum() : m_(1), c_(1, mpq_class(0)) {}

    static CycNum zero(unsigned m) { return CycNum(m); }

    static CycNum one(unsigned m) {
        CycNum r(m);
        r.c_[0] = 1;
        return r;
    }

    static CycNum from_rational(unsigned m, const mpq_class& q) {
        CycNum r(m);
        r.c_[0] = q;
        return r;
    }

    static CycNum from_int(unsigned m, long v) { return from_rational(m, mpq_class(v)); }

    /// zeta_m^k for any integer k (reduced mod m).
    static CycNum zeta(unsigned m, long k = 1) {
        const auto& ctx = detail::cyc_context(m);
        long e = k % static_cast<long>(m);
        if (e < 0) e += m;
        CycNum r(m);
        if (static_cast<unsigned>(e) < ctx.phi) {
            r.c_[static_cast<std::size_t>(e)] = 1;
        } else {
            const auto& row = ctx.pow_red[static_cast<std::size_t>(e) - ctx.phi];
            for (unsigned j = 0; j < ctx.phi; ++j) r.c_[j] = mpq_class(row[j]);
        }
        return r;
    }

    unsigned modulus() const { return m_; }
    const std::vector<mpq_class>& coeffs() const { return c_; }

    bool is_zero() const {
        for (const auto& c : c_)
            if (c != 0) return false;
        return true;
    }

    bool is_one() const { return is_rational() && c_[0] == 1; }

    bool is_rational() const {
        for (std::size_t i = 1; i < c_.size(); ++i)
            if (c_[i] != 0) return false;
        return true;
    }

    const mpq_class& rational_part() const { return c_[0]; }

    friend CycNum operator+(const CycNum& a, const CycNum& b) {
        a.require_same(b);
        CycNum r = a;
        for (std::size_t i = 0; i < r.c_.size(); ++i) r.c_[i] += b.c_[i];
        return r;
    }

    friend CycNum operator-(const CycNum& a, const CycNum& b) {
        a.require_same(b);
        CycNum r = a;
        for (std::size_t i = 0; i < r.c_.size(); ++i) r.c_[i] -= b.c_[i];
        return r;
    }

    CycNum operator-() const {
        CycNum r = *this;
        for (auto& c : r.c_) c = -c;
        return r;
    }

    friend CycNum operator*(const CycNum& a, const CycNum& b) {
        a.require_same(b);
        const auto& ctx = detail::cyc_context(a.m_);
        std::size_t n = ctx.phi;
        std::vector<mpq_class> conv(2 * n - 1, mpq_class(0));
        for (std::size_t i = 0; i < n; ++i) {
            if (a.c_[i] == 0) continue;
            for (std::size_t j = 0; j < n; ++j) {
                if (b.c_[j] == 0) continue;
                conv[i + j] += a.c_[i] * b.c_[j];
            }
        }
        CycNum r(a.m_);
        for (std::size_t k = 0; k < n; ++k) r.c_[k] = conv[k];
        for (std::size_t k = 2 * n - 2; k >= n && k != static_cast<std::size_t>(-1); --k) {
            if (conv[k] == 0) continue;
            const auto& row = ctx.pow_red[k - n];
            for (std::size_t j = 0; j < n; ++j)
                if (row[j] != 0) r.c_[j] += conv[k] * mpq_class(row[j]);
            if (k == n) break;
        }
        return r;
    }

    friend CycNum operator/(const CycNum& a, const CycNum& b) { return a * b.inverse(); }

    CycNum& operator+=(const CycNum& o) { return *this = *this + o; }
    CycNum& operator-=(const CycNum& o) { return *this = *this - o; }
    CycNum& operator*=(const CycNum& o) { return *this = *this * o; }
    CycNum& operator/=(const CycNum& o) { return *this = *this / o; }

    CycNum scaled(const mpq_class& s) const {
        CycNum r = *this;
        for (auto& c : r.c_) c *= s;
        return r;
    }

    /// Multiplicative inverse via extended gcd with Phi_m in Q[x].
    CycNum inverse() const {
        if (is_zero()) throw Error("division by zero in Q(zeta_" + std::to_string(m_) + ")");
        if (is_rational()) return from_rational(m_, 1 / c_[0]);
        const auto& ctx = detail::cyc_context(m_);
        detail::QPoly r0(ctx.min_poly.size());
        for (std::size_t i = 0; i < ctx.min_poly.size(); ++i) r0[i] = mpq_class(ctx.min_poly[i]);
        detail::QPoly r1(c_.begin(), c_.end());
        detail::QPoly s0{mpq_class(0)}, s1{mpq_class(1)}; // coefficients of this value
        while (detail::qlen(r1) > 0) {
            detail::QPoly rem = r0;
            detail::QPoly q = detail::qdivmod(rem, r1);
            // s_next = s0 - q*s1
            detail::QPoly snext(std::max(detail::qlen(s0), detail::qlen(q) + detail::qlen(s1)), 0);
            for (std::size_t i = 0; i < detail::qlen(s0); ++i) snext[i] = s0[i];
            for (std::size_t i = 0; i < detail::qlen(q); ++i)
                for (std::size_t j = 0; j < detail::qlen(s1); ++j) snext[i + j] -= q[i] * s1[j];
            r0 = std::move(r1);
            r1 = std::move(rem);
            s0 = std::move(s1);
            s1 = std::move(snext);
        }
        // r0 is the gcd; Phi_m irreducible and value nonzero, so deg r0 = 0.
        if (detail::qlen(r0) != 1)
            throw Error("internal: inverse gcd degree > 0 in Q(zeta_" + std::to_string(m_) + ")");
        CycNum inv(m_);
        mpq_class unit = r0[0];
        for (std::size_t i = 0; i < detail::qlen(s0) && i < inv.c_.size(); ++i)
            inv.c_[i] = s0[i] / unit;
        return inv;
    }

    CycNum pow(long e) const {
        if (e < 0) return inverse().pow(-e);
        CycNum acc = one(m_);
        CycNum base = *this;
        unsigned long k = static_cast<unsigned long>(e);
        while (k) {
            if (k & 1UL) acc *= base;
            base *= base;
            k >>= 1;
        }
        return acc;
    }

    /// Complex conjugation, zeta |-> zeta^{-1}. Exact Galois map.
    CycNum conj() const {
        CycNum r = zero(m_);
        for (std::size_t k = 0; k < c_.size(); ++k) {
            if (c_[k] == 0) continue;
            r += zeta(m_, -static_cast<long>(k)).scaled(c_[k]);
        }
        return r;
    }

    friend bool operator==(const CycNum& a, const CycNum& b) {
        a.require_same(b);
        return a.c_ == b.c_;
    }
    friend bool operator!=(const CycNum& a, const CycNum& b) { return !(a == b); }

    std::string str() const;
    static CycNum parse(std::string_view text, unsigned m);

private:
    explicit CycNum(unsigned m) : m_(m), c_(detail::cyc_context(m).phi, mpq_class(0)) {}

    void require_same(const CycNum& o) const {
        if (m_ != o.m_)
            throw ModulusMismatch("cyclotomic modulus mismatch: z" + std::to_string(m_) +
                                  " vs z" + std::to_string(o.m_));
    }

    unsigned m_;
    std::vector<mpq_class> c_;
};

/// Least k >= 1 with a^k = 1, or nullopt if a is not a root of unity.
/// Any root of unity in Q(zeta_m) has order dividing lcm(2, m), so the
/// search is bounded.
inline std::optional<unsigned> root_order(const CycNum& a) {
    unsigned m = a.modulus();
    unsigned bound = (m % 2 == 0) ? m : 2 * m;
    CycNum p = a;
    for (unsigned k = 1; k <= bound; ++k) {
        if (p.is_one()) return k;
        if (k < bound) p *= a;
    }
    return std::nullopt;
}

inline std::string CycNum::str() const {
    // Terms (exponent, coefficient); for even m a negative coefficient is
    // folded into the exponent via -z^k = z^{k+m/2}.
    std::vector<std::pair<unsigned, mpq_class>> terms;
    for (std::size_t k = 0; k < c_.size(); ++k) {
        if (c_[k] == 0) continue;
        if (m_ % 2 == 0 && c_[k] < 0)
            terms.emplace_back(static_cast<unsigned>(k) + m_ / 2, -c_[k]);
        else
            terms.emplace_back(static_cast<unsigned>(k), c_[k]);
    }
    if (terms.empty()) return "0";
    std::sort(terms.begin(), terms.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    std::ostringstream out;
    bool first = true;
    for (const auto& [k, c] : terms) {
        mpq_class a = c < 0 ? mpq_class(-c) : c;
        if (first) {
            if (c < 0) out << "-";
            first = false;
        } else {
            out << (c < 0 ? " - " : " + ");
        }
        if (k == 0) {
            out << format_rational(a);
        } else {
            if (a != 1) out << format_rational(a) << "*";
            out << "z" << m_ << "^" << k;
        }
    }
    return out.str();
}

inline CycNum CycNum::parse(std::string_view text, unsigned m) {
    const auto& ctx = detail::cyc_context(m);
    (void)ctx;
    std::size_t pos = 0;
    auto skip_ws = [&] {
        while (pos < text.size() && (text[pos] == ' ' || text[pos] == '\t')) ++pos;
    };

    CycNum acc = CycNum::zero(m);
    skip_ws();
    if (pos == text.size()) throw ParseError("empty cyclotomic literal", pos);

    bool expect_term = true;
    int sign = 1;
    if (text[pos] == '+' || text[pos] == '-') {
        sign = text[pos] == '-' ? -1 : 1;
        ++pos;
        skip_ws();
    }
    while (expect_term) {
        // term := [rational]['*'] zpart | rational
        mpq_class coef(1);
        bool have_coef = false;
        if (pos < text.size() && is_digit(text[pos])) {
            coef = parse_rational_at(text, pos);
            have_coef = true;
            skip_ws();
            if (pos < text.size() && text[pos] == '*') {
                ++pos;
                skip_ws();
                if (pos >= text.size() || text[pos] != 'z')
                    throw ParseError("expected z<m>^<k> after '*'", pos);
            }
        }
        CycNum term = CycNum::zero(m);
        if (pos < text.size() && text[pos] == 'z') {
            std::size_t zpos = pos;
            ++pos;
            if (pos >= text.size() || !is_digit(text[pos]))
                throw ParseError("expected modulus digits after 'z'", pos);
            unsigned long mod = 0;
            while (pos < text.size() && is_digit(text[pos])) mod = mod * 10 + (text[pos++] - '0');
            if (mod != m)
                throw ParseError("modulus z" + std::to_string(mod) + " does not match context z" +
                                     std::to_string(m),
                                 zpos);
            if (pos >= text.size() || text[pos] != '^')
                throw ParseError("expected '^' in z-term", pos);
            ++pos;
            if (pos >= text.size() || !is_digit(text[pos]))
                throw ParseError("expected exponent digits after '^'", pos);
            std::size_t epos = pos;
            unsigned long exp = 0;
            while (pos < text.size() && is_digit(text[pos])) exp = exp * 10 + (text[pos++] - '0');
            if (exp >= m)
                throw ParseError("exponent " + std::to_string(exp) + " out of range [0, " +
                                     std::to_string(m) + ")",
                                 epos);
            term = CycNum::zeta(m, static_cast<long>(exp)).scaled(coef);
        } else if (have_coef) {
            term = CycNum::from_rational(m, coef);
        } else {
            throw ParseError("expected a term", pos);
        }
        if (sign < 0) term = -term;
        acc += term;

        skip_ws();
        if (pos == text.size()) break;
        if (text[pos] == '+' || text[pos] == '-') {
            sign = text[pos] == '-' ? -1 : 1;
            ++pos;
            skip_ws();
        } else {
            throw ParseError("expected '+', '-' or end of input", pos);
        }
    }
    return acc;
}

} // namespace q8n
