#include "skq/gf.hpp"

#include <algorithm>
#include <cstdint>

namespace skq {

std::pair<std::uint64_t, unsigned> factor_prime_power(std::uint64_t q) {
    if (q < 2) throw NonPrimeError(q);
    std::uint64_t p = q;
    for (std::uint64_t d = 2; d * d <= q; ++d)
        if (q % d == 0) {
            p = d;
            break;
        }
    unsigned e = 0;
    std::uint64_t r = q;
    while (r % p == 0) {
        r /= p;
        ++e;
    }
    if (r != 1) throw NonPrimeError(q);
    return {p, e};
}

bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

namespace {

using PolyP = std::vector<std::uint32_t>;  // over F_p, ascending, trimmed

void trim(PolyP& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

PolyP poly_mod(PolyP a, const PolyP& m, std::uint64_t p) {
    // m monic
    while (a.size() >= m.size()) {
        std::uint64_t lead = a.back();
        std::size_t shift = a.size() - m.size();
        for (std::size_t i = 0; i < m.size(); ++i) {
            std::uint64_t t = a[shift + i] + (p - (lead * m[i]) % p) % p;
            a[shift + i] = static_cast<std::uint32_t>(t % p);
        }
        trim(a);
    }
    return a;
}

PolyP poly_mulmod(const PolyP& a, const PolyP& b, const PolyP& m,
                  std::uint64_t p) {
    if (a.empty() || b.empty()) return {};
    PolyP c(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j)
            c[i + j] = static_cast<std::uint32_t>(
                (c[i + j] + std::uint64_t(a[i]) * b[j]) % p);
    return poly_mod(std::move(c), m, p);
}

PolyP poly_powmod_x(std::uint64_t n, const PolyP& m, std::uint64_t p) {
    // X^n mod m
    PolyP result{1};
    PolyP base{0, 1};
    base = poly_mod(base, m, p);
    while (n > 0) {
        if (n & 1) result = poly_mulmod(result, base, m, p);
        base = poly_mulmod(base, base, m, p);
        n >>= 1;
    }
    return result;
}

PolyP poly_gcd(PolyP a, PolyP b, std::uint64_t p) {
    auto inv_mod_p = [p](std::uint64_t x) {
        // p prime, x != 0
        std::uint64_t r = 1, base = x % p, n = p - 2;
        while (n > 0) {
            if (n & 1) r = r * base % p;
            base = base * base % p;
            n >>= 1;
        }
        return r;
    };
    trim(a);
    trim(b);
    while (!b.empty()) {
        // a mod b with b made monic
        std::uint64_t li = inv_mod_p(b.back());
        PolyP bm = b;
        for (auto& c : bm) c = static_cast<std::uint32_t>(c * li % p);
        a = poly_mod(std::move(a), bm, p);
        std::swap(a, b);
    }
    return a;
}

bool is_irreducible(const PolyP& m, std::uint64_t p) {
    unsigned e = static_cast<unsigned>(m.size() - 1);
    if (e == 0) return false;
    if (e == 1) return true;
    if (e <= 3) {
        // degree 2 or 3: irreducible iff no roots in F_p
        for (std::uint64_t r = 0; r < p; ++r) {
            std::uint64_t v = 0;
            for (std::size_t i = m.size(); i-- > 0;) v = (v * r + m[i]) % p;
            if (v == 0) return false;
        }
        return true;
    }
    // no irreducible factor of degree <= e/2: gcd(m, X^(p^i) - X) = 1
    for (unsigned i = 1; i <= e / 2; ++i) {
        std::uint64_t n = 1;
        for (unsigned j = 0; j < i; ++j) n *= p;
        PolyP xpow = poly_powmod_x(n, m, p);
        // xpow - X
        if (xpow.size() < 2) xpow.resize(2, 0);
        xpow[1] = static_cast<std::uint32_t>((xpow[1] + p - 1) % p);
        trim(xpow);
        PolyP g = poly_gcd(m, xpow, p);
        if (g.size() != 1) return false;
    }
    return true;
}

PolyP smallest_irreducible(std::uint64_t p, unsigned e) {
    // monic degree-e polys enumerated by coefficient sequence (c_0,...,c_{e-1})
    // in lexicographic order, c_0 most significant
    std::vector<std::uint32_t> c(e, 0);
    for (;;) {
        PolyP m(c.begin(), c.end());
        m.push_back(1);
        if (is_irreducible(m, p)) return m;
        // increment low-significance end first so (c_0,...) stays lex-ordered
        int i = static_cast<int>(e) - 1;
        while (i >= 0 && c[i] == p - 1) c[i--] = 0;
        if (i < 0) throw Error("no irreducible polynomial found");  // unreachable
        ++c[i];
    }
}

}  // namespace

FiniteField::FiniteField(std::uint64_t p, unsigned e, std::uint64_t size_cap)
    : p_(p), e_(e) {
    if (!is_prime(p)) throw NonPrimeError(p);
    if (e < 1) throw Error("extension degree must be positive");
    q_ = 1;
    for (unsigned i = 0; i < e; ++i) {
        q_ *= p;
        if (q_ > size_cap)
            throw SizeExceededError("field order exceeds size cap " +
                                    std::to_string(size_cap));
    }
    if (e == 1) {
        modulus_ = {0, 1};  // X
    } else {
        auto m = smallest_irreducible(p, e);
        modulus_.assign(m.begin(), m.end());
    }
    build_tables();
}

Fq FiniteField::add(Fq x, Fq y) const {
    if (e_ == 1) return static_cast<Fq>((std::uint64_t(x) + y) % p_);
    Fq r = 0;
    std::uint64_t scale = 1;
    for (unsigned i = 0; i < e_; ++i) {
        std::uint64_t d = (x % p_ + y % p_) % p_;
        r += static_cast<Fq>(d * scale);
        x /= static_cast<Fq>(p_);
        y /= static_cast<Fq>(p_);
        scale *= p_;
    }
    return r;
}

Fq FiniteField::neg(Fq x) const {
    if (e_ == 1) return static_cast<Fq>((p_ - x) % p_);
    Fq r = 0;
    std::uint64_t scale = 1;
    for (unsigned i = 0; i < e_; ++i) {
        std::uint64_t d = (p_ - x % p_) % p_;
        r += static_cast<Fq>(d * scale);
        x /= static_cast<Fq>(p_);
        scale *= p_;
    }
    return r;
}

Fq FiniteField::sub(Fq x, Fq y) const { return add(x, neg(y)); }

Fq FiniteField::mul(Fq x, Fq y) const {
    if (x == 0 || y == 0) return 0;
    return exp_[(std::uint64_t(log_[x]) + log_[y]) % (q_ - 1)];
}

Fq FiniteField::inv(Fq x) const {
    if (x == 0) throw DivisionByZeroError();
    return exp_[(q_ - 1 - log_[x]) % (q_ - 1)];
}

Fq FiniteField::pow(Fq x, std::uint64_t n) const {
    if (x == 0) return n == 0 ? 1 : 0;
    return exp_[(std::uint64_t(log_[x]) % (q_ - 1)) * (n % (q_ - 1)) % (q_ - 1)];
}

Fq FiniteField::frobenius(Fq x, unsigned i) const {
    Fq r = x;
    for (unsigned j = 0; j < i % e_; ++j) r = pow(r, p_);
    return r;
}

std::vector<Fq> FiniteField::coords(Fq x) const {
    std::vector<Fq> c(e_);
    for (unsigned i = 0; i < e_; ++i) {
        c[i] = static_cast<Fq>(x % p_);
        x /= static_cast<Fq>(p_);
    }
    return c;
}

Fq FiniteField::from_coords(const std::vector<Fq>& c) const {
    if (c.size() != e_) throw Error("coordinate length mismatch");
    Fq r = 0;
    std::uint64_t scale = 1;
    for (unsigned i = 0; i < e_; ++i) {
        if (c[i] >= p_) throw Error("coordinate out of range");
        r += static_cast<Fq>(c[i] * scale);
        scale *= p_;
    }
    return r;
}

Fq FiniteField::mul_slow(Fq x, Fq y) const {
    if (e_ == 1) return static_cast<Fq>(std::uint64_t(x) * y % p_);
    auto a = coords(x);
    auto b = coords(y);
    std::vector<std::uint32_t> c(2 * e_ - 1, 0);
    for (unsigned i = 0; i < e_; ++i)
        for (unsigned j = 0; j < e_; ++j)
            c[i + j] = static_cast<std::uint32_t>(
                (c[i + j] + std::uint64_t(a[i]) * b[j]) % p_);
    // reduce mod modulus (monic degree e)
    for (std::size_t d = c.size(); d-- > e_;) {
        std::uint64_t lead = c[d];
        if (lead == 0) continue;
        c[d] = 0;
        for (unsigned i = 0; i < e_; ++i) {
            std::uint64_t t =
                c[d - e_ + i] + (p_ - lead * modulus_[i] % p_) % p_ * 1ull;
            c[d - e_ + i] = static_cast<std::uint32_t>(t % p_);
        }
    }
    std::vector<Fq> cc(c.begin(), c.begin() + e_);
    return from_coords(cc);
}

void FiniteField::build_tables() {
    exp_.assign(q_ - 1, 0);
    log_.assign(q_, 0);
    // find a multiplicative generator by direct order check
    bool found = false;
    for (Fq g = 1; g < q_ && !found; ++g) {
        Fq x = 1;
        bool ok = true;
        for (std::uint64_t i = 0; i < q_ - 1; ++i) {
            if (x == 1 && i > 0) {
                ok = false;
                break;
            }
            exp_[i] = x;
            x = mul_slow(x, g);
        }
        if (ok && x == 1) {
            found = true;
            for (std::uint64_t j = 0; j < q_ - 1; ++j)
                log_[exp_[j]] = static_cast<std::uint32_t>(j);
        }
    }
    if (!found) throw Error("no multiplicative generator found");

    trace_.assign(q_, 0);
    if (e_ == 1) {
        for (Fq x = 0; x < q_; ++x) trace_[x] = x;
        return;
    }
    for (Fq x = 0; x < q_; ++x) {
        Fq t = 0;
        Fq y = x;
        for (unsigned i = 0; i < e_; ++i) {
            t = add(t, y);
            y = y == 0 ? 0 : exp_[std::uint64_t(log_[y]) * (p_ % (q_ - 1)) % (q_ - 1)];
        }
        if (t >= p_) throw Error("trace left the prime subfield");
        trace_[x] = t;
    }
}

}  // namespace skq
