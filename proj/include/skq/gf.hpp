#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "skq/errors.hpp"

namespace skq {

/// Canonical encoding of a field element: sum coords[i] * p^i, in [0, q).
using Fq = std::uint32_t;

/// Arithmetic context for F_q = F_p[X]/(m(X)), q = p^e.
///
/// The modulus is the lexicographically smallest monic irreducible polynomial
/// of degree e over F_p (coefficients compared low-degree-first), so element
/// encodings are reproducible across runs. Elements are passed around as their
/// canonical integer encodings; the field object supplies all operations.
/// Immutable after construction.
class FiniteField {
public:
    static constexpr std::uint64_t kDefaultSizeCap = 16384;

    FiniteField(std::uint64_t p, unsigned e,
                std::uint64_t size_cap = kDefaultSizeCap);

    std::uint64_t p() const { return p_; }
    unsigned e() const { return e_; }
    std::uint64_t q() const { return q_; }

    /// Modulus coefficients c_0..c_e, ascending, monic. For e = 1 this is
    /// {0, 1} (X), but prime fields use direct mod-p arithmetic.
    const std::vector<Fq>& modulus() const { return modulus_; }

    Fq add(Fq x, Fq y) const;
    Fq sub(Fq x, Fq y) const;
    Fq neg(Fq x) const;
    Fq mul(Fq x, Fq y) const;
    Fq inv(Fq x) const;      // throws DivisionByZeroError on 0
    Fq pow(Fq x, std::uint64_t n) const;
    Fq frobenius(Fq x, unsigned i) const;  // x^(p^i)

    /// Tr(x) = x + x^p + ... + x^(p^(e-1)), as an integer in [0, p).
    std::uint32_t trace(Fq x) const { return trace_[x]; }

    /// Residue-class coefficients of x, ascending degree, length e.
    std::vector<Fq> coords(Fq x) const;
    Fq from_coords(const std::vector<Fq>& c) const;

    /// Residue class of X itself (zero in a prime field).
    Fq generator_of_extension() const { return e_ == 1 ? 0 : p_ % q_; }

    bool same_field(const FiniteField& other) const {
        return p_ == other.p_ && modulus_ == other.modulus_;
    }

private:
    std::uint64_t p_;
    unsigned e_;
    std::uint64_t q_;
    std::vector<Fq> modulus_;

    // Discrete log tables over a fixed generator; mul/inv/pow run off these.
    std::vector<Fq> exp_;          // size q-1, exp_[i] = g^i
    std::vector<std::uint32_t> log_;  // size q, log_[exp_[i]] = i
    std::vector<std::uint32_t> trace_;

    Fq mul_slow(Fq x, Fq y) const;  // polynomial mul mod modulus
    void build_tables();
};

bool is_prime(std::uint64_t n);

/// Factor q = p^e with p prime; throws NonPrimeError if q is not a prime
/// power.
std::pair<std::uint64_t, unsigned> factor_prime_power(std::uint64_t q);

}  // namespace skq
