#pragma once

#include <vector>

#include "skq/gf.hpp"

namespace skq {

/// Univariate polynomial over F_q, coefficients ascending, any degree
/// (character-sum inputs like aX^3+bX over tiny fields keep their formal
/// degree; graph specs impose degree <= q-1 separately).
/// The zero polynomial has empty coefficient list (degree() == -1).
class Poly {
public:
    Poly() : field_(nullptr) {}
    Poly(const FiniteField& field, std::vector<Fq> coeffs);

    /// X^d with coefficient c (c defaults to 1).
    static Poly monomial(const FiniteField& field, unsigned d, Fq c = 1);

    const FiniteField& field() const { return *field_; }
    const std::vector<Fq>& coeffs() const { return coeffs_; }

    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const { return coeffs_.empty(); }

    /// Coefficient of X^d (0 beyond the stored range).
    Fq coeff(unsigned d) const {
        return d < coeffs_.size() ? coeffs_[d] : 0;
    }

    Fq eval(Fq x) const;  // Horner

    /// Coefficient-level oddness: every even-degree coefficient (including
    /// the constant term) is zero. Vacuously interesting in char 2, where
    /// the caller should not rely on it.
    bool is_odd_polynomial() const;

    Poly operator+(const Poly& other) const;
    Poly scaled(Fq c) const;

    bool operator==(const Poly& other) const {
        return coeffs_ == other.coeffs_;
    }

private:
    const FiniteField* field_;
    std::vector<Fq> coeffs_;
};

}  // namespace skq
