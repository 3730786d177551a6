#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "skq/errors.hpp"

namespace skq {

/// Exact element of Z[zeta_p] in the power basis {1, zeta, ..., zeta^(p-2)}.
///
/// Any occurrence of zeta^(p-1) is eliminated at construction via
/// 1 + zeta + ... + zeta^(p-1) = 0, so equality is plain coefficient
/// equality. Eigenvalues and exponential sums live here; doubles appear
/// only in the reporting embeddings.
class CycInt {
public:
    explicit CycInt(std::uint32_t p) : p_(p), coeffs_(p - 1, 0) {}

    /// Sum over residue classes: counts[j] copies of zeta^j, 0 <= j < p.
    static CycInt from_counts(std::uint32_t p,
                              const std::vector<std::int64_t>& counts);
    static CycInt integer(std::uint32_t p, std::int64_t n);
    static CycInt zeta_pow(std::uint32_t p, std::uint32_t beta);

    std::uint32_t p() const { return p_; }
    const std::vector<std::int64_t>& coeffs() const { return coeffs_; }

    CycInt operator+(const CycInt& o) const;
    CycInt operator-(const CycInt& o) const;
    CycInt operator*(const CycInt& o) const;
    CycInt operator*(std::int64_t n) const;
    CycInt& operator+=(const CycInt& o);

    /// Image under zeta -> zeta^(-1).
    CycInt conjugate() const;

    bool is_real() const { return *this == conjugate(); }
    bool is_integer(std::int64_t n) const;

    /// Real part sum a_j cos(2 pi j / p), compensated summation. Requires
    /// is_real(); throws NotRealError otherwise. Ordering/reporting only.
    double real_embed() const;

    /// (re, im) embedding, no realness requirement.
    std::pair<double, double> complex_embed() const;

    bool operator==(const CycInt& o) const {
        return p_ == o.p_ && coeffs_ == o.coeffs_;
    }
    bool operator!=(const CycInt& o) const { return !(*this == o); }

    /// Coefficient-lexicographic order; tie-breaker for sorting.
    bool lex_less(const CycInt& o) const { return coeffs_ < o.coeffs_; }

private:
    std::uint32_t p_;
    std::vector<std::int64_t> coeffs_;
};

}  // namespace skq
