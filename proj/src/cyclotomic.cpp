#include "skq/cyclotomic.hpp"

#include <cmath>
#include <numbers>

namespace skq {

CycInt CycInt::from_counts(std::uint32_t p,
                           const std::vector<std::int64_t>& counts) {
    CycInt r(p);
    // zeta^(p-1) = -(1 + zeta + ... + zeta^(p-2))
    std::int64_t top = counts.size() >= p ? counts[p - 1] : 0;
    for (std::uint32_t j = 0; j + 1 < p; ++j)
        r.coeffs_[j] = (j < counts.size() ? counts[j] : 0) - top;
    return r;
}

CycInt CycInt::integer(std::uint32_t p, std::int64_t n) {
    CycInt r(p);
    r.coeffs_[0] = n;
    return r;
}

CycInt CycInt::zeta_pow(std::uint32_t p, std::uint32_t beta) {
    std::vector<std::int64_t> counts(p, 0);
    counts[beta % p] = 1;
    return from_counts(p, counts);
}

CycInt CycInt::operator+(const CycInt& o) const {
    CycInt r = *this;
    r += o;
    return r;
}

CycInt& CycInt::operator+=(const CycInt& o) {
    if (p_ != o.p_) throw Error("cyclotomic order mismatch");
    for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
    return *this;
}

CycInt CycInt::operator-(const CycInt& o) const {
    if (p_ != o.p_) throw Error("cyclotomic order mismatch");
    CycInt r = *this;
    for (std::size_t i = 0; i < coeffs_.size(); ++i) r.coeffs_[i] -= o.coeffs_[i];
    return r;
}

CycInt CycInt::operator*(const CycInt& o) const {
    if (p_ != o.p_) throw Error("cyclotomic order mismatch");
    std::vector<std::int64_t> counts(p_, 0);
    for (std::uint32_t i = 0; i + 1 < p_; ++i) {
        if (coeffs_[i] == 0) continue;
        for (std::uint32_t j = 0; j + 1 < p_; ++j)
            counts[(i + j) % p_] += coeffs_[i] * o.coeffs_[j];
    }
    return from_counts(p_, counts);
}

CycInt CycInt::operator*(std::int64_t n) const {
    CycInt r = *this;
    for (auto& c : r.coeffs_) c *= n;
    return r;
}

CycInt CycInt::conjugate() const {
    std::vector<std::int64_t> counts(p_, 0);
    for (std::uint32_t j = 0; j + 1 < p_; ++j)
        counts[(p_ - j) % p_] += coeffs_[j];
    return from_counts(p_, counts);
}

bool CycInt::is_integer(std::int64_t n) const {
    if (coeffs_[0] != n) return false;
    for (std::size_t i = 1; i < coeffs_.size(); ++i)
        if (coeffs_[i] != 0) return false;
    return true;
}

namespace {

// Kahan-compensated dot with cos/sin of 2 pi j / p.
double compensated_sum(const std::vector<std::int64_t>& a, std::uint32_t p,
                       bool imaginary) {
    double sum = 0.0, comp = 0.0;
    for (std::size_t j = 0; j < a.size(); ++j) {
        if (a[j] == 0) continue;
        double angle = 2.0 * std::numbers::pi * double(j) / double(p);
        double term = double(a[j]) * (imaginary ? std::sin(angle) : std::cos(angle));
        double y = term - comp;
        double t = sum + y;
        comp = (t - sum) - y;
        sum = t;
    }
    return sum;
}

}  // namespace

double CycInt::real_embed() const {
    if (!is_real()) throw NotRealError();
    return compensated_sum(coeffs_, p_, false);
}

std::pair<double, double> CycInt::complex_embed() const {
    return {compensated_sum(coeffs_, p_, false),
            compensated_sum(coeffs_, p_, true)};
}

}  // namespace skq
