#include "skq/poly.hpp"

namespace skq {

Poly::Poly(const FiniteField& field, std::vector<Fq> coeffs)
    : field_(&field), coeffs_(std::move(coeffs)) {
    for (Fq c : coeffs_)
        if (c >= field.q()) throw Error("polynomial coefficient out of range");
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Poly Poly::monomial(const FiniteField& field, unsigned d, Fq c) {
    std::vector<Fq> coeffs(d + 1, 0);
    coeffs[d] = c;
    return Poly(field, std::move(coeffs));
}

Fq Poly::eval(Fq x) const {
    Fq acc = 0;
    for (std::size_t i = coeffs_.size(); i-- > 0;)
        acc = field_->add(field_->mul(acc, x), coeffs_[i]);
    return acc;
}

bool Poly::is_odd_polynomial() const {
    for (std::size_t d = 0; d < coeffs_.size(); d += 2)
        if (coeffs_[d] != 0) return false;
    return true;
}

Poly Poly::operator+(const Poly& other) const {
    if (!field_->same_field(*other.field_)) throw FieldMismatchError();
    std::vector<Fq> c(std::max(coeffs_.size(), other.coeffs_.size()), 0);
    for (std::size_t i = 0; i < c.size(); ++i)
        c[i] = field_->add(coeff(static_cast<unsigned>(i)),
                           other.coeff(static_cast<unsigned>(i)));
    return Poly(*field_, std::move(c));
}

Poly Poly::scaled(Fq c) const {
    std::vector<Fq> out(coeffs_.size());
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
        out[i] = field_->mul(coeffs_[i], c);
    return Poly(*field_, std::move(out));
}

}  // namespace skq
