#include "skq/charsum.hpp"

#include <cmath>
#include <numeric>

namespace skq {

ExpSumResult exp_sum(const Poly& f) {
    const FiniteField& F = f.field();
    std::uint32_t p = static_cast<std::uint32_t>(F.p());
    std::vector<std::int64_t> counts(p, 0);
    for (Fq x = 0; x < F.q(); ++x) ++counts[F.trace(f.eval(x))];
    CycInt v = CycInt::from_counts(p, counts);
    auto [re, im] = v.complex_embed();
    return {v, re, im};
}

WeilReport weil_check(const Poly& f) {
    WeilReport rep;
    rep.degree = f.degree();
    auto s = exp_sum(f);
    rep.abs_value = std::hypot(s.re, s.im);
    if (rep.degree >= 1) {
        rep.bound = (rep.degree - 1) * std::sqrt(double(f.field().q()));
        rep.applicable =
            std::gcd(std::uint64_t(rep.degree), f.field().q()) == 1;
        rep.holds = rep.abs_value <= rep.bound + 1e-9;
    }
    return rep;
}

MqResult compute_mq(const FiniteField& field, std::uint64_t mq_cap) {
    if (field.q() > mq_cap)
        throw SizeExceededError("compute_mq: q = " + std::to_string(field.q()) +
                                " exceeds cap " + std::to_string(mq_cap));
    std::uint32_t p = static_cast<std::uint32_t>(field.p());
    MqResult res{0.0, CycInt::integer(p, 0), 0, 0, {}};
    bool first = true;
    for (Fq a = 1; a < field.q(); ++a) {
        for (Fq b = 1; b < field.q(); ++b) {
            Poly f(field, {0, b, 0, a});  // aX^3 + bX
            auto s = exp_sum(f);
            // aX^3+bX is odd, so eps is real (Lemma-style); in char 2 the
            // oddness argument is vacuous but the direct check still applies
            if (!s.value.is_real())
                throw Error("exponential sum of aX^3+bX is not real");
            double num = s.value.real_embed();
            res.table.push_back({a, b, s.value, num});
            if (first || num > res.m_q + 1e-12) {
                first = false;
                res.m_q = num;
                res.exact = s.value;
                res.argmax_a = a;
                res.argmax_b = b;
            }
        }
    }
    if (first) throw Error("compute_mq: empty (a,b) range");
    return res;
}

}  // namespace skq
