#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "skq/cyclotomic.hpp"
#include "skq/gf.hpp"
#include "skq/poly.hpp"

namespace skq {

struct ExpSumResult {
    CycInt value;
    double re = 0.0;
    double im = 0.0;
};

/// Exponential sum of f: sum over x in F_q of zeta_p^Tr(f(x)),
/// by direct enumeration of all q points.
ExpSumResult exp_sum(const Poly& f);

struct WeilReport {
    int degree = -1;
    double abs_value = 0.0;   // |eps_f| numeric
    double bound = 0.0;       // (n-1) sqrt(q)
    bool applicable = false;  // deg >= 1 and gcd(deg, q) = 1
    bool holds = false;
};

WeilReport weil_check(const Poly& f);

struct MqEntry {
    Fq a, b;
    CycInt value;
    double numeric;
};

struct MqResult {
    double m_q = 0.0;
    CycInt exact;
    Fq argmax_a = 0, argmax_b = 0;
    std::vector<MqEntry> table;  // all (q-1)^2 sums eps_{aX^3+bX}
};

/// M_q = max over a, b in F_q^* of eps_{aX^3+bX}. Cost O(q^3); refuses
/// above mq_cap. Each sum is checked real before entering the max.
MqResult compute_mq(const FiniteField& field, std::uint64_t mq_cap = 343);

/// zeta_p^beta in canonical form, 0 <= beta < p.
inline CycInt zeta_pow(std::uint32_t p, std::uint32_t beta) {
    return CycInt::zeta_pow(p, beta);
}

inline bool is_real(const CycInt& v) { return v.is_real(); }
inline double real_embed(const CycInt& v) { return v.real_embed(); }

}  // namespace skq
