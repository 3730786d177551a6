#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "skq/charsum.hpp"
#include "skq/graphs.hpp"

namespace skq {

struct SpectrumEntry {
    CycInt value;
    double numeric = 0.0;
    std::uint64_t multiplicity = 0;
    std::vector<Fq> witness_w;  // smallest-encoding w attaining this value
};

/// Complete spectrum of S(k,q), grouped by exact cyclotomic equality and
/// sorted by numeric embedding descending (ties coefficient-lex).
struct Spectrum {
    std::vector<SpectrumEntry> entries;
    std::uint64_t graph_order = 0;  // q^k (or sample size when sampled)
    std::uint64_t degree = 0;       // q(q-1)
    bool sampled = false;           // sampled sweep: multiplicities are counts
                                    // over the sample, lambda_2 is a lower bound
};

struct SweepOptions {
    std::uint64_t work_cap = 1000000000;  // elementary character evaluations
    unsigned threads = 0;                 // 0 = hardware default
    std::uint64_t exhaustive_limit = 1000000;  // max q^k for a full sweep
    std::uint64_t sample_size = 100000;
    std::uint64_t seed = 12345;
};

/// Exact lambda_w via Eq.-of-Theorem-1 style direct enumeration over
/// (a, u); asserted real.
CycInt eigenvalue_at(const SGraphSpec& spec, const std::vector<Fq>& w);

Spectrum spectrum_formula(const SGraphSpec& spec, const SweepOptions& opts = {});

/// Dense symmetric eigensolve of the adjacency matrix; independent oracle.
/// n <= 4096. Returns eigenvalues sorted descending.
std::vector<double> spectrum_dense(const Graph& g, std::uint64_t cap = 4096);

struct SecondEigenvalue {
    double numeric = 0.0;
    CycInt exact;
    double spectral_gap = 0.0;
};

SecondEigenvalue second_eigenvalue(const Spectrum& s);

/// Per-character counts classifying lambda_w (N_w, S_w of the linear
/// system in the g-coefficients; T_w roots of sum f_i w_i).
struct WAnalysis {
    std::vector<Fq> w;
    std::uint32_t n_w = 0;
    std::uint32_t s_w_size = 0;
    std::uint32_t t_w = 0;
};

WAnalysis analyze_w(const SGraphSpec& spec, const std::vector<Fq>& w);

/// lambda_w <= N_w(q-1) + |S_w|((d_g-1)sqrt(q)+1), and
/// lambda_w = q(q-1) <=> N_w = q. Requires 1 <= d_g < p.
bool lemma51_check(const SGraphSpec& spec, const std::vector<Fq>& w,
                   const CycInt& lambda_w);

struct Theorem52Report {
    double bound = 0.0;          // d_f(q-1) + q((d_g-1)sqrt(q)+1)
    double max_nontrivial = 0.0;
    bool holds = false;
};

Theorem52Report theorem52_bound(const SGraphSpec& spec,
                                const SweepOptions& opts = {});

struct ConnectivityRank {
    int rank = 0;
    std::uint64_t predicted_components = 0;  // q^(k-rank)
    bool condition1 = false;
    bool condition2 = false;
};

ConnectivityRank connectivity_rank(const SGraphSpec& spec);

struct CubicClassification {
    std::uint64_t exact_count = 0;    // lambda_w = q(T_w - 1) exactly
    std::uint64_t bounded_count = 0;  // lambda_w <= (q - T_w) M_q
    std::uint64_t violations = 0;
    bool all_hold = false;
};

/// Per-w classification for g_i = X^3, q odd, q = 2 mod 3.
CubicClassification classify_cubic(const SGraphSpec& spec, double m_q,
                                   const SweepOptions& opts = {});

struct VerifyReport {
    double lambda2 = 0.0;
    double predicted = 0.0;
    bool holds = false;
    bool equal = false;
};

/// Theorem "lambda_2 = max{q(k-3), (q-1)M_q}" for f_i = X^{i-1}, g_i = X^3.
VerifyReport verify_theorem3(std::uint64_t q, int k, const SweepOptions& opts = {});

/// Bound lambda_2 <= max{q(p^{k-3}-1), (q-1)M_q} for f_i = X^{p^{i-2}},
/// g_i = X^3.
VerifyReport verify_theorem4(std::uint64_t q, int k, const SweepOptions& opts = {});

/// Odd-power generalization: g_i = X^{2n+1}, f_i = X^{i-1};
/// lambda_2 <= max{q(k-3), 2n(q-1)sqrt(q)} plus the per-w dichotomy.
VerifyReport remark2_bound(std::uint64_t q, int k, unsigned n,
                           const SweepOptions& opts = {});

struct CoverReport {
    bool is_submultiset = false;  // spectrum of S(k,q) inside S(k+1,q)
    bool lambda2_monotone = false;
    double lambda2_base = 0.0;
    double lambda2_cover = 0.0;
};

CoverReport cover_check(const SGraphSpec& spec_k, const SGraphSpec& spec_k1,
                        const SweepOptions& opts = {});

struct CheegerResult {
    std::uint64_t h_num = 0, h_den = 1;  // exact min |dA|/|A|
    std::uint64_t argmin_mask = 0;
    double lower = 0.0;  // (d - lambda_2)/2
    double upper = 0.0;  // sqrt(d^2 - lambda_2^2)
};

/// Exact Cheeger constant by exhaustive subsets; n <= 24. Sandwich bounds
/// from the dense oracle when the graph is connected and regular.
CheegerResult cheeger_exact(const Graph& g);

/// lambda_2 <= 2 sqrt(d-1) for a connected regular spectrum.
bool is_ramanujan(const Spectrum& s);

/// Exact moment identities: sum m lambda = 0 and
/// sum m lambda^2 = q^k q(q-1), in Z[zeta_p].
bool check_moments(const Spectrum& s, std::uint32_t p);

}  // namespace skq
