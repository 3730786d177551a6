#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "skq/gf.hpp"
#include "skq/poly.hpp"

namespace skq {

/// Parameters of S(k,q): the field and the polynomial pairs (f_3,g_3),...,
/// (f_k,g_k). For odd p every g_i must be an odd polynomial at the
/// coefficient level; in char 2 the condition is vacuous and unchecked.
struct SGraphSpec {
    const FiniteField* field = nullptr;
    int k = 0;
    std::vector<Poly> fs;  // f_3..f_k
    std::vector<Poly> gs;  // g_3..g_k

    SGraphSpec() = default;
    SGraphSpec(const FiniteField& f, std::vector<Poly> fs_, std::vector<Poly> gs_);

    int d_f() const;  // max deg f_i
    int d_g() const;  // max deg g_i
};

/// Simple graph as sorted neighbor lists; vertices are canonical integer
/// encodings of coordinate vectors (sum c_i q^i).
struct Graph {
    std::uint64_t n = 0;
    std::vector<std::vector<std::uint32_t>> adj;
};

struct BipartiteGraph {
    Graph graph;
    std::uint64_t n_side = 0;  // vertices [0, n_side) = P, [n_side, 2 n_side) = L
};

/// One monomial c * prod vars[i]^exps[i] over the 2i-2 variables
/// p_1, l_1, ..., p_{i-1}, l_{i-1} (in that order).
struct MonomialTerm {
    Fq coeff = 0;
    std::vector<std::uint32_t> exps;
};

using SparsePoly = std::vector<MonomialTerm>;

/// Parameters of BGamma(q; h_2,...,h_k): hs[i] is h_{i+2}.
struct BipartiteSpec {
    const FiniteField* field = nullptr;
    int k = 0;
    std::vector<SparsePoly> hs;  // h_2..h_k, hs[j] uses 2(j+2)-2 variables
};

/// Connection set of S(k,q): the q(q-1) vectors
/// (a, au, g_3(a)f_3(u), ..., g_k(a)f_k(u)), a != 0.
std::vector<std::vector<Fq>> connection_set(const SGraphSpec& spec);

Graph build_s_graph(const SGraphSpec& spec,
                    std::uint64_t vertex_cap = 1000000);

/// Wenger graphs W_k(q): h_i = p_1^{i-1} l_1. Their distance-two graph on
/// lines is S(k+1,q; X^{i-1}, X).
BipartiteSpec wenger_spec(const FiniteField& field, int k);

/// Linearized Wenger L_k(q): h_i = p_1^{p^{i-2}} l_1.
BipartiteSpec linearized_wenger_spec(const FiniteField& field, int k);

/// D(4,q) = BGamma(q; p_1 l_1, p_1 l_2, p_2 l_1).
BipartiteSpec d4_spec(const FiniteField& field);

BipartiteGraph build_bipartite(const BipartiteSpec& spec,
                               std::uint64_t vertex_cap = 1000000);

/// Distance-two graph on one side (0 = P, 1 = L). Multi-adjacencies are
/// collapsed; vertex ids are re-based to [0, n_side).
Graph distance_two(const BipartiteGraph& bg, int side);

struct Components {
    std::size_t count = 0;
    std::vector<std::uint64_t> sizes;
    std::vector<std::uint32_t> label;  // per-vertex component index
};

Components components(const Graph& g);

/// True if some vertex pair has two or more common neighbors. Quadratic
/// scan, meant for n <= 1e4.
bool has_four_cycle(const Graph& g);

/// Induced subgraph on the given vertex set (ids re-based, order preserved).
Graph induced_subgraph(const Graph& g, const std::vector<std::uint32_t>& verts);

enum class EdgeFormat { PlainText, Json };

/// Deterministic edge list: pairs u < v sorted, "u v" lines or a JSON array.
std::string export_edges(const Graph& g, EdgeFormat format = EdgeFormat::PlainText);

std::uint64_t encode_vertex(const std::vector<Fq>& coords, std::uint64_t q);
std::vector<Fq> decode_vertex(std::uint64_t v, std::uint64_t q, int k);

}  // namespace skq
