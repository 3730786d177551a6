#include "skq/graphs.hpp"

#include <algorithm>
#include <queue>
#include <sstream>
#include <unordered_map>

namespace skq {

SGraphSpec::SGraphSpec(const FiniteField& f, std::vector<Poly> fs_,
                       std::vector<Poly> gs_)
    : field(&f), fs(std::move(fs_)), gs(std::move(gs_)) {
    if (fs.size() != gs.size() || fs.empty())
        throw InvalidSpecError("need k-2 >= 1 polynomial pairs (f_i, g_i)");
    k = static_cast<int>(fs.size()) + 2;
    for (const auto& poly : fs) {
        if (!poly.field().same_field(f)) throw FieldMismatchError();
        if (poly.degree() > static_cast<int>(f.q()) - 1)
            throw InvalidSpecError("f_i degree exceeds q-1");
    }
    for (const auto& poly : gs) {
        if (!poly.field().same_field(f)) throw FieldMismatchError();
        if (poly.degree() > static_cast<int>(f.q()) - 1)
            throw InvalidSpecError("g_i degree exceeds q-1");
        if (f.p() != 2 && !poly.is_odd_polynomial())
            throw OddnessViolationError(
                "g_i has a nonzero even-degree coefficient (p odd requires "
                "g_i(-X) = -g_i(X) at the coefficient level)");
    }
}

int SGraphSpec::d_f() const {
    int d = -1;
    for (const auto& poly : fs) d = std::max(d, poly.degree());
    return d;
}

int SGraphSpec::d_g() const {
    int d = -1;
    for (const auto& poly : gs) d = std::max(d, poly.degree());
    return d;
}

std::uint64_t encode_vertex(const std::vector<Fq>& coords, std::uint64_t q) {
    std::uint64_t v = 0;
    for (std::size_t i = coords.size(); i-- > 0;) v = v * q + coords[i];
    return v;
}

std::vector<Fq> decode_vertex(std::uint64_t v, std::uint64_t q, int k) {
    std::vector<Fq> c(k);
    for (int i = 0; i < k; ++i) {
        c[i] = static_cast<Fq>(v % q);
        v /= q;
    }
    return c;
}

std::vector<std::vector<Fq>> connection_set(const SGraphSpec& spec) {
    const FiniteField& F = *spec.field;
    std::vector<std::vector<Fq>> set;
    set.reserve(F.q() * (F.q() - 1));
    for (Fq a = 1; a < F.q(); ++a) {
        std::vector<Fq> gvals(spec.gs.size());
        for (std::size_t i = 0; i < spec.gs.size(); ++i)
            gvals[i] = spec.gs[i].eval(a);
        for (Fq u = 0; u < F.q(); ++u) {
            std::vector<Fq> s(spec.k);
            s[0] = a;
            s[1] = F.mul(a, u);
            for (std::size_t i = 0; i < spec.fs.size(); ++i)
                s[2 + i] = F.mul(gvals[i], spec.fs[i].eval(u));
            set.push_back(std::move(s));
        }
    }
    return set;
}

Graph build_s_graph(const SGraphSpec& spec, std::uint64_t vertex_cap) {
    const FiniteField& F = *spec.field;
    std::uint64_t n = 1;
    for (int i = 0; i < spec.k; ++i) {
        n *= F.q();
        if (n > vertex_cap)
            throw SizeExceededError("q^k exceeds vertex cap " +
                                    std::to_string(vertex_cap));
    }
    auto S = connection_set(spec);
    // precompute each generator's encoding offsets per coordinate
    Graph g;
    g.n = n;
    g.adj.assign(n, {});
    std::vector<Fq> coords(spec.k);
    for (std::uint64_t v = 0; v < n; ++v) {
        std::uint64_t t = v;
        for (int i = 0; i < spec.k; ++i) {
            coords[i] = static_cast<Fq>(t % F.q());
            t /= F.q();
        }
        auto& nbrs = g.adj[v];
        nbrs.reserve(S.size());
        for (const auto& s : S) {
            std::uint64_t w = 0;
            for (int i = spec.k; i-- > 0;)
                w = w * F.q() + F.add(coords[i], s[i]);
            nbrs.push_back(static_cast<std::uint32_t>(w));
        }
        std::sort(nbrs.begin(), nbrs.end());
    }
    return g;
}

namespace {

Fq eval_sparse(const FiniteField& F, const SparsePoly& h,
               const std::vector<Fq>& vars) {
    Fq acc = 0;
    for (const auto& t : h) {
        Fq m = t.coeff;
        for (std::size_t i = 0; i < t.exps.size() && i < vars.size(); ++i)
            if (t.exps[i] > 0) m = F.mul(m, F.pow(vars[i], t.exps[i]));
        acc = F.add(acc, m);
    }
    return acc;
}

}  // namespace

BipartiteSpec wenger_spec(const FiniteField& field, int k) {
    BipartiteSpec spec;
    spec.field = &field;
    spec.k = k + 1;
    for (int i = 2; i <= k + 1; ++i) {
        // h_i = p_1^{i-1} l_1, vars (p1, l1, ...)
        SparsePoly h{{1, {static_cast<std::uint32_t>(i - 1), 1}}};
        spec.hs.push_back(std::move(h));
    }
    return spec;
}

BipartiteSpec linearized_wenger_spec(const FiniteField& field, int k) {
    BipartiteSpec spec;
    spec.field = &field;
    spec.k = k + 1;
    for (int i = 2; i <= k + 1; ++i) {
        std::uint32_t exp = 1;
        for (int j = 0; j < i - 2; ++j)
            exp = static_cast<std::uint32_t>(
                (std::uint64_t(exp) * field.p() - 1) % (field.q() - 1) + 1);
        SparsePoly h{{1, {exp, 1}}};
        spec.hs.push_back(std::move(h));
    }
    return spec;
}

BipartiteSpec d4_spec(const FiniteField& field) {
    BipartiteSpec spec;
    spec.field = &field;
    spec.k = 4;
    spec.hs.push_back({{1, {1, 1}}});            // h_2 = p1 l1
    spec.hs.push_back({{1, {1, 0, 0, 1}}});      // h_3 = p1 l2
    spec.hs.push_back({{1, {0, 0, 1, 1}}});      // h_4 = p2 l1
    return spec;
}

BipartiteGraph build_bipartite(const BipartiteSpec& spec,
                               std::uint64_t vertex_cap) {
    const FiniteField& F = *spec.field;
    int k = spec.k;
    std::uint64_t n_side = 1;
    for (int i = 0; i < k; ++i) n_side *= F.q();
    if (2 * n_side > vertex_cap)
        throw SizeExceededError("2 q^k exceeds vertex cap");
    BipartiteGraph bg;
    bg.n_side = n_side;
    bg.graph.n = 2 * n_side;
    bg.graph.adj.assign(2 * n_side, {});
    std::vector<Fq> pc(k), lc(k), vars;
    for (std::uint64_t pv = 0; pv < n_side; ++pv) {
        pc = decode_vertex(pv, F.q(), k);
        for (Fq l1 = 0; l1 < F.q(); ++l1) {
            lc[0] = l1;
            for (int i = 2; i <= k; ++i) {
                vars.clear();
                for (int j = 0; j < i - 1; ++j) {
                    vars.push_back(pc[j]);
                    vars.push_back(lc[j]);
                }
                lc[i - 1] = F.sub(eval_sparse(F, spec.hs[i - 2], vars), pc[i - 1]);
            }
            std::uint64_t lv = n_side + encode_vertex(lc, F.q());
            bg.graph.adj[pv].push_back(static_cast<std::uint32_t>(lv));
            bg.graph.adj[lv].push_back(static_cast<std::uint32_t>(pv));
        }
    }
    for (auto& nbrs : bg.graph.adj) std::sort(nbrs.begin(), nbrs.end());
    return bg;
}

Graph distance_two(const BipartiteGraph& bg, int side) {
    if (side != 0 && side != 1) throw Error("side must be 0 or 1");
    std::uint64_t base = side == 0 ? 0 : bg.n_side;
    Graph g;
    g.n = bg.n_side;
    g.adj.assign(bg.n_side, {});
    for (std::uint64_t v = 0; v < bg.n_side; ++v) {
        auto& nbrs = g.adj[v];
        for (std::uint32_t z : bg.graph.adj[base + v])
            for (std::uint32_t y : bg.graph.adj[z])
                if (y != base + v) nbrs.push_back(static_cast<std::uint32_t>(y - base));
        std::sort(nbrs.begin(), nbrs.end());
        nbrs.erase(std::unique(nbrs.begin(), nbrs.end()), nbrs.end());
    }
    return g;
}

Components components(const Graph& g) {
    Components c;
    c.label.assign(g.n, UINT32_MAX);
    for (std::uint64_t s = 0; s < g.n; ++s) {
        if (c.label[s] != UINT32_MAX) continue;
        std::uint32_t id = static_cast<std::uint32_t>(c.count++);
        std::uint64_t size = 0;
        std::queue<std::uint32_t> bfs;
        bfs.push(static_cast<std::uint32_t>(s));
        c.label[s] = id;
        while (!bfs.empty()) {
            std::uint32_t v = bfs.front();
            bfs.pop();
            ++size;
            for (std::uint32_t w : g.adj[v]) {
                if (c.label[w] == UINT32_MAX) {
                    c.label[w] = id;
                    bfs.push(w);
                }
            }
        }
        c.sizes.push_back(size);
    }
    return c;
}

bool has_four_cycle(const Graph& g) {
    // count common neighbors through each middle vertex
    std::unordered_map<std::uint64_t, int> pair_count;
    for (std::uint64_t z = 0; z < g.n; ++z) {
        const auto& nbrs = g.adj[z];
        for (std::size_t i = 0; i < nbrs.size(); ++i)
            for (std::size_t j = i + 1; j < nbrs.size(); ++j) {
                std::uint64_t key = std::uint64_t(nbrs[i]) * g.n + nbrs[j];
                if (++pair_count[key] >= 2) return true;
            }
    }
    return false;
}

Graph induced_subgraph(const Graph& g, const std::vector<std::uint32_t>& verts) {
    std::unordered_map<std::uint32_t, std::uint32_t> index;
    for (std::size_t i = 0; i < verts.size(); ++i)
        index[verts[i]] = static_cast<std::uint32_t>(i);
    Graph h;
    h.n = verts.size();
    h.adj.assign(verts.size(), {});
    for (std::size_t i = 0; i < verts.size(); ++i) {
        for (std::uint32_t w : g.adj[verts[i]]) {
            auto it = index.find(w);
            if (it != index.end()) h.adj[i].push_back(it->second);
        }
        std::sort(h.adj[i].begin(), h.adj[i].end());
    }
    return h;
}

std::string export_edges(const Graph& g, EdgeFormat format) {
    std::ostringstream out;
    if (format == EdgeFormat::Json) {
        out << "[";
        bool first = true;
        for (std::uint64_t u = 0; u < g.n; ++u)
            for (std::uint32_t v : g.adj[u])
                if (u < v) {
                    if (!first) out << ",";
                    first = false;
                    out << "[" << u << "," << v << "]";
                }
        out << "]\n";
    } else {
        for (std::uint64_t u = 0; u < g.n; ++u)
            for (std::uint32_t v : g.adj[u])
                if (u < v) out << u << " " << v << "\n";
    }
    return out.str();
}

}  // namespace skq
