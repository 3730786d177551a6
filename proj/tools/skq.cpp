// skq: build the Cayley graphs S(k,q), compute exact spectra, and run the
// verification suites from the command line.

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "skq/charsum.hpp"
#include "skq/graphs.hpp"
#include "skq/serialize.hpp"
#include "skq/spectral.hpp"

using nlohmann::json;
using namespace skq;

namespace {

constexpr int kExitInvalidSpec = 2;
constexpr int kExitSizeExceeded = 3;
constexpr int kExitHypothesis = 4;

struct CommonOpts {
    std::uint64_t p = 0;
    unsigned e = 1;
    int k = 0;
    std::string f_json, g_json;
    std::string spec_file;
    std::string output;
    std::string format = "json";
    unsigned threads = 0;
    std::uint64_t work_cap = 1000000000;
    std::uint64_t vertex_cap = 1000000;
    std::uint64_t mq_cap = 343;
    std::uint64_t sample = 100000;
};

void add_common(CLI::App* cmd, CommonOpts& o, bool with_spec = true) {
    if (with_spec) {
        cmd->add_option("--p", o.p, "field characteristic (prime)");
        cmd->add_option("--e", o.e, "extension degree");
        cmd->add_option("--k", o.k, "dimension k");
        cmd->add_option("--f", o.f_json,
                        "f polynomials, JSON [[c0,c1,...],...] canonical ints");
        cmd->add_option("--g", o.g_json, "g polynomials, same format");
        cmd->add_option("--spec-file", o.spec_file, "spec JSON file");
    }
    cmd->add_option("--output", o.output, "output file (stdout if omitted)");
    cmd->add_option("--format", o.format, "json|csv|edgelist");
    cmd->add_option("--threads", o.threads, "sweep threads (0 = auto)");
    cmd->add_option("--work-cap", o.work_cap, "elementary evaluation cap");
    cmd->add_option("--vertex-cap", o.vertex_cap, "graph vertex cap");
    cmd->add_option("--mq-cap", o.mq_cap, "q cap for M_q brute force");
    cmd->add_option("--sample", o.sample, "sample size above exhaustive limit");
}

SweepOptions sweep_options(const CommonOpts& o) {
    SweepOptions so;
    so.work_cap = o.work_cap;
    so.threads = o.threads;
    so.sample_size = o.sample;
    if (const char* env = std::getenv("SKQ_WORK_CAP"))
        so.work_cap = std::strtoull(env, nullptr, 10);
    return so;
}

LoadedSpec load_spec(const CommonOpts& o) {
    json j;
    if (!o.spec_file.empty()) {
        std::ifstream in(o.spec_file);
        if (!in) throw InvalidSpecError("cannot open " + o.spec_file);
        try {
            in >> j;
        } catch (const json::exception& ex) {
            throw InvalidSpecError(std::string("bad spec JSON: ") + ex.what());
        }
    } else {
        if (o.p == 0 || o.k == 0 || o.f_json.empty() || o.g_json.empty())
            throw InvalidSpecError(
                "need --spec-file or all of --p --k --f --g");
        try {
            j = json{{"p", o.p},
                     {"e", o.e},
                     {"k", o.k},
                     {"f", json::parse(o.f_json)},
                     {"g", json::parse(o.g_json)}};
        } catch (const json::exception& ex) {
            throw InvalidSpecError(std::string("bad polynomial JSON: ") +
                                   ex.what());
        }
    }
    return parse_spec_json(j);
}

void emit(const CommonOpts& o, const std::string& text) {
    if (o.output.empty()) {
        std::cout << text;
    } else {
        std::ofstream out(o.output, std::ios::binary);
        out << text;
    }
}

// Symbolic monomial templates for cmd_family: sums of [c*]X^E with
// E := INT or p^INT, e.g. "X^2", "3*X^3+X", "X^(p^2)".
Poly parse_template(const FiniteField& F, const std::string& text) {
    Poly acc(F, {});
    std::string term;
    std::stringstream ss(text);
    while (std::getline(ss, term, '+')) {
        Fq coeff = 1;
        std::string body = term;
        auto star = term.find('*');
        if (star != std::string::npos) {
            coeff = static_cast<Fq>(std::stoull(term.substr(0, star)) % F.q());
            body = term.substr(star + 1);
        }
        if (body.empty() || body[0] != 'X')
            throw InvalidSpecError("bad template term: " + term);
        std::uint64_t exp = 1;
        if (body.size() > 1) {
            if (body[1] != '^')
                throw InvalidSpecError("bad template term: " + term);
            std::string es = body.substr(2);
            if (!es.empty() && es.front() == '(') es = es.substr(1, es.size() - 2);
            if (es.rfind("p^", 0) == 0) {
                unsigned c = static_cast<unsigned>(std::stoul(es.substr(2)));
                exp = 1;
                for (unsigned i = 0; i < c; ++i)
                    exp = (exp * F.p() - 1) % (F.q() - 1) + 1;
            } else {
                exp = std::stoull(es);
                if (exp > F.q() - 1) exp = (exp - 1) % (F.q() - 1) + 1;
            }
        }
        acc = acc + Poly::monomial(F, static_cast<unsigned>(exp), coeff);
    }
    return acc;
}

std::vector<std::string> split_list(const std::string& s, char sep = ',') {
    std::vector<std::string> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, sep))
        if (!item.empty()) out.push_back(item);
    return out;
}

int cmd_spectrum(const CommonOpts& o) {
    LoadedSpec loaded = load_spec(o);
    Spectrum s = spectrum_formula(loaded.spec, sweep_options(o));
    auto l2 = second_eigenvalue(s);
    json out = spectrum_to_json(s, loaded.spec);
    std::cerr << "lambda_max = " << s.entries.front().numeric
              << "  lambda_2 = " << l2.numeric
              << "  gap = " << l2.spectral_gap
              << "  components = " << s.entries.front().multiplicity
              << "  lambda_min = " << s.entries.back().numeric << "\n";
    emit(o, out.dump(2) + "\n");
    return 0;
}

json verdict(const std::string& claim, bool hypothesis_ok, double computed,
             double predicted, bool ok) {
    return json{{"claim", claim},
                {"hypothesis_ok", hypothesis_ok},
                {"computed", decimal12(computed)},
                {"predicted", decimal12(predicted)},
                {"verdict", ok ? "PASS" : "FAIL"}};
}

int cmd_verify(const std::string& which, const CommonOpts& o, std::uint64_t q,
               int k, unsigned n, std::uint64_t qmax) {
    SweepOptions so = sweep_options(o);
    json out = json::array();
    bool all_ok = true;
    auto push = [&](json v) {
        all_ok = all_ok && v["verdict"] == "PASS";
        out.push_back(std::move(v));
    };

    if (which == "thm3") {
        auto rep = verify_theorem3(q, k, so);
        push(verdict("lambda2 = max{q(k-3),(q-1)Mq}", true, rep.lambda2,
                     rep.predicted, rep.equal));
    } else if (which == "thm4") {
        auto rep = verify_theorem4(q, k, so);
        push(verdict("lambda2 <= max{q(p^(k-3)-1),(q-1)Mq}", true, rep.lambda2,
                     rep.predicted, rep.holds));
    } else if (which == "remark1") {
        auto [p, e] = factor_prime_power(q);
        FiniteField F(p, e);
        SGraphSpec spec(F, {Poly::monomial(F, 2)}, {Poly::monomial(F, 3)});
        Spectrum s = spectrum_formula(spec, so);
        double lmin = s.entries.back().numeric;
        push(verdict("lambda_min < -q", true, lmin, -double(q),
                     lmin < -double(q) - 1e-9));
    } else if (which == "remark2") {
        auto rep = remark2_bound(q, k, n, so);
        push(verdict("lambda2 <= max{q(k-3),2n(q-1)sqrt(q)}", true, rep.lambda2,
                     rep.predicted, rep.holds));
    } else if (which == "remark3") {
        for (std::uint64_t qq = 5; qq <= qmax; ++qq) {
            std::uint64_t pp, ee;
            try {
                auto fac = factor_prime_power(qq);
                pp = fac.first;
                ee = fac.second;
            } catch (const NonPrimeError&) {
                continue;
            }
            if (pp == 2 || qq % 3 != 2) continue;
            FiniteField F(pp, static_cast<unsigned>(ee));
            auto mq = compute_mq(F, std::max(o.mq_cap, qq));
            double lo = 2.0 * std::sqrt(double(qq)) - 2.0;
            double hi = 2.0 * std::sqrt(double(qq));
            bool ok = mq.m_q >= lo - 1e-9 && mq.m_q <= hi + 1e-9;
            json v = verdict("2sqrt(q)-2 <= Mq <= 2sqrt(q)", true, mq.m_q, hi, ok);
            v["q"] = qq;
            push(std::move(v));
        }
    } else if (which == "remark4" || which == "cover") {
        auto [p, e] = factor_prime_power(q);
        FiniteField F(p, e);
        auto mk = [&](int kk) {
            std::vector<Poly> fs, gs;
            for (int i = 3; i <= kk; ++i) {
                fs.push_back(Poly::monomial(F, static_cast<unsigned>(i - 1)));
                gs.push_back(Poly::monomial(F, 3));
            }
            return SGraphSpec(F, std::move(fs), std::move(gs));
        };
        auto rep = cover_check(mk(k), mk(k + 1), so);
        push(verdict("base spectrum contained in cover", true,
                     rep.lambda2_base, rep.lambda2_cover,
                     rep.is_submultiset && rep.lambda2_monotone));
    } else if (which == "lemma51") {
        LoadedSpec loaded = load_spec(o);
        const FiniteField& F = *loaded.spec.field;
        std::uint64_t total = 1;
        for (int i = 0; i < loaded.spec.k; ++i) total *= F.q();
        bool ok = true;
        for (std::uint64_t enc = 0; enc < total && ok; ++enc) {
            auto w = decode_vertex(enc, F.q(), loaded.spec.k);
            ok = lemma51_check(loaded.spec, w, eigenvalue_at(loaded.spec, w));
        }
        push(verdict("Eq.(6) bound over all w", true, ok ? 1 : 0, 1, ok));
    } else if (which == "lemma61") {
        LoadedSpec loaded = load_spec(o);
        auto mq = compute_mq(*loaded.spec.field, o.mq_cap);
        auto rep = classify_cubic(loaded.spec, mq.m_q, so);
        push(verdict("cubic classification over all w", true,
                     double(rep.violations), 0, rep.all_hold));
    } else if (which == "cheeger") {
        auto cycle = [](int m) {
            Graph g;
            g.n = m;
            g.adj.assign(m, {});
            for (int i = 0; i < m; ++i) {
                g.adj[i].push_back(static_cast<std::uint32_t>((i + 1) % m));
                g.adj[i].push_back(static_cast<std::uint32_t>((i + m - 1) % m));
                std::sort(g.adj[i].begin(), g.adj[i].end());
            }
            return g;
        };
        for (int m : {6, 8, 10}) {
            auto res = cheeger_exact(cycle(m));
            double h = double(res.h_num) / double(res.h_den);
            bool ok = res.h_num * (m / 2) == 2 * res.h_den &&
                      h >= res.lower - 1e-9 && h <= res.upper + 1e-9;
            json v = verdict("cycle Cheeger sandwich", true, h,
                             2.0 / double(m / 2), ok);
            v["n"] = m;
            push(std::move(v));
        }
    } else {
        throw CLI::ValidationError("unknown verification: " + which);
    }
    json doc{{"which", which}, {"records", out}};
    emit(o, doc.dump(2) + "\n");
    return all_ok ? 0 : 1;
}

int cmd_family(const CommonOpts& o, const std::string& q_list,
               const std::string& f_templates, const std::string& g_templates) {
    SweepOptions so = sweep_options(o);
    auto fts = split_list(f_templates);
    auto gts = split_list(g_templates);
    if (fts.size() != gts.size() || fts.empty())
        throw InvalidSpecError("need matching nonempty f/g template lists");
    json rows = json::array();
    std::vector<double> ratio;
    for (const auto& qs : split_list(q_list)) {
        std::uint64_t q = std::stoull(qs);
        json row{{"q", q}};
        try {
            auto [p, e] = factor_prime_power(q);
            FiniteField F(p, e);
            std::vector<Poly> fs, gs;
            for (std::size_t i = 0; i < fts.size(); ++i) {
                fs.push_back(parse_template(F, fts[i]));
                gs.push_back(parse_template(F, gts[i]));
            }
            SGraphSpec spec(F, std::move(fs), std::move(gs));
            if (spec.d_g() >= static_cast<int>(p))
                throw HypothesisViolatedError("d_g >= p at this q");
            Spectrum s = spectrum_formula(spec, so);
            auto l2 = second_eigenvalue(s);
            double r = l2.numeric / (double(q) * q);
            ratio.push_back(r);
            row["lambda2"] = decimal12(l2.numeric);
            row["gap"] = decimal12(l2.spectral_gap);
            row["lambda2_over_q2"] = decimal12(r);
            row["cheeger_lower"] = decimal12(l2.spectral_gap / 2.0);
        } catch (const HypothesisViolatedError& ex) {
            row["hypothesis_violated"] = ex.what();
        }
        rows.push_back(std::move(row));
    }
    bool monotone = true;
    for (std::size_t i = 1; i < ratio.size(); ++i)
        if (ratio[i] > ratio[i - 1] + 1e-12) monotone = false;
    json doc{{"rows", rows}};
    if (ratio.size() > 1) doc["lambda2_over_q2_decreasing"] = monotone;
    if (o.format == "csv") {
        std::ostringstream csv;
        csv << "q,lambda2,gap,lambda2_over_q2,cheeger_lower\n";
        for (const auto& row : rows) {
            csv << row["q"];
            if (row.contains("lambda2"))
                csv << "," << row["lambda2"].get<std::string>() << ","
                    << row["gap"].get<std::string>() << ","
                    << row["lambda2_over_q2"].get<std::string>() << ","
                    << row["cheeger_lower"].get<std::string>() << "\n";
            else
                csv << ",hypothesis-violated,,,\n";
        }
        emit(o, csv.str());
    } else {
        emit(o, doc.dump(2) + "\n");
    }
    return 0;
}

int cmd_export(const CommonOpts& o, const std::string& what,
               const std::string& bip_family, int bk, const std::string& side) {
    if (what == "edges") {
        LoadedSpec loaded = load_spec(o);
        Graph g = build_s_graph(loaded.spec, o.vertex_cap);
        emit(o, export_edges(g, o.format == "json" ? EdgeFormat::Json
                                                   : EdgeFormat::PlainText));
        return 0;
    }
    if (what == "connection-set") {
        LoadedSpec loaded = load_spec(o);
        std::ostringstream out;
        for (const auto& s : connection_set(loaded.spec)) {
            for (std::size_t i = 0; i < s.size(); ++i)
                out << (i ? " " : "") << s[i];
            out << "\n";
        }
        emit(o, out.str());
        return 0;
    }
    if (what == "bipartite" || what == "distance-two") {
        if (o.p == 0) throw InvalidSpecError("need --p (and --e) for the field");
        FiniteField F(o.p, o.e);
        BipartiteSpec bs;
        if (bip_family == "wenger")
            bs = wenger_spec(F, bk);
        else if (bip_family == "linwenger")
            bs = linearized_wenger_spec(F, bk);
        else if (bip_family == "d4")
            bs = d4_spec(F);
        else
            throw InvalidSpecError("unknown bipartite family: " + bip_family);
        auto bg = build_bipartite(bs, o.vertex_cap);
        if (what == "bipartite") {
            emit(o, export_edges(bg.graph, o.format == "json"
                                               ? EdgeFormat::Json
                                               : EdgeFormat::PlainText));
        } else {
            Graph g2 = distance_two(bg, side == "points" ? 0 : 1);
            emit(o, export_edges(g2, o.format == "json" ? EdgeFormat::Json
                                                        : EdgeFormat::PlainText));
        }
        return 0;
    }
    throw InvalidSpecError("unknown export target: " + what);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact spectra and verification for the graphs S(k,q)"};
    app.require_subcommand(1);

    CommonOpts o;
    std::uint64_t q = 5, qmax = 49;
    int k = 4;
    unsigned rn = 1;
    std::string which, q_list, f_templates, g_templates;
    std::string what = "edges", bip_family = "wenger", side = "lines";
    int bk = 2;

    auto* spectrum = app.add_subcommand("spectrum", "full exact spectrum");
    add_common(spectrum, o);

    auto* verify = app.add_subcommand("verify", "run a verification suite");
    verify->add_option("which", which,
                       "thm3|thm4|lemma51|lemma61|remark1|remark2|remark3|"
                       "remark4|cheeger|cover")
        ->required();
    verify->add_option("--q", q, "prime power q");
    verify->add_option("--n", rn, "odd-power parameter n (g = X^(2n+1))");
    verify->add_option("--qmax", qmax, "scan limit for remark3");
    add_common(verify, o);

    auto* family = app.add_subcommand("family", "trend table over a q list");
    family->add_option("--q-list", q_list, "comma-separated prime powers")
        ->required();
    family->add_option("--f-templates", f_templates,
                       "comma-separated symbolic f_i, e.g. X^2,X^3");
    family->add_option("--g-templates", g_templates, "symbolic g_i list");
    add_common(family, o, false);

    auto* exportc = app.add_subcommand("export", "export graph artifacts");
    exportc->add_option("--what", what,
                        "edges|connection-set|bipartite|distance-two");
    exportc->add_option("--bipartite-family", bip_family, "wenger|linwenger|d4");
    exportc->add_option("--bk", bk, "bipartite parameter k");
    exportc->add_option("--side", side, "lines|points (distance-two)");
    add_common(exportc, o);

    CLI11_PARSE(app, argc, argv);

    try {
        if (spectrum->parsed()) return cmd_spectrum(o);
        if (verify->parsed())
            return cmd_verify(which, o, q, o.k > 0 ? o.k : k, rn, qmax);
        if (family->parsed()) return cmd_family(o, q_list, f_templates, g_templates);
        if (exportc->parsed()) return cmd_export(o, what, bip_family, bk, side);
    } catch (const HypothesisViolatedError& ex) {
        std::cerr << "hypothesis violated: " << ex.what() << "\n";
        return kExitHypothesis;
    } catch (const SizeExceededError& ex) {
        std::cerr << "size exceeded: " << ex.what() << "\n";
        return kExitSizeExceeded;
    } catch (const OddnessViolationError& ex) {
        std::cerr << "invalid spec: " << ex.what() << "\n";
        return kExitInvalidSpec;
    } catch (const InvalidSpecError& ex) {
        std::cerr << "invalid spec: " << ex.what() << "\n";
        return kExitInvalidSpec;
    } catch (const Error& ex) {
        std::cerr << "error: " << ex.what() << "\n";
        return 1;
    } catch (const std::exception& ex) {
        std::cerr << "error: " << ex.what() << "\n";
        return 1;
    }
    return 0;
}
