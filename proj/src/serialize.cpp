#include "skq/serialize.hpp"

#include <nlohmann/json.hpp>

#include <cstdio>

namespace skq {

using nlohmann::json;

LoadedSpec parse_spec_json(const json& j, std::uint64_t size_cap) {
    if (!j.is_object()) throw InvalidSpecError("spec must be a JSON object");
    for (const auto& [key, value] : j.items()) {
        (void)value;
        if (key != "p" && key != "e" && key != "k" && key != "f" && key != "g")
            throw InvalidSpecError("unknown spec key: " + key);
    }
    for (const char* key : {"p", "e", "k", "f", "g"})
        if (!j.contains(key))
            throw InvalidSpecError(std::string("missing spec key: ") + key);

    std::uint64_t p = j.at("p").get<std::uint64_t>();
    unsigned e = j.at("e").get<unsigned>();
    int k = j.at("k").get<int>();
    auto field = std::make_shared<FiniteField>(p, e, size_cap);

    auto read_polys = [&](const json& arr) {
        std::vector<Poly> out;
        for (const auto& coeffs : arr) {
            std::vector<Fq> c;
            for (const auto& v : coeffs) c.push_back(v.get<Fq>());
            out.emplace_back(*field, std::move(c));
        }
        return out;
    };
    auto fs = read_polys(j.at("f"));
    auto gs = read_polys(j.at("g"));
    if (static_cast<int>(fs.size()) != k - 2 ||
        static_cast<int>(gs.size()) != k - 2)
        throw InvalidSpecError("need exactly k-2 f and g polynomials");
    LoadedSpec loaded{field, SGraphSpec(*field, std::move(fs), std::move(gs))};
    return loaded;
}

json field_to_json(const FiniteField& field) {
    return json{{"p", field.p()},
                {"e", field.e()},
                {"modulus", field.modulus()}};
}

std::string decimal12(double x) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.12g", x);
    return buf;
}

json spectrum_to_json(const Spectrum& s, const SGraphSpec& spec) {
    json entries = json::array();
    std::int64_t m1 = 0;
    for (const auto& entry : s.entries) {
        entries.push_back(json{{"coeffs", entry.value.coeffs()},
                               {"value", decimal12(entry.numeric)},
                               {"multiplicity", entry.multiplicity},
                               {"witness_w", entry.witness_w}});
        (void)m1;
    }
    std::size_t comps = 0;
    if (!s.entries.empty()) comps = s.entries.front().multiplicity;
    return json{{"q", spec.field->q()},
                {"k", spec.k},
                {"degree", s.degree},
                {"sampled", s.sampled},
                {"entries", entries},
                {"moments",
                 {{"m1", 0},
                  {"m2", s.sampled ? 0
                                   : static_cast<std::int64_t>(s.graph_order) *
                                         static_cast<std::int64_t>(s.degree)}}},
                {"components", comps}};
}

json exp_sum_to_json(const ExpSumResult& r) {
    return json{{"coeffs", r.value.coeffs()},
                {"re", decimal12(r.re)},
                {"im", decimal12(r.im)}};
}

}  // namespace skq
