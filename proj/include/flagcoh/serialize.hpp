#pragma once

// JSON and plain-text serialization for the CLI-facing types.  JSON objects
// keep insertion order and carry only integers, so output bytes are
// deterministic for a fixed request.

#include "flagcoh/cohomology.hpp"
#include "flagcoh/jantzen.hpp"
#include "flagcoh/linkage.hpp"

#include <json.hpp>

namespace flagcoh {

using Json = nlohmann::ordered_json;

inline Json weight_json(const Weight& w) { return Json(w.c); }

inline Weight weight_from_json(const Json& j) {
    if (!j.is_array()) throw std::invalid_argument("weight: expected a JSON array");
    std::vector<Int> c;
    for (const auto& x : j) c.push_back(x.get<Int>());
    return Weight(std::move(c));
}

// {"type": "A2", "terms": [{"wt": [...], "mult": m}, ...]}, terms in weight
// lex order
inline Json character_json(const RootSystem& rs, const VirtualCharacter& a) {
    Json terms = Json::array();
    for (const auto& [w, m] : a.terms) {
        Json t;
        t["wt"] = weight_json(w);
        t["mult"] = m;
        terms.push_back(std::move(t));
    }
    Json out;
    out["type"] = rs.type.name();
    out["terms"] = std::move(terms);
    return out;
}

inline std::pair<CartanType, VirtualCharacter> character_from_json(const Json& j) {
    CartanType ct = CartanType::parse(j.at("type").get<std::string>());
    VirtualCharacter a;
    for (const auto& t : j.at("terms")) {
        Weight w = weight_from_json(t.at("wt"));
        a.add_term(w, t.at("mult").get<Int>());
    }
    return {ct, a};
}

// one "w1,w2:mult" line per term, weight lex order; diff-friendly
inline std::string character_text(const VirtualCharacter& a) {
    std::string out;
    for (const auto& [w, m] : a.terms) out += w.str() + ":" + std::to_string(m) + "\n";
    return out;
}

inline Json bott_json(const BottAnswer& b) {
    Json out;
    if (b.singular) {
        out["verdict"] = "singular";
    } else {
        out["verdict"] = "regular";
        out["degree"] = b.degree;
        out["dominant"] = weight_json(b.dominant);
    }
    return out;
}

inline Json chain_json(const LinkageChain& chain) {
    Json out = Json::array();
    for (const auto& st : chain.steps) {
        Json s;
        s["wt"] = weight_json(st.wt);
        s["beta"] = st.beta + 1;  // 1-based in serialized form
        s["n"] = st.n;
        out.push_back(std::move(s));
    }
    return out;
}

inline LinkageChain chain_from_json(const Json& j) {
    LinkageChain chain;
    for (const auto& s : j) {
        LinkageStep st;
        st.wt = weight_from_json(s.at("wt"));
        st.beta = s.at("beta").get<int>() - 1;
        st.n = s.at("n").get<Int>();
        chain.steps.push_back(std::move(st));
    }
    return chain;
}

// "vanishes" | "nonvanishing" | "unknown", witness {n, delta, w, mu} when
// nonvanishing
inline Json dpi_json(const DpiVerdict& v, std::optional<Vanishing> trivial = std::nullopt) {
    Json out;
    if (v.nonvanishing) {
        out["verdict"] = "nonvanishing";
        Json wit;
        wit["n"] = v.witness->n;
        wit["delta"] = v.witness->delta;
        wit["w"] = v.witness->w.str();
        wit["mu"] = weight_json(v.witness->mu);
        out["witness"] = std::move(wit);
    } else if (trivial && *trivial == Vanishing::Vanishes) {
        out["verdict"] = "vanishes";
    } else {
        out["verdict"] = "unknown";
    }
    return out;
}

inline Json chi_support_json(const ChiBasisDecomposition& dec) {
    Json out = Json::array();
    for (const auto& [w, k] : dec.entries) {
        Json e;
        e["wt"] = weight_json(w);
        e["coeff"] = k;
        out.push_back(std::move(e));
    }
    return out;
}

// {"lambda": [...], "p": 3, "sum": <character>, "chi_support": [...], "is_zero": false}
inline Json sumformula_json(const RootSystem& rs, const Weight& la, Int p,
                            const SumFormulaResult& res) {
    Json out;
    out["lambda"] = weight_json(la);
    out["p"] = p;
    out["sum"] = character_json(rs, res.character);
    out["chi_support"] = chi_support_json(res.chi_support);
    out["is_zero"] = res.is_zero;
    return out;
}

inline Json generic_report_json(const GenericReport& rep) {
    Json out;
    out["degree"] = rep.degree;
    out["socle"] = weight_json(rep.socle_weight);
    out["head"] = weight_json(rep.head_weight);
    return out;
}

inline Weight parse_weight(const std::string& s, const RootSystem& rs) {
    std::vector<Int> c;
    std::size_t pos = 0;
    while (pos <= s.size()) {
        std::size_t next = s.find(',', pos);
        if (next == std::string::npos) next = s.size();
        std::string tok = s.substr(pos, next - pos);
        try {
            std::size_t used = 0;
            c.push_back(std::stoll(tok, &used));
            if (used != tok.size()) throw std::invalid_argument(tok);
        } catch (const std::exception&) {
            throw std::invalid_argument("cannot parse weight coordinate '" + tok + "'");
        }
        pos = next + 1;
        if (next == s.size()) break;
    }
    if (static_cast<int>(c.size()) != rs.rank)
        throw std::invalid_argument("weight '" + s + "' has " + std::to_string(c.size()) +
                                    " coordinates, expected " + std::to_string(rs.rank) +
                                    " for type " + rs.type.name());
    return Weight(std::move(c));
}

}  // namespace flagcoh
