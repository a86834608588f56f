#pragma once

// The finite Weyl group as reduced words, the linear and dot actions,
// dominant conjugates with singularity detection, p-dilated affine
// reflections and the fundamental-alcove normal form for their orbits.

#include "flagcoh/rootdata.hpp"

#include <deque>
#include <map>

namespace flagcoh {

// A reduced word in the simple reflections (0-based indices).  Words are kept
// in the canonical form produced by element_with_image, so equal group
// elements compare equal as words.
struct WeylElement {
    std::vector<int> word;

    int length() const { return static_cast<int>(word.size()); }
    bool is_identity() const { return word.empty(); }

    friend bool operator==(const WeylElement& a, const WeylElement& b) { return a.word == b.word; }
    friend bool operator!=(const WeylElement& a, const WeylElement& b) { return a.word != b.word; }

    // serialized as 1-based comma-separated indices, identity as "e"
    std::string str() const {
        if (word.empty()) return "e";
        std::string s;
        for (std::size_t i = 0; i < word.size(); ++i) {
            if (i) s += ',';
            s += std::to_string(word[i] + 1);
        }
        return s;
    }

    static WeylElement parse(const std::string& s, int rank) {
        WeylElement w;
        if (s.empty() || s == "e") return w;
        std::size_t pos = 0;
        while (pos < s.size()) {
            std::size_t next = s.find(',', pos);
            if (next == std::string::npos) next = s.size();
            std::string tok = s.substr(pos, next - pos);
            int idx;
            try {
                idx = std::stoi(tok);
            } catch (const std::exception&) {
                throw std::invalid_argument("cannot parse Weyl word token '" + tok + "'");
            }
            if (idx < 1 || idx > rank)
                throw std::invalid_argument("simple-reflection index " + tok +
                                            " out of range 1.." + std::to_string(rank));
            w.word.push_back(idx - 1);
            pos = next + 1;
        }
        return w;
    }
};

inline Weight simple_reflect(const RootSystem& rs, int i, Weight v) {
    Int t = v.c[i];
    if (t != 0)
        for (int k = 0; k < rs.rank; ++k) v.c[k] -= t * rs.cartan[k][i];
    return v;
}

// word [i1,...,ik] denotes s_{i1} s_{i2} ... s_{ik}; the action applies s_{ik} first
inline Weight act(const RootSystem& rs, const WeylElement& w, Weight v) {
    rs.check_rank(v);
    for (auto it = w.word.rbegin(); it != w.word.rend(); ++it)
        v = simple_reflect(rs, *it, std::move(v));
    return v;
}

inline Weight dot(const RootSystem& rs, const WeylElement& w, const Weight& la) {
    return act(rs, w, la + rs.rho) - rs.rho;
}

namespace detail {

// Reflect v into the dominant chamber, always at the least index with a
// negative coordinate; records the indices in application order.  The
// recorded word is reduced: each step fixes exactly one negative pairing.
inline std::vector<int> make_dominant_record(const RootSystem& rs, Weight& v) {
    std::vector<int> rec;
    for (;;) {
        int i = -1;
        for (int k = 0; k < rs.rank; ++k)
            if (v.c[k] < 0) {
                i = k;
                break;
            }
        if (i < 0) break;
        rec.push_back(i);
        v = simple_reflect(rs, i, std::move(v));
    }
    return rec;
}

inline Weight dominant_conjugate_linear(const RootSystem& rs, Weight v) {
    make_dominant_record(rs, v);
    return v;
}

}  // namespace detail

// The unique w with w(rho) = image, as a canonical reduced word.
inline WeylElement element_with_image(const RootSystem& rs, const Weight& image) {
    Weight v = image;
    auto rec = detail::make_dominant_record(rs, v);
    if (v != rs.rho)
        throw std::invalid_argument("element_with_image: vector is not in the W-orbit of rho");
    return WeylElement{std::move(rec)};
}

inline WeylElement from_word(const RootSystem& rs, const std::vector<int>& raw) {
    for (int i : raw)
        if (i < 0 || i >= rs.rank) throw std::out_of_range("simple-reflection index out of range");
    WeylElement tmp{raw};
    return element_with_image(rs, act(rs, tmp, rs.rho));
}

inline WeylElement compose(const RootSystem& rs, const WeylElement& w, const WeylElement& v) {
    return element_with_image(rs, act(rs, w, act(rs, v, rs.rho)));
}

inline WeylElement inverse(const RootSystem& rs, const WeylElement& w) {
    std::vector<int> rev(w.word.rbegin(), w.word.rend());
    return from_word(rs, rev);
}

inline WeylElement longest_element(const RootSystem& rs) {
    return element_with_image(rs, -rs.rho);
}

// Singular/regular verdict for the dot orbit of a weight.
struct BottAnswer {
    bool singular = false;
    int degree = 0;       // = length of the witness
    Weight dominant;      // the dominant dot-conjugate (regular case)
    WeylElement witness;  // dot(witness, dominant) recovers the queried weight
};

inline BottAnswer dominant_dot_conjugate(const RootSystem& rs, const Weight& la) {
    rs.check_rank(la);
    Weight x = la + rs.rho;
    BottAnswer out;
    if (!rs.is_regular(x)) {
        out.singular = true;
        return out;
    }
    auto rec = detail::make_dominant_record(rs, x);
    out.singular = false;
    out.witness = WeylElement{rec};
    out.degree = static_cast<int>(rec.size());
    out.dominant = x - rs.rho;
    return out;
}

// s_{beta,r} . nu = s_beta . nu + r p beta
inline Weight affine_reflect(const RootSystem& rs, int beta, Int r, Int p, const Weight& nu) {
    if (p < 2) throw std::invalid_argument("affine_reflect: p must be >= 2");
    Int t = rs.pairing(nu + rs.rho, beta);
    return nu + (r * p - t) * rs.positive_roots[beta];
}

// Unique representative nu of the W_p dot-orbit with nu+rho in the closed
// fundamental alcove {x : 0 <= <x,beta^vee> <= p for all positive beta}.
inline Weight wp_normal_form(const RootSystem& rs, const Weight& la, Int p) {
    if (p < 2) throw std::invalid_argument("wp_normal_form: p must be >= 2");
    rs.check_rank(la);
    Weight x = la + rs.rho;
    const int theta = rs.highest_coroot_index;
    const Weight& theta_fw = rs.positive_roots[theta];
    for (long guard = 0;; ++guard) {
        if (guard > 100000000L) throw std::logic_error("wp_normal_form did not terminate");
        detail::make_dominant_record(rs, x);
        Int t = rs.pairing(x, theta);
        if (t <= p) break;
        x += (p - t) * theta_fw;  // reflect across the wall <x, theta^vee> = p
    }
    return x - rs.rho;
}

inline Int weyl_order(const CartanType& ct) {
    const Int cap = std::numeric_limits<Int>::max();
    __int128 o = 1;
    auto mul = [&](Int k) {
        o *= k;
        if (o > cap) o = cap;
    };
    switch (ct.family) {
        case 'A':
            for (int k = 2; k <= ct.rank + 1; ++k) mul(k);
            break;
        case 'B':
        case 'C':
            for (int k = 2; k <= ct.rank; ++k) mul(k);
            for (int k = 0; k < ct.rank; ++k) mul(2);
            break;
        case 'D':
            for (int k = 2; k <= ct.rank; ++k) mul(k);
            for (int k = 0; k < ct.rank - 1; ++k) mul(2);
            break;
        case 'E': return ct.rank == 6 ? 51840 : (ct.rank == 7 ? 2903040 : 696729600);
        case 'F': return 1152;
        case 'G': return 12;
    }
    return static_cast<Int>(o);
}

// Full enumeration is refused above this bound (use the orbit/chamber
// algorithms instead; they never enumerate W).
inline constexpr Int kWeylEnumerationCap = 2073600;

inline std::vector<WeylElement> enumerate_weyl_group(const RootSystem& rs) {
    if (weyl_order(rs.type) > kWeylEnumerationCap)
        throw std::domain_error("refusing to enumerate W for " + rs.type.name() +
                                ": |W| exceeds " + std::to_string(kWeylEnumerationCap));
    std::map<Weight, WeylElement> elems;
    std::deque<Weight> queue;
    elems.emplace(rs.rho, WeylElement{});
    queue.push_back(rs.rho);
    while (!queue.empty()) {
        Weight y = queue.front();
        queue.pop_front();
        for (int i = 0; i < rs.rank; ++i) {
            Weight y2 = simple_reflect(rs, i, y);
            if (elems.find(y2) == elems.end()) {
                elems.emplace(y2, element_with_image(rs, y2));
                queue.push_back(y2);
            }
        }
    }
    std::vector<WeylElement> out;
    out.reserve(elems.size());
    for (auto& [img, w] : elems) out.push_back(w);
    std::sort(out.begin(), out.end(), [](const WeylElement& a, const WeylElement& b) {
        if (a.word.size() != b.word.size()) return a.word.size() < b.word.size();
        return a.word < b.word;
    });
    return out;
}

// W-orbit of a weight under the linear action.
inline std::vector<Weight> weyl_orbit(const RootSystem& rs, const Weight& w) {
    rs.check_rank(w);
    std::vector<Weight> sorted{w};
    std::deque<Weight> queue{w};
    while (!queue.empty()) {
        Weight y = queue.front();
        queue.pop_front();
        for (int i = 0; i < rs.rank; ++i) {
            Weight y2 = simple_reflect(rs, i, y);
            auto it = std::lower_bound(sorted.begin(), sorted.end(), y2);
            if (it != sorted.end() && *it == y2) continue;
            sorted.insert(it, y2);
            if (static_cast<Int>(sorted.size()) > kWeylEnumerationCap)
                throw std::domain_error("orbit too large to expand for " + rs.type.name());
            queue.push_back(y2);
        }
    }
    return sorted;
}

}  // namespace flagcoh
