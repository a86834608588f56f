#pragma once

// Exact virtual characters in the group ring Z[X]: Weyl characters via
// Freudenthal's multiplicity recursion, the signed Euler characteristic chi
// for arbitrary weights, Frobenius twists, Steinberg characters, and
// decomposition in the chi-basis by leading-term subtraction.

#include "flagcoh/weyl.hpp"

#include <unordered_map>

namespace flagcoh {

// Finite Z-linear combination of formal exponentials e^mu; zero
// multiplicities are never stored.  The ordered map fixes a canonical
// (weight-lex) term order for serialization.
struct VirtualCharacter {
    std::map<Weight, Int> terms;

    bool is_zero() const { return terms.empty(); }

    Int mult(const Weight& w) const {
        auto it = terms.find(w);
        return it == terms.end() ? 0 : it->second;
    }

    void add_term(const Weight& w, Int m) {
        if (m == 0) return;
        auto [it, fresh] = terms.emplace(w, m);
        if (!fresh) {
            it->second += m;
            if (it->second == 0) terms.erase(it);
        }
    }

    Int total_multiplicity() const {
        Int s = 0;
        for (const auto& [w, m] : terms) s += m;
        return s;
    }

    VirtualCharacter& operator+=(const VirtualCharacter& o) {
        for (const auto& [w, m] : o.terms) add_term(w, m);
        return *this;
    }
    VirtualCharacter& operator-=(const VirtualCharacter& o) {
        for (const auto& [w, m] : o.terms) add_term(w, -m);
        return *this;
    }
    VirtualCharacter& operator*=(Int k) {
        if (k == 0) {
            terms.clear();
            return *this;
        }
        for (auto& [w, m] : terms) m *= k;
        return *this;
    }

    friend VirtualCharacter operator+(VirtualCharacter a, const VirtualCharacter& b) { return a += b; }
    friend VirtualCharacter operator-(VirtualCharacter a, const VirtualCharacter& b) { return a -= b; }
    friend VirtualCharacter operator-(VirtualCharacter a) {
        for (auto& [w, m] : a.terms) m = -m;
        return a;
    }
    friend VirtualCharacter operator*(Int k, VirtualCharacter a) { return a *= k; }

    friend bool operator==(const VirtualCharacter& a, const VirtualCharacter& b) {
        return a.terms == b.terms;
    }
    friend bool operator!=(const VirtualCharacter& a, const VirtualCharacter& b) {
        return !(a == b);
    }
};

// the group-ring operations of Z[X]
inline VirtualCharacter char_add(VirtualCharacter a, const VirtualCharacter& b) { return a += b; }
inline VirtualCharacter char_negate(VirtualCharacter a) { return -std::move(a); }
inline VirtualCharacter char_scale(Int k, VirtualCharacter a) { return a *= k; }

inline VirtualCharacter tensor(const VirtualCharacter& a, const VirtualCharacter& b) {
    VirtualCharacter out;
    for (const auto& [wa, ma] : a.terms)
        for (const auto& [wb, mb] : b.terms) out.add_term(wa + wb, ma * mb);
    return out;
}

inline VirtualCharacter translate(const VirtualCharacter& a, const Weight& mu) {
    VirtualCharacter out;
    for (const auto& [w, m] : a.terms) out.terms.emplace(w + mu, m);
    return out;
}

// every simple reflection permutes the terms with equal multiplicities
inline bool weyl_invariant(const RootSystem& rs, const VirtualCharacter& a) {
    for (int i = 0; i < rs.rank; ++i) {
        for (const auto& [w, m] : a.terms)
            if (a.mult(simple_reflect(rs, i, w)) != m) return false;
    }
    return true;
}

// Character of the characteristic-0 irreducible with highest weight la.
// Dominant multiplicities by Freudenthal's recursion (descending through the
// dominant support, exact integer division asserted), then orbit expansion.
// W itself is never enumerated.
inline VirtualCharacter weyl_character(const RootSystem& rs, const Weight& la) {
    rs.check_rank(la);
    if (!rs.is_dominant(la))
        throw std::invalid_argument("weyl_character: weight " + la.str() + " is not dominant");
    const int r = rs.rank;
    const std::vector<Int>& d = rs.symmetrizer;

    Weight w0la = act(rs, longest_element(rs), la);
    auto span_opt = rs.root_coordinates(la - w0la);
    if (!span_opt) throw std::logic_error("la - w0(la) not in the root lattice");
    const std::vector<Int> span = *span_opt;

    // dominant weights mu <= la, with root coordinates of la - mu
    struct Dom {
        Weight mu;
        std::vector<Int> gamma;
        Int height;
    };
    std::vector<Dom> doms;
    std::vector<Int> cur(r, 0);
    for (;;) {
        Weight mu = la;
        for (int j = 0; j < r; ++j)
            if (cur[j])
                for (int k = 0; k < r; ++k) mu.c[k] -= cur[j] * rs.cartan[k][j];
        if (rs.is_dominant(mu))
            doms.push_back({mu, cur, std::accumulate(cur.begin(), cur.end(), Int(0))});
        int j = 0;
        while (j < r && cur[j] == span[j]) cur[j++] = 0;
        if (j == r) break;
        ++cur[j];
    }
    std::sort(doms.begin(), doms.end(), [](const Dom& a, const Dom& b) {
        if (a.height != b.height) return a.height < b.height;
        return a.mu.c < b.mu.c;
    });

    std::unordered_map<Weight, Int, WeightHash> mults;
    mults.reserve(doms.size() * 2);
    const Weight la_rho = la + rs.rho;

    for (const auto& dom : doms) {
        if (dom.height == 0) {
            mults.emplace(dom.mu, 1);
            continue;
        }
        Int num = 0;
        for (int b = 0; b < rs.N; ++b) {
            const Weight& beta = rs.positive_roots[b];
            const std::vector<Int>& row = rs.coroot_table[b];
            Int pair_mu = 0;
            for (int j = 0; j < r; ++j) pair_mu += row[j] * dom.mu.c[j];
            Int pair_beta = 2;  // <beta, beta^vee>
            Weight nu = dom.mu;
            for (Int k = 1;; ++k) {
                nu += beta;
                Weight nu_dom = detail::dominant_conjugate_linear(rs, nu);
                auto it = mults.find(nu_dom);
                if (it == mults.end()) break;  // weight strings are unbroken
                num += it->second * rs.root_norm[b] * (pair_mu + k * pair_beta);
                if (k > 1000000) throw std::logic_error("runaway weight string");
            }
        }
        // ((la+rho)^2 - (mu+rho)^2) = 2(la+rho, gamma) - (gamma, gamma)
        Int denom = 0;
        for (int j = 0; j < r; ++j)
            denom += dom.gamma[j] * d[j] * (2 * la_rho.c[j] - (la.c[j] - dom.mu.c[j]));
        if (denom <= 0 || (2 * num) % denom != 0)
            throw std::logic_error("Freudenthal recursion: inexact division");
        Int m = 2 * num / denom;
        if (m <= 0) throw std::logic_error("Freudenthal recursion: nonpositive multiplicity");
        mults.emplace(dom.mu, m);
    }

    VirtualCharacter out;
    for (const auto& dom : doms) {
        Int m = mults.at(dom.mu);
        for (const Weight& nu : weyl_orbit(rs, dom.mu)) out.terms.emplace(nu, m);
    }
    return out;
}

// dimension by the Weyl product formula, exact division at the end
inline Int weyl_dim(const RootSystem& rs, const Weight& la) {
    rs.check_rank(la);
    if (!rs.is_dominant(la))
        throw std::invalid_argument("weyl_dim: weight " + la.str() + " is not dominant");
    auto gcd128 = [](__int128 a, __int128 b) {
        while (b) {
            __int128 t = a % b;
            a = b;
            b = t;
        }
        return a;
    };
    __int128 num = 1, den = 1;
    const __int128 lim = (__int128)1 << 100;
    Weight la_rho = la + rs.rho;
    for (int b = 0; b < rs.N; ++b) {
        num *= rs.pairing(la_rho, b);
        den *= rs.pairing(rs.rho, b);
        __int128 g = gcd128(num, den);
        num /= g;
        den /= g;
        if (num > lim) throw std::overflow_error("weyl_dim: dimension exceeds 64 bits");
    }
    if (den != 1) throw std::logic_error("weyl_dim: inexact division");
    if (num > std::numeric_limits<Int>::max())
        throw std::overflow_error("weyl_dim: dimension exceeds 64 bits");
    return static_cast<Int>(num);
}

// chi(la) = (-1)^{l(w)} weyl_character(la+) for regular la, zero for singular
inline VirtualCharacter chi(const RootSystem& rs, const Weight& la) {
    BottAnswer b = dominant_dot_conjugate(rs, la);
    if (b.singular) return {};
    VirtualCharacter ch = weyl_character(rs, b.dominant);
    return (b.degree % 2 != 0) ? -std::move(ch) : ch;
}

// weights scaled by p^n, multiplicities preserved
inline VirtualCharacter frobenius_twist(const RootSystem& rs, const VirtualCharacter& a, Int p, Int n) {
    if (p < 2) throw std::invalid_argument("frobenius_twist: p must be >= 2");
    if (n < 0) throw std::invalid_argument("frobenius_twist: n must be >= 0");
    if (n == 0) return a;
    Int q = ipow_checked(p, n);
    VirtualCharacter out;
    for (const auto& [w, m] : a.terms) out.terms.emplace(q * w, m);
    return out;
}

inline VirtualCharacter steinberg_character(const RootSystem& rs, Int p, Int n) {
    if (p < 2) throw std::invalid_argument("steinberg_character: p must be >= 2");
    if (n < 1) throw std::invalid_argument("steinberg_character: n must be >= 1");
    return weyl_character(rs, (ipow_checked(p, n) - 1) * rs.rho);
}

struct ChiBasisDecomposition {
    std::vector<std::pair<Weight, Int>> entries;  // (dominant weight, coefficient)
};

// Repeated leading-term subtraction.  The leading term is the dominant
// support weight of maximal <.,2rho^vee>-height, ties broken by largest lex
// coordinates; triangularity of the chi-basis makes the result independent
// of this choice.
inline ChiBasisDecomposition chi_decompose(const RootSystem& rs, const VirtualCharacter& a) {
    if (!weyl_invariant(rs, a))
        throw std::invalid_argument("chi_decompose: character is not W-invariant");
    ChiBasisDecomposition out;
    VirtualCharacter rem = a;
    for (long guard = 0; !rem.is_zero(); ++guard) {
        if (guard > 1000000) throw std::logic_error("chi_decompose did not terminate");
        const Weight* best = nullptr;
        Int best_h = 0;
        for (const auto& [w, m] : rem.terms) {
            if (!rs.is_dominant(w)) continue;
            Int h = rs.height_pairing(w);
            if (!best || h > best_h || (h == best_h && best->c < w.c)) {
                best = &w;
                best_h = h;
            }
        }
        if (!best) throw std::logic_error("chi_decompose: no dominant leading term");
        Weight mu = *best;
        Int coeff = rem.mult(mu);
        out.entries.emplace_back(mu, coeff);
        rem -= coeff * weyl_character(rs, mu);
    }
    return out;
}

inline VirtualCharacter chi_reconstruct(const RootSystem& rs, const ChiBasisDecomposition& dec) {
    VirtualCharacter out;
    for (const auto& [mu, k] : dec.entries) out += k * weyl_character(rs, mu);
    return out;
}

}  // namespace flagcoh
