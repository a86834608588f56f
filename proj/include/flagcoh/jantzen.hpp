#pragma once

// p-adic valuations, the Jantzen sum formula for Weyl modules, its generic
// higher-cohomology analogue, the cyclic-module Euler character, the
// simplicity criterion, and the independent rank-1 oracle used to validate
// all of them.

#include "flagcoh/charring.hpp"
#include "flagcoh/cohomology.hpp"
#include "flagcoh/linkage.hpp"

namespace flagcoh {

// largest s with p^s | m
inline Int nu_p(Int p, Int m) {
    if (p < 2) throw std::invalid_argument("nu_p: p must be >= 2");
    if (m < 1) throw std::invalid_argument("nu_p: m must be >= 1");
    Int s = 0;
    while (m % p == 0) {
        m /= p;
        ++s;
    }
    return s;
}

// E^p(la tensor Z/m) = nu_p(m) chi(la)
inline VirtualCharacter ep_cyclic(const RootSystem& rs, const Weight& la, Int m, Int p) {
    Int s = nu_p(p, m);
    if (s == 0) return {};
    return s * chi(rs, la);
}

struct SumFormulaResult {
    VirtualCharacter character;
    ChiBasisDecomposition chi_support;
    bool is_zero = false;
};

namespace detail {

// chi with the Weyl characters of repeated dominant conjugates cached
struct ChiCache {
    const RootSystem& rs;
    std::map<Weight, VirtualCharacter> cache;

    VirtualCharacter operator()(const Weight& w) {
        BottAnswer b = dominant_dot_conjugate(rs, w);
        if (b.singular) return {};
        auto it = cache.find(b.dominant);
        if (it == cache.end())
            it = cache.emplace(b.dominant, weyl_character(rs, b.dominant)).first;
        return (b.degree % 2 != 0) ? -it->second : it->second;
    }
};

inline SumFormulaResult finish_sum(const RootSystem& rs, VirtualCharacter acc) {
    SumFormulaResult res;
    res.is_zero = acc.is_zero();
    res.chi_support = chi_decompose(rs, acc);
    res.character = std::move(acc);
    return res;
}

}  // namespace detail

// - sum over beta in R+ and 0 < m < <la+rho,beta^vee> of nu_p(m) chi(la - m beta);
// the character of the sum of the Jantzen filtration layers of the Weyl module.
inline SumFormulaResult jantzen_sum_weyl(const RootSystem& rs, const Weight& la, Int p) {
    if (p < 2) throw std::invalid_argument("jantzen_sum_weyl: p must be >= 2");
    rs.check_rank(la);
    if (!rs.is_dominant(la))
        throw std::invalid_argument("jantzen_sum_weyl: weight " + la.str() + " is not dominant");
    detail::ChiCache chi_of{rs, {}};
    VirtualCharacter acc;
    for (int b = 0; b < rs.N; ++b) {
        Int bound = rs.pairing(la + rs.rho, b);
        const Weight& beta = rs.positive_roots[b];
        for (Int m = p; m < bound; m += p) {  // nu_p(m) = 0 off multiples of p
            acc -= nu_p(p, m) * chi_of(la - m * beta);
        }
    }
    return detail::finish_sum(rs, std::move(acc));
}

// true iff the Jantzen sum vanishes, i.e. the Weyl module is simple
inline bool weyl_module_simple(const RootSystem& rs, const Weight& la, Int p) {
    return jantzen_sum_weyl(rs, la, p).is_zero;
}

enum class RConvention {
    Max,  // r_beta = max{r >= 0 : p^r <= <la+rho, beta^vee>}
    Min,  // r_beta = min{r >= 0 : p^r <= <la+rho, beta^vee>}, identically 0 here
};

// (sum over alpha in R+ with w(alpha) in R+ of r_alpha) chi(la)
//   + sum over beta in R+ of sgn(w(beta)) sum_{0<m<<la+rho,beta^vee>} nu_p(m) chi(la - m beta);
// at w = w0 this reduces to jantzen_sum_weyl, independent of the convention.
inline SumFormulaResult generic_sum(const RootSystem& rs, const Weight& la, const WeylElement& w,
                                    Int p, Int n, RConvention conv = RConvention::Max) {
    if (!is_generic(rs, la, p, n))
        throw std::domain_error("generic_sum: weight " + la.str() + " is not generic for p=" +
                                std::to_string(p) + ", n=" + std::to_string(n));
    auto r_beta = [&](Int bound) -> Int {
        if (conv == RConvention::Min) return 0;  // p^0 = 1 <= bound always
        Int r = 0, q = p;
        while (q <= bound) {
            ++r;
            q *= p;
        }
        return r;
    };
    auto positive = [&](const Weight& root_image) {
        auto rc = rs.root_coordinates(root_image);
        return rc && std::all_of(rc->begin(), rc->end(), [](Int x) { return x >= 0; });
    };

    detail::ChiCache chi_of{rs, {}};
    const Weight la_rho = la + rs.rho;
    Int leading = 0;
    VirtualCharacter acc;
    for (int b = 0; b < rs.N; ++b) {
        Int bound = rs.pairing(la_rho, b);
        bool pos = positive(act(rs, w, rs.positive_roots[b]));
        if (pos) leading += r_beta(bound);
        Int sgn = pos ? 1 : -1;
        const Weight& beta = rs.positive_roots[b];
        for (Int m = p; m < bound; m += p)
            acc += sgn * nu_p(p, m) * chi_of(la - m * beta);
    }
    acc += leading * chi_of(la);
    return detail::finish_sum(rs, std::move(acc));
}

// Rank-1 oracle: Char L(la) = prod_i Frob^i(chi(la_i)) over the base-p digits
// la = sum la_i p^i.
inline VirtualCharacter sl2_simple_char(const RootSystem& rs, const Weight& la, Int p) {
    if (rs.rank != 1) throw std::domain_error("sl2_simple_char: rank-1 root systems only");
    if (p < 2) throw std::invalid_argument("sl2_simple_char: p must be >= 2");
    if (la.c[0] < 0) throw std::invalid_argument("sl2_simple_char: weight must be >= 0");
    VirtualCharacter out = weyl_character(rs, Weight::zero(1));
    Int rest = la.c[0];
    Int n = 0;
    while (rest > 0) {
        Int digit = rest % p;
        rest /= p;
        if (digit != 0)
            out = tensor(out, frobenius_twist(rs, weyl_character(rs, Weight{digit}), p, n));
        ++n;
    }
    return out;
}

// [Delta(la) : L(mu)] for rank 1, by leading-term subtraction of simple
// characters from the Weyl character
inline std::vector<std::pair<Weight, Int>> sl2_weyl_decomposition(const RootSystem& rs,
                                                                  const Weight& la, Int p) {
    if (rs.rank != 1) throw std::domain_error("sl2_weyl_decomposition: rank-1 root systems only");
    VirtualCharacter rem = weyl_character(rs, la);
    std::vector<std::pair<Weight, Int>> out;
    while (!rem.is_zero()) {
        auto lead = std::prev(rem.terms.end());  // largest weight
        Weight mu = lead->first;
        Int m = lead->second;
        if (m < 0 || mu.c[0] < 0)
            throw std::logic_error("sl2_weyl_decomposition: negative leading term");
        out.emplace_back(mu, m);
        rem -= m * sl2_simple_char(rs, mu, p);
    }
    return out;
}

}  // namespace flagcoh
