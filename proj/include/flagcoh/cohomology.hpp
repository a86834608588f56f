#pragma once

// Vanishing and non-vanishing criteria for the cohomology of line bundles on
// G/B: the characteristic-0 answer, Serre duality, the always-valid vanishing
// rules, p-adic weight decomposition, Frobenius-Steinberg transport at the
// Euler-characteristic level, the p^n-dilated lower bound for D_p(i), the
// exact first/top-minus-one cohomology tests, and generic-weight reports.

#include "flagcoh/charring.hpp"

namespace flagcoh {

struct PrimeContext {
    Int p;
    Int n;

    PrimeContext(Int p_, Int n_) : p(p_), n(n_) {
        if (n < 0) throw std::invalid_argument("twist level n must be >= 0");
        if (p < 2) throw std::domain_error("p must be a prime >= 2");
        for (Int d = 2; d * d <= p; ++d)
            if (p % d == 0) throw std::domain_error(std::to_string(p) + " is not prime");
    }
};

// characteristic-0: singular weights have no cohomology, regular ones exactly
// one, in degree l(witness), isomorphic to H^0(dominant)
inline BottAnswer bott(const RootSystem& rs, const Weight& la) {
    return dominant_dot_conjugate(rs, la);
}

// H^i(la)^* = H^{N-i}(-la-2rho); an involution
inline std::pair<Weight, int> serre_dual(const RootSystem& rs, const Weight& la, int i) {
    rs.check_rank(la);
    if (i < 0 || i > rs.N)
        throw std::out_of_range("serre_dual: degree must lie in [0," + std::to_string(rs.N) + "]");
    return {-la - 2 * rs.rho, rs.N - i};
}

enum class Vanishing { Vanishes, Unknown };

// The rules that force H^i(la) = 0 in every characteristic: degrees above N,
// higher cohomology of dominant weights, pairing -1 with a simple root,
// degree 0 off the dominant cone, degree N off the antidominant cone.
// Never claims non-vanishing.
inline Vanishing trivial_vanishing(const RootSystem& rs, const Weight& la, int i, Int p) {
    rs.check_rank(la);
    if (i < 0) throw std::invalid_argument("trivial_vanishing: i must be >= 0");
    if (p < 2) throw std::invalid_argument("trivial_vanishing: p must be >= 2");
    if (i > rs.N) return Vanishing::Vanishes;
    for (int j = 0; j < rs.rank; ++j)
        if (la.c[j] == -1) return Vanishing::Vanishes;
    bool dom = rs.is_dominant(la);
    if (dom && i > 0) return Vanishing::Vanishes;
    if (i == 0 && !dom) return Vanishing::Vanishes;
    if (i == rs.N && !rs.is_antidominant(la)) return Vanishing::Vanishes;
    return Vanishing::Unknown;
}

// la = la0 + p^n la1 with la0 p^n-restricted; coordinate-wise Euclidean
// division with remainders in [0, p^n - 1]
inline std::pair<Weight, Weight> decompose_p_adic(const RootSystem& rs, const Weight& la, Int p, Int n) {
    rs.check_rank(la);
    if (p < 2) throw std::invalid_argument("decompose_p_adic: p must be >= 2");
    if (n < 1) throw std::invalid_argument("decompose_p_adic: n must be >= 1");
    Int q = ipow_checked(p, n);
    Weight la0 = Weight::zero(rs.rank), la1 = Weight::zero(rs.rank);
    for (int j = 0; j < rs.rank; ++j) {
        Int rem = ((la.c[j] % q) + q) % q;
        la0.c[j] = rem;
        la1.c[j] = (la.c[j] - rem) / q;
    }
    return {la0, la1};
}

// p^n . la = p^n(la + rho) - rho
inline Weight p_dot(const RootSystem& rs, const Weight& la, Int p, Int n) {
    rs.check_rank(la);
    if (p < 2) throw std::invalid_argument("p_dot: p must be >= 2");
    if (n < 0) throw std::invalid_argument("p_dot: n must be >= 0");
    return ipow_checked(p, n) * (la + rs.rho) - rs.rho;
}

// Char St_n tensor Frob^n(chi(la)); equals chi(p^n . la) exactly
inline VirtualCharacter frobenius_steinberg_chi(const RootSystem& rs, const Weight& la, Int p, Int n) {
    if (n < 1) throw std::invalid_argument("frobenius_steinberg_chi: n must be >= 1");
    VirtualCharacter twisted = frobenius_twist(rs, chi(rs, la), p, n);
    if (twisted.is_zero()) return twisted;
    return tensor(steinberg_character(rs, p, n), twisted);
}

namespace detail {

// Membership of la in p^n.w.X+ + delta*X_n for the fixed (n, delta): the
// residue of la+rho mod p^n determines the only possible xi in X_n, so the
// candidate nu = (la+rho-delta*xi)/p^n is unique.  Returns the chamber word
// u with u(nu) strictly dominant when nu is regular.
struct ResidueCandidate {
    bool regular = false;
    Weight nu;
    std::vector<int> chamber;  // word of u
    Weight mu;                 // u(nu) - rho, dominant when regular
};

inline ResidueCandidate residue_candidate(const RootSystem& rs, const Weight& la_rho, Int q, int delta) {
    ResidueCandidate rc;
    Weight nu = Weight::zero(rs.rank);
    for (int j = 0; j < rs.rank; ++j) {
        Int xi = ((delta * la_rho.c[j]) % q + q) % q;  // the unique X_n residue
        nu.c[j] = (la_rho.c[j] - delta * xi) / q;
    }
    if (!rs.is_regular(nu)) return rc;
    rc.regular = true;
    rc.nu = nu;
    Weight v = nu;
    rc.chamber = make_dominant_record(rs, v);
    rc.mu = v - rs.rho;
    return rc;
}

// levels 0..n*+1, where p^{n*} > 2 max|<la+rho,alpha_j^vee>| + 2; beyond
// that the residue and the sign pattern of nu are constant
inline Int stabilization_level(const Weight& la_rho, Int p) {
    Int mx = 0;
    for (Int x : la_rho.c) mx = std::max(mx, x < 0 ? -x : x);
    Int n = 0, q = 1;
    while (q <= 2 * mx + 2) {
        ++n;
        q *= p;
    }
    return n;
}

}  // namespace detail

struct DpiWitness {
    Int n = 0;
    int delta = 1;
    WeylElement w;
    Weight mu;  // la = p^n . (w . mu) + delta * xi with xi in X_n
};

struct DpiVerdict {
    bool nonvanishing = false;
    std::optional<DpiWitness> witness;
};

// Lower bound for D_p(i): Nonvanishing iff la lies in the union of
// p^n.w.X+ +- X_n over n >= 0 and l(w) = i.  Exact at i = 0, 1, N-1, N;
// an inclusion only in between, hence a verdict rather than a boolean.
inline DpiVerdict dpi_lower_bound(const RootSystem& rs, const Weight& la, int i, Int p) {
    rs.check_rank(la);
    if (p < 2) throw std::invalid_argument("dpi_lower_bound: p must be >= 2");
    if (i < 0 || i > rs.N)
        throw std::out_of_range("dpi_lower_bound: degree must lie in [0," + std::to_string(rs.N) + "]");
    const Weight la_rho = la + rs.rho;
    const Int n_hi = detail::stabilization_level(la_rho, p) + 1;
    Int q = 1;
    for (Int n = 0; n <= n_hi; ++n, q *= p) {
        for (int delta : {+1, -1}) {
            if (q == 1 && delta == -1) continue;  // X_0 = {0}: both signs coincide
            auto cand = detail::residue_candidate(rs, la_rho, q, delta);
            if (!cand.regular) continue;
            if (static_cast<int>(cand.chamber.size()) != i) continue;
            DpiWitness wit;
            wit.n = n;
            wit.delta = delta;
            wit.w = WeylElement{cand.chamber};  // nu = w(mu + rho)
            wit.mu = cand.mu;
            return {true, wit};
        }
    }
    return {false, std::nullopt};
}

// H^1(la) != 0 iff la lies in the union of p^n . s_alpha . X+ - X_n over
// simple alpha and n >= 0
inline bool h1_nonvanishing(const RootSystem& rs, const Weight& la, Int p) {
    rs.check_rank(la);
    if (p < 2) throw std::invalid_argument("h1_nonvanishing: p must be >= 2");
    const Weight la_rho = la + rs.rho;
    const Int n_hi = detail::stabilization_level(la_rho, p) + 1;
    Int q = 1;
    for (Int n = 0; n <= n_hi; ++n, q *= p) {
        auto cand = detail::residue_candidate(rs, la_rho, q, -1);
        if (cand.regular && cand.chamber.size() == 1) return true;
    }
    return false;
}

// direct membership in the union of p^n . s_alpha . X- + X_n
inline bool hN1_nonvanishing_direct(const RootSystem& rs, const Weight& la, Int p) {
    rs.check_rank(la);
    if (p < 2) throw std::invalid_argument("hN1_nonvanishing: p must be >= 2");
    const Weight la_rho = la + rs.rho;
    const Int n_hi = detail::stabilization_level(la_rho, p) + 1;
    Int q = 1;
    for (Int n = 0; n <= n_hi; ++n, q *= p) {
        Weight nu = Weight::zero(rs.rank);
        for (int j = 0; j < rs.rank; ++j) {
            Int xi = (la_rho.c[j] % q + q) % q;
            nu.c[j] = (la_rho.c[j] - xi) / q;
        }
        for (int a = 0; a < rs.rank; ++a) {
            Weight y = simple_reflect(rs, a, nu);  // = mu + rho, needs mu in X-
            if (std::all_of(y.c.begin(), y.c.end(), [](Int x) { return x < 0; })) return true;
        }
    }
    return false;
}

// computed through Serre duality; coincides with the direct membership test
inline bool hN1_nonvanishing(const RootSystem& rs, const Weight& la, Int p) {
    return h1_nonvanishing(rs, -la - 2 * rs.rho, p);
}

// la = la0 + p^n la1 generic: 6(h-1) <= <la1,beta^vee> <= p - 6(h-1) for
// every positive root beta
inline bool is_generic(const RootSystem& rs, const Weight& la, Int p, Int n) {
    rs.check_rank(la);
    if (p < 2) throw std::invalid_argument("is_generic: p must be >= 2");
    if (n < 1) throw std::invalid_argument("is_generic: n must be >= 1");
    if (!rs.is_dominant(la))
        throw std::invalid_argument("is_generic: weight " + la.str() + " is not dominant");
    const Int h = rs.coxeter_number;
    if (p <= 12 * (h - 1)) return false;  // no generic weights below this bound
    auto [la0, la1] = decompose_p_adic(rs, la, p, n);
    for (int b = 0; b < rs.N; ++b) {
        Int t = rs.pairing(la1, b);
        if (t < 6 * (h - 1) || t > p - 6 * (h - 1)) return false;
    }
    return true;
}

// la^w = (w.la)^0 + p^n w^{-1}.((w.la)^1)
inline Weight generic_socle_weight(const RootSystem& rs, const Weight& la, const WeylElement& w,
                                   Int p, Int n) {
    Weight wla = dot(rs, w, la);
    auto [a0, a1] = decompose_p_adic(rs, wla, p, n);
    return a0 + ipow_checked(p, n) * dot(rs, inverse(rs, w), a1);
}

struct GenericReport {
    int degree = 0;        // the only degree with nonzero cohomology: l(w)
    Weight socle_weight;   // la^w
    Weight head_weight;    // la^{w0 w}
};

inline GenericReport generic_report(const RootSystem& rs, const Weight& la, const WeylElement& w,
                                    Int p, Int n) {
    if (!is_generic(rs, la, p, n))
        throw std::domain_error("generic_report: weight " + la.str() + " is not generic for p=" +
                                std::to_string(p) + ", n=" + std::to_string(n));
    GenericReport rep;
    rep.degree = w.length();
    rep.socle_weight = generic_socle_weight(rs, la, w, p, n);
    rep.head_weight = generic_socle_weight(rs, la, compose(rs, longest_element(rs), w), p, n);
    if (!rs.is_dominant(rep.socle_weight) || !rs.is_dominant(rep.head_weight))
        throw std::logic_error("generic_report: socle/head weight not dominant");
    return rep;
}

}  // namespace flagcoh
