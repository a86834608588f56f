#pragma once

// The strong-linkage relation: one-step reflections mu' = s_beta . nu + n p beta
// with mu' <= nu, witnessing chains, the down-set of strongly linked dominant
// weights, the affine-orbit (linkage class) test, and the auxiliary sets
// X_alpha^la.

#include "flagcoh/weyl.hpp"

#include <functional>
#include <unordered_set>

namespace flagcoh {

// One chain step: wt = s_beta . (previous weight) + n p beta, with wt <= previous.
// Steps run from the top weight downwards.
struct LinkageStep {
    Weight wt;
    int beta = 0;
    Int n = 0;
};

struct LinkageChain {
    std::vector<LinkageStep> steps;  // empty chain: the two weights are equal
};

// replay the chain from la downwards and confirm it ends at mu
inline bool chain_valid(const RootSystem& rs, const LinkageChain& chain, const Weight& mu,
                        const Weight& la, Int p) {
    Weight cur = la;
    for (const auto& st : chain.steps) {
        Weight next = affine_reflect(rs, st.beta, st.n, p, cur);
        if (next != st.wt || !rs.leq(next, cur)) return false;
        cur = next;
    }
    return cur == mu;
}

namespace detail {

// c ranges over {c > 0 : c = <nu+rho,beta^vee> mod p}, capped so that
// nu - c*beta stays >= the lower bound; budget holds the root coordinates
// of nu - bound.
struct LinkageSearch {
    const RootSystem& rs;
    Int p;
    std::unordered_set<Weight, WeightHash> failed;

    bool dfs(const Weight& nu, const std::vector<Int>& budget, const Weight& target,
             std::vector<LinkageStep>& steps) {
        if (nu == target) return true;
        if (failed.count(nu)) return false;
        Weight nu_rho = nu + rs.rho;
        for (int b = 0; b < rs.N; ++b) {
            Int t = rs.pairing(nu_rho, b);
            const auto& brc = rs.root_coords[b];
            Int cap = std::numeric_limits<Int>::max();
            for (int j = 0; j < rs.rank; ++j)
                if (brc[j] > 0) cap = std::min(cap, budget[j] / brc[j]);
            Int c0 = ((t % p) + p) % p;
            if (c0 == 0) c0 = p;
            for (Int c = c0; c <= cap; c += p) {
                Weight nxt = nu - c * rs.positive_roots[b];
                std::vector<Int> nb = budget;
                for (int j = 0; j < rs.rank; ++j) nb[j] -= c * brc[j];
                steps.push_back({nxt, b, (t - c) / p});
                if (dfs(nxt, nb, target, steps)) return true;
                steps.pop_back();
            }
        }
        failed.insert(nu);
        return false;
    }
};

}  // namespace detail

// A verifying chain for mu up-arrow la, or nullopt.  Search descends from la
// through one-step predecessors, pruned to weights >= mu, with memoized
// failures.
inline std::optional<LinkageChain> strongly_linked(const RootSystem& rs, const Weight& mu,
                                                   const Weight& la, Int p) {
    if (p < 2) throw std::invalid_argument("strongly_linked: p must be >= 2");
    rs.check_rank(mu);
    rs.check_rank(la);
    auto diff = rs.root_coordinates(la - mu);
    if (!diff || std::any_of(diff->begin(), diff->end(), [](Int x) { return x < 0; }))
        return std::nullopt;  // mu <= la is necessary
    detail::LinkageSearch search{rs, p, {}};
    LinkageChain chain;
    if (!search.dfs(la, *diff, mu, chain.steps)) return std::nullopt;
    return chain;
}

// the affine-orbit test: same W_p dot-orbit iff equal alcove normal forms
inline bool linked(const RootSystem& rs, const Weight& mu, const Weight& la, Int p) {
    return wp_normal_form(rs, mu, p) == wp_normal_form(rs, la, p);
}

struct DownSetEntry {
    Weight wt;
    LinkageChain chain;
};

// SL(<la): all mu in X+ - rho with mu strongly linked to la and mu < la,
// sorted lex, each carrying its verifying chain.  The default search box is
// bounded below by w0 . la, which every such mu dominates.
inline std::vector<DownSetEntry> sl_down_set(const RootSystem& rs, const Weight& la, Int p,
                                             const std::optional<Weight>& lower_bound = std::nullopt) {
    if (p < 2) throw std::invalid_argument("sl_down_set: p must be >= 2");
    rs.check_rank(la);
    if (!rs.is_dominant(la + rs.rho))
        throw std::invalid_argument("sl_down_set: la + rho must be dominant");
    Weight bound = lower_bound ? *lower_bound : dot(rs, longest_element(rs), la);
    auto box = rs.root_coordinates(la - bound);
    if (!box || std::any_of(box->begin(), box->end(), [](Int x) { return x < 0; }))
        throw std::invalid_argument("sl_down_set: lower bound does not lie below la");

    struct Parent {
        Weight above;
        int beta;
        Int n;
    };
    std::map<Weight, Parent> parents;  // reached weights, excluding la
    std::map<Weight, std::vector<Int>> frontier{{la, *box}};
    std::deque<Weight> queue{la};
    std::unordered_set<Weight, WeightHash> visited{la};
    while (!queue.empty()) {
        Weight nu = queue.front();
        queue.pop_front();
        std::vector<Int> budget = frontier.at(nu);
        Weight nu_rho = nu + rs.rho;
        for (int b = 0; b < rs.N; ++b) {
            Int t = rs.pairing(nu_rho, b);
            const auto& brc = rs.root_coords[b];
            Int cap = std::numeric_limits<Int>::max();
            for (int j = 0; j < rs.rank; ++j)
                if (brc[j] > 0) cap = std::min(cap, budget[j] / brc[j]);
            Int c0 = ((t % p) + p) % p;
            if (c0 == 0) c0 = p;
            for (Int c = c0; c <= cap; c += p) {
                Weight nxt = nu - c * rs.positive_roots[b];
                if (visited.count(nxt)) continue;
                visited.insert(nxt);
                std::vector<Int> nb = budget;
                for (int j = 0; j < rs.rank; ++j) nb[j] -= c * brc[j];
                parents.emplace(nxt, Parent{nu, b, (t - c) / p});
                frontier.emplace(nxt, std::move(nb));
                queue.push_back(nxt);
            }
        }
        frontier.erase(nu);
    }

    std::vector<DownSetEntry> out;
    for (const auto& [wt, par] : parents) {
        if (!rs.is_dominant(wt + rs.rho)) continue;
        DownSetEntry e;
        e.wt = wt;
        Weight cur = wt;
        while (cur != la) {
            const Parent& pr = parents.at(cur);
            e.chain.steps.push_back({cur, pr.beta, pr.n});
            cur = pr.above;
        }
        std::reverse(e.chain.steps.begin(), e.chain.steps.end());
        out.push_back(std::move(e));
    }
    // parents is keyed lex-sorted already; keep the order explicit anyway
    std::sort(out.begin(), out.end(),
              [](const DownSetEntry& a, const DownSetEntry& b) { return a.wt < b.wt; });
    return out;
}

// X_alpha^la = {s_alpha . la + r p alpha | 0 < rp < <la+rho, alpha^vee>},
// ascending in r; alpha is a simple-root index
inline std::vector<Weight> x_alpha_set(const RootSystem& rs, const Weight& la, int alpha, Int p) {
    if (p < 2) throw std::invalid_argument("x_alpha_set: p must be >= 2");
    if (alpha < 0 || alpha >= rs.rank) throw std::out_of_range("x_alpha_set: not a simple root");
    Int t = rs.pairing(la + rs.rho, alpha);
    if (t < 0) throw std::invalid_argument("x_alpha_set: <la+rho, alpha^vee> must be >= 0");
    std::vector<Weight> out;
    for (Int r = 1; r * p < t; ++r) out.push_back(affine_reflect(rs, alpha, r, p, la));
    return out;
}

}  // namespace flagcoh
