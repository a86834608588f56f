#pragma once

// Finite root systems of types A-G over the weight lattice of the simply
// connected group, in fundamental-weight coordinates throughout.  All
// arithmetic is exact 64-bit integer arithmetic; construction cross-checks
// the classical invariants (root count, Coxeter number, symmetrizability).

#include <algorithm>
#include <cstdint>
#include <limits>
#include <numeric>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace flagcoh {

using Int = std::int64_t;

inline Int ipow_checked(Int base, Int exp) {
    if (base < 0 || exp < 0) throw std::invalid_argument("ipow_checked: negative input");
    __int128 acc = 1;
    for (Int k = 0; k < exp; ++k) {
        acc *= base;
        if (acc > std::numeric_limits<Int>::max())
            throw std::overflow_error("ipow_checked: result exceeds 64 bits");
    }
    return static_cast<Int>(acc);
}

// Element of the weight lattice X; coordinate i is the pairing with the
// i-th simple coroot.
struct Weight {
    std::vector<Int> c;

    Weight() = default;
    explicit Weight(std::vector<Int> v) : c(std::move(v)) {}
    Weight(std::initializer_list<Int> v) : c(v) {}

    static Weight zero(std::size_t rank) { return Weight(std::vector<Int>(rank, 0)); }

    std::size_t rank() const { return c.size(); }
    Int operator[](std::size_t i) const { return c[i]; }
    Int& operator[](std::size_t i) { return c[i]; }

    bool is_zero() const {
        return std::all_of(c.begin(), c.end(), [](Int x) { return x == 0; });
    }

    Weight& operator+=(const Weight& o) {
        for (std::size_t i = 0; i < c.size(); ++i) c[i] += o.c[i];
        return *this;
    }
    Weight& operator-=(const Weight& o) {
        for (std::size_t i = 0; i < c.size(); ++i) c[i] -= o.c[i];
        return *this;
    }
    Weight& operator*=(Int k) {
        for (auto& x : c) x *= k;
        return *this;
    }

    friend Weight operator+(Weight a, const Weight& b) { return a += b; }
    friend Weight operator-(Weight a, const Weight& b) { return a -= b; }
    friend Weight operator-(Weight a) {
        for (auto& x : a.c) x = -x;
        return a;
    }
    friend Weight operator*(Int k, Weight a) { return a *= k; }

    friend bool operator==(const Weight& a, const Weight& b) { return a.c == b.c; }
    friend bool operator!=(const Weight& a, const Weight& b) { return a.c != b.c; }
    friend bool operator<(const Weight& a, const Weight& b) { return a.c < b.c; }  // lex

    std::string str() const {
        std::string s;
        for (std::size_t i = 0; i < c.size(); ++i) {
            if (i) s += ',';
            s += std::to_string(c[i]);
        }
        return s;
    }
};

struct WeightHash {
    std::size_t operator()(const Weight& w) const {
        std::size_t h = 1469598103934665603ull;
        for (Int x : w.c) {
            h ^= static_cast<std::size_t>(x) + 0x9e3779b97f4a7c15ull;
            h *= 1099511628211ull;
        }
        return h;
    }
};

struct CartanType {
    char family = 'A';  // one of A,B,C,D,E,F,G
    int rank = 1;

    void validate() const {
        auto fail = [&](const std::string& bound) {
            throw std::invalid_argument("invalid Cartan type " + name() + ": requires " + bound);
        };
        switch (family) {
            case 'A': if (rank < 1) fail("rank >= 1"); break;
            case 'B': if (rank < 2) fail("rank >= 2"); break;
            case 'C': if (rank < 2) fail("rank >= 2"); break;
            case 'D': if (rank < 4) fail("rank >= 4"); break;
            case 'E': if (rank < 6 || rank > 8) fail("rank in {6,7,8}"); break;
            case 'F': if (rank != 4) fail("rank = 4"); break;
            case 'G': if (rank != 2) fail("rank = 2"); break;
            default: throw std::invalid_argument(std::string("unknown family '") + family + "'");
        }
    }

    std::string name() const { return std::string(1, family) + std::to_string(rank); }

    static CartanType parse(const std::string& s) {
        if (s.size() < 2) throw std::invalid_argument("cannot parse Cartan type '" + s + "'");
        char f = static_cast<char>(std::toupper(static_cast<unsigned char>(s[0])));
        int r = 0;
        for (std::size_t i = 1; i < s.size(); ++i) {
            if (!std::isdigit(static_cast<unsigned char>(s[i])))
                throw std::invalid_argument("cannot parse Cartan type '" + s + "'");
            r = r * 10 + (s[i] - '0');
            if (r > 1000) throw std::invalid_argument("rank out of range in '" + s + "'");
        }
        CartanType ct{f, r};
        ct.validate();
        return ct;
    }

    friend bool operator==(const CartanType& a, const CartanType& b) {
        return a.family == b.family && a.rank == b.rank;
    }
};

namespace detail {

// determinant of a small integer matrix, by cofactor expansion
inline Int int_det(const std::vector<std::vector<Int>>& m) {
    std::size_t n = m.size();
    if (n == 0) return 1;
    if (n == 1) return m[0][0];
    Int det = 0;
    for (std::size_t j = 0; j < n; ++j) {
        if (m[0][j] == 0) continue;
        std::vector<std::vector<Int>> minor(n - 1, std::vector<Int>(n - 1));
        for (std::size_t r = 1; r < n; ++r) {
            std::size_t cc = 0;
            for (std::size_t col = 0; col < n; ++col)
                if (col != j) minor[r - 1][cc++] = m[r][col];
        }
        Int term = m[0][j] * int_det(minor);
        det += (j % 2 == 0) ? term : -term;
    }
    return det;
}

inline std::vector<std::vector<Int>> int_adjugate(const std::vector<std::vector<Int>>& m) {
    std::size_t n = m.size();
    std::vector<std::vector<Int>> adj(n, std::vector<Int>(n, 0));
    if (n == 1) {
        adj[0][0] = 1;
        return adj;
    }
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            std::vector<std::vector<Int>> minor(n - 1, std::vector<Int>(n - 1));
            std::size_t rr = 0;
            for (std::size_t r = 0; r < n; ++r) {
                if (r == i) continue;
                std::size_t cc = 0;
                for (std::size_t col = 0; col < n; ++col)
                    if (col != j) minor[rr][cc++] = m[r][col];
                ++rr;
            }
            Int cof = int_det(minor);
            adj[j][i] = ((i + j) % 2 == 0) ? cof : -cof;  // adjugate = transposed cofactors
        }
    }
    return adj;
}

}  // namespace detail

// Immutable after construction; all member queries are pure.
struct RootSystem {
    CartanType type;
    int rank = 0;
    int N = 0;                                   // number of positive roots
    Int coxeter_number = 0;                      // h
    std::vector<std::vector<Int>> cartan;        // cartan[i][j] = <alpha_j, alpha_i^vee>
    std::vector<Int> symmetrizer;                // d_i = (alpha_i,alpha_i)/2, short roots = 1
    std::vector<Weight> positive_roots;          // fundamental-weight coords; simple roots first
    std::vector<std::vector<Int>> root_coords;   // simple-root coordinates of each positive root
    std::vector<std::vector<Int>> coroot_table;  // row b computes <., beta_b^vee>
    std::vector<Int> root_norm;                  // d_beta = (beta,beta)/2
    Weight rho;
    int highest_root_index = -1;    // unique root of maximal height
    int highest_coroot_index = -1;  // beta maximizing <rho, beta^vee>
    std::vector<std::vector<Int>> cartan_adj;  // adjugate of the Cartan matrix
    Int cartan_det = 1;
    std::vector<Int> two_rho_vee;  // row computing sum over beta of <., beta^vee>

    void check_rank(const Weight& w) const {
        if (static_cast<int>(w.rank()) != rank)
            throw std::invalid_argument("weight has " + std::to_string(w.rank()) +
                                        " coordinates, expected " + std::to_string(rank) +
                                        " for type " + type.name());
    }

    Int pairing(const Weight& w, int beta) const {
        if (beta < 0 || beta >= N) throw std::out_of_range("positive-root index out of range");
        check_rank(w);
        const auto& row = coroot_table[beta];
        Int s = 0;
        for (int j = 0; j < rank; ++j) s += row[j] * w.c[j];
        return s;
    }

    bool is_dominant(const Weight& w) const {
        check_rank(w);
        return std::all_of(w.c.begin(), w.c.end(), [](Int x) { return x >= 0; });
    }
    bool is_strictly_dominant(const Weight& w) const {
        check_rank(w);
        return std::all_of(w.c.begin(), w.c.end(), [](Int x) { return x > 0; });
    }
    bool is_antidominant(const Weight& w) const { return is_dominant(-w - 2 * rho); }

    // no positive root pairs to zero with w
    bool is_regular(const Weight& w) const {
        for (int b = 0; b < N; ++b)
            if (pairing(w, b) == 0) return false;
        return true;
    }

    // coordinates of v in the basis of simple roots, if v lies in the root lattice
    std::optional<std::vector<Int>> root_coordinates(const Weight& v) const {
        check_rank(v);
        std::vector<Int> out(rank);
        for (int i = 0; i < rank; ++i) {
            Int u = 0;
            for (int j = 0; j < rank; ++j) u += cartan_adj[i][j] * v.c[j];
            if (u % cartan_det != 0) return std::nullopt;
            out[i] = u / cartan_det;
        }
        return out;
    }

    // partial order: mu <= la iff la - mu is a nonnegative integer sum of simple roots
    bool leq(const Weight& mu, const Weight& la) const {
        auto rc = root_coordinates(la - mu);
        if (!rc) return false;
        return std::all_of(rc->begin(), rc->end(), [](Int x) { return x >= 0; });
    }

    Int height_pairing(const Weight& w) const {  // <w, 2 rho^vee>
        Int s = 0;
        for (int j = 0; j < rank; ++j) s += two_rho_vee[j] * w.c[j];
        return s;
    }
};

namespace detail {

inline Int classical_root_count(const CartanType& ct) {
    Int r = ct.rank;
    switch (ct.family) {
        case 'A': return r * (r + 1) / 2;
        case 'B':
        case 'C': return r * r;
        case 'D': return r * (r - 1);
        case 'E': return r == 6 ? 36 : (r == 7 ? 63 : 120);
        case 'F': return 24;
        case 'G': return 6;
    }
    return -1;
}

}  // namespace detail

inline RootSystem build_root_system(CartanType ct) {
    ct.validate();
    const int r = ct.rank;

    std::vector<std::vector<Int>> A(r, std::vector<Int>(r, 0));
    std::vector<Int> d(r, 1);
    for (int i = 0; i < r; ++i) A[i][i] = 2;
    auto bond = [&](int i, int j) { A[i][j] = A[j][i] = -1; };
    switch (ct.family) {
        case 'A':
            for (int i = 0; i + 1 < r; ++i) bond(i, i + 1);
            break;
        case 'B':  // alpha_r short, the rest long
            for (int i = 0; i + 2 < r; ++i) bond(i, i + 1);
            A[r - 2][r - 1] = -1;
            A[r - 1][r - 2] = -2;
            for (int i = 0; i + 1 < r; ++i) d[i] = 2;
            break;
        case 'C':  // alpha_r long, the rest short
            for (int i = 0; i + 2 < r; ++i) bond(i, i + 1);
            A[r - 2][r - 1] = -2;
            A[r - 1][r - 2] = -1;
            d[r - 1] = 2;
            break;
        case 'D':
            for (int i = 0; i + 2 < r; ++i) bond(i, i + 1);
            bond(r - 3, r - 1);
            break;
        case 'E':
            bond(0, 2);
            bond(2, 3);
            bond(3, 4);
            bond(4, 5);
            if (r >= 7) bond(5, 6);
            if (r >= 8) bond(6, 7);
            bond(1, 3);
            break;
        case 'F':
            bond(0, 1);
            bond(2, 3);
            A[1][2] = -1;
            A[2][1] = -2;
            d[0] = d[1] = 2;
            break;
        case 'G':
            A[0][1] = -3;
            A[1][0] = -1;
            d[1] = 3;
            break;
    }
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < r; ++j)
            if (d[i] * A[i][j] != d[j] * A[j][i])
                throw std::logic_error("Cartan matrix not symmetrizable: " + ct.name());

    RootSystem rs;
    rs.type = ct;
    rs.rank = r;
    rs.cartan = A;
    rs.symmetrizer = d;
    rs.rho = Weight(std::vector<Int>(r, 1));

    // close the simple roots under simple reflections; track both coordinate systems
    struct Rec {
        std::vector<Int> rc;
        Weight fw;
    };
    std::vector<Rec> roots;
    std::vector<std::vector<Int>> seen;
    auto fw_of_simple = [&](int i) {
        Weight w = Weight::zero(r);
        for (int k = 0; k < r; ++k) w[k] = A[k][i];
        return w;
    };
    for (int i = 0; i < r; ++i) {
        Rec rec;
        rec.rc.assign(r, 0);
        rec.rc[i] = 1;
        rec.fw = fw_of_simple(i);
        roots.push_back(rec);
        seen.push_back(rec.rc);
    }
    std::sort(seen.begin(), seen.end());
    for (std::size_t head = 0; head < roots.size(); ++head) {
        Rec cur = roots[head];
        for (int i = 0; i < r; ++i) {
            Int t = cur.fw[i];
            Rec nxt = cur;
            nxt.rc[i] -= t;
            for (int k = 0; k < r; ++k) nxt.fw[k] -= t * A[k][i];
            if (std::all_of(nxt.rc.begin(), nxt.rc.end(), [](Int x) { return x == 0; })) continue;
            if (std::any_of(nxt.rc.begin(), nxt.rc.end(), [](Int x) { return x < 0; })) continue;
            auto it = std::lower_bound(seen.begin(), seen.end(), nxt.rc);
            if (it != seen.end() && *it == nxt.rc) continue;
            seen.insert(it, nxt.rc);
            roots.push_back(nxt);
        }
    }

    // simple roots first (by index), then by height, then lex on coordinates
    std::sort(roots.begin(), roots.end(), [](const Rec& a, const Rec& b) {
        Int ha = std::accumulate(a.rc.begin(), a.rc.end(), Int(0));
        Int hb = std::accumulate(b.rc.begin(), b.rc.end(), Int(0));
        if (ha != hb) return ha < hb;
        if (ha == 1) return a.rc > b.rc;  // e_i order, alpha_1 first
        return a.fw.c < b.fw.c;
    });

    rs.N = static_cast<int>(roots.size());
    if (rs.N != detail::classical_root_count(ct))
        throw std::logic_error("root closure produced " + std::to_string(rs.N) +
                               " roots for " + ct.name());

    for (const auto& rec : roots) {
        rs.positive_roots.push_back(rec.fw);
        rs.root_coords.push_back(rec.rc);
        Int norm2 = 0;
        for (int j = 0; j < r; ++j) norm2 += rec.rc[j] * d[j] * rec.fw[j];
        if (norm2 <= 0 || norm2 % 2 != 0)
            throw std::logic_error("bad root norm in " + ct.name());
        Int dbeta = norm2 / 2;
        rs.root_norm.push_back(dbeta);
        std::vector<Int> row(r);
        for (int j = 0; j < r; ++j) {
            Int num = rec.rc[j] * d[j];
            if (num % dbeta != 0) throw std::logic_error("non-integral coroot in " + ct.name());
            row[j] = num / dbeta;
        }
        rs.coroot_table.push_back(row);
    }

    rs.two_rho_vee.assign(r, 0);
    Weight root_sum = Weight::zero(r);
    for (int b = 0; b < rs.N; ++b) {
        for (int j = 0; j < r; ++j) rs.two_rho_vee[j] += rs.coroot_table[b][j];
        root_sum += rs.positive_roots[b];
    }
    if (root_sum != 2 * rs.rho) throw std::logic_error("sum of positive roots != 2 rho");

    // highest root = unique maximal height; highest coroot maximizes <rho, .^vee>
    {
        Int best_h = -1, best_p = -1;
        for (int b = 0; b < rs.N; ++b) {
            Int h = std::accumulate(rs.root_coords[b].begin(), rs.root_coords[b].end(), Int(0));
            if (h > best_h) {
                best_h = h;
                rs.highest_root_index = b;
            }
            Int pr = 0;
            for (int j = 0; j < r; ++j) pr += rs.coroot_table[b][j];
            if (pr > best_p) {
                best_p = pr;
                rs.highest_coroot_index = b;
            }
        }
        rs.coxeter_number = best_p + 1;
        if (rs.coxeter_number != best_h + 1 || rs.coxeter_number * r != 2 * rs.N)
            throw std::logic_error("Coxeter number self-check failed for " + ct.name());
    }

    rs.cartan_det = detail::int_det(A);
    rs.cartan_adj = detail::int_adjugate(A);
    if (rs.cartan_det <= 0) throw std::logic_error("Cartan determinant not positive");
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < r; ++j) {
            Int s = 0;
            for (int k = 0; k < r; ++k) s += A[i][k] * rs.cartan_adj[k][j];
            if (s != (i == j ? rs.cartan_det : 0))
                throw std::logic_error("adjugate self-check failed");
        }

    return rs;
}

struct ChamberFlags {
    bool is_dominant = false;
    bool is_antidominant = false;
    bool in_Xn = false;
};

// X_n membership uses the coordinate-wise bound < p^n; X_0 = {0}.
inline ChamberFlags chamber_predicates(const RootSystem& rs, const Weight& la, Int p, Int n) {
    if (p < 2) throw std::invalid_argument("chamber_predicates: p must be >= 2");
    if (n < 0) throw std::invalid_argument("chamber_predicates: n must be >= 0");
    rs.check_rank(la);
    ChamberFlags f;
    f.is_dominant = rs.is_dominant(la);
    f.is_antidominant = rs.is_antidominant(la);
    Int q = ipow_checked(p, n);
    f.in_Xn = f.is_dominant &&
              std::all_of(la.c.begin(), la.c.end(), [&](Int x) { return x < q; });
    return f;
}

}  // namespace flagcoh
