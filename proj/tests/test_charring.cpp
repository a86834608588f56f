#include "flagcoh/charring.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <random>

using namespace flagcoh;

namespace {

// independent rank-1 oracle: the weight string la, la-2, ..., -la
VirtualCharacter sl2_string(Int la) {
    VirtualCharacter out;
    for (Int m = -la; m <= la; m += 2) out.add_term(Weight{m}, 1);
    return out;
}

Weight random_dominant(std::mt19937& rng, int rank, Int hi) {
    std::uniform_int_distribution<Int> coord(0, hi);
    Weight w = Weight::zero(rank);
    for (int j = 0; j < rank; ++j) w.c[j] = coord(rng);
    return w;
}

}  // namespace

TEST_CASE("rank-1 Weyl characters against the weight-string oracle", "[charring]") {
    auto a1 = build_root_system(CartanType::parse("A1"));
    for (Int la = 0; la <= 40; ++la)
        REQUIRE(weyl_character(a1, Weight{la}) == sl2_string(la));
}

TEST_CASE("Weyl character examples", "[charring]") {
    auto a1 = build_root_system(CartanType::parse("A1"));
    VirtualCharacter expect;
    expect.add_term(Weight{2}, 1);
    expect.add_term(Weight{0}, 1);
    expect.add_term(Weight{-2}, 1);
    CHECK(weyl_character(a1, Weight{2}) == expect);

    auto a2 = build_root_system(CartanType::parse("A2"));
    VirtualCharacter triv;
    triv.add_term(Weight::zero(2), 1);
    CHECK(weyl_character(a2, Weight::zero(2)) == triv);

    // adjoint of A2: six roots plus the zero weight with multiplicity 2
    auto adj = weyl_character(a2, Weight{1, 1});
    CHECK(adj.total_multiplicity() == 8);
    CHECK(adj.terms.size() == 7);
    CHECK(adj.mult(Weight{0, 0}) == 2);
    for (const auto& beta : a2.positive_roots) {
        CHECK(adj.mult(beta) == 1);
        CHECK(adj.mult(-beta) == 1);
    }

    // standard representation of A2
    auto std3 = weyl_character(a2, Weight{1, 0});
    CHECK(std3.total_multiplicity() == 3);
    CHECK(std3.mult(Weight{1, 0}) == 1);
    CHECK(std3.mult(Weight{-1, 1}) == 1);
    CHECK(std3.mult(Weight{0, -1}) == 1);

    CHECK_THROWS_AS(weyl_character(a1, Weight{-1}), std::invalid_argument);
}

TEST_CASE("highest weight has multiplicity one and bounds the support", "[charring]") {
    std::mt19937 rng(411);
    for (const auto& name : {"A2", "B2", "G2", "A3"}) {
        auto rs = build_root_system(CartanType::parse(name));
        WeylElement w0 = longest_element(rs);
        for (int trial = 0; trial < 8; ++trial) {
            Weight la = random_dominant(rng, rs.rank, 4);
            auto ch = weyl_character(rs, la);
            CHECK(ch.mult(la) == 1);
            Weight low = act(rs, w0, la);
            for (const auto& [mu, m] : ch.terms) {
                CHECK(m > 0);
                CHECK(rs.leq(mu, la));
                CHECK(rs.leq(low, mu));
            }
        }
    }
}

TEST_CASE("Weyl dimension formula", "[charring]") {
    auto a1 = build_root_system(CartanType::parse("A1"));
    CHECK(weyl_dim(a1, Weight{0}) == 1);
    for (Int m = 0; m <= 20; ++m) CHECK(weyl_dim(a1, Weight{m}) == m + 1);

    auto a2 = build_root_system(CartanType::parse("A2"));
    CHECK(weyl_dim(a2, Weight{1, 1}) == 8);

    std::mt19937 rng(733);
    for (const auto& name : {"A2", "B2", "G2", "A3", "B3", "C3"}) {
        auto rs = build_root_system(CartanType::parse(name));
        for (int trial = 0; trial < 5; ++trial) {
            Weight la = random_dominant(rng, rs.rank, 5);
            CHECK(weyl_dim(rs, la) == weyl_character(rs, la).total_multiplicity());
        }
    }
}

TEST_CASE("Weyl characters against the alternating-sum route", "[charring]") {
    // fully independent route: ch(la) * (sum over W of (-1)^l(w) e^{w rho})
    // must equal the alternating orbit sum of la+rho
    auto skew_orbit_sum = [](const RootSystem& rs, const Weight& v,
                             const std::vector<WeylElement>& grp) {
        VirtualCharacter out;
        for (const auto& w : grp) out.add_term(act(rs, w, v), (w.length() % 2) ? -1 : 1);
        return out;
    };
    std::mt19937 rng(5005);
    for (const auto& name : {"A2", "B2", "G2", "A3", "B3"}) {
        auto rs = build_root_system(CartanType::parse(name));
        auto grp = enumerate_weyl_group(rs);
        VirtualCharacter denom = skew_orbit_sum(rs, rs.rho, grp);
        for (int trial = 0; trial < 6; ++trial) {
            Weight la = random_dominant(rng, rs.rank, 4);
            CAPTURE(name, la.str());
            REQUIRE(tensor(weyl_character(rs, la), denom) ==
                    skew_orbit_sum(rs, la + rs.rho, grp));
        }
    }
}

TEST_CASE("higher-rank Weyl characters", "[charring]") {
    // the 26- and 27-dimensional minuscule-ish modules of F4 and E6
    auto f4 = build_root_system(CartanType::parse("F4"));
    auto ch = weyl_character(f4, Weight{0, 0, 0, 1});
    CHECK(ch.total_multiplicity() == 26);
    CHECK(ch.mult(Weight::zero(4)) == 2);  // two zero weights

    auto e6 = build_root_system(CartanType::parse("E6"));
    ch = weyl_character(e6, Weight{1, 0, 0, 0, 0, 0});
    CHECK(ch.total_multiplicity() == 27);
    CHECK(ch.terms.size() == 27);  // all weights in one free orbit

    auto b3 = build_root_system(CartanType::parse("B3"));
    ch = weyl_character(b3, Weight{0, 0, 1});  // spin representation
    CHECK(ch.total_multiplicity() == 8);
    CHECK(ch.terms.size() == 8);
}

TEST_CASE("fundamental representation dimensions, exceptional types", "[charring]") {
    const std::vector<std::pair<std::string, std::vector<Int>>> table = {
        {"G2", {7, 14}},
        {"F4", {52, 1274, 273, 26}},
        {"E6", {27, 78, 351, 2925, 351, 27}},
        {"E7", {133, 912, 8645, 365750, 27664, 1539, 56}},
        {"E8", {3875, 147250, 6696000, 6899079264, 146325270, 2450240, 30380, 248}}};
    for (const auto& [name, dims] : table) {
        auto rs = build_root_system(CartanType::parse(name));
        for (int i = 0; i < rs.rank; ++i) {
            Weight w = Weight::zero(rs.rank);
            w.c[i] = 1;
            INFO(name << " omega_" << i + 1);
            CHECK(weyl_dim(rs, w) == dims[static_cast<std::size_t>(i)]);
        }
        // the adjoint representation sits at the highest root
        Int adjoint = rs.rank + 2 * rs.N;
        CHECK(weyl_dim(rs, rs.positive_roots[rs.highest_root_index]) == adjoint);
    }
}

TEST_CASE("chi on singular, negative and dominant weights", "[charring]") {
    auto a1 = build_root_system(CartanType::parse("A1"));
    CHECK(chi(a1, -a1.rho).is_zero());

    VirtualCharacter expect;
    expect.add_term(Weight{1}, -1);
    expect.add_term(Weight{-1}, -1);
    CHECK(chi(a1, Weight{-3}) == expect);

    CHECK(chi(a1, Weight{4}) == weyl_character(a1, Weight{4}));
}

TEST_CASE("chi sign rule across the dot orbit, exhaustive in rank 2", "[charring]") {
    std::mt19937 rng(1123);
    for (const auto& name : {"A2", "B2"}) {
        auto rs = build_root_system(CartanType::parse(name));
        auto grp = enumerate_weyl_group(rs);
        for (int trial = 0; trial < 6; ++trial) {
            Weight la = random_dominant(rng, rs.rank, 3);
            auto base = chi(rs, la);
            for (const auto& w : grp) {
                auto moved = chi(rs, dot(rs, w, la));
                CHECK(moved == ((w.length() % 2) ? -base : base));
            }
        }
    }
}

TEST_CASE("chi outputs are W-invariant", "[charring]") {
    std::mt19937 rng(2231);
    for (const auto& name : {"A2", "B2", "G2"}) {
        auto rs = build_root_system(CartanType::parse(name));
        std::uniform_int_distribution<Int> coord(-6, 6);
        for (int trial = 0; trial < 10; ++trial) {
            Weight la = Weight::zero(rs.rank);
            for (int j = 0; j < rs.rank; ++j) la.c[j] = coord(rng);
            CHECK(weyl_invariant(rs, chi(rs, la)));
        }
    }
}

TEST_CASE("group-ring operations", "[charring]") {
    auto a1 = build_root_system(CartanType::parse("A1"));
    auto one = weyl_character(a1, Weight{0});
    auto v = weyl_character(a1, Weight{1});

    CHECK(tensor(one, v) == v);
    CHECK(tensor(v, v) == char_add(weyl_character(a1, Weight{2}), one));  // Clebsch-Gordan
    CHECK(char_add(v, char_negate(v)).is_zero());
    CHECK(char_scale(0, v).is_zero());
    CHECK(char_scale(3, v).mult(Weight{1}) == 3);
    CHECK(translate(v, Weight{2}).mult(Weight{3}) == 1);
    CHECK(translate(v, Weight{2}).mult(Weight{1}) == 1);

    // rank-1 Clebsch-Gordan from the string oracle, a few more cases
    for (Int a = 0; a <= 6; ++a) {
        for (Int b = 0; b <= a; ++b) {
            VirtualCharacter sum;
            for (Int c = a - b; c <= a + b; c += 2) sum += sl2_string(c);
            CHECK(tensor(sl2_string(a), sl2_string(b)) == sum);
        }
    }
}

TEST_CASE("Frobenius twist", "[charring]") {
    auto a1 = build_root_system(CartanType::parse("A1"));
    auto v = weyl_character(a1, Weight{1});
    CHECK(frobenius_twist(a1, v, 2, 0) == v);

    VirtualCharacter expect;
    expect.add_term(Weight{2}, 1);
    expect.add_term(Weight{-2}, 1);
    CHECK(frobenius_twist(a1, v, 2, 1) == expect);

    // ring homomorphism
    auto a2 = build_root_system(CartanType::parse("A2"));
    auto x = weyl_character(a2, Weight{1, 0});
    auto y = weyl_character(a2, Weight{0, 1});
    CHECK(frobenius_twist(a2, tensor(x, y), 3, 2) ==
          tensor(frobenius_twist(a2, x, 3, 2), frobenius_twist(a2, y, 3, 2)));
}

TEST_CASE("Steinberg characters", "[charring]") {
    auto a1 = build_root_system(CartanType::parse("A1"));
    CHECK(steinberg_character(a1, 2, 1) == weyl_character(a1, Weight{1}));

    VirtualCharacter st2;
    for (Int m : {-3, -1, 1, 3}) st2.add_term(Weight{m}, 1);
    CHECK(steinberg_character(a1, 2, 2) == st2);
    CHECK(steinberg_character(a1, 2, 2) ==
          tensor(weyl_character(a1, Weight{1}),
                 frobenius_twist(a1, weyl_character(a1, Weight{1}), 2, 1)));

    // factorization and dimension for every rank <= 2 type
    for (const auto& name : {"A1", "A2", "B2", "G2"}) {
        auto rs = build_root_system(CartanType::parse(name));
        for (Int p : {2, 3}) {
            auto st1 = steinberg_character(rs, p, 1);
            for (Int n : {1, 2, 3}) {
                auto st = steinberg_character(rs, p, n);
                VirtualCharacter prod = weyl_character(rs, Weight::zero(rs.rank));
                for (Int k = 0; k < n; ++k) prod = tensor(prod, frobenius_twist(rs, st1, p, k));
                CHECK(st == prod);
                CHECK(st.total_multiplicity() == ipow_checked(p, n * rs.N));
            }
        }
    }

    CHECK_THROWS_AS(steinberg_character(a1, 2, 0), std::invalid_argument);
}

TEST_CASE("chi-basis decomposition", "[charring]") {
    auto a1 = build_root_system(CartanType::parse("A1"));
    auto a2 = build_root_system(CartanType::parse("A2"));

    auto dec = chi_decompose(a2, weyl_character(a2, Weight{2, 1}));
    REQUIRE(dec.entries.size() == 1);
    CHECK(dec.entries[0].first == Weight{2, 1});
    CHECK(dec.entries[0].second == 1);

    auto two = char_add(weyl_character(a1, Weight{2}), weyl_character(a1, Weight{0}));
    dec = chi_decompose(a1, two);
    REQUIRE(dec.entries.size() == 2);
    CHECK(dec.entries[0] == std::make_pair(Weight{2}, Int(1)));
    CHECK(dec.entries[1] == std::make_pair(Weight{0}, Int(1)));

    CHECK(chi_decompose(a1, VirtualCharacter{}).entries.empty());

    VirtualCharacter skew;
    skew.add_term(Weight{1, 0}, 1);
    CHECK_THROWS_AS(chi_decompose(a2, skew), std::invalid_argument);

    // reconstruction invariant on random W-invariant combinations
    std::mt19937 rng(3343);
    for (const auto& name : {"A2", "B2"}) {
        auto rs = build_root_system(CartanType::parse(name));
        std::uniform_int_distribution<Int> coeff(-3, 3);
        for (int trial = 0; trial < 6; ++trial) {
            VirtualCharacter a;
            for (int k = 0; k < 3; ++k)
                a += coeff(rng) * weyl_character(rs, random_dominant(rng, rs.rank, 4));
            auto d = chi_decompose(rs, a);
            CHECK(chi_reconstruct(rs, d) == a);
            // entries are distinct and dominant
            for (std::size_t i = 0; i < d.entries.size(); ++i) {
                CHECK(rs.is_dominant(d.entries[i].first));
                for (std::size_t j = i + 1; j < d.entries.size(); ++j)
                    CHECK_FALSE(d.entries[i].first == d.entries[j].first);
            }
        }
    }
}
