// flagcoh - command-line front end.  Every subcommand prints one
// deterministic JSON document (or plain text with --format text) on stdout.
// Exit codes: 0 success, 2 usage error, 1 domain error.

#include "flagcoh/flagcoh.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <iostream>

namespace {

using namespace flagcoh;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Options {
    std::string type;
    std::string wt;
    std::string mu;
    std::string word;
    std::string op;
    std::string lo, hi;
    std::string format = "json";
    std::string rconv = "max";
    Int p = 0;
    Int n = 0;
    int degree = 0;
    bool dual = false;
};

void emit(const Json& j, const std::string& format) {
    if (format == "json") {
        std::cout << j.dump() << "\n";
        return;
    }
    // text mode: characters as weight:mult lines, scalars as key: value lines
    std::function<void(const Json&, const std::string&)> walk = [&](const Json& v,
                                                                    const std::string& key) {
        if (v.is_object() && v.contains("terms") && v.contains("type")) {
            for (const auto& t : v["terms"])
                std::cout << weight_from_json(t["wt"]).str() << ":" << t["mult"].get<Int>() << "\n";
            return;
        }
        if (v.is_object()) {
            for (auto it = v.begin(); it != v.end(); ++it)
                walk(it.value(), key.empty() ? it.key() : key + "." + it.key());
            return;
        }
        if (v.is_array()) {
            std::cout << key << ": " << v.dump() << "\n";
            return;
        }
        std::cout << key << ": " << (v.is_string() ? v.get<std::string>() : v.dump()) << "\n";
    };
    walk(j, "");
}

RootSystem need_type(const Options& o) {
    if (o.type.empty()) throw UsageError("--type is required");
    CartanType ct;
    try {
        ct = CartanType::parse(o.type);
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
    return build_root_system(ct);
}

Weight need_weight(const RootSystem& rs, const std::string& s, const char* flag) {
    if (s.empty()) throw UsageError(std::string(flag) + " is required");
    try {
        return parse_weight(s, rs);
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
}

Int need_prime(const Options& o) {
    if (o.p == 0) throw UsageError("--p is required");
    return PrimeContext(o.p, 0).p;  // validates primality
}

WeylElement need_word(const RootSystem& rs, const std::string& s, const char* flag) {
    if (s.empty()) throw UsageError(std::string(flag) + " is required");
    WeylElement raw;
    try {
        raw = WeylElement::parse(s, rs.rank);
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
    return from_word(rs, raw.word);
}

Json run_single(const std::string& cmd, const Options& o) {
    RootSystem rs = need_type(o);
    if (cmd == "chi") {
        return character_json(rs, chi(rs, need_weight(rs, o.wt, "--wt")));
    }
    if (cmd == "bott") {
        return bott_json(bott(rs, need_weight(rs, o.wt, "--wt")));
    }
    if (cmd == "serre") {
        auto [w, deg] = serre_dual(rs, need_weight(rs, o.wt, "--wt"), o.degree);
        Json out;
        out["weight"] = weight_json(w);
        out["degree"] = deg;
        return out;
    }
    if (cmd == "h1") {
        Weight la = need_weight(rs, o.wt, "--wt");
        Int p = need_prime(o);
        bool nv = o.dual ? hN1_nonvanishing(rs, la, p) : h1_nonvanishing(rs, la, p);
        Json out;
        out["nonvanishing"] = nv;
        return out;
    }
    if (cmd == "dpi") {
        Weight la = need_weight(rs, o.wt, "--wt");
        Int p = need_prime(o);
        auto trivial = trivial_vanishing(rs, la, o.degree, p);
        if (trivial == Vanishing::Vanishes) return dpi_json({false, std::nullopt}, trivial);
        return dpi_json(dpi_lower_bound(rs, la, o.degree, p), trivial);
    }
    if (cmd == "linked") {
        Weight la = need_weight(rs, o.wt, "--wt");
        Weight mu = need_weight(rs, o.mu, "--mu");
        Json out;
        out["linked"] = linked(rs, mu, la, need_prime(o));
        return out;
    }
    if (cmd == "slink") {
        Weight la = need_weight(rs, o.wt, "--wt");
        Weight mu = need_weight(rs, o.mu, "--mu");
        auto chain = strongly_linked(rs, mu, la, need_prime(o));
        Json out;
        out["strongly_linked"] = chain.has_value();
        if (chain) out["chain"] = chain_json(*chain);
        return out;
    }
    if (cmd == "sumformula") {
        Weight la = need_weight(rs, o.wt, "--wt");
        Int p = need_prime(o);
        if (o.word.empty()) {
            return sumformula_json(rs, la, p, jantzen_sum_weyl(rs, la, p));
        }
        WeylElement w = need_word(rs, o.word, "--w");
        if (o.n < 1) throw UsageError("--n >= 1 is required with --w");
        RConvention conv = o.rconv == "min" ? RConvention::Min : RConvention::Max;
        Json out = sumformula_json(rs, la, p, generic_sum(rs, la, w, p, o.n, conv));
        out["w"] = w.str();
        out["n"] = o.n;
        out["r_convention"] = o.rconv;
        return out;
    }
    if (cmd == "generic-report") {
        Weight la = need_weight(rs, o.wt, "--wt");
        Int p = need_prime(o);
        if (o.n < 1) throw UsageError("--n >= 1 is required");
        WeylElement w = need_word(rs, o.word, "--w");
        return generic_report_json(generic_report(rs, la, w, p, o.n));
    }
    if (cmd == "steinberg") {
        Int p = need_prime(o);
        if (o.n < 1) throw UsageError("--n >= 1 is required");
        return character_json(rs, steinberg_character(rs, p, o.n));
    }
    throw UsageError("unknown subcommand '" + cmd + "'");
}

Int cell_cap() {
    if (const char* env = std::getenv("FLAGCOH_CELL_CAP")) {
        try {
            return std::stoll(env);
        } catch (const std::exception&) {
            throw UsageError("FLAGCOH_CELL_CAP is not an integer");
        }
    }
    return 1000000;
}

// one row per weight of the box, lex order, streamed
int run_sweep(const Options& o) {
    RootSystem rs = need_type(o);
    Weight lo = need_weight(rs, o.lo, "--lo");
    Weight hi = need_weight(rs, o.hi, "--hi");
    static const std::vector<std::string> ops = {"bott", "h1", "hn1", "dpi", "sumformula"};
    if (std::find(ops.begin(), ops.end(), o.op) == ops.end())
        throw UsageError("--op must be one of bott,h1,hn1,dpi,sumformula");

    __int128 cells = 1;
    for (int j = 0; j < rs.rank; ++j) {
        Int extent = hi.c[j] - lo.c[j] + 1;
        if (extent <= 0) return 0;  // empty box, zero rows
        cells *= extent;
        if (cells > cell_cap())
            throw UsageError("sweep box exceeds the cell cap of " + std::to_string(cell_cap()) +
                             " (set FLAGCOH_CELL_CAP to raise it)");
    }

    Int p = 0;
    if (o.op != "bott") p = need_prime(o);

    Weight cur = lo;
    for (;;) {
        Json row;
        row["wt"] = weight_json(cur);
        if (o.op == "bott") {
            Json b = bott_json(bott(rs, cur));
            for (auto it = b.begin(); it != b.end(); ++it) row[it.key()] = it.value();
        } else if (o.op == "h1") {
            row["nonvanishing"] = h1_nonvanishing(rs, cur, p);
        } else if (o.op == "hn1") {
            row["nonvanishing"] = hN1_nonvanishing(rs, cur, p);
        } else if (o.op == "dpi") {
            auto trivial = trivial_vanishing(rs, cur, o.degree, p);
            Json v = (trivial == Vanishing::Vanishes)
                         ? dpi_json({false, std::nullopt}, trivial)
                         : dpi_json(dpi_lower_bound(rs, cur, o.degree, p), trivial);
            for (auto it = v.begin(); it != v.end(); ++it) row[it.key()] = it.value();
        } else if (o.op == "sumformula") {
            if (!rs.is_dominant(cur)) {
                row["skipped"] = "not dominant";
            } else {
                auto res = jantzen_sum_weyl(rs, cur, p);
                row["is_zero"] = res.is_zero;
                row["chi_support"] = chi_support_json(res.chi_support);
            }
        }
        if (o.format == "json") {
            std::cout << row.dump() << "\n";
        } else {
            std::string line = cur.str() + "\t";
            bool first = true;
            for (auto it = row.begin(); it != row.end(); ++it) {
                if (it.key() == "wt") continue;
                if (!first) line += " ";
                first = false;
                line += it.key() + "=" + it.value().dump();
            }
            std::cout << line << "\n";
        }
        // advance odometer, last coordinate fastest (lex order)
        int j = rs.rank - 1;
        while (j >= 0 && cur.c[j] == hi.c[j]) {
            cur.c[j] = lo.c[j];
            --j;
        }
        if (j < 0) break;
        ++cur.c[j];
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"flagcoh: exact criteria and character formulas for the cohomology of "
                 "line bundles on flag varieties in characteristic p"};
    app.require_subcommand(1);

    Options o;
    std::vector<CLI::App*> subs;
    auto add = [&](const std::string& name, const std::string& desc) {
        CLI::App* s = app.add_subcommand(name, desc);
        s->add_option("--type", o.type, "Cartan type, e.g. A1, B2, E8 (case-insensitive)");
        s->add_option("--wt", o.wt,
                      "weight as comma-separated integers; use --wt=-3,1 for a negative "
                      "leading coordinate");
        s->add_option("--format", o.format, "output format: json or text")
            ->check(CLI::IsMember({"json", "text"}));
        subs.push_back(s);
        return s;
    };

    add("chi", "Euler characteristic chi(wt) as a virtual character");
    add("bott", "characteristic-0 verdict: singular, or the degree and dominant conjugate");
    add("serre", "Serre dual (-wt-2rho, N-i) of (wt, i)")->add_option("--i", o.degree, "degree");
    {
        CLI::App* s = add("h1", "exact first-cohomology non-vanishing test");
        s->add_option("--p", o.p, "prime characteristic");
        s->add_flag("--dual", o.dual, "test H^{N-1} instead, via Serre duality");
    }
    {
        CLI::App* s = add("dpi", "vanishes / nonvanishing (with witness) / unknown for H^i");
        s->add_option("--p", o.p, "prime characteristic");
        s->add_option("--i", o.degree, "degree");
    }
    {
        CLI::App* s = add("linked", "same affine dot-orbit (linkage class)?");
        s->add_option("--mu", o.mu, "second weight");
        s->add_option("--p", o.p, "prime characteristic");
    }
    {
        CLI::App* s = add("slink", "strong-linkage test mu up-arrow wt, with verifying chain");
        s->add_option("--mu", o.mu, "lower weight");
        s->add_option("--p", o.p, "prime characteristic");
    }
    {
        CLI::App* s = add("sumformula",
                          "Jantzen sum for the Weyl module of wt; with --w/--n the generic "
                          "higher-cohomology sum");
        s->add_option("--p", o.p, "prime characteristic");
        s->add_option("--w", o.word, "Weyl word, e.g. 1,2,1 or e");
        s->add_option("--n", o.n, "twist level (generic variant)");
        s->add_option("--rconv", o.rconv, "leading-term convention: max (default) or min")
            ->check(CLI::IsMember({"max", "min"}));
    }
    {
        CLI::App* s = add("generic-report", "vanishing degree and socle/head weights at w.wt");
        s->add_option("--p", o.p, "prime characteristic");
        s->add_option("--n", o.n, "twist level");
        s->add_option("--w", o.word, "Weyl word, e.g. 1,2,1 or e");
    }
    {
        CLI::App* s = add("steinberg", "character of the n-th Steinberg module");
        s->add_option("--p", o.p, "prime characteristic");
        s->add_option("--n", o.n, "twist level");
    }
    {
        CLI::App* s = add("sweep", "stream one result row per weight of a box, lex order");
        s->add_option("--op", o.op, "row operation: bott, h1, hn1, dpi, sumformula");
        s->add_option("--lo", o.lo, "box lower corner");
        s->add_option("--hi", o.hi, "box upper corner");
        s->add_option("--p", o.p, "prime characteristic");
        s->add_option("--i", o.degree, "degree (dpi)");
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    }

    const std::string cmd = app.get_subcommands().front()->get_name();
    try {
        if (cmd == "sweep") return run_sweep(o);
        emit(run_single(cmd, o), o.format);
        return 0;
    } catch (const UsageError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
