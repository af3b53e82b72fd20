#include "scring/cli.hpp"

#include <complex>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <ostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "scring/chars.hpp"
#include "scring/errors.hpp"
#include "scring/gf.hpp"
#include "scring/groupring.hpp"
#include "scring/idempotents.hpp"
#include "scring/oracle.hpp"
#include "scring/schemes.hpp"
#include "scring/scring.hpp"
#include "scring/sl2.hpp"

namespace scring {

namespace {

using nlohmann::ordered_json;

constexpr const char* kVersion = "0.1.0";

// Shared per-subcommand flags.
struct Common {
    std::string format = "text";
    std::string out_path;
    int64_t seed = 12345;
    int64_t max_q = 0;  // 0: default cap, possibly overridden by SC_MAX_Q
};

void add_common(CLI::App* sc, Common& c) {
    sc->add_option("--format", c.format, "output format")
        ->check(CLI::IsMember({"text", "json"}));
    sc->add_option("--out", c.out_path, "write the report to this file");
    sc->add_option("--seed", c.seed, "seed echoed in reports and spot-checks");
    sc->add_option("--max-q", c.max_q, "override the q cap (also: SC_MAX_Q)");
}

int64_t effective_cap(const Common& c) {
    if (c.max_q > 0) return c.max_q;
    if (const char* env = std::getenv("SC_MAX_Q")) {
        char* end = nullptr;
        const long long v = std::strtoll(env, &end, 10);
        if (end && *end == '\0' && v > 0) return v;
        throw ConfigError(std::string("SC_MAX_Q is not a positive integer: ") + env);
    }
    return 9;
}

void require_q(int64_t q, int64_t cap) {
    if (q <= 2)
        throw ConfigError("q > 2 is required for the support-class ring, got q=" +
                          std::to_string(q));
    if (q > cap)
        throw ConfigError("q=" + std::to_string(q) + " exceeds the configured cap " +
                          std::to_string(cap) + " (raise with SC_MAX_Q or --max-q)");
    try {
        Field probe(q);
    } catch (const NotPrimePower&) {
        throw ConfigError("q=" + std::to_string(q) + " is not a prime power");
    }
}

std::string fmt12(double x) {
    char b[64];
    std::snprintf(b, sizeof b, "%.12g", x);
    return b;
}

// Doubles are rounded to 12 significant digits before they enter the
// document, so the emitted text is stable under parse + re-dump.
double round12(double x) { return std::strtod(fmt12(x).c_str(), nullptr); }

ordered_json cx_json(std::complex<double> z) {
    return ordered_json::array({round12(z.real()), round12(z.imag())});
}

ordered_json vec7_json(const RVec7& v) {
    ordered_json o = ordered_json::object();
    for (int i = 0; i < kNumSupports; ++i) o[kSupportNames[i]] = v[i].str();
    return o;
}

ordered_json nonzero_coeffs(const IVec7& v) {
    ordered_json o = ordered_json::object();
    for (int i = 0; i < kNumSupports; ++i)
        if (v[i] != 0) o[kSupportNames[i]] = v[i];
    return o;
}

ordered_json checks_json(const Report& r) {
    ordered_json arr = ordered_json::array();
    for (const auto& c : r.checks)
        arr.push_back(ordered_json{
            {"name", c.name}, {"status", c.pass ? "pass" : "fail"}, {"witness", c.witness}});
    return arr;
}

void render_value(const ordered_json& j, std::ostream& os) {
    if (j.is_string())
        os << j.get<std::string>();
    else
        os << j.dump();
}

void render_tree(const ordered_json& j, std::ostream& os, int depth) {
    const std::string pad(static_cast<size_t>(depth) * 2, ' ');
    for (const auto& [key, val] : j.items()) {
        if (val.is_object() && !val.empty()) {
            os << pad << key << ":\n";
            render_tree(val, os, depth + 1);
        } else {
            os << pad << key << ": ";
            render_value(val, os);
            os << "\n";
        }
    }
}

void render_text(const ordered_json& doc, std::ostream& os) {
    os << "# " << doc["command"].get<std::string>() << " (q=" << doc["q"] << ")\n";
    if (!doc["results"].empty()) render_tree(doc["results"], os, 0);
    int64_t failed = 0;
    for (const auto& c : doc["checks"]) {
        const bool pass = c["status"].get<std::string>() == "pass";
        if (!pass) ++failed;
        os << (pass ? "[PASS] " : "[FAIL] ") << c["name"].get<std::string>();
        const std::string w = c["witness"].get<std::string>();
        if (!w.empty()) os << " :: " << w;
        os << "\n";
    }
    os << "checks: " << doc["checks"].size() - failed << " passed, " << failed
       << " failed\n";
    os << "seed=" << doc["seed"] << " version=" << doc["version"].get<std::string>()
       << "\n";
}

SupportClass parse_support(const std::string& s) {
    for (int i = 0; i < kNumSupports; ++i)
        if (s == kSupportNames[i]) return static_cast<SupportClass>(i);
    throw ConfigError("unknown support class '" + s + "' (expected A,B,C,D+,D-,E+,E-)");
}

SchemeVariant parse_variant(const std::string& s) {
    for (SchemeVariant v : {SchemeVariant::D5, SchemeVariant::Merged45,
                            SchemeVariant::Merged12_45, SchemeVariant::Tilde})
        if (s == variant_name(v)) return v;
    throw ConfigError("unknown scheme variant '" + s +
                      "' (expected d5, merged45, merged12_45, tilde)");
}

// --- subcommand bodies: fill results and checks ---

void cmd_classes(int64_t q, ordered_json& results, Report& checks) {
    Field f(q);
    GroupTable g(f, GroupKind::SL2);
    const int64_t q1 = q - 1;
    const std::array<int64_t, kNumSupports> closed{q1,      q1,      q1 * q1 * (q - 2),
                                                   q1 * q1, q1 * q1, q1 * q1,
                                                   q1 * q1};
    results["order"] = g.n();
    ordered_json sizes = ordered_json::object();
    std::array<int64_t, kNumSupports> count{};
    for (int64_t i = 0; i < g.n(); ++i) ++count[idx(g.support(i))];
    for (int i = 0; i < kNumSupports; ++i) sizes[kSupportNames[i]] = count[i];
    results["sizes"] = sizes;

    checks.add("group order is q^3-q", g.n() == q * q * q - q, std::to_string(g.n()));
    for (int i = 0; i < kNumSupports; ++i)
        checks.add(std::string("size of ") + kSupportNames[i] + " matches the closed form",
                   count[i] == closed[i],
                   std::to_string(count[i]) + " vs " + std::to_string(closed[i]));
}

void cmd_mul(int64_t q, SupportClass x, SupportClass y, ordered_json& results) {
    const IVec7 prod = sc_mul(structure_table(), basis_vec(x), basis_vec(y), q);
    results = nonzero_coeffs(prod);
}

void cmd_table(int64_t q, ordered_json& results) {
    for (int x = 0; x < kNumSupports; ++x)
        for (int y = 0; y < kNumSupports; ++y) {
            const IVec7 prod = sc_mul(structure_table(), basis_vec(static_cast<SupportClass>(x)),
                                      basis_vec(static_cast<SupportClass>(y)), q);
            results[std::string(kSupportNames[x]) + "*" + kSupportNames[y]] =
                nonzero_coeffs(prod);
        }
}

void cmd_idempotents(int64_t q, ordered_json& results, Report& checks) {
    const StructureTable& t = structure_table();
    ordered_json pis = ordered_json::object();
    ordered_json traces = ordered_json::object();
    for (int i = 1; i <= 4; ++i) {
        pis["pi" + std::to_string(i)] = vec7_json(pi(i, q));
        traces["pi" + std::to_string(i)] = projector_trace(i, q).str();
    }
    results["pi"] = pis;
    results["traces"] = traces;

    ordered_json units = ordered_json::object();
    for (int i = 1; i <= 2; ++i)
        for (int j = 1; j <= 2; ++j)
            units["M" + std::to_string(i) + std::to_string(j)] =
                vec7_json(matrix_unit(i, j, q));
    results["matrix_units"] = units;

    // The three one-dimensional characters on the seven classes.
    ordered_json chars3 = ordered_json::object();
    for (int i = 1; i <= 3; ++i) {
        ordered_json row = ordered_json::object();
        for (int s = 0; s < kNumSupports; ++s)
            row[kSupportNames[s]] =
                character_value(t, pi(i, q), static_cast<SupportClass>(s), q).str();
        chars3["chi" + std::to_string(i)] = row;
    }
    results["characters"] = chars3;

    ordered_json subs = ordered_json::object();
    const std::array<std::pair<SubalgebraKind, const char*>, 3> kinds{
        {{SubalgebraKind::Rank5, "rank5"},
         {SubalgebraKind::Rank4, "rank4"},
         {SubalgebraKind::Rank3, "rank3"}}};
    for (const auto& [kind, name] : kinds) {
        IdempotentSystem sys = subalgebra_system(kind, q);
        ordered_json entry = ordered_json::object();
        entry["members"] = sys.member_names;
        entry["basis"] = sys.basis_names;
        ordered_json table = ordered_json::object();
        for (size_t i = 0; i < sys.members.size(); ++i) {
            ordered_json row = ordered_json::object();
            for (size_t j = 0; j < sys.basis.size(); ++j)
                row[sys.basis_names[j]] =
                    character_value(t, sys.members[i], sys.basis[j], q).str();
            table[sys.member_names[i]] = row;
        }
        entry["characters"] = table;
        subs[name] = entry;
    }
    results["subalgebras"] = subs;

    checks.merge(verify_semisimple_structure(t, q));
    checks.merge(verify_subalgebra_tables(SubalgebraKind::Rank5, q));
    checks.merge(verify_subalgebra_tables(SubalgebraKind::Rank4, q));
    checks.merge(verify_subalgebra_tables(SubalgebraKind::Rank3, q));
}

void cmd_scheme(int64_t q, SchemeVariant variant, ordered_json& results, Report& checks) {
    SchemeStructure s = build_scheme(q, variant);
    results["variant"] = variant_name(variant);
    results["n"] = s.n;
    ordered_json classes = ordered_json::array();
    for (const SchemeClass& c : s.classes) {
        int64_t valency = 0;
        for (int64_t v = 0; v < s.n; ++v) valency += c.mat[v];
        classes.push_back(ordered_json{{"label", c.label}, {"valency", valency}});
    }
    results["classes"] = classes;

    ordered_json constants = ordered_json::object();
    const int d1 = static_cast<int>(s.classes.size());
    for (int i = 0; i < d1; ++i)
        for (int j = 0; j < d1; ++j) {
            ordered_json row = ordered_json::object();
            for (int k = 0; k < d1; ++k)
                if (s.constants[i][j][k] != 0)
                    row[s.classes[k].label] = s.constants[i][j][k];
            constants[s.classes[i].label + "*" + s.classes[j].label] = row;
        }
    results["constants"] = constants;

    if (variant == SchemeVariant::Tilde) {
        BetaSystem b = beta_system(q);
        ordered_json beta = ordered_json::array();
        ordered_json eigen = ordered_json::array();
        for (int i = 0; i < 4; ++i) {
            ordered_json brow = ordered_json::array();
            ordered_json erow = ordered_json::array();
            for (int j = 0; j < 4; ++j) {
                brow.push_back(b.beta[i][j].str());
                erow.push_back(b.eigen[i][j]);
            }
            beta.push_back(brow);
            eigen.push_back(erow);
        }
        results["beta"] = beta;
        results["eigenvalues"] = eigen;
        results["dimensions"] = b.dims;
    }

    checks.merge(verify_scheme(q, variant));
    if (variant == SchemeVariant::Tilde) checks.merge(verify_beta(q));
}

void cmd_chars(int64_t q, ordered_json& results, Report& checks) {
    CharTable t(q);
    const bool odd = q % 2 == 1;

    ordered_json irreps = ordered_json::array();
    for (const IrrepSpec& s : t.irreps())
        irreps.push_back(ordered_json{{"name", s.name()}, {"dim", s.dim(q)}});
    results["irreps"] = irreps;

    const auto counts = t.classes().refined_class_counts();
    ordered_json types = ordered_json::object();
    for (int k = 0; k < kNumRefined; ++k)
        if (counts[k] > 0)
            types[refined_label(static_cast<RefinedType>(k), odd)] = counts[k];
    results["class_types"] = types;

    GroupVec F = diagonal_f(t.group());
    ordered_json fx = ordered_json::object();
    for (int s = 0; s < kNumSupports; ++s) {
        auto prof = class_profile_sum(
            t, convolve(F, embedded_class_sum(t.group(), static_cast<SupportClass>(s))));
        ordered_json row = ordered_json::object();
        for (const auto& [k, v] : prof) row[refined_label(k, odd)] = v;
        fx[std::string("F*") + kSupportNames[s]] = row;
    }
    results["fx_profiles"] = fx;

    ordered_json pt = ordered_json::object();
    std::vector<ScaledVec> pts;
    for (int i = 1; i <= 4; ++i) {
        pts.push_back(pi_tilde(t, i));
        auto prof = class_profile_pointwise(t, pts.back());
        ordered_json row = ordered_json::object();
        for (const auto& [k, v] : prof) row[refined_label(k, odd)] = v.str();
        pt["pi~" + std::to_string(i)] = row;
    }
    results["pi_tilde_profiles"] = pt;

    ordered_json ranks = ordered_json::object();
    for (int i = 0; i < 4; ++i) {
        ordered_json row = ordered_json::object();
        for (const IrrepSpec& s : t.irreps()) {
            const int64_t r = rank_in_irrep(t, pts[static_cast<size_t>(i)], s);
            if (r != 0) row[s.name()] = r;
        }
        ranks["pi~" + std::to_string(i + 1)] = row;
    }
    results["ranks"] = ranks;

    ordered_json table = ordered_json::object();
    table["approximate"] = true;
    ordered_json rows = ordered_json::object();
    for (const IrrepSpec& s : t.irreps()) {
        ordered_json vals = ordered_json::array();
        for (int64_t c = 0; c < t.classes().num_classes(); ++c)
            vals.push_back(cx_json(t.value(s, c)));
        rows[s.name()] = vals;
    }
    table["rows"] = rows;
    results["character_table"] = table;

    checks.merge(character_orthogonality(q));
    checks.merge(fx_profile_check(q));
    checks.merge(pi_tilde_profile_check(q));
    checks.merge(decomposition_report(q));
    if (odd && q >= 5) checks.merge(mean_values_check(q));
}

void cmd_fusion(int64_t q, ordered_json& results, Report& checks) {
    FusionTensor f = fusion_constants(q);
    results["labels"] = ordered_json::array({"I~", "C~", "F~"});
    ordered_json squares = ordered_json::array();
    ordered_json values = ordered_json::array();
    for (int i = 0; i < 3; ++i) {
        ordered_json sq_i = ordered_json::array();
        ordered_json va_i = ordered_json::array();
        for (int j = 0; j < 3; ++j) {
            ordered_json sq_j = ordered_json::array();
            ordered_json va_j = ordered_json::array();
            for (int k = 0; k < 3; ++k) {
                sq_j.push_back(f.square[i][j][k].str());
                va_j.push_back(round12(f.value[i][j][k]));
            }
            sq_i.push_back(sq_j);
            va_i.push_back(va_j);
        }
        squares.push_back(sq_i);
        values.push_back(va_i);
    }
    results["squared_constants"] = squares;
    results["values"] = values;
    results["values_approximate"] = true;

    checks.merge(verify_fusion(q));
}

void cmd_verify(const std::vector<int64_t>& qs, bool all, const std::string& fault,
                int64_t seed, int64_t cap, ordered_json& results, Report& checks) {
    OracleConfig cfg;
    cfg.qs = qs;
    cfg.seed = seed;
    cfg.groupring_cap = cap;
    cfg.scheme_cap = std::min<int64_t>(cap, 7);
    if (fault == "structure-table") cfg.corrupt_structure = true;
    else if (fault == "scheme-adjacency") cfg.corrupt_scheme = true;
    else if (!fault.empty())
        throw ConfigError("unknown fault '" + fault +
                          "' (expected structure-table or scheme-adjacency)");

    results["qs"] = qs;
    results["mode"] = all ? "full" : "core";
    results["fault"] = fault.empty() ? "none" : fault;

    if (all) {
        checks.merge(run_full_suite(cfg));
    } else {
        for (int64_t q : cfg.qs) {
            if (q <= 2)
                throw ConfigError("q > 2 is required for the support-class ring, got q=" +
                                  std::to_string(q));
            try {
                Field probe(q);
            } catch (const NotPrimePower&) {
                throw ConfigError("q=" + std::to_string(q) + " is not a prime power");
            }
        }
        StructureTable table = structure_table();
        if (cfg.corrupt_structure)
            table.perturb(idx(SupportClass::C), idx(SupportClass::C), idx(SupportClass::A),
                          1);
        for (int64_t q : cfg.qs)
            if (q <= cfg.groupring_cap) checks.merge(verify_product_table(q, table));
        if (cfg.corrupt_scheme) {
            SchemeStructure s = build_scheme(4, SchemeVariant::D5);
            bool dropped = false;
            for (int64_t u = 0; u < s.n && !dropped; ++u)
                for (int64_t v = 0; v < s.n && !dropped; ++v)
                    if (s.classes[1].mat[u * s.n + v] == 1) {
                        corrupt_drop_pair(s, 1, u, v);
                        dropped = true;
                    }
            Report ax = verify_axioms(s);
            ax.title = "corrupted scheme q=4";
            checks.merge(ax);
        }
    }

    int64_t failed = 0;
    for (const auto& c : checks.checks)
        if (!c.pass) ++failed;
    results["passed"] = static_cast<int64_t>(checks.checks.size()) - failed;
    results["failed"] = failed;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"exact support-class ring toolkit for SL2 over small fields"};
    app.require_subcommand(1);

    Common common;
    int64_t q = 0;
    std::string x_name, y_name, variant_name_arg = "tilde", fault;
    std::vector<int64_t> qs{3, 4, 5, 7};
    bool all = false;

    CLI::App* c_classes = app.add_subcommand("classes", "class sizes and membership counts");
    c_classes->add_option("--q", q, "field size")->required();
    add_common(c_classes, common);

    CLI::App* c_mul = app.add_subcommand("mul", "product of two support-class sums");
    c_mul->add_option("--q", q, "field size")->required();
    c_mul->add_option("--x", x_name, "left support class")->required();
    c_mul->add_option("--y", y_name, "right support class")->required();
    add_common(c_mul, common);

    CLI::App* c_table = app.add_subcommand("table", "all 49 products");
    c_table->add_option("--q", q, "field size")->required();
    add_common(c_table, common);

    CLI::App* c_idem = app.add_subcommand(
        "idempotents", "central idempotents, matrix units, traces, characters");
    c_idem->add_option("--q", q, "field size")->required();
    add_common(c_idem, common);

    CLI::App* c_scheme =
        app.add_subcommand("scheme", "association-scheme classes and constants");
    c_scheme->add_option("--q", q, "field size")->required();
    c_scheme->add_option("--variant", variant_name_arg,
                         "d5, merged45, merged12_45, or tilde");
    add_common(c_scheme, common);

    CLI::App* c_chars =
        app.add_subcommand("chars", "profiles, ranks, and the decomposition report");
    c_chars->add_option("--q", q, "field size")->required();
    add_common(c_chars, common);

    CLI::App* c_fusion = app.add_subcommand("fusion", "rescaled rank-3 fusion constants");
    c_fusion->add_option("--q", q, "field size")->required();
    add_common(c_fusion, common);

    CLI::App* c_verify = app.add_subcommand("verify", "brute-force verification batteries");
    c_verify->add_option("--q", qs, "field sizes")->delimiter(',');
    c_verify->add_flag("--all", all, "run every battery, not only the product table");
    c_verify->add_option("--inject-fault", fault,
                         "negative control: structure-table or scheme-adjacency");
    add_common(c_verify, common);

    try {
        std::vector<const char*> argv;
        argv.push_back("scring");
        for (const std::string& a : args) argv.push_back(a.c_str());
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n" << app.help();
        return 2;
    }

    try {
        const int64_t cap = effective_cap(common);
        ordered_json results = ordered_json::object();
        Report checks;
        std::string command;

        if (c_classes->parsed()) {
            command = "classes";
            require_q(q, cap);
            cmd_classes(q, results, checks);
        } else if (c_mul->parsed()) {
            command = "mul";
            require_q(q, cap);
            cmd_mul(q, parse_support(x_name), parse_support(y_name), results);
        } else if (c_table->parsed()) {
            command = "table";
            require_q(q, cap);
            cmd_table(q, results);
        } else if (c_idem->parsed()) {
            command = "idempotents";
            require_q(q, cap);
            cmd_idempotents(q, results, checks);
        } else if (c_scheme->parsed()) {
            command = "scheme";
            require_q(q, cap);
            cmd_scheme(q, parse_variant(variant_name_arg), results, checks);
        } else if (c_chars->parsed()) {
            command = "chars";
            require_q(q, cap);
            cmd_chars(q, results, checks);
        } else if (c_fusion->parsed()) {
            command = "fusion";
            require_q(q, cap);
            cmd_fusion(q, results, checks);
        } else {
            command = "verify";
            for (int64_t cand : qs) require_q(cand, cap);
            cmd_verify(qs, all, fault, common.seed, cap, results, checks);
            q = qs.empty() ? 0 : qs.front();
        }

        ordered_json doc;
        doc["command"] = command;
        doc["q"] = q;
        doc["results"] = results;
        doc["checks"] = checks_json(checks);
        doc["seed"] = command == "verify" ? common.seed : int64_t{0};
        doc["version"] = kVersion;

        std::ofstream file;
        std::ostream* sink = &out;
        if (!common.out_path.empty()) {
            file.open(common.out_path);
            if (!file) throw ConfigError("cannot open output file " + common.out_path);
            sink = &file;
        }
        if (common.format == "json")
            *sink << doc.dump(2) << "\n";
        else
            render_text(doc, *sink);

        return checks.all_pass() ? 0 : 1;
    } catch (const ConfigError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
}

}  // namespace scring
