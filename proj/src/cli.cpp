#include "currents/cli.hpp"

#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "currents/affine.hpp"
#include "currents/current_algebra.hpp"
#include "currents/loop_restrict.hpp"
#include "currents/random.hpp"
#include "currents/serialize.hpp"

namespace currents::cli {

namespace {

struct Outcome {
    Json report;
    int code = Ok;
};

// ---------------------------------------------------------------- validation

Rational parse_rational_flag(const std::string& flag, const std::string& text) {
    try {
        return Rational::parse(text);
    } catch (const ParseError& e) {
        throw UsageError(flag, e.message());
    } catch (const DivisionByZero&) {
        throw UsageError(flag, "zero denominator in '" + text + "'");
    }
}

std::vector<std::string> split_commas(const std::string& text) {
    std::vector<std::string> parts;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) parts.push_back(item);
    if (!text.empty() && text.back() == ',') parts.emplace_back();
    return parts;
}

std::vector<Rational> parse_rational_list(const std::string& flag, const std::string& text) {
    std::vector<Rational> out;
    for (const auto& part : split_commas(text)) out.push_back(parse_rational_flag(flag, part));
    if (out.empty()) throw UsageError(flag, "expected at least one rational");
    return out;
}

Direction parse_direction(const std::string& text) {
    const auto parts = split_commas(text);
    if (parts.size() != 3) throw UsageError("--e", "expected three comma-separated integers, got '" + text + "'");
    std::array<std::int64_t, 3> c{};
    for (std::size_t i = 0; i < 3; ++i) {
        const Rational r = parse_rational_flag("--e", parts[i]);
        if (!r.is_integer() || !r.numerator().fits_slong_p())
            throw UsageError("--e", "component '" + parts[i] + "' is not a machine integer");
        c[i] = r.numerator().get_si();
    }
    try {
        return Direction(c[0], c[1], c[2]);
    } catch (const InvalidArgument& e) {
        throw UsageError("--e", e.what());
    }
}

Flavor parse_flavor(const RunConfig& cfg) {
    if (cfg.flavor == "plain" || cfg.flavor == "corrupt") return Flavor::plain();
    if (cfg.flavor == "mf") return Flavor::mf();
    if (cfg.flavor == "kassel") return Flavor::kassel(parse_rational_flag("--level", cfg.level));
    throw UsageError("--flavor", "unknown flavor '" + cfg.flavor + "' (expected plain, mf or kassel)");
}

MatrixLieAlgebra load_algebra_flag(const std::string& name_or_path) {
    try {
        return load_algebra(name_or_path);
    } catch (const Error& e) {
        throw UsageError("--algebra", e.what());
    }
}

std::size_t parse_color(const MatrixLieAlgebra& alg, const std::string& flag, const std::string& text) {
    if (auto idx = alg.find_label(text)) return *idx;
    std::string known;
    for (const auto& l : alg.labels()) known += (known.empty() ? "" : ", ") + l;
    throw UsageError(flag, "unknown basis label '" + text + "' for " + alg.name() + " (known: " + known + ")");
}

void require_positive(const std::string& flag, std::int64_t value) {
    if (value < 1) throw UsageError(flag, "must be at least 1");
}

void require_non_negative(const std::string& flag, std::int64_t value) {
    if (value < 0) throw UsageError(flag, "must be non-negative");
}

Json provenance(const std::string& command) {
    Json j;
    j["command"] = command;
    j["tool_version"] = tool_version;
    return j;
}

void add_flavor(Json& j, const Flavor& flavor) {
    j["flavor"] = flavor.name();
    j["level"] = flavor.kind() == Flavor::Kind::Kassel ? Json(flavor.level().to_string()) : Json(nullptr);
}

Json momentum_json(const Momentum& m) { return Json::array({m[0], m[1], m[2]}); }

// ------------------------------------------------------------- algebra-info

Outcome algebra_info(const RunConfig& cfg) {
    const MatrixLieAlgebra alg = load_algebra_flag(cfg.algebra);
    const auto& lab = alg.labels();
    const std::size_t n = alg.dim();

    Json r = provenance("algebra-info");
    r["algebra"] = alg.name();
    r["dim"] = n;
    r["rep_size"] = alg.rep_size();
    r["labels"] = lab;
    r["kappa_normalization"] = "trace in the defining representation";
    Json kappa = Json::array();
    for (std::size_t a = 0; a < n; ++a) {
        Json row = Json::array();
        for (std::size_t b = 0; b < n; ++b) row.push_back(to_json(alg.kappa(a, b)));
        kappa.push_back(std::move(row));
    }
    r["kappa"] = std::move(kappa);

    Json f = Json::array();
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = a + 1; b < n; ++b)
            for (const auto& [c, coeff] : alg.bracket_terms(a, b))
                f.push_back({{"a", lab[a]}, {"b", lab[b]}, {"c", lab[c]}, {"value", to_json(coeff)}});
    r["structure_constants"] = std::move(f);

    Json d = Json::array();
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = a; b < n; ++b)
            for (std::size_t c = b; c < n; ++c)
                if (!alg.d(a, b, c).is_zero())
                    d.push_back({{"a", lab[a]}, {"b", lab[b]}, {"c", lab[c]}, {"value", to_json(alg.d(a, b, c))}});
    r["d_vanishes"] = d.empty();
    r["d_tensor"] = std::move(d);
    r["abelian"] = alg.is_abelian();
    r["invariants_verified"] = true;
    r["warnings"] = alg.warnings();
    return {std::move(r), Ok};
}

// ------------------------------------------------------------ verify-jacobi

GenSymbol random_symbol(TrialRng& rng, const MatrixLieAlgebra& alg, std::int64_t bound) {
    const Momentum m{rng.uniform(-bound, bound), rng.uniform(-bound, bound), rng.uniform(-bound, bound)};
    const std::int64_t roll = rng.uniform(0, 9);
    const std::size_t color = rng.index(alg.dim());
    const int mu = static_cast<int>(rng.uniform(1, 3));
    if (roll < 6) return GenSymbol::J(color, m);
    if (roll < 8) return GenSymbol::A(color, mu, m);
    if (roll < 9) return GenSymbol::S(mu, m);
    return GenSymbol::unit();
}

Outcome verify_jacobi(const RunConfig& cfg) {
    MatrixLieAlgebra alg = load_algebra_flag(cfg.algebra);
    const Flavor flavor = parse_flavor(cfg);
    require_positive("--trials", cfg.trials);
    require_non_negative("--max-momentum", cfg.max_momentum);
    if (cfg.flavor == "corrupt") {
        // test hook: shift the first nonzero structure constant
        std::size_t a = 0, b = 0, c = 0;
        bool found = false;
        for (std::size_t i = 0; i < alg.dim() && !found; ++i)
            for (std::size_t j = 0; j < alg.dim() && !found; ++j)
                if (!alg.bracket_terms(i, j).empty()) {
                    a = i;
                    b = j;
                    c = alg.bracket_terms(i, j).front().index;
                    found = true;
                }
        alg = corrupt_structure_constant(alg, a, b, c, Gaussian(1));
    }

    Json r = provenance("verify-jacobi");
    r["algebra"] = alg.name();
    add_flavor(r, flavor);
    if (cfg.flavor == "corrupt") r["flavor"] = "corrupt";
    r["seed"] = cfg.seed;
    r["trials"] = cfg.trials;
    r["max_momentum"] = cfg.max_momentum;

    std::size_t violations = 0;
    std::size_t with_connection = 0;
    Json witness = nullptr;
    for (std::int64_t t = 0; t < cfg.trials; ++t) {
        TrialRng rng(cfg.seed, static_cast<std::uint64_t>(t));
        const GenSymbol sx = random_symbol(rng, alg, cfg.max_momentum);
        const GenSymbol sy = random_symbol(rng, alg, cfg.max_momentum);
        const GenSymbol sz = random_symbol(rng, alg, cfg.max_momentum);
        if (sx.kind == SymbolKind::A || sy.kind == SymbolKind::A || sz.kind == SymbolKind::A) ++with_connection;
        const auto x = CurrentElement::of(sx), y = CurrentElement::of(sy), z = CurrentElement::of(sz);
        const CurrentElement defect = jacobi_defect(x, y, z, flavor, alg);
        if (defect.is_zero()) continue;
        if (++violations == 1)
            witness = {{"trial", t},
                       {"x", sx.to_string(&alg)},
                       {"y", sy.to_string(&alg)},
                       {"z", sz.to_string(&alg)},
                       {"defect", defect.to_string(&alg)}};
    }
    r["triples_with_A"] = with_connection;
    r["violations"] = violations;
    r["witness"] = std::move(witness);
    return {std::move(r), violations == 0 ? Ok : ContractViolation};
}

// ------------------------------------------------------------------ restrict

Outcome restrict_command(const RunConfig& cfg) {
    const MatrixLieAlgebra alg = load_algebra_flag(cfg.algebra);
    if (cfg.flavor == "corrupt") throw UsageError("--flavor", "unknown flavor 'corrupt'");
    const Flavor flavor = parse_flavor(cfg);
    const Direction e = parse_direction(cfg.e);
    if (cfg.a.empty()) throw UsageError("--a", "required");
    if (cfg.b.empty()) throw UsageError("--b", "required");
    const std::size_t a = parse_color(alg, "--a", cfg.a);
    const std::size_t b = parse_color(alg, "--b", cfg.b);

    const auto rep = restricted_bracket(a, b, cfg.m, cfg.n, e, flavor, alg);
    const CurrentElement predicted = predicted_extension(a, b, cfg.m, cfg.n, e, flavor, alg);
    const auto violation = check_restriction(a, b, cfg.m, cfg.n, e, flavor, alg);

    Json r = provenance("restrict");
    r["algebra"] = alg.name();
    add_flavor(r, flavor);
    r["e"] = momentum_json(e.vector());
    r["a"] = alg.labels()[a];
    r["b"] = alg.labels()[b];
    r["m"] = cfg.m;
    r["n"] = cfg.n;
    r["loop_mode"] = rep.mode;
    Json loop = Json::object();
    for (const auto& [c, coeff] : rep.loop_part) loop[alg.labels()[c]] = to_json(coeff);
    r["loop_part"] = std::move(loop);
    r["extension_part"] = rep.extension_part.to_string(&alg);
    r["extension_zero"] = rep.extension_part.is_zero();
    r["predicted_extension"] = predicted.to_string(&alg);
    if (flavor.kind() == Flavor::Kind::Kassel) r["central_element"] = central_element(e).to_string(&alg);
    r["contract_holds"] = !violation.has_value();
    r["violation"] = violation ? Json(*violation) : Json(nullptr);
    return {std::move(r), violation ? ContractViolation : Ok};
}

// ------------------------------------------------------------- cocycle-scan

Outcome cocycle_scan_command(const RunConfig& cfg) {
    const MatrixLieAlgebra alg = load_algebra_flag(cfg.algebra);
    if (cfg.flavor == "corrupt") throw UsageError("--flavor", "unknown flavor 'corrupt'");
    const Flavor flavor = parse_flavor(cfg);
    require_positive("--max-momentum", cfg.max_momentum);

    ScanReport scan;
    Json r = provenance("cocycle-scan");
    if (cfg.grid) {
        require_positive("--e-bound", cfg.e_bound);
        scan = cocycle_grid(flavor, alg, cfg.e_bound, cfg.max_momentum);
    } else {
        require_positive("--trials", cfg.trials);
        scan = cocycle_scan(flavor, alg, static_cast<std::size_t>(cfg.trials), cfg.seed, cfg.max_momentum);
    }
    r["algebra"] = scan.algebra;
    add_flavor(r, flavor);
    r["mode"] = cfg.grid ? "grid" : "random";
    if (cfg.grid) {
        r["e_bound"] = cfg.e_bound;
    } else {
        r["seed"] = cfg.seed;
    }
    r["bound"] = cfg.max_momentum;
    r["trials"] = scan.trials;
    r["violations"] = scan.violations;
    if (scan.witness) {
        const auto& w = *scan.witness;
        r["witness"] = {{"e", momentum_json(w.e)},          {"a", alg.labels()[w.a]},
                        {"b", alg.labels()[w.b]},           {"m", w.m},
                        {"n", w.n},                         {"reason", w.reason},
                        {"extension_part", w.extension_part}, {"predicted", w.predicted}};
    } else {
        r["witness"] = nullptr;
    }
    return {std::move(r), scan.violations == 0 ? Ok : ContractViolation};
}

// --------------------------------------------------------- gram / unitarity

affine::GramOptions gram_options(const RunConfig& cfg) {
    require_non_negative("--max-f0", cfg.max_f0);
    affine::GramOptions opts;
    opts.max_f0 = static_cast<std::size_t>(cfg.max_f0);
    require_non_negative("--grade", cfg.grade);
    if (cfg.grade > opts.max_grade)
        throw UsageError("--grade", "grade " + std::to_string(cfg.grade) + " exceeds the configured maximum " +
                                        std::to_string(opts.max_grade));
    return opts;
}

Json vector_json(const std::vector<std::pair<affine::PBWMonomial, Rational>>& v) {
    Json out = Json::array();
    for (const auto& [mono, c] : v) out.push_back({{"monomial", mono.to_string()}, {"coeff", to_json(c)}});
    return out;
}

Outcome gram_command(const RunConfig& cfg) {
    const auto opts = gram_options(cfg);
    const Rational k = parse_rational_flag("--k", cfg.k);
    const Rational h = parse_rational_flag("--h", cfg.h);

    Json r = provenance("gram");
    r["k"] = to_json(k);
    r["h"] = to_json(h);
    r["grade"] = cfg.grade;
    r["max_f0"] = opts.max_f0;
    Json blocks = Json::array();
    for (const auto& block : affine::gram(cfg.grade, {k, h}, opts)) {
        Json jb;
        jb["grade"] = block.grade;
        jb["charge"] = block.charge;
        Json basis = Json::array();
        for (const auto& m : block.basis) basis.push_back(m.to_string());
        jb["basis"] = std::move(basis);
        Json matrix = Json::array();
        for (std::size_t i = 0; i < block.matrix.rows(); ++i) {
            Json row = Json::array();
            for (std::size_t j = 0; j < block.matrix.cols(); ++j) row.push_back(to_json(block.matrix(i, j)));
            matrix.push_back(std::move(row));
        }
        jb["matrix"] = std::move(matrix);
        jb["inertia"] = Json::array({block.inertia.positive, block.inertia.zero, block.inertia.negative});
        Json nulls = Json::array();
        for (const auto& v : block.null_basis) {
            Json jv = Json::array();
            for (const auto& x : v) jv.push_back(to_json(x));
            nulls.push_back(std::move(jv));
        }
        jb["null_basis"] = std::move(nulls);
        blocks.push_back(std::move(jb));
    }
    r["blocks"] = std::move(blocks);
    return {std::move(r), Ok};
}

Outcome unitarity_scan_command(const RunConfig& cfg) {
    const auto opts = gram_options(cfg);
    const auto levels = parse_rational_list("--k", cfg.k);
    const auto weights = parse_rational_list("--h", cfg.h);

    Json r = provenance("unitarity-scan");
    r["max_grade"] = cfg.grade;
    r["max_f0"] = opts.max_f0;
    Json rows = Json::array();
    for (const auto& row : affine::unitarity_scan(levels, weights, cfg.grade, opts)) {
        Json jr;
        jr["k"] = to_json(row.weight.k);
        jr["h"] = to_json(row.weight.h);
        jr["max_grade"] = row.max_grade;
        jr["verdict"] = affine::to_string(row.verdict);
        if (row.witness) {
            jr["witness"] = {{"grade", row.witness->grade},
                             {"charge", row.witness->charge},
                             {"vector", vector_json(row.witness->vector)},
                             {"norm", to_json(row.witness->norm)}};
        } else {
            jr["witness"] = nullptr;
        }
        jr["all_null"] = row.all_null;
        jr["first_null_grade"] = row.first_null_grade ? Json(*row.first_null_grade) : Json(nullptr);
        rows.push_back(std::move(jr));
    }
    r["rows"] = std::move(rows);
    return {std::move(r), Ok};
}

// ------------------------------------------------------------------- output

std::string scalar_text(const Json& j) {
    if (j.is_string()) return j.get<std::string>();
    return j.dump();
}

void render_table(const Json& report, std::ostream& out) {
    std::size_t width = 0;
    for (const auto& [key, value] : report.items()) width = std::max(width, key.size());
    for (const auto& [key, value] : report.items()) {
        if (value.is_array() && !value.empty() && value.front().is_object()) {
            out << key << ":\n";
            for (const auto& row : value) {
                out << "  -";
                for (const auto& [k2, v2] : row.items()) out << " " << k2 << "=" << scalar_text(v2);
                out << "\n";
            }
            continue;
        }
        out << key << std::string(width - key.size() + 2, ' ') << scalar_text(value) << "\n";
    }
}

Outcome dispatch(const RunConfig& cfg) {
    if (cfg.command == "algebra-info") return algebra_info(cfg);
    if (cfg.command == "verify-jacobi") return verify_jacobi(cfg);
    if (cfg.command == "restrict") return restrict_command(cfg);
    if (cfg.command == "cocycle-scan") return cocycle_scan_command(cfg);
    if (cfg.command == "gram") return gram_command(cfg);
    if (cfg.command == "unitarity-scan") return unitarity_scan_command(cfg);
    throw UsageError("", "unknown command '" + cfg.command + "'");
}

}  // namespace

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
    if (config.output != "json" && config.output != "table") {
        err << "error: --output: expected json or table, got '" << config.output << "'\n";
        return Usage;
    }
    Outcome outcome;
    try {
        outcome = dispatch(config);
    } catch (const UsageError& e) {
        err << "error: " << e.what() << "\n";
        return Usage;
    }
    if (config.command == "algebra-info")
        for (const auto& w : outcome.report["warnings"]) err << "warning: " << w.get<std::string>() << "\n";

    if (config.output == "json")
        out << outcome.report.dump(2) << "\n";
    else
        render_table(outcome.report, out);
    if (outcome.code == ContractViolation) err << "contract violation: see witness in report\n";
    return outcome.code;
}

int main(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact current-algebra workbench: extensions of map(T^3, g), loop restrictions, "
                 "and affine sl(2) unitarity checks"};
    app.require_subcommand(1);
    // "-h" would collide with the --h weight flag
    app.set_help_flag("--help", "print this help message and exit");
    RunConfig cfg;

    auto add_algebra = [&](CLI::App* sub) {
        sub->add_option("--algebra", cfg.algebra, "builtin (su2, sl3) or path to algebra JSON")->capture_default_str();
    };
    auto add_flavor_opts = [&](CLI::App* sub) {
        sub->add_option("--flavor", cfg.flavor, "plain | mf | kassel")->capture_default_str();
        sub->add_option("--level", cfg.level, "Kassel level k, exact rational")->capture_default_str();
    };
    auto add_output = [&](CLI::App* sub) {
        sub->add_option("--output", cfg.output, "json | table")->capture_default_str();
    };

    auto* info = app.add_subcommand("algebra-info", "structure constants and invariant tensors of an algebra");
    add_algebra(info);
    add_output(info);

    auto* jac = app.add_subcommand("verify-jacobi", "Jacobi identity on random generator triples");
    add_algebra(jac);
    add_flavor_opts(jac);
    jac->add_option("--trials", cfg.trials)->capture_default_str();
    jac->add_option("--max-momentum", cfg.max_momentum, "bound on |momentum components|")->capture_default_str();
    jac->add_option("--seed", cfg.seed)->capture_default_str();
    add_output(jac);

    auto* res = app.add_subcommand("restrict", "bracket of two loop generators J^a(m e), J^b(n e)");
    add_algebra(res);
    add_flavor_opts(res);
    res->add_option("--e", cfg.e, "loop direction e1,e2,e3")->capture_default_str();
    res->add_option("--a", cfg.a, "basis label of the first generator");
    res->add_option("--b", cfg.b, "basis label of the second generator");
    res->add_option("--m", cfg.m)->capture_default_str();
    res->add_option("--n", cfg.n)->capture_default_str();
    add_output(res);

    auto* scan = app.add_subcommand("cocycle-scan", "restriction contract over random or exhaustive samples");
    add_algebra(scan);
    add_flavor_opts(scan);
    scan->add_option("--trials", cfg.trials)->capture_default_str();
    scan->add_option("--max-momentum", cfg.max_momentum, "bound on |e|, |m|, |n| (grid: on |m|, |n|)")
        ->capture_default_str();
    scan->add_option("--seed", cfg.seed)->capture_default_str();
    scan->add_flag("--grid", cfg.grid, "exhaustive grid instead of random trials");
    scan->add_option("--e-bound", cfg.e_bound, "grid bound on |e components|")->capture_default_str();
    add_output(scan);

    auto* gram = app.add_subcommand("gram", "Shapovalov Gram blocks of affine sl(2) at one grade");
    gram->add_option("--grade", cfg.grade)->capture_default_str();
    gram->add_option("--k", cfg.k, "level, exact rational")->capture_default_str();
    gram->add_option("--h", cfg.h, "H_0 weight, exact rational")->capture_default_str();
    gram->add_option("--max-f0", cfg.max_f0, "cap on F_0 letters per monomial")->capture_default_str();
    add_output(gram);

    auto* uni = app.add_subcommand("unitarity-scan", "unitarity verdicts over (k, h) pairs");
    uni->add_option("--grade", cfg.grade, "maximum grade")->capture_default_str();
    uni->add_option("--k", cfg.k, "comma-separated levels")->capture_default_str();
    uni->add_option("--h", cfg.h, "comma-separated weights")->capture_default_str();
    uni->add_option("--max-f0", cfg.max_f0, "cap on F_0 letters per monomial")->capture_default_str();
    add_output(uni);

    app.set_version_flag("--version", tool_version);
    try {
        app.parse(argc, argv);
    } catch (const CLI::Success& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return Usage;
    }
    for (auto* sub : {info, jac, res, scan, gram, uni})
        if (sub->parsed()) cfg.command = sub->get_name();
    return run(cfg, out, err);
}

}  // namespace currents::cli
