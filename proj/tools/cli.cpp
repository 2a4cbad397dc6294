#include "cli.hpp"

#include <CLI11.hpp>

#include <array>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

namespace novipot::cli {

using novipot::to_string;

namespace {

struct CommandInfo {
    Command tag;
    const char* name;
    const char* help;
};

constexpr std::array<CommandInfo, 6> kCommands{{
    {Command::certify, "certify", "certify non-displaceability of the torus theta(n, s) with bulk weights k"},
    {Command::verify, "verify", "check that a point is critical for a potential"},
    {Command::solve, "solve", "list the closed-form critical points of a family"},
    {Command::blowup, "blowup", "critical points of the bulk-deformed blowup potential"},
    {Command::invariants, "invariants", "disk counts and area invariants of a product torus"},
    {Command::clifford_qh, "clifford-qh", "critical points and semisimplicity for the Clifford torus"},
}};

Rational rational_arg(const std::string& flag, const std::string& text) {
    try {
        return parse_rational(text);
    } catch (const Error& e) {
        throw UsageError(flag + ": " + e.what());
    }
}

int int_arg(const std::string& flag, const std::string& text) {
    std::size_t used = 0;
    int v = 0;
    try {
        v = std::stoi(text, &used);
    } catch (const std::exception&) {
        used = 0;
    }
    if (used == 0 || used != text.size()) throw UsageError(flag + ": expected an integer, got '" + text + "'");
    return v;
}

/// Splits on commas outside braces and parentheses.
std::vector<std::string> split_top_level(const std::string& text) {
    std::vector<std::string> out;
    std::string cur;
    int depth = 0;
    for (const char c : text) {
        if (c == '(' || c == '{') ++depth;
        if (c == ')' || c == '}') --depth;
        if (c == ',' && depth == 0) {
            out.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    if (!cur.empty() || !out.empty()) out.push_back(cur);
    return out;
}

std::vector<int> int_list(const std::string& flag, const std::string& text) {
    std::vector<int> out;
    for (const auto& part : split_top_level(text)) out.push_back(int_arg(flag, part));
    return out;
}

std::vector<ThetaBlock> block_list(const std::string& flag, const std::string& text) {
    std::vector<ThetaBlock> out;
    for (const auto& part : split_top_level(text)) {
        const auto colon = part.find(':');
        if (colon == std::string::npos) throw UsageError(flag + ": expected k:s, got '" + part + "'");
        out.push_back({int_arg(flag, part.substr(0, colon)), rational_arg(flag, part.substr(colon + 1))});
    }
    return out;
}

std::map<std::string, std::string> point_list(const std::string& text) {
    std::map<std::string, std::string> out;
    for (const auto& part : split_top_level(text)) {
        const auto eq = part.find('=');
        if (eq == std::string::npos || eq == 0) throw UsageError("--point: expected var=value, got '" + part + "'");
        out[part.substr(0, eq)] = part.substr(eq + 1);
    }
    return out;
}

Format format_from_string(const std::string& name) {
    if (name == "json") return Format::json;
    if (name == "text") return Format::text;
    throw UsageError("unknown format '" + name + "' (json or text)");
}

std::string format_name(Format f) { return f == Format::json ? "json" : "text"; }

nlohmann::json blocks_json(const std::vector<ThetaBlock>& blocks) {
    auto out = nlohmann::json::array();
    for (const auto& b : blocks) out.push_back({{"k", b.k}, {"s", rational_to_json(b.s)}});
    return out;
}

std::vector<ThetaBlock> blocks_from_json(const nlohmann::json& j) {
    std::vector<ThetaBlock> out;
    for (const auto& b : j) out.push_back({b.at("k").get<int>(), rational_from_json(b.at("s"))});
    return out;
}

void apply_json(RunConfig& c, const nlohmann::json& j) {
    if (!j.is_object()) throw UsageError("config must be a JSON object");
    if (j.contains("family") && !j.contains("spec")) {
        c.spec = PotentialSpec::from_json(j);
        return;
    }
    if ((j.contains("blocks") || j.contains("kind")) && !j.contains("command")) {
        c.command = Command::invariants;
        c.torus = TorusSpec::from_json(j);
        return;
    }
    if (j.contains("command")) c.command = command_from_string(j.at("command").get<std::string>());
    if (j.contains("spec")) c.spec = PotentialSpec::from_json(j.at("spec"));
    if (j.contains("torus")) c.torus = TorusSpec::from_json(j.at("torus"));
    if (j.contains("against")) c.against = blocks_from_json(j.at("against"));
    if (j.contains("point")) c.point = j.at("point").get<std::map<std::string, std::string>>();
    if (j.contains("cutoff")) c.cutoff = rational_from_json(j.at("cutoff"));
    if (j.contains("floor")) c.floor = rational_from_json(j.at("floor"));
    if (j.contains("threads")) c.threads = j.at("threads").get<int>();
    if (j.contains("max_k")) c.max_k = j.at("max_k").get<int>();
    if (j.contains("output")) c.output = j.at("output").get<std::string>();
    if (j.contains("format")) c.format = format_from_string(j.at("format").get<std::string>());
}

std::string signs_text(const std::vector<int>& signs) {
    std::string out = "(";
    for (std::size_t i = 0; i < signs.size(); ++i) {
        if (i > 0) out += ",";
        out += signs[i] > 0 ? "+" : "-";
    }
    return out + ")";
}

std::string ints_text(const std::vector<int>& v) {
    std::string out = "(";
    for (std::size_t i = 0; i < v.size(); ++i) out += (i ? "," : "") + std::to_string(v[i]);
    return out + ")";
}

std::string point_text(const CriticalPoint& cp) {
    std::ostringstream os;
    os << signs_text(cp.signs);
    if (cp.degenerate) {
        os << " degenerate\n";
        return os.str();
    }
    os << (cp.verified ? " verified to T^" : " NOT verified, residual T^") << to_string(cp.verified ? cp.verified_to : cp.residual_valuation.value()) << "\n";
    for (const auto& v : cp.variables) {
        os << "  " << v << " = " << cp.at(v).describe() << "   [val " << cp.valuations.at(v).to_string() << "]\n";
    }
    return os.str();
}

std::string report_text(const std::vector<ValuationRow>& rows) {
    std::ostringstream os;
    os << "valuation report:\n";
    for (const auto& r : rows) {
        os << "  " << signs_text(r.signs) << "  val(u) = " << (r.u_valuation ? to_string(*r.u_valuation) : "-") << "  "
           << to_string(r.classification) << (r.consistent ? "" : "  INCONSISTENT") << "\n";
    }
    return os.str();
}

Assignment parse_point(const RunConfig& c, const Lattice& L) {
    Assignment out;
    for (const auto& [var, text] : c.point) {
        try {
            out.emplace(var, parse_scalar(text, L));
        } catch (const SyntaxError& e) {
            throw UsageError("--point " + var + ": " + e.what());
        }
    }
    return out;
}

Report run_certify(const RunConfig& c) {
    const auto r = certify(c.spec.n, c.spec.s, c.spec.bulk, c.cutoff, c.floor, c.threads);
    Report out{r.ok() ? 0 : 2, r.to_json(), ""};
    std::ostringstream os;
    if (r.ok()) {
        const auto& cert = *r.certificate;
        os << "certified: n = " << c.spec.n << ", s = " << to_string(cert.s) << ", rho = " << to_string(cert.rho)
           << ", k = " << ints_text(c.spec.bulk_weights()) << "\n";
        os << "val(u) = " << to_string(cert.u_valuation) << "; HF is nonzero, the torus is non-displaceable\n";
        os << point_text(cert.point);
    } else {
        os << "not certified: " << r.reason << "\n";
    }
    os << report_text(r.report);
    out.text = os.str();
    return out;
}

Report run_verify(const RunConfig& c) {
    const Lattice L = c.lattice();
    const auto p = build(c.spec, L);
    const auto cp = verify(p, parse_point(c, L), verify_floor_for(L));
    Report out{cp.verified ? 0 : 2, {{"spec", c.spec.to_json()}, {"point", cp.to_json()}}, ""};
    out.text = "potential: " + p.to_string() + "\n" + point_text(cp);
    return out;
}

Report run_solve(const RunConfig& c) {
    const Lattice L = c.lattice();
    const Rational vf = verify_floor_for(L);
    std::vector<CriticalPoint> points;
    nlohmann::json body{{"spec", c.spec.to_json()}};
    std::string extra;
    switch (c.spec.family) {
        case Family::theta:
        case Family::theta_bulk: {
            const Rational rho = c.spec.family == Family::theta ? Rational(1) : c.spec.rho;
            const auto k = c.spec.family == Family::theta ? std::vector<int>(c.spec.n, 0) : c.spec.bulk_weights();
            points = solve_theta(L, c.spec.n, k, rho, vf, c.threads);
            const auto rows = valuation_report(points, k, rho);
            auto list = nlohmann::json::array();
            for (const auto& r : rows) list.push_back(r.to_json());
            body["valuation_report"] = list;
            extra = report_text(rows);
            break;
        }
        case Family::blowup_bulk:
            points = solve_blowup(L, c.spec.eps, c.spec.rho, vf);
            break;
        case Family::clifford: {
            const GradientEvaluator g(clifford(L, c.spec.n, c.spec.bulk_weights(), c.spec.rho));
            const auto signs = sign_vectors(c.spec.n);
            const auto assignments = clifford_points(L, c.spec.n, c.spec.bulk_weights(), c.spec.rho);
            for (std::size_t i = 0; i < assignments.size(); ++i) {
                auto cp = verify(g, assignments[i], vf);
                cp.signs = signs[i];
                points.push_back(std::move(cp));
            }
            break;
        }
        default:
            throw UsageError("solve supports the clifford, theta, theta_bulk and blowup_bulk families");
    }
    auto list = nlohmann::json::array();
    std::string text;
    for (const auto& cp : points) {
        list.push_back(cp.to_json());
        text += point_text(cp);
    }
    body["points"] = list;
    return {0, body, text + extra};
}

Report run_blowup(const RunConfig& c) {
    const Lattice L = c.lattice();
    const auto points = solve_blowup(L, c.spec.eps, c.spec.rho, verify_floor_for(L));
    const GradientEvaluator g(blowup_bulk(L, c.spec.eps, c.spec.rho));
    auto list = nlohmann::json::array();
    std::string text = "blowup torus, eps = " + to_string(c.spec.eps) + ", rho = " + to_string(c.spec.rho) + "\n";
    bool all = true;
    for (const auto& cp : points) {
        const auto h = hessian_nondegenerate(g, cp.assignment);
        auto j = cp.to_json();
        j["hessian"] = {{"nondegenerate", h.nondegenerate}, {"determinant_valuation", h.determinant_valuation.to_json()}};
        list.push_back(j);
        all = all && cp.verified;
        text += point_text(cp);
    }
    return {all ? 0 : 2, {{"spec", c.spec.to_json()}, {"points", list}}, text};
}

Report run_invariants(const RunConfig& c) {
    const TorusSpec t = c.torus ? *c.torus : TorusSpec::theta(c.spec.n, c.spec.s);
    const auto r = invariants_report(t, c.max_k);
    nlohmann::json body{{"invariants", r.to_json()}};
    std::ostringstream os;
    os << t.describe() << ": " << r.disks << " Maslov-2 disks; minimal area " << to_string(r.minimal.area) << " with "
       << r.minimal.count << " disks; 1/2 " << (r.half_in_spectrum ? "is" : "is not") << " a Maslov-2 area\n";
    for (const auto& [s, ok] : r.min_area_checks) {
        os << "higher Maslov area bound at s = " << to_string(s) << " (k <= " << c.max_k << "): " << (ok ? "holds" : "FAILS") << "\n";
    }
    if (c.against) {
        const auto other = TorusSpec::product(t.n, *c.against);
        const auto d = distinguish(t, other);
        body["against"] = other.to_json();
        body["distinction"] = d.to_json();
        os << "vs " << other.describe() << ": " << to_string(d.verdict);
        if (d.conditional) os << " [conditional (Conj. toridistinct)]";
        os << " " << d.witness.dump() << "\n";
    }
    return {0, body, os.str()};
}

Report run_clifford_qh(const RunConfig& c) {
    const Lattice L = c.lattice();
    const auto l = c.spec.bulk_weights();
    const auto summary = clifford_qh(L, c.spec.n, l, c.spec.rho, verify_floor_for(L), c.threads);
    const bool semisimple = summary.nondegenerate == summary.points && summary.verified == summary.points;
    auto list = nlohmann::json::array();
    for (const auto& cp : summary.details) list.push_back(cp.to_json());
    nlohmann::json body{{"spec", c.spec.to_json()},
                        {"points", summary.points},
                        {"verified", summary.verified},
                        {"nondegenerate", summary.nondegenerate},
                        {"semisimple", semisimple},
                        {"idempotents", semisimple ? summary.points : 0},
                        {"details", list}};
    std::string text = std::to_string(summary.nondegenerate) + " nondegenerate critical points; ";
    text += semisimple ? "semisimple with " + std::to_string(summary.points) + " idempotent summands\n"
                       : "not semisimple (" + std::to_string(summary.verified) + " of " +
                             std::to_string(summary.points) + " verified)\n";
    return {semisimple ? 0 : 2, body, text};
}

struct RawArgs {
    std::optional<std::string> n, s, k, l, rho, eps, cutoff, floor, config, output, format, threads, point, expr,
        family, blocks, against, max_k;
};

void add_options(CLI::App& app, RawArgs& r) {
    app.add_option("--n", r.n, "dimension");
    app.add_option("--s", r.s, "area parameter p/q in [1/2, 1)");
    app.add_option("--k", r.k, "bulk weights k_1,...,k_n");
    app.add_option("--l", r.l, "clifford bulk weights l_1,...,l_n");
    app.add_option("--rho", r.rho, "bulk exponent p/q");
    app.add_option("--eps", r.eps, "blowup capacity p/q in (0, 1)");
    app.add_option("--cutoff", r.cutoff, "truncation T^cutoff (default 10 or $NOVIPOT_CUTOFF)");
    app.add_option("--floor", r.floor, "precision floor");
    app.add_option("--config", r.config, "JSON run config, potential spec or torus spec");
    app.add_option("--output", r.output, "output path, - for stdout");
    app.add_option("--format", r.format, "json or text");
    app.add_option("--threads", r.threads, "worker threads");
    app.add_option("--point", r.point, "var=value,... for verify");
    app.add_option("--expr", r.expr, "custom potential");
    app.add_option("--family", r.family, "clifford, theta, theta_bulk, blowup, blowup_bulk or custom");
    app.add_option("--blocks", r.blocks, "theta blocks k:s,... of the torus (invariants)");
    app.add_option("--against", r.against, "theta blocks k:s,... of a product torus to compare with");
    app.add_option("--max-k", r.max_k, "largest Maslov index / 2 enumerated");
}

}  // namespace

std::string to_string(Command c) {
    for (const auto& [tag, name, help] : kCommands) {
        if (tag == c) return name;
    }
    return "unknown";
}

Command command_from_string(const std::string& name) {
    for (const auto& [tag, text, help] : kCommands) {
        if (name == text) return tag;
    }
    throw UsageError("unknown command '" + name + "'");
}

void RunConfig::validate() const {
    if (!(floor > 0)) throw UsageError("floor must be positive");
    if (!(cutoff > floor)) throw UsageError("cutoff (" + to_string(cutoff) + ") must exceed floor (" + to_string(floor) + ")");
    if (threads < 1) throw UsageError("threads must be at least 1");
    if (max_k < 1) throw UsageError("max-k must be at least 1");
    try {
        if (command == Command::invariants) {
            if (torus) {
                torus->validate();
            } else {
                TorusSpec::theta(spec.n, spec.s);
            }
            if (against) TorusSpec::product(torus ? torus->n : spec.n, *against);
        } else {
            spec.validate();
        }
        if (command == Command::blowup &&
            spec.family != Family::blowup_bulk) throw UsageError("blowup needs the blowup_bulk family");
        if (command == Command::clifford_qh && spec.family != Family::clifford) {
            throw UsageError("clifford-qh needs the clifford family");
        }
        if (command != Command::invariants) lattice();
    } catch (const UsageError&) {
        throw;
    } catch (const Error& e) {
        throw UsageError(e.what());
    }
}

Lattice RunConfig::lattice() const { return spec.lattice(cutoff, floor); }

nlohmann::json RunConfig::to_json() const {
    nlohmann::json j{{"command", cli::to_string(command)},
                     {"spec", spec.to_json()},
                     {"cutoff", rational_to_json(cutoff)},
                     {"floor", rational_to_json(floor)},
                     {"threads", threads},
                     {"max_k", max_k},
                     {"output", output},
                     {"format", format_name(format)}};
    if (torus) j["torus"] = torus->to_json();
    if (against) j["against"] = blocks_json(*against);
    if (!point.empty()) j["point"] = point;
    return j;
}

RunConfig RunConfig::from_json(const nlohmann::json& j) {
    RunConfig c;
    apply_json(c, j);
    return c;
}

RunConfig load_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw UsageError("cannot read config '" + path + "'");
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(in);
    } catch (const nlohmann::json::exception& e) {
        throw UsageError("config '" + path + "': " + e.what());
    }
    try {
        return RunConfig::from_json(j);
    } catch (const UsageError&) {
        throw;
    } catch (const std::exception& e) {
        throw UsageError("config '" + path + "': " + e.what());
    }
}

RunConfig parse_args(int argc, const char* const* argv) {
    CLI::App app{"Exact Novikov-ring computations for potentials of Lagrangian tori", "novipot"};
    RawArgs raw;
    add_options(app, raw);
    std::vector<std::pair<Command, CLI::App*>> subs;
    for (const auto& [tag, name, help] : kCommands) {
        auto* sub = app.add_subcommand(name, help);
        add_options(*sub, raw);
        subs.emplace_back(tag, sub);
    }
    app.require_subcommand(0, 1);
    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp&) {
        throw;
    } catch (const CLI::ParseError& e) {
        throw UsageError(e.what());
    }

    RunConfig c;
    if (const char* env = std::getenv("NOVIPOT_CUTOFF"); env != nullptr && *env != '\0') {
        c.cutoff = rational_arg("NOVIPOT_CUTOFF", env);
    }
    bool have_command = false;
    if (raw.config) {
        const auto text = [&] {
            std::ifstream in(*raw.config);
            if (!in) throw UsageError("cannot read config '" + *raw.config + "'");
            std::stringstream ss;
            ss << in.rdbuf();
            return ss.str();
        }();
        nlohmann::json j;
        try {
            j = nlohmann::json::parse(text);
            apply_json(c, j);
        } catch (const UsageError&) {
            throw;
        } catch (const std::exception& e) {
            throw UsageError("config '" + *raw.config + "': " + e.what());
        }
        have_command = j.contains("command") || c.torus.has_value();
    }
    for (const auto& [tag, sub] : subs) {
        if (sub->parsed()) {
            c.command = tag;
            have_command = true;
        }
    }
    if (!have_command) throw UsageError("no command given; run with --help");

    bool family_given = raw.config.has_value();
    try {
        if (raw.family) {
            c.spec.family = family_from_string(*raw.family);
            family_given = true;
        }
    } catch (const Error& e) {
        throw UsageError(e.what());
    }
    if (raw.n) c.spec.n = int_arg("--n", *raw.n);
    if (raw.s) c.spec.s = rational_arg("--s", *raw.s);
    if (raw.k) c.spec.bulk = int_list("--k", *raw.k);
    if (raw.l) c.spec.bulk = int_list("--l", *raw.l);
    if (raw.rho) c.spec.rho = rational_arg("--rho", *raw.rho);
    if (raw.eps) c.spec.eps = rational_arg("--eps", *raw.eps);
    if (raw.expr) {
        c.spec.expr = *raw.expr;
        if (!raw.family) c.spec.family = Family::custom;
        family_given = true;
    }
    if (raw.cutoff) c.cutoff = rational_arg("--cutoff", *raw.cutoff);
    if (raw.floor) c.floor = rational_arg("--floor", *raw.floor);
    if (raw.output) c.output = *raw.output;
    if (raw.format) c.format = format_from_string(*raw.format);
    if (raw.threads) c.threads = int_arg("--threads", *raw.threads);
    if (raw.max_k) c.max_k = int_arg("--max-k", *raw.max_k);
    if (raw.point) c.point = point_list(*raw.point);
    if (raw.blocks) c.torus = TorusSpec{raw.n ? c.spec.n : (c.torus ? c.torus->n : c.spec.n), block_list("--blocks", *raw.blocks)};
    if (raw.against) c.against = block_list("--against", *raw.against);

    switch (c.command) {
        case Command::certify:
            // certify derives the family and rho from s
            c.spec.family = c.spec.s == Rational(1, 2) ? Family::theta : Family::theta_bulk;
            if (c.spec.family == Family::theta_bulk) c.spec.rho = c.spec.s - Rational(1, 2);
            break;
        case Command::clifford_qh:
            if (!family_given) c.spec.family = Family::clifford;
            break;
        case Command::blowup:
            if (!family_given) c.spec.family = Family::blowup_bulk;
            if (!raw.n && c.spec.family == Family::blowup_bulk) c.spec.n = 2;
            break;
        case Command::solve:
        case Command::verify:
            if (!family_given) c.spec.family = Family::theta_bulk;
            break;
        case Command::invariants:
            if (c.torus) {
                std::vector<ThetaBlock> blocks = c.torus->blocks;
                try {
                    c.torus = TorusSpec::product(c.torus->n, std::move(blocks));
                } catch (const Error& e) {
                    throw UsageError(e.what());
                }
            }
            break;
    }
    c.validate();
    return c;
}

Report execute(const RunConfig& config) {
    config.validate();
    switch (config.command) {
        case Command::certify: return run_certify(config);
        case Command::verify: return run_verify(config);
        case Command::solve: return run_solve(config);
        case Command::blowup: return run_blowup(config);
        case Command::invariants: return run_invariants(config);
        case Command::clifford_qh: return run_clifford_qh(config);
    }
    throw UsageError("unknown command");
}

std::string emit(const Report& report, Format format) {
    if (format == Format::text) return report.text;
    return report.body.dump(2) + "\n";
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    RunConfig config;
    try {
        config = parse_args(argc, argv);
    } catch (const CLI::CallForHelp&) {
        CLI::App app{"Exact Novikov-ring computations for potentials of Lagrangian tori", "novipot"};
        RawArgs raw;
        add_options(app, raw);
        for (const auto& [tag, name, help] : kCommands) app.add_subcommand(name, help);
        out << app.help();
        return 0;
    } catch (const Error& e) {
        err << "novipot: " << e.what() << "\n";
        return 1;
    }
    Report report;
    try {
        report = execute(config);
    } catch (const Error& e) {
        err << "novipot: " << e.what() << "\n";
        return 1;
    }
    const std::string bytes = emit(report, config.format);
    if (config.output == "-") {
        out << bytes;
    } else {
        std::ofstream file(config.output, std::ios::binary);
        if (!file) {
            err << "novipot: cannot write '" << config.output << "'\n";
            return 1;
        }
        file << bytes;
    }
    return report.exit_code;
}

}  // namespace novipot::cli
