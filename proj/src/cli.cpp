#include "cocycle/cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <sstream>

#include <CLI11.hpp>

#include "cocycle/error.hpp"
#include "cocycle/io.hpp"

namespace cocycle::cli {
namespace {

using io::Json;

struct Config {
    std::string command;
    std::string group_source;
    std::uint64_t seed = 42;
    double tol = kDefaultTol;
    std::size_t starts = 500;
    unsigned threads = 1;
    std::string output;
    std::string format = "json";
    std::string equation = "dalembert";
    std::string function_path;
    std::string g_path;
    std::size_t irrep = 0;
    bool oracle = false;
};

std::string fmt_complex(Complex z, double zero_below) {
    const double re = std::abs(z.real()) < zero_below ? 0.0 : z.real();
    const double im = std::abs(z.imag()) < zero_below ? 0.0 : z.imag();
    std::ostringstream os;
    os << std::setprecision(6);
    if (im == 0.0) {
        os << re;
    } else if (re == 0.0) {
        os << im << "i";
    } else {
        os << re << (im < 0 ? "-" : "+") << std::abs(im) << "i";
    }
    return os.str();
}

std::string fmt_values(const std::vector<Complex>& v) {
    std::string s = "(";
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + fmt_complex(v[i], 1e-12);
    return s + ")";
}

Json group_summary(const Group& g) {
    Json j;
    j["order"] = g.order();
    j["names"] = g.names();
    return j;
}

std::string cmd_group(const Config& cfg, const GroupPtr& g) {
    if (cfg.format == "table") {
        std::ostringstream os;
        os << "order " << g->order() << (g->is_abelian() ? ", abelian" : ", non-abelian") << "\n";
        for (Element x = 0; x < g->order(); ++x) {
            for (Element y = 0; y < g->order(); ++y) os << (y ? " " : "") << g->mul(x, y);
            os << "\n";
        }
        return os.str();
    }
    return io::group_to_json(*g).dump(2) + "\n";
}

std::string cmd_irreps(const Config& cfg, const GroupPtr& g) {
    const IrrepBasis basis = decompose_irreps(g, cfg.seed);
    if (cfg.format == "table") {
        std::ostringstream os;
        os << basis.size() << " irreps, dims";
        for (const auto& rep : basis.irreps) os << " " << rep.dim();
        os << "\ncharacter table (columns = conjugacy class representatives):\n";
        const auto classes = conjugacy_classes(*g);
        os << "    ";
        for (const auto& c : classes) os << std::setw(12) << g->name(c.front());
        os << "\n";
        for (std::size_t k = 0; k < basis.size(); ++k) {
            const GroupFunction chi = character(basis[k]);
            os << std::setw(4) << k;
            for (const auto& c : classes) os << std::setw(12) << fmt_complex(chi[c.front()], 1e-12);
            os << "\n";
        }
        return os.str();
    }
    return io::irreps_to_json(basis).dump(2) + "\n";
}

GroupFunction load_function(const std::string& path, const GroupPtr& g, const char* flag) {
    if (path.empty()) throw BadFormat(std::string(flag) + " is required for this command");
    return io::function_from_json(io::read_json_file(path), g);
}

std::string cmd_fourier(const Config& cfg, const GroupPtr& g) {
    const GroupFunction f = load_function(cfg.function_path, g, "--function");
    const IrrepBasis basis = decompose_irreps(g, cfg.seed);
    const FourierCoefficients coeffs = transform(f, basis);
    if (cfg.format == "table") {
        std::ostringstream os;
        for (std::size_t k = 0; k < basis.size(); ++k) {
            const CMatrix& b = coeffs.blocks[k];
            os << "irrep " << k << " (dim " << basis[k].dim() << "):\n";
            for (std::size_t i = 0; i < b.rows(); ++i) {
                os << "  ";
                for (std::size_t j = 0; j < b.cols(); ++j)
                    os << std::setw(14) << fmt_complex(b(i, j), 1e-12);
                os << "\n";
            }
        }
        return os.str();
    }
    Json blocks = Json::array();
    for (std::size_t k = 0; k < basis.size(); ++k) {
        Json b;
        b["irrep"] = k;
        b["dim"] = basis[k].dim();
        b["block"] = io::matrix_to_json(coeffs.blocks[k]);
        blocks.push_back(std::move(b));
    }
    Json j;
    j["blocks"] = std::move(blocks);
    return j.dump(2) + "\n";
}

std::string cmd_verify(const Config& cfg, const GroupPtr& g) {
    const Equation eq = parse_equation(cfg.equation);
    const GroupFunction f = load_function(cfg.function_path, g, "--function");
    ResidualReport r;
    switch (eq) {
        case Equation::dalembert: r = dalembert_residual(f, cfg.tol); break;
        case Equation::long_form: r = long_residual(f, cfg.tol); break;
        case Equation::wilson:
            r = wilson_residual(f, load_function(cfg.g_path, g, "--g"), cfg.tol);
            break;
    }
    if (cfg.format == "table") {
        std::ostringstream os;
        os << to_string(eq) << ": max residual " << std::setprecision(6) << r.max_residual
           << " at (" << r.argmax.first << ", " << r.argmax.second << "), "
           << (r.satisfied ? "satisfied" : "NOT satisfied") << "\n";
        return os.str();
    }
    return io::residual_to_json(r).dump(2) + "\n";
}

Json solution_json(const SolutionCertificate& s) {
    Json j;
    j["values"] = io::values_to_json(s.f.values);
    Json w;
    w["kind"] = to_string(s.witness.kind);
    w["index"] = s.witness.irrep_index;
    j["witness"] = std::move(w);
    j["residual"] = s.residual;
    return j;
}

std::string cmd_solve(const Config& cfg, const GroupPtr& g) {
    const Equation eq = parse_equation(cfg.equation);
    if (cfg.oracle && eq == Equation::wilson) {
        throw BadFormat("--oracle is available for the dalembert and long equations");
    }
    const IrrepBasis basis = decompose_irreps(g, cfg.seed);

    std::vector<SolutionCertificate> solutions;
    std::vector<WilsonSolutionSpace> spaces;
    if (eq == Equation::wilson) {
        spaces = solve_wilson(basis);
        for (const auto& s : spaces) solutions.push_back(s.g);
    } else {
        solutions = eq == Equation::dalembert ? solve_dalembert(basis) : solve_long(basis);
    }

    std::optional<OracleResult> oracle;
    std::optional<MatchReport> match;
    if (cfg.oracle) {
        OracleOptions opts;
        opts.starts = cfg.starts;
        opts.seed = cfg.seed;
        opts.threads = cfg.threads;
        oracle = gauss_newton_oracle(g, eq, opts);
        match = match_solutions(oracle->solutions, solutions);
    }

    if (cfg.format == "table") {
        std::ostringstream os;
        os << to_string(eq) << " on a group of order " << g->order() << ": " << solutions.size()
           << (eq == Equation::wilson ? " g admitting a nonzero f\n" : " nonzero solution(s)\n");
        for (std::size_t i = 0; i < solutions.size(); ++i) {
            os << "  [" << i << "] " << fmt_values(solutions[i].f.values) << "  via "
               << to_string(solutions[i].witness.kind) << " " << solutions[i].witness.irrep_index
               << "\n";
        }
        for (const auto& s : spaces) {
            os << "  g[" << s.g_index << "]: f-space dimension " << s.dimension << "\n";
        }
        if (eq == Equation::wilson) os << "  f = 0 solves the equation for every g\n";
        if (oracle) {
            os << "oracle: " << oracle->converged << " converged, " << oracle->dropped
               << " dropped, " << oracle->solutions.size() << " distinct; "
               << (match->complete() ? "all matched" : "MISMATCH") << "\n";
        }
        return os.str();
    }

    Json j;
    j["equation"] = to_string(eq);
    j["group"] = group_summary(*g);
    Json sols = Json::array();
    for (const auto& s : solutions) sols.push_back(solution_json(s));
    j["solutions"] = std::move(sols);
    if (eq == Equation::wilson) {
        Json ws = Json::array();
        for (const auto& s : spaces) {
            Json w;
            w["g_index"] = s.g_index;
            w["dimension"] = s.dimension;
            w["coefficient_span_dimension"] = s.coefficient_span_dimension;
            Json b = Json::array();
            for (const auto& f : s.f_basis) b.push_back(io::values_to_json(f.values));
            w["basis"] = std::move(b);
            ws.push_back(std::move(w));
        }
        j["wilson_spaces"] = std::move(ws);
        j["f_zero_any_g"] = true;
    }
    if (oracle) {
        Json o;
        o["starts"] = oracle->real_starts;
        o["complex_starts"] = oracle->complex_starts;
        o["converged"] = oracle->converged;
        o["dropped"] = oracle->dropped;
        o["deflated_runs"] = oracle->deflated_runs;
        Json found = Json::array();
        for (const auto& f : oracle->solutions) found.push_back(io::values_to_json(f.values));
        o["found"] = std::move(found);
        Json matched = Json::array();
        for (const auto& m : match->matches) {
            Json mj;
            mj["found"] = m.found_index;
            mj["constructed"] = m.constructed_index;
            mj["distance"] = m.distance;
            matched.push_back(std::move(mj));
        }
        o["matched"] = std::move(matched);
        o["trivial"] = match->trivial_found;
        Json un;
        un["found"] = match->unmatched_found;
        un["constructed"] = match->unmatched_constructed;
        o["unmatched"] = std::move(un);
        j["oracle"] = std::move(o);
    }
    return j.dump(2) + "\n";
}

std::string cmd_lemma(const Config& cfg, const GroupPtr& g) {
    const IrrepBasis basis = decompose_irreps(g, cfg.seed);
    if (cfg.irrep >= basis.size()) {
        throw BadFormat("--irrep " + std::to_string(cfg.irrep) + " out of range (group has " +
                        std::to_string(basis.size()) + " irreps)");
    }
    const LemmaReport r = verify_small_dimension_lemma(basis[cfg.irrep], cfg.tol);
    if (cfg.format == "table") {
        std::ostringstream os;
        os << "irrep " << cfg.irrep << " (dim " << basis[cfg.irrep].dim() << "): "
           << r.witnesses.size() << " witness vector(s), conclusion " << to_string(r.conclusion)
           << "\n";
        return os.str();
    }
    Json j;
    j["irrep"] = cfg.irrep;
    j["dim"] = basis[cfg.irrep].dim();
    const Json report = io::lemma_to_json(r);
    for (const auto& [k, v] : report.items()) j[k] = v;
    return j.dump(2) + "\n";
}

}  // namespace

Result run(const std::vector<std::string>& args) {
    Config cfg;

    CLI::App app{"Harmonic analysis on finite groups: irreps, Fourier transforms, and "
                 "d'Alembert / Wilson / long functional equations"};
    app.name("cocycle");
    app.require_subcommand(1);

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--group", cfg.group_source, "builtin:NAME (z6, d4, q8, s3, a4, z2xq8) or a "
                                                     "Cayley-table JSON file")
            ->required();
        sub->add_option("--seed", cfg.seed,
                        "seed for the irrep decomposition and the oracle (default 42, or "
                        "COCYCLE_SEED)");
        sub->add_option("--tol", cfg.tol, "residual tolerance")->check(CLI::PositiveNumber);
        sub->add_option("--output,-o", cfg.output, "write output to a file instead of stdout");
        sub->add_option("--format", cfg.format, "json or table")
            ->check(CLI::IsMember({"json", "table"}));
    };

    auto* group_cmd = app.add_subcommand("group", "print the group's Cayley table");
    add_common(group_cmd);
    auto* irreps_cmd = app.add_subcommand("irreps", "compute irreducible unitary representations");
    add_common(irreps_cmd);
    auto* fourier_cmd = app.add_subcommand("fourier", "Fourier transform of a group function");
    add_common(fourier_cmd);
    fourier_cmd->add_option("--function", cfg.function_path, "function JSON file")->required();
    auto* verify_cmd = app.add_subcommand("verify", "residual of a functional equation");
    add_common(verify_cmd);
    verify_cmd->add_option("--equation", cfg.equation, "dalembert, wilson or long")
        ->check(CLI::IsMember({"dalembert", "wilson", "long"}));
    verify_cmd->add_option("--function", cfg.function_path, "function JSON file (f)")->required();
    verify_cmd->add_option("--g", cfg.g_path, "second function for the Wilson equation");
    auto* solve_cmd = app.add_subcommand("solve", "construct all solutions of an equation");
    add_common(solve_cmd);
    solve_cmd->add_option("--equation", cfg.equation, "dalembert, wilson or long")
        ->check(CLI::IsMember({"dalembert", "wilson", "long"}));
    solve_cmd->add_flag("--oracle", cfg.oracle, "cross-check with the Gauss-Newton search");
    solve_cmd->add_option("--starts", cfg.starts, "oracle starts")->check(CLI::PositiveNumber);
    solve_cmd->add_option("--threads", cfg.threads, "oracle worker threads")
        ->check(CLI::PositiveNumber);
    auto* lemma_cmd = app.add_subcommand("lemma", "common quasi-eigenvector search on one irrep");
    add_common(lemma_cmd);
    lemma_cmd->add_option("--irrep", cfg.irrep, "irrep index")->required();

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        const CLI::App* target = &app;
        for (const auto* sub : app.get_subcommands()) target = sub;
        return {kOk, target->help(), ""};
    } catch (const CLI::ParseError& e) {
        return {kBadArgs, "", std::string(e.what()) + "\n"};
    }

    const CLI::App* sub = app.get_subcommands().front();
    cfg.command = sub->get_name();
    if (const char* env = std::getenv("COCYCLE_SEED"); env && sub->count("--seed") == 0) {
        try {
            std::size_t used = 0;
            cfg.seed = std::stoull(env, &used);
            if (used != std::string(env).size()) throw std::invalid_argument(env);
        } catch (const std::exception&) {
            return {kBadArgs, "", std::string("COCYCLE_SEED is not an integer: ") + env + "\n"};
        }
    }
    try {
        const GroupPtr g = io::load_group(cfg.group_source);
        std::string out;
        if (cfg.command == "group") out = cmd_group(cfg, g);
        else if (cfg.command == "irreps") out = cmd_irreps(cfg, g);
        else if (cfg.command == "fourier") out = cmd_fourier(cfg, g);
        else if (cfg.command == "verify") out = cmd_verify(cfg, g);
        else if (cfg.command == "solve") out = cmd_solve(cfg, g);
        else if (cfg.command == "lemma") out = cmd_lemma(cfg, g);

        if (!cfg.output.empty()) {
            std::ofstream f(cfg.output, std::ios::binary);
            if (!f) return {kInternal, "", "cannot write " + cfg.output + "\n"};
            f << out;
            return {kOk, "", ""};
        }
        return {kOk, std::move(out), ""};
    } catch (const FileNotFound& e) {
        return {kFileNotFound, "", std::string(e.what()) + "\n"};
    } catch (const ValidationError& e) {
        return {kValidation, "", std::string(e.what()) + "\n"};
    } catch (const std::exception& e) {
        return {kInternal, "", std::string("internal error: ") + e.what() + "\n"};
    }
}

}  // namespace cocycle::cli
