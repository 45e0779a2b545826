// Command-line surface: enumerate preradical lattices, run the
// verification suites, compute individual operations, emit
// DOT/JSON. Exit codes: 0 success, 1 usage/input error, 2 capacity
// bound exceeded, 3 verification failure.

#include "preradicals/preradicals.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>

using namespace preradicals;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInput = 1;
constexpr int kExitCapacity = 2;
constexpr int kExitVerification = 3;

json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw shape_error("cannot open file: " + path);
    json j;
    in >> j;
    return j;
}

Limits load_limits(const std::string& limits_path) {
    if (!limits_path.empty())
        return limits_from_json(read_json_file(limits_path));
    if (const char* env = std::getenv("PRERADICAL_LIMITS"))
        return limits_from_json(read_json_file(env));
    return Limits{};
}

// --quiver accepts either a file path or inline JSON
Quiver load_quiver(const std::string& arg) {
    if (!arg.empty() && arg.front() == '{')
        return quiver_from_json(json::parse(arg));
    return quiver_from_json(read_json_file(arg));
}

struct LatticeContext {
    Quiver q;
    int p;
    std::vector<Preradical> prs;
    LabelDictionary dict;
    std::vector<std::string> names;
    std::vector<std::string> brackets;
};

LatticeContext make_context(const Quiver& q, int p, const Limits& limits) {
    LatticeContext ctx{q, p, enumerate_preradicals(q, p, limits), structural_dictionary(q, p), {}, {}};
    for (const auto& pr : ctx.prs) {
        ctx.names.push_back(short_name(pr, ctx.dict));
        ctx.brackets.push_back(label_preradical(pr, ctx.dict));
    }
    return ctx;
}

const Preradical& resolve_label(const LatticeContext& ctx, const std::string& label) {
    for (size_t i = 0; i < ctx.prs.size(); ++i)
        if (ctx.names[i] == label || ctx.brackets[i] == label)
            return ctx.prs[i];
    throw shape_error("unknown preradical label '" + label + "'");
}

void print_preradical_line(std::ostream& out, const LatticeContext& ctx, const Preradical& pr) {
    LabelDictionary dict = pr.q == ctx.q ? ctx.dict : structural_dictionary(pr.q, pr.p);
    out << short_name(pr, dict) << " = " << label_preradical(pr, dict)
        << (is_idempotent(pr) ? "  [idempotent]" : "") << (is_radical(pr) ? "  [radical]" : "")
        << "\n";
}

void print_report(std::ostream& out, const Report& report, const std::string& format) {
    if (format == "json") {
        out << to_json(report).dump(2) << "\n";
        return;
    }
    for (const auto& c : report.checks)
        out << (c.pass ? "PASS " : "FAIL ") << c.name
            << (c.detail.empty() ? "" : "  (" + c.detail + ")") << "\n";
    out << report.checks.size() - report.failures() << "/" << report.checks.size()
        << " checks passed\n";
}

AdjointPair parse_adjunction(const std::string& descriptor, const Quiver& q, int p) {
    if (!descriptor.empty() && descriptor.front() == '{')
        return adjunction_from_json(json::parse(descriptor), q, p);
    if (!descriptor.empty() && descriptor.front() == '@')
        return adjunction_from_json(read_json_file(descriptor.substr(1)), q, p);
    auto colon = descriptor.find(':');
    std::string kind = descriptor.substr(0, colon);
    std::string arg = colon == std::string::npos ? "" : descriptor.substr(colon + 1);
    if (kind == "lan-res") {
        std::vector<int> subset;
        size_t pos = 0;
        while (pos < arg.size()) {
            size_t comma = arg.find(',', pos);
            subset.push_back(std::stoi(arg.substr(pos, comma - pos)));
            if (comma == std::string::npos)
                break;
            pos = comma + 1;
        }
        return lan_res_adjunction(q, subset, p);
    }
    if (kind == "iso") {
        std::vector<int> vmap(q.vertices);
        if (arg == "identity") {
            for (int v = 0; v < q.vertices; ++v)
                vmap[v] = v;
            return equivalence_from_iso(q, q, vmap, p);
        }
        if (arg == "reversal") {
            for (int v = 0; v < q.vertices; ++v)
                vmap[v] = q.vertices - 1 - v;
            return equivalence_from_iso(q, opposite(q), vmap, p);
        }
        size_t pos = 0;
        int v = 0;
        while (pos < arg.size() && v < q.vertices) {
            size_t comma = arg.find(',', pos);
            vmap[v++] = std::stoi(arg.substr(pos, comma - pos));
            if (comma == std::string::npos)
                break;
            pos = comma + 1;
        }
        return equivalence_from_iso(q, q, vmap, p);
    }
    throw shape_error("unknown adjunction descriptor '" + descriptor + "' (expected lan-res:V,... or iso:...)");
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"preradical lattices on type-A quiver representations"};
    app.require_subcommand(1);

    std::string quiver_path, limits_path, format = "table", adjunction_spec, only_filter, suite;
    std::string identity_name;
    std::vector<std::string> operands;
    int p = 2;
    bool with_opposite = false;
    bool verbose = false;

    auto add_common = [&](CLI::App* cmd, bool need_quiver) {
        auto* opt = cmd->add_option("--quiver", quiver_path, "quiver JSON file or inline JSON");
        if (need_quiver)
            opt->required();
        cmd->add_option("--field", p, "prime field modulus")->default_val(2);
        cmd->add_option("--limits", limits_path, "work-bound limits JSON file");
        cmd->add_flag("-v,--verbose", verbose, "per-suite timing and detail");
        return cmd;
    };

    auto* cmd_enumerate = add_common(app.add_subcommand("enumerate", "list all preradicals"), true);
    cmd_enumerate->add_option("--format", format, "table|json");

    auto* cmd_lattice = add_common(app.add_subcommand("lattice", "emit the Hasse diagram"), true);
    cmd_lattice->add_option("--format", format, "dot|json|table");
    cmd_lattice->add_option("--only", only_filter, "idempotent|radical sublattice");

    auto* cmd_op = add_common(app.add_subcommand("op", "compute one operation"), true);
    cmd_op->add_option("operation", suite, "product|coproduct|join|meet|delta|alpha|omega")->required();
    cmd_op->add_option("operands", operands, "preradical labels");
    cmd_op->add_option("--identity", identity_name, "indecomposable name for alpha/omega of 1_N");

    auto* cmd_galois = add_common(app.add_subcommand("galois", "check a Galois connection"), true);
    cmd_galois->add_option("--adjunction", adjunction_spec, "lan-res:V,... | iso:identity | iso:reversal")
        ->required();
    cmd_galois->add_flag("--opposite", with_opposite, "also check the opposite-adjunction squares");
    cmd_galois->add_option("--format", format, "table|json");

    auto* cmd_verify = add_common(app.add_subcommand("verify", "run a verification suite"), false);
    cmd_verify->add_option("suite", suite, "order|delta|alpha-omega|joins|galois|all")->required();
    cmd_verify->add_option("--format", format, "table|json");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kExitOk : kExitInput;
    }

    try {
        Limits limits = load_limits(limits_path);

        if (cmd_enumerate->parsed()) {
            Quiver q = load_quiver(quiver_path);
            LatticeContext ctx = make_context(q, p, limits);
            if (format == "json") {
                json out = json::array();
                for (size_t i = 0; i < ctx.prs.size(); ++i)
                    out.push_back(json{{"name", ctx.names[i]},
                                       {"label", ctx.brackets[i]},
                                       {"idempotent", is_idempotent(ctx.prs[i])},
                                       {"radical", is_radical(ctx.prs[i])},
                                       {"preradical", to_json(ctx.prs[i])}});
                std::cout << out.dump(2) << "\n";
            } else {
                std::cout << ctx.prs.size() << " preradicals over F_" << p << "\n";
                for (size_t i = 0; i < ctx.prs.size(); ++i)
                    print_preradical_line(std::cout, ctx, ctx.prs[i]);
            }
            return kExitOk;
        }

        if (cmd_lattice->parsed()) {
            Quiver q = load_quiver(quiver_path);
            LatticeContext ctx = make_context(q, p, limits);
            Hasse h = build_poset(ctx.prs, ctx.names);
            if (!only_filter.empty()) {
                if (only_filter != "idempotent" && only_filter != "radical")
                    throw shape_error("--only expects idempotent or radical");
                std::vector<bool> keep;
                for (int i = 0; i < h.size(); ++i)
                    keep.push_back(only_filter == "idempotent" ? h.idempotent[i] : h.radical[i]);
                h = sub_poset(h, keep);
            }
            if (format == "json")
                std::cout << to_json(h).dump(2) << "\n";
            else if (format == "table") {
                std::cout << h.size() << " nodes, " << h.covers.size() << " covers\n";
                for (auto [lo, hi] : h.covers)
                    std::cout << h.labels[lo] << " < " << h.labels[hi] << "\n";
            } else
                std::cout << to_dot(h);
            return kExitOk;
        }

        if (cmd_op->parsed()) {
            Quiver q = load_quiver(quiver_path);
            LatticeContext ctx = make_context(q, p, limits);
            const std::string& operation = suite;
            Preradical result;
            if (operation == "alpha" || operation == "omega") {
                if (identity_name.empty())
                    throw shape_error("alpha/omega need --identity NAME");
                int idx = ctx.dict.index_of_name(identity_name);
                Rep rep = interval_rep(q, p, ctx.dict.indecs[idx]);
                result = operation == "alpha" ? alpha(identity_morphism(rep))
                                              : omega(identity_morphism(rep));
            } else if (operation == "delta") {
                if (operands.size() != 1)
                    throw shape_error("delta takes exactly one operand");
                result = delta(resolve_label(ctx, operands[0]));
            } else if (operation == "product" || operation == "coproduct") {
                if (operands.size() != 2)
                    throw shape_error(operation + " takes exactly two operands");
                const Preradical& a = resolve_label(ctx, operands[0]);
                const Preradical& b = resolve_label(ctx, operands[1]);
                result = operation == "product" ? product(a, b) : coproduct(a, b);
            } else if (operation == "join" || operation == "meet") {
                if (operands.empty())
                    throw shape_error(operation + " takes at least one operand");
                std::vector<Preradical> parts;
                for (const auto& label : operands)
                    parts.push_back(resolve_label(ctx, label));
                result = operation == "join" ? join(parts) : meet(parts);
            } else {
                throw shape_error("unknown operation '" + operation + "'");
            }
            if (format == "json")
                std::cout << to_json(result).dump(2) << "\n";
            else
                print_preradical_line(std::cout, ctx, result);
            return kExitOk;
        }

        if (cmd_galois->parsed()) {
            Quiver q = load_quiver(quiver_path);
            AdjointPair adj = parse_adjunction(adjunction_spec, q, p);
            auto prs_a = enumerate_preradicals(adj.F.source, p, limits);
            auto prs_b = enumerate_preradicals(adj.F.target, p, limits);
            Report report = check_galois(adj, prs_a, prs_b);
            if (with_opposite) {
                AdjointPair op = opposite_adjunction(adj);
                bool square_a = true, square_b = true;
                for (const auto& tau : prs_a)
                    if (delta(phi(adj, tau)) != psi(op, delta(tau)))
                        square_a = false;
                for (const auto& sigma : prs_b)
                    if (delta(psi(adj, sigma)) != phi(op, delta(sigma)))
                        square_b = false;
                report.add("delta(phi(tau)) = psi_op(delta(tau))", square_a);
                report.add("delta(psi(sigma)) = phi_op(delta(sigma))", square_b);
            }
            print_report(std::cout, report, format);
            return report.all_pass() ? kExitOk : kExitVerification;
        }

        if (cmd_verify->parsed()) {
            std::vector<std::pair<std::string, Quiver>> targets;
            if (!quiver_path.empty()) {
                targets.emplace_back(quiver_path, load_quiver(quiver_path));
            } else {
                targets.emplace_back("A2", type_a_quiver(2));
                targets.emplace_back("A3", type_a_quiver(3));
            }
            Report report;
            auto start = std::chrono::steady_clock::now();
            for (auto& [name, q] : targets) {
                auto t0 = std::chrono::steady_clock::now();
                Report r = verify_suite(suite, q, p, limits);
                for (auto& c : r.checks)
                    c.name = name + ": " + c.name;
                report.merge(r);
                if (verbose && format != "json")
                    std::cout << "# " << name << ": " << r.checks.size() << " checks, "
                              << r.failures() << " failures, "
                              << std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
                                     .count()
                              << " s\n";
            }
            double seconds =
                std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
            print_report(std::cout, report, format);
            if (format != "json")
                std::cout << "elapsed: " << seconds << " s\n";
            return report.all_pass() ? kExitOk : kExitVerification;
        }
    } catch (const capacity_error& e) {
        std::cerr << "capacity: " << e.what() << "\n";
        return kExitCapacity;
    } catch (const json::exception& e) {
        std::cerr << "input: " << e.what() << "\n";
        return kExitInput;
    } catch (const std::invalid_argument& e) {
        std::cerr << "input: " << e.what() << "\n";
        return kExitInput;
    }
    return kExitInput;
}
