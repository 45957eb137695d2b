// padic-welch: exact verification and search for p-adic Welch bounds,
// Zauner-type configurations, and equiangular collections over Q_p^d,
// plus the classical comparator bounds over R and C.
//
// Exit codes are stable:
//   0  verdict positive / bound holds
//   1  verdict negative / bound violated
//   2  precondition not met (not tight, wrong shape, budget exceeded)
//   3  input error

#include <CLI11.hpp>

#include <padic/padic.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

namespace {

using namespace padic;

constexpr int kExitPositive = 0;
constexpr int kExitNegative = 1;
constexpr int kExitPrecondition = 2;
constexpr int kExitInput = 3;

enum class Format { Text, Machine };

struct Options {
    std::string input;
    std::size_t m = 1;
    bool strong = false;
    Format format = Format::Text;
    std::optional<std::uint64_t> target_n;
    // equiangular parameters
    std::string a = "1";
    std::string gamma;
    // classical parameters
    std::int64_t d = 1;
    std::int64_t n = 2;
    std::string field = "C";
    // search overrides
    std::optional<std::uint64_t> p_inline;
    std::optional<std::size_t> d_inline;
    std::optional<std::size_t> n_inline;
    std::optional<std::string> mode_inline;
    std::optional<unsigned> height;
    std::optional<std::vector<std::string>> entries;
    std::optional<std::uint64_t> limit;
    std::optional<std::string> budget;
    std::optional<unsigned> workers;
    std::optional<bool> pruning;
};

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open input file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

FrameConfig load_config(const Options& opt) {
    if (opt.input.empty()) throw ConfigError("missing --input FILE");
    return parse_config(read_file(opt.input));
}

void emit(Format format, const std::string& command, const Json& machine_doc, const std::string& text,
          int exit_code) {
    if (format == Format::Machine) {
        Json wrapper{{"tool", kToolName}, {"version", kToolVersion}, {"command", command}, {"exit_code", exit_code}};
        wrapper.update(machine_doc);
        std::cout << wrapper.dump(2) << "\n";
    } else {
        std::cout << text;
    }
}

std::string describe(const FrameConfig& config) {
    std::ostringstream os;
    os << "config: p = " << config.ctx.p() << ", d = " << config.d << ", n = " << config.n() << "\n";
    return os.str();
}

std::string describe(const TightnessReport& r) {
    std::ostringstream os;
    if (r.is_tight) {
        os << "tight: yes, b = " << to_string(r.b);
        if (r.b == 0) os << "  [b = 0]";
        os << "\n";
    } else {
        os << "tight: no\n";
        os << "witness: entry (" << r.witness->row << ", " << r.witness->col << "): expected "
           << to_string(r.witness->expected) << ", found " << to_string(r.witness->found) << "\n";
    }
    return os.str();
}

std::string describe(const WelchReport& r) {
    std::ostringstream os;
    os << "order: m = " << r.m << "\n";
    os << "precondition (order-" << r.m << " tightness): " << describe(r.precondition);
    if (!r.precondition.is_tight) return os.str();
    os << "path: " << (r.unit_inner ? "unit inner products" : "general") << "\n";
    os << "diagonal term: " << r.diag_term.str() << "\n";
    if (r.max_offdiag) {
        os << "max off-diagonal: " << r.max_offdiag->value.str() << " at (j, k) = (" << r.max_offdiag->j << ", "
           << r.max_offdiag->k << ")\n";
    } else {
        os << "max off-diagonal: none (n = 1)\n";
    }
    os << "lhs: " << r.lhs.str() << "\n";
    os << "rhs: " << r.rhs.str() << "\n";
    os << "bound holds: " << (r.holds ? "yes" : "NO (implementation bug)") << (r.equality ? " (equality)" : "")
       << "\n";
    return os.str();
}

int run_verify(const Options& opt) {
    FrameConfig config = load_config(opt);
    TightnessReport report = check_tight(config);
    int code = report.is_tight ? kExitPositive : kExitNegative;
    emit(opt.format, "verify", Json{{"input", config_to_json(config)}, {"result", tightness_to_json(report)}},
         describe(config) + describe(report), code);
    return code;
}

int run_bound(const Options& opt) {
    FrameConfig config = load_config(opt);
    WelchReport report = welch_general(config, opt.m);
    // The unit form applies when every <tau_j,tau_j> = 1; both produce the
    // same verdict there.
    if (report.unit_inner) report = welch_unit(config, opt.m);
    int code = !report.precondition.is_tight ? kExitPrecondition
               : report.holds               ? kExitPositive
                                            : kExitNegative;
    emit(opt.format, "bound", Json{{"input", config_to_json(config)}, {"result", welch_to_json(report)}},
         describe(config) + describe(report), code);
    return code;
}

int run_tensor(const Options& opt) {
    FrameConfig config = load_config(opt);
    TightnessReport report = check_sym_tight(config, opt.m);
    Integer dim = sym_dim(config.d, opt.m);
    std::ostringstream text;
    text << describe(config);
    text << "order: m = " << opt.m << "\n";
    text << "dim Sym^" << opt.m << "(Q_p^" << config.d << ") = " << dim.get_str() << "\n";
    text << "lifted configuration " << describe(report);
    int code = report.is_tight ? kExitPositive : kExitNegative;
    emit(opt.format, "tensor",
         Json{{"input", config_to_json(config)},
              {"m", opt.m},
              {"sym_dim", dim.get_str()},
              {"result", tightness_to_json(report)}},
         text.str(), code);
    return code;
}

int run_zauner(const Options& opt) {
    FrameConfig config = load_config(opt);
    std::optional<Integer> target;
    if (opt.target_n) target = Integer(static_cast<unsigned long>(*opt.target_n));
    ZaunerReport report = zauner_check(config, opt.strong, target);
    std::ostringstream text;
    text << describe(config);
    text << "form: " << (report.strong ? "strong" : "standard") << "\n";
    text << "off-diagonal target: " << report.target.str() << " as " << report.target_interpretation << "\n";
    text << "(i) unit inner products: " << (report.cond_unit ? "yes" : "no");
    if (report.unit_witness) text << " (fails at j = " << *report.unit_witness << ")";
    text << "\n(ii) " << describe(report.tight);
    text << "(iii) off-diagonal |<tau_j,tau_k>|^2 = target: " << (report.cond_angle ? "yes" : "no");
    if (report.angle_vacuous) text << " (vacuous: no pairs)";
    if (report.angle_witness) {
        text << " (fails at (" << report.angle_witness->first << ", " << report.angle_witness->second << "), found "
             << report.angle_found->str() << ")";
    }
    text << "\n";
    if (report.strong) {
        text << "(iv) sup-norms 1: " << (report.cond_norm ? "yes" : "no");
        if (report.norm_witness) text << " (fails at j = " << *report.norm_witness << ")";
        text << "\n";
    }
    text << "verdict: " << (report.verdict ? "accepted" : "rejected") << "\n";
    int code = report.verdict ? kExitPositive : kExitNegative;
    emit(opt.format, "zauner", Json{{"input", config_to_json(config)}, {"result", zauner_to_json(report)}},
         text.str(), code);
    return code;
}

int run_equiangular(const Options& opt) {
    FrameConfig config = load_config(opt);
    if (opt.gamma.empty()) throw ConfigError("missing --gamma (\"p^e\" or \"0\")");
    Rational a = parse_rational(opt.a);
    AbsValue gamma = parse_absvalue(opt.gamma, config.ctx.p());
    EquiangularReport report = equiangular_check(config, a, gamma);
    std::ostringstream text;
    text << describe(config);
    text << "a = " << to_string(a) << ", gamma = " << gamma.str() << "\n";
    text << "(i) <tau_j,tau_j> = a: " << (report.diag_ok ? "yes" : "no");
    if (report.diag_witness) {
        text << " (fails at j = " << *report.diag_witness << ", found " << to_string(*report.diag_found) << ")";
    }
    text << "\n(ii) off-diagonal |<tau_j,tau_k>|^2 = gamma: " << (report.offdiag_ok ? "yes" : "no");
    if (report.offdiag_witness) {
        text << " (fails at (" << report.offdiag_witness->first << ", " << report.offdiag_witness->second
             << "), found " << report.offdiag_found->str() << ")";
    }
    text << "\nverdict: " << (report.ok ? "accepted" : "rejected") << "\n";
    int code = report.ok ? kExitPositive : kExitNegative;
    emit(opt.format, "equiangular", Json{{"input", config_to_json(config)}, {"result", equiangular_to_json(report)}},
         text.str(), code);
    return code;
}

int run_classical(const Options& opt) {
    Field field = opt.field == "R" ? Field::R : Field::C;
    Json doc{{"d", opt.d}, {"n", opt.n}, {"m", opt.m}, {"field", opt.field}};
    std::ostringstream text;
    text << "classical comparator bounds over " << opt.field << " (floating point)\n";
    text << "d = " << opt.d << ", n = " << opt.n << ", m = " << opt.m << "\n";
    text << "gerzon: " << gerzon(opt.d, field) << "\n";
    if (opt.n > opt.d) {
        ClassicalWelch welch = classical_welch(opt.d, opt.n, static_cast<std::int64_t>(opt.m));
        doc["welch"] = classical_welch_to_json(welch);
        text << "welch sum bound (order " << opt.m << "): " << welch.sum_bound << "\n";
        text << "welch max bound (order " << opt.m << "): " << welch.max_bound << "\n";
    } else {
        doc["welch"] = nullptr;
        text << "welch bounds: not applicable (need n > d)\n";
    }
    ClassicalBounds bounds = classical_secondary_bounds(opt.d, opt.n, field);
    doc["secondary"] = classical_bounds_to_json(bounds);
    auto line = [&](const char* name, const BoundValue& v) {
        text << name << ": ";
        if (v.applicable) {
            text << v.value << "\n";
        } else {
            text << "not applicable\n";
        }
    };
    line("bukh-cox", bounds.bukh_cox);
    line("orthoplex", bounds.orthoplex);
    line("levenstein", bounds.levenstein);
    line("exponential", bounds.exponential);
    emit(opt.format, "classical", Json{{"result", std::move(doc)}}, text.str(), kExitPositive);
    return kExitPositive;
}

int run_search(const Options& opt) {
    SearchSpec spec;
    if (!opt.input.empty()) {
        spec = parse_search_spec(read_file(opt.input));
    } else {
        if (!opt.p_inline || !opt.d_inline || !opt.n_inline || !opt.mode_inline) {
            throw ConfigError("search needs --input FILE or all of --p, --d, --n, --mode");
        }
        spec.p = *opt.p_inline;
        spec.d = *opt.d_inline;
        spec.n = *opt.n_inline;
        spec.mode = parse_search_mode(*opt.mode_inline);
    }
    if (opt.height) spec.height = *opt.height;
    if (opt.entries) {
        spec.entries.clear();
        for (const std::string& s : *opt.entries) spec.entries.push_back(parse_rational(s));
    }
    if (opt.limit) spec.limit = *opt.limit;
    if (opt.budget) spec.budget = Integer(*opt.budget);
    if (opt.workers) spec.workers = *opt.workers;
    if (opt.pruning) spec.symmetry_pruning = *opt.pruning;
    if (opt.target_n) spec.target_n = Integer(static_cast<unsigned long>(*opt.target_n));
    if (spec.mode == SearchMode::Equiangular) {
        if (!opt.a.empty()) spec.equi_a = parse_rational(opt.a);
        if (!opt.gamma.empty()) spec.equi_gamma = parse_absvalue(opt.gamma, spec.p);
    }
    validate(spec);

    SearchResult result = run_search(spec);
    std::ostringstream text;
    text << "search: mode = " << to_string(spec.mode) << ", p = " << spec.p << ", d = " << spec.d
         << ", n = " << spec.n << "\n";
    text << "entries (" << result.entries_used.size() << "):";
    for (const Rational& q : result.entries_used) text << " " << to_string(q);
    text << "\nspace: " << result.space_size.get_str() << " configurations"
         << (spec.symmetry_pruning ? " (vector permutations quotiented)" : "") << "\n";
    text << "scanned: " << result.configs_scanned << ", hits: " << result.hits.size()
         << (result.truncated ? " (truncated at limit)" : "") << "\n";
    for (std::size_t i = 0; i < result.hits.size(); ++i) {
        text << "hit " << i << ": " << render_config(result.hits[i].config) << "\n";
    }
    int code = result.hits.empty() ? kExitNegative : kExitPositive;
    emit(opt.format, "search", Json{{"result", search_result_to_json(result)}}, text.str(), code);
    return code;
}

int dispatch(const std::string& command, const Options& opt) {
    try {
        if (command == "verify") return run_verify(opt);
        if (command == "bound") return run_bound(opt);
        if (command == "tensor") return run_tensor(opt);
        if (command == "zauner") return run_zauner(opt);
        if (command == "equiangular") return run_equiangular(opt);
        if (command == "classical") return run_classical(opt);
        if (command == "search") return run_search(opt);
        throw ConfigError("unknown command: " + command);
    } catch (const ShapeError& e) {
        emit(opt.format, command, Json{{"error", Json{{"kind", "precondition"}, {"message", e.what()}}}},
             std::string("error: ") + e.what() + "\n", kExitPrecondition);
        return kExitPrecondition;
    } catch (const BudgetError& e) {
        emit(opt.format, command, Json{{"error", Json{{"kind", "precondition"}, {"message", e.what()}}}},
             std::string("error: ") + e.what() + "\n", kExitPrecondition);
        return kExitPrecondition;
    } catch (const std::exception& e) {
        emit(opt.format, command, Json{{"error", Json{{"kind", "input"}, {"message", e.what()}}}},
             std::string("error: ") + e.what() + "\n", kExitInput);
        return kExitInput;
    }
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact p-adic Welch bound verification and search"};
    app.require_subcommand(1);
    app.set_version_flag("--version", std::string(kToolName) + " " + kToolVersion);

    Options opt;
    std::string format = "text";

    auto add_common = [&](CLI::App* cmd, bool with_input) {
        if (with_input) cmd->add_option("--input", opt.input, "input document (JSON)");
        cmd->add_option("--format", format, "output format: text | machine")
            ->check(CLI::IsMember({"text", "machine"}));
    };

    CLI::App* verify = app.add_subcommand("verify", "check tightness of a configuration");
    add_common(verify, true);

    CLI::App* bound = app.add_subcommand("bound", "check the order-m p-adic Welch bound");
    add_common(bound, true);
    bound->add_option("--m", opt.m, "tensor order (default 1)");

    CLI::App* tensor = app.add_subcommand("tensor", "check order-m lifted tightness and Sym^m dimension");
    add_common(tensor, true);
    tensor->add_option("--m", opt.m, "tensor order (default 1)");

    CLI::App* zauner = app.add_subcommand("zauner", "check the Zauner-type conditions (needs n = d^2)");
    add_common(zauner, true);
    zauner->add_flag("--strong", opt.strong, "also require sup-norm 1");
    zauner->add_option("--target-n", opt.target_n, "override the off-diagonal target |n| (default n = d^2)");

    CLI::App* equiangular = app.add_subcommand("equiangular", "check constant diagonal a and angle gamma");
    add_common(equiangular, true);
    equiangular->add_option("--a", opt.a, "required diagonal inner product (rational, default 1)");
    equiangular->add_option("--gamma", opt.gamma, "required off-diagonal |<.,.>|^2 (\"p^e\" or \"0\")");

    CLI::App* classical = app.add_subcommand("classical", "classical comparator bounds over R or C");
    add_common(classical, false);
    classical->add_option("--d", opt.d, "dimension")->required();
    classical->add_option("--n", opt.n, "number of vectors")->required();
    classical->add_option("--m", opt.m, "tensor order for the Welch bounds (default 1)");
    classical->add_option("--field", opt.field, "R or C (default C)")->check(CLI::IsMember({"R", "C"}));

    CLI::App* search = app.add_subcommand("search", "enumerate bounded-height configurations");
    add_common(search, true);
    search->add_option("--p", opt.p_inline, "prime (inline spec)");
    search->add_option("--d", opt.d_inline, "dimension (inline spec)");
    search->add_option("--n", opt.n_inline, "number of vectors (inline spec)");
    search->add_option("--mode", opt.mode_inline, "q1 | q2 | zauner | zauner-strong | equiangular");
    search->add_option("--height", opt.height, "height bound for the auto entry grid");
    search->add_option("--entries", opt.entries, "explicit entry list (rational strings)")->delimiter(',');
    search->add_option("--limit", opt.limit, "stop after this many hits");
    search->add_option("--budget", opt.budget, "refuse to enumerate more than this many configurations");
    search->add_option("--workers", opt.workers, "worker threads");
    search->add_option("--pruning", opt.pruning, "quotient out vector permutations (default true)");
    search->add_option("--target-n", opt.target_n, "zauner modes: override the off-diagonal target |n|");
    search->add_option("--a", opt.a, "equiangular mode: diagonal value");
    search->add_option("--gamma", opt.gamma, "equiangular mode: off-diagonal |<.,.>|^2");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitInput;
    }

    opt.format = format == "machine" ? Format::Machine : Format::Text;
    return dispatch(app.get_subcommands().front()->get_name(), opt);
}
