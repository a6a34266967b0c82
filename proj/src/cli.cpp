#include "ebchan/cli.hpp"

#include <charconv>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "ebchan/amend.hpp"
#include "ebchan/ebtest.hpp"
#include "ebchan/errors.hpp"
#include "ebchan/io.hpp"
#include "ebchan/markov.hpp"

namespace ebchan::cli {

namespace {

using nlohmann::json;

struct ChannelSource {
    std::string path;
    std::string preset;
};

io::ChannelFile preset_channel(const std::string& name) {
    if (name == "identity") return {QubitChannelAffine::identity(), "identity"};
    if (name == "seb-example") return {seb_example_channel(), "seb-example"};
    constexpr std::string_view kDepolarizing = "depolarizing:";
    if (name.starts_with(kDepolarizing)) {
        const std::string_view value = std::string_view(name).substr(kDepolarizing.size());
        double p = 0.0;
        const auto res = std::from_chars(value.data(), value.data() + value.size(), p);
        if (res.ec != std::errc{} || res.ptr != value.data() + value.size() || !std::isfinite(p)) {
            throw ParseError("preset '" + name + "': expected depolarizing:<number>");
        }
        return {QubitChannelAffine::diagonal({p, p, p}), name};
    }
    throw ParseError("unknown preset '" + name + "' (identity, seb-example, depolarizing:<p>)");
}

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot read '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

io::ChannelFile load_channel(const ChannelSource& src, const char* fallback_preset = nullptr) {
    if (!src.path.empty() && !src.preset.empty()) throw ParseError("use either --channel or --preset, not both");
    if (!src.path.empty()) {
        io::ChannelFile file = io::parse_channel_text(read_file(src.path));
        if (!file.name) file.name = src.path;
        return file;
    }
    if (!src.preset.empty()) return preset_channel(src.preset);
    if (fallback_preset != nullptr) return preset_channel(fallback_preset);
    throw ParseError("a channel is required (--channel FILE or --preset NAME)");
}

void add_channel_options(CLI::App& cmd, ChannelSource& src) {
    cmd.add_option("--channel", src.path, "Channel JSON file {\"n\": [3], \"M\": [[3]x3]}");
    cmd.add_option("--preset", src.preset, "Built-in channel: identity | seb-example | depolarizing:<p>");
}

void set_threads(int threads) {
#ifdef _OPENMP
    if (threads > 0) omp_set_num_threads(threads);
#else
    (void)threads;
#endif
}

// Writes `text` to `path` ("-" for `out`). Returns false if the file cannot be written.
bool write_output(const std::string& path, const std::string& text, std::ostream& out) {
    if (path == "-") {
        out << text;
        return static_cast<bool>(out);
    }
    std::ofstream file(path);
    if (!file) return false;
    file << text;
    return static_cast<bool>(file);
}

int cmd_analyze(const ChannelSource& src, std::ostream& out, std::ostream& err) {
    const io::ChannelFile file = load_channel(src);
    const QubitChannelAffine& phi = file.channel;
    const CptpReport cp = validate_cptp(phi);
    if (!cp.is_cp) {
        err << "error: channel is not completely positive (min Choi eigenvalue " << io::format_double(cp.min_choi_eig)
            << ")\n";
        return kNotPhysical;
    }
    const EBVerdict verdict = is_eb_numeric(phi);
    const CanonicalDecomposition canonical = canonical_form(phi);
    const ClosedFormVerdict closed = closed_form_verdict(canonical);

    json doc{{"channel", io::to_json(phi, file.name)},
             {"cptp", io::to_json(cp)},
             {"canonical", io::to_json(canonical)},
             {"verdict", io::to_json(verdict)},
             {"seb_class", to_string(classify_seb(phi))}};
    if (closed.theorem) {
        doc["closed_form"] = {{"theorem", to_string(*closed.theorem)},
                              {"is_eb", closed.is_eb},
                              {"agrees", closed.is_eb == verdict.is_eb}};
    } else {
        doc["closed_form"] = {{"theorem", nullptr}, {"is_eb", nullptr}, {"agrees", nullptr}};
    }
    out << io::dump_json(doc) << '\n';
    return kOk;
}

struct MarkovArgs {
    std::string family;
    std::optional<double> time_constant;
    std::optional<double> decay_time;
    std::optional<double> decoherence_time;
    double purity = 0.0;
    double omega = 0.0;
    double t_min = 0.0;
    double t_max = 0.0;
    int steps = 1001;
    std::string output;
    std::string format = "csv";
};

DynamicalFamily build_family(const MarkovArgs& a) {
    const auto need = [](const std::optional<double>& v, const char* flag) {
        if (!v) throw BadParameter(std::string(flag) + " is required for this family");
        return *v;
    };
    DynamicalFamily family;
    if (a.family == "decoherence") {
        family = Decoherence{need(a.time_constant, "--T"), a.omega};
    } else if (a.family == "depolarization") {
        family = Depolarization{need(a.time_constant, "--T")};
    } else if (a.family == "homogenization") {
        family = Homogenization{need(a.decay_time, "--T1"), need(a.decoherence_time, "--T2"), a.purity, a.omega};
    } else {
        throw BadParameter("unknown family '" + a.family + "'");
    }
    validate(family);
    return family;
}

int cmd_markov(const MarkovArgs& a, std::ostream& out, std::ostream& err) {
    const DynamicalFamily family = build_family(a);
    if (a.format != "csv" && a.format != "json") throw BadParameter("--format must be csv or json");
    const TimeScan result = scan(family, a.t_min, a.t_max, a.steps);
    const std::optional<double> onset = eb_onset(family, a.t_max);

    std::ostream& summary = a.output == "-" ? err : out;
    summary << "onset: " << (onset ? io::format_double(*onset) : std::string("none")) << '\n';

    if (a.output.empty()) return kOk;
    std::string text;
    if (a.format == "csv") {
        std::ostringstream buf;
        io::write_scan_csv(buf, result);
        text = buf.str();
    } else {
        text = io::dump_json(io::to_json(result, onset)) + '\n';
    }
    if (!write_output(a.output, text, out)) {
        err << "error: cannot write '" << a.output << "'\n";
        return kUnwritable;
    }
    return kOk;
}

struct LocalArgs {
    ChannelSource src;
    int layers = 2;
    int trials = 1000;
    std::uint64_t seed = 0;
    std::string output = "-";
};

int cmd_amend_local(const LocalArgs& a, std::ostream& out, std::ostream& err) {
    const io::ChannelFile file = load_channel(a.src);
    const CptpReport cp = validate_cptp(file.channel);
    if (!cp.is_cp) {
        err << "error: channel is not completely positive (min Choi eigenvalue " << io::format_double(cp.min_choi_eig)
            << ")\n";
        return kNotPhysical;
    }
    const AmendmentReport report = local_amendment_search(file.channel, a.layers, a.trials, a.seed);
    if (!write_output(a.output, io::dump_json(io::to_json(report)) + '\n', out)) {
        err << "error: cannot write '" << a.output << "'\n";
        return kUnwritable;
    }
    return kOk;
}

struct GlobalArgs {
    ChannelSource src;
    std::string map_path;
    std::string ordering = "auto";
};

int cmd_amend_global(const GlobalArgs& a, std::ostream& out, std::ostream& err) {
    const bool builtin = a.map_path.empty() && a.src.path.empty() && a.src.preset.empty();
    if (builtin && a.ordering == "auto") {
        const GlobalReproduction rep = reproduce_published_global_example();
        json attempts = json::array();
        for (const auto& attempt : rep.attempts) attempts.push_back(io::to_json(attempt));
        const auto& last = rep.attempts.back();
        json doc{{"base_channel", io::to_json(seb_example_channel(), std::string("seb-example"))},
                 {"global_map", io::to_json(build_paper_global_map())},
                 {"published_output", io::to_json(published_global_output())},
                 {"attempts", std::move(attempts)},
                 {"reproduced", rep.reproduced_with.has_value()},
                 {"reproduced_with", rep.reproduced_with ? json(to_string(*rep.reproduced_with)) : json(nullptr)},
                 {"pt_min_eig", last.pt_min_eig},
                 {"entangled", last.is_state ? json(last.pt_min_eig < -1e-10) : json(nullptr)}};
        out << io::dump_json(doc) << '\n';
        if (!last.is_state) {
            err << "error: reconstructed output is not a state (min eigenvalue " << io::format_double(last.min_eig)
                << ")\n";
            return kNotPhysical;
        }
        return kOk;
    }

    GellMannOrdering ordering = GellMannOrdering::Interleaved;
    if (a.ordering == "grouped") {
        ordering = GellMannOrdering::Grouped;
    } else if (a.ordering != "interleaved" && a.ordering != "auto") {
        throw BadParameter("--ordering must be auto, interleaved or grouped");
    }
    const io::ChannelFile base = load_channel(a.src, "seb-example");
    QuditAffineMap map = build_paper_global_map();
    if (!a.map_path.empty()) {
        json doc;
        try {
            doc = json::parse(read_file(a.map_path));
        } catch (const json::parse_error& e) {
            throw ParseError(std::string("malformed JSON: ") + e.what());
        }
        map = io::parse_qudit_map(doc);
    }
    const GlobalAmendmentResult result = global_amendment_example(base.channel, map, ordering);
    out << io::dump_json(io::to_json(result)) << '\n';
    return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Entanglement-breaking analysis of qubit channels", "ebchan"};
    app.require_subcommand(1);
    int threads = 0;
    app.add_option("--threads", threads, "OpenMP thread count (0 = runtime default)")->check(CLI::NonNegativeNumber);

    ChannelSource analyze_src;
    CLI::App* analyze = app.add_subcommand("analyze", "CPTP check, canonical form and EB verdict for one channel");
    add_channel_options(*analyze, analyze_src);

    MarkovArgs markov_args;
    CLI::App* markov = app.add_subcommand("markov", "Time scan of a Markovian family");
    markov->add_option("--family", markov_args.family, "decoherence | depolarization | homogenization")->required();
    markov->add_option("--T", markov_args.time_constant, "Time constant (decoherence, depolarization)");
    markov->add_option("--T1", markov_args.decay_time, "Decay time (homogenization)");
    markov->add_option("--T2", markov_args.decoherence_time, "Decoherence time (homogenization)");
    markov->add_option("--w", markov_args.purity, "Purity of the fixed point (homogenization)");
    markov->add_option("--omega", markov_args.omega, "Precession frequency");
    markov->add_option("--t-min", markov_args.t_min, "Scan start");
    markov->add_option("--t-max", markov_args.t_max, "Scan end (also the onset search horizon)")->required();
    markov->add_option("--steps", markov_args.steps, "Number of scan rows");
    markov->add_option("--output", markov_args.output, "Write the scan here ('-' for stdout)");
    markov->add_option("--format", markov_args.format, "csv | json");

    CLI::App* amend = app.add_subcommand("amend", "Amendment experiments");
    amend->require_subcommand(1);
    LocalArgs local_args;
    CLI::App* local = amend->add_subcommand("local", "Randomized search over interleaved unitaries");
    add_channel_options(*local, local_args.src);
    local->add_option("--layers", local_args.layers, "Number of base applications");
    local->add_option("--trials", local_args.trials, "Number of sampled interleavings");
    local->add_option("--seed", local_args.seed, "PRNG seed");
    local->add_option("--output", local_args.output, "Report path ('-' for stdout)");

    GlobalArgs global_args;
    CLI::App* global = amend->add_subcommand("global-example", "Two-qubit global amendment of an EB channel");
    add_channel_options(*global, global_args.src);
    global->add_option("--map", global_args.map_path, "Two-qubit map JSON {\"d\": 4, \"n\": [15], \"M\": [225]}");
    global->add_option("--ordering", global_args.ordering, "auto | interleaved | grouped");

    std::vector<const char*> argv{"ebchan"};
    for (const auto& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return kUsage;
    }
    set_threads(threads);

    try {
        if (analyze->parsed()) return cmd_analyze(analyze_src, out, err);
        if (markov->parsed()) return cmd_markov(markov_args, out, err);
        if (local->parsed()) return cmd_amend_local(local_args, out, err);
        if (global->parsed()) return cmd_amend_global(global_args, out, err);
    } catch (const NotCP& e) {
        err << "error: " << e.what() << '\n';
        return kNotPhysical;
    } catch (const NonPositiveOutput& e) {
        err << "error: " << e.what() << '\n';
        return kNotPhysical;
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return kUsage;
    }
    return kUsage;
}

}  // namespace ebchan::cli
