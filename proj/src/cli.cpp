#include "hcbp/cli.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <iomanip>
#include <sstream>
#include <stdexcept>

#include "hcbp/abr.hpp"
#include "hcbp/core_sequences.hpp"
#include "hcbp/genfunc.hpp"
#include "hcbp/partitions.hpp"
#include "hcbp/sequence_io.hpp"
#include "hcbp/verify.hpp"

namespace hcbp {

namespace {

struct UsageError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

OutputFormat require_format(const std::string& text)
{
    if (const auto format = parse_output_format(text)) {
        return *format;
    }
    throw UsageError("unknown format '" + text + "' (expected bfile, csv or json)");
}

Index require_decimal(const std::string& text, const char* what)
{
    try {
        return parse_decimal(text, what);
    } catch (const std::invalid_argument& error) {
        throw UsageError(error.what());
    }
}

int cmd_seq(const std::string& name_text, const std::string& from_text, const std::string& to_text,
            const std::string& format_text, std::ostream& out)
{
    const auto name = parse_sequence_name(name_text);
    if (!name) {
        throw UsageError("unknown sequence '" + name_text + "' (expected f, h, c, s or deficit)");
    }
    const OutputFormat format = require_format(format_text);
    const Index from = require_decimal(from_text, "from");
    const Index to = require_decimal(to_text, "to");
    if (from > to) {
        throw UsageError("from (" + from_text + ") exceeds to (" + to_text + ")");
    }
    if (from < first_index(*name)) {
        throw UsageError("sequence '" + name_text + "' starts at index " +
                         std::to_string(first_index(*name)));
    }
    write_sequence(out, *name, from, to, format);
    return kExitOk;
}

int cmd_inspect(const std::string& n_text, bool json, std::ostream& out)
{
    const Index n = require_decimal(n_text, "n");
    if (n == 0) {
        throw UsageError("n must be >= 1");
    }
    const std::string f = to_string(f_digit(n));
    const Index h = h_reflect(n);
    const Index c = c_reflect(n);
    const AbrRep abr = abr_greedy(n);
    const auto pairs = n >= 2 ? witnessed_hcbp(n) : std::vector<WitnessedPair>{};

    if (json) {
        out << "{\"n\":" << n << ",\"f\":" << f << ",\"h\":" << h << ",\"c\":" << c
            << ",\"abr\":{\"exponents\":[";
        for (std::size_t t = 0; t < abr.length(); ++t) {
            out << (t ? "," : "") << abr.exponents[t];
        }
        out << "],\"text\":\"" << abr_format(abr) << "\"},\"hcbp\":[";
        for (std::size_t t = 0; t < pairs.size(); ++t) {
            const auto& w = pairs[t];
            out << (t ? "," : "") << "{\"n0\":" << w.pair.n0 << ",\"n1\":" << w.pair.n1
                << ",\"d\":" << w.imbalance << ",\"indices\":[";
            for (std::size_t u = 0; u < w.indices.size(); ++u) {
                out << (u ? "," : "") << w.indices[u];
            }
            out << "]}";
        }
        out << "]}\n";
        return kExitOk;
    }

    out << "n    " << n << '\n'
        << "f    " << f << '\n'
        << "h    " << h << '\n'
        << "c    " << c << '\n'
        << "abr  " << abr_format(abr) << '\n';
    for (const auto& w : pairs) {
        out << "hcbp (" << w.pair.n0 << ',' << w.pair.n1 << ") d=" << w.imbalance << " i=";
        for (std::size_t u = 0; u < w.indices.size(); ++u) {
            out << (u ? "," : "") << w.indices[u];
        }
        out << '\n';
    }
    return kExitOk;
}

int cmd_verify(const std::string& limit_text, const std::vector<std::string>& suite_texts,
               const std::string& config_path, const std::vector<std::string>& overrides,
               std::ostream& out, std::ostream& err)
{
    const Index limit = require_decimal(limit_text, "limit");
    if (limit < 8) {
        throw UsageError("limit must be >= 8");
    }
    std::vector<Suite> suites;
    for (const auto& text : suite_texts) {
        const auto suite = parse_suite(text);
        if (!suite) {
            throw UsageError("unknown suite '" + text + "'");
        }
        suites.push_back(*suite);
    }
    if (suites.empty()) {
        suites = all_suites();
    }

    VerifyBounds bounds;
    try {
        if (const char* env = std::getenv(VerifyBounds::kConfigEnv); env != nullptr && *env != '\0') {
            bounds.load_file(env);
        }
        if (!config_path.empty()) {
            bounds.load_file(config_path);
        }
        for (const auto& entry : overrides) {
            const auto eq = entry.find('=');
            if (eq == std::string::npos) {
                throw std::invalid_argument("--bound expects key=value, got '" + entry + "'");
            }
            const std::string key = entry.substr(0, eq);
            bounds.set(key, parse_decimal(entry.substr(eq + 1), key));
        }
    } catch (const std::invalid_argument& error) {
        throw UsageError(error.what());
    }

    const VerifyReport report = run_verify(limit, suites, bounds);
    print_report(out, report);
    err << "verify: elapsed " << std::fixed << std::setprecision(3) << report.elapsed_seconds
        << " s\n";
    return report.passed() ? kExitOk : kExitVerificationFailed;
}

int cmd_series(const std::string& order_text, const std::string& which,
               const std::string& format_text, std::ostream& out)
{
    const Index order = require_decimal(order_text, "order");
    if (order < 1) {
        throw UsageError("order must be >= 1");
    }
    if (order > (Index{1} << 28)) {
        throw UsageError("order must be <= 2^28");
    }
    if (which != "c" && which != "h") {
        throw UsageError("series must be 'c' or 'h'");
    }
    const OutputFormat format = require_format(format_text);
    const SeriesCoeffs series = which == "c" ? expand_c(order) : expand_h(order);
    RecordWriter writer(out, format);
    for (Index n = 0; n < order; ++n) {
        writer.write(SequenceRecord{n, std::to_string(series[n])});
    }
    writer.finish();
    return kExitOk;
}

int cmd_strata(const std::string& k_text, unsigned max_k, std::ostream& out)
{
    const Index k = require_decimal(k_text, "k");
    if (k < 2) {
        throw UsageError("k must be >= 2");
    }
    if (k > max_k) {
        throw UsageError("k = " + k_text + " exceeds the brute-force cutoff " +
                         std::to_string(max_k) + " (raise with --max-k)");
    }
    const auto rows = strata_table(static_cast<unsigned>(k), StrataOptions{max_k});
    bool all_agree = true;
    out << "l,brute,formula\n";
    for (const auto& row : rows) {
        out << row.level << ',' << row.brute_count << ',' << row.formula_count;
        if (!row.agrees()) {
            out << ",MISMATCH";
            all_agree = false;
        }
        out << '\n';
    }
    return all_agree ? kExitOk : kExitVerificationFailed;
}

int cmd_plot_deficit(const std::string& from_text, const std::string& to_text, std::ostream& out)
{
    const Index from = require_decimal(from_text, "from");
    const Index to = require_decimal(to_text, "to");
    if (from < 1 || from > to) {
        throw UsageError("need 1 <= from <= to");
    }
    out << "n,deficit\n";
    for (Index n = from;; ++n) {
        out << n << ',' << sequence_value(SequenceName::deficit, n) << '\n';
        if (n == to) {
            break;
        }
    }
    return kExitOk;
}

} // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Maximin recurrence, hypercubic bipartitions and their counts", "hcbp"};
    app.require_subcommand(1);

    std::string seq_name, seq_from, seq_to, seq_format = "bfile";
    auto* seq = app.add_subcommand("seq", "Emit f, h, c, s or deficit over [from, to]");
    seq->add_option("name", seq_name, "f | h | c | s | deficit")->required();
    seq->add_option("from", seq_from)->required();
    seq->add_option("to", seq_to)->required();
    seq->add_option("--format", seq_format, "bfile | csv | json");

    std::string inspect_n;
    bool inspect_json = false;
    auto* inspect = app.add_subcommand("inspect", "Report f, h, c, the ABR and every HCBP of n");
    inspect->add_option("n", inspect_n)->required();
    inspect->add_flag("--json", inspect_json);

    std::string verify_limit, verify_config;
    std::vector<std::string> verify_suites, verify_bounds;
    auto* verify = app.add_subcommand("verify", "Run cross-verification suites up to limit");
    verify->add_option("limit", verify_limit)->required();
    verify->add_option("--suite", verify_suites,
                       "agreement | maximin | geometry | series | strata | abr | claims");
    verify->add_option("--config", verify_config, "key = value bounds file");
    verify->add_option("--bound", verify_bounds, "override one bound, e.g. maximin=512");

    std::string series_order, series_which, series_format = "bfile";
    auto* series = app.add_subcommand("series", "Coefficients of c(x) or h(x) below x^order");
    series->add_option("order", series_order)->required();
    series->add_option("which", series_which, "c | h")->required();
    series->add_option("--format", series_format, "bfile | csv | json");

    std::string strata_k;
    unsigned strata_max_k = StrataOptions{}.max_brute_k;
    auto* strata_cmd = app.add_subcommand("strata", "Count n with ceil(lg n) = k by h(n)");
    strata_cmd->add_option("k", strata_k)->required();
    strata_cmd->add_option("--max-k", strata_max_k, "brute-force cutoff");

    std::string plot_from, plot_to;
    auto* plot = app.add_subcommand("plot-deficit", "CSV of f(n) - (n/2) lg n");
    plot->add_option("from", plot_from)->required();
    plot->add_option("to", plot_to)->required();

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        app.exit(e, err, err);
        return kExitUsage;
    }

    try {
        if (*seq) {
            return cmd_seq(seq_name, seq_from, seq_to, seq_format, out);
        }
        if (*inspect) {
            return cmd_inspect(inspect_n, inspect_json, out);
        }
        if (*verify) {
            return cmd_verify(verify_limit, verify_suites, verify_config, verify_bounds, out, err);
        }
        if (*series) {
            return cmd_series(series_order, series_which, series_format, out);
        }
        if (*strata_cmd) {
            return cmd_strata(strata_k, strata_max_k, out);
        }
        if (*plot) {
            return cmd_plot_deficit(plot_from, plot_to, out);
        }
    } catch (const UsageError& error) {
        err << "hcbp: " << error.what() << '\n';
        return kExitUsage;
    }
    return kExitUsage;
}

} // namespace hcbp
