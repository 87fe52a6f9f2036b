// gcii: build, encode, decode and analyze t-level generalized concatenated
// (integrated interleaved) erasure codes over m x n arrays of GF(2^b)
// symbols.
//
// Exit codes: 0 success, 1 input or parse error, 2 uncorrectable,
// 3 budget exceeded.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "gcii/array_io.hpp"
#include "gcii/config.hpp"
#include "gcii/oracle.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInput = 1;
constexpr int kExitUncorrectable = 2;
constexpr int kExitBudget = 3;

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw gcii::ParseError("cannot open '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_output(const std::string& path, const std::string& text) {
    if (path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw gcii::ParseError("cannot open '" + path + "' for writing");
    out << text;
}

struct CommonOptions {
    std::string config_path;
    std::string format;  // "", "power" or "int"
};

gcii::Notation notation_for(const CommonOptions& opts, const gcii::CodeConfig& cfg) {
    if (opts.format == "power") return gcii::Notation::Power;
    if (opts.format == "int") return gcii::Notation::Integer;
    return cfg.b <= 4 ? gcii::Notation::Power : gcii::Notation::Integer;
}

gcii::CodeConfig load_config(const CommonOptions& opts) {
    return gcii::config_from_json(read_file(opts.config_path));
}

void add_common(CLI::App* cmd, CommonOptions& opts) {
    cmd->add_option("--config", opts.config_path, "code config JSON file")->required();
    cmd->add_option("--format", opts.format, "element notation for output")
        ->check(CLI::IsMember({"power", "int"}));
}

// Merges inline E tokens with an optional mask file; both present means they
// must describe the same cells.
gcii::ArrayWord apply_mask(const gcii::ArrayWord& word, const std::string& mask_path) {
    if (mask_path.empty()) return word;
    const gcii::ErasurePattern mask = gcii::parse_mask(read_file(mask_path), word.rows(), word.cols());
    if (word.erasures.count() > 0 && !(word.erasures == mask))
        throw gcii::ParseError("inline E tokens and --erasures mask disagree");
    return word.erased(mask);
}

int run_build(const CommonOptions& opts, const std::string& out_path) {
    const gcii::CodeConfig cfg = load_config(opts);
    const gcii::GcCode code = gcii::make_code(cfg);
    write_output(out_path, gcii::format_matrix(code.h(), notation_for(opts, cfg)));
    return kExitOk;
}

int run_encode(const CommonOptions& opts, const std::string& in_path, const std::string& placement_path,
               const std::string& out_path) {
    const gcii::CodeConfig cfg = load_config(opts);
    const gcii::GcCode code = gcii::make_code(cfg);
    const std::vector<gcii::gf> data = gcii::parse_symbols(read_file(in_path), *code.field());
    if (data.size() != static_cast<std::size_t>(code.k()))
        throw gcii::ParseError("expected " + std::to_string(code.k()) + " data symbols, found " +
                               std::to_string(data.size()));
    gcii::ErasurePattern placement =
        placement_path.empty() ? gcii::default_parity_placement(code)
                               : gcii::parse_mask(read_file(placement_path), code.m(), code.n());
    const gcii::Codec codec(code);
    const gcii::ArrayWord encoded = codec.encode(data, placement);
    write_output(out_path, gcii::format_array(encoded, *code.field(), notation_for(opts, cfg)));
    return kExitOk;
}

int run_decode(const CommonOptions& opts, const std::string& in_path, const std::string& erasures_path,
               const std::string& out_path, bool no_verify) {
    const gcii::CodeConfig cfg = load_config(opts);
    const gcii::GcCode code = gcii::make_code(cfg);
    gcii::ArrayWord received = gcii::parse_array(read_file(in_path), *code.field(), code.m(), code.n());
    received = apply_mask(received, erasures_path);
    const gcii::Codec codec(code);
    const std::optional<gcii::ArrayWord> decoded = codec.decode(received, !no_verify);
    if (!decoded) {
        const auto counts = received.erasures.row_counts();
        std::ostringstream why;
        why << "uncorrectable: row erasure counts (";
        for (std::size_t i = 0; i < counts.size(); ++i) why << (i ? "," : "") << counts[i];
        why << ") exceed the budgets or the result failed verification";
        std::cerr << why.str() << "\n";
        return kExitUncorrectable;
    }
    write_output(out_path, gcii::format_array(*decoded, *code.field(), notation_for(opts, cfg)));
    return kExitOk;
}

int run_check(const CommonOptions& opts, const std::string& in_path, const std::string& erasures_path) {
    const gcii::CodeConfig cfg = load_config(opts);
    const gcii::GcCode code = gcii::make_code(cfg);
    gcii::ErasurePattern pattern(code.m(), code.n());
    if (!in_path.empty()) {
        gcii::ArrayWord word = gcii::parse_array(read_file(in_path), *code.field(), code.m(), code.n());
        word = apply_mask(word, erasures_path);
        pattern = word.erasures;
    } else if (!erasures_path.empty()) {
        pattern = gcii::parse_mask(read_file(erasures_path), code.m(), code.n());
    } else {
        throw gcii::ParseError("check needs --in or --erasures");
    }
    const bool ok = gcii::correctable_by_theorem(pattern, code.profile());
    std::cout << (ok ? "correctable" : "uncorrectable") << "\n";
    return ok ? kExitOk : kExitUncorrectable;
}

int run_mindist(const CommonOptions& opts, bool brute_force, std::uint64_t budget) {
    const gcii::CodeConfig cfg = load_config(opts);
    const gcii::GcCode code = gcii::make_code(cfg);
    const int formula = gcii::min_distance_formula(code);
    std::cout << "formula: " << formula << "\n";
    if (brute_force) {
        const std::uint64_t work = gcii::pattern_count_up_to(code.m() * code.n(), formula);
        if (work > budget)
            throw gcii::BudgetExceeded("distance search needs about " + std::to_string(work) +
                                       " rank checks, budget is " + std::to_string(budget));
        const gcii::DistanceResult found = gcii::min_distance_search(code, formula);
        if (found.distance) {
            std::cout << "brute-force: " << *found.distance << "\n";
            std::cout << "agree: " << (*found.distance == formula ? "yes" : "no") << "\n";
        } else {
            std::cout << "brute-force: >" << formula << "\n";
            std::cout << "agree: no\n";
        }
    }
    return kExitOk;
}

int run_sweep(const CommonOptions& opts, std::uint64_t budget) {
    const gcii::CodeConfig cfg = load_config(opts);
    const gcii::GcCode code = gcii::make_code(cfg);
    const gcii::CapabilityTable table = gcii::exhaustive_capability(code, budget);
    std::cout << "patterns: " << table.total << "\n";
    for (const auto& [key, count] : table.classes) {
        static const char* outcome_names[] = {"recovered", "rejected", "mismatch"};
        std::cout << "theorem=" << key[0] << " oracle=" << key[1] << " decode=" << outcome_names[key[2]]
                  << ": " << count << "\n";
    }
    std::cout << "counterexamples: " << table.counterexamples << "\n";
    return table.counterexamples == 0 ? kExitOk : kExitUncorrectable;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"t-level generalized concatenated (integrated interleaved) erasure codes"};
    app.require_subcommand(1);

    CommonOptions build_opts, encode_opts, decode_opts, check_opts, mindist_opts, sweep_opts;
    std::string in_path, out_path, erasures_path, placement_path;
    bool brute_force = false, no_verify = false;
    std::uint64_t budget = 5'000'000;

    CLI::App* build = app.add_subcommand("build", "print the parity-check matrix");
    add_common(build, build_opts);
    build->add_option("--out", out_path, "output file (default stdout)");

    CLI::App* encode = app.add_subcommand("encode", "encode a data file into a codeword array");
    add_common(encode, encode_opts);
    encode->add_option("--in", in_path, "data symbols file")->required();
    encode->add_option("--placement", placement_path, "parity placement mask (default placement if omitted)");
    encode->add_option("--out", out_path, "output file (default stdout)");

    CLI::App* decode = app.add_subcommand("decode", "decode a received array with erasures");
    add_common(decode, decode_opts);
    decode->add_option("--in", in_path, "received array file (E marks erasures)")->required();
    decode->add_option("--erasures", erasures_path, "erasure mask file");
    decode->add_option("--out", out_path, "output file (default stdout)");
    decode->add_flag("--no-verify", no_verify, "skip the final zero-syndrome verification");

    CLI::App* check = app.add_subcommand("check", "classify an erasure pattern");
    add_common(check, check_opts);
    check->add_option("--in", in_path, "array file with E tokens");
    check->add_option("--erasures", erasures_path, "erasure mask file");

    CLI::App* mindist = app.add_subcommand("mindist", "minimum distance of the code");
    add_common(mindist, mindist_opts);
    mindist->add_flag("--brute-force", brute_force, "confirm the closed form by column enumeration");
    mindist->add_option("--budget", budget, "rank-check budget for --brute-force");

    CLI::App* sweep = app.add_subcommand("sweep", "exhaustive capability classification");
    add_common(sweep, sweep_opts);
    sweep->add_option("--budget", budget, "pattern budget");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitInput;
    }

    try {
        if (build->parsed()) return run_build(build_opts, out_path);
        if (encode->parsed()) return run_encode(encode_opts, in_path, placement_path, out_path);
        if (decode->parsed()) return run_decode(decode_opts, in_path, erasures_path, out_path, no_verify);
        if (check->parsed()) return run_check(check_opts, in_path, erasures_path);
        if (mindist->parsed()) return run_mindist(mindist_opts, brute_force, budget);
        if (sweep->parsed()) return run_sweep(sweep_opts, budget);
    } catch (const gcii::BudgetExceeded& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitBudget;
    } catch (const gcii::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInput;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInput;
    }
    return kExitOk;
}
