#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <iostream>
#include <limits>
#include <string>

#include "jointslab/jointslab.hpp"

using namespace jointslab;
using nlohmann::json;

namespace {

BigInt parse_bigint_flag(const std::string& text, const char* flag) {
    try {
        return BigInt(text);
    } catch (const std::exception&) {
        throw ParseError(std::string(flag) + " expects a decimal integer, got '" + text + "'");
    }
}

FieldSpec field_from_flag(const std::string& text) {
    return FieldSpec(parse_bigint_flag(text, "--field"));
}

// FNV-1a over the input bytes; enough to tie a report to its input file.
std::string digest(const std::string& bytes) {
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char b : bytes) {
        h ^= b;
        h *= 1099511628211ull;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

void emit(const std::string& out_path, const std::string& content) {
    if (out_path.empty())
        std::cout << content;
    else
        write_file_atomic(out_path, content);
}

LineCollection load_collection(const std::string& path) {
    LineCollection c = line_collection_from_json(read_file(path));
    if (c.merged_duplicates() > 0)
        std::cerr << "note: merged " << c.merged_duplicates() << " duplicate line(s) from "
                  << path << "\n";
    return c;
}

json field_json(const FieldSpec& field) {
    const BigInt& c = field.characteristic();
    if (c <= (std::numeric_limits<std::int64_t>::max)())
        return json{{"char", c.convert_to<std::int64_t>()}};
    return json{{"char", c.str()}};
}

// Exact rational |J|^(n-1) / L^n: the (n-1)-th power of the scale-invariant
// ratio |J| / L^(n/(n-1)), which itself is irrational in general.
std::string exact_ratio_power(const BigInt& J, const BigInt& L, std::size_t n) {
    if (L == 0) return "0";
    BigInt num = 1;
    for (std::size_t i = 0; i + 1 < n; ++i) num *= J;
    BigInt den = 1;
    for (std::size_t i = 0; i < n; ++i) den *= L;
    BigInt g = boost::multiprecision::gcd(num, den);
    if (g > 0) {
        num /= g;
        den /= g;
    }
    if (den == 1) return num.str();
    return num.str() + "/" + den.str();
}

int cmd_gen(const ConfigSpec& cfg, const std::string& out_path) {
    LineCollection c = make_collection(cfg);
    emit(out_path, line_collection_to_json(c));
    return 0;
}

int cmd_joints(const std::string& in_path, std::size_t cap, const std::string& out_path) {
    LineCollection c = load_collection(in_path);
    emit(out_path, joints_to_json(c, joints(c, cap)));
    return 0;
}

int cmd_verify(const std::string& in_path, const std::string& lambda_text, std::size_t cap,
               const std::string& out_path) {
    auto start = std::chrono::steady_clock::now();
    std::string raw = read_file(in_path);
    LineCollection c = line_collection_from_json(raw);
    std::size_t n = c.dim();
    BigInt L(c.size());

    BigInt joint_count;
    json report;
    report["command"] = "verify";
    report["input_digest"] = digest(raw);
    report["field"] = field_json(c.spec());
    report["n"] = n;
    report["line_count"] = c.size();
    report["merged_duplicates"] = c.merged_duplicates();

    bool pass = true;
    if (lambda_text.empty()) {
        joint_count = BigInt(joint_points(c).size());
    } else {
        // A threshold also turns on the multiplicity-bound check.
        BigInt lambda = parse_bigint_flag(lambda_text, "--lambda");
        auto records = joints(c, cap);
        joint_count = BigInt(records.size());
        BigInt qualifying = 0;
        for (const auto& r : records)
            if (r.multiplicity >= lambda) ++qualifying;
        BigInt bound2 = theorem2_bound(L, n, lambda);
        report["lambda"] = lambda.str();
        report["j_lambda_count"] = qualifying.str();
        report["multiplicity_bound"] = bound2.str();
        if (qualifying > bound2) pass = false;
    }
    BigInt bound1 = theorem1_bound(L, n);
    report["joint_count"] = joint_count.str();
    report["joint_bound"] = bound1.str();
    if (joint_count > bound1) pass = false;

    double dj = joint_count.convert_to<double>();
    double dl = L.convert_to<double>();
    double exponent = static_cast<double>(n) / (static_cast<double>(n) - 1.0);
    report["ratio"] = json{
        {"power", n - 1},
        {"exact", exact_ratio_power(joint_count, L, n)},
        {"decimal", dl > 0 ? dj / std::pow(dl, exponent) : 0.0}};
    report["pass"] = pass;
    auto elapsed = std::chrono::steady_clock::now() - start;
    report["timing_ms"] =
        std::chrono::duration_cast<std::chrono::milliseconds>(elapsed).count();
    emit(out_path, report.dump(2) + "\n");
    return pass ? 0 : 1;
}

int cmd_peel(const std::string& in_path, const std::string& out_path) {
    LineCollection c = load_collection(in_path);
    emit(out_path, peeling_trace_to_json(peel(c)));
    return 0;
}

int cmd_choose(const std::string& in_path, const std::string& lambda_text,
               bool allow_nongeneric, std::size_t cap, const std::string& out_path) {
    LineCollection c = load_collection(in_path);
    ChooseOptions options;
    options.require_generic = !allow_nongeneric;
    options.cap = cap;
    ChoiceAssignment a = choose(c, parse_bigint_flag(lambda_text, "--lambda"), options);
    emit(out_path, choice_assignment_to_json(a));
    return a.violations.empty() ? 0 : 1;
}

int cmd_sample(const std::string& in_path, const std::string& lambda_text,
               std::uint64_t trials, std::uint64_t seed, std::size_t cap,
               const std::string& out_path, const std::string& csv_path) {
    LineCollection c = load_collection(in_path);
    SamplingReport r =
        sample_survival(c, parse_bigint_flag(lambda_text, "--lambda"), trials, seed, cap);
    if (!csv_path.empty()) write_file_atomic(csv_path, sampling_report_to_csv(r));
    emit(out_path, sampling_report_to_json(r));
    return 0;
}

int cmd_vanish(const std::string& in_path, const std::string& out_path) {
    auto [field, points] = point_set_from_json(read_file(in_path));
    auto [degree, poly] = minimal_vanishing_polynomial(points);
    json doc = json::parse(polynomial_to_json(poly));
    doc["degree"] = degree;
    doc["field"] = field_json(field);
    emit(out_path, doc.dump(2) + "\n");
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact joints-problem toolkit"};
    app.require_subcommand(1);

    std::string family, in_path, out_path, csv_path, field_text = "0", lambda_text;
    std::size_t n = 3, m = 0, line_count = 0, cap = 24;
    std::uint64_t seed = 0, trials = 0;
    bool allow_nongeneric = false;

    CLI::App* gen = app.add_subcommand("gen", "generate a line collection");
    gen->add_option("family", family, "grid | star | plane_with_verticals | pencil | random")
        ->required();
    gen->add_option("--n", n, "ambient dimension");
    gen->add_option("--m", m, "grid edge length / pencil size");
    gen->add_option("--lines", line_count, "line count for star/random");
    gen->add_option("--field", field_text, "field characteristic (0 = rationals)");
    gen->add_option("--seed", seed, "sampling seed");
    gen->add_option("--out", out_path, "output path (default stdout)");

    CLI::App* joints_cmd = app.add_subcommand("joints", "report all joints of a collection");
    joints_cmd->add_option("input", in_path, "line-collection JSON")->required();
    joints_cmd->add_option("--cap", cap, "max lines through one point");
    joints_cmd->add_option("--out", out_path, "output path (default stdout)");

    CLI::App* verify = app.add_subcommand("verify", "check the joint-count bounds");
    verify->add_option("input", in_path, "line-collection JSON")->required();
    verify->add_option("--lambda", lambda_text, "also check the multiplicity bound");
    verify->add_option("--cap", cap, "max lines through one point");
    verify->add_option("--out", out_path, "report path (default stdout)");

    CLI::App* peel_cmd = app.add_subcommand("peel", "greedy light-line partition of the joints");
    peel_cmd->add_option("input", in_path, "line-collection JSON")->required();
    peel_cmd->add_option("--out", out_path, "trace path (default stdout)");

    CLI::App* choose_cmd = app.add_subcommand("choose", "greedy line choice for joints above a threshold");
    choose_cmd->add_option("input", in_path, "line-collection JSON")->required();
    choose_cmd->add_option("--lambda", lambda_text, "multiplicity threshold")->required();
    choose_cmd->add_flag("--allow-nongeneric", allow_nongeneric,
                         "record bound failures instead of requiring genericity");
    choose_cmd->add_option("--cap", cap, "max lines through one point");
    choose_cmd->add_option("--out", out_path, "assignment path (default stdout)");

    CLI::App* sample = app.add_subcommand("sample", "random line subsampling survival experiment");
    sample->add_option("input", in_path, "line-collection JSON")->required();
    sample->add_option("--lambda", lambda_text, "multiplicity threshold")->required();
    sample->add_option("--trials", trials, "number of trials")->required();
    sample->add_option("--seed", seed, "master seed");
    sample->add_option("--cap", cap, "max lines through one point");
    sample->add_option("--out", out_path, "JSON report path (default stdout)");
    sample->add_option("--csv", csv_path, "also write a per-trial CSV here");

    CLI::App* vanish = app.add_subcommand("vanish", "minimal vanishing polynomial of a point set");
    vanish->add_option("input", in_path, "point-set JSON")->required();
    vanish->add_option("--out", out_path, "polynomial path (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (gen->parsed()) {
            ConfigSpec cfg;
            cfg.family = family;
            cfg.n = n;
            cfg.field = field_from_flag(field_text);
            cfg.M = m;
            cfg.L = line_count;
            cfg.seed = seed;
            return cmd_gen(cfg, out_path);
        }
        if (joints_cmd->parsed()) return cmd_joints(in_path, cap, out_path);
        if (verify->parsed()) return cmd_verify(in_path, lambda_text, cap, out_path);
        if (peel_cmd->parsed()) return cmd_peel(in_path, out_path);
        if (choose_cmd->parsed())
            return cmd_choose(in_path, lambda_text, allow_nongeneric, cap, out_path);
        if (sample->parsed())
            return cmd_sample(in_path, lambda_text, trials, seed, cap, out_path, csv_path);
        if (vanish->parsed()) return cmd_vanish(in_path, out_path);
    } catch (const GenericityError& e) {
        std::cerr << "error: " << e.what() << "\n";
        emit(out_path, genericity_witness_to_json(e.witness));
        return 3;
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const RangeError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const FieldError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const GeometryError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const GenerationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const UnsupportedError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const CapExceededError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
