#include "vrmat/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <unistd.h>

#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <stdexcept>

#include "vrmat/admissible.hpp"
#include "vrmat/analysis.hpp"
#include "vrmat/kernel.hpp"
#include "vrmat/lab.hpp"
#include "vrmat/ladder.hpp"
#include "vrmat/ltmatrix.hpp"
#include "vrmat/poly.hpp"
#include "vrmat/selftest.hpp"
#include "vrmat/seq.hpp"
#include "vrmat/vrm.hpp"

namespace vrmat::cli {

namespace {

struct Opts {
    std::string seq;
    std::string col0;
    std::size_t order = 0;
    std::string format = "pretty";
    std::string in;
    std::string out_path;
    unsigned long m = 2;
    long p = 2;
    std::size_t max_n = 20;
    std::string mode = "strict";
    bool col0_is_lambda = false;
    std::string alpha = "1";
    bool step = false;
    long block = -1;
};

std::vector<Integer> parse_int_list(const std::string& text) {
    std::vector<Integer> values;
    std::string token;
    std::istringstream ss(text);
    while (std::getline(ss, token, ',')) {
        values.emplace_back(token);  // throws std::invalid_argument on junk
    }
    if (values.empty()) {
        throw std::invalid_argument("empty integer list");
    }
    return values;
}

LTMatrix read_matrix(const std::string& path) {
    std::string text;
    if (path == "-") {
        std::ostringstream ss;
        ss << std::cin.rdbuf();
        text = ss.str();
    } else {
        std::ifstream f(path);
        if (!f) {
            throw std::domain_error("cannot open file: " + path);
        }
        std::ostringstream ss;
        ss << f.rdbuf();
        text = ss.str();
    }
    return LTMatrix::from_json(text);
}

void write_out(const std::string& text, const Opts& o, std::ostream& out) {
    if (!o.out_path.empty()) {
        std::ofstream f(o.out_path);
        if (!f) {
            throw std::domain_error("cannot open output file: " + o.out_path);
        }
        f << text;
        return;
    }
    out << text;
}

bool want_color(const Opts& o, const std::ostream& out) {
    if (!o.out_path.empty() || std::getenv("NO_COLOR") != nullptr) {
        return false;
    }
    return &out == &std::cout && isatty(fileno(stdout)) != 0;
}

std::string pretty_matrix(const LTMatrix& a) {
    const std::size_t d = a.order();
    std::vector<std::vector<std::string>> cells(d, std::vector<std::string>(d));
    std::vector<std::size_t> width(d, 0);
    for (std::size_t i = 0; i < d; ++i) {
        for (std::size_t j = 0; j < d; ++j) {
            cells[i][j] = a.entry(i, j).get_str();
            width[j] = std::max(width[j], cells[i][j].size());
        }
    }
    std::ostringstream os;
    for (std::size_t i = 0; i < d; ++i) {
        for (std::size_t j = 0; j < d; ++j) {
            os << std::setw(static_cast<int>(width[j])) << cells[i][j];
            os << (j + 1 < d ? " " : "");
        }
        os << "\n";
    }
    return os.str();
}

void emit_matrix(const LTMatrix& a, const Opts& o, std::ostream& out) {
    if (o.format == "json") {
        write_out(a.to_json() + "\n", o, out);
    } else if (o.format == "csv") {
        write_out(a.to_csv(), o, out);
    } else {
        write_out(pretty_matrix(a), o, out);
    }
}

void emit_matrices(const std::vector<LTMatrix>& ms, const Opts& o, std::ostream& out) {
    if (o.format == "csv") {
        throw std::invalid_argument("csv output is only available for a single matrix");
    }
    if (o.format == "json") {
        nlohmann::json arr = nlohmann::json::array();
        for (const LTMatrix& m : ms) {
            arr.push_back(nlohmann::json::parse(m.to_json()));
        }
        write_out(arr.dump() + "\n", o, out);
        return;
    }
    std::ostringstream os;
    for (std::size_t i = 0; i < ms.size(); ++i) {
        os << "factor " << i << ":\n" << pretty_matrix(ms[i]);
        if (i + 1 < ms.size()) {
            os << "\n";
        }
    }
    write_out(os.str(), o, out);
}

// Reports render as pretty text or JSON; csv has no sensible shape for them.
void emit_report(const std::string& pretty, const std::string& json_text, const Opts& o, std::ostream& out) {
    if (o.format == "csv") {
        throw std::invalid_argument("csv output is only available for matrices and sequences");
    }
    write_out(o.format == "json" ? json_text + "\n" : pretty, o, out);
}

std::string join_rationals(const std::vector<Rational>& values) {
    std::string s;
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (i > 0) {
            s += ", ";
        }
        s += values[i].get_str();
    }
    return s;
}

std::string join_integers(const std::vector<Integer>& values, const std::string& sep) {
    std::string s;
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (i > 0) {
            s += sep;
        }
        s += values[i].get_str();
    }
    return s;
}

std::string cell_line(const CellFailure& f) {
    return "(" + std::to_string(f.row) + "," + std::to_string(f.col) + "): expected " +
           f.expected.get_str() + ", actual " + f.actual.get_str();
}

std::string pretty_detection(const DetectionReport& r) {
    std::ostringstream os;
    os << "verdict: " << to_string(r.verdict) << "\n";
    os << "mode: " << to_string(r.mode) << "\n";
    os << "lambda: " << join_rationals(r.lambda) << "\n";
    os << "lambda integral: " << (r.lambda_integral ? "yes" : "no") << "\n";
    if (r.first_failure) {
        os << "first failure at " << cell_line(*r.first_failure) << "\n";
    }
    return os.str();
}

std::string pretty_fit(const FitReport& r) {
    std::ostringstream os;
    os << "verdict: " << to_string(r.verdict) << "\n";
    os << "alpha: " << r.alpha.get_str() << "\n";
    os << "beta: " << r.beta.get_str() << "\n";
    os << "coefficients integral: " << (r.coefficients_integral ? "yes" : "no") << "\n";
    if (r.first_failure) {
        os << "first failure at " << cell_line(*r.first_failure) << "\n";
    }
    return os.str();
}

std::string pretty_admissible(const AdmissibleReport& r) {
    if (r.pass) {
        return "admissible: yes\n";
    }
    std::ostringstream os;
    os << "admissible: no\n";
    if (r.violation == AdmissibleReport::Violation::diagonal) {
        os << "violation: diagonal entry (" << r.m << "," << r.m << ") is " << r.actual.get_str()
           << ", expected 1\n";
    } else {
        os << "violation: row inner product at (m,n)=(" << r.m << "," << r.n << "): expected "
           << r.expected.get_str() << ", actual " << r.actual.get_str() << "\n";
    }
    return os.str();
}

std::string pretty_compare(const MntCompareReport& r) {
    std::ostringstream os;
    os << "n: " << r.n << "\n";
    os << "C(i+j,2j): " << (r.two_k_matches ? "matches" : "first mismatch at " + cell_line(*r.two_k_mismatch))
       << "\n";
    os << "C(i+j,2j+1): "
       << (r.two_k_plus_1_matches ? "matches" : "first mismatch at " + cell_line(*r.two_k_plus_1_mismatch))
       << "\n";
    return os.str();
}

std::string pretty_sweep(const std::string& label, const IdentitySweepReport& r) {
    std::ostringstream os;
    os << label << ": ";
    if (r.pass) {
        os << "pass for 1 <= k <= n <= " << r.max_n << "\n";
    } else {
        os << "fails at " << cell_line(*r.first_failure) << "\n";
    }
    return os.str();
}

std::string pretty_conjecture(const ConjectureReport& r) {
    std::ostringstream os;
    os << "conjecture: " << r.id << "\n";
    os << "parameters: " << r.parameters << "\n";
    os << "outcome: " << to_string(r.outcome) << "\n";
    for (const ConjectureInstance& inst : r.instances) {
        os << "instance: " << inst.name << "\n";
        os << "  verdict: " << to_string(inst.detection.verdict) << "\n";
        os << "  lambda: " << join_rationals(inst.detection.lambda) << "\n";
        if (inst.detection.first_failure) {
            os << "  first failure at " << cell_line(*inst.detection.first_failure) << "\n";
        }
        os << "  notes: " << inst.notes << "\n";
    }
    return os.str();
}

std::size_t n_of(const Opts& o) {
    return o.order - 1;  // --order is validated positive before this
}

VrmSpec spec_of(const Opts& o) {
    const Seq s = parse_seqspec(o.seq);
    if (!o.col0.empty()) {
        return VrmSpec::general(s, parse_int_list(o.col0));
    }
    return VrmSpec::strict(s);
}

int cmd_build(const Opts& o, std::ostream& out) {
    emit_matrix(build_vrm(spec_of(o), n_of(o)), o, out);
    return 0;
}

int cmd_toeplitz(const Opts& o, std::ostream& out) {
    const Seq s = parse_seqspec(o.seq);
    const LTMatrix t = o.block >= 0 ? toeplitz_block(s, n_of(o), static_cast<std::size_t>(o.block))
                                    : toeplitz(s, n_of(o));
    emit_matrix(t, o, out);
    return 0;
}

int cmd_factor(const Opts& o, std::ostream& out) {
    const Seq s = parse_seqspec(o.seq);
    std::vector<LTMatrix> factors;
    if (o.step) {
        auto [t, rest] = decompose_step(s, n_of(o));
        factors.push_back(std::move(t));
        factors.push_back(std::move(rest));
    } else {
        factors = decompose_chain(s, n_of(o));
    }
    emit_matrices(factors, o, out);
    return 0;
}

int cmd_inverse(const Opts& o, std::ostream& out) {
    if (!o.in.empty()) {
        emit_matrix(read_matrix(o.in).inverse(), o, out);
        return 0;
    }
    if (o.seq.empty() || o.order == 0) {
        throw std::invalid_argument("inverse needs --in, or both --seq and --order");
    }
    emit_matrix(vrm_inverse(parse_seqspec(o.seq), n_of(o)), o, out);
    return 0;
}

int cmd_power(const Opts& o, std::ostream& out) {
    if (!o.in.empty()) {
        emit_matrix(read_matrix(o.in).pow(o.m), o, out);
        return 0;
    }
    if (o.seq.empty() || o.order == 0) {
        throw std::invalid_argument("power needs --in, or both --seq and --order");
    }
    emit_matrix(build_vrm(spec_of(o), n_of(o)).pow(o.m), o, out);
    return 0;
}

int cmd_detect(const Opts& o, std::ostream& out) {
    const LTMatrix a = read_matrix(o.in);
    DetectionReport report = [&] {
        if (o.mode == "verify") {
            if (o.seq.empty()) {
                throw std::invalid_argument("--mode verify needs --seq with the weights to verify");
            }
            return verify_lambda(a, parse_seqspec(o.seq), o.col0_is_lambda);
        }
        return infer_lambda(a, o.mode == "general" ? DetectMode::general : DetectMode::strict);
    }();
    emit_report(pretty_detection(report), report.to_json(), o, out);
    return report.verdict == Verdict::fail ? 1 : 0;
}

int cmd_fit(const Opts& o, std::ostream& out) {
    const FitReport report = fit_pascal_recurrence(read_matrix(o.in));
    emit_report(pretty_fit(report), report.to_json(), o, out);
    return report.verdict == Verdict::fail ? 1 : 0;
}

int cmd_admissible_build(const Opts& o, std::ostream& out) {
    emit_matrix(build_admissible(parse_seqspec(o.seq), n_of(o)), o, out);
    return 0;
}

int cmd_admissible_check(const Opts& o, std::ostream& out) {
    const AdmissibleReport report = check_admissible(read_matrix(o.in));
    emit_report(pretty_admissible(report), report.to_json(), o, out);
    return report.pass ? 0 : 1;
}

int cmd_admissible_extract(const Opts& o, std::ostream& out) {
    const std::vector<Integer> s = sequence_from_admissible(read_matrix(o.in));
    if (o.format == "json") {
        nlohmann::json arr = nlohmann::json::array();
        for (const Integer& v : s) {
            arr.push_back(v.get_str());
        }
        write_out(arr.dump() + "\n", o, out);
    } else if (o.format == "csv") {
        write_out(join_integers(s, ",") + "\n", o, out);
    } else {
        write_out(join_integers(s, ", ") + "\n", o, out);
    }
    return 0;
}

int cmd_ladder_polys(const Opts& o, std::ostream& out) {
    const std::vector<Poly> polys = transfer_polys(n_of(o));
    if (o.format == "json") {
        nlohmann::json arr = nlohmann::json::array();
        for (const Poly& p : polys) {
            arr.push_back(nlohmann::json::parse(p.to_json()));
        }
        write_out(arr.dump() + "\n", o, out);
        return 0;
    }
    if (o.format == "csv") {
        throw std::invalid_argument("csv output is only available for matrices and sequences");
    }
    std::ostringstream os;
    for (std::size_t k = 0; k < polys.size(); ++k) {
        os << "T_" << k << " = " << polys[k].pretty() << "\n";
    }
    write_out(os.str(), o, out);
    return 0;
}

int cmd_ladder_compare(const Opts& o, std::ostream& out) {
    const MntCompareReport report = compare_mnt(n_of(o));
    emit_report(pretty_compare(report), report.to_json(), o, out);
    return 0;
}

int cmd_ladder_identities(const Opts& o, std::ostream& out) {
    const IdentitySweepReport first = mnt_vertical_identity_check(o.max_n);
    const IdentitySweepReport second = mnt2_vertical_identity_check(o.max_n);
    nlohmann::json j;
    j["mnt"] = nlohmann::json::parse(first.to_json());
    j["mnt2"] = nlohmann::json::parse(second.to_json());
    const std::string pretty = pretty_sweep("C(n+k,2k+1) column identity", first) +
                               pretty_sweep("C(n+2k,3k+1) column identity", second);
    emit_report(pretty, j.dump(), o, out);
    return first.pass && second.pass ? 0 : 1;
}

int cmd_conjecture(int which, const Opts& o, std::ostream& out) {
    ConjectureReport report = [&] {
        if (which == 1) {
            if (o.seq.empty()) {
                throw std::invalid_argument("conjecture 1 needs --seq with the multiplier sequence");
            }
            return conjecture1_explore(Integer(o.alpha), parse_seqspec(o.seq), n_of(o));
        }
        return conjecture2_explore(n_of(o));
    }();
    emit_report(pretty_conjecture(report), report.to_json(), o, out);
    return report.outcome == ConjectureOutcome::refuted ? 1 : 0;
}

int cmd_minpoly(const Opts& o, std::ostream& out) {
    const Poly g = minpoly_mod_p(read_matrix(o.in), o.p);
    if (o.format == "json") {
        write_out(g.to_json() + "\n", o, out);
        return 0;
    }
    if (o.format == "csv") {
        throw std::invalid_argument("csv output is only available for matrices and sequences");
    }
    std::ostringstream os;
    os << "minimal polynomial mod " << o.p << ": " << g.pretty() << "\n";
    os << "coefficients: ";
    for (std::size_t k = 0; k < g.coeffs().size(); ++k) {
        os << (k > 0 ? ", " : "") << g.coeff(k).get_str();
    }
    os << "\n";
    write_out(os.str(), o, out);
    return 0;
}

int cmd_selftest(const Opts& o, std::ostream& out) {
    const std::vector<selftest::CheckResult> results = selftest::run_all();
    bool all = true;
    std::size_t passed = 0;
    for (const selftest::CheckResult& r : results) {
        all = all && r.pass;
        passed += r.pass ? 1 : 0;
    }
    if (o.format == "json") {
        nlohmann::json arr = nlohmann::json::array();
        for (const selftest::CheckResult& r : results) {
            nlohmann::json j;
            j["name"] = r.name;
            j["pass"] = r.pass;
            j["detail"] = r.detail;
            arr.push_back(std::move(j));
        }
        write_out(arr.dump() + "\n", o, out);
        return all ? 0 : 1;
    }
    if (o.format == "csv") {
        throw std::invalid_argument("csv output is only available for matrices and sequences");
    }
    const bool color = want_color(o, out);
    std::size_t width = 0;
    for (const selftest::CheckResult& r : results) {
        width = std::max(width, r.name.size());
    }
    std::ostringstream os;
    for (std::size_t i = 0; i < results.size(); ++i) {
        const selftest::CheckResult& r = results[i];
        const std::string status = r.pass ? (color ? "\033[32mPASS\033[0m" : "PASS")
                                          : (color ? "\033[31mFAIL\033[0m" : "FAIL");
        os << "[" << std::setw(2) << i + 1 << "] " << r.name
           << std::string(width - r.name.size() + 2, ' ') << status << "  " << r.detail << "\n";
    }
    os << passed << "/" << results.size() << " checks passed\n";
    write_out(os.str(), o, out);
    return all ? 0 : 1;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    Opts o;
    CLI::App app{
        "vrmat: exact-arithmetic workbench for vertically recurrent matrices.\n"
        "--order N always means the matrix size: an order-N lower-triangular\n"
        "matrix covers rows 0..N-1.",
        "vrmat"};
    app.require_subcommand(1);

    const std::string fmt_help = "output format (default pretty)";
    const auto fmt_check = CLI::IsMember({"pretty", "json", "csv"});

    CLI::App* build = app.add_subcommand("build", "build a vertically recurrent matrix from a weight spec");
    build->add_option("--seq", o.seq, "weight sequence spec, e.g. ones, geom:2, list:1,1,2")->required();
    build->add_option("--order", o.order, "matrix size")->required()->check(CLI::PositiveNumber);
    build->add_option("--col0", o.col0, "explicit first column (comma-separated integers)");
    build->add_option("--format", o.format, fmt_help)->check(fmt_check);
    build->add_option("--out", o.out_path, "write output to a file");

    CLI::App* toe = app.add_subcommand("toeplitz", "build the Toeplitz factor, or a block factor with --block");
    toe->add_option("--seq", o.seq, "weight sequence spec")->required();
    toe->add_option("--order", o.order, "matrix size")->required()->check(CLI::PositiveNumber);
    toe->add_option("--block", o.block, "identity-block size k for the block factor")
        ->check(CLI::NonNegativeNumber);
    toe->add_option("--format", o.format, fmt_help)->check(fmt_check);
    toe->add_option("--out", o.out_path, "write output to a file");

    CLI::App* factor = app.add_subcommand("factor", "factor a matrix into Toeplitz-block factors");
    factor->add_option("--seq", o.seq, "weight sequence spec")->required();
    factor->add_option("--order", o.order, "matrix size")->required()->check(CLI::PositiveNumber);
    factor->add_flag("--step", o.step, "single step: Toeplitz factor and [1] (+) smaller matrix");
    factor->add_option("--format", o.format, fmt_help)->check(fmt_check);
    factor->add_option("--out", o.out_path, "write output to a file");

    CLI::App* inverse = app.add_subcommand("inverse", "exact inverse, from a weight spec or a matrix file");
    inverse->add_option("--seq", o.seq, "weight sequence spec (leading weight must be 1 or -1)");
    inverse->add_option("--order", o.order, "matrix size")->check(CLI::PositiveNumber);
    inverse->add_option("--in", o.in, "matrix JSON file ('-' for standard input)");
    inverse->add_option("--format", o.format, fmt_help)->check(fmt_check);
    inverse->add_option("--out", o.out_path, "write output to a file");

    CLI::App* power = app.add_subcommand("power", "raise a matrix to the m-th power");
    power->add_option("--m", o.m, "exponent")->required();
    power->add_option("--seq", o.seq, "weight sequence spec");
    power->add_option("--order", o.order, "matrix size")->check(CLI::PositiveNumber);
    power->add_option("--col0", o.col0, "explicit first column (comma-separated integers)");
    power->add_option("--in", o.in, "matrix JSON file ('-' for standard input)");
    power->add_option("--format", o.format, fmt_help)->check(fmt_check);
    power->add_option("--out", o.out_path, "write output to a file");

    CLI::App* detect = app.add_subcommand("detect", "infer or verify the weight sequence of a matrix");
    detect->add_option("--in", o.in, "matrix JSON file ('-' for standard input)")->required();
    detect->add_option("--mode", o.mode, "strict | general | verify (default strict)")
        ->check(CLI::IsMember({"strict", "general", "verify"}));
    detect->add_option("--seq", o.seq, "weights to verify (verify mode)");
    detect->add_flag("--col0-is-lambda", o.col0_is_lambda,
                     "verify mode: also require the first column to equal the weights");
    detect->add_option("--format", o.format, fmt_help)->check(fmt_check);
    detect->add_option("--out", o.out_path, "write output to a file");

    CLI::App* fit = app.add_subcommand("fit", "fit a two-term recurrence a[r][k] = alpha*a[r-1][k-1] + beta*a[r-1][k]");
    fit->add_option("--in", o.in, "matrix JSON file ('-' for standard input)")->required();
    fit->add_option("--format", o.format, fmt_help)->check(fmt_check);
    fit->add_option("--out", o.out_path, "write output to a file");

    CLI::App* adm = app.add_subcommand("admissible", "admissible matrices: build, check, extract");
    adm->require_subcommand(1);
    CLI::App* adm_build = adm->add_subcommand("build", "build the admissible matrix of a sequence");
    adm_build->add_option("--seq", o.seq, "subdiagonal-increment sequence spec")->required();
    adm_build->add_option("--order", o.order, "matrix size")->required()->check(CLI::PositiveNumber);
    adm_build->add_option("--format", o.format, fmt_help)->check(fmt_check);
    adm_build->add_option("--out", o.out_path, "write output to a file");
    CLI::App* adm_check = adm->add_subcommand("check", "check the row inner-product property");
    adm_check->add_option("--in", o.in, "matrix JSON file ('-' for standard input)")->required();
    adm_check->add_option("--format", o.format, fmt_help)->check(fmt_check);
    adm_check->add_option("--out", o.out_path, "write output to a file");
    CLI::App* adm_extract = adm->add_subcommand("extract", "recover the sequence from an admissible matrix");
    adm_extract->add_option("--in", o.in, "matrix JSON file ('-' for standard input)")->required();
    adm_extract->add_option("--format", o.format, fmt_help)->check(fmt_check);
    adm_extract->add_option("--out", o.out_path, "write output to a file");

    CLI::App* ladder = app.add_subcommand("ladder", "ladder-network transfer polynomials and triangles");
    ladder->require_subcommand(1);
    CLI::App* lad_polys = ladder->add_subcommand("polys", "transfer polynomials T_0..T_{order-1}");
    lad_polys->add_option("--order", o.order, "number of polynomials")->required()->check(CLI::PositiveNumber);
    lad_polys->add_option("--format", o.format, fmt_help)->check(fmt_check);
    lad_polys->add_option("--out", o.out_path, "write output to a file");
    CLI::App* lad_mnt = ladder->add_subcommand("mnt", "coefficient triangle of the transfer polynomials");
    lad_mnt->add_option("--order", o.order, "matrix size")->required()->check(CLI::PositiveNumber);
    lad_mnt->add_option("--format", o.format, fmt_help)->check(fmt_check);
    lad_mnt->add_option("--out", o.out_path, "write output to a file");
    CLI::App* lad_mnt2 = ladder->add_subcommand("mnt2", "companion triangle with entries C(i+2j,3j+1)");
    lad_mnt2->add_option("--order", o.order, "matrix size")->required()->check(CLI::PositiveNumber);
    lad_mnt2->add_option("--format", o.format, fmt_help)->check(fmt_check);
    lad_mnt2->add_option("--out", o.out_path, "write output to a file");
    CLI::App* lad_cmp = ladder->add_subcommand("compare", "compare the triangle against both closed forms");
    lad_cmp->add_option("--order", o.order, "matrix size")->required()->check(CLI::PositiveNumber);
    lad_cmp->add_option("--format", o.format, fmt_help)->check(fmt_check);
    lad_cmp->add_option("--out", o.out_path, "write output to a file");
    CLI::App* lad_id = ladder->add_subcommand("identities", "brute-force both column-sum identities");
    lad_id->add_option("--max", o.max_n, "sweep bound N (checks 1 <= k <= n <= N; default 20)")
        ->check(CLI::PositiveNumber);
    lad_id->add_option("--format", o.format, fmt_help)->check(fmt_check);
    lad_id->add_option("--out", o.out_path, "write output to a file");

    CLI::App* conj = app.add_subcommand("conjecture", "probe two conjectured weight-structure properties");
    conj->require_subcommand(1);
    CLI::App* conj1 = conj->add_subcommand("1", "two-term array with a multiplier sequence");
    conj1->add_option("--alpha", o.alpha, "diagonal multiplier (default 1)");
    conj1->add_option("--seq", o.seq, "multiplier sequence spec")->required();
    conj1->add_option("--order", o.order, "matrix size (at least 4)")->required()->check(CLI::PositiveNumber);
    conj1->add_option("--format", o.format, fmt_help)->check(fmt_check);
    conj1->add_option("--out", o.out_path, "write output to a file");
    CLI::App* conj2 = conj->add_subcommand("2", "the two Catalan-array candidates");
    conj2->add_option("--order", o.order, "matrix size (at least 5)")->required()->check(CLI::PositiveNumber);
    conj2->add_option("--format", o.format, fmt_help)->check(fmt_check);
    conj2->add_option("--out", o.out_path, "write output to a file");

    CLI::App* minpoly = app.add_subcommand("minpoly", "minimal polynomial of a matrix over F_p");
    minpoly->add_option("--in", o.in, "matrix JSON file ('-' for standard input)")->required();
    minpoly->add_option("--p", o.p, "prime modulus")->required();
    minpoly->add_option("--format", o.format, fmt_help)->check(fmt_check);
    minpoly->add_option("--out", o.out_path, "write output to a file");

    CLI::App* selftest_cmd = app.add_subcommand("selftest", "run the full acceptance suite");
    selftest_cmd->add_option("--format", o.format, fmt_help)->check(fmt_check);
    selftest_cmd->add_option("--out", o.out_path, "write output to a file");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return 2;
    }

    try {
        if (build->parsed()) {
            return cmd_build(o, out);
        }
        if (toe->parsed()) {
            return cmd_toeplitz(o, out);
        }
        if (factor->parsed()) {
            return cmd_factor(o, out);
        }
        if (inverse->parsed()) {
            return cmd_inverse(o, out);
        }
        if (power->parsed()) {
            return cmd_power(o, out);
        }
        if (detect->parsed()) {
            return cmd_detect(o, out);
        }
        if (fit->parsed()) {
            return cmd_fit(o, out);
        }
        if (adm->parsed()) {
            if (adm_build->parsed()) {
                return cmd_admissible_build(o, out);
            }
            if (adm_check->parsed()) {
                return cmd_admissible_check(o, out);
            }
            return cmd_admissible_extract(o, out);
        }
        if (ladder->parsed()) {
            if (lad_polys->parsed()) {
                return cmd_ladder_polys(o, out);
            }
            if (lad_mnt->parsed()) {
                emit_matrix(mnt(n_of(o)), o, out);
                return 0;
            }
            if (lad_mnt2->parsed()) {
                emit_matrix(mnt2(n_of(o)), o, out);
                return 0;
            }
            if (lad_cmp->parsed()) {
                return cmd_ladder_compare(o, out);
            }
            return cmd_ladder_identities(o, out);
        }
        if (conj->parsed()) {
            return cmd_conjecture(conj1->parsed() ? 1 : 2, o, out);
        }
        if (minpoly->parsed()) {
            return cmd_minpoly(o, out);
        }
        return cmd_selftest(o, out);
    } catch (const SeqParseError& e) {
        err << "sequence spec error: " << e.what() << "\n";
        return 2;
    } catch (const JsonSchemaError& e) {
        err << "input error at " << e.path() << ": " << e.what() << "\n";
        return 3;
    } catch (const SeqExhausted& e) {
        err << "input error: " << e.what() << "\n";
        return 3;
    } catch (const std::invalid_argument& e) {
        err << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const std::domain_error& e) {
        err << "input error: " << e.what() << "\n";
        return 3;
    } catch (const std::out_of_range& e) {
        err << "input error: " << e.what() << "\n";
        return 3;
    } catch (const nlohmann::json::exception& e) {
        err << "input error: " << e.what() << "\n";
        return 3;
    }
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    std::vector<const char*> argv;
    argv.reserve(args.size() + 1);
    argv.push_back("vrmat");
    for (const std::string& a : args) {
        argv.push_back(a.c_str());
    }
    return run(static_cast<int>(argv.size()), argv.data(), out, err);
}

}  // namespace vrmat::cli
