#include <doctest.h>

#include <json.hpp>

#include <unistd.h>

#include <filesystem>
#include <fstream>
#include <initializer_list>
#include <sstream>
#include <string>
#include <vector>

#include "vrmat/admissible.hpp"
#include "vrmat/analysis.hpp"
#include "vrmat/cli.hpp"
#include "vrmat/ladder.hpp"
#include "vrmat/ltmatrix.hpp"
#include "vrmat/poly.hpp"
#include "vrmat/vrm.hpp"

namespace {

struct RunResult {
    int code = -1;
    std::string out;
    std::string err;
};

RunResult run_cli(const std::vector<std::string>& args) {
    std::ostringstream out;
    std::ostringstream err;
    RunResult r;
    r.code = vrmat::cli::run(args, out, err);
    r.out = out.str();
    r.err = err.str();
    return r;
}

// Scratch file that cleans up after itself.
struct TempFile {
    std::filesystem::path path;

    explicit TempFile(const std::string& text) {
        static int counter = 0;
        path = std::filesystem::temp_directory_path() /
               ("vrmat_cli_test_" + std::to_string(::getpid()) + "_" +
                std::to_string(counter++) + ".json");
        std::ofstream f(path);
        f << text;
    }
    ~TempFile() {
        std::error_code ec;
        std::filesystem::remove(path, ec);
    }
    std::string str() const { return path.string(); }
};

std::string slurp(const std::filesystem::path& p) {
    std::ifstream f(p);
    std::ostringstream ss;
    ss << f.rdbuf();
    return ss.str();
}

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("build emits all three formats") {
    const RunResult json =
        run_cli({"build", "--seq", "geom:2", "--order", "4", "--format", "json"});
    CHECK(json.code == 0);
    CHECK(json.out ==
          R"({"order":4,"rows":[["1"],["2","1"],["4","4","1"],["8","12","6","1"]]})"
          "\n");
    CHECK(vrmat::LTMatrix::from_json(json.out) ==
          vrmat::build_vrm(vrmat::VrmSpec::strict(vrmat::Seq::geometric(2)), 3));

    const RunResult csv =
        run_cli({"build", "--seq", "geom:2", "--order", "4", "--format", "csv"});
    CHECK(csv.code == 0);
    CHECK(csv.out == "1\n2,1\n4,4,1\n8,12,6,1\n");

    const RunResult pretty = run_cli({"build", "--seq", "geom:2", "--order", "4"});
    CHECK(pretty.code == 0);
    CHECK(pretty.out == "1  0 0 0\n"
                        "2  1 0 0\n"
                        "4  4 1 0\n"
                        "8 12 6 1\n");
}

TEST_CASE("build accepts an explicit first column") {
    const RunResult r = run_cli({"build", "--seq", "binom:1", "--order", "4",
                                 "--col0", "1,1,1,1", "--format", "csv"});
    CHECK(r.code == 0);
    CHECK(r.out == "1\n1,1\n1,3,1\n1,6,5,1\n");

    const RunResult bad = run_cli({"build", "--seq", "ones", "--order", "2",
                                   "--col0", "1,x"});
    CHECK(bad.code == 2);
    CHECK(bad.err.find("usage error") != std::string::npos);
}

TEST_CASE("usage errors exit with 2") {
    CHECK(run_cli({"build", "--seq", "ones"}).code == 2);        // --order missing
    CHECK(run_cli({"build", "--seq", "ones", "--order", "0"}).code == 2);
    CHECK(run_cli({"no-such-command"}).code == 2);
    CHECK(run_cli({}).code == 2);                                // subcommand required
    CHECK(run_cli({"power", "--seq", "ones", "--order", "3"}).code == 2);  // --m missing

    const RunResult seq = run_cli({"build", "--seq", "geom", "--order", "3"});
    CHECK(seq.code == 2);
    CHECK(seq.err == "sequence spec error: offset 4: "
                     "expected ':' and a parameter after 'geom'\n");
}

TEST_CASE("input errors exit with 3") {
    const RunResult missing = run_cli({"detect", "--in", "/no/such/file.json"});
    CHECK(missing.code == 3);
    CHECK(missing.err == "input error: cannot open file: /no/such/file.json\n");

    const TempFile junk("{\"order\": 2}");
    const RunResult schema = run_cli({"detect", "--in", junk.str()});
    CHECK(schema.code == 3);
    CHECK(schema.err.find("input error at rows") != std::string::npos);

    // Strict build needs weights 0..order-1; a 2-term list runs out.
    const RunResult exhausted =
        run_cli({"build", "--seq", "list:1,1", "--order", "4"});
    CHECK(exhausted.code == 3);
    CHECK(exhausted.err ==
          "input error: sequence exhausted: term 2 of a 2-term list\n");
}

TEST_CASE("help exits cleanly") {
    const RunResult top = run_cli({"--help"});
    CHECK(top.code == 0);
    CHECK(top.out.find("--order N always means the matrix size") !=
          std::string::npos);
    const RunResult sub = run_cli({"build", "--help"});
    CHECK(sub.code == 0);
    CHECK(sub.out.find("--seq") != std::string::npos);
}

TEST_CASE("toeplitz and block factors") {
    const RunResult full =
        run_cli({"toeplitz", "--seq", "geom:2", "--order", "3", "--format", "csv"});
    CHECK(full.code == 0);
    CHECK(full.out == "1\n2,1\n4,2,1\n");

    const RunResult block = run_cli({"toeplitz", "--seq", "geom:2", "--order", "4",
                                     "--block", "2", "--format", "csv"});
    CHECK(block.code == 0);
    CHECK(block.out == "1\n0,1\n0,0,1\n0,0,2,1\n");
}

TEST_CASE("factor single step and full chain") {
    const RunResult step = run_cli({"factor", "--seq", "geom:2", "--order", "3",
                                    "--step"});
    CHECK(step.code == 0);
    CHECK(step.out == "factor 0:\n"
                      "1 0 0\n"
                      "2 1 0\n"
                      "4 2 1\n"
                      "\n"
                      "factor 1:\n"
                      "1 0 0\n"
                      "0 1 0\n"
                      "0 2 1\n");

    const RunResult chain = run_cli({"factor", "--seq", "ones", "--order", "4",
                                     "--format", "json"});
    CHECK(chain.code == 0);
    const nlohmann::json arr = nlohmann::json::parse(chain.out);
    REQUIRE(arr.is_array());
    REQUIRE(arr.size() == 3);
    vrmat::LTMatrix product = vrmat::LTMatrix::from_json(arr[0].dump());
    for (std::size_t i = 1; i < arr.size(); ++i) {
        product = product * vrmat::LTMatrix::from_json(arr[i].dump());
    }
    CHECK(product == vrmat::pascal(3));

    CHECK(run_cli({"factor", "--seq", "ones", "--order", "4", "--format", "csv"})
              .code == 2);
}

TEST_CASE("inverse from weights or file") {
    const RunResult w =
        run_cli({"inverse", "--seq", "ones", "--order", "4", "--format", "csv"});
    CHECK(w.code == 0);
    CHECK(w.out == "1\n-1,1\n1,-2,1\n-1,3,-3,1\n");

    const TempFile m(vrmat::pascal(3).to_json());
    const RunResult f =
        run_cli({"inverse", "--in", m.str(), "--format", "csv"});
    CHECK(f.code == 0);
    CHECK(f.out == w.out);

    CHECK(run_cli({"inverse"}).code == 2);
    const RunResult bad = run_cli({"inverse", "--seq", "const:2", "--order", "3"});
    CHECK(bad.code == 3);
    CHECK(bad.err.find("leading weight 2 is not 1 or -1") != std::string::npos);
}

TEST_CASE("power from weights or file") {
    const RunResult w = run_cli({"power", "--seq", "geom:2", "--order", "3",
                                 "--m", "2", "--format", "csv"});
    CHECK(w.code == 0);
    CHECK(w.out == "1\n4,1\n16,8,1\n");  // pascal_func(2, 4)

    const TempFile m(vrmat::pascal(2).to_json());
    const RunResult f = run_cli({"power", "--in", m.str(), "--m", "3",
                                 "--format", "csv"});
    CHECK(f.code == 0);
    CHECK(f.out == "1\n3,1\n9,6,1\n");  // pascal_func(2, 3)

    CHECK(run_cli({"power", "--m", "2"}).code == 2);
}

TEST_CASE("detect infers, verifies, and signals failure") {
    const TempFile pascal_file(vrmat::pascal(3).to_json());
    const RunResult strict =
        run_cli({"detect", "--in", pascal_file.str(), "--format", "json"});
    CHECK(strict.code == 0);
    CHECK(strict.out ==
          R"({"first_failure":null,"lambda":["1","1","1","1"],)"
          R"("lambda_integral":true,"mode":"strict","verdict":"pass"})"
          "\n");
    const vrmat::DetectionReport back =
        vrmat::detection_report_from_json(strict.out);
    CHECK(back.verdict == vrmat::Verdict::pass);
    CHECK(back.lambda.size() == 4);

    // The Catalan-column triangle: strict fails, general finds the shift.
    const TempFile adm(
        vrmat::build_admissible(vrmat::Seq::list({1, 2, 2, 2}), 4).to_json());
    const RunResult fail = run_cli({"detect", "--in", adm.str()});
    CHECK(fail.code == 1);
    CHECK(fail.out.find("verdict: fail") != std::string::npos);
    CHECK(fail.out.find("first failure at (2,1): expected 2, actual 3") !=
          std::string::npos);

    const RunResult general =
        run_cli({"detect", "--in", adm.str(), "--mode", "general"});
    CHECK(general.code == 0);
    CHECK(general.out.find("lambda: 1, 2, 5, 14") != std::string::npos);

    const RunResult verify = run_cli({"detect", "--in", adm.str(), "--mode",
                                      "verify", "--seq", "list:1,2,5,14"});
    CHECK(verify.code == 0);
    CHECK(verify.out.find("verdict: pass") != std::string::npos);

    CHECK(run_cli({"detect", "--in", adm.str(), "--mode", "verify"}).code == 2);
    CHECK(run_cli({"detect", "--in", adm.str(), "--mode", "sideways"}).code == 2);

    // Underdetermined systems are reported, not failed.
    const TempFile companion(vrmat::mnt2(4).to_json());
    const RunResult und =
        run_cli({"detect", "--in", companion.str(), "--mode", "general"});
    CHECK(und.code == 0);
    CHECK(und.out.find("verdict: underdetermined") != std::string::npos);
}

TEST_CASE("fit reports the two-term coefficients") {
    const TempFile g(
        vrmat::build_vrm(vrmat::VrmSpec::strict(vrmat::Seq::geometric(2)), 4)
            .to_json());
    const RunResult r = run_cli({"fit", "--in", g.str()});
    CHECK(r.code == 0);
    CHECK(r.out == "verdict: pass\n"
                   "alpha: 1\n"
                   "beta: 2\n"
                   "coefficients integral: yes\n");

    const TempFile c(
        vrmat::build_vrm(vrmat::VrmSpec::strict(vrmat::Seq::catalan()), 4)
            .to_json());
    const RunResult bad = run_cli({"fit", "--in", c.str(), "--format", "json"});
    CHECK(bad.code == 1);
    CHECK(bad.out.find(R"("verdict":"fail")") != std::string::npos);
}

TEST_CASE("admissible subcommands") {
    const RunResult built = run_cli({"admissible", "build", "--seq", "list:1,2,2,2",
                                     "--order", "5", "--format", "csv"});
    CHECK(built.code == 0);
    CHECK(built.out == "1\n1,1\n2,3,1\n5,9,5,1\n14,28,20,7,1\n");

    const TempFile adm(
        vrmat::build_admissible(vrmat::Seq::list({1, 2, 2, 2}), 4).to_json());
    const RunResult check = run_cli({"admissible", "check", "--in", adm.str()});
    CHECK(check.code == 0);
    CHECK(check.out == "admissible: yes\n");

    const TempFile pas(vrmat::pascal(2).to_json());
    const RunResult fail = run_cli({"admissible", "check", "--in", pas.str()});
    CHECK(fail.code == 1);
    CHECK(fail.out == "admissible: no\n"
                      "violation: row inner product at (m,n)=(1,1): "
                      "expected 1, actual 2\n");

    const RunResult extract = run_cli({"admissible", "extract", "--in", adm.str()});
    CHECK(extract.code == 0);
    CHECK(extract.out == "1, 2, 2, 2\n");
    const RunResult extract_csv = run_cli({"admissible", "extract", "--in",
                                           adm.str(), "--format", "csv"});
    CHECK(extract_csv.code == 0);
    CHECK(extract_csv.out == "1,2,2,2\n");
}

TEST_CASE("ladder subcommands") {
    const RunResult polys = run_cli({"ladder", "polys", "--order", "4"});
    CHECK(polys.code == 0);
    CHECK(polys.out == "T_0 = 1\n"
                       "T_1 = 1 + x\n"
                       "T_2 = 1 + 3x + x^2\n"
                       "T_3 = 1 + 6x + 5x^2 + x^3\n");

    const RunResult polys_json =
        run_cli({"ladder", "polys", "--order", "3", "--format", "json"});
    CHECK(polys_json.code == 0);
    const nlohmann::json arr = nlohmann::json::parse(polys_json.out);
    REQUIRE(arr.size() == 3);
    CHECK(vrmat::Poly::from_json(arr[2].dump()) ==
          vrmat::Poly({vrmat::Integer(1), vrmat::Integer(3), vrmat::Integer(1)}));

    const RunResult triangle =
        run_cli({"ladder", "mnt", "--order", "4", "--format", "csv"});
    CHECK(triangle.code == 0);
    CHECK(triangle.out == "1\n1,1\n1,3,1\n1,6,5,1\n");

    const RunResult companion =
        run_cli({"ladder", "mnt2", "--order", "4", "--format", "csv"});
    CHECK(companion.code == 0);
    CHECK(companion.out == "0\n1,0\n2,1,0\n3,5,1,0\n");

    // The comparison itself always exits 0; the mismatch is data.
    const RunResult cmp = run_cli({"ladder", "compare", "--order", "3"});
    CHECK(cmp.code == 0);
    CHECK(cmp.out == "n: 2\n"
                     "C(i+j,2j): matches\n"
                     "C(i+j,2j+1): first mismatch at (1,1): "
                     "expected 1, actual 0\n");

    const RunResult ids =
        run_cli({"ladder", "identities", "--max", "5", "--format", "json"});
    CHECK(ids.code == 0);
    const nlohmann::json j = nlohmann::json::parse(ids.out);
    CHECK(j.at("mnt").at("pass") == true);
    CHECK(j.at("mnt2").at("pass") == true);
    CHECK(j.at("mnt").at("max_n") == 5);

    const RunResult ids_pretty = run_cli({"ladder", "identities", "--max", "4"});
    CHECK(ids_pretty.code == 0);
    CHECK(ids_pretty.out ==
          "C(n+k,2k+1) column identity: pass for 1 <= k <= n <= 4\n"
          "C(n+2k,3k+1) column identity: pass for 1 <= k <= n <= 4\n");
}

TEST_CASE("conjecture subcommands") {
    const RunResult supported =
        run_cli({"conjecture", "1", "--seq", "ones", "--order", "5"});
    CHECK(supported.code == 0);
    CHECK(supported.out.find("outcome: supported") != std::string::npos);

    const RunResult refuted = run_cli({"conjecture", "1", "--seq", "nat",
                                       "--order", "6", "--format", "json"});
    CHECK(refuted.code == 1);
    const nlohmann::json j = nlohmann::json::parse(refuted.out);
    CHECK(j.at("outcome") == "refuted");
    CHECK(j.at("counterexample") == 0);

    const RunResult mixed = run_cli({"conjecture", "2", "--order", "7"});
    CHECK(mixed.code == 0);
    CHECK(mixed.out.find("outcome: mixed") != std::string::npos);
    CHECK(mixed.out.find("instance: ballot triangle") != std::string::npos);
    CHECK(mixed.out.find("lambda: 1, 2, 5, 14, 42, 132") != std::string::npos);

    CHECK(run_cli({"conjecture", "1", "--seq", "ones", "--order", "3"}).code == 2);
    CHECK(run_cli({"conjecture", "1", "--order", "5"}).code == 2);
    CHECK(run_cli({"conjecture", "2", "--order", "4"}).code == 2);
}

TEST_CASE("minpoly over a prime modulus") {
    const TempFile m(vrmat::pascal(4).to_json());
    const RunResult pretty = run_cli({"minpoly", "--in", m.str(), "--p", "5"});
    CHECK(pretty.code == 0);
    CHECK(pretty.out == "minimal polynomial mod 5: 4 + x^5\n"
                        "coefficients: 4, 0, 0, 0, 0, 1\n");

    const RunResult json =
        run_cli({"minpoly", "--in", m.str(), "--p", "5", "--format", "json"});
    CHECK(json.code == 0);
    CHECK(json.out == R"(["4","0","0","0","0","1"])" "\n");
    CHECK(vrmat::Poly::from_json(json.out).degree() == 5);

    const RunResult composite =
        run_cli({"minpoly", "--in", m.str(), "--p", "6"});
    CHECK(composite.code == 3);
    CHECK(composite.err == "input error: p must be prime, got 6\n");
}

TEST_CASE("reports refuse csv") {
    const TempFile m(vrmat::pascal(3).to_json());
    const RunResult r =
        run_cli({"detect", "--in", m.str(), "--format", "csv"});
    CHECK(r.code == 2);
    CHECK(r.err ==
          "usage error: csv output is only available for matrices and sequences\n");
    CHECK(run_cli({"selftest", "--format", "csv"}).code == 2);
}

TEST_CASE("output redirection") {
    TempFile target("");
    const RunResult r = run_cli({"build", "--seq", "ones", "--order", "3",
                                 "--format", "csv", "--out", target.str()});
    CHECK(r.code == 0);
    CHECK(r.out.empty());
    CHECK(slurp(target.path) == "1\n1,1\n1,2,1\n");
}

TEST_CASE("selftest surfaces the one designed failure") {
    const RunResult r = run_cli({"selftest"});
    CHECK(r.code == 1);
    CHECK(r.out.find("10/11 checks passed") != std::string::npos);

    std::size_t fails = 0;
    std::istringstream lines(r.out);
    std::string line;
    while (std::getline(lines, line)) {
        if (line.find("  FAIL  ") != std::string::npos) {
            ++fails;
            CHECK(line.find("admissible-matrices") != std::string::npos);
        }
    }
    CHECK(fails == 1);

    const RunResult json = run_cli({"selftest", "--format", "json"});
    CHECK(json.code == 1);
    const nlohmann::json arr = nlohmann::json::parse(json.out);
    REQUIRE(arr.size() == 11);
    std::size_t failed = 0;
    for (const auto& item : arr) {
        if (!item.at("pass").get<bool>()) {
            ++failed;
            CHECK(item.at("name") == "admissible-matrices");
            CHECK(item.at("detail").get<std::string>().find(
                      "first column shifted by one") != std::string::npos);
        }
    }
    CHECK(failed == 1);
}

}  // TEST_SUITE
