#include "doctest.h"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "fanobound/cli.hpp"

using fanobound::json;

namespace {

struct cli_result {
    int exit_code;
    std::string out;
    std::string err;
};

cli_result run_cli(const std::vector<std::string>& args) {
    std::ostringstream out, err;
    const int code = fanobound::cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

std::filesystem::path temp_file(const std::string& name) {
    return std::filesystem::temp_directory_path() / name;
}

}  // namespace

TEST_CASE("chern subcommand produces the expected report") {
    const auto r = run_cli({"chern", "--weights", "1,1,1,1,1", "--degree", "3", "--twist", "2"});
    REQUIRE(r.exit_code == 0);
    const json report = json::parse(r.out);
    const json& job = report["jobs"][0];
    CHECK(job["result"]["report"]["top_coefficient"] == "10");
    CHECK(job["result"]["report"]["top_number"] == "30");
    CHECK(job["result"]["residue_cross_check"]["agrees"] == true);
    CHECK(job["provenance"]["rules"][0] == "top-chern-residue-formula");
}

TEST_CASE("bound subcommand resolves aliases through the classification table") {
    const auto r = run_cli({"bound", "--x", "cubic3fold", "--y", "cubic3fold", "--u", "2"});
    REQUIRE(r.exit_code == 0);
    const json report = json::parse(r.out);
    const json& b = report["jobs"][0]["result"]["bound"];
    CHECK(b["m_max"] == 1);
    CHECK(b["degree_bound"] == "1");
    CHECK(report["jobs"][0]["input"]["gg_asserted"] == true);  // auto-filled
}

TEST_CASE("quadric subcommand emits witness and certificate") {
    const auto r = run_cli({"quadric", "--ambient-dim", "5", "--rank-k", "3", "--q", "2"});
    REQUIRE(r.exit_code == 0);
    const json report = json::parse(r.out);
    const json& res = report["jobs"][0]["result"];
    CHECK(res["verdict"]["admits"] == true);
    CHECK(res["verdict"]["witness"]["normal_form"] == "x0*x1 - x2*x3");
    CHECK(res["verdict"]["witness"]["quotient"] == "x0*x1 + x2*x3");
    // the diagonal representative itself is not power-invariant; only the
    // hyperbolic normal form is, which is what the witness certifies
    CHECK(res["form_invariance"]["invariant"] == false);
    CHECK(res["form_invariance"].contains("remainder"));

    // a form given directly in normal-form coordinates is invariant as-is
    const auto r2 = run_cli({"quadric", "--matrix",
                             "0,1/2,0,0;1/2,0,0,0;0,0,0,-1/2;0,0,-1/2,0", "--q", "3"});
    REQUIRE(r2.exit_code == 0);
    const json rep2 = json::parse(r2.out);
    CHECK(rep2["jobs"][0]["result"]["quadric"]["form"] == "x0*x1 - x2*x3");
    CHECK(rep2["jobs"][0]["result"]["form_invariance"]["invariant"] == true);
}

TEST_CASE("exit codes: usage is 1, hypothesis is 2") {
    CHECK(run_cli({"chern", "--weights", "nope", "--degree", "3"}).exit_code == 1);
    CHECK(run_cli({"nonsense-subcommand"}).exit_code == 1);
    CHECK(run_cli({"chern"}).exit_code == 1);  // missing required flags
    CHECK(run_cli({"positivity", "--weights", "1,1,1,1,1", "--degree", "2"}).exit_code == 2);
    CHECK(run_cli({"classify", "--del-pezzo", "7,5"}).exit_code == 2);
    CHECK(run_cli({"classify", "--mukai", "11"}).exit_code == 1);
    CHECK(run_cli({"--help"}).exit_code == 0);
}

TEST_CASE("classify subcommand shapes") {
    auto r = run_cli({"classify", "--quadric", "5,3"});
    REQUIRE(r.exit_code == 0);
    CHECK(json::parse(r.out)["jobs"][0]["result"]["verdict"]["status"] == "AdmitsEndo");

    r = run_cli({"classify", "--fourfold", "1,1"});
    REQUIRE(r.exit_code == 0);
    CHECK(json::parse(r.out)["jobs"][0]["result"]["verdict"]["status"] == "OpenQuestion");

    r = run_cli({"classify", "--splitting-types", "4"});
    REQUIRE(r.exit_code == 0);
    CHECK(json::parse(r.out)["jobs"][0]["result"]["data"]["types"].size() == 2);

    r = run_cli({"classify", "--wps-consistency", "3,1"});
    REQUIRE(r.exit_code == 0);
    CHECK(json::parse(r.out)["jobs"][0]["result"]["consistency"]["positivity"]["margin"] == "48");
}

TEST_CASE("batch: unknown kinds are rejected with the job index") {
    const auto path = temp_file("fanobound_bad_batch.json");
    {
        std::ofstream os(path);
        os << R"({"version":"1","jobs":[{"kind":"chern","weights":[1,1,1,1],"degree":2},)"
           << R"({"kind":"frobnicate"}]})";
    }
    const auto r = run_cli({"batch", "--input", path.string()});
    CHECK(r.exit_code == 1);
    CHECK(r.err.find("job 1") != std::string::npos);
    CHECK(r.err.find("frobnicate") != std::string::npos);
    std::filesystem::remove(path);
}

TEST_CASE("batch: per-job runtime errors are captured, exit reflects severity") {
    const auto path = temp_file("fanobound_mixed_batch.json");
    {
        std::ofstream os(path);
        // one fine job and one hypothesis failure
        os << R"({"version":"1","jobs":[)"
           << R"({"kind":"chern","weights":[1,1,1,1,1],"degree":3,"twist":2},)"
           << R"({"kind":"positivity","weights":[1,1,1,1,1],"degree":2}]})";
    }
    const auto r = run_cli({"batch", "--input", path.string()});
    CHECK(r.exit_code == 2);
    const json report = json::parse(r.out);
    CHECK(report["jobs"].size() == 2);
    CHECK(!report["jobs"][0].contains("error"));
    CHECK(report["jobs"][1]["error"]["category"] == "hypothesis");
    std::filesystem::remove(path);

    // usage beats hypothesis in the exit priority
    const auto path2 = temp_file("fanobound_mixed_batch2.json");
    {
        std::ofstream os(path2);
        os << R"({"version":"1","jobs":[)"
           << R"({"kind":"positivity","weights":[1,1,1,1,1],"degree":2},)"
           << R"({"kind":"chern","weights":[1,1],"degree":3}]})";
    }
    const auto r2 = run_cli({"batch", "--input", path2.string()});
    CHECK(r2.exit_code == 1);
    std::filesystem::remove(path2);
}

TEST_CASE("round trip: echoed inputs reproduce a byte-identical result block") {
    const auto first = run_cli({"bound", "--x", "delpezzo:n=3,d=1", "--y", "wps:1,1,1,1,1:3",
                                "--u", "2"});
    REQUIRE(first.exit_code == 0);
    const json report = json::parse(first.out);
    const json& job = report["jobs"][0];

    const auto rerun = fanobound::cli::run_job(0, "bound", job["input"]);
    CHECK(rerun.entry["result"].dump() == job["result"].dump());
    CHECK(rerun.entry["input"].dump() == job["input"].dump());
}

TEST_CASE("reports are deterministic across runs and parallelism settings") {
    const auto path = temp_file("fanobound_det_batch.json");
    {
        std::ofstream os(path);
        os << R"({"version":"1","jobs":[)"
           << R"({"kind":"chern","weights":[3,2,1,1,1],"degree":6,"twist":5},)"
           << R"({"kind":"positivity","weights":[2,1,1,1,1],"degree":4},)"
           << R"({"kind":"bound","x":"cubic3fold","y":"cubic3fold","u":2},)"
           << R"({"kind":"quadric","ambient_dim":5,"rank_k":3,"q":2},)"
           << R"({"kind":"classify","subject":{"del_pezzo":{"n":4,"d":5}}},)"
           << R"({"kind":"identity-check","max_a0":2,"max_n":3,"max_d":5,"g_max_a":3,"g_max_x":8}]})";
    }
    const auto a = run_cli({"batch", "--input", path.string()});
    const auto b = run_cli({"batch", "--input", path.string()});
    REQUIRE(a.exit_code == 0);
    CHECK(a.out == b.out);

    setenv("FANOBOUND_PARALLELISM", "4", 1);
    const auto c = run_cli({"batch", "--input", path.string()});
    unsetenv("FANOBOUND_PARALLELISM");
    CHECK(a.out == c.out);
    std::filesystem::remove(path);
}

TEST_CASE("inline invariants reference") {
    const auto r = run_cli({"bound", "--x", "inv:2:4:0,24", "--y", "inv:2:4:0,24", "--u", "2"});
    REQUIRE(r.exit_code == 0);
    const json report = json::parse(r.out);
    const json& b = report["jobs"][0]["result"]["bound"];
    CHECK(b["lhs_constant"] == "24");
    CHECK(b["m_max"] == 1);
    CHECK(b["degree_bound"] == "1");
    CHECK(report["jobs"][0]["input"]["gg_asserted"] == false);  // no hypersurface backing
}

TEST_CASE("output path errors are usage errors") {
    const auto r = run_cli({"chern", "--weights", "1,1,1,1", "--degree", "2", "--output",
                            "/nonexistent-dir-xyz/report.json"});
    CHECK(r.exit_code == 1);
}

TEST_CASE("atomic output file") {
    const auto out_path = temp_file("fanobound_report.json");
    const auto r = run_cli({"chern", "--weights", "1,1,1,1", "--degree", "4", "--output",
                            out_path.string()});
    REQUIRE(r.exit_code == 0);
    CHECK(r.out.empty());
    std::ifstream is(out_path);
    REQUIRE(is.good());
    json report;
    is >> report;
    CHECK(report["jobs"][0]["result"]["report"]["top_coefficient"] == "6");
    std::filesystem::remove(out_path);
}

TEST_CASE("text format renders the same data") {
    const auto r = run_cli({"chern", "--weights", "1,1,1,1,1", "--degree", "3", "--twist", "2",
                            "--format", "text"});
    REQUIRE(r.exit_code == 0);
    CHECK(r.out.find("top coefficient 10") != std::string::npos);
    CHECK(r.out.find("top Chern number 30") != std::string::npos);
}

#ifdef FANOBOUND_CLI_BIN
TEST_CASE("end-to-end process exit codes") {
    const std::string bin = FANOBOUND_CLI_BIN;
    const auto run_proc = [&](const std::string& args) {
        const std::string cmd = bin + " " + args + " >/dev/null 2>&1";
        const int status = std::system(cmd.c_str());
        return WEXITSTATUS(status);
    };
    CHECK(run_proc("chern --weights 1,1,1,1,1 --degree 3 --twist 2") == 0);
    CHECK(run_proc("chern --weights bogus --degree 3") == 1);
    CHECK(run_proc("positivity --weights 1,1,1,1,1 --degree 2") == 2);
    CHECK(run_proc("quadric --ambient-dim 5 --rank-k 3") == 0);
    CHECK(run_proc("check-identities --max-a0 1 --max-n 2 --max-d 2 --skip-g") == 0);
    CHECK(run_proc("") == 1);  // a subcommand is required
}
#endif
