#include "frieze/cli.hpp"
#include "frieze/json_io.hpp"
#include "frieze/weak_frieze.hpp"
#include "support/fixtures.hpp"

#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

using namespace frieze;

namespace {

const std::string kOctagonSpec = std::string(FRIEZE_TEST_DATA_DIR) + "/octagon.json";

struct RunResult {
    int code;
    std::string out;
    std::string err;
};

RunResult run_cli(const std::vector<std::string>& args) {
    std::ostringstream out, err;
    int code = cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

class TempDir {
public:
    TempDir() {
        dir_ = std::filesystem::temp_directory_path() /
               ("frieze_cli_test_" + std::to_string(::getpid()) + "_" + std::to_string(counter_++));
        std::filesystem::create_directories(dir_);
    }
    ~TempDir() { std::filesystem::remove_all(dir_); }
    std::string path(const std::string& name) const { return (dir_ / name).string(); }

private:
    static inline int counter_ = 0;
    std::filesystem::path dir_;
};

const std::string kOctagonArray =
    "0 1 1 1 1 2 2 1 0\n"
    "  0 1 1 2 4 4 2 1 0\n"
    "    0 1 2 4 4 2 1 1 0\n"
    "      0 1 2 2 1 1 1 1 0\n"
    "        0 1 1 1 1 2 2 1 0\n"
    "          0 1 1 2 4 4 2 1 0\n"
    "            0 1 2 4 4 2 1 1 0\n"
    "              0 1 2 2 1 1 1 1 0\n";

} // namespace

TEST_CASE("glue then det and render reproduce the octagon results") {
    TempDir tmp;
    const std::string frieze_path = tmp.path("frieze.json");

    RunResult glue = run_cli({"glue", "--in", kOctagonSpec, "--out", frieze_path});
    REQUIRE(glue.code == 0);
    CHECK(glue.out.find("glued weak frieze on 8 vertices") != std::string::npos);

    // the written file holds the 2^r values
    WeakFrieze f = frieze_from_json(load_json(frieze_path));
    CHECK(f.value(2, 6) == Scalar(4));

    RunResult det = run_cli({"det", "--in", frieze_path});
    CHECK(det.code == 0);
    CHECK(det.out == "-27\n");

    RunResult render = run_cli({"render", "--in", frieze_path, "--rows", "1..8"});
    CHECK(render.code == 0);
    CHECK(render.out == kOctagonArray);

    RunResult factor = run_cli({"det", "--in", frieze_path, "--factor", "d=1,4"});
    CHECK(factor.code == 0);
    CHECK(factor.out.find("det(M_f) = -27") != std::string::npos);
    CHECK(factor.out.find("det(M_P) = -3") != std::string::npos);
    CHECK(factor.out.find("det(M_Q) = -9") != std::string::npos);
    CHECK(factor.out.find("PASS") != std::string::npos);

    RunResult weak = run_cli({"check", "--in", frieze_path, "--weak"});
    CHECK(weak.code == 0);
    CHECK(weak.out.find("PASS") != std::string::npos);

    RunResult full = run_cli({"check", "--in", frieze_path, "--full"});
    CHECK(full.code == 0);

    RunResult matrix = run_cli({"matrix", "--in", frieze_path});
    CHECK(matrix.code == 0);
    auto j = nlohmann::json::parse(matrix.out);
    CHECK(j.at("kind") == "matrix");
    CHECK(j.at("entries")[0][5] == "2");
}

TEST_CASE("check reports violations with exit code 1") {
    TempDir tmp;
    WeakFrieze f = testing::octagon_frieze().with_value(Diagonal(2, 6), Scalar(5));
    const std::string path = tmp.path("broken.json");
    save_json(frieze_to_json(f), path);

    RunResult weak = run_cli({"check", "--in", path, "--weak"});
    CHECK(weak.code == 1);
    CHECK(weak.out.find("violation") != std::string::npos);
    CHECK(weak.out.find("FAIL") != std::string::npos);
}

TEST_CASE("glue output goes to stdout as JSON when --out is absent") {
    RunResult r = run_cli({"glue", "--in", kOctagonSpec});
    REQUIRE(r.code == 0);
    auto j = nlohmann::json::parse(r.out);
    CHECK(j.at("kind") == "frieze");
    CHECK(j.at("values").at("2,6") == "4");
}

TEST_CASE("stdin input via --in -") {
    std::ifstream file(kOctagonSpec);
    std::stringstream buffer;
    buffer << file.rdbuf();
    std::istringstream feed(buffer.str());
    auto* old = std::cin.rdbuf(feed.rdbuf());
    RunResult r = run_cli({"glue", "--in", "-"});
    std::cin.rdbuf(old);
    CHECK(r.code == 0);
    CHECK(nlohmann::json::parse(r.out).at("values").at("2,6") == "4");
}

TEST_CASE("usage and input errors exit with code 2") {
    CHECK(run_cli({"nonsense"}).code == 2);
    CHECK(run_cli({"det"}).code == 2);                                    // missing --in
    CHECK(run_cli({"det", "--in", "/does/not/exist.json"}).code == 2);
    CHECK(run_cli({"check", "--in", kOctagonSpec}).code == 2);            // no mode flag
    CHECK(run_cli({"render", "--in", kOctagonSpec, "--rows", "8..1"}).code == 2);
    CHECK(run_cli({"--help"}).code == 0);
}

TEST_CASE("gallery subcommands print PASS and exit cleanly") {
    RunResult bhj = run_cli({"gallery", "bhj", "--n", "8", "--cells", "4,4,4"});
    CHECK(bhj.code == 0);
    CHECK(bhj.out.find("det(M_f) = -27") != std::string::npos);
    CHECK(bhj.out.find("formula = -27") != std::string::npos);
    CHECK(bhj.out.find("PASS\n") != std::string::npos);

    RunResult cc = run_cli({"gallery", "cc", "--n", "7", "--seed", "5"});
    CHECK(cc.code == 0);
    CHECK(cc.out.find("formula = -32") != std::string::npos); // -(-2)^5
    CHECK(cc.out.find("PASS\n") != std::string::npos);

    RunResult bm = run_cli({"gallery", "bm", "--n", "5", "--fan"});
    CHECK(bm.code == 0);
    CHECK(bm.out.find("PASS\n") != std::string::npos);

    RunResult mal = run_cli({"gallery", "maldonado", "--n", "6", "--seed", "3"});
    CHECK(mal.code == 0);
    CHECK(mal.out.find("diamond rule: PASS") != std::string::npos);
    CHECK(mal.out.find("overlap identities: PASS") != std::string::npos);

    RunResult rnd = run_cli({"gallery", "random", "--n", "9", "--seed", "11"});
    CHECK(rnd.code == 0);
    CHECK(rnd.out.find("PASS\n") != std::string::npos);
}

TEST_CASE("gallery maldonado --out writes a matrix usable by check") {
    TempDir tmp;
    const std::string path = tmp.path("matrix.json");
    REQUIRE(run_cli({"gallery", "maldonado", "--n", "5", "--seed", "7", "--out", path}).code == 0);

    RunResult diamond = run_cli({"check", "--in", path, "--diamond"});
    CHECK(diamond.code == 0);
    CHECK(diamond.out.find("PASS") != std::string::npos);

    RunResult overlap = run_cli({"check", "--in", path, "--overlap"});
    CHECK(overlap.code == 0);
}

TEST_CASE("gallery outputs are identical for identical seeds") {
    RunResult a = run_cli({"gallery", "random", "--n", "8", "--seed", "21"});
    RunResult b = run_cli({"gallery", "random", "--n", "8", "--seed", "21"});
    CHECK(a.out == b.out);
}
