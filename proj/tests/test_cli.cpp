#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "equivar/cli.hpp"
#include "equivar/complex_io.hpp"
#include "equivar/fixtures.hpp"

using namespace equivar;

namespace {

struct RunResult {
    int code;
    std::string out;
    std::string err;
};

RunResult run(const std::vector<std::string>& args) {
    std::ostringstream out, err;
    int code = cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

std::string write_fixture(const std::string& name, const std::string& path) {
    std::ofstream f(path);
    f << complex_file_to_json(to_complex_file(fixtures::by_name(name)));
    return path;
}

}  // namespace

TEST_CASE("complex file round trip") {
    ComplexFile file = to_complex_file(fixtures::octahedron_reflection());
    ComplexFile parsed = parse_complex_json(complex_file_to_json(file));
    CHECK(parsed.vertices == 6);
    CHECK(parsed.maximal_simplices.size() == 8);
    REQUIRE(parsed.involution.has_value());
    CHECK((*parsed.involution)[4] == 5);
    InvolutiveComplex ic = load_involutive(parsed);
    CHECK(ic.complex().count(2) == 8);
}

TEST_CASE("parse errors carry the code") {
    CHECK_THROWS_AS(parse_complex_json("{"), error);
    CHECK_THROWS_AS(parse_complex_json("{\"vertices\": 2}"), error);
    CHECK_THROWS_AS(
        parse_complex_json("{\"vertices\": -1, \"maximal_simplices\": []}"), error);
}

TEST_CASE("odd-order permutation is rejected on load") {
    ComplexFile file;
    file.vertices = 3;
    file.maximal_simplices = {{0, 1}, {1, 2}, {0, 2}};
    file.involution = std::vector<int>{1, 2, 0};  // 3-cycle
    CHECK_THROWS_AS(load_involutive(file), error);
}

TEST_CASE("file without involution gets the identity") {
    ComplexFile file;
    file.vertices = 3;
    file.maximal_simplices = {{0, 1, 2}};
    InvolutiveComplex ic = load_involutive(file);
    CHECK(ic.trivial());
}

TEST_CASE("equivariant command on the reflection sphere") {
    std::string path = write_fixture("octahedron_reflection", "/tmp/equivar_refl.json");
    RunResult r = run({"equivariant", path, "--max-degree", "5"});
    CHECK(r.code == 0);
    auto parsed = nlohmann::json::parse(r.out);
    CHECK(parsed["results"]["dims"] ==
          nlohmann::json::array({1, 1, 2, 2, 2, 2}));
    std::remove(path.c_str());
}

TEST_CASE("obstruction command") {
    std::string path = write_fixture("octahedron_reflection", "/tmp/eq_obstr.json");
    RunResult r = run({"obstruction", path});
    CHECK(r.code == 0);
    CHECK(r.out.find("\"surjective\": true") != std::string::npos);
    CHECK(r.out.find("\"s\": 1") != std::string::npos);
    std::remove(path.c_str());
}

TEST_CASE("formulas enriques matches the documented example") {
    RunResult r = run({"formulas", "enriques", "--r", "2", "--a", "0", "--alpha", "1",
                       "--delta", "0", "--dimHminus", "1", "--dimHcap", "1"});
    CHECK(r.code == 0);
    CHECK(r.out.find("\"b\": 2") != std::string::npos);
    CHECK(r.out.find("\"s\": 2") != std::string::npos);
    CHECK(r.out.find("\"s_nor\": 0") != std::string::npos);
    CHECK(r.out.find("\"dim_2br\": 3") != std::string::npos);
}

TEST_CASE("formula commands never read files and fail hypotheses loudly") {
    RunResult bounds = run({"formulas", "enriques-bounds", "--b", "4", "--epsilon",
                            "0", "--s", "3"});
    CHECK(bounds.code == 2);  // 0.6(iii) flagged
    CHECK(bounds.out.find("\"bound_0_6iii\": false") != std::string::npos);

    RunResult refused = run({"formulas", "enriques", "--r", "0", "--a", "0", "--alpha",
                             "0", "--one-lifting-empty"});
    CHECK(refused.code == 2);
    CHECK(refused.out.find("formula-not-applicable") != std::string::npos);
}

TEST_CASE("exit codes: parse errors") {
    RunResult missing = run({"cohomology", "/tmp/does_not_exist_equivar.json"});
    CHECK(missing.code == 3);
    CHECK(missing.out.find("parse-error") != std::string::npos);

    std::ofstream bad("/tmp/equivar_bad.json");
    bad << "{ not json";
    bad.close();
    RunResult broken = run({"cohomology", "/tmp/equivar_bad.json"});
    CHECK(broken.code == 3);
    std::remove("/tmp/equivar_bad.json");

    RunResult usage = run({"no-such-command"});
    CHECK(usage.code == 3);
}

TEST_CASE("exit codes: hypothesis failure") {
    std::string path = write_fixture("hexagon_antipodal", "/tmp/eq_free.json");
    RunResult r = run({"obstruction", path});
    CHECK(r.code == 2);
    CHECK(r.out.find("empty-fixed-set") != std::string::npos);
    std::remove(path.c_str());
}

TEST_CASE("reports are byte-identical across runs") {
    std::string path = write_fixture("octahedron_reflection", "/tmp/eq_det.json");
    for (const std::vector<std::string>& args :
         {std::vector<std::string>{"smith", path},
          std::vector<std::string>{"pages", path, "--kind", "II"},
          std::vector<std::string>{"krasnov", path}}) {
        RunResult a = run(args);
        RunResult b = run(args);
        CHECK(a.code == 0);
        CHECK(a.out == b.out);
    }
    std::remove(path.c_str());
}

TEST_CASE("fixture emission is loadable and deterministic") {
    RunResult names = run({"fixtures"});
    CHECK(names.code == 0);
    CHECK(names.out.find("octahedron_reflection") != std::string::npos);

    RunResult quadric_a = run({"fixtures", "quadric"});
    RunResult quadric_b = run({"fixtures", "quadric"});
    CHECK(quadric_a.code == 0);
    CHECK(quadric_a.out == quadric_b.out);
    ComplexFile file = parse_complex_json(quadric_a.out);
    CHECK(file.vertices == 36);
    CHECK(file.maximal_simplices.size() == 384);

    RunResult unknown = run({"fixtures", "dodecahedron"});
    CHECK(unknown.code == 3);
}

TEST_CASE("text format emits aligned key-value lines") {
    RunResult r = run({"formulas", "kummer", "--h2et", "3", "--pic2", "2",
                       "--format", "text"});
    CHECK(r.code == 0);
    CHECK(r.out.find("results.dim_2br") != std::string::npos);
    CHECK(r.out.find("3 - 2") == std::string::npos);
}

TEST_CASE("no-subdivide keeps irregular actions and operations refuse them") {
    std::string path =
        write_fixture("octahedron_antipodal", "/tmp/eq_nosub.json");
    RunResult r = run({"krasnov", path, "--no-subdivide"});
    CHECK(r.code == 2);
    CHECK(r.out.find("non-regular-action") != std::string::npos);

    RunResult ok = run({"krasnov", path});
    CHECK(ok.code == 0);
    CHECK(ok.out.find("\"degenerate\": false") != std::string::npos);
    std::remove(path.c_str());
}

TEST_CASE("verify runs the invariant suite") {
    std::string path = write_fixture("octahedron_reflection", "/tmp/eq_verify.json");
    RunResult r = run({"verify", path});
    CHECK(r.code == 0);
    CHECK(r.out.find("\"convergence\": true") != std::string::npos);
    CHECK(r.out.find("\"smith_exact\": true") != std::string::npos);
    CHECK(r.out.find("\"krasnov_equivalence\": true") != std::string::npos);
    std::remove(path.c_str());
}

TEST_CASE("cross-check command on the quadric") {
    std::string path = write_fixture("quadric", "/tmp/eq_quadric.json");
    RunResult r = run({"cross-check", path, "--h20", "0", "--h11minus", "2",
                       "--rhoplus", "2"});
    CHECK(r.code == 0);
    CHECK(r.out.find("\"brauer_dim\": 1") != std::string::npos);
    std::remove(path.c_str());
}
