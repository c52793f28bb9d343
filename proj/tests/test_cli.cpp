#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <nlohmann/json.hpp>
#include <sstream>
#include <string>
#include <vector>

namespace fs = std::filesystem;

namespace {

const fs::path kWorkDir = fs::temp_directory_path() / "geoforge_cli_work";

struct RunResult {
    int code = -1;
    std::string out;
    std::string err;
};

std::string slurp(const fs::path& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void spit(const fs::path& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    out << content;
}

RunResult run_cli(const std::string& args, const std::string& env_prefix = "") {
    fs::create_directories(kWorkDir);
    const fs::path out_file = kWorkDir / "stdout.txt";
    const fs::path err_file = kWorkDir / "stderr.txt";
    const std::string cmd = env_prefix + "\"" GEOFORGE_BIN "\" " + args + " >\"" +
                            out_file.string() + "\" 2>\"" + err_file.string() + "\"";
    const int status = std::system(cmd.c_str());
    RunResult r;
    r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    r.out = slurp(out_file);
    r.err = slurp(err_file);
    return r;
}

std::string corpus(const std::string& name) {
    return (fs::path(GEOFORGE_CORPUS_DIR) / name).string();
}

std::string golden(const std::string& name) {
    return (fs::path(GEOFORGE_GOLDEN_DIR) / name).string();
}

bool contains(const std::string& text, const std::string& needle) {
    return text.find(needle) != std::string::npos;
}

std::size_t count_lines_starting(const std::string& text, const std::string& prefix) {
    std::size_t count = 0;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line))
        if (line.rfind(prefix, 0) == 0) ++count;
    return count;
}

}  // namespace

TEST_CASE("naka prints the full worked-triangle report") {
    const auto r = run_cli("naka \"1,0 0,1 -1,0\"");
    CHECK(r.code == 0);
    CHECK(r.out ==
          "input: (1, 0) (0, 1) (-1, 0)\n"
          "D: (0, 0)\n"
          "E: (-1/2, 1/2)\n"
          "F: (0, 1)\n"
          "Dp: (1, 1)\n"
          "Ep: (-1/2, 1/2)\n"
          "Fp: (0, -1)\n"
          "O: (0, 0)\n"
          "Oprime: (-1, 1)\n"
          "G: (0, 1)\n"
          "S: (-1/2, 1/2)\n"
          "M: (0, 0)\n"
          "N: (-1/2, 1/2)\n"
          "ratio_sq_def: 1/4\n"
          "ratio_sq_ext: 5/4\n"
          "areas: (1, 1/4, 5/4)\n"
          "props: pass pass pass pass pass not-evaluable\n"
          "sigma: 2+0*i\n");
}

TEST_CASE("naka --json carries the same values in machine form") {
    const auto r = run_cli("naka \"1,0 0,1 -1,0\" --json");
    REQUIRE(r.code == 0);
    const auto j = nlohmann::json::parse(r.out);
    CHECK(j["input"] == nlohmann::json::array({"(1, 0)", "(0, 1)", "(-1, 0)"}));
    CHECK(j["D"] == "(0, 0)");
    CHECK(j["Dp"] == "(1, 1)");
    CHECK(j["S"] == "(-1/2, 1/2)");
    CHECK(j["ratio_sq_def"] == "1/4");
    CHECK(j["ratio_sq_ext"] == "5/4");
    CHECK(j["areas"] == nlohmann::json::array({"1", "1/4", "5/4"}));
    CHECK(j["props"] == nlohmann::json::array({true, true, true, true, true, nullptr}));
    CHECK(j["sigma"] == "2+0*i");
    CHECK(j["notes"] == nlohmann::json::array());
}

TEST_CASE("naka accepts three separate vertex arguments") {
    const auto r = run_cli("naka 1,0 0,1 2,3");
    CHECK(r.code == 0);
    CHECK(contains(r.out, "input: (1, 0) (0, 1) (2, 3)\n"));
}

TEST_CASE("naka float backend reports binary64 values") {
    const auto r = run_cli("naka \"1,0 0,1 -1,0\" --backend float");
    CHECK(r.code == 0);
    CHECK(contains(r.out, "ratio_sq_def: 0.25\n"));
    CHECK(contains(r.out, "ratio_sq_ext: 1.25\n"));
}

TEST_CASE("naka rejects degenerate and malformed input") {
    const auto collinear = run_cli("naka \"0,0 1,1 2,2\"");
    CHECK(collinear.code == 3);
    CHECK(contains(collinear.err, "collinear"));

    CHECK(run_cli("naka \"1,0 0,1\"").code == 4);
    CHECK(run_cli("naka \"1;0 0,1 2,0\"").code == 4);
    CHECK(run_cli("naka \"0.5,0 0,1 1,0\"").code == 4);
    CHECK(run_cli("naka").code == 4);
}

TEST_CASE("run accepts every corpus script") {
    const struct {
        const char* name;
        std::size_t passes;
    } corpus_files[] = {
        {"naka_fig1.geo", 5},
        {"props_fig2.geo", 6},
        {"extended_fig7left.geo", 8},
        {"congruent_fig7right.geo", 3},
    };
    for (const auto& file : corpus_files) {
        CAPTURE(file.name);
        const auto r = run_cli("run \"" + corpus(file.name) + "\"");
        CHECK(r.code == 0);
        CHECK(count_lines_starting(r.out, "PASS ") == file.passes);
        CHECK(count_lines_starting(r.out, "FAIL ") == 0);
    }
}

TEST_CASE("run reports float scripts under the float backend") {
    const auto path = fs::path(GEOFORGE_DATA_DIR) / "float_demo.geo";
    const auto r = run_cli("run \"" + path.string() + "\" --backend float");
    CHECK(r.code == 0);
    CHECK(count_lines_starting(r.out, "PASS ") == 5);

    CHECK(run_cli("run \"" + path.string() + "\"").code == 2);
}

TEST_CASE("run exit codes separate failures from errors") {
    fs::create_directories(kWorkDir);

    const fs::path failing = kWorkDir / "failing.geo";
    spit(failing, "point A = (0, 0);\npoint B = (2, 0);\nassert equals(A, B);\n");
    const auto fail = run_cli("run \"" + failing.string() + "\"");
    CHECK(fail.code == 1);
    CHECK(fail.out == "FAIL 3:1 equals(A, B)\n");

    const fs::path broken = kWorkDir / "broken.geo";
    spit(broken, "point A = (0 0);\n");
    const auto parse = run_cli("run \"" + broken.string() + "\"");
    CHECK(parse.code == 2);
    CHECK(contains(parse.err, "syntax error at line 1, column 12, expected \",\""));

    const fs::path parallel = kWorkDir / "parallel.geo";
    spit(parallel,
         "line a = line((0, 0), (1, 1));\nline b = line((0, 1), (1, 2));\n"
         "point P = intersect(a, b);\n");
    const auto geometric = run_cli("run \"" + parallel.string() + "\"");
    CHECK(geometric.code == 3);
    CHECK(contains(geometric.err, "geometric error at line 3, column 1: parallel lines"));

    const auto missing = run_cli("run \"" + (kWorkDir / "absent.geo").string() + "\"");
    CHECK(missing.code == 4);
    CHECK(contains(missing.err, "cannot read"));
}

TEST_CASE("verify is deterministic for a fixed seed") {
    const auto first = run_cli("verify --iterations 40 --seed 7");
    const auto second = run_cli("verify --iterations 40 --seed 7");
    CHECK(first.code == 0);
    CHECK(second.code == 0);
    CHECK(first.out == second.out);
    CHECK(contains(first.out, "backend exact, seed 7, iterations 40\n"));
    CHECK(contains(first.out, "triangle suite: 40 passed, 0 failed, 0 skipped verdicts\n"));
    CHECK(contains(first.out, "identity suite: 40 passed, 0 failed\n"));
    CHECK(contains(first.out, "40/40 passed\n"));

    CHECK(run_cli("verify --iterations 0").code == 4);
}

TEST_CASE("render reproduces the golden documents byte for byte") {
    const struct {
        const char* script;
        const char* image;
    } figures[] = {
        {"naka_fig1.geo", "fig1.svg"},
        {"props_fig2.geo", "fig2.svg"},
        {"extended_fig7left.geo", "fig7left.svg"},
        {"congruent_fig7right.geo", "fig7right.svg"},
    };
    fs::create_directories(kWorkDir);
    for (const auto& fig : figures) {
        CAPTURE(fig.script);
        const fs::path out = kWorkDir / fig.image;
        const auto r = run_cli("render \"" + corpus(fig.script) + "\" -o \"" + out.string() +
                               "\"");
        CHECK(r.code == 0);
        CHECK(contains(r.out, "wrote "));
        const std::string produced = slurp(out);
        CHECK(produced == slurp(golden(fig.image)));

        run_cli("render \"" + corpus(fig.script) + "\" -o \"" + out.string() + "\"");
        CHECK(slurp(out) == produced);
    }
}

TEST_CASE("render numbers multiple directives and rejects empty jobs") {
    fs::create_directories(kWorkDir);
    const fs::path script = kWorkDir / "pair.geo";
    spit(script,
         "point A = (0, 0);\npoint B = (1, 0);\n"
         "render \"first\" { A; B; }\nrender \"second\" { A; B; }\n");
    const fs::path out = kWorkDir / "pair.svg";
    const auto r = run_cli("render \"" + script.string() + "\" -o \"" + out.string() + "\"");
    CHECK(r.code == 0);
    CHECK(fs::exists(kWorkDir / "pair-1.svg"));
    CHECK(fs::exists(kWorkDir / "pair-2.svg"));
    CHECK(contains(slurp(kWorkDir / "pair-1.svg"), "<title>first</title>"));
    CHECK(contains(slurp(kWorkDir / "pair-2.svg"), "<title>second</title>"));

    const fs::path plain = kWorkDir / "norender.geo";
    spit(plain, "point A = (0, 0);\n");
    CHECK(run_cli("render \"" + plain.string() + "\"").code == 4);
}

TEST_CASE("render honors the style environment variable") {
    fs::create_directories(kWorkDir);
    const fs::path good = kWorkDir / "style_good.cfg";
    spit(good, "construction-line.stroke = #ff0000\n");
    const fs::path out = kWorkDir / "styled.svg";
    const auto styled = run_cli("render \"" + corpus("naka_fig1.geo") + "\" -o \"" +
                                    out.string() + "\"",
                                "GEOFORGE_STYLE=\"" + good.string() + "\" ");
    CHECK(styled.code == 0);
    const std::string bytes = slurp(out);
    CHECK(contains(bytes, "stroke: #ff0000"));
    CHECK(bytes != slurp(golden("fig1.svg")));

    const fs::path bad = kWorkDir / "style_bad.cfg";
    spit(bad, "frame.stroke = #000000\n");
    const auto rejected = run_cli("render \"" + corpus("naka_fig1.geo") + "\" -o \"" +
                                      out.string() + "\"",
                                  "GEOFORGE_STYLE=\"" + bad.string() + "\" ");
    CHECK(rejected.code == 4);
    CHECK(contains(rejected.err, "unknown class"));
}

TEST_CASE("usage errors surface as exit four") {
    CHECK(run_cli("").code == 4);
    CHECK(run_cli("frobnicate").code == 4);
    CHECK(run_cli("naka \"1,0 0,1 -1,0\" --backend quantum").code == 4);
}
