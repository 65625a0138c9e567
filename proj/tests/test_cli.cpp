#include <sys/wait.h>
#include <unistd.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "doctest.h"
#include "lambdaforge/jobs.hpp"

using namespace lforge;
namespace fs = std::filesystem;

namespace {

struct CoutCapture {
    std::stringstream ss;
    std::streambuf* old;
    CoutCapture() : old(std::cout.rdbuf(ss.rdbuf())) {}
    ~CoutCapture() { std::cout.rdbuf(old); }
};

std::string strip_timing(const std::string& text) {
    size_t start = text.find("[timing]\n");
    if (start == std::string::npos) return text;
    size_t stop = text.find("\n\n", start);
    if (stop == std::string::npos) return text.substr(0, start);
    return text.substr(0, start) + text.substr(stop + 2);
}

fs::path fresh_dir(const std::string& tag) {
    fs::path d = fs::temp_directory_path() /
                 ("lambda_forge_test_" + tag + "_" + std::to_string(::getpid()));
    fs::remove_all(d);
    fs::create_directories(d);
    return d;
}

void write_file(const fs::path& p, const std::string& text) {
    std::ofstream out(p);
    out << text;
}

int run_cli(const std::string& args) {
    std::string cmd = std::string(LF_CLI_PATH) + " " + args + " > /dev/null 2>&1";
    int status = std::system(cmd.c_str());
    REQUIRE(status != -1);
    REQUIRE(WIFEXITED(status));
    return WEXITSTATUS(status);
}

std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

}  // namespace

TEST_CASE("config text parses sections, comments, and overrides") {
    Config cfg = parse_config_text(
        "top = 1\n"
        "[alpha]\n"
        "# a comment\n"
        "x = 2.5   # trailing comment\n"
        "flag = yes\n"
        "pts = 1+2i, 0.5, -i\n"
        "[beta]\n"
        "x = 7\n"
        "[alpha]\n"
        "x = 3.5\n");
    CHECK(cfg.get_double("", "top", 0.0) == 1.0);
    CHECK(cfg.get_double("alpha", "x", 0.0) == 3.5);  // last assignment wins
    CHECK(cfg.get_double("beta", "x", 0.0) == 7.0);
    CHECK(cfg.get_bool("alpha", "flag", false));
    CHECK(cfg.get_double("alpha", "missing", -2.0) == -2.0);
    CHECK_FALSE(cfg.has("alpha", "missing"));
    auto pts = cfg.get_complex_list("alpha", "pts");
    REQUIRE(pts.size() == 3);
    CHECK(pts[0] == cplx(1.0, 2.0));
    CHECK(pts[1] == cplx(0.5, 0.0));
    CHECK(pts[2] == cplx(0.0, -1.0));
}

TEST_CASE("malformed config lines are collected into one failure") {
    try {
        parse_config_text("good = 1\nbare line\n[unclosed\n= headless\n");
        CHECK(false);
    } catch (const error& e) {
        CHECK(e.code() == errc::config);
        std::string what = e.what();
        CHECK(what.find(";") != std::string::npos);  // several problems joined
    }
    CHECK_THROWS_AS(load_config("/nonexistent/path/lf.cfg"), error);
}

TEST_CASE("complex literals cover the documented forms") {
    CHECK(parse_complex("2") == cplx(2.0, 0.0));
    CHECK(parse_complex("-1.5") == cplx(-1.5, 0.0));
    CHECK(parse_complex("0.4i") == cplx(0.0, 0.4));
    CHECK(parse_complex("4+0.4i") == cplx(4.0, 0.4));
    CHECK(parse_complex("-3-0.4e-1i") == cplx(-3.0, -0.04));
    CHECK(parse_complex("i") == cplx(0.0, 1.0));
    CHECK(parse_complex("-i") == cplx(0.0, -1.0));
    CHECK(parse_complex("+i") == cplx(0.0, 1.0));
    CHECK(parse_complex("1e3") == cplx(1000.0, 0.0));
    CHECK(parse_complex("2.5e-2i") == cplx(0.0, 0.025));
    CHECK(parse_complex("1-i") == cplx(1.0, -1.0));
    CHECK_THROWS_AS(parse_complex("abc"), error);
    CHECK_THROWS_AS(parse_complex("1+2"), error);
    CHECK_THROWS_AS(parse_double_strict("1.2x", "value"), error);
    CHECK(parse_double_strict(" 3.5 ", "value") == 3.5);
}

TEST_CASE("boolean forms") {
    Config cfg = parse_config_text("a = on\nb = Off\nc = TRUE\nd = 0\ne = maybe\n");
    CHECK(cfg.get_bool("", "a", false));
    CHECK_FALSE(cfg.get_bool("", "b", true));
    CHECK(cfg.get_bool("", "c", false));
    CHECK_FALSE(cfg.get_bool("", "d", true));
    CHECK_THROWS_AS(cfg.get_bool("", "e", false), error);
}

TEST_CASE("split_list trims and drops empties") {
    auto groups = split_list("a, b; c ;; d", ';');
    REQUIRE(groups.size() == 3);
    CHECK(groups[0] == "a, b");
    CHECK(groups[1] == "c");
    CHECK(groups[2] == "d");
}

TEST_CASE("report numbers survive a text round trip") {
    for (double x : {0.1, 1e-17, -3.75, 12345.678, 6.8e-4}) {
        std::string s = format_double(x);
        CHECK(std::strtod(s.c_str(), nullptr) == x);
    }
    CHECK(format_complex(cplx(1.0, -2.0)) == "1-2i");
    CHECK(format_complex(cplx(0.5, 1.0)) == "0.5+1i");
}

TEST_CASE("report text keeps sections, echo, and summary in order") {
    Report rep;
    auto& s = rep.add_section("alpha");
    rep.add(s, "k", 1.5);
    rep.config_echo = "x = 1\n";
    rep.summary.push_back("all good");
    std::string text = rep.to_text();
    size_t sec = text.find("[alpha]\n");
    size_t key = text.find("k = 1.5\n");
    size_t echo = text.find("--- config ---\nx = 1\n--- end config ---\n");
    size_t summary = text.find("--- summary ---\nall good\n");
    CHECK(sec != std::string::npos);
    CHECK(key != std::string::npos);
    CHECK(echo != std::string::npos);
    CHECK(summary != std::string::npos);
    CHECK(sec < key);
    CHECK(key < echo);
    CHECK(echo < summary);
}

TEST_CASE("verify job on the constant function passes in process") {
    Config cfg = parse_config_text("[base]\nkind = one\n[fe_grid]\nn_re = 4\nn_im = 4\n");
    CoutCapture cap;
    JobResult res = run_job("verify", cfg, {});
    CHECK(res.pass);
    std::string text = res.report.to_text();
    CHECK(text.find("verdict: PASS") != std::string::npos);
    CHECK(text.find("kind = one") != std::string::npos);  // config echo included
    CHECK(cap.ss.str() == text);
}

TEST_CASE("job dispatch rejects unknown commands and missing outputs") {
    Config cfg = parse_config_text("[base]\nkind = one\n");
    CoutCapture cap;
    CHECK_THROWS_AS(run_job("bogus", cfg, {}), error);
    try {
        run_job("grid", cfg, {});  // grid requires --out
        CHECK(false);
    } catch (const error& e) {
        CHECK(e.code() == errc::config);
    }
}

TEST_CASE("seeded jobs repeat byte for byte apart from timing") {
    Config cfg = parse_config_text("[randomized]\ncount = 20\nq = 2\ngenus = 2\n");
    JobOptions opts;
    opts.seed = 99;
    std::string first, second;
    {
        CoutCapture cap;
        first = run_job("weil", cfg, opts).report.to_text();
    }
    {
        CoutCapture cap;
        second = run_job("weil", cfg, opts).report.to_text();
    }
    CHECK(strip_timing(first) == strip_timing(second));
    CHECK(first.find("seed = 99") != std::string::npos);
}

TEST_CASE("cli exit codes") {
    fs::path dir = fresh_dir("codes");
    fs::path cfg = dir / "job.cfg";
    write_file(cfg, "[base]\nkind = one\n[fe_grid]\nn_re = 4\nn_im = 4\n");

    CHECK(run_cli("--help") == 0);
    CHECK(run_cli("--version") == 0);
    CHECK(run_cli("verify --config " + cfg.string()) == 0);
    CHECK(run_cli("verify --config " + dir.string() + "/missing.cfg") == 2);
    CHECK(run_cli("frobnicate --config " + cfg.string()) == 2);
    CHECK(run_cli("verify") == 2);  // --config is required

    // a clause failure is exit 1, not an error
    fs::path scancfg = dir / "scan.cfg";
    write_file(scancfg,
               "[base]\nkind = zeta\n[scan]\nt_min = 13\nt_max = 15\n"
               "expected = 14.134725, 99.0\n");
    CHECK(run_cli("scan --config " + scancfg.string()) == 1);

    // strict perturbation with nothing planted is a configuration error
    fs::path strictcfg = dir / "strict.cfg";
    write_file(strictcfg, "[base]\nkind = zeta\n");
    CHECK(run_cli("perturb --strict --config " + strictcfg.string()) == 2);

    fs::remove_all(dir);
}

TEST_CASE("cli writes the report file") {
    fs::path dir = fresh_dir("report");
    fs::path cfg = dir / "job.cfg";
    write_file(cfg, "[base]\nkind = one\n[fe_grid]\nn_re = 4\nn_im = 4\n");
    CHECK(run_cli("verify --config " + cfg.string() + " --out " + (dir / "out").string()) == 0);
    std::string report = slurp(dir / "out" / "report.txt");
    CHECK(report.find("verdict: PASS") != std::string::npos);
    CHECK(report.find("[timing]") != std::string::npos);
    fs::remove_all(dir);
}

TEST_CASE("grid emission produces the documented csv") {
    fs::path dir = fresh_dir("grid");
    fs::path cfg = dir / "job.cfg";
    write_file(cfg,
               "[base]\nkind = one\n[grid]\nre_min = 0\nre_max = 1\n"
               "im_min = 0\nim_max = 1\nn_re = 2\nn_im = 2\n");
    CHECK(run_cli("grid --config " + cfg.string() + " --out " + (dir / "g").string()) == 0);
    std::string csv = slurp(dir / "g" / "grid.csv");
    std::stringstream ss(csv);
    std::string line;
    std::getline(ss, line);
    CHECK(line == "re,im,modulus,argument");
    int rows = 0;
    while (std::getline(ss, line)) {
        if (line.empty()) continue;
        ++rows;
        CHECK(line.substr(line.size() - 4) == ",1,0");  // modulus 1, argument 0
    }
    CHECK(rows == 4);

    // resolution beyond the cap is a configuration error
    write_file(cfg, "[base]\nkind = one\n[grid]\nn_re = 5000\n");
    CHECK(run_cli("grid --config " + cfg.string() + " --out " + (dir / "g2").string()) == 2);
    fs::remove_all(dir);
}

TEST_CASE("cli reports repeat modulo timing") {
    fs::path dir = fresh_dir("determinism");
    fs::path cfg = dir / "job.cfg";
    write_file(cfg, "[randomized]\ncount = 20\nq = 2\ngenus = 2\nseed = 5\n");
    CHECK(run_cli("weil --config " + cfg.string() + " --out " + (dir / "a").string()) == 0);
    CHECK(run_cli("weil --config " + cfg.string() + " --out " + (dir / "b").string()) == 0);
    CHECK(strip_timing(slurp(dir / "a" / "report.txt")) ==
          strip_timing(slurp(dir / "b" / "report.txt")));
    fs::remove_all(dir);
}
