#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "vtl/cli.hpp"

#include "vtl/json_io.hpp"

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

using vtl::CommandConfig;

namespace {

struct RunResult {
    int code;
    std::string out;
    std::string err;
};

RunResult run(CommandConfig cfg) {
    std::ostringstream out, err;
    const int code = vtl::run(cfg, out, err);
    return {code, out.str(), err.str()};
}

CommandConfig base(const std::string& subcommand, int n) {
    CommandConfig cfg;
    cfg.subcommand = subcommand;
    cfg.n = n;
    return cfg;
}

int count_lines(const std::string& s) {
    int lines = 0;
    for (const char c : s) lines += c == '\n';
    return lines;
}

}  // namespace

TEST_CASE("emit explicit class table") {
    const RunResult r = run(base("emit", 3));
    CHECK(r.code == 0);
    CHECK(r.out.find("f_3 = ") != std::string::npos);
    CHECK(r.out.find("[3]_3") != std::string::npos);
    CHECK(r.out.find("[1]_3") != std::string::npos);
    CHECK(r.err.empty());
}

TEST_CASE("emit json round trips through the reader") {
    CommandConfig cfg = base("emit", 3);
    cfg.form = "recursive";
    cfg.format = "json";
    const RunResult r = run(cfg);
    CHECK(r.code == 0);
    const nlohmann::json j = nlohmann::json::parse(r.out);
    CHECK(vtl::element_from_json(j) == vtl::f_recursive(3));

    CommandConfig expand = base("emit", 3);
    expand.expand = true;
    expand.format = "json";
    const RunResult re = run(expand);
    CHECK(re.code == 0);
    CHECK(vtl::element_from_json(nlohmann::json::parse(re.out)) == vtl::f_recursive(3));
}

TEST_CASE("emit guards") {
    CHECK(run(base("emit", 9)).code == 2);
    CHECK(run(base("emit", 0)).code == 2);
    CommandConfig kernel1 = base("emit", 1);
    kernel1.form = "kernel";
    CHECK(run(kernel1).code == 2);
    CommandConfig heavy = base("emit", 7);
    heavy.form = "recursive";
    const RunResult r = run(heavy);
    CHECK(r.code == 2);
    CHECK(r.err.find("--force") != std::string::npos);
    CommandConfig no_n;
    no_n.subcommand = "emit";
    CHECK(run(no_n).code == 2);
}

TEST_CASE("eval rejects the excluded set by name") {
    CommandConfig cfg = base("eval", 2);
    cfg.eval_point = "0";
    const RunResult r = run(cfg);
    CHECK(r.code == 2);
    CHECK(r.err.find("excluded set {0}") != std::string::npos);
    CommandConfig cfg3 = base("eval", 3);
    cfg3.eval_point = "-2";
    const RunResult r3 = run(cfg3);
    CHECK(r3.code == 2);
    CHECK(r3.err.find("{0, -2}") != std::string::npos);
    CommandConfig bad = base("eval", 2);
    bad.eval_point = "not-a-number";
    CHECK(run(bad).code == 2);
    CommandConfig missing = base("eval", 2);
    CHECK(run(missing).code == 2);
}

TEST_CASE("eval at an admissible point") {
    CommandConfig cfg = base("eval", 2);
    cfg.eval_point = "7/2";
    const RunResult r = run(cfg);
    CHECK(r.code == 0);
    CHECK(r.out.find("f_2(d = 7/2)") != std::string::npos);
    CHECK(r.out.find("2/7") != std::string::npos);

    CommandConfig full = base("eval", 3);
    full.eval_point = "7/2";
    full.form = "recursive";
    full.format = "json";
    const RunResult rf = run(full);
    CHECK(rf.code == 0);
    const nlohmann::json j = nlohmann::json::parse(rf.out);
    CHECK(j.at("n") == 3);
    CHECK(j.at("d") == "7/2");
    CHECK(j.at("terms").size() == vtl::f_recursive(3).term_count());
}

TEST_CASE("trace adjudicates the closed forms") {
    const RunResult r = run(base("trace", 2));
    CHECK(r.code == 0);
    CHECK(r.out.find("alpha_product") != std::string::npos);
    CHECK(r.out.find("[matches]") != std::string::npos);
    CommandConfig cfg = base("trace", 3);
    cfg.format = "json";
    const RunResult rj = run(cfg);
    CHECK(rj.code == 0);
    const nlohmann::json j = nlohmann::json::parse(rj.out);
    CHECK(j.at("variants").at("alpha_product").at("matches") == true);
    CHECK(j.at("variants").at("d_power").at("matches") == false);
    CHECK(run(base("trace", 6)).code == 2);
}

TEST_CASE("enumerate") {
    const RunResult r = run(base("enumerate", 3));
    CHECK(r.code == 0);
    CHECK(count_lines(r.out) == 15);
    CommandConfig cfg = base("enumerate", 3);
    cfg.k_filter = 1;
    const RunResult rk = run(cfg);
    CHECK(rk.code == 0);
    CHECK(count_lines(rk.out) == 9);
    CommandConfig bad = base("enumerate", 3);
    bad.k_filter = 2;
    CHECK(run(bad).code == 2);
    CommandConfig json = base("enumerate", 2);
    json.format = "json";
    const RunResult rj = run(json);
    const nlohmann::json j = nlohmann::json::parse(rj.out);
    CHECK(j.at("count") == 3);
    CHECK(j.at("diagrams").size() == 3);
}

TEST_CASE("verify selects suites and sets the exit code") {
    CommandConfig cfg;
    cfg.subcommand = "verify";
    cfg.suites = {"scalars"};
    const RunResult r = run(cfg);
    CHECK(r.code == 0);
    CHECK(r.out.find("scalars") != std::string::npos);
    CHECK(r.out.find("FAIL") == std::string::npos);

    CommandConfig json = cfg;
    json.format = "json";
    json.suites = {"scalars", "coefficient_laws"};
    const RunResult rj = run(json);
    CHECK(rj.code == 0);
    const nlohmann::json j = nlohmann::json::parse(rj.out);
    CHECK(j.at("all_pass") == true);
    CHECK(j.at("reports").size() == 2);

    CommandConfig unknown = cfg;
    unknown.suites = {"nonsense"};
    CHECK(run(unknown).code == 2);

    CommandConfig skipped = cfg;
    skipped.suites = {"trace"};
    skipped.n = 9;
    const RunResult rs = run(skipped);
    CHECK(rs.code == 0);
    CHECK(rs.err.find("skipping") != std::string::npos);
}

TEST_CASE("relations subcommand") {
    const RunResult r = run(base("relations", 2));
    CHECK(r.code == 0);
    CHECK(r.out.find("relations") != std::string::npos);
    CHECK(run(base("relations", 1)).code == 2);
}

TEST_CASE("output redirection and unknown subcommand") {
    const std::string path = "/tmp/vtl_cli_test_output.txt";
    CommandConfig cfg = base("emit", 2);
    cfg.output = path;
    const RunResult r = run(cfg);
    CHECK(r.code == 0);
    CHECK(r.out.empty());
    std::ifstream in(path);
    std::stringstream content;
    content << in.rdbuf();
    CHECK(content.str().find("f_2 = ") != std::string::npos);
    std::remove(path.c_str());

    CommandConfig bogus;
    bogus.subcommand = "bogus";
    CHECK(run(bogus).code == 2);
}

TEST_CASE("argv front end") {
    const auto call = [](std::vector<const char*> argv) {
        std::ostringstream captured;
        std::streambuf* old = std::cout.rdbuf(captured.rdbuf());
        const int code = vtl::run_cli(static_cast<int>(argv.size()), argv.data());
        std::cout.rdbuf(old);
        return std::pair<int, std::string>(code, captured.str());
    };
    const auto [ok, text] = call({"vtl", "emit", "--n", "2", "--form", "recursive"});
    CHECK(ok == 0);
    CHECK(text.find("(T1 T2)(B1 B2)") != std::string::npos);

    ::setenv("VTL_FORMAT", "json", 1);
    const auto [jok, jtext] = call({"vtl", "emit", "--n", "2", "--form", "recursive"});
    ::unsetenv("VTL_FORMAT");
    CHECK(jok == 0);
    CHECK(vtl::element_from_json(nlohmann::json::parse(jtext)) == vtl::f_recursive(2));

    std::ostringstream devnull;
    std::streambuf* old_err = std::cerr.rdbuf(devnull.rdbuf());
    std::streambuf* old_out = std::cout.rdbuf(devnull.rdbuf());
    const int missing = vtl::run_cli(1, std::vector<const char*>{"vtl"}.data());
    const int bad_form =
        vtl::run_cli(6, std::vector<const char*>{"vtl", "emit", "--n", "2", "--form", "bogus"}.data());
    std::cerr.rdbuf(old_err);
    std::cout.rdbuf(old_out);
    CHECK(missing != 0);
    CHECK(bad_form != 0);
}
