#include <catch2/catch_amalgamated.hpp>

#include <sys/wait.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <string>

#include "meg/io.hpp"
#include "test_util.hpp"

namespace {

struct RunResult {
    int exit_code;
    std::string output;  // stdout only
};

RunResult run_cli(const std::string& args, const std::string& stdin_text = "") {
    std::string dir = std::string(std::getenv("TMPDIR") ? std::getenv("TMPDIR") : "/tmp");
    static int counter = 0;
    std::string in_path = dir + "/scss_cli_in_" + std::to_string(counter++) + ".txt";
    {
        std::ofstream f(in_path, std::ios::binary);
        f << stdin_text;
    }
    std::string cmd = std::string(SCSS_CLI_PATH) + " " + args + " < " + in_path +
                      " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string out;
    char buf[4096];
    size_t got;
    while ((got = fread(buf, 1, sizeof(buf), pipe)) > 0) out.append(buf, got);
    int status = pclose(pipe);
    std::remove(in_path.c_str());
    return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

std::string write_temp(const std::string& text) {
    std::string dir = std::string(std::getenv("TMPDIR") ? std::getenv("TMPDIR") : "/tmp");
    static int counter = 0;
    std::string path = dir + "/scss_cli_file_" + std::to_string(counter++) + ".txt";
    std::ofstream f(path, std::ios::binary);
    f << text;
    return path;
}

const std::string kC3 = "3 3\n0 1\n1 2\n2 0\n";

}  // namespace

TEST_CASE("gen output parses and round-trips through the library") {
    RunResult r = run_cli("gen --family triangles --n 12 --seed 3");
    REQUIRE(r.exit_code == 0);
    meg::DirectedGraph g = meg::parse_graph(r.output);
    CHECK(g.vertex_count() == 12);
    CHECK(meg::is_strongly_connected(g));
    CHECK(meg::max_cycle_length_at_most(g, 3));
}

TEST_CASE("solve-scss3 output passes verify") {
    RunResult graph = run_cli("gen --family triangles --n 15 --seed 9");
    REQUIRE(graph.exit_code == 0);
    std::string graph_path = write_temp(graph.output);

    RunResult solved = run_cli("solve-scss3 " + graph_path);
    REQUIRE(solved.exit_code == 0);
    std::string solution_path = write_temp(solved.output);

    RunResult verified = run_cli("verify " + graph_path + " " + solution_path);
    CHECK(verified.exit_code == 0);

    // A deliberately broken solution is rejected with exit code 1.
    RunResult broken = run_cli("verify " + graph_path + " " + write_temp("1\n0 1\n"));
    CHECK(broken.exit_code == 1);
}

TEST_CASE("approx and meg outputs pass verify") {
    RunResult graph = run_cli("gen --family random --n 7 --density 0.4 --seed 2");
    REQUIRE(graph.exit_code == 0);
    std::string graph_path = write_temp(graph.output);

    RunResult approx = run_cli("approx --k 5 " + graph_path);
    REQUIRE(approx.exit_code == 0);
    CHECK(run_cli("verify " + graph_path + " " + write_temp(approx.output)).exit_code == 0);

    RunResult megr = run_cli("meg --k 5 " + graph_path);
    REQUIRE(megr.exit_code == 0);
    CHECK(run_cli("verify --mode meg " + graph_path + " " + write_temp(megr.output)).exit_code ==
          0);
}

TEST_CASE("classify and reduce read from stdin") {
    RunResult cls = run_cli("classify -", kC3);
    REQUIRE(cls.exit_code == 0);
    CHECK(cls.output == "0 1 necessary\n1 2 necessary\n2 0 necessary\n");

    std::string k22 = "5 8\n0 1\n0 2\n3 0\n4 0\n1 3\n1 4\n2 3\n2 4\n";
    RunResult red = run_cli("reduce -", k22);
    REQUIRE(red.exit_code == 0);
    CHECK(red.output.substr(0, 4) == "4 4\n");
    // The instance body is itself parseable graph text.
    meg::DirectedGraph gp = meg::parse_graph(red.output);
    CHECK(gp.vertex_count() == 4);
    CHECK(gp.edge_count() == 4);
}

TEST_CASE("oracle agrees with solve-scss3 on a small instance") {
    std::string path = write_temp("5 8\n0 1\n0 2\n3 0\n4 0\n1 3\n1 4\n2 3\n2 4\n");
    RunResult fast = run_cli("solve-scss3 " + path);
    RunResult brute = run_cli("oracle --mode scss " + path);
    REQUIRE(fast.exit_code == 0);
    REQUIRE(brute.exit_code == 0);
    CHECK(fast.output.substr(0, 2) == "6\n");
    CHECK(brute.output.substr(0, 2) == "6\n");

    RunResult cycles = run_cli("oracle --mode cycles " + path);
    CHECK(cycles.output == "3\n");
}

TEST_CASE("bounds prints the published guarantee values") {
    RunResult r = run_cli("bounds --k 5 --l 5");
    REQUIRE(r.exit_code == 0);
    CHECK(r.output ==
          "exact_bound=1.645833333333\n"
          "simplified_bound=1.667156289070\n"
          "bounded_cycle_bound=1.395833333333\n");
}

TEST_CASE("exit codes distinguish infeasible input from usage errors") {
    CHECK(run_cli("solve-scss3 -", "2 1\n0 1\n").exit_code == 1);       // not SC
    CHECK(run_cli("solve-scss3 -", "totally not a graph\n").exit_code == 1);
    CHECK(run_cli("solve-scss3 /no/such/file").exit_code == 1);
    CHECK(run_cli("no-such-subcommand").exit_code == 2);
    CHECK(run_cli("approx --k 3 -", kC3).exit_code == 2);               // k below range
    CHECK(run_cli("approx --k 9 -", kC3).exit_code == 2);               // needs --allow-large-k
    CHECK(run_cli("gen --family triangles").exit_code == 2);            // missing --n
    CHECK(run_cli("--help").exit_code == 0);
}

TEST_CASE("output is deterministic") {
    RunResult a = run_cli("gen --family random --n 8 --density 0.35 --seed 11");
    RunResult b = run_cli("gen --family random --n 8 --density 0.35 --seed 11");
    CHECK(a.output == b.output);
    std::string path = write_temp(a.output);
    RunResult s1 = run_cli("approx --k 4 " + path);
    RunResult s2 = run_cli("approx --k 4 " + path);
    CHECK(s1.output == s2.output);
}
