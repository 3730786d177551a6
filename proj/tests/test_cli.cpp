// End-to-end checks of the command-line tool: exit-code contract and
// deterministic artifacts. The binary path is injected as SKQ_CLI_PATH.
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#ifndef SKQ_CLI_PATH
#error "SKQ_CLI_PATH must be defined"
#endif

namespace {

int g_failures = 0;

void check(bool ok, const std::string& what) {
    std::printf("%s %s\n", ok ? "ok  " : "FAIL", what.c_str());
    if (!ok) ++g_failures;
}

int run_cli(const std::string& args) {
    std::string cmd = std::string(SKQ_CLI_PATH) + " " + args + " 2>/dev/null";
    int status = std::system(cmd.c_str());
#ifdef _WIN32
    return status;
#else
    if (status == -1) return -1;
    return WEXITSTATUS(status);
#endif
}

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream out;
    out << in.rdbuf();
    return out.str();
}

std::size_t count_lines(const std::string& text) {
    std::size_t n = 0;
    for (char c : text)
        if (c == '\n') ++n;
    return n;
}

}  // namespace

int main() {
    const std::string spec35 =
        "--p 5 --k 3 --f '[[0,0,1]]' --g '[[0,0,0,1]]'";

    check(run_cli("spectrum " + spec35 + " --output cli_spec.json") == 0,
          "spectrum S(3,5; X^2, X^3) exits 0");
    std::string spec_out = slurp("cli_spec.json");
    check(spec_out.find("\"entries\"") != std::string::npos &&
              spec_out.find("\"moments\"") != std::string::npos,
          "spectrum output carries entries and moments");

    {
        std::ofstream f("cli_spec_in.json");
        f << R"({"p":5,"e":1,"k":3,"f":[[0,0,1]],"g":[[0,0,0,1]]})";
    }
    check(run_cli("spectrum --spec-file cli_spec_in.json --output "
                  "cli_spec2.json") == 0 &&
              slurp("cli_spec2.json") == spec_out,
          "spec-file input matches inline flags byte-for-byte");

    check(run_cli("spectrum --p 5 --k 3 --f '[[0,0,1]]' --g '[[0,1,1]]'") == 2,
          "even coefficient in g is rejected with exit 2");
    check(run_cli("spectrum --p 5 --k 3 --f 'not json' --g '[[0,1]]'") == 2,
          "malformed polynomial JSON is rejected with exit 2");
    check(run_cli("spectrum " + spec35 + " --work-cap 10") == 3,
          "work cap refusal exits 3");

    check(run_cli("verify thm3 --q 5 --k 4") == 0, "verify thm3 q=5 k=4 passes");
    check(run_cli("verify thm3 --q 7 --k 4") == 4,
          "verify thm3 q=7 violates the hypothesis, exit 4");
    check(run_cli("verify remark3 --qmax 29") == 0, "verify remark3 qmax=29");
    check(run_cli("verify cheeger") == 0, "verify cheeger");

    check(run_cli("export --what edges --p 2 --k 3 --f '[[0,1]]' --g '[[0,1]]'"
                  " --format edgelist --output cli_e1.txt") == 0 &&
              run_cli("export --what edges --p 2 --k 3 --f '[[0,1]]' --g "
                      "'[[0,1]]' --format edgelist --output cli_e2.txt") == 0 &&
              slurp("cli_e1.txt") == slurp("cli_e2.txt") &&
              count_lines(slurp("cli_e1.txt")) == 8,
          "edge export is deterministic with 8 lines for S(3,2)");

    check(run_cli("export --what connection-set " + spec35 +
                  " --output cli_cs.txt") == 0 &&
              count_lines(slurp("cli_cs.txt")) == 20,
          "connection set of S(3,5) has 20 rows");

    check(run_cli("export --what distance-two --bipartite-family wenger --bk 2"
                  " --side lines --p 3 --format edgelist --output cli_d2.txt") ==
                  0 &&
              run_cli("export --what edges --p 3 --k 3 --f '[[0,0,1]]' --g "
                      "'[[0,1]]' --format edgelist --output cli_s33.txt") == 0 &&
              slurp("cli_d2.txt") == slurp("cli_s33.txt") &&
              !slurp("cli_d2.txt").empty(),
          "Wenger distance-two on lines matches S(3,3; X^2, X) byte-for-byte");

    check(run_cli("family --q-list 5,11 --f-templates X^2 --g-templates X^3"
                  " --format csv --output cli_fam.csv") == 0 &&
              slurp("cli_fam.csv").rfind("q,lambda2,gap", 0) == 0,
          "family table over q in {5,11} in CSV");

    if (g_failures > 0) {
        std::printf("%d CLI check(s) failed\n", g_failures);
        return 1;
    }
    std::printf("all CLI checks passed\n");
    return 0;
}
