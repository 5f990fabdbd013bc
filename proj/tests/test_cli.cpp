// Drives the detinv binary end to end. Takes the binary path as argv[1].

#include "detinv/invariants.hpp"
#include "detinv/mpoly.hpp"

#include <cstdio>
#include <cstdlib>
#include <iostream>
#include <string>
#include <sys/wait.h>

namespace {

int failures = 0;

void check(bool ok, const std::string& label) {
    if (!ok) {
        ++failures;
        std::cerr << "FAILED: " << label << "\n";
    }
}

struct RunResult {
    int code = -1;
    std::string out;
};

RunResult run(const std::string& cmd) {
    RunResult result;
    FILE* pipe = popen((cmd + " 2>/dev/null").c_str(), "r");
    if (!pipe) return result;
    char buffer[4096];
    while (std::size_t got = fread(buffer, 1, sizeof buffer, pipe))
        result.out.append(buffer, got);
    int status = pclose(pipe);
    if (WIFEXITED(status)) result.code = WEXITSTATUS(status);
    return result;
}

std::string strip(std::string text) {
    while (!text.empty() && (text.back() == '\n' || text.back() == ' ')) text.pop_back();
    return text;
}

}  // namespace

int main(int argc, char** argv) {
    if (argc < 2) {
        std::cerr << "usage: test_cli <path-to-detinv>\n";
        return 1;
    }
    const std::string detinv = argv[1];

    {
        auto r = run(detinv + " compute --case general --m 2 --n 2 --p 1 --invariant bm");
        check(r.code == 0, "bm compute exits 0");
        check(strip(r.out) == "q^3 + q^4 + q^6", "bm text output, got: " + strip(r.out));
    }
    {
        auto r = run(detinv + " compute --case symmetric --n 5 --p 1 --invariant bm");
        check(r.code == 0 && strip(r.out) == "q^10", "symmetric bm text output");
    }
    {
        auto r = run(detinv +
                     " compute --case skew --n 4 --p 0 --invariant cdr-section --format json");
        check(r.code == 0, "cdr-section json exits 0");
        check(strip(r.out) == R"([{"e":[6,6,0],"c":"1"}])",
              "cdr-section json bytes, got: " + strip(r.out));
    }
    {
        auto r = run(detinv +
                     " compute --case general --m 2 --n 2 --p 1 --invariant bm --format latex");
        check(r.code == 0 && strip(r.out) == "q^{3}+q^{4}+q^{6}", "latex output");
    }
    {
        auto r = run(detinv +
                     " compute --case general --m 3 --n 2 --p 1 --invariant cdr-intro --format json");
        check(r.code == 0, "cdr-intro json exits 0");
        detinv::MPoly parsed = detinv::MPoly::from_json(strip(r.out));
        check(parsed == detinv::cdr_intro_form(detinv::Space::general(3, 2), 1),
              "json round-trips to the in-memory polynomial");
    }
    {
        auto first = run(detinv + " compute --case skew --n 6 --p 2 --invariant bm --format json");
        auto second = run(detinv + " compute --case skew --n 6 --p 2 --invariant bm --format json");
        check(first.code == 0 && first.out == second.out, "output is byte-deterministic");
    }

    // argument validation -> exit 2
    check(run(detinv + " verify --suite nosuch").code == 2, "unknown suite exits 2");
    check(run(detinv + " compute --case nosuch --n 2 --p 0 --invariant bm").code == 2,
          "unknown case exits 2");
    check(run(detinv + " compute --case general --m 2 --n 2 --p 9 --invariant bm").code == 2,
          "out-of-range p exits 2");
    check(run(detinv + " compute --case general --m 2 --n 2 --p 1 --invariant nosuch").code == 2,
          "unknown invariant exits 2");
    check(run(detinv + " compute --case general --n 2 --p 1 --invariant bm").code == 2,
          "missing m exits 2");
    check(run(detinv + " compute --case general --m 2 --n 2 --p 2 --invariant loccoh-series")
                  .code == 2,
          "dense-orbit series request exits 2");
    check(run(detinv + " compute --case skew --n 4 --p 1 --invariant weight-bm").code == 2,
          "weight invariant outside the general case exits 2");

    {
        auto r = run(detinv + " table --case general --n 1..3 --m n..4 --p all --invariant btot"
                              " --format csv");
        check(r.code == 0, "btot table exits 0");
        check(r.out.substr(0, 14) == "case,m,n,p,bto", "csv header present");
        // C(3,2) * 2^2 = 12 at n=3, any m
        check(r.out.find("general,4,3,2,12") != std::string::npos, "btot cell value");
        check(r.out.find("general,2,2,1,4") != std::string::npos, "btot cell value 2");
    }
    {
        auto r = run(detinv + " table --case symmetric --n 2..5 --p all --invariant np"
                              " --format csv");
        check(r.code == 0, "np table exits 0");
        check(r.out.find("symmetric,2,5,5,1") != std::string::npos,
              "np at the dense orbit is 1");
    }
    {
        auto r = run(detinv + " table --case general --n 5..4 --invariant bm --format csv");
        check(r.code == 0, "empty range exits 0");
        check(strip(r.out) == "case,m,n,p,bm", "empty table has only a header");
    }
    {
        auto r = run(detinv + " table --case general --n 3 --m 3 --p 1 --invariant"
                              " bm,orbit-cohomology,np --format json");
        check(r.code == 0, "multi-invariant json table exits 0");
        check(r.out.find("\"np\": \"5\"") != std::string::npos, "np rendered in table json");
    }

    {
        auto r = run(detinv + " table --case skew --n 4..5 --p 1 --invariant bm"
                              " --format latex");
        check(r.code == 0, "latex table exits 0");
        check(r.out.find("\\begin{tabular}") != std::string::npos, "latex tabular emitted");
        check(r.out.find("$q^{5}") != std::string::npos, "latex cell has braced exponents");
    }
    {
        auto r = run(detinv + " weights --case general --n 3 --p 2");
        check(r.code == 0, "weights closure exits 0");
        check(r.out.find("\"violations\":[]") != std::string::npos, "no closure violations");
    }
    {
        auto r = run(detinv + " verify --max-n 2 --max-m 2 --format json");
        check(r.code == 0, "small verify exits 0");
        check(r.out.find("\"fail\": 0") != std::string::npos, "verify json summary");
    }
    {
        auto r = run(detinv + " weights --case skew --n 2 --p 1");
        check(r.code == 0, "tiny skew closure exits 0");
    }
    {
        const std::string path = "/tmp/detinv_cli_out.json";
        auto r = run(detinv + " compute --case general --m 2 --n 2 --p 1 --invariant bm"
                              " --format json -o " + path);
        check(r.code == 0 && r.out.empty(), "file output leaves stdout empty");
        FILE* f = fopen(path.c_str(), "r");
        check(f != nullptr, "output file written");
        if (f) {
            char buf[256] = {0};
            std::size_t got = fread(buf, 1, sizeof buf - 1, f);
            fclose(f);
            std::remove(path.c_str());
            check(strip(std::string(buf, got)) ==
                      R"([{"e":[3,0,0],"c":"1"},{"e":[4,0,0],"c":"1"},{"e":[6,0,0],"c":"1"}])",
                  "output file content");
        }
    }
    {
        auto r = run("DETINV_MAX_DEGREE=3 " + detinv +
                     " compute --case general --m 4 --n 4 --p 1 --invariant bm");
        check(r.code == 2, "degree cap exits 2");
    }

    if (failures == 0) std::cout << "test_cli: all checks passed\n";
    return failures == 0 ? 0 : 1;
}
