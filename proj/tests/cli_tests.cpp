// Spawns the radmom binary (path from RADMOM_BIN) and checks the CLI
// contract: formats, byte-identical method outputs, and exit codes.

#include <array>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>

namespace {

int failures = 0;

void check(bool ok, const std::string& what) {
    if (ok) {
        std::cout << "ok: " << what << '\n';
    } else {
        std::cout << "FAILED: " << what << '\n';
        ++failures;
    }
}

struct RunResult {
    int exit_code;
    std::string output;
};

RunResult run(const std::string& cmd) {
    std::FILE* pipe = popen((cmd + " 2>&1").c_str(), "r");
    if (!pipe) {
        std::cerr << "popen failed for: " << cmd << '\n';
        std::exit(1);
    }
    std::string out;
    std::array<char, 4096> buf{};
    std::size_t n = 0;
    while ((n = std::fread(buf.data(), 1, buf.size(), pipe)) > 0)
        out.append(buf.data(), n);
    const int status = pclose(pipe);
    return {WEXITSTATUS(status), out};
}

int count_lines(const std::string& s) {
    int n = 0;
    for (char c : s)
        if (c == '\n') ++n;
    return n;
}

}  // namespace

int main() {
    const char* bin_env = std::getenv("RADMOM_BIN");
    const std::string bin = bin_env ? bin_env : "./tools/radmom";
    std::cout << "binary under test: " << bin << '\n';

    const auto dir = std::filesystem::temp_directory_path() / "radmom_cli_tests";
    std::filesystem::create_directories(dir);
    const std::string one_pixel = (dir / "one_pixel.pgm").string();
    {
        std::ofstream f(one_pixel);
        f << "P2\n4 4\n255\n0 0 0 0\n0 0 0 0\n0 0 0 0\n0 0 5 0\n";  // 5 at (2,3)
    }
    const std::string noisy = (dir / "noisy.pgm").string();
    {
        std::ofstream f(noisy, std::ios::binary);
        f << "P5\n23 17\n255\n";
        unsigned state = 12345;
        for (int t = 0; t < 23 * 17; ++t) {
            state = state * 1103515245u + 12345u;
            f.put(static_cast<char>(state >> 24));
        }
    }
    const std::string broken = (dir / "broken.pgm").string();
    {
        std::ofstream f(broken);
        f << "P2\n2 2\n65535\n1 2 3 4\n";
    }

    {
        const auto r = run(bin + " compute " + one_pixel);
        check(r.exit_code == 0, "compute exits 0");
        check(r.output.find("\"m40\": \"80\"") != std::string::npos, "m40 = 80");
        check(r.output.find("\"m31\": \"120\"") != std::string::npos, "m31 = 120");
        check(r.output.find("\"m22\": \"180\"") != std::string::npos, "m22 = 180");
        check(r.output.find("\"m13\": \"270\"") != std::string::npos, "m13 = 270");
        check(r.output.find("\"m04\": \"405\"") != std::string::npos, "m04 = 405");
    }

    for (int order : {0, 2, 4, 6, 8}) {
        const auto drt = run(bin + " compute " + noisy + " --order " +
                             std::to_string(order) + " --method drt");
        const auto naive = run(bin + " compute " + noisy + " --order " +
                               std::to_string(order) + " --method naive");
        check(drt.exit_code == 0 && naive.exit_code == 0,
              "both methods exit 0 at order " + std::to_string(order));
        check(drt.output == naive.output,
              "byte-identical output at order " + std::to_string(order));
    }

    {
        const auto r = run(bin + " compute " + noisy + " --format csv");
        check(r.exit_code == 0, "csv format exits 0");
        check(r.output.rfind("p,q,value\n0,0,", 0) == 0, "csv header and first row");
        check(count_lines(r.output) == 16, "csv has header + 15 rows");
    }

    {
        const auto r = run(bin + " compute " + one_pixel + " --central");
        check(r.exit_code == 0, "central exits 0");
        check(r.output.find("\"mu00\": \"5/1\"") != std::string::npos, "mu00 = 5/1");
        check(r.output.find("\"mu22\": \"0/1\"") != std::string::npos,
              "point mass has zero mu22");
    }

    {
        const auto r = run(bin + " compute " + one_pixel + " --order 9");
        check(r.exit_code == 2, "order 9 exits 2");
        check(r.output.find("order must be <= 8") != std::string::npos,
              "order 9 names the cap");
    }
    check(run(bin + " compute " + dir.string() + "/missing.pgm").exit_code == 1,
          "missing file exits 1");
    check(run(bin + " compute " + broken).exit_code == 1,
          "maxval 65535 exits 1");
    {
        const auto r = run(bin + " compute " + broken);
        check(r.output.find("unsupported maxval") != std::string::npos,
              "maxval error is explained");
    }
    check(run(bin).exit_code == 2, "missing subcommand exits 2");
    check(run(bin + " compute").exit_code == 2, "missing path exits 2");
    check(run(bin + " compute " + noisy + " --method fancy").exit_code == 2,
          "unknown method exits 2");

    {
        const auto r = run(bin + " bench --sizes 200x200 --repeats 3");
        check(r.exit_code == 0, "bench exits 0");
        check(r.output.find(
                  "width,height,method,order,repeats,min_us,median_us,mults,adds\n") !=
                  std::string::npos,
              "bench csv header");
        check(count_lines(r.output) == 4, "comment + header + naive + drt rows");
        check(r.output.find("200,200,naive,4,3,") != std::string::npos,
              "naive row present");
        check(r.output.find("200,200,drt,4,3,") != std::string::npos,
              "drt row present");
        check(r.output.rfind("# ", 0) == 0, "comment line first");
    }
    {
        const std::string out_csv = (dir / "bench.csv").string();
        const auto r = run(bin + " bench --sizes 16x16,8x4 --repeats 2 --out " + out_csv);
        check(r.exit_code == 0, "bench --out exits 0");
        std::ifstream f(out_csv);
        std::string contents{std::istreambuf_iterator<char>(f),
                             std::istreambuf_iterator<char>()};
        check(count_lines(contents) == 6, "bench --out wrote 2 sizes x 2 methods");
    }
    check(run(bin + " bench --sizes 0x5 --repeats 1").exit_code == 2,
          "zero dimension exits 2");
    check(run(bin + " bench --sizes 5 --repeats 1").exit_code == 2,
          "malformed size token exits 2");
    check(run(bin + " bench --sizes 4x4 --repeats 0").exit_code == 2,
          "repeats 0 exits 2");

    std::cout << (failures == 0 ? "all CLI checks passed\n"
                                : "CLI checks FAILED\n");
    return failures == 0 ? 0 : 1;
}
