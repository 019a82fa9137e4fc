// radmom: exact raw image moments from discrete Radon projections.
//
//   radmom compute <image.pgm> [--order R] [--method drt|naive] [--central]
//                  [--format json|csv]
//   radmom bench [--sizes WxH,...] [--repeats N] [--order R] [--out path]
//
// Exit codes: 0 success, 1 input/compute error, 2 usage error.

#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "radmom/bench.hpp"
#include "radmom/pgm.hpp"
#include "radmom/reconstruct.hpp"
#include "radmom/report.hpp"

namespace {

int run_compute(const std::string& path, int order, const std::string& method,
                bool central, const std::string& format) {
    const radmom::Image img = radmom::read_pgm(path);
    const radmom::Method m =
        method == "naive" ? radmom::Method::naive : radmom::Method::drt;
    const radmom::MomentSet ms = radmom::compute_moments(img, m, order);
    std::optional<radmom::CentralMomentSet> cm;
    if (central) cm = radmom::central_moments(ms);
    const radmom::CentralMomentSet* cmp = cm ? &*cm : nullptr;
    std::cout << (format == "csv" ? radmom::moments_to_csv(ms, cmp)
                                  : radmom::moments_to_json(ms, cmp));
    return 0;
}

bool parse_sizes(const std::string& text,
                 std::vector<std::pair<int, int>>& out) {
    std::size_t pos = 0;
    while (pos <= text.size()) {
        const std::size_t comma = std::min(text.find(',', pos), text.size());
        const std::string tok = text.substr(pos, comma - pos);
        const std::size_t x = tok.find('x');
        if (x == std::string::npos) return false;
        try {
            const int w = std::stoi(tok.substr(0, x));
            const int h = std::stoi(tok.substr(x + 1));
            if (w < 1 || h < 1) return false;
            if (tok.substr(x + 1) != std::to_string(h) ||
                tok.substr(0, x) != std::to_string(w))
                return false;
            out.emplace_back(w, h);
        } catch (const std::exception&) {
            return false;
        }
        if (comma == text.size()) break;
        pos = comma + 1;
    }
    return !out.empty();
}

int run_bench(const std::string& sizes_text, int repeats, int order,
              const std::string& out_path) {
    std::vector<std::pair<int, int>> sizes;
    if (sizes_text.empty()) {
        sizes = radmom::default_bench_sizes();
    } else if (!parse_sizes(sizes_text, sizes)) {
        std::cerr << "error: invalid --sizes value '" << sizes_text
                  << "' (expected WxH[,WxH...] with positive dimensions)\n";
        return 2;
    }

    std::vector<radmom::BenchRecord> records;
    for (const auto& size : sizes) {
        for (const radmom::Method m :
             {radmom::Method::naive, radmom::Method::drt}) {
            const auto recs = radmom::bench({size}, m, repeats, order);
            records.insert(records.end(), recs.begin(), recs.end());
        }
    }

#ifdef NDEBUG
    const std::vector<std::string> comments = {"build: optimized"};
#else
    const std::vector<std::string> comments = {"build: debug"};
#endif
    if (out_path.empty()) {
        radmom::emit_csv(records, std::cout, comments);
    } else {
        std::ofstream f(out_path);
        if (!f) {
            std::cerr << "error: cannot open " << out_path << " for writing\n";
            return 1;
        }
        radmom::emit_csv(records, f, comments);
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact raw image moments via discrete Radon projections"};
    app.require_subcommand(1);

    const CLI::Validator order_check(
        [](std::string& s) -> std::string {
            int v = 0;
            try {
                v = std::stoi(s);
            } catch (const std::exception&) {
                return "order must be an integer";
            }
            if (v > 8) return "order must be <= 8";
            if (v < 0) return "order must be >= 0";
            return {};
        },
        "ORDER");

    auto* compute = app.add_subcommand("compute", "Compute moments of a PGM image");
    std::string path;
    int order = 4;
    std::string method = "drt";
    bool central = false;
    std::string format = "json";
    compute->add_option("path", path, "PGM image (P2 or P5)")->required();
    compute->add_option("--order", order, "maximum moment order (default 4)")
        ->check(order_check);
    compute->add_option("--method", method, "drt or naive (default drt)")
        ->check(CLI::IsMember({"drt", "naive"}));
    compute->add_flag("--central", central, "also print central moments");
    compute->add_option("--format", format, "json or csv (default json)")
        ->check(CLI::IsMember({"json", "csv"}));

    auto* bench_cmd = app.add_subcommand("bench", "Benchmark naive vs drt");
    std::string sizes_text;
    int repeats = 31;
    int bench_order = 4;
    std::string out_path;
    bench_cmd->add_option("--sizes", sizes_text, "WxH,WxH,... (default: the eight stock sizes)");
    bench_cmd->add_option("--repeats", repeats, "timed repeats per size (default 31)")
        ->check(CLI::PositiveNumber);
    bench_cmd->add_option("--order", bench_order, "moment order (default 4)")
        ->check(order_check);
    bench_cmd->add_option("--out", out_path, "CSV destination (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help, --version
        app.exit(e);
        return 2;
    }

    try {
        if (compute->parsed())
            return run_compute(path, order, method, central, format);
        return run_bench(sizes_text, repeats, bench_order, out_path);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
}
