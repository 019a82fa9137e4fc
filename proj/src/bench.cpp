#include "radmom/bench.hpp"

#include <algorithm>
#include <chrono>
#include <ostream>
#include <stdexcept>

#include "radmom/line_moments.hpp"
#include "radmom/oracle.hpp"
#include "radmom/reconstruct.hpp"
#include "radmom/solver.hpp"

namespace radmom {

MomentSet compute_moments(const Image& img, Method method, int r_max) {
    if (method == Method::naive) return oracle_moments(img, r_max);
    if (r_max == 4) return drt_moments_order4(img);
    if (r_max >= 2) return moments_general(img, r_max);
    MomentSet ms(r_max);
    const Projection h = project(img, SlopeRatio{1, 0});
    ms.set(0, 0, moment_1d(h, 0).value);
    if (r_max == 1) {
        ms.set(1, 0, moment_1d(h, 1).value);
        ms.set(0, 1, moment_1d(project(img, SlopeRatio{0, 1}), 1).value);
    }
    return ms;
}

Image make_bench_image(int width, int height) {
    // Knuth MMIX LCG, seeded from the dimensions; top byte is the pixel.
    std::uint64_t state = 0x6d6f6d656e747321ULL ^
                          (static_cast<std::uint64_t>(static_cast<std::uint32_t>(width)) << 32) ^
                          static_cast<std::uint32_t>(height);
    std::vector<std::uint8_t> px(static_cast<std::size_t>(width) * height);
    for (auto& v : px) {
        state = state * 6364136223846793005ULL + 1442695040888963407ULL;
        v = static_cast<std::uint8_t>(state >> 56);
    }
    return Image(width, height, std::move(px));
}

std::vector<BenchRecord> bench(const std::vector<std::pair<int, int>>& sizes,
                               Method method, int repeats, int r_max) {
    if (repeats < 1) throw std::invalid_argument("repeats must be at least 1");

    using clock = std::chrono::steady_clock;
    std::vector<BenchRecord> records;
    records.reserve(sizes.size());

    for (const auto& [w, h] : sizes) {
        const Image img = make_bench_image(w, h);

        BenchRecord rec;
        rec.width = w;
        rec.height = h;
        rec.method = method;
        rec.order = r_max;
        rec.repeats = repeats;
        rec.ops = count_ops(img, method, r_max);

        const MomentSet reference = compute_moments(img, method, r_max);  // warm-up
        std::vector<std::int64_t> times_us;
        times_us.reserve(repeats);
        for (int t = 0; t < repeats; ++t) {
            const auto t0 = clock::now();
            const MomentSet ms = compute_moments(img, method, r_max);
            const auto t1 = clock::now();
            if (!(ms == reference))
                throw internal_error("benchmark repeats disagree");
            times_us.push_back(
                std::chrono::duration_cast<std::chrono::microseconds>(t1 - t0)
                    .count());
        }

        std::sort(times_us.begin(), times_us.end());
        rec.min_us = times_us.front();
        rec.median_us =
            (repeats % 2 == 1)
                ? times_us[repeats / 2]
                : (times_us[repeats / 2 - 1] + times_us[repeats / 2]) / 2;
        records.push_back(rec);
    }
    return records;
}

void emit_csv(const std::vector<BenchRecord>& records, std::ostream& out,
              const std::vector<std::string>& comments) {
    for (const auto& c : comments) out << "# " << c << '\n';
    out << "width,height,method,order,repeats,min_us,median_us,mults,adds\n";
    for (const auto& r : records)
        out << r.width << ',' << r.height << ',' << method_name(r.method) << ','
            << r.order << ',' << r.repeats << ',' << r.min_us << ','
            << r.median_us << ',' << r.ops.multiplications << ','
            << r.ops.additions << '\n';
    if (!out) throw std::runtime_error("failed to write benchmark CSV");
}

const std::vector<std::pair<int, int>>& default_bench_sizes() {
    static const std::vector<std::pair<int, int>> sizes = {
        {4032, 3024}, {3000, 3000}, {2000, 2000}, {1500, 1500},
        {1000, 1000}, {750, 750},   {400, 400},   {200, 200}};
    return sizes;
}

}  // namespace radmom
