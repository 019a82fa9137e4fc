#pragma once

// Internal templated cores. Each public entry point instantiates these with
// NullOps (production; the counter calls compile away) while count_ops
// instantiates them with TallyOps, so counting never touches a timed run.

#include <algorithm>
#include <array>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "radmom/errors.hpp"
#include "radmom/image.hpp"
#include "radmom/int128.hpp"
#include "radmom/line_moments.hpp"
#include "radmom/moment_set.hpp"
#include "radmom/opcount.hpp"
#include "radmom/projection.hpp"
#include "radmom/solver.hpp"

namespace radmom::detail {

struct NullOps {
    void add(std::uint64_t) {}
    void mul(std::uint64_t) {}
};

struct TallyOps {
    OpCounts counts;
    void add(std::uint64_t n) { counts.additions += n; }
    void mul(std::uint64_t n) { counts.multiplications += n; }
};

// mass * base^r, or false if the product leaves 128 bits.
inline bool scaled_power_fits(uint128_t mass, std::uint64_t base, int r,
                              uint128_t& out) {
    uint128_t x = mass;
    for (int t = 0; t < r; ++t)
        if (__builtin_mul_overflow(x, static_cast<uint128_t>(base), &x))
            return false;
    out = x;
    return true;
}

constexpr uint128_t kInt128Limit = static_cast<uint128_t>(1) << 127;

template <class Ops>
Projection project_core(const Image& img, const SlopeRatio& s, Ops& ops) {
    const int M = img.width();
    const int N = img.height();
    const auto [k_min, k_max] = projection_range(s, M, N);
    Projection p{s, k_min,
                 std::vector<std::uint64_t>(
                     static_cast<std::size_t>(k_max - k_min + 1), 0)};
    const std::uint8_t* px = img.pixels().data();
    std::uint64_t* bins = p.sums.data();
    for (std::int64_t j = 0; j < N; ++j) {
        const std::uint8_t* row = px + j * M;
        std::int64_t idx = s.b * j - k_min;
        for (std::int64_t i = 0; i < M; ++i, idx += s.a) {
            bins[idx] += row[i];
            ops.add(1);
        }
    }
    return p;
}

// Single pass, five bin updates per pixel. Exactly 5*M*N bin additions.
template <class Ops>
std::array<Projection, 5> project_all_order4_core(const Image& img, Ops& ops) {
    const int M = img.width();
    const int N = img.height();
    const auto& slopes = order4_slopes();
    std::array<Projection, 5> out = {
        Projection{slopes[0], 0, std::vector<std::uint64_t>(M, 0)},
        Projection{slopes[1], 0, std::vector<std::uint64_t>(N, 0)},
        Projection{slopes[2], 0, std::vector<std::uint64_t>(M + N - 1, 0)},
        Projection{slopes[3], -(M - 1),
                   std::vector<std::uint64_t>(M + N - 1, 0)},
        Projection{slopes[4], 0, std::vector<std::uint64_t>(M + 2 * N - 2, 0)},
    };
    std::uint64_t* col = out[0].sums.data();
    std::uint64_t* vert = out[1].sums.data();
    const std::uint8_t* px = img.pixels().data();
    for (std::int64_t j = 0; j < N; ++j) {
        const std::uint8_t* row = px + j * M;
        std::uint64_t* diag = out[2].sums.data() + j;          // k = i + j
        std::uint64_t* anti = out[3].sums.data() + (M - 1 + j);  // k = j - i
        std::uint64_t* two = out[4].sums.data() + 2 * j;       // k = i + 2j
        for (std::int64_t i = 0; i < M; ++i) {
            const std::uint64_t v = row[i];
            col[i] += v;
            vert[j] += v;
            diag[i] += v;
            anti[-i] += v;
            two[i] += v;
            ops.add(5);
        }
    }
    return out;
}

// The eleven 1-D moments the 4th-order reconstruction consumes.
struct Order4LineMoments {
    int128_t h[5]{};  // M_r^{1:0},  r = 0..4
    int128_t v[5]{};  // M_r^{0:1},  r = 1..4 (v[0] unused; M00 comes from h)
    int128_t d[5]{};  // M_r^{1:1},  r = 2..4
    int128_t a[5]{};  // M_r^{-1:1}, r = 3..4
    int128_t s4 = 0;  // M_4^{1:2}
};

// Per-bin cost: 1:0 -> 4 mul / 5 add; 0:1 -> 4/4; 1:1 -> 4/3; -1:1 -> 4/2;
// 1:2 -> 2/3 (k^2 maintained by a running difference, so bin*k^4 takes two
// multiplications). Totals 14M+16N-12 mul and 13M+15N-11 add plus the 1:2
// init (1 mul, 2 add).
template <class Ops>
Order4LineMoments order4_line_moments(const std::array<Projection, 5>& projs,
                                      Ops& ops) {
    Order4LineMoments lm;
    {
        std::int64_t k = projs[0].offset;
        for (std::uint64_t bin : projs[0].sums) {
            const int128_t b = bin;
            lm.h[0] += b;
            int128_t t = b * k;
            lm.h[1] += t;
            t *= k;
            lm.h[2] += t;
            t *= k;
            lm.h[3] += t;
            t *= k;
            lm.h[4] += t;
            ops.mul(4);
            ops.add(5);
            ++k;
        }
    }
    {
        std::int64_t k = projs[1].offset;
        for (std::uint64_t bin : projs[1].sums) {
            int128_t t = static_cast<int128_t>(bin) * k;
            lm.v[1] += t;
            t *= k;
            lm.v[2] += t;
            t *= k;
            lm.v[3] += t;
            t *= k;
            lm.v[4] += t;
            ops.mul(4);
            ops.add(4);
            ++k;
        }
    }
    {
        std::int64_t k = projs[2].offset;
        for (std::uint64_t bin : projs[2].sums) {
            int128_t t = static_cast<int128_t>(bin) * k;
            t *= k;
            lm.d[2] += t;
            t *= k;
            lm.d[3] += t;
            t *= k;
            lm.d[4] += t;
            ops.mul(4);
            ops.add(3);
            ++k;
        }
    }
    {
        std::int64_t k = projs[3].offset;
        for (std::uint64_t bin : projs[3].sums) {
            int128_t t = static_cast<int128_t>(bin) * k;
            t *= k;
            t *= k;
            lm.a[3] += t;
            t *= k;
            lm.a[4] += t;
            ops.mul(4);
            ops.add(2);
            ++k;
        }
    }
    {
        const std::int64_t k0 = projs[4].offset;
        int128_t ksq = static_cast<int128_t>(k0) * k0;
        int128_t kodd = static_cast<int128_t>(k0) + k0 + 1;  // (k+1)^2 - k^2
        ops.mul(1);
        ops.add(2);
        for (std::uint64_t bin : projs[4].sums) {
            const int128_t b2 = static_cast<int128_t>(bin) * ksq;
            lm.s4 += b2 * ksq;
            ksq += kodd;
            kodd += 2;
            ops.mul(2);
            ops.add(3);
        }
    }
    return lm;
}

// Combining formulas: 16 multiplications (divisions included), 17 additions.
template <class Ops>
MomentSet reconstruct_order4_core(const std::array<Projection, 5>& projs,
                                  Ops& ops) {
    const auto& canon = order4_slopes();
    for (int t = 0; t < 5; ++t)
        if (!(projs[t].slope == canon[t]))
            throw std::invalid_argument(
                "reconstruct_order4 needs projections for slopes 1:0, 0:1, "
                "1:1, -1:1, 1:2 in that order; got " + projs[t].slope.str() +
                " at position " + std::to_string(t));

    const Order4LineMoments lm = order4_line_moments(projs, ops);

    auto sub = [&ops](int128_t x, int128_t y) {
        ops.add(1);
        return checked_sub(x, y);
    };
    auto add = [&ops](int128_t x, int128_t y) {
        ops.add(1);
        return checked_add(x, y);
    };
    auto cmul = [&ops](std::int64_t c, int128_t x) {
        ops.mul(1);
        return checked_mul(c, x);
    };
    auto divx = [&ops](int128_t num, std::int64_t den, const char* what) {
        ops.mul(1);
        return exact_div(num, den, what);
    };

    MomentSet ms(4);
    for (int r = 0; r <= 4; ++r) ms.set(r, 0, lm.h[r]);
    for (int r = 1; r <= 4; ++r) ms.set(0, r, lm.v[r]);

    const int128_t m20 = lm.h[2], m02 = lm.v[2];
    const int128_t m30 = lm.h[3], m03 = lm.v[3];
    const int128_t m40 = lm.h[4], m04 = lm.v[4];

    const int128_t m11 = divx(sub(sub(lm.d[2], m20), m02), 2, "M11");
    const int128_t m21 = divx(sub(add(lm.d[3], lm.a[3]), cmul(2, m03)), 6, "M21");
    const int128_t m12 = divx(sub(sub(lm.d[3], lm.a[3]), cmul(2, m30)), 6, "M12");
    const int128_t m22 = divx(
        sub(sub(add(lm.d[4], lm.a[4]), cmul(2, m40)), cmul(2, m04)), 12, "M22");
    const int128_t m13 = divx(
        sub(sub(add(sub(lm.s4, cmul(2, lm.d[4])), m40), cmul(14, m04)),
            cmul(12, m22)),
        24, "M13");
    const int128_t m31 = divx(
        sub(sub(sub(sub(lm.s4, m40), cmul(16, m04)), cmul(32, m13)),
            cmul(24, m22)),
        8, "M31");

    ms.set(1, 1, m11);
    ms.set(2, 1, m21);
    ms.set(1, 2, m12);
    ms.set(2, 2, m22);
    ms.set(1, 3, m13);
    ms.set(3, 1, m31);
    return ms;
}

template <class Ops>
MomentSet drt_order4_core(const Image& img, Ops& ops) {
    const auto projs = project_all_order4_core(img, ops);
    return reconstruct_order4_core(projs, ops);
}

// Direct evaluation of every monomial sum. Term is int64_t whenever the
// per-term bound 255*(maxdim-1)^r fits, int128_t otherwise; accumulation is
// always 128-bit. Per pixel: r + r(r+1)/2 multiplications, one addition per
// moment.
template <class Term, class Ops>
void oracle_accumulate(const Image& img, int r_max, int128_t acc[9][9],
                       Ops& ops) {
    const int M = img.width();
    const int N = img.height();
    const std::uint8_t* px = img.pixels().data();
    for (int j = 0; j < N; ++j) {
        const std::uint8_t* row = px + static_cast<std::size_t>(j) * M;
        for (int i = 0; i < M; ++i) {
            Term w = row[i];
            {
                Term t = w;
                acc[0][0] += t;
                ops.add(1);
                for (int p = 1; p <= r_max; ++p) {
                    t *= i;
                    acc[0][p] += t;
                    ops.mul(1);
                    ops.add(1);
                }
            }
            for (int q = 1; q <= r_max; ++q) {
                w *= j;
                ops.mul(1);
                Term t = w;
                acc[q][0] += t;
                ops.add(1);
                for (int p = 1; p <= r_max - q; ++p) {
                    t *= i;
                    acc[q][p] += t;
                    ops.mul(1);
                    ops.add(1);
                }
            }
        }
    }
}

template <class Ops>
MomentSet oracle_core(const Image& img, int r_max, Ops& ops) {
    if (r_max < 0 || r_max > 8)
        throw std::invalid_argument("moment order must be between 0 and 8");
    const std::uint64_t span =
        static_cast<std::uint64_t>(std::max(img.width(), img.height()) - 1);
    uint128_t accum_bound = 0;
    if (!scaled_power_fits(img.mass(), span, r_max, accum_bound) ||
        accum_bound >= kInt128Limit)
        throw std::invalid_argument(
            "image too large for exact 128-bit moments at order " +
            std::to_string(r_max));

    int128_t acc[9][9] = {};
    uint128_t term_bound = 0;
    if (scaled_power_fits(255, span, r_max, term_bound) &&
        term_bound <= static_cast<uint128_t>(INT64_MAX))
        oracle_accumulate<std::int64_t>(img, r_max, acc, ops);
    else
        oracle_accumulate<int128_t>(img, r_max, acc, ops);

    MomentSet ms(r_max);
    for (int q = 0; q <= r_max; ++q)
        for (int p = 0; p + q <= r_max; ++p) ms.set(p, q, acc[q][p]);
    return ms;
}

// Orders 0..r_max of one projection. Incremental powers: per bin,
// (r_max - 1) power multiplications plus r_max bin*power multiplications.
template <class Ops>
void moments_1d_batch_core(const Projection& proj, int r_max, int128_t* out,
                           Ops& ops) {
    for (int r = 0; r <= r_max; ++r) out[r] = 0;
    std::int64_t k = proj.offset;
    for (std::uint64_t bin : proj.sums) {
        const int128_t b = bin;
        out[0] = checked_add(out[0], b);
        ops.add(1);
        int128_t kp = k;
        for (int r = 1; r <= r_max; ++r) {
            if (r >= 2) {
                kp = checked_mul(kp, k);
                ops.mul(1);
            }
            out[r] = checked_add(out[r], checked_mul(b, kp));
            ops.mul(1);
            ops.add(1);
        }
        ++k;
    }
}

// Shared by moments_general and its instrumented twin. The exact linear
// solve is constant-size work and is not tallied.
template <class Ops>
MomentSet moments_general_core(const Image& img, int r_max, Ops& ops) {
    if (r_max < 2 || r_max > 8)
        throw std::invalid_argument("moment order must be between 2 and 8");

    const SlopePlan full = default_slope_plan(r_max);
    std::uint64_t max_abs_k = 0;
    for (const auto& s : full.slopes) {
        const auto [lo, hi] = projection_range(s, img.width(), img.height());
        const auto abs_lo = static_cast<std::uint64_t>(lo < 0 ? -lo : lo);
        const auto abs_hi = static_cast<std::uint64_t>(hi < 0 ? -hi : hi);
        max_abs_k = std::max({max_abs_k, abs_lo, abs_hi});
    }
    uint128_t bound = 0;
    if (!scaled_power_fits(img.mass(), max_abs_k, r_max, bound) ||
        bound >= kInt128Limit)
        throw std::invalid_argument(
            "image too large for exact 128-bit moments at order " +
            std::to_string(r_max));

    std::vector<Projection> projs;
    projs.reserve(full.slopes.size());
    for (const auto& s : full.slopes) projs.push_back(project_core(img, s, ops));

    std::vector<std::array<int128_t, 9>> vals(projs.size());
    for (std::size_t t = 0; t < projs.size(); ++t)
        moments_1d_batch_core(projs[t], r_max, vals[t].data(), ops);

    MomentSet out(r_max);
    out.set(0, 0, vals[0][0]);
    out.set(1, 0, vals[0][1]);
    out.set(0, 1, vals[1][1]);
    for (int r = 2; r <= r_max; ++r) {
        SlopePlan plan{r, {full.slopes.begin(), full.slopes.begin() + r + 1}};
        std::vector<Moment1D> row;
        row.reserve(r + 1);
        for (int t = 0; t <= r; ++t)
            row.push_back(Moment1D{plan.slopes[t], r, vals[t][r]});
        for (const auto& e : solve_exact(build_system(plan, row)))
            out.set(e.p, e.q, e.value);
    }
    return out;
}

}  // namespace radmom::detail
