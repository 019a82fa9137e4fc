#include "radmom/solver.hpp"

#include <stdexcept>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

#include "pipeline.hpp"

namespace radmom {

namespace {

using boost::multiprecision::cpp_int;
using boost::multiprecision::cpp_rational;

std::int64_t binom(int n, int k) {
    std::int64_t c = 1;
    for (int t = 1; t <= k; ++t) c = c * (n - k + t) / t;
    return c;
}

std::int64_t ipow(std::int64_t base, int e) {
    std::int64_t v = 1;
    for (int t = 0; t < e; ++t) v *= base;
    return v;
}

int128_t to_int128(const cpp_int& v) {
    static const cpp_int limit = cpp_int(1) << 127;
    if (v >= limit || v < -limit)
        throw internal_error("moment solution exceeds 128-bit range");
    return static_cast<int128_t>(v);
}

}  // namespace

SlopePlan default_slope_plan(int r) {
    if (r < 2 || r > 8)
        throw std::invalid_argument("slope plan order must be between 2 and 8");
    static const SlopeRatio canonical[9] = {
        {1, 0}, {0, 1}, {1, 1}, {-1, 1}, {1, 2},
        {2, 1}, {-1, 2}, {2, -1}, {1, 3}};
    SlopePlan plan{r, {}};
    plan.slopes.assign(canonical, canonical + r + 1);
    return plan;
}

BinomialSystem build_system(const SlopePlan& plan,
                            const std::vector<Moment1D>& moments) {
    const int r = plan.order;
    const std::size_t n = static_cast<std::size_t>(r) + 1;
    if (plan.slopes.size() != n)
        throw std::invalid_argument("slope plan needs " + std::to_string(n) +
                                    " slopes for order " + std::to_string(r));
    if (moments.size() != n)
        throw std::invalid_argument("expected " + std::to_string(n) +
                                    " 1-D moments, got " +
                                    std::to_string(moments.size()));

    BinomialSystem sys{r, {}, {}};
    sys.matrix.assign(n, std::vector<std::int64_t>(n, 0));
    sys.rhs.reserve(n);
    for (std::size_t t = 0; t < n; ++t) {
        if (!(moments[t].slope == plan.slopes[t]))
            throw std::invalid_argument(
                "1-D moment " + std::to_string(t) + " is for slope " +
                moments[t].slope.str() + ", plan expects " +
                plan.slopes[t].str());
        if (moments[t].order != r)
            throw std::invalid_argument(
                "1-D moment " + std::to_string(t) + " has order " +
                std::to_string(moments[t].order) + ", plan expects " +
                std::to_string(r));
        const std::int64_t a = plan.slopes[t].a;
        const std::int64_t b = plan.slopes[t].b;
        for (int p = r; p >= 0; --p)
            sys.matrix[t][r - p] = binom(r, p) * ipow(a, p) * ipow(b, r - p);
        sys.rhs.push_back(moments[t].value);
    }
    return sys;
}

std::vector<MomentEntry> solve_exact(const BinomialSystem& sys) {
    const int r = sys.order;
    const std::size_t n = static_cast<std::size_t>(r) + 1;
    if (sys.matrix.size() != n || sys.rhs.size() != n)
        throw std::invalid_argument("system size does not match its order");
    for (const auto& row : sys.matrix)
        if (row.size() != n)
            throw std::invalid_argument("system matrix is not square");

    // Exact rational elimination with partial pivoting. The matrices are at
    // most 9x9, so arbitrary-precision cost is irrelevant next to the O(M*N)
    // projection work.
    std::vector<std::vector<cpp_rational>> m(n,
                                             std::vector<cpp_rational>(n + 1));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) m[i][j] = sys.matrix[i][j];
        m[i][n] = cpp_rational(cpp_int(sys.rhs[i]));
    }

    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        cpp_rational best = abs(m[col][col]);
        for (std::size_t i = col + 1; i < n; ++i) {
            const cpp_rational cand = abs(m[i][col]);
            if (cand > best) {
                best = cand;
                pivot = i;
            }
        }
        if (best == 0)
            throw std::invalid_argument(
                "singular binomial system: slopes do not span order " +
                std::to_string(r));
        if (pivot != col) std::swap(m[pivot], m[col]);
        for (std::size_t i = col + 1; i < n; ++i) {
            if (m[i][col] == 0) continue;
            const cpp_rational f = m[i][col] / m[col][col];
            m[i][col] = 0;
            for (std::size_t j = col + 1; j <= n; ++j) m[i][j] -= f * m[col][j];
        }
    }

    std::vector<cpp_rational> x(n);
    for (std::size_t i = n; i-- > 0;) {
        cpp_rational acc = m[i][n];
        for (std::size_t j = i + 1; j < n; ++j) acc -= m[i][j] * x[j];
        x[i] = acc / m[i][i];
    }

    std::vector<MomentEntry> out;
    out.reserve(n);
    for (int p = r; p >= 0; --p) {
        const cpp_rational& v = x[static_cast<std::size_t>(r - p)];
        if (denominator(v) != 1)
            throw internal_error("non-integer solution for M" +
                                 std::to_string(p) + std::to_string(r - p));
        out.push_back(MomentEntry{p, r - p, to_int128(numerator(v))});
    }
    return out;
}

MomentSet moments_general(const Image& img, int r_max) {
    detail::NullOps ops;
    return detail::moments_general_core(img, r_max, ops);
}

}  // namespace radmom
