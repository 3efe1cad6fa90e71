#include <doctest.h>

#include <functional>
#include <tuple>

#include "common.hpp"
#include "ordss/json_io.hpp"
#include "ordss/random.hpp"
#include "ordss/scheme.hpp"

using namespace ordss;
using namespace ordss::testing;

namespace {

const FieldOrder q2(2);

// All feasible parameter triples with n <= max_n, alpha <= max_alpha.
std::vector<std::tuple<Index, Index, Index>> sweep_grid(Index max_n, Index max_alpha) {
    std::vector<std::tuple<Index, Index, Index>> grid;
    for (Index n = 1; n <= max_n; ++n) {
        for (Index alpha = 1; alpha <= max_alpha; ++alpha) {
            for (Index m = 1; m <= n * alpha; ++m) {
                const Index k = (m + alpha - 1) / alpha;
                if (k <= n) grid.emplace_back(n, alpha, m);
            }
        }
    }
    return grid;
}

}  // namespace

TEST_CASE("ring parameter validation") {
    const RingParams p(4, 2, 5, q2);
    CHECK(p.k() == 3);
    CHECK(p.gamma() == 1);
    CHECK_THROWS_AS(RingParams(2, 2, 5, q2), InfeasibleError);  // n*alpha < M
    CHECK_THROWS_AS(RingParams(3, 2, 0, q2), InfeasibleError);
    CHECK_THROWS_AS(RingParams(2, 1, 3, FieldOrder(3)), InfeasibleError);
    CHECK_NOTHROW(RingParams(2, 2, 4, q2));
}

TEST_CASE("storability keeps k within the ring") {
    // k = ceil(M/alpha) <= n follows from M <= n*alpha; confirm on the grid.
    for (const auto& [n, alpha, m] : sweep_grid(8, 4)) {
        CHECK(RingParams(n, alpha, m, q2).k() <= n);
    }
}

TEST_CASE("reconstruct bound values") {
    CHECK(reconstruct_bound(RingParams(5, 2, 5, q2)) == 9);
    CHECK(reconstruct_bound(RingParams(4, 2, 5, q2)) == 9);
    CHECK(reconstruct_bound(RingParams(2, 7, 5, q2)) == 5);  // alpha >= M, k = 1
    CHECK(reconstruct_bound(RingParams(3, 1, 3, q2)) == 6);  // 3 + 2 + 1
}

TEST_CASE("repair bound is the data size") {
    CHECK(repair_bound(RingParams(4, 2, 5, q2)) == 5);
    CHECK(repair_bound(RingParams(5, 2, 5, q2)) == 5);
    CHECK(repair_bound(RingParams(2, 7, 5, q2)) == 5);
}

TEST_CASE("reconstruct bound is non-increasing in alpha") {
    const Index m = 7;
    Index previous = -1;
    for (Index alpha = 1; alpha <= m + 2; ++alpha) {
        const Index k = (m + alpha - 1) / alpha;
        const RingParams p(k, alpha, m, q2);  // smallest feasible ring
        const Index bound = reconstruct_bound(p);
        if (previous >= 0) CHECK(bound <= previous);
        CHECK(bound == k * m - k * (k - 1) * alpha / 2);
        previous = bound;
    }
}

TEST_CASE("ED scheme of (4,2,5) stores the documented node vectors") {
    const Scheme s = build_ed_scheme(4, 2, 5);
    CHECK(mat_equal(s.generator(), golden_5x8()));

    const FpMatrix n3 = s.node_matrix(3);
    CHECK(mat_equal(n3.col(0), unit(q2, 5, 5)));
    CHECK(mat_equal(n3.col(1), unit(q2, 5, 1) + unit(q2, 5, 4)));

    const FpMatrix n4 = s.node_matrix(4);
    CHECK(mat_equal(n4.col(0), unit(q2, 5, 2) + unit(q2, 5, 5)));
    CHECK(mat_equal(n4.col(1), unit(q2, 5, 3) + unit(q2, 5, 4) + unit(q2, 5, 5)));
}

TEST_CASE("ED scheme of (5,2,5) is two identity blocks") {
    const Scheme s = build_ed_scheme(5, 2, 5);
    FpMatrix expected = fp_zeros(q2, 5, 10);
    expected.leftCols(5) = fp_identity(q2, 5);
    expected.rightCols(5) = fp_identity(q2, 5);
    CHECK(mat_equal(s.generator(), expected));
    CHECK(mat_equal(s.node_matrix(3).col(0), unit(q2, 5, 5)));
    CHECK(mat_equal(s.node_matrix(3).col(1), unit(q2, 5, 1)));
}

TEST_CASE("infeasible construction requests") {
    CHECK_THROWS_AS(build_ed_scheme(2, 2, 5), InfeasibleError);
    CHECK_THROWS_AS(build_mds_scheme(2, 2, 5), InfeasibleError);
}

TEST_CASE("MDS scheme of (2,2,3) is the expected Vandermonde over GF(5)") {
    const Scheme s = build_mds_scheme(2, 2, 3);
    CHECK(s.params().q.value() == 5);
    const FpMatrix expected =
        fp_matrix(FieldOrder(5), {{1, 1, 1, 1}, {0, 1, 2, 3}, {0, 1, 4, 4}});
    CHECK(mat_equal(s.generator(), expected));

    // Every 3-column subset is independent.
    for (Index skip = 0; skip < 4; ++skip) {
        std::vector<FpVector> cols;
        for (Index j = 0; j < 4; ++j) {
            if (j != skip) cols.push_back(s.generator().col(j));
        }
        const FpMatrix sub = from_columns(s.params().q, cols);
        CHECK(mat_rank(sub) == 3);
        CHECK(oracle_rank(sub) == 3);
    }
}

TEST_CASE("single-node MDS scheme stores everything") {
    const Scheme s = build_mds_scheme(1, 4, 4);
    CHECK(s.params().k() == 1);
    CHECK(mat_rank(s.generator()) == 4);
    CHECK(validate_ordss(s).ok());
}

TEST_CASE("every M-column subset of a small MDS scheme has full rank") {
    for (const auto& [n, alpha, m] : sweep_grid(3, 4)) {
        if (n * alpha > 12) continue;
        const Scheme s = build_mds_scheme(n, alpha, m);
        const Index cols = n * alpha;
        std::vector<Index> subset(static_cast<std::size_t>(m));
        // Walk all m-combinations of 0..cols-1.
        std::function<bool(Index, Index)> walk = [&](Index pos, Index lowest) {
            if (pos == m) {
                std::vector<FpVector> chosen;
                for (Index idx : subset) chosen.push_back(s.generator().col(idx));
                return mat_rank(from_columns(s.params().q, chosen)) == m;
            }
            for (Index c = lowest; c <= cols - (m - pos); ++c) {
                subset[static_cast<std::size_t>(pos)] = c;
                if (!walk(pos + 1, c + 1)) return false;
            }
            return true;
        };
        CHECK(walk(0, 0));
    }
}

TEST_CASE("validate_ordss accepts both example schemes") {
    const OrdssReport r1 = validate_ordss(build_ed_scheme(4, 2, 5));
    CHECK(r1.condition_i_ok);
    CHECK(r1.condition_ii_ok);
    CHECK_FALSE(r1.failing_window.has_value());
    CHECK(validate_ordss(build_ed_scheme(5, 2, 5)).ok());
}

TEST_CASE("validate_ordss flags a duplicated column") {
    // n=3, alpha=2, M=4; node 1 holds {e1, e1}; the rest fill the basis.
    const FpMatrix g = from_columns(
        q2, {unit(q2, 4, 1), unit(q2, 4, 1), unit(q2, 4, 2), unit(q2, 4, 3),
             unit(q2, 4, 4), unit(q2, 4, 1) + unit(q2, 4, 2)});
    const Scheme s(RingParams(3, 2, 4, q2), g);
    const OrdssReport report = validate_ordss(s);
    CHECK_FALSE(report.condition_i_ok);
    REQUIRE(report.failing_window.has_value());
    CHECK(*report.failing_window == 1);
}

TEST_CASE("validate_ordss with k = 1 checks each node alone") {
    // Node 2 stores a dependent pair, so it cannot serve its user by itself.
    const FpMatrix g = from_columns(
        q2, {unit(q2, 2, 1), unit(q2, 2, 2), unit(q2, 2, 1), unit(q2, 2, 1)});
    const Scheme s(RingParams(2, 2, 2, q2), g);
    const OrdssReport report = validate_ordss(s);
    CHECK(report.condition_i_ok);  // vacuous for k = 1
    CHECK_FALSE(report.condition_ii_ok);
    REQUIRE(report.failing_window.has_value());
    CHECK(*report.failing_window == 2);
}

TEST_CASE("both constructions validate across the sweep") {
    for (const auto& [n, alpha, m] : sweep_grid(8, 4)) {
        CAPTURE(n);
        CAPTURE(alpha);
        CAPTURE(m);
        const Scheme ed = build_ed_scheme(n, alpha, m);
        CHECK(validate_ordss(ed).ok());
        const Scheme mds = build_mds_scheme(n, alpha, m);
        CHECK(validate_ordss(mds).ok());
        CHECK(mat_rank(ed.generator()) == m);
        CHECK(mat_rank(mds.generator()) == m);
    }
}

TEST_CASE("node_symbols match the documented example") {
    const Scheme s = build_ed_scheme(4, 2, 5);
    SplitMix64 rng(5);
    for (int trial = 0; trial < 8; ++trial) {
        const FpRowVector x = random_data_vector(q2, 5, rng.next());
        const FpRowVector stored = node_symbols(s, x, 4);
        CHECK(stored(0) == x(1) + x(4));             // x2 + x5
        CHECK(stored(1) == x(2) + x(3) + x(4));      // x3 + x4 + x5
        const FpRowVector first = node_symbols(s, x, 1);
        CHECK(first(0) == x(0));
        CHECK(first(1) == x(1));
    }
}

TEST_CASE("node_symbols rejects bad input") {
    const Scheme s = build_ed_scheme(4, 2, 5);
    const FpRowVector short_x = fp_row(q2, {1, 0, 1});
    CHECK_THROWS_AS(node_symbols(s, short_x, 1), DimensionError);
    const FpRowVector x = fp_row(q2, {1, 0, 1, 0, 1});
    CHECK_THROWS_AS(node_symbols(s, x, 0), DimensionError);
    CHECK_THROWS_AS(node_symbols(s, x, 5), DimensionError);
}

TEST_CASE("scheme JSON round trip is byte identical") {
    const Scheme s = build_ed_scheme(4, 2, 5);
    const std::string once = dump_json(scheme_to_json(s));
    const Scheme reloaded = scheme_from_json(nlohmann::json::parse(once));
    CHECK(mat_equal(reloaded.generator(), s.generator()));
    CHECK(reloaded.params().n == 4);
    CHECK(reloaded.params().q.value() == 2);
    const std::string twice = dump_json(scheme_to_json(reloaded));
    CHECK(once == twice);
}

TEST_CASE("scheme JSON rejects out-of-field entries and missing keys") {
    nlohmann::json j = scheme_to_json(build_ed_scheme(4, 2, 5));
    j["generator"][0][0] = 7;
    CHECK_THROWS_AS(scheme_from_json(j), std::invalid_argument);
    j.erase("generator");
    CHECK_THROWS_AS(scheme_from_json(j), std::invalid_argument);
}
