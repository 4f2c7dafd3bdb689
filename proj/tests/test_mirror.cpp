#include <doctest.h>

#include "cycubic/mirror.hpp"
#include "cycubic/serialize.hpp"
#include "test_util.hpp"

using namespace cycubic;
using testutil::Rng;

namespace {

MirrorPipelineConfig quintic_config() {
    return mirror_config_from_json(load_json_file(FIXTURE_DIR "/quintic.json"));
}

MirrorPipelineConfig trivial_config() {
    return mirror_config_from_json(load_json_file(FIXTURE_DIR "/trivial.json"));
}

// Closed form for the holomorphic solution coefficients of the quintic
// operator: a_m = (5m)! / (m!)^5, exact.
Rational quintic_a(int m) {
    mpz_class num, fm;
    mpz_fac_ui(num.get_mpz_t(), 5 * m);
    mpz_fac_ui(fm.get_mpz_t(), m);
    mpz_class den = fm * fm * fm * fm * fm;
    return Rational(num) / Rational(den);
}

} // namespace

TEST_CASE("frobenius_solve: fixed examples") {
    // theta - z(theta + 1): geometric series
    PicardFuchsOperator geo;
    geo.order = 1;
    geo.coefficients = {{rat(0), rat(-1)}, {rat(1), rat(-1)}};
    FrobeniusBasis b = frobenius_solve(geo, 5);
    for (int m = 0; m <= 5; ++m)
        CHECK(b.solutions[0].part(0).coefficient({static_cast<unsigned>(m)}) == 1);

    // theta^2: omega_0 = 1, omega_1 = L
    PicardFuchsOperator t2;
    t2.order = 2;
    t2.coefficients = {{rat(0)}, {rat(0)}, {rat(1)}};
    FrobeniusBasis b2 = frobenius_solve(t2, 4);
    CHECK(b2.solutions[0].part(0) == FormalSeries::constant(1, 1, 4));
    CHECK(b2.solutions[0].log_degree() == 0);
    CHECK(b2.solutions[1].part(1) == FormalSeries::constant(1, 1, 4));
    CHECK(b2.solutions[1].part(0).is_zero());

    // quintic: omega_0 coefficients match (5m)!/(m!)^5
    FrobeniusBasis bq = frobenius_solve(quintic_config().op, 6);
    for (int m = 0; m <= 6; ++m)
        CHECK(bq.solutions[0].part(0).coefficient({static_cast<unsigned>(m)}) == quintic_a(m));
    CHECK(bq.solutions[0].part(0).coefficient({1}) == 120);
    CHECK(bq.solutions[0].part(0).coefficient({2}) == 113400);
}

TEST_CASE("frobenius_solve rejects non-maximally-unipotent operators") {
    PicardFuchsOperator op;
    op.order = 2;
    op.coefficients = {{rat(2)}, {rat(-3)}, {rat(1)}}; // (theta-1)(theta-2)
    CHECK_THROWS_WITH_AS(frobenius_solve(op, 4),
                         doctest::Contains("rational indicial roots"), DomainError);
    try {
        frobenius_solve(op, 4);
    } catch (const DomainError& e) {
        std::string msg = e.what();
        CHECK(msg.find("1") != std::string::npos);
        CHECK(msg.find("2") != std::string::npos);
    }
}

TEST_CASE("mirror_map: fixed examples") {
    // trivial family: q = z
    FrobeniusBasis bt = frobenius_solve(trivial_config().op, 6);
    MirrorMap mt = mirror_map(bt);
    CHECK(mt.q_of_z == FormalSeries::variable(0, 1, 6));
    CHECK(mt.z_of_q == FormalSeries::variable(0, 1, 6));

    // quintic: z(q) = q - 770 q^2 + ...
    FrobeniusBasis bq = frobenius_solve(quintic_config().op, 6);
    MirrorMap mq = mirror_map(bq);
    CHECK(mq.z_of_q.coefficient({1}) == 1);
    CHECK(mq.z_of_q.coefficient({2}) == -770);
    CHECK(mq.z_of_q.coefficient({3}) == 171525);

    // reversion contract at two truncation orders
    for (int ord : {6, 9}) {
        FrobeniusBasis b = frobenius_solve(quintic_config().op, ord);
        MirrorMap m = mirror_map(b);
        CHECK(m.q_of_z.compose(m.z_of_q) == FormalSeries::variable(0, 1, ord));
        CHECK(m.z_of_q.compose(m.q_of_z) == FormalSeries::variable(0, 1, ord));
    }
}

TEST_CASE("normalized_yukawa: fixed examples") {
    // trivial family: constant coupling passes through
    MirrorPipelineConfig triv = trivial_config();
    FrobeniusBasis bt = frobenius_solve(triv.op, 6);
    FormalSeries kt = normalized_yukawa(triv.algebraic_yukawa(6), bt, mirror_map(bt), 7);
    CHECK(kt == FormalSeries::constant(7, 1, 6));

    // quintic: K(q) = 5 + 2875 q + ...
    MirrorPipelineConfig q = quintic_config();
    FrobeniusBasis bq = frobenius_solve(q.op, 6);
    FormalSeries kq = normalized_yukawa(q.algebraic_yukawa(6), bq, mirror_map(bq), 5);
    CHECK(kq.coefficient({0}) == 5);
    CHECK(kq.coefficient({1}) == 2875);

    // constant-term mismatch is a pipeline error
    CHECK_THROWS_AS(normalized_yukawa(q.algebraic_yukawa(6), bq, mirror_map(bq), 6), DomainError);
}

TEST_CASE("extract_counts: fixed examples") {
    // K = 5 + 8 q/(1-q): n_1 = 8, higher counts zero
    FormalSeries k(1, 6);
    k.set_coefficient({0}, 5);
    for (int m = 1; m <= 6; ++m) k.set_coefficient({static_cast<unsigned>(m)}, 8);
    CurveCounts c = extract_counts(k, 5, 4);
    CHECK(c.n[0] == 8);
    for (int i = 1; i < 4; ++i) CHECK(c.n[i] == 0);
    CHECK(c.all_integral);

    // K = c0 + q + 8q^2: n_1 = 1, n_2 = (8 - 1)/8 flagged non-integer
    FormalSeries k2(1, 4);
    k2.set_coefficient({0}, 3);
    k2.set_coefficient({1}, 1);
    k2.set_coefficient({2}, 8);
    CurveCounts c2 = extract_counts(k2, 3, 2);
    CHECK(c2.n[0] == 1);
    CHECK(c2.n[1] == rat(7, 8));
    CHECK(c2.integral[0]);
    CHECK_FALSE(c2.integral[1]);
    CHECK_FALSE(c2.all_integral);

    // quintic: n_1 = 2875
    MirrorPipelineConfig q = quintic_config();
    FrobeniusBasis bq = frobenius_solve(q.op, 6);
    FormalSeries kq = normalized_yukawa(q.algebraic_yukawa(6), bq, mirror_map(bq), 5);
    CurveCounts cq = extract_counts(kq, 5, 3);
    CHECK(cq.n[0] == 2875);
    CHECK(cq.n[1] == 609250);
    CHECK(cq.n[2] == 317206375);
    CHECK(cq.all_integral);
}

TEST_CASE("property: extract_counts inverts synthesize_yukawa") {
    Rng rng(41);
    for (int trial = 0; trial < 20; ++trial) {
        int kmax = static_cast<int>(rng.range(1, 5));
        std::vector<Rational> n;
        for (int i = 0; i < kmax; ++i) n.push_back(Rational(rng.range(0, 50)));
        long topo = rng.range(1, 9);
        FormalSeries k = synthesize_yukawa(n, topo, 10);
        CurveCounts c = extract_counts(k, topo, kmax);
        for (int i = 0; i < kmax; ++i) CHECK(c.n[i] == n[i]);
    }
}

TEST_CASE("action_periods: fixed examples") {
    FrobeniusBasis bt = frobenius_solve(trivial_config().op, 5);
    ActionPeriodsReport rt = action_periods(bt);
    CHECK(rt.quotient_rule_consistent);
    REQUIRE(rt.heads.size() == 2);
    CHECK(rt.heads[0] == bt.solutions[0].str());

    FrobeniusBasis bq = frobenius_solve(quintic_config().op, 6);
    ActionPeriodsReport rq = action_periods(bq);
    CHECK(rq.quotient_rule_consistent);
    CHECK(rq.heads.size() == 4);
}

TEST_CASE("property: the operator annihilates every Frobenius solution, all fixtures") {
    for (const char* fixture : {"/quintic.json", "/trivial.json"}) {
        MirrorPipelineConfig cfg =
            mirror_config_from_json(load_json_file(std::string(FIXTURE_DIR) + fixture));
        FrobeniusBasis b = frobenius_solve(cfg.op, cfg.truncation_order);
        for (const auto& w : b.solutions) CHECK(cfg.op.apply(w).is_zero());
    }
    // also the order-1 geometric example
    PicardFuchsOperator geo;
    geo.order = 1;
    geo.coefficients = {{rat(0), rat(-1)}, {rat(1), rat(-1)}};
    FrobeniusBasis b = frobenius_solve(geo, 8);
    CHECK(geo.apply(b.solutions[0]).is_zero());
}

TEST_CASE("property: gauge twist leaves K(q) and the counts bit-identical") {
    Rng rng(42);
    MirrorPipelineConfig q = quintic_config();
    int ord = 8;
    FrobeniusBasis base = frobenius_solve(q.op, ord);
    MirrorMap maps = mirror_map(base);
    FormalSeries k = normalized_yukawa(q.algebraic_yukawa(ord), base, maps, 5);
    CurveCounts c = extract_counts(k, 5, 4);

    for (int trial = 0; trial < 5; ++trial) {
        FormalSeries r = testutil::random_unit(rng, 1, ord);
        FrobeniusBasis twisted;
        twisted.truncation_order = ord;
        for (const auto& w : base.solutions) twisted.solutions.push_back(w * r);
        MirrorMap tmaps = mirror_map(twisted);
        FormalSeries tk = normalized_yukawa(q.algebraic_yukawa(ord) * r * r, twisted, tmaps, 5);
        CHECK(tk == k); // structural equality = bit-identical terms
        CurveCounts tc = extract_counts(tk, 5, 4);
        for (int i = 0; i < 4; ++i) CHECK(tc.n[i] == c.n[i]);
    }
}

TEST_CASE("trivial family yields a constant coupling and zero counts") {
    MirrorPipelineConfig triv = trivial_config();
    FrobeniusBasis b = frobenius_solve(triv.op, triv.truncation_order);
    FormalSeries k =
        normalized_yukawa(triv.algebraic_yukawa(triv.truncation_order), b, mirror_map(b), 7);
    CurveCounts c = extract_counts(k, 7, 5);
    for (const auto& n : c.n) CHECK(n == 0);
}
