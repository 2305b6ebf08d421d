#include <doctest.h>

#include <cmath>

#include "quenchscape/models.hpp"

using namespace qsc;

TEST_CASE("nn_ising_matrix examples") {
    SUBCASE("n=2, J=1, B=0: diag(2,-2,-2,2)") {
        NNIsingParams p{2, 1.0, 0.0, RealVec::Zero(2)};
        Mat H = nn_ising_matrix(p);
        CHECK(H(0, 0).real() == doctest::Approx(2.0));
        CHECK(H(1, 1).real() == doctest::Approx(-2.0));
        CHECK(H(2, 2).real() == doctest::Approx(-2.0));
        CHECK(H(3, 3).real() == doctest::Approx(2.0));
        CHECK(H.cwiseAbs().sum() == doctest::Approx(8.0));  // purely diagonal
    }
    SUBCASE("n=3, J=0, B=0, h=(1,2,3): |000> entry is 6") {
        RealVec h(3);
        h << 1.0, 2.0, 3.0;
        NNIsingParams p{3, 0.0, 0.0, h};
        CHECK(nn_ising_matrix(p)(0, 0).real() == doctest::Approx(6.0));
    }
    SUBCASE("n=2, J=0, B=1: X1+X2 spectrum [-2,0,0,2]") {
        NNIsingParams p{2, 0.0, 1.0, RealVec::Zero(2)};
        Spectrum s = diagonalize(build_nn_ising(p));
        CHECK(s.eigenvalues[0] == doctest::Approx(-2.0));
        CHECK(s.eigenvalues[1] == doctest::Approx(0.0));
        CHECK(s.eigenvalues[2] == doctest::Approx(0.0));
        CHECK(s.eigenvalues[3] == doctest::Approx(2.0));
    }
    SUBCASE("validation") {
        CHECK_THROWS_AS(nn_ising_matrix(NNIsingParams{0, 1.0, 0.0, RealVec()}),
                        std::invalid_argument);
        CHECK_THROWS_AS(nn_ising_matrix(NNIsingParams{3, 1.0, 0.0, RealVec::Zero(2)}),
                        std::invalid_argument);
    }
}

TEST_CASE("long_range_ising_matrix examples") {
    SUBCASE("n=2, J=1, alpha=1, B=0: diag(1,-1,-1,1)") {
        LongRangeIsingParams p{2, 1.0, 0.0, 1.0, RealVec::Zero(2)};
        Mat H = long_range_ising_matrix(p);
        CHECK(H(0, 0).real() == doctest::Approx(1.0));
        CHECK(H(1, 1).real() == doctest::Approx(-1.0));
        CHECK(H(2, 2).real() == doctest::Approx(-1.0));
        CHECK(H(3, 3).real() == doctest::Approx(1.0));
    }
    SUBCASE("n=3 pair weights: |000> entry is 1 + 1 + 1/2") {
        LongRangeIsingParams p{3, 1.0, 0.0, 1.0, RealVec::Zero(3)};
        CHECK(long_range_ising_matrix(p)(0, 0).real() == doctest::Approx(2.5));
    }
    SUBCASE("n=2, J=0, h=(c,0): c*X1 spectrum [-c,-c? no: +-c doubled]") {
        const double c = 0.8;
        RealVec h(2);
        h << c, 0.0;
        LongRangeIsingParams p{2, 0.0, 0.0, 1.0, h};
        Spectrum s = diagonalize(build_long_range_ising(p));
        CHECK(s.eigenvalues[0] == doctest::Approx(-c));
        CHECK(s.eigenvalues[1] == doctest::Approx(-c));
        CHECK(s.eigenvalues[2] == doctest::Approx(c));
        CHECK(s.eigenvalues[3] == doctest::Approx(c));
    }
    SUBCASE("alpha must be positive") {
        CHECK_THROWS_AS(long_range_ising_matrix(LongRangeIsingParams{2, 1.0, 0.0, 0.0,
                                                                     RealVec::Zero(2)}),
                        std::invalid_argument);
    }
}

TEST_CASE("model defaults") {
    PhaseDefaults nn = model_defaults(ModelKind::NearestNeighbor);
    CHECK(nn.W_thermal == doctest::Approx(5.0));
    CHECK(nn.W_mbl == doctest::Approx(50.0));
    CHECK(nn.B == doctest::Approx(-2.0));
    PhaseDefaults lr = model_defaults(ModelKind::LongRange);
    CHECK(lr.W_thermal == doctest::Approx(0.6));
    CHECK(lr.W_mbl == doctest::Approx(15.0));
    CHECK(lr.B == doctest::Approx(0.0));
}

TEST_CASE("sample_disorder") {
    SUBCASE("W = 0 gives zeros") {
        Rng rng = make_rng(1);
        RealVec h = sample_disorder(DisorderSpec{0.0}, 4, rng);
        CHECK(h.cwiseAbs().maxCoeff() == doctest::Approx(0.0));
    }
    SUBCASE("W = 50 stays in [-25, 25]") {
        Rng rng = make_rng(7);
        for (int trial = 0; trial < 20; ++trial) {
            RealVec h = sample_disorder(DisorderSpec{50.0}, 9, rng);
            CHECK(h.maxCoeff() <= 25.0);
            CHECK(h.minCoeff() >= -25.0);
        }
    }
    SUBCASE("fixed seed is deterministic") {
        Rng a = make_rng(derive_seed(42, "disorder"));
        Rng b = make_rng(derive_seed(42, "disorder"));
        RealVec ha = sample_disorder(DisorderSpec{5.0}, 6, a);
        RealVec hb = sample_disorder(DisorderSpec{5.0}, 6, b);
        CHECK((ha - hb).cwiseAbs().maxCoeff() == doctest::Approx(0.0));
    }
    SUBCASE("negative W rejected") {
        Rng rng = make_rng(1);
        CHECK_THROWS_AS(sample_disorder(DisorderSpec{-1.0}, 3, rng), std::invalid_argument);
    }
}

TEST_CASE("initial_state") {
    SUBCASE("all-zero, n=3") {
        StateVector psi = initial_state(InitialStateKind::AllZero, 3);
        CHECK(std::abs(psi.amplitudes()[0] - cplx(1.0, 0.0)) < 1e-15);
        CHECK(psi.amplitudes().tail(7).norm() == doctest::Approx(0.0));
    }
    SUBCASE("neel-x, n=1 is |+>") {
        StateVector psi = initial_state(InitialStateKind::NeelX, 1);
        double r = 1.0 / std::sqrt(2.0);
        CHECK(psi.amplitudes()[0].real() == doctest::Approx(r));
        CHECK(psi.amplitudes()[1].real() == doctest::Approx(r));
    }
    SUBCASE("neel-x, n=2 is |+-> = (1,-1,1,-1)/2") {
        StateVector psi = initial_state(InitialStateKind::NeelX, 2);
        CHECK(psi.amplitudes()[0].real() == doctest::Approx(0.5));
        CHECK(psi.amplitudes()[1].real() == doctest::Approx(-0.5));
        CHECK(psi.amplitudes()[2].real() == doctest::Approx(0.5));
        CHECK(psi.amplitudes()[3].real() == doctest::Approx(-0.5));
    }
}

TEST_CASE("apply_ansatz") {
    const int n = 5;
    StateVector psi0 = initial_state(InitialStateKind::AllZero, n);
    QuenchSchedule sched;
    sched.model = ModelKind::NearestNeighbor;
    sched.J = 1.0;
    sched.B = -2.0;

    SUBCASE("M = 0 leaves the state unchanged") {
        StateVector out = apply_ansatz(sched, n, psi0);
        CHECK((out.amplitudes() - psi0.amplitudes()).norm() < 1e-15);
    }
    SUBCASE("two identical quenches equal one doubled-time quench") {
        Rng rng = make_rng(derive_seed(3, "quench"));
        RealVec h = sample_disorder(DisorderSpec{5.0}, n, rng);
        QuenchSchedule twice = sched;
        twice.quenches = {Quench{h, 1.0, {}}, Quench{h, 1.0, {}}};
        QuenchSchedule once = sched;
        once.quenches = {Quench{h, 2.0, {}}};
        StateVector a = apply_ansatz(twice, n, psi0);
        StateVector b = apply_ansatz(once, n, psi0);
        CHECK(1.0 - fidelity(a, b) < 1e-9);
    }
    SUBCASE("single thermal quench: normalized, bounded observable") {
        Rng rng = make_rng(derive_seed(11, "quench"));
        QuenchSchedule one = sched;
        one.quenches = {Quench{sample_disorder(DisorderSpec{5.0}, n, rng), 1.0, {}}};
        StateVector out = apply_ansatz(one, n, psi0);
        CHECK(out.norm() == doctest::Approx(1.0).epsilon(1e-10));
        double zz = expectation_diagonal(out, pauli_zz_diagonal(n, 1, 2));
        CHECK(zz >= -1.0);
        CHECK(zz <= 1.0);
    }
    SUBCASE("per-quench B override is honored") {
        // With B = 0 override and |0...0>, diagonal dynamics only adds phases:
        // the observable stays at its initial value +1.
        QuenchSchedule s2 = sched;
        Rng rng = make_rng(derive_seed(5, "quench"));
        s2.quenches = {Quench{sample_disorder(DisorderSpec{5.0}, n, rng), 1.0, 0.0}};
        StateVector out = apply_ansatz(s2, n, psi0);
        CHECK(expectation_diagonal(out, pauli_zz_diagonal(n, 1, 2)) == doctest::Approx(1.0));
    }
}

TEST_CASE("pauli_zz observable") {
    RealVec d = pauli_zz_diagonal(2, 1, 2);
    CHECK(d[0] == doctest::Approx(1.0));
    CHECK(d[1] == doctest::Approx(-1.0));
    CHECK(d[2] == doctest::Approx(-1.0));
    CHECK(d[3] == doctest::Approx(1.0));
    DenseHermitian op = pauli_zz_observable(2, 1, 2);
    CHECK(op.trace() == doctest::Approx(0.0));
    CHECK(op.hs_norm() * op.hs_norm() == doctest::Approx(4.0));
}
