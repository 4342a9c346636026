#include <doctest.h>

#include "hopfcyc/builtins.hpp"
#include "hopfcyc/cohomology.hpp"
#include "support.hpp"

using namespace hc;
using hc::test::el;
using hc::test::mat;

namespace {

MixedComplex zero_differentials(const std::vector<long>& dims) {
    MixedComplex M;
    M.name = "test";
    M.cutoff = static_cast<int>(dims.size()) - 1;
    M.dims = dims;
    for (int n = 0; n < M.cutoff; ++n) {
        M.b.emplace_back(static_cast<int>(dims[n + 1]), static_cast<int>(dims[n]));
        M.B.emplace_back(static_cast<int>(dims[n]), static_cast<int>(dims[n + 1]));
    }
    return M;
}

struct Built {
    CocyclicModule module;
    MixedComplex full;
    NormalizedModule normalized;
};

Built build(const Hopf& H, const Character& delta, const Element& sigma, int N) {
    Built b;
    b.module = connes_moscovici_module(H, delta, sigma, N);
    b.full = mixed_of_cocyclic(b.module);
    b.normalized = normalized_cm_module(H, b.module, b.full);
    return b;
}

std::vector<SparseMatrix> identities(const MixedComplex& M) {
    std::vector<SparseMatrix> f;
    for (long d : M.dims) f.push_back(SparseMatrix::identity(static_cast<int>(d)));
    return f;
}

SparseMatrix total_map(const std::vector<SparseMatrix>& f, int m) {
    std::vector<SparseMatrix> blocks;
    for (int q = m; q >= 0; q -= 2) blocks.push_back(f[q]);
    return block_diag(blocks);
}

// Cyclic cohomology from Connes' subcomplex of cochains with lambda phi = phi, lambda = (-1)^n tau_n.
int connes_hc(const CocyclicModule& M, const MixedComplex& mixed, int n) {
    auto lambda_fixed = [&](int k) {
        int dk = static_cast<int>(M.dims[k]);
        SparseMatrix lam = (k % 2 && !M.signed_tau) ? -M.tau[k] : M.tau[k];
        return kernel(SparseMatrix::identity(dk) - lam);
    };
    auto restricted = [&](int k) {
        Subspace src = lambda_fixed(k), tgt = lambda_fixed(k + 1);
        return restrict_map(mixed.b[k], src, tgt);
    };
    Subspace here = lambda_fixed(n);
    SparseMatrix d_in = n == 0 ? SparseMatrix(here.dim(), 0) : restricted(n - 1);
    return cohomology_dim(d_in, restricted(n)).dim;
}

}  // namespace

TEST_CASE("zero complex") {
    auto M = zero_differentials({0, 0, 0, 0, 0, 0, 0});
    for (int n = 0; n < 6; ++n) {
        CHECK(hochschild_cohomology(M, n).dim == 0);
        CHECK(cyclic_cohomology(M, n).dim == 0);
    }
    auto t = periodicity_and_hp(M, 6);
    for (int p = 0; p < 2; ++p) {
        CHECK(t.parity[p].dim == 0);
        CHECK(t.parity[p].stabilized);
    }
}

TEST_CASE("zero Hochschild differential") {
    auto M = zero_differentials({2, 3, 1, 4});
    for (int n = 0; n < 3; ++n) CHECK(hochschild_cohomology(M, n).dim == M.dims[n]);
    CHECK_THROWS_AS(hochschild_cohomology(M, 3), CutoffExceeded);
    CHECK_THROWS_AS(cyclic_cohomology(M, 3), CutoffExceeded);
}

TEST_CASE("single column bicomplex") {
    auto M = zero_differentials({1, 0, 0, 0, 0, 0, 0});
    for (int n = 0; n <= 5; ++n) CHECK(cyclic_cohomology(M, n).dim == (n % 2 == 0 ? 1 : 0));
    auto t = periodicity_and_hp(M, 6);
    CHECK(t.parity[0].stabilized);
    CHECK(t.parity[0].dim == 1);
    CHECK(t.parity[1].dim == 0);
}

TEST_CASE("broken mixed structures are refused") {
    auto M = zero_differentials({1, 1, 1});
    M.b[0] = mat({{1}});
    M.b[1] = mat({{1}});
    CHECK_THROWS_AS(hochschild_cohomology(M, 0), NoValidMixedStructure);
    CHECK_THROWS_AS(total_complex(M), NoValidMixedStructure);
}

TEST_CASE("ground field") {
    Hopf T = trivial_hopf();
    auto b = build(T, Character::counit(T), T.unit(), 6);
    CHECK(hochschild_cohomology(b.full, 0).dim == 1);
    CHECK(hochschild_cohomology(b.full, 1).dim == 0);
    auto t = periodicity_and_hp(b.full, 6);
    CHECK(t.hc == std::vector<int>{1, 0, 1, 0, 1, 0});
    CHECK(t.parity[0].stabilized);
    CHECK(t.parity[0].dim == 1);
    CHECK(t.parity[1].stabilized);
    CHECK(t.parity[1].dim == 0);
    CHECK(t.reliable.back() == false);
    for (int n = 0; n < 5; ++n) CHECK(t.reliable[n]);
}

TEST_CASE("HC^0 is the kernel of b in degree zero") {
    for (auto name : {"trivial", "group:Z2", "group:Z3", "sweedler"}) {
        CAPTURE(name);
        Hopf H = builtin(name);
        Element sigma = std::string(name) == "sweedler" ? H.basis(1) : H.unit();
        auto b = build(H, Character::counit(H), sigma, 4);
        for (const MixedComplex* M : {&b.full, &b.normalized.mixed})
            CHECK(cyclic_cohomology(*M, 0).dim == kernel(M->b[0]).dim());
    }
}

TEST_CASE("Hochschild cohomology through the bicomplex with B = 0") {
    Hopf H = cyclic_group_algebra(3);
    auto b = build(H, Character::counit(H), H.unit(), 4);
    MixedComplex M = b.full;
    for (auto& x : M.B) x = SparseMatrix(x.rows(), x.cols());
    for (int m = 0; m <= 3; ++m) {
        int expect = 0;
        for (int q = m; q >= 0; q -= 2) expect += hochschild_cohomology(b.full, q).dim;
        CHECK(cyclic_cohomology(M, m).dim == expect);
    }
}

TEST_CASE("induced maps") {
    Hopf Z2 = cyclic_group_algebra(2);
    auto b = build(Z2, Character::counit(Z2), Z2.unit(), 4);
    for (int n = 0; n <= 2; ++n) {
        auto h = induced_hochschild(identities(b.full), b.full, b.full, n);
        CHECK(h.iso);
        CHECK(h.matrix == SparseMatrix::identity(h.source_dim));
        auto c = induced_cyclic(identities(b.full), b.full, b.full, n);
        CHECK(c.iso);
        CHECK(c.matrix == SparseMatrix::identity(c.source_dim));
    }
    std::vector<SparseMatrix> zero;
    for (long d : b.full.dims) zero.emplace_back(static_cast<int>(d), static_cast<int>(d));
    auto z = induced_hochschild(zero, b.full, b.full, 0);
    REQUIRE(z.source_dim > 0);
    CHECK_FALSE(z.iso);
    CHECK(z.matrix.is_zero());

    Hopf T = trivial_hopf();
    auto t = build(T, Character::counit(T), T.unit(), 4);
    auto f = identities(t.full);
    f[2] = SparseMatrix(1, 1);
    CHECK_THROWS_AS(induced_hochschild(f, t.full, t.full, 1), NotChainMap);
}

TEST_CASE("normalization induces isomorphisms") {
    Hopf Z2 = cyclic_group_algebra(2);
    auto b = build(Z2, Character::counit(Z2), Z2.unit(), 4);
    for (int n = 0; n <= 2; ++n) {
        CHECK(induced_hochschild(b.normalized.P, b.full, b.normalized.mixed, n).iso);
        CHECK(induced_hochschild(b.normalized.U, b.normalized.mixed, b.full, n).iso);
        CHECK(induced_cyclic(b.normalized.U, b.normalized.mixed, b.full, n).iso);
    }
}

TEST_CASE("periodicity commutes with the normalization inclusion") {
    for (auto name : {"group:Z2", "sweedler"}) {
        CAPTURE(name);
        Hopf H = builtin(name);
        Element sigma = std::string(name) == "sweedler" ? H.basis(1) : H.unit();
        auto b = build(H, Character::counit(H), sigma, 4);
        auto Ts = total_complex(b.normalized.mixed), Tt = total_complex(b.full);
        REQUIRE(Ts.sign == Tt.sign);
        const auto& U = b.normalized.U;
        for (int m = 0; m + 2 <= 3; ++m) {
            CHECK(periodicity_shift(Tt, m) * total_map(U, m) == total_map(U, m + 2) * periodicity_shift(Ts, m));
            CHECK(Tt.D[m] * total_map(U, m) == total_map(U, m + 1) * Ts.D[m]);
        }
        auto ts = periodicity_and_hp(b.normalized.mixed, 4), tt = periodicity_and_hp(b.full, 4);
        CHECK(ts.hc == tt.hc);
        REQUIRE(ts.s_maps.size() == tt.s_maps.size());
        for (std::size_t i = 0; i < ts.s_maps.size(); ++i) CHECK(ts.s_maps[i].rank == tt.s_maps[i].rank);
    }
}

TEST_CASE("bicomplex agrees with Connes' cyclic subcomplex") {
    struct Case {
        const char* algebra;
        std::vector<int> delta;
        int sigma;
    };
    for (auto c : {Case{"trivial", {1}, 0}, Case{"group:Z2", {1, 1}, 0}, Case{"group:Z3", {1, 1, 1}, 0},
                   Case{"functions:Z2", {1, 0}, 0}, Case{"sweedler", {1, 1, 0, 0}, 1},
                   Case{"sweedler", {1, -1, 0, 0}, 0}}) {
        CAPTURE(c.algebra);
        CAPTURE(c.sigma);
        Hopf H = builtin(c.algebra);
        auto b = build(H, Character(H, el(c.delta)), H.basis(c.sigma), 4);
        for (int n = 0; n <= 3; ++n) {
            CAPTURE(n);
            CHECK(cyclic_cohomology(b.full, n).dim == connes_hc(b.module, b.full, n));
        }
    }
}
