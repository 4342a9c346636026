#include <doctest.h>

#include "hopfcyc/builtins.hpp"
#include "hopfcyc/identities.hpp"
#include "hopfcyc/omega.hpp"
#include "support.hpp"

using namespace hc;
using hc::test::el;
using hc::test::mat;

namespace {

SparseVec form(Calculus& C, const std::vector<int>& key) { return SparseVec::unit(static_cast<int>(C.encode(key))); }

void require_ok(const IdentityReport& r) {
    for (auto& row : r.rows) {
        if (row.supplementary) continue;
        INFO(row.name << " n=" << row.degree << " " << row.witness);
        CHECK(row.pass);
    }
}

}  // namespace

TEST_CASE("differential in bar coordinates") {
    Hopf Z2 = cyclic_group_algebra(2);
    Calculus C(Z2);
    SparseVec g = form(C, {1}), one = form(C, {0});
    SparseVec dg = form(C, {0, 1});
    CHECK(C.differential(0, g) == dg);
    CHECK(C.differential(0, one).empty());
    CHECK(C.from_elements({Z2.unit(), Z2.basis(1)}) == dg);
    CHECK(C.differential(1, form(C, {1, 1})) == form(C, {0, 1, 1}));
    for (int n = 0; n < 3; ++n) CHECK((C.op(OpKind::D, n + 1) * C.op(OpKind::D, n)).is_zero());
}

TEST_CASE("products of forms") {
    Hopf Z2 = cyclic_group_algebra(2);
    Calculus C(Z2);
    SparseVec dg = form(C, {0, 1}), gdg = form(C, {1, 1});
    CHECK(C.right_mul(1, dg, Z2.unit()) == dg);
    CHECK(C.left_mul(Z2.unit(), 1, dg) == dg);
    CHECK(C.right_mul(1, dg, Z2.basis(1)) == -gdg);
    CHECK(C.form_mul(1, dg, 1, dg) == form(C, {0, 1, 1}));
    // dg.g checked inside ker(m) of H (x) H: (1 (x) g - g (x) 1).g = 1 (x) 1 - g (x) g = -g.(1 (x) g - g (x) 1)
    CHECK(C.left_mul(Z2.basis(1), 1, dg) == gdg);

    Hopf S = sweedler();
    Calculus D(S);
    // d(ab) = da.b + a.db on basis elements
    for (int a = 0; a < 4; ++a)
        for (int b = 0; b < 4; ++b) {
            SparseVec lhs = D.differential(0, to_sparse(S.mul(S.basis(a), S.basis(b))));
            SparseVec rhs = D.right_mul(1, D.differential(0, SparseVec::unit(a)), S.basis(b)) +
                            D.left_mul(S.basis(a), 1, D.differential(0, SparseVec::unit(b)));
            CHECK(lhs == rhs);
        }
}

TEST_CASE("operator matrices") {
    Hopf Z2 = cyclic_group_algebra(2);
    Calculus C(Z2);
    SparseVec dg = form(C, {0, 1}), gdg = form(C, {1, 1});
    const SparseMatrix& k = C.op(OpKind::kappa, 1);
    CHECK(k.apply(dg) == dg);
    CHECK(k.apply(gdg) == C.right_mul(1, dg, Z2.basis(1)));
    CHECK(k == mat({{1, 0}, {0, -1}}));
    CHECK(C.op(OpKind::b, 1).is_zero());
    CHECK(C.kappa_from_b(1) == k);
    for (auto name : {"group:Z3", "sweedler", "functions:Z2"}) {
        Hopf H = builtin(name);
        Calculus X(H);
        CHECK(X.op(OpKind::Bprime, 0) == X.op(OpKind::D, 0));
        for (int n = 1; n <= 2; ++n) CHECK(X.op(OpKind::kappaprime, n) * X.op(OpKind::kappa, n) == X.identity(n));
    }
    CHECK(degree_shift(OpKind::D) == 1);
    CHECK(degree_shift(OpKind::b) == -1);
    CHECK(degree_shift(OpKind::kappa) == 0);
    for (auto k2 : {OpKind::D, OpKind::b, OpKind::bprime, OpKind::kappa, OpKind::kappaprime, OpKind::B, OpKind::Bprime})
        CHECK(parse_op(op_name(k2)) == k2);
    auto fo = C.operator_matrix(OpKind::B, 1);
    CHECK(fo.source_degree == 1);
    CHECK(fo.target_degree == 2);
}

TEST_CASE("extension of the convolution twist to forms") {
    Hopf S = sweedler();
    Calculus E(S, Character::counit(S));
    for (int n = 0; n <= 2; ++n) CHECK(E.presentation_iso(n) == E.identity(n));

    Calculus C(S, Character(S, el({1, -1, 0, 0})));
    SparseVec dg = form(C, {0, 1}), xdg = form(C, {2, 1});
    CHECK(C.xi_extend(1, dg) == -dg);
    CHECK(C.xi_extend(1, xdg) == -xdg);
    CHECK(C.xi_extend_inv(1, C.xi_extend(1, xdg)) == xdg);
    CHECK(C.presentation_iso(0) == C.identity(0));
    CHECK(C.presentation_iso(1).apply(dg) == -dg);
    CHECK(C.op(OpKind::D, 0).apply(SparseVec::unit(1)) == -dg);
    for (int n = 0; n < 3; ++n) CHECK((C.op(OpKind::D, n + 1) * C.op(OpKind::D, n)).is_zero());
}

TEST_CASE("coactions") {
    Hopf Z2 = cyclic_group_algebra(2);
    Calculus C(Z2);
    long dg = C.encode({0, 1});
    CHECK(C.coaction_right(0).apply(SparseVec::unit(0)) == SparseVec::unit(0));
    CHECK(C.coaction_right(1).apply(SparseVec::unit(static_cast<int>(dg))) == SparseVec::unit(static_cast<int>(dg * 2 + 1)));
    SparseVec pig = C.pi_r(Z2.basis(1));
    CHECK(pig == -form(C, {1, 1}));
    CHECK(pig == C.right_mul(1, form(C, {0, 1}), Z2.basis(1)));
    // pi^R(g) (x) 1
    CHECK(C.coaction_right(1).apply(pig) == Scalar(-1) * SparseVec::unit(static_cast<int>(C.encode({1, 1}) * 2)));
    CHECK(C.pi_r(Z2.unit()).empty());

    Hopf S = sweedler();
    Calculus D(S);
    CHECK(D.pi_r(S.basis(1)) == D.right_mul(1, form(D, {0, 1}), S.basis(1)));
}

TEST_CASE("coinvariant subspaces") {
    Hopf Z2 = cyclic_group_algebra(2);
    Calculus C(Z2);
    auto c0 = coinvariant_subspace(C, 0, Z2.unit());
    CHECK(c0.subspace == Subspace::span(2, {SparseVec::unit(0)}));
    auto c1 = coinvariant_subspace(C, 1, Z2.unit());
    CHECK(c1.subspace == Subspace::span(2, {C.pi_r(Z2.basis(1))}));

    Hopf S = sweedler();
    Calculus D(S);
    auto s1 = coinvariant_subspace(D, 1, S.basis(1));
    CHECK(s1.subspace.dim() == 3);
    CHECK(s1.frame.span() == s1.subspace);
    for (int n = 0; n <= 2; ++n) {
        long expect = 1;
        for (int i = 0; i < n; ++i) expect *= 3;
        CHECK(coinvariant_subspace(D, n, S.unit()).subspace.dim() == expect);
        CHECK(coinvariant_kernel(D, Side::Left, n, S.unit()).dim() == expect);
    }

    Calculus T(S, Character(S, el({1, -1, 0, 0})));
    for (int n = 1; n <= 2; ++n) {
        auto plain = coinvariant_subspace(T, n, S.unit());
        auto twisted = coinvariant_subspace(T, n, S.unit(), true);
        CHECK(plain.subspace == twisted.subspace);
    }
}

TEST_CASE("antipode on forms") {
    Hopf Z2 = cyclic_group_algebra(2);
    Calculus C(Z2);
    CHECK(C.antipode_on_forms(0) == Z2.antipode_matrix());
    SparseMatrix S1 = C.antipode_on_forms(1);
    SparseVec dg = form(C, {0, 1}), gdg = form(C, {1, 1});
    CHECK(S1.apply(dg) == dg);
    CHECK(S1.apply(gdg) == -gdg);
}

TEST_CASE("harmonic projection") {
    Hopf T = trivial_hopf();
    Calculus C(T);
    CHECK(C.harmonic_projection(0) == C.identity(0));
    Hopf Z2 = cyclic_group_algebra(2);
    Calculus Z(Z2);
    CHECK(Z.harmonic_projection(1) == mat({{1, 0}, {0, 0}}));
    for (auto name : {"group:Z3", "sweedler"}) {
        Hopf H = builtin(name);
        Calculus X(H);
        for (int n = 1; n <= 2; ++n) {
            SparseMatrix P = X.harmonic_projection(n);
            CHECK(P * P == P);
            CHECK(P * X.op(OpKind::kappa, n) == X.op(OpKind::kappa, n) * P);
        }
    }
}

TEST_CASE("identity suites on small cases") {
    Hopf Z2 = cyclic_group_algebra(2);
    Calculus C(Z2);
    require_ok(verify_identities(C, 1));

    Hopf S = sweedler();
    Calculus E(S, Character::counit(S));
    auto re = verify_identities(E, 2);
    require_ok(re);
    Calculus F(S, inverse(S, Character::counit(S)));
    auto rf = verify_identities(F, 2);
    REQUIRE(re.rows.size() == rf.rows.size());
    for (std::size_t i = 0; i < re.rows.size(); ++i) CHECK(re.rows[i].pass == rf.rows[i].pass);

    Calculus X(S, Character(S, el({1, -1, 0, 0})));
    for (int n = 1; n <= 2; ++n) require_ok(verify_identities(X, n));
    require_ok(verify_calculus(X, 3));
    require_ok(verify_coactions(X, 2));
}

TEST_CASE("calculus and coaction suites on builtins") {
    for (auto& name : builtin_names()) {
        CAPTURE(name);
        Hopf H = builtin(name);
        Calculus C(H);
        int N = H.dim() > 4 ? 2 : 3;
        require_ok(verify_calculus(C, N));
        require_ok(verify_coactions(C, N));
    }
}
