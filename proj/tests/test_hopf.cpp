#include <doctest.h>

#include "hopfcyc/algebra_io.hpp"
#include "hopfcyc/builtins.hpp"
#include "hopfcyc/hopf.hpp"
#include "support.hpp"

using namespace hc;
using hc::test::el;
using hc::test::mat;

namespace {

const ValidationCheck* find_check(const ValidationReport& r, const std::string& prefix) {
    for (auto& c : r.checks)
        if (c.name.rfind(prefix, 0) == 0) return &c;
    return nullptr;
}

// Sweedler basis: 1, g, x, gx.
Character minus_g(const Hopf& H) { return Character(H, el({1, -1, 0, 0})); }

}  // namespace

TEST_CASE("every builtin is a Hopf algebra") {
    for (auto& name : builtin_names()) {
        CAPTURE(name);
        auto r = validate_hopf(builtin(name));
        CHECK(r.ok());
    }
    CHECK(builtin_names().size() == 8);
}

TEST_CASE("Sweedler antipode is not involutive") {
    Hopf H = sweedler();
    auto r = validate_hopf(H);
    CHECK(r.ok());
    auto c = find_check(r, "antipode is an involution");
    REQUIRE(c);
    CHECK(c->informational);
    CHECK_FALSE(c->pass);
    SparseMatrix S = H.antipode_matrix();
    CHECK(S * S != SparseMatrix::identity(4));
    CHECK(S * S * S * S == SparseMatrix::identity(4));
}

TEST_CASE("a corrupted product is rejected with a witness") {
    Hopf H = cyclic_group_algebra(2);
    H.algebra().product(1, 1) = SparseVec();
    auto r = validate_hopf(H);
    CHECK_FALSE(r.ok());
    bool witnessed = false;
    for (auto& c : r.checks)
        if (!c.pass && !c.informational && !c.witness.empty()) witnessed = true;
    CHECK(witnessed);
}

TEST_CASE("iterated coproducts") {
    Hopf Z2 = cyclic_group_algebra(2);
    CHECK(iterated_coproduct(Z2, Z2.unit(), 3) == TensorVector{{{0, 0, 0}, Scalar(1)}});
    CHECK(iterated_coproduct(Z2, Z2.basis(1), 3) == TensorVector{{{1, 1, 1}, Scalar(1)}});
    Hopf S = sweedler();
    CHECK(iterated_coproduct(S, S.basis(2), 2) == TensorVector{{{2, 0}, Scalar(1)}, {{1, 2}, Scalar(1)}});
}

TEST_CASE("group-like elements") {
    Hopf S = sweedler();
    CHECK(is_grouplike(S, S.unit()));
    CHECK(is_grouplike(S, S.basis(1)));
    CHECK_FALSE(is_grouplike(S, S.basis(2)));
    CHECK_FALSE(is_grouplike(S, S.basis(3)));
}

TEST_CASE("characters are validated") {
    Hopf S = sweedler();
    CHECK_NOTHROW(minus_g(S));
    CHECK_THROWS_AS(Character(S, el({1, 1, 1, 0})), InvalidCharacter);
    CHECK_THROWS_AS(Character(S, el({2, 1, 0, 0})), InvalidCharacter);
    CHECK(inverse(S, minus_g(S)) == minus_g(S));
    CHECK(inverse(S, Character::counit(S)).is_counit(S));
}

TEST_CASE("convolution with a character") {
    Hopf S = sweedler();
    auto eps = Character::counit(S);
    for (int i = 0; i < 4; ++i) CHECK(star_convolve(S, S.basis(i), eps) == S.basis(i));
    auto xi = minus_g(S);
    CHECK(star_convolve(S, S.basis(1), xi) == el({0, -1, 0, 0}));
    CHECK(star_convolve(S, S.basis(2), xi) == S.basis(2));
    // xi~ is an algebra automorphism
    CHECK(is_algebra_automorphism(S.algebra(), star_convolve_matrix(S, xi)));
}

TEST_CASE("adjoint action of a character") {
    Hopf S = sweedler();
    auto xi = minus_g(S);
    for (int i = 0; i < 4; ++i) CHECK(ad_character(S, Character::counit(S), S.basis(i)) == S.basis(i));
    CHECK(ad_character(S, xi, S.basis(1)) == S.basis(1));
    CHECK(ad_character(S, xi, S.basis(2)) == el({0, 0, -1, 0}));
    // Ad_xi = left convolution by xi^-1 after right convolution by xi
    auto inv = inverse(S, xi);
    for (int i = 0; i < 4; ++i)
        CHECK(ad_character(S, xi, S.basis(i)) == left_convolve(S, inv, star_convolve(S, S.basis(i), xi)));
}

TEST_CASE("twisted antipode") {
    Hopf Z2 = cyclic_group_algebra(2);
    CHECK(twisted_antipode(Z2, Character::counit(Z2), Z2.basis(1)) == Z2.basis(1));
    Hopf S = sweedler();
    CHECK(twisted_antipode_matrix(S, Character::counit(S)) == S.antipode_matrix());
    CHECK(twisted_antipode(S, Character::counit(S), S.basis(2)) == el({0, 0, 0, -1}));
}

TEST_CASE("modular pairs") {
    for (auto name : {"group:Z2", "group:Z3", "group:Z4", "group:S3"}) {
        Hopf H = builtin(name);
        CHECK(check_modular_pair(H, H.counit(), H.unit()).ok());
    }
    Hopf S = sweedler();
    auto bad = check_modular_pair(S, S.counit(), S.unit());
    CHECK_FALSE(bad.ok());
    CHECK_FALSE(bad.involution);
    CHECK(bad.delta_is_character);
    CHECK(bad.sigma_grouplike);
    CHECK_FALSE(bad.witness.empty());
    auto good = check_modular_pair(S, S.counit(), S.basis(1));
    CHECK(good.ok());
    CHECK(good.criteria_agree);
    CHECK(check_modular_pair(S, el({1, -1, 0, 0}), S.unit()).ok());
    CHECK_FALSE(check_modular_pair(S, S.counit(), S.basis(2)).sigma_grouplike);
    CHECK_FALSE(check_modular_pair(S, el({1, 1, 1, 0}), S.unit()).delta_is_character);
}

TEST_CASE("diagonal action on tensors") {
    Hopf Z2 = cyclic_group_algebra(2);
    TensorVector t{{{1}, Scalar(1)}};
    CHECK(diagonal_action(Z2, Z2.unit(), t) == t);
    CHECK(diagonal_action(Z2, Z2.basis(1), t) == TensorVector{{{0}, Scalar(1)}});
    Hopf S = sweedler();
    CHECK(diagonal_action(S, S.basis(2), t) == TensorVector{{{3}, Scalar(-1)}});
    // arity 2: g acts slotwise
    TensorVector u{{{2, 1}, Scalar(1)}};
    CHECK(diagonal_action(S, S.basis(1), u) == TensorVector{{{3, 0}, Scalar(1)}});
}

TEST_CASE("two-sided twists") {
    Hopf S = sweedler();
    auto eps = Character::counit(S);
    auto xi = minus_g(S);
    CHECK(two_sided_twist(S, eps, eps) == SparseMatrix::identity(4));
    CHECK(two_sided_twist(S, eps, xi) == star_convolve_matrix(S, xi));
    SparseMatrix f = two_sided_twist(S, xi, xi);
    CHECK(f == mat({{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, -1, 0}, {0, 0, 0, -1}}));
    for (int i = 0; i < 4; ++i)
        CHECK(to_element(f.col(i), 4) == left_convolve(S, xi, star_convolve(S, S.basis(i), xi)));
    CHECK_FALSE(is_algebra_automorphism(S.algebra(), SparseMatrix(4, 4)));
}

TEST_CASE("builtin pairs") {
    Hopf S = sweedler();
    auto p = parse_pair(S, "eps-g");
    CHECK(p.delta == S.counit());
    CHECK(p.sigma == S.basis(1));
    auto c = parse_pair(S, "chi-1");
    CHECK(c.delta == el({1, -1, 0, 0}));
    auto q = parse_pair(S, "1,-1,0,0;0,1,0,0");
    CHECK(q.delta == el({1, -1, 0, 0}));
    CHECK(q.sigma == S.basis(1));
    CHECK(parse_coefficients("1/2,0,-3,1", 4) == std::vector<Scalar>{Scalar(1, 2), 0, -3, 1});
}

TEST_CASE("algebra files round-trip every builtin") {
    for (auto& name : builtin_names()) {
        CAPTURE(name);
        Hopf H = builtin(name);
        std::string text = to_algebra_json(H);
        Hopf back = parse_algebra_json(text);
        CHECK(back == H);
        CHECK(to_algebra_json(back) == text);
    }
}

TEST_CASE("malformed algebra files are parse errors") {
    CHECK_THROWS_AS(parse_algebra_json("{"), ParseError);
    CHECK_THROWS_AS(parse_algebra_json("{\"dim\": 1}"), ParseError);
    CHECK_THROWS_AS(parse_algebra_json(R"({"dim":1,"labels":["1"],"unit":0,"mult":[[0,0,3,"1"]],
        "comult":[[0,0,0,"1"]],"counit":["1"],"antipode":[[0,0,"1"]]})"),
                    ParseError);
    CHECK_THROWS_AS(parse_algebra_json(R"({"dim":1,"labels":["1"],"unit":0,"mult":[[0,0,0,"x"]],
        "comult":[[0,0,0,"1"]],"counit":["1"],"antipode":[[0,0,"1"]]})"),
                    ParseError);
    CHECK_THROWS_AS(load_algebra_file("/nonexistent/file.json"), ParseError);
}

TEST_CASE("mutation fixtures fail validation") {
    for (auto f : {"z2_mult_zeroed", "z3_mult_assoc", "z2_counit", "z2_antipode", "z3_comult", "sweedler_comult",
                   "sweedler_mult_sign", "sweedler_counit", "sweedler_antipode", "functions_z2_comult"}) {
        CAPTURE(f);
        auto r = validate_hopf(load_algebra_file(std::string(FIXTURE_DIR) + "/" + f + ".json"));
        CHECK_FALSE(r.ok());
    }
}
