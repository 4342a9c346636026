#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <tuple>
#include <vector>

#include "hopfcyc/linalg.hpp"

namespace hc {

using Element = std::vector<Scalar>;
using TensorVector = std::map<std::vector<int>, Scalar>;

struct Term2 {
    int left, right;
    Scalar coef;
    friend bool operator==(const Term2&, const Term2&) = default;
};

// e_i e_j = sum_k mult(i,j)[k] e_k, unit is always e_0.
class Algebra {
public:
    Algebra() = default;
    Algebra(int dim, std::vector<std::string> labels, std::vector<SparseVec> mult);

    int dim() const { return d_; }
    const std::vector<std::string>& labels() const { return labels_; }
    const SparseVec& product(int i, int j) const { return mult_[static_cast<std::size_t>(i) * d_ + j]; }
    SparseVec& product(int i, int j) { return mult_[static_cast<std::size_t>(i) * d_ + j]; }

    Element basis(int i) const;
    Element unit() const { return basis(0); }
    Element zero() const { return Element(d_); }
    Element mul(const Element& a, const Element& b) const;
    // Matrix of x -> a x (left) or x -> x a (right).
    SparseMatrix left_mult_matrix(const Element& a) const;
    SparseMatrix right_mult_matrix(const Element& a) const;

    friend bool operator==(const Algebra&, const Algebra&) = default;

private:
    int d_ = 0;
    std::vector<std::string> labels_;
    std::vector<SparseVec> mult_;
};

class Hopf {
public:
    Hopf() = default;
    Hopf(Algebra alg, std::vector<std::vector<Term2>> comult, std::vector<Scalar> counit,
         std::vector<SparseVec> antipode);

    int dim() const { return alg_.dim(); }
    const Algebra& algebra() const { return alg_; }
    Algebra& algebra() { return alg_; }
    const std::vector<std::string>& labels() const { return alg_.labels(); }
    const std::vector<Term2>& coproduct_of_basis(int i) const { return comult_[i]; }
    std::vector<Term2>& coproduct_of_basis(int i) { return comult_[i]; }
    const std::vector<Scalar>& counit() const { return counit_; }
    std::vector<Scalar>& counit() { return counit_; }
    const std::vector<SparseVec>& antipode_columns() const { return antipode_; }
    std::vector<SparseVec>& antipode_columns() { return antipode_; }

    Element basis(int i) const { return alg_.basis(i); }
    Element unit() const { return alg_.unit(); }
    Element mul(const Element& a, const Element& b) const { return alg_.mul(a, b); }
    Scalar eps(const Element& a) const;
    Element S(const Element& a) const;
    TensorVector coproduct(const Element& a) const;
    SparseMatrix antipode_matrix() const;
    SparseMatrix counit_row() const;  // 1 x d

    std::string label(int i) const { return alg_.labels()[i]; }

    // Equality of presentations; coproduct terms compare as sorted lists.
    friend bool operator==(const Hopf& a, const Hopf& b);

private:
    Algebra alg_;
    std::vector<std::vector<Term2>> comult_;
    std::vector<Scalar> counit_;
    std::vector<SparseVec> antipode_;  // column i = S(e_i)
};

struct ValidationCheck {
    std::string name;
    bool pass;
    std::string witness;
    bool informational = false;  // reported but not an axiom
};

struct ValidationReport {
    std::vector<ValidationCheck> checks;
    bool ok() const;
};

ValidationReport validate_hopf(const Hopf& H);

TensorVector iterated_coproduct(const Hopf& H, const Element& a, int n);
bool is_grouplike(const Hopf& H, const Element& s);

struct InvalidCharacter : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// A multiplicative functional; construction validates xi(1) = 1 and xi(ab) = xi(a)xi(b).
class Character {
public:
    Character(const Hopf& H, std::vector<Scalar> values);
    static Character counit(const Hopf& H) { return Character(H, H.counit()); }
    const std::vector<Scalar>& values() const { return v_; }
    Scalar operator()(const Element& a) const;
    Scalar on_basis(int i) const { return v_[i]; }
    bool is_counit(const Hopf& H) const { return v_ == H.counit(); }
    friend bool operator==(const Character& a, const Character& b) { return a.v_ == b.v_; }

private:
    std::vector<Scalar> v_;
};

// xi o S, the convolution inverse of xi.
Character inverse(const Hopf& H, const Character& xi);

Element star_convolve(const Hopf& H, const Element& a, const Character& xi);
Element left_convolve(const Hopf& H, const Character& xi, const Element& a);
Element ad_character(const Hopf& H, const Character& xi, const Element& a);
Element twisted_antipode(const Hopf& H, const Character& delta, const Element& h);

SparseMatrix star_convolve_matrix(const Hopf& H, const Character& xi);
SparseMatrix ad_character_matrix(const Hopf& H, const Character& xi);
SparseMatrix twisted_antipode_matrix(const Hopf& H, const Character& delta);

struct PairReport {
    bool delta_is_character = false;
    bool sigma_grouplike = false;
    bool delta_of_sigma_is_one = false;
    bool involution = false;      // S_delta^2(h) = sigma h sigma^-1
    bool involution_alt = false;  // (h -> S_delta(h) sigma)^2 = id
    bool criteria_agree = true;
    std::string witness;
    bool ok() const {
        return delta_is_character && sigma_grouplike && delta_of_sigma_is_one && involution;
    }
};

// delta is passed as raw values so that a non-multiplicative input can be reported.
PairReport check_modular_pair(const Hopf& H, const std::vector<Scalar>& delta, const Element& sigma);

TensorVector diagonal_action(const Hopf& H, const Element& h, const TensorVector& t);

struct NotAutomorphism : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// a -> sum alpha(a1) a2 beta(a3), verified to be an algebra automorphism.
SparseMatrix two_sided_twist(const Hopf& H, const Character& alpha, const Character& beta);
// Checks unit, multiplicativity and invertibility of a d x d matrix.
bool is_algebra_automorphism(const Algebra& A, const SparseMatrix& f, std::string* witness = nullptr);

Element to_element(const SparseVec& v, int d);
SparseVec to_sparse(const Element& a);
std::string format_element(const Hopf& H, const Element& a);
std::string format_tensor(const Hopf& H, const TensorVector& t);

}  // namespace hc
