#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "hopfcyc/hopf.hpp"
#include "hopfcyc/linalg.hpp"

namespace hc {

// Operator families on forms. With a twist, D is d_xi and the others are their
// xi-versions; DPlain is always the untwisted d.
enum class OpKind { D, DPlain, b, bprime, kappa, kappaprime, B, Bprime, Lower, Xi, XiInv };

std::string op_name(OpKind k);
std::optional<OpKind> parse_op(const std::string& s);
int degree_shift(OpKind k);

struct FormOperator {
    OpKind kind;
    int source_degree;
    int target_degree;
    bool twisted;
    SparseMatrix matrix;
};

struct AnnihilatorFailure : std::runtime_error {
    using std::runtime_error::runtime_error;
};

class Calculus;

// Right multiplication on basis forms, in the presentation a_0 dX(a_1)...dX(a_n)
// where dX = d o xt. With xt = id this is the ordinary bar presentation.
class RightMul {
public:
    RightMul(const Hopf& H, SparseMatrix xt, SparseMatrix xti);
    // (basis form of degree n) * e_j
    const SparseVec& basis(int n, long idx, int j);
    SparseVec apply(int n, const SparseVec& f, const SparseVec& a);

private:
    const Hopf& H_;
    SparseMatrix xt_, xti_;
    std::map<int, std::unordered_map<long, SparseVec>> memo_;
    friend class Calculus;
};

class Calculus {
public:
    explicit Calculus(const Hopf& H);
    Calculus(const Hopf& H, const Character& xi);
    Calculus(const Calculus&) = delete;
    Calculus& operator=(const Calculus&) = delete;

    const Hopf& hopf() const { return H_; }
    int d() const { return d_; }
    bool twisted() const { return twisted_; }
    const Character& xi() const { return xi_; }
    const SparseMatrix& xi_tilde() const { return xt_; }
    const SparseMatrix& xi_tilde_inv() const { return xti_; }

    long dim(int n) const;
    long encode(const std::vector<int>& key) const;
    std::vector<int> decode(int n, long idx) const;
    std::string basis_label(int n, long idx) const;
    std::string format_form(int n, const SparseVec& f) const;

    // Untwisted form algebra in standard coordinates.
    SparseVec from_elements(const std::vector<Element>& slots) const;  // a_0 da_1 ... da_n
    SparseVec left_mul(const Element& a, int n, const SparseVec& f) const;
    SparseVec right_mul(int n, const SparseVec& f, const Element& a);
    SparseVec form_mul(int p, const SparseVec& f, int q, const SparseVec& g);
    SparseVec differential(int n, const SparseVec& f) const;
    SparseVec xi_extend(int n, const SparseVec& f) const;
    SparseVec xi_extend_inv(int n, const SparseVec& f) const;

    // Cached operator matrices in standard coordinates.
    const SparseMatrix& op(OpKind k, int n);
    FormOperator operator_matrix(OpKind k, int n);
    // Matrices in xi-presentation coordinates, before conjugation.
    const SparseMatrix& native(OpKind k, int n);
    // xi-coordinates (a_0; a_1..a_n) -> standard coordinates of a_0 d(xt a_1)...d(xt a_n).
    const SparseMatrix& presentation_iso(int n);
    const SparseMatrix& presentation_iso_inv(int n);
    SparseMatrix kappa_from_b(int n);  // 1 - b d - d b with the twisted b and the plain d
    SparseMatrix identity(int n) const { return SparseMatrix::identity(static_cast<int>(dim(n))); }

    // Coactions: right lands in Omega_n (x) H indexed form*d + h; left in H (x) Omega_n indexed h*dim+form.
    const SparseMatrix& coaction_right(int n);
    const SparseMatrix& coaction_left(int n);
    SparseVec pi_r(const Element& h);
    // Twisted route: sum d_xi(h1) S_{xi^-1}(h2).
    SparseVec pi_r_twisted(const Element& h);
    SparseMatrix antipode_on_forms(int n);
    SparseMatrix harmonic_projection(int n);

private:
    SparseVec native_column(OpKind k, int n, long idx);
    long pw(int n) const {
        long r = 1;
        for (int i = 0; i < n; ++i) r *= d_ - 1;
        return r;
    }

    const Hopf& H_;
    int d_;
    bool twisted_;
    Character xi_;
    SparseMatrix xt_, xti_;
    RightMul plain_;
    std::unique_ptr<RightMul> xnative_;
    std::map<std::pair<OpKind, int>, SparseMatrix> cache_, native_cache_;
    std::map<int, SparseMatrix> iso_, iso_inv_, coact_r_, coact_l_;
};

std::vector<Scalar> harmonic_polynomial(int n);

struct CoinvariantData {
    int degree;
    Element sigma;
    Subspace subspace;       // kernel of the coaction condition
    SparseMatrix basis_map;  // (ker eps)^{(x)n} -> Omega_n
    Frame frame;             // columns of basis_map
};

enum class Side { Left, Right };

struct CoinvariantMismatch : DimensionMismatch {
    using DimensionMismatch::DimensionMismatch;
};

Subspace coinvariant_kernel(Calculus& C, Side side, int n, const Element& sigma);
// Right sigma-coinvariants with the pi^R basis map; twisted=true builds the
// basis map from the d_xi presentation of pi^R instead.
CoinvariantData coinvariant_subspace(Calculus& C, int n, const Element& sigma, bool twisted_route = false);
Subspace biinvariant_subspace(Calculus& C, int n);

// Coordinates of (ker eps)^{(x)n}: u_k = e_k - eps(e_k) 1 for k = 1..d-1.
SparseMatrix u_embedding(const Hopf& H, int n);   // u-coords -> H^{(x)n}
SparseMatrix u_projection(const Hopf& H, int n);  // H^{(x)n} -> u-coords, slotwise x - eps(x)1
// proj'' variant: last slot x - eps(x) sigma.
SparseMatrix u_projection_sigma(const Hopf& H, int n, const Element& sigma);

}  // namespace hc
