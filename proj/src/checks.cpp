#include "hopfcyc/checks.hpp"


namespace hc {

namespace {

IdentityRow plain_row(const std::string& name, int degree, bool pass, const std::string& witness = "") {
    IdentityRow r;
    r.name = name;
    r.degree = degree;
    r.pass = pass;
    if (!pass) r.witness = witness;
    return r;
}

template <class Space>
IdentityRow stable_row(const std::string& name, int degree, const SparseMatrix& m, const Space& dom,
                       const Space& cod) {
    try {
        restrict_map(m, dom, cod);
        return plain_row(name, degree, true);
    } catch (const NotStable& e) {
        return plain_row(name, degree, false, "domain vector " + std::to_string(e.column) + " escapes");
    }
}

bool involutive(const Hopf& H) {
    SparseMatrix S = H.antipode_matrix();
    return S * S == SparseMatrix::identity(H.dim());
}

// compare_row against a restricted operator; NotStable becomes a failing row.
IdentityRow restricted_row(const std::string& name, int degree, const SparseMatrix& m, const Frame& dom,
                           const Frame& cod, const SparseMatrix& rhs) {
    try {
        return compare_row(name, degree, restrict_map(m, dom, cod), rhs);
    } catch (const NotStable& e) {
        return plain_row(name, degree, false, "domain vector " + std::to_string(e.column) + " escapes");
    }
}

bool same_span(const Subspace& a, const Subspace& b) { return a.dim() == b.dim() && a.contains(b); }

long ipow(long b, int e) {
    long r = 1;
    for (int i = 0; i < e; ++i) r *= b;
    return r;
}

}  // namespace

bool is_cocommutative(const Hopf& H) {
    for (int i = 0; i < H.dim(); ++i) {
        TensorVector t = H.coproduct(H.basis(i)), s;
        for (auto& [k, v] : t) s[{k[1], k[0]}] = v;
        if (s != t) return false;
    }
    return true;
}

IdentityReport verify_frames(const Hopf& H, const Character& delta, const Element& sigma, int N) {
    IdentityReport rep;
    int d = H.dim();
    Calculus C(H);
    Element one = H.unit();
    std::vector<std::optional<Frame>> R(N + 1);
    std::vector<Subspace> L(N + 1);
    for (int n = 0; n <= N; ++n) {
        std::string expect = "(d-1)^n = " + std::to_string(ipow(d - 1, n));
        try {
            R[n] = coinvariant_subspace(C, n, one).frame;
            rep.rows.push_back(plain_row("dim Omega^R_n = (d-1)^n", n, true));
        } catch (const CoinvariantMismatch& e) {
            rep.rows.push_back(plain_row("dim Omega^R_n = (d-1)^n", n, false, e.what()));
        }
        L[n] = coinvariant_kernel(C, Side::Left, n, one);
        rep.rows.push_back(plain_row("dim Omega^L_n = (d-1)^n", n, L[n].dim() == ipow(d - 1, n),
                                     "dimension " + std::to_string(L[n].dim()) + ", expected " + expect));
    }
    bool cocomm = is_cocommutative(H);
    std::size_t first = rep.rows.size();
    for (int n = 0; n <= N; ++n) {
        if (!R[n]) continue;
        const Frame& F = *R[n];
        if (cocomm) rep.rows.push_back(plain_row("Omega^L_n = Omega^R_n", n, same_span(L[n], F.span())));
        if (n >= 1 && R[n - 1]) {
            rep.rows.push_back(stable_row("b stable on Omega^R", n, C.op(OpKind::b, n), F, *R[n - 1]));
            rep.rows.push_back(stable_row("b' stable on Omega^R", n, C.op(OpKind::bprime, n), F, *R[n - 1]));
            rep.rows.push_back(stable_row("b stable on Omega^L", n, C.op(OpKind::b, n), L[n], L[n - 1]));
            rep.rows.push_back(stable_row("b' stable on Omega^L", n, C.op(OpKind::bprime, n), L[n], L[n - 1]));
        }
        if (n >= 1) {
            rep.rows.push_back(stable_row("kappa stable on Omega^R", n, C.op(OpKind::kappa, n), F, F));
            rep.rows.push_back(stable_row("kappa' stable on Omega^R", n, C.op(OpKind::kappaprime, n), F, F));
            rep.rows.push_back(stable_row("kappa stable on Omega^L", n, C.op(OpKind::kappa, n), L[n], L[n]));
            rep.rows.push_back(stable_row("kappa' stable on Omega^L", n, C.op(OpKind::kappaprime, n), L[n], L[n]));
        }
        if (n + 1 <= N && R[n + 1]) {
            rep.rows.push_back(stable_row("B' stable on Omega^R", n, C.op(OpKind::Bprime, n), F, *R[n + 1]));
            rep.rows.push_back(stable_row("B' stable on Omega^L", n, C.op(OpKind::Bprime, n), L[n], L[n + 1]));
        }
    }
    // Omega^R and Omega^L stability presumes S^2 = id.
    if (!involutive(H))
        for (std::size_t i = first; i < rep.rows.size(); ++i) rep.rows[i].supplementary = true;

    Calculus X(H, inverse(H, delta));
    std::vector<std::optional<Frame>> T(N + 1);
    for (int n = 0; n <= N; ++n) {
        try {
            auto data = coinvariant_subspace(X, n, sigma);
            T[n] = data.frame;
            rep.rows.push_back(plain_row("dim Omega^R_{xi,sigma,n} = (d-1)^n", n, true));
            auto alt = coinvariant_subspace(X, n, sigma, true);
            rep.rows.push_back(plain_row("d_xi presentation spans the sigma-coinvariants", n,
                                         same_span(alt.frame.span(), data.frame.span())));
        } catch (const CoinvariantMismatch& e) {
            rep.rows.push_back(plain_row("dim Omega^R_{xi,sigma,n} = (d-1)^n", n, false, e.what()));
        }
    }
    for (int n = 0; n <= N; ++n) {
        if (!T[n]) continue;
        const Frame& F = *T[n];
        if (n >= 1 && T[n - 1]) {
            rep.rows.push_back(stable_row("b'_xi stable on sigma-coinvariants", n, X.op(OpKind::bprime, n), F, *T[n - 1]));
            rep.rows.push_back(
                stable_row("sum kappa'_xi^j b'_xi stable on sigma-coinvariants", n, X.op(OpKind::Lower, n), F, *T[n - 1]));
        }
        if (n >= 1)
            rep.rows.push_back(stable_row("kappa'_xi stable on sigma-coinvariants", n, X.op(OpKind::kappaprime, n), F, F));
        if (n + 1 <= N && T[n + 1]) {
            rep.rows.push_back(stable_row("B_xi stable on sigma-coinvariants", n, X.op(OpKind::B, n), F, *T[n + 1]));
            rep.rows.push_back(stable_row("d_xi stable on sigma-coinvariants", n, X.op(OpKind::D, n), F, *T[n + 1]));
        }
    }
    return rep;
}

IdentityReport verify_coordinates(const Hopf& H, const Character& delta, const Element& sigma, int N) {
    IdentityReport rep;
    int d = H.dim();
    Element one = H.unit();
    Character eps = Character::counit(H);
    Calculus C(H);
    Calculus X(H, inverse(H, delta));
    std::vector<Frame> R, T;
    std::vector<SparseMatrix> U, P;
    for (int n = 0; n <= N; ++n) {
        R.push_back(coinvariant_subspace(C, n, one).frame);
        T.push_back(coinvariant_subspace(X, n, sigma).frame);
        U.push_back(u_embedding(H, n));
        P.push_back(u_projection(H, n));
    }
    bool inv = involutive(H);
    for (int n = 1; n <= N; ++n) {
        Scalar s = n % 2 == 0 ? 1 : -1;
        if (inv) {
            rep.rows.push_back(restricted_row("kappa' = (-1)^n proj' S(h1).(h2,...,hn,1)", n,
                                              C.op(OpKind::kappaprime, n), R[n], R[n],
                                              s * (P[n] * leading_action(H, eps, n, &one) * U[n])));
            rep.rows.push_back(restricted_row("b' = -S(h1).(h2,...,hn)", n, C.op(OpKind::bprime, n), R[n], R[n - 1],
                                              -(P[n - 1] * leading_action(H, eps, n, nullptr) * U[n])));
        }
        rep.rows.push_back(restricted_row("kappa'_xi = (-1)^n proj'' S_delta(h1).(h2,...,hn,sigma)", n,
                                          X.op(OpKind::kappaprime, n), T[n], T[n],
                                          s * (u_projection_sigma(H, n, sigma) * leading_action(H, delta, n, &sigma) * U[n])));
        rep.rows.push_back(restricted_row("b'_xi = -S_delta(h1).(h2,...,hn)", n, X.op(OpKind::bprime, n), T[n], T[n - 1],
                                          -(P[n - 1] * leading_action(H, delta, n, nullptr) * U[n])));
    }
    // Left action: (u_1..u_n, h) -> a_(1)u_1, ..., a_(n)u_n, a_(n+1)h with slotwise projection.
    for (int n = 0; n <= N; ++n) {
        const Frame& F = R[n];
        std::vector<SparseVec> cols;
        for (auto& v : F.basis())
            for (int h = 0; h < d; ++h) cols.push_back(C.right_mul(n, v, H.basis(h)));
        Frame Phi(static_cast<int>(C.dim(n)), cols);
        SparseMatrix Ui = kron(U[n], SparseMatrix::identity(d)), Pi = kron(P[n], SparseMatrix::identity(d));
        bool pass = true;
        std::string witness;
        for (int a = 0; a < d && pass; ++a) {
            std::vector<SparseVec> lhs, act;
            for (auto& c : cols) lhs.push_back(*Phi.coords(C.left_mul(H.basis(a), n, c)));
            long D = ipow(d, n + 1);
            for (long t = 0; t < D; ++t) {
                TensorVector tv;
                std::vector<int> key(n + 1);
                long r = t;
                for (int i = n; i >= 0; --i) {
                    key[i] = static_cast<int>(r % d);
                    r /= d;
                }
                tv[key] = 1;
                Accumulator acc(static_cast<int>(D));
                for (auto& [k, x] : diagonal_action(H, H.basis(a), tv)) {
                    long idx = 0;
                    for (int y : k) idx = idx * d + y;
                    acc.add(static_cast<int>(idx), x);
                }
                act.push_back(acc.take());
            }
            SparseMatrix L = SparseMatrix::from_columns(static_cast<int>(cols.size()), lhs);
            SparseMatrix A = SparseMatrix::from_columns(static_cast<int>(D), act);
            auto row = compare_row("", n, L, Pi * A * Ui);
            if (!row.pass) {
                pass = false;
                witness = "a = " + H.label(a) + ", " + row.witness;
            }
        }
        rep.rows.push_back(plain_row("left action a.(u_1..u_n, h) = (a_(1)u_1, ..., a_(n+1)h)", n, pass, witness));
    }
    return rep;
}

IdentityReport verify_harmonic(Calculus& C, int n) {
    IdentityReport rep;
    SparseMatrix P = C.harmonic_projection(n);
    const SparseMatrix& K = C.op(OpKind::kappa, n);
    SparseMatrix I = C.identity(n);
    rep.rows.push_back(compare_row("P^2 = P", n, P * P, P, &C, n));
    rep.rows.push_back(compare_row("P kappa = kappa P", n, P * K, K * P, &C, n));
    rep.rows.push_back(compare_row("(kappa - 1)^2 P = 0", n, (K - I) * (K - I) * P, SparseMatrix(P.rows(), P.cols()), &C, n));
    rep.rows.push_back(compare_row("B' = (n+1) d on image(P)", n, C.op(OpKind::Bprime, n) * P,
                                   Scalar(n + 1) * (C.op(OpKind::D, n) * P), &C, n));
    rep.rows.push_back(compare_row("b' = -b on image(P)", n, C.op(OpKind::bprime, n) * P, -(C.op(OpKind::b, n) * P), &C, n));
    rep.rows.push_back(compare_row("sum kappa'^j b' = n b' on image(P)", n, C.op(OpKind::Lower, n) * P,
                                   Scalar(n) * (C.op(OpKind::bprime, n) * P), &C, n));
    return rep;
}

IdentityReport verify_antipode(Calculus& C, int n) {
    IdentityReport rep;
    const Hopf& H = C.hopf();
    Element one = H.unit();
    SparseMatrix S = C.antipode_on_forms(n);
    Subspace L = coinvariant_kernel(C, Side::Left, n, one), R = coinvariant_kernel(C, Side::Right, n, one);
    std::vector<SparseVec> img;
    for (auto& v : L.basis()) img.push_back(S.apply(v));
    rep.rows.push_back(plain_row("S(Omega^L_n) = Omega^R_n", n, same_span(Subspace::span(L.ambient(), img), R)));
    SparseMatrix S2 = H.antipode_matrix() * H.antipode_matrix();
    if (n >= 1 && S2 == SparseMatrix::identity(H.dim())) {
        SparseMatrix Sm = C.antipode_on_forms(n - 1);
        std::string sb = sign_of(Sm * C.op(OpKind::b, n), C.op(OpKind::bprime, n) * S);
        std::string sk = sign_of(S * C.op(OpKind::kappa, n), C.op(OpKind::kappaprime, n) * S);
        IdentityRow rb = plain_row("S b = +-b' S", n, sb != "none", "neither sign");
        rb.note = sb;
        IdentityRow rk = plain_row("S kappa = +-kappa' S", n, sk != "none", "neither sign");
        rk.note = sk;
        rep.rows.push_back(rb);
        rep.rows.push_back(rk);
    }
    return rep;
}

}  // namespace hc
