#include "hopfcyc/cyclic.hpp"

#include <functional>

namespace hc {

namespace {

long ipow(int b, int e) {
    long r = 1;
    for (int i = 0; i < e; ++i) r *= b;
    return r;
}

std::vector<int> decode(int d, int slots, long idx) {
    std::vector<int> s(slots);
    for (int i = slots - 1; i >= 0; --i) {
        s[i] = static_cast<int>(idx % d);
        idx /= d;
    }
    return s;
}

long encode(int d, const std::vector<int>& s) {
    long idx = 0;
    for (int x : s) idx = idx * d + x;
    return idx;
}

using Terms = std::vector<std::pair<std::vector<int>, Scalar>>;

// Matrix of a map on tensors with src_slots slots to tensors with dst_slots slots.
SparseMatrix tensor_map(int d, int src_slots, int dst_slots, const std::function<Terms(const std::vector<int>&)>& f) {
    long cols = ipow(d, src_slots), rows = ipow(d, dst_slots);
    std::vector<SparseVec> out;
    out.reserve(cols);
    for (long c = 0; c < cols; ++c) {
        Accumulator acc(static_cast<int>(rows));
        for (auto& [key, v] : f(decode(d, src_slots, c))) acc.add(static_cast<int>(encode(d, key)), v);
        out.push_back(acc.take());
    }
    return SparseMatrix::from_columns(static_cast<int>(rows), std::move(out));
}

// Expand a slotwise list of elements into tensor terms.
Terms expand(const std::vector<SparseVec>& slots, Scalar c = 1) {
    Terms cur{{{}, c}};
    for (auto& s : slots) {
        Terms nxt;
        for (auto& [k, v] : cur)
            for (auto& [i, x] : s.entries()) {
                auto nk = k;
                nk.push_back(i);
                nxt.emplace_back(std::move(nk), v * x);
            }
        cur = std::move(nxt);
    }
    return cur;
}

bool all_zero(const std::vector<SparseMatrix>& ms) {
    for (auto& m : ms)
        if (!m.is_zero()) return false;
    return true;
}

using Candidate = std::pair<std::string, std::vector<SparseMatrix>>;

MixedComplex arbitrate(const std::string& name, int N, const std::vector<long>& dims,
                       const std::vector<SparseMatrix>& b, const std::vector<Candidate>& cands,
                       std::vector<BCandidate>* tried) {
    std::optional<MixedComplex> zero_choice, choice;
    for (auto& [cname, B] : cands) {
        MixedComplex M{name, N, dims, b, B, cname};
        bool ok = !mixed_defect(M);
        bool z = all_zero(B);
        if (tried) tried->push_back({cname, ok, z});
        if (!ok) continue;
        if (z) {
            if (!zero_choice) zero_choice = M;
        } else if (!choice) {
            choice = M;
        }
    }
    if (choice) return *choice;
    if (zero_choice) return *zero_choice;
    throw NoValidMixedStructure("no ordering of N, sigma, (1 - tau) gives a mixed complex for " + name);
}

std::vector<Candidate> cm_candidates(const CocyclicModule& M) {
    int N = M.cutoff;
    auto lambda = [&](int m) { return (m % 2 == 0 ? Scalar(1) : Scalar(-1)) * M.tau[m]; };
    auto norm = [&](int m) {
        SparseMatrix L = lambda(m), acc = SparseMatrix::identity(static_cast<int>(M.dims[m])), sum = acc;
        for (int i = 1; i <= m; ++i) {
            acc = L * acc;
            sum = sum + acc;
        }
        return sum;
    };
    std::vector<SparseMatrix> c1, c2, c3, c4;
    for (int n = 0; n < N; ++n) {
        SparseMatrix Nn = norm(n);
        SparseMatrix st = M.degeneracies[n + 1][n] * M.tau[n + 1];  // sigma~ : n+1 -> n
        SparseMatrix In = SparseMatrix::identity(static_cast<int>(M.dims[n]));
        SparseMatrix In1 = SparseMatrix::identity(static_cast<int>(M.dims[n + 1]));
        c1.push_back(Nn * (In - lambda(n)) * st);
        c2.push_back(Nn * st * (In1 - lambda(n + 1)));
        c3.push_back(Nn * st * (In1 - M.tau[n + 1]));
        c4.push_back(Nn * st);
    }
    return {{"N(1-lambda)sigma~", c1}, {"N sigma~(1-lambda)", c2}, {"N sigma~(1-tau)", c3}, {"N sigma~", c4}};
}

}  // namespace

std::string sign_of(const SparseMatrix& a, const SparseMatrix& x) {
    if (a.rows() != x.rows() || a.cols() != x.cols()) return "none";
    bool plus = a == x, minus = a == -x;
    return plus && minus ? "both" : plus ? "+" : minus ? "-" : "none";
}

std::optional<std::string> mixed_defect(const MixedComplex& M) {
    int N = M.cutoff;
    for (int n = 0; n + 1 <= N - 1; ++n) {
        if (!(M.b[n + 1] * M.b[n]).is_zero()) return "b^2 != 0 at degree " + std::to_string(n);
        if (!(M.B[n] * M.B[n + 1]).is_zero()) return "B^2 != 0 at degree " + std::to_string(n + 2);
    }
    for (int m = 0; m <= N - 1; ++m) {
        SparseMatrix s = M.B[m] * M.b[m];
        if (m >= 1) s = s + M.b[m - 1] * M.B[m - 1];
        if (!s.is_zero()) return "bB + Bb != 0 at degree " + std::to_string(m);
    }
    return std::nullopt;
}

SparseMatrix leading_action(const Hopf& H, const Character& delta, int n, const Element* sigma) {
    int d = H.dim();
    const Algebra& A = H.algebra();
    int legs = sigma ? n : n - 1;
    std::optional<SparseVec> sig;
    if (sigma) sig = to_sparse(*sigma);
    std::vector<Element> Sd(d);
    for (int i = 0; i < d; ++i) Sd[i] = twisted_antipode(H, delta, H.basis(i));
    return tensor_map(d, n, legs, [&](const std::vector<int>& h) {
        if (legs == 0) return Terms{{{}, H.eps(Sd[h[0]])}};
        std::vector<SparseVec> rest;
        for (int s = 1; s < n; ++s) rest.push_back(SparseVec::unit(h[s]));
        if (sig) rest.push_back(*sig);
        Terms out;
        for (auto& [lg, c] : iterated_coproduct(H, Sd[h[0]], legs)) {
            std::vector<SparseVec> slots;
            for (int s = 0; s < legs; ++s) {
                SparseVec p;
                for (auto& [k, x] : rest[s].entries()) p.axpy(x, A.product(lg[s], k));
                slots.push_back(std::move(p));
            }
            for (auto& t : expand(slots, c)) out.push_back(std::move(t));
        }
        return out;
    });
}

std::string tensor_label(const Hopf& H, const std::vector<int>& slots) {
    if (slots.empty()) return "()";
    std::string s;
    for (std::size_t i = 0; i < slots.size(); ++i) {
        if (i) s += '|';
        s += H.label(slots[i]);
    }
    return s;
}

CocyclicModule connes_moscovici_module(const Hopf& H, const Character& delta, const Element& sigma, int N) {
    int d = H.dim();
    CocyclicModule M;
    M.name = "cm";
    M.cutoff = N;
    SparseVec sig = to_sparse(sigma);
    for (int n = 0; n <= N; ++n) {
        M.dims.push_back(ipow(d, n));
        std::vector<std::string> lab;
        for (long i = 0; i < M.dims.back(); ++i) lab.push_back(tensor_label(H, decode(d, n, i)));
        M.labels.push_back(std::move(lab));
    }
    M.faces.resize(N + 1);
    M.degeneracies.resize(N + 1);
    for (int n = 0; n < N; ++n)
        for (int i = 0; i <= n + 1; ++i)
            M.faces[n].push_back(tensor_map(d, n, n + 1, [&](const std::vector<int>& h) {
                std::vector<SparseVec> slots;
                for (int x : h) slots.push_back(SparseVec::unit(x));
                if (i == 0) {
                    slots.insert(slots.begin(), SparseVec::unit(0));
                    return expand(slots);
                }
                if (i == n + 1) {
                    slots.push_back(sig);
                    return expand(slots);
                }
                Terms out;
                for (auto& t : H.coproduct_of_basis(h[i - 1])) {
                    std::vector<int> k(h.begin(), h.begin() + (i - 1));
                    k.push_back(t.left);
                    k.push_back(t.right);
                    k.insert(k.end(), h.begin() + i, h.end());
                    out.emplace_back(std::move(k), t.coef);
                }
                return out;
            }));
    for (int n = 1; n <= N; ++n)
        for (int j = 0; j < n; ++j)
            M.degeneracies[n].push_back(tensor_map(d, n, n - 1, [&](const std::vector<int>& h) {
                Terms out;
                Scalar e = H.counit()[h[j]];
                if (e != 0) {
                    std::vector<int> k = h;
                    k.erase(k.begin() + j);
                    out.emplace_back(std::move(k), e);
                }
                return out;
            }));
    for (int n = 0; n <= N; ++n) {
        if (n == 0) {
            M.tau.push_back(SparseMatrix::identity(1));
        } else {
            M.tau.push_back(leading_action(H, delta, n, &sigma));
        }
        M.tau_power.push_back(SparseMatrix::identity(static_cast<int>(M.dims[n])));
    }
    return M;
}

MixedComplex mixed_of_cocyclic(const CocyclicModule& M, std::vector<BCandidate>* tried) {
    int N = M.cutoff;
    std::vector<SparseMatrix> b;
    for (int n = 0; n < N; ++n) {
        SparseMatrix s(static_cast<int>(M.dims[n + 1]), static_cast<int>(M.dims[n]));
        for (int i = 0; i <= n + 1; ++i) s = s + (i % 2 == 0 ? Scalar(1) : Scalar(-1)) * M.faces[n][i];
        b.push_back(std::move(s));
    }
    return arbitrate(M.name, N, M.dims, b, cm_candidates(M), tried);
}

NormalizedModule normalized_cm_module(const Hopf& H, const CocyclicModule& full, const MixedComplex& full_mixed,
                                      std::vector<BCandidate>* tried) {
    int N = full.cutoff;
    NormalizedModule R;
    std::vector<long> dims;
    for (int n = 0; n <= N; ++n) {
        R.U.push_back(u_embedding(H, n));
        R.P.push_back(u_projection(H, n));
        dims.push_back(R.U.back().cols());
    }
    auto compress = [&](const std::vector<SparseMatrix>& B) {
        std::vector<SparseMatrix> out;
        for (int n = 0; n < N; ++n) out.push_back(R.P[n] * B[n] * R.U[n + 1]);
        return out;
    };
    std::vector<SparseMatrix> bt;
    for (int n = 0; n < N; ++n) bt.push_back(R.P[n + 1] * full_mixed.b[n] * R.U[n]);
    std::vector<Candidate> cands;
    for (auto& [name, B] : cm_candidates(full)) cands.push_back({name, compress(B)});
    R.mixed = arbitrate("normalized", N, dims, bt, cands, tried);
    for (int n = 0; n < N; ++n) {
        R.morphism.rows.push_back(compare_row("b U = U b~", n, full_mixed.b[n] * R.U[n], R.U[n + 1] * R.mixed.b[n]));
        R.morphism.rows.push_back(compare_row("B U = U B~", n, full_mixed.B[n] * R.U[n + 1], R.U[n] * R.mixed.B[n]));
        auto pb = compare_row("P b = b~ P", n, R.P[n + 1] * full_mixed.b[n], R.mixed.b[n] * R.P[n]);
        auto pB = compare_row("P B = B~ P", n, R.P[n] * full_mixed.B[n], R.mixed.B[n] * R.P[n + 1]);
        pb.supplementary = pB.supplementary = true;
        R.morphism.rows.push_back(pb);
        R.morphism.rows.push_back(pB);
    }
    return R;
}

CoinvariantComplexes coinvariant_mixed_complex(const Hopf& H, const Character& delta, const Element& sigma, int N,
                                               const MixedComplex* normalized) {
    Calculus C(H, inverse(H, delta));
    CoinvariantComplexes R;
    for (int n = 0; n <= N; ++n) R.frames.push_back(coinvariant_subspace(C, n, sigma));
    std::vector<long> dims;
    for (auto& f : R.frames) dims.push_back(f.frame.dim());
    MixedComplex Bc{"coinvariant", N, dims, {}, {}, "sum kappa'^j b' restricted"};
    MixedComplex Ac{"coinvariant-forms", N, dims, {}, {}, "B_xi restricted, transposed"};
    for (int n = 0; n < N; ++n) {
        const Frame& Fn = R.frames[n].frame;
        const Frame& Fn1 = R.frames[n + 1].frame;
        Bc.b.push_back(restrict_map(C.op(OpKind::D, n), Fn, Fn1));
        Bc.B.push_back(restrict_map(C.op(OpKind::Lower, n + 1), Fn1, Fn));
        Ac.b.push_back(restrict_map(C.op(OpKind::bprime, n + 1), Fn1, Fn).transpose());
        Ac.B.push_back(restrict_map(C.op(OpKind::B, n), Fn, Fn1).transpose());
    }
    R.module_facing = std::move(Bc);
    R.form_native = std::move(Ac);
    if (normalized) {
        auto& rep = R.report;
        const MixedComplex& Nm = *normalized;
        for (int n = 0; n <= N; ++n) {
            Scalar s = n % 2 == 0 ? 1 : -1;
            rep.map.push_back(s * SparseMatrix::identity(static_cast<int>(dims[n])));
        }
        for (int n = 0; n < N; ++n) {
            rep.intertwinings.push_back({n, "d_xi ~ b~", sign_of(R.module_facing.b[n], Nm.b[n])});
            rep.intertwinings.push_back({n, "sum kappa'^j b' ~ B~", sign_of(R.module_facing.B[n], Nm.B[n])});
            rep.chain.rows.push_back(
                compare_row("f b~ = b f", n, rep.map[n + 1] * Nm.b[n], R.module_facing.b[n] * rep.map[n]));
            rep.chain.rows.push_back(
                compare_row("f B~ = B f", n, rep.map[n] * Nm.B[n], R.module_facing.B[n] * rep.map[n + 1]));
        }
        rep.certified = rep.chain.ok();
    }
    return R;
}

CocyclicModule f_twisted_module(const Algebra& A, const SparseMatrix& f, int N) {
    std::string why;
    if (!is_algebra_automorphism(A, f, &why)) throw NotAutomorphism(why);
    int d = A.dim();
    CocyclicModule M;
    M.name = "f-twisted";
    M.cutoff = N;
    M.homological = true;
    M.signed_tau = true;
    bool fid = f == SparseMatrix::identity(d);
    M.tau_power_name = fid ? "id" : "f^(n+1)";
    for (int n = 0; n <= N; ++n) {
        M.dims.push_back(ipow(d, n + 1));
        std::vector<std::string> lab;
        for (long i = 0; i < M.dims.back(); ++i) {
            auto s = decode(d, n + 1, i);
            std::string l;
            for (std::size_t k = 0; k < s.size(); ++k) l += (k ? "|" : "") + A.labels()[s[k]];
            lab.push_back(l);
        }
        M.labels.push_back(std::move(lab));
    }
    M.faces.resize(N + 1);
    M.degeneracies.resize(N + 1);
    for (int n = 1; n <= N; ++n)
        for (int i = 0; i <= n; ++i)
            M.faces[n].push_back(tensor_map(d, n + 1, n, [&](const std::vector<int>& h) {
                std::vector<SparseVec> slots;
                if (i < n) {
                    for (int s = 0; s < i; ++s) slots.push_back(SparseVec::unit(h[s]));
                    slots.push_back(A.product(h[i], h[i + 1]));
                    for (int s = i + 2; s <= n; ++s) slots.push_back(SparseVec::unit(h[s]));
                } else {
                    SparseVec p;
                    for (auto& [k, x] : f.col(h[n]).entries()) p.axpy(x, A.product(k, h[0]));
                    slots.push_back(std::move(p));
                    for (int s = 1; s < n; ++s) slots.push_back(SparseVec::unit(h[s]));
                }
                return expand(slots);
            }));
    for (int n = 0; n < N; ++n)
        for (int j = 0; j <= n; ++j)
            M.degeneracies[n].push_back(tensor_map(d, n + 1, n + 2, [&](const std::vector<int>& h) {
                std::vector<int> k(h.begin(), h.begin() + j + 1);
                k.push_back(0);
                k.insert(k.end(), h.begin() + j + 1, h.end());
                return Terms{{k, Scalar(1)}};
            }));
    SparseMatrix fpow = f;
    for (int n = 0; n <= N; ++n) {
        Scalar s = n % 2 == 0 ? 1 : -1;
        M.tau.push_back(tensor_map(d, n + 1, n + 1, [&](const std::vector<int>& h) {
            std::vector<SparseVec> slots{f.col(h[n])};
            for (int t = 0; t < n; ++t) slots.push_back(SparseVec::unit(h[t]));
            return expand(slots, s);
        }));
        if (n > 0) fpow = kron(fpow, f);
        M.tau_power.push_back(fpow);
    }
    return M;
}

MixedComplex mixed_of_cyclic(const CocyclicModule& M) {
    if (!M.homological) throw std::invalid_argument("mixed_of_cyclic expects a cyclic module");
    int N = M.cutoff;
    MixedComplex R{M.name, N, M.dims, {}, {}, "(1-lambda) s N, transposed"};
    for (int n = 0; n < N; ++n) {
        SparseMatrix bh(static_cast<int>(M.dims[n]), static_cast<int>(M.dims[n + 1]));
        for (int i = 0; i <= n + 1; ++i) bh = bh + (i % 2 == 0 ? Scalar(1) : Scalar(-1)) * M.faces[n + 1][i];
        R.b.push_back(bh.transpose());
        // extra degeneracy (1, a_0..a_n) = t_{n+1} s_n, with t = (-1)^(n+1) lambda
        Scalar s1 = (n + 1) % 2 == 0 ? 1 : -1;
        SparseMatrix extra = s1 * M.tau[n + 1] * M.degeneracies[n][n];
        SparseMatrix acc = SparseMatrix::identity(static_cast<int>(M.dims[n])), Nn = acc;
        for (int i = 1; i <= n; ++i) {
            acc = M.tau[n] * acc;
            Nn = Nn + acc;
        }
        SparseMatrix I1 = SparseMatrix::identity(static_cast<int>(M.dims[n + 1]));
        R.B.push_back(((I1 - M.tau[n + 1]) * extra * Nn).transpose());
    }
    if (auto why = mixed_defect(R)) throw NoValidMixedStructure(M.name + ": " + *why);
    return R;
}

IdentityReport verify_cyclic_identities(const CocyclicModule& M) {
    IdentityReport rep;
    int N = M.cutoff;
    auto& F = M.faces;
    auto& S = M.degeneracies;
    auto& T = M.tau;
    auto I = [&](int n) { return SparseMatrix::identity(static_cast<int>(M.dims[n])); };
    auto row = [&](const std::string& name, int n, const SparseMatrix& a, const SparseMatrix& b) {
        rep.rows.push_back(compare_row(name, n, a, b));
    };
    auto sg = [](int n) { return n % 2 == 0 ? Scalar(1) : Scalar(-1); };
    if (!M.homological) {
        for (int n = 0; n + 1 < N; ++n)
            for (int j = 1; j <= n + 2; ++j)
                for (int i = 0; i < j; ++i)
                    row("delta_j delta_i = delta_i delta_(j-1)", n, F[n + 1][j] * F[n][i], F[n + 1][i] * F[n][j - 1]);
        for (int n = 2; n <= N; ++n)
            for (int j = 0; j <= n - 2; ++j)
                for (int i = 0; i <= j; ++i)
                    row("s_j s_i = s_i s_(j+1)", n, S[n - 1][j] * S[n][i], S[n - 1][i] * S[n][j + 1]);
        for (int n = 0; n + 1 <= N; ++n)
            for (int j = 0; j <= n; ++j)
                for (int i = 0; i <= n + 1; ++i) {
                    SparseMatrix lhs = S[n + 1][j] * F[n][i];
                    if (i < j)
                        row("s_j delta_i = delta_i s_(j-1)", n, lhs, F[n - 1][i] * S[n][j - 1]);
                    else if (i == j || i == j + 1)
                        row("s_j delta_i = id", n, lhs, I(n));
                    else
                        row("s_j delta_i = delta_(i-1) s_j", n, lhs, F[n - 1][i - 1] * S[n][j]);
                }
        for (int n = 1; n <= N; ++n) {
            for (int i = 1; i <= n; ++i)
                row("tau delta_i = delta_(i-1) tau", n, T[n] * F[n - 1][i], F[n - 1][i - 1] * T[n - 1]);
            row("tau delta_0 = delta_n", n, T[n] * F[n - 1][0], F[n - 1][n]);
        }
        for (int n = 0; n + 1 <= N; ++n) {
            for (int i = 1; i <= n; ++i)
                row("tau s_i = s_(i-1) tau", n, T[n] * S[n + 1][i], S[n + 1][i - 1] * T[n + 1]);
            row("tau s_0 = s_n tau^2", n, T[n] * S[n + 1][0], S[n + 1][n] * T[n + 1] * T[n + 1]);
        }
    } else {
        for (int n = 2; n <= N; ++n)
            for (int j = 1; j <= n; ++j)
                for (int i = 0; i < j; ++i)
                    row("d_i d_j = d_(j-1) d_i", n, F[n - 1][i] * F[n][j], F[n - 1][j - 1] * F[n][i]);
        for (int n = 0; n + 2 <= N; ++n)
            for (int j = 0; j <= n; ++j)
                for (int i = 0; i <= j; ++i)
                    row("s_i s_j = s_(j+1) s_i", n, S[n + 1][i] * S[n][j], S[n + 1][j + 1] * S[n][i]);
        for (int n = 0; n + 1 <= N; ++n)
            for (int j = 0; j <= n; ++j)
                for (int i = 0; i <= n + 1; ++i) {
                    SparseMatrix lhs = F[n + 1][i] * S[n][j];
                    if (i < j)
                        row("d_i s_j = s_(j-1) d_i", n, lhs, S[n - 1][j - 1] * F[n][i]);
                    else if (i == j || i == j + 1)
                        row("d_i s_j = id", n, lhs, I(n));
                    else
                        row("d_i s_j = s_j d_(i-1)", n, lhs, S[n - 1][j] * F[n][i - 1]);
                }
        for (int n = 1; n <= N; ++n) {
            for (int i = 1; i <= n; ++i)
                row("d_i lambda = -lambda d_(i-1)", n, F[n][i] * T[n], -(T[n - 1] * F[n][i - 1]));
            row("d_0 lambda = (-1)^n d_n", n, F[n][0] * T[n], sg(n) * F[n][n]);
        }
        for (int n = 0; n + 1 <= N; ++n) {
            for (int i = 1; i <= n; ++i)
                row("s_i lambda = -lambda s_(i-1)", n, S[n][i] * T[n], -(T[n + 1] * S[n][i - 1]));
            row("s_0 lambda = (-1)^n lambda^2 s_n", n, S[n][0] * T[n], sg(n) * (T[n + 1] * T[n + 1] * S[n][n]));
        }
    }
    for (int n = 0; n <= N; ++n) {
        IdentityRow r = compare_row("tau^(n+1) = " + M.tau_power_name, n, power(T[n], n + 1), M.tau_power[n]);
        r.supplementary = true;  // measured, not promised
        rep.rows.push_back(r);
    }
    return rep;
}

}  // namespace hc
