#include "hopfcyc/cohomology.hpp"

namespace hc {

namespace {

SparseMatrix zero_map(long rows, long cols) { return SparseMatrix(static_cast<int>(rows), static_cast<int>(cols)); }

// b[n-1] : C^(n-1) -> C^n, or the zero map out of the zero space at n = 0.
SparseMatrix b_into(const MixedComplex& M, int n) { return n == 0 ? zero_map(M.dims[0], 0) : M.b[n - 1]; }

TotalComplex build_total(const MixedComplex& M, int sign) {
    TotalComplex T;
    T.top = M.cutoff;
    T.sign = sign;
    for (int m = 0; m <= T.top; ++m) {
        long s = 0;
        for (int q = m; q >= 0; q -= 2) s += M.dims[q];
        T.dims.push_back(s);
    }
    for (int m = 0; m < T.top; ++m) {
        // columns: C^m, C^(m-2), ...; rows: C^(m+1), C^(m-1), ...
        std::vector<SparseMatrix> rows;
        for (int qr = m + 1; qr >= 0; qr -= 2) {
            std::vector<SparseMatrix> blocks;
            for (int qc = m; qc >= 0; qc -= 2) {
                if (qr == qc + 1)
                    blocks.push_back(M.b[qc]);
                else if (qr == qc - 1)
                    blocks.push_back(Scalar(sign) * M.B[qr]);
                else
                    blocks.push_back(zero_map(M.dims[qr], M.dims[qc]));
            }
            rows.push_back(hstack(blocks));
        }
        T.D.push_back(vstack(rows));
    }
    return T;
}

bool squares_to_zero(const TotalComplex& T) {
    for (int m = 0; m + 1 < T.top; ++m)
        if (!(T.D[m + 1] * T.D[m]).is_zero()) return false;
    return true;
}

SparseMatrix D_into(const TotalComplex& T, int m) { return m == 0 ? zero_map(T.dims[0], 0) : T.D[m - 1]; }

// Classes of the source representatives pushed through f, in the target's class basis.
InducedMap induce(const SparseMatrix& f, const CohomologyDim& src, const SparseMatrix& tgt_in,
                  const CohomologyDim& tgt) {
    std::vector<SparseVec> basis = Subspace::column_space(tgt_in).basis();
    int nb = static_cast<int>(basis.size());
    for (auto& r : tgt.representatives) basis.push_back(r);
    Frame F(f.rows(), basis);
    std::vector<SparseVec> cols;
    for (auto& z : src.representatives) {
        auto c = F.coords(f.apply(z));
        if (!c) throw std::logic_error("image of a cocycle is not a cocycle");
        Accumulator acc(tgt.dim);
        for (auto& [i, x] : c->entries())
            if (i >= nb) acc.add(i - nb, x);
        cols.push_back(acc.take());
    }
    InducedMap R;
    R.matrix = SparseMatrix::from_columns(tgt.dim, std::move(cols));
    R.source_dim = src.dim;
    R.target_dim = tgt.dim;
    R.iso = src.dim == tgt.dim && rank(R.matrix) == src.dim;
    return R;
}

SparseMatrix total_map(const std::vector<SparseMatrix>& f, int m) {
    std::vector<SparseMatrix> blocks;
    for (int q = m; q >= 0; q -= 2) blocks.push_back(f[q]);
    return block_diag(blocks);
}

}  // namespace

void require_mixed(const MixedComplex& M) {
    if (auto why = mixed_defect(M)) throw NoValidMixedStructure(M.name + ": " + *why);
}

CohomologyDim hochschild_cohomology(const MixedComplex& M, int n) {
    if (n < 0 || n + 1 > M.cutoff)
        throw CutoffExceeded("HH^" + std::to_string(n) + " needs cutoff >= " + std::to_string(n + 1));
    require_mixed(M);
    return cohomology_dim(b_into(M, n), M.b[n]);
}

TotalComplex total_complex(const MixedComplex& M) {
    require_mixed(M);
    TotalComplex T = build_total(M, 1);
    if (squares_to_zero(T)) return T;
    T = build_total(M, -1);
    if (squares_to_zero(T)) return T;
    throw NoValidMixedStructure(M.name + ": neither b + B nor b - B squares to zero");
}

CohomologyDim cyclic_cohomology(const MixedComplex& M, int n) {
    if (n < 0 || n > M.cutoff - 1)
        throw CutoffExceeded("HC^" + std::to_string(n) + " needs cutoff >= " + std::to_string(n + 1));
    TotalComplex T = total_complex(M);
    return cohomology_dim(D_into(T, n), T.D[n]);
}

SparseMatrix periodicity_shift(const TotalComplex& T, int m) {
    long top = T.dims[m + 2] - T.dims[m];
    return vstack({zero_map(top, T.dims[m]), SparseMatrix::identity(static_cast<int>(T.dims[m]))});
}

InducedMap induced_hochschild(const std::vector<SparseMatrix>& f, const MixedComplex& source,
                              const MixedComplex& target, int n) {
    if (n + 1 > source.cutoff || n + 1 > target.cutoff) throw CutoffExceeded("induced map beyond cutoff");
    for (int k = std::max(0, n - 1); k <= n; ++k)
        if (f[k + 1] * source.b[k] != target.b[k] * f[k])
            throw NotChainMap("map does not commute with b", k);
    return induce(f[n], hochschild_cohomology(source, n), b_into(target, n), hochschild_cohomology(target, n));
}

InducedMap induced_cyclic(const std::vector<SparseMatrix>& f, const MixedComplex& source,
                          const MixedComplex& target, int n) {
    if (n > source.cutoff - 1 || n > target.cutoff - 1) throw CutoffExceeded("induced map beyond cutoff");
    for (int k = 0; k <= n; ++k) {
        if (f[k + 1] * source.b[k] != target.b[k] * f[k]) throw NotChainMap("map does not commute with b", k);
        if (f[k] * source.B[k] != target.B[k] * f[k + 1]) throw NotChainMap("map does not commute with B", k + 1);
    }
    TotalComplex Ts = total_complex(source), Tt = total_complex(target);
    if (Ts.sign != Tt.sign) throw NotChainMap("total complexes use different signs", n);
    auto hs = cohomology_dim(D_into(Ts, n), Ts.D[n]);
    auto ht = cohomology_dim(D_into(Tt, n), Tt.D[n]);
    return induce(total_map(f, n), hs, D_into(Tt, n), ht);
}

CohomologyTable periodicity_and_hp(const MixedComplex& M, int N) {
    if (N > M.cutoff) throw CutoffExceeded("periodicity table beyond cutoff");
    CohomologyTable t;
    t.name = M.name;
    t.cutoff = N;
    t.B_choice = M.B_choice;
    MixedComplex C = M;
    if (N < M.cutoff) {
        C.cutoff = N;
        C.dims.resize(N + 1);
        C.b.resize(N);
        C.B.resize(N);
    }
    TotalComplex T = total_complex(C);
    t.sign = T.sign;
    std::vector<CohomologyDim> hc;
    for (int n = 0; n <= N - 1; ++n) {
        t.hh.push_back(cohomology_dim(b_into(C, n), C.b[n]).dim);
        hc.push_back(cohomology_dim(D_into(T, n), T.D[n]));
        t.hc.push_back(hc.back().dim);
        t.hc_representatives.push_back(hc.back().representatives);
        t.reliable.push_back(n < N - 1);
    }
    for (int m = 0; m + 2 <= N - 1; ++m) {
        InducedMap s = induce(periodicity_shift(T, m), hc[m], D_into(T, m + 2), hc[m + 2]);
        t.s_maps.push_back({m, rank(s.matrix), s.iso});
    }
    for (int p = 0; p < 2; ++p) {
        std::vector<const SMap*> maps;
        for (auto& s : t.s_maps)
            if (s.from % 2 == p) maps.push_back(&s);
        auto& v = t.parity[p];
        int last = N - 1 - ((N - 1 - p) % 2 + 2) % 2;
        v.dim = last >= 0 ? t.hc[last] : 0;
        v.stabilized = maps.size() >= 2 && maps[maps.size() - 1]->iso && maps[maps.size() - 2]->iso;
    }
    return t;
}

}  // namespace hc
