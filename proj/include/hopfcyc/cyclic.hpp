#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "hopfcyc/hopf.hpp"
#include "hopfcyc/identities.hpp"
#include "hopfcyc/linalg.hpp"
#include "hopfcyc/omega.hpp"

namespace hc {

// Truncated (co)cyclic module. In the cocyclic case faces raise degree and
// degeneracies lower it; in the cyclic (homological) case it is the other way.
struct CocyclicModule {
    std::string name;
    int cutoff = 0;
    bool homological = false;
    std::vector<long> dims;                        // 0..cutoff
    std::vector<std::vector<std::string>> labels;  // basis labels per degree
    // cocyclic: faces[n][i] : n -> n+1, i = 0..n+1, n < cutoff; degeneracies[n][j] : n -> n-1, j = 0..n-1
    // cyclic:   faces[n][i] : n -> n-1, i = 0..n, n >= 1;       degeneracies[n][j] : n -> n+1, j = 0..n
    std::vector<std::vector<SparseMatrix>> faces, degeneracies;
    std::vector<SparseMatrix> tau;
    bool signed_tau = false;             // tau already carries the (-1)^n sign
    std::vector<SparseMatrix> tau_power; // what tau^(n+1) is measured against
    std::string tau_power_name = "id";
};

struct MixedComplex {
    std::string name;
    int cutoff = 0;
    std::vector<long> dims;       // 0..cutoff
    std::vector<SparseMatrix> b;  // b[n] : n -> n+1, n = 0..cutoff-1
    std::vector<SparseMatrix> B;  // B[n] : n+1 -> n, n = 0..cutoff-1
    std::string B_choice;
};

struct NoValidMixedStructure : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// "+", "-", "both" or "none" for a = +-x.
std::string sign_of(const SparseMatrix& a, const SparseMatrix& x);

// First failing mixed identity, if any.
std::optional<std::string> mixed_defect(const MixedComplex& M);

// (h_1, ..., h_n) -> S_delta(h_1).(h_2, ..., h_n, sigma) on H^{(x)n}; without sigma the
// target is H^{(x)(n-1)}, and at n = 1 the map is h -> eps(S_delta(h)).
SparseMatrix leading_action(const Hopf& H, const Character& delta, int n, const Element* sigma);

std::string tensor_label(const Hopf& H, const std::vector<int>& slots);

CocyclicModule connes_moscovici_module(const Hopf& H, const Character& delta, const Element& sigma, int N);

struct BCandidate {
    std::string name;
    bool passes = false;
    bool zero = false;
};

// b = sum (-1)^i delta_i; B chosen among the displayed orderings.
MixedComplex mixed_of_cocyclic(const CocyclicModule& M, std::vector<BCandidate>* tried = nullptr);

struct NormalizedModule {
    MixedComplex mixed;
    std::vector<SparseMatrix> U;   // (ker eps)^{(x)n} -> H^{(x)n}
    std::vector<SparseMatrix> P;   // H^{(x)n} -> (ker eps)^{(x)n}
    IdentityReport morphism;       // U is a map of mixed complexes; P rows are supplementary
};

NormalizedModule normalized_cm_module(const Hopf& H, const CocyclicModule& full, const MixedComplex& full_mixed,
                                      std::vector<BCandidate>* tried = nullptr);

struct Intertwining {
    int degree;
    std::string relation;  // e.g. "d_xi ~ b~"
    std::string sign;      // "+", "-", "both" or "none"
};

struct ChainMapReport {
    std::vector<SparseMatrix> map;  // f_n on (ker eps)^{(x)n}
    std::vector<Intertwining> intertwinings;
    IdentityReport chain;           // f b~ = b f and f B~ = B f per degree
    bool certified = false;
};

struct CoinvariantComplexes {
    MixedComplex module_facing;  // (B): d_xi restricted, sum kappa'^j b' restricted
    MixedComplex form_native;    // (A): transposes of b'_xi and B_xi restricted
    std::vector<CoinvariantData> frames;
    ChainMapReport report;
};

// xi = delta o S. Throws NotStable if an operator leaves the coinvariants.
CoinvariantComplexes coinvariant_mixed_complex(const Hopf& H, const Character& delta, const Element& sigma, int N,
                                               const MixedComplex* normalized = nullptr);

// A^{(x)(n+1)} with the f-twisted faces; tau^(n+1) measured against f^{(x)(n+1)}.
CocyclicModule f_twisted_module(const Algebra& A, const SparseMatrix& f, int N);
// Connes B for a cyclic module when tau^(n+1) = id; transposed into the cochain convention.
MixedComplex mixed_of_cyclic(const CocyclicModule& M);

IdentityReport verify_cyclic_identities(const CocyclicModule& M);

}  // namespace hc
