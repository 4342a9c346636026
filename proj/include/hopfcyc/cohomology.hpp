#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "hopfcyc/cyclic.hpp"
#include "hopfcyc/linalg.hpp"

namespace hc {

struct CutoffExceeded : std::out_of_range {
    using std::out_of_range::out_of_range;
};

struct NotChainMap : std::runtime_error {
    NotChainMap(const std::string& what, int deg) : std::runtime_error(what), degree(deg) {}
    int degree;
};

// Throws NoValidMixedStructure if b^2, B^2 or bB + Bb is nonzero.
void require_mixed(const MixedComplex& M);

CohomologyDim hochschild_cohomology(const MixedComplex& M, int n);  // n + 1 <= cutoff

// Tot^m = C^m + C^(m-2) + ... (column p holds C^(m-2p)), D = b + sign B.
struct TotalComplex {
    int top = 0;                   // Tot^m built for m <= top
    int sign = 1;                  // +1: b + B, -1: b - B
    std::vector<long> dims;        // 0..top
    std::vector<SparseMatrix> D;   // D[m] : Tot^m -> Tot^(m+1), m < top
};

// Total complex through degree cutoff - 1 plus the target of its last differential.
TotalComplex total_complex(const MixedComplex& M);
CohomologyDim cyclic_cohomology(const MixedComplex& M, int n);  // n <= cutoff - 1

// x -> (0, x) : Tot^m -> Tot^(m+2)
SparseMatrix periodicity_shift(const TotalComplex& T, int m);

struct InducedMap {
    SparseMatrix matrix;  // target classes x source classes
    int source_dim = 0, target_dim = 0;
    bool iso = false;
};

// f[n] : source C^n -> target C^n. Hochschild needs f commuting with b, cyclic also with B.
InducedMap induced_hochschild(const std::vector<SparseMatrix>& f, const MixedComplex& source,
                              const MixedComplex& target, int n);
InducedMap induced_cyclic(const std::vector<SparseMatrix>& f, const MixedComplex& source,
                          const MixedComplex& target, int n);

struct SMap {
    int from = 0;  // HC^from -> HC^(from+2)
    int rank = 0;
    bool iso = false;
};

struct ParityVerdict {
    bool stabilized = false;
    int dim = 0;  // dimension at the last computed degree of the parity
};

struct CohomologyTable {
    std::string name;
    int cutoff = 0;
    int sign = 1;
    std::string B_choice;
    std::vector<int> hh, hc;               // degrees 0..cutoff-1
    std::vector<bool> reliable;            // degree < cutoff - 1
    std::vector<std::vector<SparseVec>> hc_representatives;
    std::vector<SMap> s_maps;
    ParityVerdict parity[2];
};

CohomologyTable periodicity_and_hp(const MixedComplex& M, int N);

}  // namespace hc
