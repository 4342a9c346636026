#pragma once

#include <string>
#include <vector>

#include "hopfcyc/omega.hpp"

namespace hc {

struct IdentityRow {
    std::string name;
    int degree = 0;
    bool pass = false;
    std::string witness;     // first failing coordinate
    std::string note;        // e.g. the sign found for b' = +-b kappa'
    bool supplementary = false;  // reported, but not part of ok()
};

struct IdentityReport {
    std::vector<IdentityRow> rows;
    bool ok() const;
    const IdentityRow* find(const std::string& name, int degree) const;
    void append(const IdentityReport& other);
};

// Compares two matrices; on mismatch names the first differing source column.
IdentityRow compare_row(const std::string& name, int degree, const SparseMatrix& lhs, const SparseMatrix& rhs,
                        const Calculus* C = nullptr, int source_degree = -1);

// The operator identities at grade n >= 1: kappa routes, (i)-(ix), kappa' kappa = 1 and
// the sign of b' = +-b kappa'. For a nontrivial twist (ix) is supplementary and the
// relation bB + Bb = xi - 1 is reported next to it.
IdentityReport verify_identities(Calculus& C, int n);

// d^2 = 0, d_xi^2 = 0, graded and twisted Leibniz on basis products with p + q <= N,
// xi extension multiplicative and commuting with d.
IdentityReport verify_calculus(Calculus& C, int N);

// Coactions: counital, coassociative, commute with d, algebra maps on basis products,
// and twisted equivariance for the calculus twist.
IdentityReport verify_coactions(Calculus& C, int N);

}  // namespace hc
