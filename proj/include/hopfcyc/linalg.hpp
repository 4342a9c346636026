#pragma once

#include <gmpxx.h>

#include <optional>
#include <stdexcept>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

namespace hc {

using Scalar = mpq_class;

std::string to_string(const Scalar& q);
// Accepts "p", "p/q", "-p/q" and the unicode minus sign; throws std::invalid_argument.
Scalar parse_scalar(const std::string& s);

struct DimensionMismatch : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};
struct NonSquare : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Sorted (index, value) pairs without zeros.
class SparseVec {
public:
    using Entry = std::pair<int, Scalar>;

    SparseVec() = default;
    explicit SparseVec(std::vector<Entry> sorted_entries);
    static SparseVec unit(int i);
    static SparseVec from_dense(const std::vector<Scalar>& v);

    bool empty() const { return e_.empty(); }
    std::size_t nnz() const { return e_.size(); }
    const std::vector<Entry>& entries() const { return e_; }
    int leading() const { return e_.front().first; }
    Scalar at(int i) const;
    std::vector<Scalar> to_dense(int n) const;

    SparseVec operator-() const;
    SparseVec& operator*=(const Scalar& c);
    friend SparseVec operator*(const Scalar& c, SparseVec v) { return v *= c; }
    friend SparseVec operator+(const SparseVec& a, const SparseVec& b);
    friend SparseVec operator-(const SparseVec& a, const SparseVec& b);
    friend bool operator==(const SparseVec& a, const SparseVec& b) { return a.e_ == b.e_; }
    friend bool operator!=(const SparseVec& a, const SparseVec& b) { return !(a == b); }

    // this += c * x
    void axpy(const Scalar& c, const SparseVec& x);

private:
    std::vector<Entry> e_;
};

// Dense scratch buffer for summing many sparse contributions.
class Accumulator {
public:
    explicit Accumulator(int n = 0) { resize(n); }
    void resize(int n);
    int size() const { return static_cast<int>(val_.size()); }
    void add(int i, const Scalar& c);
    void add(const SparseVec& v, const Scalar& c);
    void add(const SparseVec& v);
    SparseVec take();

private:
    std::vector<Scalar> val_;
    std::vector<char> used_;
    std::vector<int> touched_;
};

class SparseMatrix {
public:
    SparseMatrix() = default;
    SparseMatrix(int rows, int cols);
    static SparseMatrix identity(int n);
    static SparseMatrix scalar(int n, const Scalar& c);
    static SparseMatrix from_columns(int rows, std::vector<SparseVec> cols);
    static SparseMatrix from_dense(const std::vector<std::vector<Scalar>>& rows);
    static SparseMatrix from_triples(int rows, int cols,
                                     const std::vector<std::tuple<int, int, Scalar>>& t);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    const SparseVec& col(int j) const { return col_[j]; }
    Scalar at(int i, int j) const { return col_[j].at(i); }
    std::size_t nnz() const;
    bool is_zero() const;
    bool is_square() const { return rows_ == cols_; }

    SparseVec apply(const SparseVec& x) const;
    SparseMatrix transpose() const;
    // Row-major (row, col, value) listing.
    std::vector<std::tuple<int, int, Scalar>> triples() const;
    std::vector<std::vector<Scalar>> to_dense() const;
    std::vector<SparseVec> row_vectors() const;

    friend SparseMatrix operator*(const SparseMatrix& a, const SparseMatrix& b);
    friend SparseMatrix operator+(const SparseMatrix& a, const SparseMatrix& b);
    friend SparseMatrix operator-(const SparseMatrix& a, const SparseMatrix& b);
    friend SparseMatrix operator*(const Scalar& c, const SparseMatrix& a);
    SparseMatrix operator-() const;
    friend bool operator==(const SparseMatrix& a, const SparseMatrix& b);
    friend bool operator!=(const SparseMatrix& a, const SparseMatrix& b) { return !(a == b); }

private:
    int rows_ = 0, cols_ = 0;
    std::vector<SparseVec> col_;
};

SparseMatrix hstack(const std::vector<SparseMatrix>& blocks);
SparseMatrix vstack(const std::vector<SparseMatrix>& blocks);
SparseMatrix block_diag(const std::vector<SparseMatrix>& blocks);
SparseMatrix kron(const SparseMatrix& a, const SparseMatrix& b);
SparseMatrix power(const SparseMatrix& m, unsigned k);
SparseMatrix evaluate_polynomial(const SparseMatrix& m, const std::vector<Scalar>& coeffs);

// First column where a and b differ, if any.
std::optional<int> first_differing_column(const SparseMatrix& a, const SparseMatrix& b);

// Incremental row echelon form with leading ones. Optionally tracks, for every
// stored row, its expression in terms of the inserted vectors.
class Echelon {
public:
    explicit Echelon(int ambient, bool track = false) : n_(ambient), track_(track) {}
    int ambient() const { return n_; }
    int rank() const { return static_cast<int>(rows_.size()); }
    // Returns true if v was independent of what is already stored.
    bool insert(SparseVec v);
    SparseVec reduce(SparseVec v) const;
    // Brings the stored rows to reduced echelon form, sorted by pivot.
    void finalize();
    const std::vector<SparseVec>& rows() const { return rows_; }
    const std::vector<int>& pivots() const { return piv_; }
    const std::vector<SparseVec>& combos() const { return comb_; }
    int inserted() const { return inserted_; }

private:
    int find(int pivot) const;
    int n_;
    bool track_;
    int inserted_ = 0;
    bool sorted_ = true;
    std::vector<SparseVec> rows_, comb_;
    std::vector<int> piv_;
    std::vector<int> where_;  // pivot column -> row index or -1
};

class Subspace {
public:
    Subspace() = default;
    explicit Subspace(int ambient) : n_(ambient) {}
    static Subspace span(int ambient, const std::vector<SparseVec>& vs);
    static Subspace column_space(const SparseMatrix& m);
    static Subspace full(int ambient);

    int ambient() const { return n_; }
    int dim() const { return static_cast<int>(rows_.size()); }
    const std::vector<SparseVec>& basis() const { return rows_; }
    const std::vector<int>& pivots() const { return piv_; }
    SparseMatrix basis_matrix() const;

    bool contains(const SparseVec& v) const;
    bool contains(const Subspace& other) const;
    SparseVec residual(const SparseVec& v) const;
    // Coordinates in basis() order; nullopt when v is outside.
    std::optional<SparseVec> coords(const SparseVec& v) const;

    friend bool operator==(const Subspace& a, const Subspace& b);
    friend bool operator!=(const Subspace& a, const Subspace& b) { return !(a == b); }

private:
    int n_ = 0;
    std::vector<SparseVec> rows_;
    std::vector<int> piv_;
};

Subspace intersect(const Subspace& a, const Subspace& b);
Subspace sum(const Subspace& a, const Subspace& b);

// An explicit (not necessarily echelon) basis together with a solver for
// coordinates in that basis.
class Frame {
public:
    Frame() = default;
    Frame(int ambient, std::vector<SparseVec> basis);
    static Frame of(const Subspace& s) { return Frame(s.ambient(), s.basis()); }
    int ambient() const { return span_.ambient(); }
    int dim() const { return static_cast<int>(basis_.size()); }
    const std::vector<SparseVec>& basis() const { return basis_; }
    const Subspace& span() const { return span_; }
    SparseMatrix matrix() const { return SparseMatrix::from_columns(ambient(), basis_); }
    std::optional<SparseVec> coords(const SparseVec& v) const;

private:
    std::vector<SparseVec> basis_;
    Subspace span_;
    std::vector<SparseVec> to_frame_;  // per echelon row, its frame combination
};

struct RankKernelImage {
    int rank;
    Subspace kernel;
    Subspace image;
};
RankKernelImage rank_kernel_image(const SparseMatrix& m);
int rank(const SparseMatrix& m);
Subspace kernel(const SparseMatrix& m);

struct NotStable : std::runtime_error {
    NotStable(int col, SparseVec w)
        : std::runtime_error("map leaves the subspace"), column(col), witness(std::move(w)) {}
    int column;
    SparseVec witness;  // the domain basis vector that escapes
};

// Matrix of m from dom to cod, both with explicit frames.
SparseMatrix restrict_map(const SparseMatrix& m, const Frame& dom, const Frame& cod);
SparseMatrix restrict_map(const SparseMatrix& m, const Subspace& dom, const Subspace& cod);

struct NotAComplex : std::runtime_error {
    explicit NotAComplex(int col)
        : std::runtime_error("composite of differentials is nonzero"), column(col) {}
    int column;
};

struct CohomologyDim {
    int dim;
    std::vector<SparseVec> representatives;
};
CohomologyDim cohomology_dim(const SparseMatrix& d_in, const SparseMatrix& d_out);

}  // namespace hc
