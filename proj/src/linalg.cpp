#include "hopfcyc/linalg.hpp"

#include <algorithm>
#include <cctype>

namespace hc {

std::string to_string(const Scalar& q) { return q.get_str(); }

Scalar parse_scalar(const std::string& raw) {
    std::string s;
    for (std::size_t i = 0; i < raw.size(); ++i) {
        unsigned char ch = static_cast<unsigned char>(raw[i]);
        if (ch == 0xE2 && i + 2 < raw.size() && static_cast<unsigned char>(raw[i + 1]) == 0x88 &&
            static_cast<unsigned char>(raw[i + 2]) == 0x92) {
            s += '-';
            i += 2;
        } else if (!std::isspace(ch)) {
            s += static_cast<char>(ch);
        }
    }
    std::size_t pos = 0;
    if (pos < s.size() && (s[pos] == '-' || s[pos] == '+')) ++pos;
    std::size_t digits = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    bool ok = pos > digits;
    if (ok && pos < s.size()) {
        if (s[pos] != '/') {
            ok = false;
        } else {
            std::size_t d0 = ++pos;
            while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
            ok = pos > d0 && pos == s.size();
        }
    }
    if (!ok) throw std::invalid_argument("not a rational number: '" + raw + "'");
    if (s[0] == '+') s.erase(0, 1);
    Scalar q;
    q.set_str(s, 10);
    if (q.get_den() == 0) throw std::invalid_argument("zero denominator: '" + raw + "'");
    q.canonicalize();
    return q;
}

// ---------------------------------------------------------------- SparseVec

SparseVec::SparseVec(std::vector<Entry> sorted_entries) : e_(std::move(sorted_entries)) {
    e_.erase(std::remove_if(e_.begin(), e_.end(), [](const Entry& x) { return x.second == 0; }),
             e_.end());
}

SparseVec SparseVec::unit(int i) {
    SparseVec v;
    v.e_.emplace_back(i, Scalar(1));
    return v;
}

SparseVec SparseVec::from_dense(const std::vector<Scalar>& v) {
    SparseVec r;
    for (int i = 0; i < static_cast<int>(v.size()); ++i)
        if (v[i] != 0) r.e_.emplace_back(i, v[i]);
    return r;
}

Scalar SparseVec::at(int i) const {
    auto it = std::lower_bound(e_.begin(), e_.end(), i,
                               [](const Entry& x, int k) { return x.first < k; });
    if (it != e_.end() && it->first == i) return it->second;
    return 0;
}

std::vector<Scalar> SparseVec::to_dense(int n) const {
    std::vector<Scalar> r(n);
    for (auto& [i, c] : e_) r[i] = c;
    return r;
}

SparseVec SparseVec::operator-() const {
    SparseVec r = *this;
    for (auto& x : r.e_) x.second = -x.second;
    return r;
}

SparseVec& SparseVec::operator*=(const Scalar& c) {
    if (c == 0) {
        e_.clear();
    } else {
        for (auto& x : e_) x.second *= c;
    }
    return *this;
}

void SparseVec::axpy(const Scalar& c, const SparseVec& x) {
    if (c == 0 || x.empty()) return;
    std::vector<Entry> out;
    out.reserve(e_.size() + x.e_.size());
    auto a = e_.begin(), ae = e_.end();
    auto b = x.e_.begin(), be = x.e_.end();
    while (a != ae || b != be) {
        if (b == be || (a != ae && a->first < b->first)) {
            out.push_back(std::move(*a));
            ++a;
        } else if (a == ae || b->first < a->first) {
            out.emplace_back(b->first, c * b->second);
            ++b;
        } else {
            Scalar v = a->second + c * b->second;
            if (v != 0) out.emplace_back(a->first, std::move(v));
            ++a;
            ++b;
        }
    }
    e_ = std::move(out);
}

SparseVec operator+(const SparseVec& a, const SparseVec& b) {
    SparseVec r = a;
    r.axpy(1, b);
    return r;
}

SparseVec operator-(const SparseVec& a, const SparseVec& b) {
    SparseVec r = a;
    r.axpy(-1, b);
    return r;
}

// -------------------------------------------------------------- Accumulator

void Accumulator::resize(int n) {
    val_.assign(n, Scalar(0));
    used_.assign(n, 0);
    touched_.clear();
}

void Accumulator::add(int i, const Scalar& c) {
    if (!used_[i]) {
        used_[i] = 1;
        touched_.push_back(i);
    }
    val_[i] += c;
}

void Accumulator::add(const SparseVec& v, const Scalar& c) {
    if (c == 0) return;
    for (auto& [i, x] : v.entries()) {
        if (!used_[i]) {
            used_[i] = 1;
            touched_.push_back(i);
        }
        val_[i] += c * x;
    }
}

void Accumulator::add(const SparseVec& v) {
    for (auto& [i, x] : v.entries()) {
        if (!used_[i]) {
            used_[i] = 1;
            touched_.push_back(i);
        }
        val_[i] += x;
    }
}

SparseVec Accumulator::take() {
    std::sort(touched_.begin(), touched_.end());
    std::vector<SparseVec::Entry> out;
    out.reserve(touched_.size());
    for (int i : touched_) {
        if (val_[i] != 0) {
            out.emplace_back(i, std::move(val_[i]));
            val_[i] = 0;
        }
        used_[i] = 0;
    }
    touched_.clear();
    return SparseVec(std::move(out));
}

// ------------------------------------------------------------- SparseMatrix

SparseMatrix::SparseMatrix(int rows, int cols) : rows_(rows), cols_(cols), col_(cols) {}

SparseMatrix SparseMatrix::identity(int n) { return scalar(n, 1); }

SparseMatrix SparseMatrix::scalar(int n, const Scalar& c) {
    SparseMatrix m(n, n);
    if (c != 0)
        for (int i = 0; i < n; ++i) m.col_[i] = SparseVec({{i, c}});
    return m;
}

SparseMatrix SparseMatrix::from_columns(int rows, std::vector<SparseVec> cols) {
    SparseMatrix m;
    m.rows_ = rows;
    m.cols_ = static_cast<int>(cols.size());
    for (auto& c : cols)
        if (!c.empty() && (c.leading() < 0 || c.entries().back().first >= rows))
            throw DimensionMismatch("column entry out of range");
    m.col_ = std::move(cols);
    return m;
}

SparseMatrix SparseMatrix::from_dense(const std::vector<std::vector<Scalar>>& rows) {
    int r = static_cast<int>(rows.size());
    int c = r ? static_cast<int>(rows[0].size()) : 0;
    SparseMatrix m(r, c);
    for (int j = 0; j < c; ++j) {
        std::vector<SparseVec::Entry> e;
        for (int i = 0; i < r; ++i) {
            if (static_cast<int>(rows[i].size()) != c) throw DimensionMismatch("ragged dense matrix");
            if (rows[i][j] != 0) e.emplace_back(i, rows[i][j]);
        }
        m.col_[j] = SparseVec(std::move(e));
    }
    return m;
}

SparseMatrix SparseMatrix::from_triples(int rows, int cols,
                                        const std::vector<std::tuple<int, int, Scalar>>& t) {
    std::vector<std::vector<SparseVec::Entry>> per(cols);
    for (auto& [i, j, v] : t) {
        if (i < 0 || i >= rows || j < 0 || j >= cols) throw DimensionMismatch("triple out of range");
        per[j].emplace_back(i, v);
    }
    SparseMatrix m(rows, cols);
    for (int j = 0; j < cols; ++j) {
        auto& e = per[j];
        std::sort(e.begin(), e.end(), [](auto& a, auto& b) { return a.first < b.first; });
        std::vector<SparseVec::Entry> merged;
        for (auto& x : e) {
            if (!merged.empty() && merged.back().first == x.first)
                merged.back().second += x.second;
            else
                merged.push_back(x);
        }
        m.col_[j] = SparseVec(std::move(merged));
    }
    return m;
}

std::size_t SparseMatrix::nnz() const {
    std::size_t n = 0;
    for (auto& c : col_) n += c.nnz();
    return n;
}

bool SparseMatrix::is_zero() const {
    for (auto& c : col_)
        if (!c.empty()) return false;
    return true;
}

SparseVec SparseMatrix::apply(const SparseVec& x) const {
    Accumulator acc(rows_);
    for (auto& [k, c] : x.entries()) {
        if (k >= cols_) throw DimensionMismatch("vector longer than matrix width");
        acc.add(col_[k], c);
    }
    return acc.take();
}

SparseMatrix SparseMatrix::transpose() const {
    std::vector<std::vector<SparseVec::Entry>> rows(rows_);
    for (int j = 0; j < cols_; ++j)
        for (auto& [i, c] : col_[j].entries()) rows[i].emplace_back(j, c);
    SparseMatrix t(cols_, rows_);
    for (int i = 0; i < rows_; ++i) t.col_[i] = SparseVec(std::move(rows[i]));
    return t;
}

std::vector<SparseVec> SparseMatrix::row_vectors() const { return transpose().col_; }

std::vector<std::tuple<int, int, Scalar>> SparseMatrix::triples() const {
    std::vector<std::tuple<int, int, Scalar>> t;
    auto tr = transpose();
    for (int i = 0; i < rows_; ++i)
        for (auto& [j, c] : tr.col_[i].entries()) t.emplace_back(i, j, c);
    return t;
}

std::vector<std::vector<Scalar>> SparseMatrix::to_dense() const {
    std::vector<std::vector<Scalar>> d(rows_, std::vector<Scalar>(cols_));
    for (int j = 0; j < cols_; ++j)
        for (auto& [i, c] : col_[j].entries()) d[i][j] = c;
    return d;
}

SparseMatrix operator*(const SparseMatrix& a, const SparseMatrix& b) {
    if (a.cols_ != b.rows_) throw DimensionMismatch("matrix product shape mismatch");
    SparseMatrix r(a.rows_, b.cols_);
    Accumulator acc(a.rows_);
    for (int j = 0; j < b.cols_; ++j) {
        for (auto& [k, c] : b.col_[j].entries()) acc.add(a.col_[k], c);
        r.col_[j] = acc.take();
    }
    return r;
}

SparseMatrix operator+(const SparseMatrix& a, const SparseMatrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw DimensionMismatch("matrix sum shape mismatch");
    SparseMatrix r = a;
    for (int j = 0; j < a.cols_; ++j) r.col_[j].axpy(1, b.col_[j]);
    return r;
}

SparseMatrix operator-(const SparseMatrix& a, const SparseMatrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
        throw DimensionMismatch("matrix difference shape mismatch");
    SparseMatrix r = a;
    for (int j = 0; j < a.cols_; ++j) r.col_[j].axpy(-1, b.col_[j]);
    return r;
}

SparseMatrix operator*(const Scalar& c, const SparseMatrix& a) {
    SparseMatrix r = a;
    for (auto& col : r.col_) col *= c;
    return r;
}

SparseMatrix SparseMatrix::operator-() const { return Scalar(-1) * *this; }

bool operator==(const SparseMatrix& a, const SparseMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.col_ == b.col_;
}

std::optional<int> first_differing_column(const SparseMatrix& a, const SparseMatrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) return 0;
    for (int j = 0; j < a.cols(); ++j)
        if (a.col(j) != b.col(j)) return j;
    return std::nullopt;
}

SparseMatrix hstack(const std::vector<SparseMatrix>& blocks) {
    if (blocks.empty()) return {};
    int rows = blocks[0].rows();
    std::vector<SparseVec> cols;
    for (auto& b : blocks) {
        if (b.rows() != rows) throw DimensionMismatch("hstack row mismatch");
        for (int j = 0; j < b.cols(); ++j) cols.push_back(b.col(j));
    }
    return SparseMatrix::from_columns(rows, std::move(cols));
}

SparseMatrix vstack(const std::vector<SparseMatrix>& blocks) {
    if (blocks.empty()) return {};
    int cols = blocks[0].cols();
    int rows = 0;
    for (auto& b : blocks) {
        if (b.cols() != cols) throw DimensionMismatch("vstack column mismatch");
        rows += b.rows();
    }
    std::vector<SparseVec> out(cols);
    for (int j = 0; j < cols; ++j) {
        std::vector<SparseVec::Entry> e;
        int off = 0;
        for (auto& b : blocks) {
            for (auto& [i, c] : b.col(j).entries()) e.emplace_back(off + i, c);
            off += b.rows();
        }
        out[j] = SparseVec(std::move(e));
    }
    return SparseMatrix::from_columns(rows, std::move(out));
}

SparseMatrix block_diag(const std::vector<SparseMatrix>& blocks) {
    int rows = 0;
    for (auto& b : blocks) rows += b.rows();
    std::vector<SparseVec> cols;
    int off = 0;
    for (auto& b : blocks) {
        for (int j = 0; j < b.cols(); ++j) {
            std::vector<SparseVec::Entry> e;
            for (auto& [i, c] : b.col(j).entries()) e.emplace_back(off + i, c);
            cols.emplace_back(std::move(e));
        }
        off += b.rows();
    }
    return SparseMatrix::from_columns(rows, std::move(cols));
}

SparseMatrix kron(const SparseMatrix& a, const SparseMatrix& b) {
    std::vector<SparseVec> cols;
    cols.reserve(static_cast<std::size_t>(a.cols()) * b.cols());
    for (int ja = 0; ja < a.cols(); ++ja)
        for (int jb = 0; jb < b.cols(); ++jb) {
            std::vector<SparseVec::Entry> e;
            for (auto& [ia, ca] : a.col(ja).entries())
                for (auto& [ib, cb] : b.col(jb).entries()) e.emplace_back(ia * b.rows() + ib, ca * cb);
            cols.emplace_back(std::move(e));
        }
    return SparseMatrix::from_columns(a.rows() * b.rows(), std::move(cols));
}

SparseMatrix power(const SparseMatrix& m, unsigned k) {
    if (!m.is_square()) throw NonSquare("power of a non-square matrix");
    SparseMatrix result = SparseMatrix::identity(m.rows());
    SparseMatrix base = m;
    bool first = true;
    while (k) {
        if (k & 1u) {
            result = first ? base : result * base;
            first = false;
        }
        k >>= 1u;
        if (k) base = base * base;
    }
    return result;
}

SparseMatrix evaluate_polynomial(const SparseMatrix& m, const std::vector<Scalar>& coeffs) {
    if (!m.is_square()) throw NonSquare("polynomial in a non-square matrix");
    int n = m.rows();
    int top = static_cast<int>(coeffs.size()) - 1;
    while (top >= 0 && coeffs[top] == 0) --top;
    if (top < 0) return SparseMatrix(n, n);
    int nonzero = 0;
    for (int i = 0; i <= top; ++i) nonzero += coeffs[i] != 0;
    if (nonzero == 1) return coeffs[top] * power(m, static_cast<unsigned>(top));
    SparseMatrix r = SparseMatrix::scalar(n, coeffs[top]);
    for (int i = top - 1; i >= 0; --i) r = r * m + SparseMatrix::scalar(n, coeffs[i]);
    return r;
}

// ------------------------------------------------------------------ Echelon

int Echelon::find(int pivot) const {
    if (where_.empty()) return -1;
    return where_[pivot];
}

bool Echelon::insert(SparseVec v) {
    if (where_.empty()) where_.assign(n_, -1);
    SparseVec comb;
    if (track_) comb = SparseVec::unit(inserted_);
    ++inserted_;
    if (!v.empty() && v.entries().back().first >= n_) throw DimensionMismatch("vector outside ambient");
    while (!v.empty()) {
        int r = where_[v.leading()];
        if (r < 0) break;
        Scalar c = v.entries().front().second;
        v.axpy(-c, rows_[r]);
        if (track_) comb.axpy(-c, comb_[r]);
    }
    if (v.empty()) return false;
    Scalar inv = 1 / v.entries().front().second;
    v *= inv;
    if (track_) comb *= inv;
    where_[v.leading()] = static_cast<int>(rows_.size());
    piv_.push_back(v.leading());
    rows_.push_back(std::move(v));
    if (track_) comb_.push_back(std::move(comb));
    sorted_ = false;
    return true;
}

SparseVec Echelon::reduce(SparseVec v) const {
    if (where_.empty()) return v;
    std::size_t start = 0;
    // Entries below the current leading index are final; skip over them.
    while (start < v.nnz()) {
        int lead = v.entries()[start].first;
        int r = where_[lead];
        if (r < 0) {
            ++start;
            continue;
        }
        Scalar c = v.entries()[start].second;
        v.axpy(-c, rows_[r]);
        // The first `start` entries are untouched since rows_[r] starts at lead.
    }
    return v;
}

void Echelon::finalize() {
    std::vector<int> order(rows_.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = static_cast<int>(i);
    std::sort(order.begin(), order.end(), [&](int a, int b) { return piv_[a] < piv_[b]; });
    std::vector<SparseVec> rows, comb;
    std::vector<int> piv;
    for (int i : order) {
        rows.push_back(std::move(rows_[i]));
        piv.push_back(piv_[i]);
        if (track_) comb.push_back(std::move(comb_[i]));
    }
    rows_ = std::move(rows);
    piv_ = std::move(piv);
    comb_ = std::move(comb);
    if (where_.empty()) where_.assign(n_, -1);
    for (std::size_t i = 0; i < piv_.size(); ++i) where_[piv_[i]] = static_cast<int>(i);

    Accumulator acc(n_);
    Accumulator cacc(track_ ? inserted_ : 0);
    for (int i = static_cast<int>(rows_.size()) - 1; i >= 0; --i) {
        bool touched = false;
        for (auto& [j, c] : rows_[i].entries())
            if (j != piv_[i] && where_[j] >= 0) touched = true;
        if (!touched) continue;
        acc.add(rows_[i]);
        if (track_) cacc.add(comb_[i]);
        for (auto& [j, c] : rows_[i].entries()) {
            if (j == piv_[i] || where_[j] < 0) continue;
            acc.add(rows_[where_[j]], -c);
            if (track_) cacc.add(comb_[where_[j]], -c);
        }
        rows_[i] = acc.take();
        if (track_) comb_[i] = cacc.take();
    }
    sorted_ = true;
}

// ----------------------------------------------------------------- Subspace

Subspace Subspace::span(int ambient, const std::vector<SparseVec>& vs) {
    Echelon e(ambient);
    for (auto& v : vs) e.insert(v);
    e.finalize();
    Subspace s(ambient);
    s.rows_ = e.rows();
    s.piv_ = e.pivots();
    return s;
}

Subspace Subspace::column_space(const SparseMatrix& m) {
    std::vector<SparseVec> cols;
    cols.reserve(m.cols());
    for (int j = 0; j < m.cols(); ++j) cols.push_back(m.col(j));
    return span(m.rows(), cols);
}

Subspace Subspace::full(int ambient) {
    Subspace s(ambient);
    for (int i = 0; i < ambient; ++i) {
        s.rows_.push_back(SparseVec::unit(i));
        s.piv_.push_back(i);
    }
    return s;
}

SparseMatrix Subspace::basis_matrix() const { return SparseMatrix::from_columns(n_, rows_); }

SparseVec Subspace::residual(const SparseVec& v) const {
    if (!v.empty() && v.entries().back().first >= n_) throw DimensionMismatch("vector outside ambient");
    SparseVec r = v;
    for (std::size_t j = 0; j < rows_.size(); ++j) {
        Scalar c = v.at(piv_[j]);
        if (c != 0) r.axpy(-c, rows_[j]);
    }
    return r;
}

bool Subspace::contains(const SparseVec& v) const { return residual(v).empty(); }

bool Subspace::contains(const Subspace& other) const {
    if (other.n_ != n_) throw DimensionMismatch("subspaces in different ambient spaces");
    for (auto& v : other.rows_)
        if (!contains(v)) return false;
    return true;
}

std::optional<SparseVec> Subspace::coords(const SparseVec& v) const {
    if (!contains(v)) return std::nullopt;
    std::vector<SparseVec::Entry> e;
    for (std::size_t j = 0; j < rows_.size(); ++j) {
        Scalar c = v.at(piv_[j]);
        if (c != 0) e.emplace_back(static_cast<int>(j), c);
    }
    return SparseVec(std::move(e));
}

bool operator==(const Subspace& a, const Subspace& b) { return a.n_ == b.n_ && a.rows_ == b.rows_; }

Subspace intersect(const Subspace& a, const Subspace& b) {
    if (a.ambient() != b.ambient()) throw DimensionMismatch("intersect: ambient mismatch");
    std::vector<SparseVec> cols = a.basis();
    for (auto& v : b.basis()) cols.push_back(-v);
    auto k = kernel(SparseMatrix::from_columns(a.ambient(), cols));
    std::vector<SparseVec> out;
    int da = a.dim();
    for (auto& kv : k.basis()) {
        Accumulator acc(a.ambient());
        for (auto& [i, c] : kv.entries())
            if (i < da) acc.add(a.basis()[i], c);
        out.push_back(acc.take());
    }
    return Subspace::span(a.ambient(), out);
}

Subspace sum(const Subspace& a, const Subspace& b) {
    if (a.ambient() != b.ambient()) throw DimensionMismatch("sum: ambient mismatch");
    std::vector<SparseVec> all = a.basis();
    all.insert(all.end(), b.basis().begin(), b.basis().end());
    return Subspace::span(a.ambient(), all);
}

// -------------------------------------------------------------------- Frame

Frame::Frame(int ambient, std::vector<SparseVec> basis) : basis_(std::move(basis)) {
    Echelon e(ambient, true);
    for (auto& v : basis_)
        if (!e.insert(v)) throw DimensionMismatch("frame vectors are linearly dependent");
    e.finalize();
    span_ = Subspace::span(ambient, e.rows());
    to_frame_ = e.combos();
}

std::optional<SparseVec> Frame::coords(const SparseVec& v) const {
    auto c = span_.coords(v);
    if (!c) return std::nullopt;
    Accumulator acc(dim());
    for (auto& [j, x] : c->entries()) acc.add(to_frame_[j], x);
    return acc.take();
}

// ------------------------------------------------------- rank/kernel/image

RankKernelImage rank_kernel_image(const SparseMatrix& m) {
    Subspace img = Subspace::column_space(m);
    Subspace ker = kernel(m);
    return {img.dim(), std::move(ker), std::move(img)};
}

int rank(const SparseMatrix& m) {
    Echelon e(m.rows());
    for (int j = 0; j < m.cols(); ++j) e.insert(m.col(j));
    return e.rank();
}

Subspace kernel(const SparseMatrix& m) {
    int n = m.cols();
    Echelon e(n);
    for (auto& r : m.row_vectors()) e.insert(r);
    e.finalize();
    std::vector<char> is_pivot(n, 0);
    for (int p : e.pivots()) is_pivot[p] = 1;
    std::vector<std::vector<SparseVec::Entry>> free_vecs(n);
    for (std::size_t j = 0; j < e.rows().size(); ++j)
        for (auto& [f, c] : e.rows()[j].entries())
            if (!is_pivot[f]) free_vecs[f].emplace_back(e.pivots()[j], -c);
    std::vector<SparseVec> out;
    for (int f = 0; f < n; ++f) {
        if (is_pivot[f]) continue;
        auto& ent = free_vecs[f];
        ent.emplace_back(f, Scalar(1));
        std::sort(ent.begin(), ent.end(), [](auto& a, auto& b) { return a.first < b.first; });
        out.emplace_back(std::move(ent));
    }
    return Subspace::span(n, out);
}

SparseMatrix restrict_map(const SparseMatrix& m, const Frame& dom, const Frame& cod) {
    if (m.cols() != dom.ambient() || m.rows() != cod.ambient())
        throw DimensionMismatch("restrict_map: shape does not match the frames");
    std::vector<SparseVec> cols;
    cols.reserve(dom.dim());
    for (int j = 0; j < dom.dim(); ++j) {
        auto c = cod.coords(m.apply(dom.basis()[j]));
        if (!c) throw NotStable(j, dom.basis()[j]);
        cols.push_back(std::move(*c));
    }
    return SparseMatrix::from_columns(cod.dim(), std::move(cols));
}

SparseMatrix restrict_map(const SparseMatrix& m, const Subspace& dom, const Subspace& cod) {
    return restrict_map(m, Frame::of(dom), Frame::of(cod));
}

CohomologyDim cohomology_dim(const SparseMatrix& d_in, const SparseMatrix& d_out) {
    if (d_out.cols() != d_in.rows()) throw DimensionMismatch("cohomology_dim: shapes do not compose");
    auto prod = d_out * d_in;
    for (int j = 0; j < prod.cols(); ++j)
        if (!prod.col(j).empty()) throw NotAComplex(j);
    Subspace ker = kernel(d_out);
    Subspace img = Subspace::column_space(d_in);
    Echelon e(d_in.rows());
    for (auto& v : img.basis()) e.insert(v);
    CohomologyDim r{0, {}};
    for (auto& v : ker.basis())
        if (e.insert(v)) r.representatives.push_back(v);
    r.dim = static_cast<int>(r.representatives.size());
    return r;
}

}  // namespace hc
