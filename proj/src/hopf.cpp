#include "hopfcyc/hopf.hpp"

#include <algorithm>
#include <optional>
#include <sstream>

namespace hc {

namespace {

std::string idx3(int i, int j, int k) {
    std::ostringstream o;
    o << "(" << i << "," << j << "," << k << ")";
    return o.str();
}

std::string idx2(int i, int j) {
    std::ostringstream o;
    o << "(" << i << "," << j << ")";
    return o.str();
}

void prune(TensorVector& t) {
    for (auto it = t.begin(); it != t.end();) {
        if (it->second == 0)
            it = t.erase(it);
        else
            ++it;
    }
}

TensorVector tensor_mul(const Hopf& H, const TensorVector& a, const TensorVector& b) {
    TensorVector r;
    const auto& A = H.algebra();
    for (auto& [ka, va] : a)
        for (auto& [kb, vb] : b) {
            auto& p0 = A.product(ka[0], kb[0]);
            auto& p1 = A.product(ka[1], kb[1]);
            for (auto& [i, x] : p0.entries())
                for (auto& [j, y] : p1.entries()) r[{i, j}] += va * vb * x * y;
        }
    prune(r);
    return r;
}

}  // namespace

// ---------------------------------------------------------------- Algebra

Algebra::Algebra(int dim, std::vector<std::string> labels, std::vector<SparseVec> mult)
    : d_(dim), labels_(std::move(labels)), mult_(std::move(mult)) {
    if (static_cast<int>(labels_.size()) != d_) throw DimensionMismatch("label count differs from dimension");
    if (static_cast<int>(mult_.size()) != d_ * d_) throw DimensionMismatch("multiplication table size");
}

Element Algebra::basis(int i) const {
    Element e(d_);
    e[i] = 1;
    return e;
}

Element Algebra::mul(const Element& a, const Element& b) const {
    Element r(d_);
    for (int i = 0; i < d_; ++i) {
        if (a[i] == 0) continue;
        for (int j = 0; j < d_; ++j) {
            if (b[j] == 0) continue;
            Scalar c = a[i] * b[j];
            for (auto& [k, v] : product(i, j).entries()) r[k] += c * v;
        }
    }
    return r;
}

SparseMatrix Algebra::left_mult_matrix(const Element& a) const {
    std::vector<SparseVec> cols;
    for (int j = 0; j < d_; ++j) cols.push_back(to_sparse(mul(a, basis(j))));
    return SparseMatrix::from_columns(d_, std::move(cols));
}

SparseMatrix Algebra::right_mult_matrix(const Element& a) const {
    std::vector<SparseVec> cols;
    for (int j = 0; j < d_; ++j) cols.push_back(to_sparse(mul(basis(j), a)));
    return SparseMatrix::from_columns(d_, std::move(cols));
}

// ------------------------------------------------------------------- Hopf

Hopf::Hopf(Algebra alg, std::vector<std::vector<Term2>> comult, std::vector<Scalar> counit,
           std::vector<SparseVec> antipode)
    : alg_(std::move(alg)), comult_(std::move(comult)), counit_(std::move(counit)),
      antipode_(std::move(antipode)) {
    int d = alg_.dim();
    if (static_cast<int>(comult_.size()) != d || static_cast<int>(counit_.size()) != d ||
        static_cast<int>(antipode_.size()) != d)
        throw DimensionMismatch("Hopf structure tensors disagree with the algebra dimension");
}

bool operator==(const Hopf& a, const Hopf& b) {
    if (!(a.alg_ == b.alg_) || a.counit_ != b.counit_ || a.antipode_ != b.antipode_) return false;
    auto key = [](const Term2& t) { return std::pair(t.left, t.right); };
    for (int i = 0; i < a.dim(); ++i) {
        auto x = a.comult_[i], y = b.comult_[i];
        std::sort(x.begin(), x.end(), [&](auto& p, auto& q) { return key(p) < key(q); });
        std::sort(y.begin(), y.end(), [&](auto& p, auto& q) { return key(p) < key(q); });
        if (x != y) return false;
    }
    return true;
}

Scalar Hopf::eps(const Element& a) const {
    Scalar r = 0;
    for (int i = 0; i < dim(); ++i) r += a[i] * counit_[i];
    return r;
}

Element Hopf::S(const Element& a) const {
    Element r(dim());
    for (int i = 0; i < dim(); ++i) {
        if (a[i] == 0) continue;
        for (auto& [j, v] : antipode_[i].entries()) r[j] += a[i] * v;
    }
    return r;
}

TensorVector Hopf::coproduct(const Element& a) const {
    TensorVector r;
    for (int i = 0; i < dim(); ++i) {
        if (a[i] == 0) continue;
        for (auto& t : comult_[i]) r[{t.left, t.right}] += a[i] * t.coef;
    }
    prune(r);
    return r;
}

SparseMatrix Hopf::antipode_matrix() const { return SparseMatrix::from_columns(dim(), antipode_); }

SparseMatrix Hopf::counit_row() const {
    std::vector<SparseVec> cols;
    for (int i = 0; i < dim(); ++i) cols.push_back(counit_[i] == 0 ? SparseVec() : SparseVec({{0, counit_[i]}}));
    return SparseMatrix::from_columns(1, std::move(cols));
}

// ------------------------------------------------------------- validation

bool ValidationReport::ok() const {
    for (auto& c : checks)
        if (!c.informational && !c.pass) return false;
    return true;
}

ValidationReport validate_hopf(const Hopf& H) {
    ValidationReport rep;
    const auto& A = H.algebra();
    int d = H.dim();
    auto add = [&](std::string name, bool pass, std::string w, bool info = false) {
        rep.checks.push_back({std::move(name), pass, std::move(w), info});
    };

    bool indices_ok = true;
    std::string iw;
    for (int i = 0; i < d && indices_ok; ++i) {
        for (int j = 0; j < d; ++j) {
            auto& p = A.product(i, j);
            if (!p.empty() && (p.leading() < 0 || p.entries().back().first >= d)) {
                indices_ok = false;
                iw = "mult " + idx2(i, j);
            }
        }
        for (auto& t : H.coproduct_of_basis(i))
            if (t.left < 0 || t.left >= d || t.right < 0 || t.right >= d) {
                indices_ok = false;
                iw = "comult of e_" + std::to_string(i);
            }
        auto& s = H.antipode_columns()[i];
        if (!s.empty() && (s.leading() < 0 || s.entries().back().first >= d)) {
            indices_ok = false;
            iw = "antipode of e_" + std::to_string(i);
        }
    }
    add("indices in range", indices_ok, iw);
    if (!indices_ok) return rep;

    // unit
    {
        bool ok = true;
        std::string w;
        for (int i = 0; i < d && ok; ++i) {
            if (A.mul(A.unit(), A.basis(i)) != A.basis(i)) ok = false, w = "e_0 e_" + std::to_string(i);
            else if (A.mul(A.basis(i), A.unit()) != A.basis(i)) ok = false, w = "e_" + std::to_string(i) + " e_0";
        }
        add("unit", ok, w);
    }
    // associativity
    {
        bool ok = true;
        std::string w;
        for (int i = 0; i < d && ok; ++i)
            for (int j = 0; j < d && ok; ++j)
                for (int k = 0; k < d && ok; ++k) {
                    auto l = A.mul(A.mul(A.basis(i), A.basis(j)), A.basis(k));
                    auto r = A.mul(A.basis(i), A.mul(A.basis(j), A.basis(k)));
                    if (l != r) ok = false, w = idx3(i, j, k);
                }
        add("associativity", ok, w);
    }
    // coassociativity
    {
        bool ok = true;
        std::string w;
        for (int i = 0; i < d && ok; ++i) {
            TensorVector l, r;
            for (auto& t : H.coproduct_of_basis(i)) {
                for (auto& u : H.coproduct_of_basis(t.left)) l[{u.left, u.right, t.right}] += t.coef * u.coef;
                for (auto& u : H.coproduct_of_basis(t.right)) r[{t.left, u.left, u.right}] += t.coef * u.coef;
            }
            prune(l);
            prune(r);
            if (l != r) ok = false, w = "e_" + std::to_string(i);
        }
        add("coassociativity", ok, w);
    }
    // counit
    {
        bool ok = true;
        std::string w;
        for (int i = 0; i < d && ok; ++i) {
            Element l(d), r(d);
            for (auto& t : H.coproduct_of_basis(i)) {
                l[t.right] += H.counit()[t.left] * t.coef;
                r[t.left] += H.counit()[t.right] * t.coef;
            }
            if (l != A.basis(i)) ok = false, w = "(eps x id)Delta(e_" + std::to_string(i) + ")";
            else if (r != A.basis(i)) ok = false, w = "(id x eps)Delta(e_" + std::to_string(i) + ")";
        }
        add("counit", ok, w);
    }
    // Delta algebra map
    {
        bool ok = true;
        std::string w;
        TensorVector one{{{0, 0}, Scalar(1)}};
        if (H.coproduct(A.unit()) != one) ok = false, w = "Delta(e_0)";
        for (int i = 0; i < d && ok; ++i)
            for (int j = 0; j < d && ok; ++j) {
                auto l = H.coproduct(A.mul(A.basis(i), A.basis(j)));
                auto r = tensor_mul(H, H.coproduct(A.basis(i)), H.coproduct(A.basis(j)));
                if (l != r) ok = false, w = idx2(i, j);
            }
        add("comultiplication is an algebra map", ok, w);
    }
    // eps algebra map
    {
        bool ok = true;
        std::string w;
        if (H.counit()[0] != 1) ok = false, w = "eps(e_0)";
        for (int i = 0; i < d && ok; ++i)
            for (int j = 0; j < d && ok; ++j)
                if (H.eps(A.mul(A.basis(i), A.basis(j))) != H.counit()[i] * H.counit()[j])
                    ok = false, w = idx2(i, j);
        add("counit is an algebra map", ok, w);
    }
    // antipode
    {
        bool ok = true;
        std::string w;
        for (int i = 0; i < d && ok; ++i) {
            Element l(d), r(d);
            for (auto& t : H.coproduct_of_basis(i)) {
                auto sl = A.mul(H.S(A.basis(t.left)), A.basis(t.right));
                auto sr = A.mul(A.basis(t.left), H.S(A.basis(t.right)));
                for (int k = 0; k < d; ++k) {
                    l[k] += t.coef * sl[k];
                    r[k] += t.coef * sr[k];
                }
            }
            Element target = A.unit();
            for (auto& x : target) x *= H.counit()[i];
            if (l != target) ok = false, w = "m(S x id)Delta(e_" + std::to_string(i) + ")";
            else if (r != target) ok = false, w = "m(id x S)Delta(e_" + std::to_string(i) + ")";
        }
        if (ok && H.S(A.unit()) != A.unit()) ok = false, w = "S(e_0)";
        add("antipode", ok, w);
    }
    // S^2 = id is reported, not required
    {
        bool inv = true;
        std::string w;
        for (int i = 0; i < d && inv; ++i)
            if (H.S(H.S(A.basis(i))) != A.basis(i)) inv = false, w = "e_" + std::to_string(i);
        add("antipode is an involution (S^2 = id)", inv, w, true);
    }
    return rep;
}

// ------------------------------------------------------ coproduct helpers

TensorVector iterated_coproduct(const Hopf& H, const Element& a, int n) {
    if (n < 1) throw std::invalid_argument("iterated_coproduct needs n >= 1");
    TensorVector cur;
    for (int i = 0; i < H.dim(); ++i)
        if (a[i] != 0) cur[{i}] = a[i];
    for (int step = 1; step < n; ++step) {
        TensorVector nxt;
        for (auto& [k, v] : cur)
            for (auto& t : H.coproduct_of_basis(k.back())) {
                auto key = k;
                key.back() = t.left;
                key.push_back(t.right);
                nxt[key] += v * t.coef;
            }
        prune(nxt);
        cur = std::move(nxt);
    }
    return cur;
}

bool is_grouplike(const Hopf& H, const Element& s) {
    if (H.eps(s) != 1) return false;
    TensorVector ss;
    for (int i = 0; i < H.dim(); ++i)
        for (int j = 0; j < H.dim(); ++j)
            if (s[i] != 0 && s[j] != 0) ss[{i, j}] = s[i] * s[j];
    return H.coproduct(s) == ss;
}

// -------------------------------------------------------------- characters

Character::Character(const Hopf& H, std::vector<Scalar> values) : v_(std::move(values)) {
    int d = H.dim();
    if (static_cast<int>(v_.size()) != d) throw InvalidCharacter("character has wrong length");
    if (v_[0] != 1) throw InvalidCharacter("character does not send 1 to 1");
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) {
            Scalar lhs = 0;
            for (auto& [k, c] : H.algebra().product(i, j).entries()) lhs += c * v_[k];
            if (lhs != v_[i] * v_[j])
                throw InvalidCharacter("character is not multiplicative at " + idx2(i, j));
        }
}

Scalar Character::operator()(const Element& a) const {
    Scalar r = 0;
    for (std::size_t i = 0; i < v_.size(); ++i) r += a[i] * v_[i];
    return r;
}

Character inverse(const Hopf& H, const Character& xi) {
    std::vector<Scalar> v(H.dim());
    for (int i = 0; i < H.dim(); ++i) v[i] = xi(H.S(H.basis(i)));
    return Character(H, std::move(v));
}

Element star_convolve(const Hopf& H, const Element& a, const Character& xi) {
    Element r(H.dim());
    for (auto& [k, v] : H.coproduct(a)) r[k[0]] += v * xi.on_basis(k[1]);
    return r;
}

Element left_convolve(const Hopf& H, const Character& xi, const Element& a) {
    Element r(H.dim());
    for (auto& [k, v] : H.coproduct(a)) r[k[1]] += v * xi.on_basis(k[0]);
    return r;
}

Element ad_character(const Hopf& H, const Character& xi, const Element& a) {
    return left_convolve(H, inverse(H, xi), star_convolve(H, a, xi));
}

Element twisted_antipode(const Hopf& H, const Character& delta, const Element& h) {
    Element r(H.dim());
    for (auto& [k, v] : H.coproduct(h)) {
        auto s = H.S(H.basis(k[1]));
        Scalar c = v * delta.on_basis(k[0]);
        for (int i = 0; i < H.dim(); ++i) r[i] += c * s[i];
    }
    return r;
}

namespace {
template <class F>
SparseMatrix matrix_of(const Hopf& H, F f) {
    std::vector<SparseVec> cols;
    for (int i = 0; i < H.dim(); ++i) cols.push_back(to_sparse(f(H.basis(i))));
    return SparseMatrix::from_columns(H.dim(), std::move(cols));
}
}  // namespace

SparseMatrix star_convolve_matrix(const Hopf& H, const Character& xi) {
    return matrix_of(H, [&](const Element& a) { return star_convolve(H, a, xi); });
}

SparseMatrix ad_character_matrix(const Hopf& H, const Character& xi) {
    return matrix_of(H, [&](const Element& a) { return ad_character(H, xi, a); });
}

SparseMatrix twisted_antipode_matrix(const Hopf& H, const Character& delta) {
    return matrix_of(H, [&](const Element& a) { return twisted_antipode(H, delta, a); });
}

PairReport check_modular_pair(const Hopf& H, const std::vector<Scalar>& delta_values, const Element& sigma) {
    PairReport r;
    int d = H.dim();
    std::optional<Character> delta;
    try {
        delta.emplace(H, delta_values);
        r.delta_is_character = true;
    } catch (const InvalidCharacter& e) {
        r.witness = e.what();
    }
    r.sigma_grouplike = is_grouplike(H, sigma);
    if (!r.sigma_grouplike && r.witness.empty()) r.witness = "sigma is not group-like";
    if (!delta || !r.sigma_grouplike) return r;
    r.delta_of_sigma_is_one = (*delta)(sigma) == 1;
    if (!r.delta_of_sigma_is_one && r.witness.empty()) r.witness = "delta(sigma) != 1";
    Element sinv = H.S(sigma);
    r.involution = true;
    r.involution_alt = true;
    for (int i = 0; i < d; ++i) {
        Element h = H.basis(i);
        Element s2 = twisted_antipode(H, *delta, twisted_antipode(H, *delta, h));
        Element conj = H.mul(H.mul(sigma, h), sinv);
        if (s2 != conj && r.involution) {
            r.involution = false;
            if (r.witness.empty()) r.witness = "S_delta^2(e_" + std::to_string(i) + ") != sigma e_" + std::to_string(i) + " sigma^-1";
        }
        Element once = H.mul(twisted_antipode(H, *delta, h), sigma);
        Element twice = H.mul(twisted_antipode(H, *delta, once), sigma);
        if (twice != h) r.involution_alt = false;
    }
    r.criteria_agree = r.involution == r.involution_alt;
    return r;
}

TensorVector diagonal_action(const Hopf& H, const Element& h, const TensorVector& t) {
    TensorVector r;
    if (t.empty()) return r;
    int n = static_cast<int>(t.begin()->first.size());
    if (n == 0) {
        for (auto& [k, v] : t) r[k] += v * H.eps(h);
        prune(r);
        return r;
    }
    auto legs = iterated_coproduct(H, h, n);
    const auto& A = H.algebra();
    for (auto& [kh, vh] : legs)
        for (auto& [kt, vt] : t) {
            // Expand the slotwise products.
            std::vector<std::pair<std::vector<int>, Scalar>> acc{{{}, vh * vt}};
            for (int s = 0; s < n; ++s) {
                std::vector<std::pair<std::vector<int>, Scalar>> nxt;
                for (auto& [key, c] : acc)
                    for (auto& [k, x] : A.product(kh[s], kt[s]).entries()) {
                        auto nk = key;
                        nk.push_back(k);
                        nxt.emplace_back(std::move(nk), c * x);
                    }
                acc = std::move(nxt);
            }
            for (auto& [key, c] : acc) r[key] += c;
        }
    prune(r);
    return r;
}

bool is_algebra_automorphism(const Algebra& A, const SparseMatrix& f, std::string* witness) {
    int d = A.dim();
    auto fail = [&](std::string w) {
        if (witness) *witness = std::move(w);
        return false;
    };
    if (f.rows() != d || f.cols() != d) return fail("shape");
    if (to_element(f.col(0), d) != A.unit()) return fail("f(1) != 1");
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) {
            Element lhs = to_element(f.apply(to_sparse(A.mul(A.basis(i), A.basis(j)))), d);
            Element rhs = A.mul(to_element(f.col(i), d), to_element(f.col(j), d));
            if (lhs != rhs) return fail("f(e_i e_j) != f(e_i) f(e_j) at " + idx2(i, j));
        }
    if (rank(f) != d) return fail("not invertible");
    return true;
}

SparseMatrix two_sided_twist(const Hopf& H, const Character& alpha, const Character& beta) {
    std::vector<SparseVec> cols;
    for (int i = 0; i < H.dim(); ++i) {
        Element r(H.dim());
        for (auto& [k, v] : iterated_coproduct(H, H.basis(i), 3))
            r[k[1]] += v * alpha.on_basis(k[0]) * beta.on_basis(k[2]);
        cols.push_back(to_sparse(r));
    }
    auto f = SparseMatrix::from_columns(H.dim(), std::move(cols));
    std::string w;
    if (!is_algebra_automorphism(H.algebra(), f, &w)) throw NotAutomorphism(w);
    return f;
}

// ------------------------------------------------------------------ format

Element to_element(const SparseVec& v, int d) { return v.to_dense(d); }
SparseVec to_sparse(const Element& a) { return SparseVec::from_dense(a); }

std::string format_element(const Hopf& H, const Element& a) {
    std::ostringstream o;
    bool first = true;
    for (int i = 0; i < H.dim(); ++i) {
        if (a[i] == 0) continue;
        if (!first) o << " + ";
        first = false;
        if (a[i] != 1) o << to_string(a[i]) << "*";
        o << H.label(i);
    }
    if (first) o << "0";
    return o.str();
}

std::string format_tensor(const Hopf& H, const TensorVector& t) {
    std::ostringstream o;
    bool first = true;
    for (auto& [k, v] : t) {
        if (!first) o << " + ";
        first = false;
        if (v != 1) o << to_string(v) << "*";
        for (std::size_t s = 0; s < k.size(); ++s) o << (s ? "⊗" : "") << H.label(k[s]);
    }
    if (first) o << "0";
    return o.str();
}

}  // namespace hc
