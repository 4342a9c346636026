#include "hopfcyc/omega.hpp"

#include <algorithm>
#include <sstream>

namespace hc {

namespace {

long powl(int base, int n) {
    long r = 1;
    for (int i = 0; i < n; ++i) r *= base;
    return r;
}

// Unsorted entries, merged on finish.
struct Builder {
    std::vector<SparseVec::Entry> e;
    void add(long i, const Scalar& c) {
        if (c != 0) e.emplace_back(static_cast<int>(i), c);
    }
    void add(const SparseVec& v, const Scalar& c) {
        for (auto& [i, x] : v.entries()) add(i, c * x);
    }
    SparseVec finish() {
        std::sort(e.begin(), e.end(), [](auto& a, auto& b) { return a.first < b.first; });
        std::vector<SparseVec::Entry> out;
        for (auto& [i, c] : e) {
            if (!out.empty() && out.back().first == i)
                out.back().second += c;
            else
                out.emplace_back(i, c);
        }
        out.erase(std::remove_if(out.begin(), out.end(), [](auto& p) { return p.second == 0; }), out.end());
        e.clear();
        return SparseVec(std::move(out));
    }
};

// e_i * y for an element y.
SparseVec hmul(const Hopf& H, const SparseVec& x, const SparseVec& y) {
    Builder b;
    for (auto& [i, ci] : x.entries())
        for (auto& [j, cj] : y.entries()) b.add(H.algebra().product(i, j), ci * cj);
    return b.finish();
}

SparseVec basis_vec(int i) { return SparseVec::unit(i); }

}  // namespace

std::string op_name(OpKind k) {
    switch (k) {
        case OpKind::D: return "d";
        case OpKind::DPlain: return "d-plain";
        case OpKind::b: return "b";
        case OpKind::bprime: return "b'";
        case OpKind::kappa: return "kappa";
        case OpKind::kappaprime: return "kappa'";
        case OpKind::B: return "B";
        case OpKind::Bprime: return "B'";
        case OpKind::Lower: return "lower";
        case OpKind::Xi: return "xi";
        case OpKind::XiInv: return "xi-inv";
    }
    return "?";
}

std::optional<OpKind> parse_op(const std::string& s) {
    static const std::map<std::string, OpKind> names{
        {"d", OpKind::D},           {"d-plain", OpKind::DPlain}, {"b", OpKind::b},
        {"b'", OpKind::bprime},     {"b′", OpKind::bprime},      {"bprime", OpKind::bprime},
        {"kappa", OpKind::kappa},   {"κ", OpKind::kappa},        {"kappa'", OpKind::kappaprime},
        {"κ′", OpKind::kappaprime}, {"kappaprime", OpKind::kappaprime},
        {"B", OpKind::B},           {"B'", OpKind::Bprime},      {"B′", OpKind::Bprime},
        {"Bprime", OpKind::Bprime}, {"lower", OpKind::Lower},    {"xi", OpKind::Xi},
        {"xi-inv", OpKind::XiInv},
    };
    auto it = names.find(s);
    if (it == names.end()) return std::nullopt;
    return it->second;
}

int degree_shift(OpKind k) {
    switch (k) {
        case OpKind::D:
        case OpKind::DPlain:
        case OpKind::B:
        case OpKind::Bprime: return 1;
        case OpKind::b:
        case OpKind::bprime:
        case OpKind::Lower: return -1;
        default: return 0;
    }
}

RightMul::RightMul(const Hopf& H, SparseMatrix xt, SparseMatrix xti)
    : H_(H), xt_(std::move(xt)), xti_(std::move(xti)) {}

// omega dX(a) * c = omega dX(a xt^-1 c) - (omega * xt a) dX(xt^-1 c)
const SparseVec& RightMul::basis(int n, long idx, int j) {
    int d = H_.dim();
    auto& memo = memo_[n];
    long key = idx * d + j;
    auto it = memo.find(key);
    if (it != memo.end()) return it->second;
    SparseVec out;
    if (n == 0) {
        out = H_.algebra().product(static_cast<int>(idx), j);
    } else {
        int dm1 = d - 1;
        int last = static_cast<int>(idx % dm1) + 1;
        long prefix = idx / dm1;
        const SparseVec& y = xti_.col(j);
        Builder b;
        SparseVec ay = hmul(H_, basis_vec(last), y);
        for (auto& [k, c] : ay.entries())
            if (k >= 1) b.add(prefix * dm1 + k - 1, c);
        bool tail = std::any_of(y.entries().begin(), y.entries().end(), [](auto& e) { return e.first >= 1; });
        if (tail) {
            for (auto& [m, cm] : xt_.col(last).entries()) {
                SparseVec r = basis(n - 1, prefix, m);
                for (auto& [p, cp] : r.entries())
                    for (auto& [k, ck] : y.entries())
                        if (k >= 1) b.add(static_cast<long>(p) * dm1 + k - 1, -cm * cp * ck);
            }
        }
        out = b.finish();
    }
    return memo.emplace(key, std::move(out)).first->second;
}

SparseVec RightMul::apply(int n, const SparseVec& f, const SparseVec& a) {
    Builder b;
    for (auto& [i, ci] : f.entries())
        for (auto& [j, cj] : a.entries()) b.add(basis(n, i, j), ci * cj);
    return b.finish();
}

Calculus::Calculus(const Hopf& H) : Calculus(H, Character::counit(H)) {}

Calculus::Calculus(const Hopf& H, const Character& xi)
    : H_(H),
      d_(H.dim()),
      twisted_(!xi.is_counit(H)),
      xi_(xi),
      xt_(star_convolve_matrix(H, xi)),
      xti_(star_convolve_matrix(H, inverse(H, xi))),
      plain_(H, SparseMatrix::identity(H.dim()), SparseMatrix::identity(H.dim())) {
    if (twisted_) xnative_ = std::make_unique<RightMul>(H, xt_, xti_);
}

long Calculus::dim(int n) const { return d_ * pw(n); }

long Calculus::encode(const std::vector<int>& key) const {
    long idx = key[0];
    for (std::size_t i = 1; i < key.size(); ++i) idx = idx * (d_ - 1) + key[i] - 1;
    return idx;
}

std::vector<int> Calculus::decode(int n, long idx) const {
    std::vector<int> key(n + 1);
    for (int i = n; i >= 1; --i) {
        key[i] = static_cast<int>(idx % (d_ - 1)) + 1;
        idx /= d_ - 1;
    }
    key[0] = static_cast<int>(idx);
    return key;
}

std::string Calculus::basis_label(int n, long idx) const {
    auto key = decode(n, idx);
    std::string s = (n >= 1 && key[0] == 0) ? "" : H_.label(key[0]);
    for (int i = 1; i <= n; ++i) {
        if (!s.empty()) s += ' ';
        s += "d" + H_.label(key[i]);
    }
    return s;
}

std::string Calculus::format_form(int n, const SparseVec& f) const {
    if (f.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto& [i, c] : f.entries()) {
        std::string l = basis_label(n, i);
        if (c < 0)
            os << (first ? "-" : " - ");
        else if (!first)
            os << " + ";
        Scalar a = abs(c);
        if (a != 1) os << to_string(a) << '*';
        os << l;
        first = false;
    }
    return os.str();
}

SparseVec Calculus::from_elements(const std::vector<Element>& slots) const {
    std::vector<std::pair<long, Scalar>> cur{{0, Scalar(1)}};
    for (std::size_t s = 0; s < slots.size(); ++s) {
        std::vector<std::pair<long, Scalar>> nxt;
        for (auto& [idx, c] : cur)
            for (int k = (s == 0 ? 0 : 1); k < d_; ++k) {
                if (slots[s][k] == 0) continue;
                nxt.emplace_back(s == 0 ? k : idx * (d_ - 1) + k - 1, c * slots[s][k]);
            }
        cur = std::move(nxt);
    }
    Builder b;
    for (auto& [i, c] : cur) b.add(i, c);
    return b.finish();
}

SparseVec Calculus::left_mul(const Element& a, int n, const SparseVec& f) const {
    long P = pw(n);
    Builder b;
    for (auto& [idx, c] : f.entries()) {
        long a0 = idx / P, rest = idx % P;
        for (int i = 0; i < d_; ++i) {
            if (a[i] == 0) continue;
            for (auto& [k, ck] : H_.algebra().product(i, static_cast<int>(a0)).entries())
                b.add(k * P + rest, c * a[i] * ck);
        }
    }
    return b.finish();
}

SparseVec Calculus::right_mul(int n, const SparseVec& f, const Element& a) {
    return plain_.apply(n, f, to_sparse(a));
}

SparseVec Calculus::form_mul(int p, const SparseVec& f, int q, const SparseVec& g) {
    long P = pw(q);
    Builder b;
    for (auto& [gi, gc] : g.entries()) {
        long b0 = gi / P, tail = gi % P;
        SparseVec r = plain_.apply(p, f, basis_vec(static_cast<int>(b0)));
        for (auto& [ri, rc] : r.entries()) b.add(ri * P + tail, gc * rc);
    }
    return b.finish();
}

SparseVec Calculus::differential(int n, const SparseVec& f) const {
    long P = pw(n);
    Builder b;
    for (auto& [idx, c] : f.entries()) {
        long a0 = idx / P;
        if (a0 != 0) b.add((a0 - 1) * P + idx % P, c);
    }
    return b.finish();
}

namespace {

// Slotwise application of an H-endomorphism fixing 1; non-first slots drop the unit part.
SparseVec slotwise(const SparseMatrix& m, int d, int n, long idx) {
    std::vector<std::pair<long, Scalar>> cur;
    long P = powl(d - 1, n);
    for (auto& [k, c] : m.col(static_cast<int>(idx / P)).entries()) cur.emplace_back(k, c);
    std::vector<int> slots(n);
    long rest = idx % P;
    for (int i = n - 1; i >= 0; --i) {
        slots[i] = static_cast<int>(rest % (d - 1)) + 1;
        rest /= d - 1;
    }
    for (int s : slots) {
        std::vector<std::pair<long, Scalar>> nxt;
        for (auto& [i, c] : cur)
            for (auto& [k, ck] : m.col(s).entries())
                if (k >= 1) nxt.emplace_back(i * (d - 1) + k - 1, c * ck);
        cur = std::move(nxt);
    }
    Builder b;
    for (auto& [i, c] : cur) b.add(i, c);
    return b.finish();
}

SparseVec apply_slotwise(const SparseMatrix& m, int d, int n, const SparseVec& f) {
    Builder b;
    for (auto& [i, c] : f.entries()) b.add(slotwise(m, d, n, i), c);
    return b.finish();
}

}  // namespace

SparseVec Calculus::xi_extend(int n, const SparseVec& f) const { return apply_slotwise(xt_, d_, n, f); }
SparseVec Calculus::xi_extend_inv(int n, const SparseVec& f) const { return apply_slotwise(xti_, d_, n, f); }

// Closed formulas, in coordinates (a_0; a_1..a_n) = a_0 d_xi(a_1)...d_xi(a_n).
SparseVec Calculus::native_column(OpKind k, int n, long idx) {
    RightMul& R = twisted_ ? *xnative_ : plain_;
    const int dm1 = d_ - 1;
    const long P = pw(n);
    const int a0 = static_cast<int>(idx / P);
    const long rest = idx % P;
    const Scalar sgn = (n % 2 == 1) ? 1 : -1;  // (-1)^(n-1)
    Builder out;

    auto left = [&](const SparseVec& a, int m, const SparseVec& w) {
        long Pm = pw(m);
        Builder b;
        for (auto& [wi, wc] : w.entries()) {
            long w0 = wi / Pm, wr = wi % Pm;
            SparseVec aw = hmul(H_, a, basis_vec(static_cast<int>(w0)));
            for (auto& [kk, ck] : aw.entries()) b.add(kk * Pm + wr, wc * ck);
        }
        return b.finish();
    };
    auto append = [&](const SparseVec& w, const SparseVec& y) {
        Builder b;
        for (auto& [wi, wc] : w.entries())
            for (auto& [kk, ck] : y.entries())
                if (kk >= 1) b.add(static_cast<long>(wi) * dm1 + kk - 1, wc * ck);
        return b.finish();
    };

    switch (k) {
        case OpKind::D:
            // (0; a_0, xt a_1, ..., xt a_n)
            if (a0 != 0) {
                SparseVec tail = slotwise(xt_, d_, n, rest);
                for (auto& [i, c] : tail.entries()) out.add((a0 - 1) * P + i, c);
            }
            break;
        case OpKind::DPlain:
            for (auto& [kk, c] : xti_.col(a0).entries())
                if (kk >= 1) out.add((kk - 1) * P + rest, c);
            break;
        case OpKind::Xi: return slotwise(xt_, d_, n, idx);
        case OpKind::XiInv: return slotwise(xti_, d_, n, idx);
        case OpKind::b: {
            if (n == 0) break;
            long w = idx / dm1;
            int a = static_cast<int>(idx % dm1) + 1;
            out.add(R.apply(n - 1, basis_vec(static_cast<int>(w)), xt_.col(a)), sgn);
            out.add(left(basis_vec(a), n - 1, basis_vec(static_cast<int>(w))), -sgn);
            break;
        }
        case OpKind::kappa: {
            if (n == 0) return xti_.col(a0);
            long w = idx / dm1;
            int a = static_cast<int>(idx % dm1) + 1;
            SparseVec f = append(basis_vec(0), xti_.col(a));  // d_xi(xi^-1 a) at grade 1
            long Pw = pw(n - 1);
            long w0 = w / Pw, wt = w % Pw;
            SparseVec fw = R.apply(1, f, basis_vec(static_cast<int>(w0)));
            for (auto& [ri, rc] : fw.entries())
                out.add(ri * Pw + wt, sgn * rc);
            break;
        }
        case OpKind::bprime:
        case OpKind::kappaprime: {
            if (n == 0) {
                if (k == OpKind::kappaprime) return xti_.col(a0);
                break;
            }
            long Pm = pw(n - 1);
            int a1 = static_cast<int>((idx % P) / Pm) + 1;
            SparseVec wp = basis_vec(static_cast<int>(idx % Pm));
            // a0 d(a1) w' = d(xt^-1(a0) a1) w' - d(xt^-1 a0) (xt(a1) w')
            SparseVec x1 = hmul(H_, xti_.col(a0), basis_vec(a1));
            SparseVec x2 = xti_.col(a0);
            SparseVec w2 = left(xt_.col(a1), n - 1, wp);
            if (k == OpKind::bprime) {
                // b'(d(x) eta) = xt(x) eta - eta x
                out.add(left(xt_.apply(x1), n - 1, wp), 1);
                out.add(R.apply(n - 1, wp, x1), -1);
                out.add(left(xt_.apply(x2), n - 1, w2), -1);
                out.add(R.apply(n - 1, w2, x2), 1);
            } else {
                // kappa'(d(x) eta) = (-1)^(n-1) eta d(xt^-1 x)
                out.add(append(wp, xti_.apply(x1)), sgn);
                out.add(append(w2, xti_.apply(x2)), -sgn);
            }
            break;
        }
        default: throw std::logic_error("no closed formula for " + op_name(k));
    }
    return out.finish();
}

const SparseMatrix& Calculus::native(OpKind k, int n) {
    auto key = std::make_pair(k, n);
    auto it = native_cache_.find(key);
    if (it != native_cache_.end()) return it->second;
    int tgt = n + degree_shift(k);
    std::vector<SparseVec> cols;
    long D = dim(n);
    cols.reserve(D);
    for (long i = 0; i < D; ++i) cols.push_back(tgt < 0 ? SparseVec() : native_column(k, n, i));
    return native_cache_[key] = SparseMatrix::from_columns(tgt < 0 ? 0 : static_cast<int>(dim(tgt)), std::move(cols));
}

const SparseMatrix& Calculus::presentation_iso(int n) {
    auto it = iso_.find(n);
    if (it != iso_.end()) return it->second;
    std::vector<SparseVec> cols;
    long P = pw(n);
    for (long i = 0; i < dim(n); ++i) {
        // slot 0 untouched, others through xt
        SparseVec v = slotwise(xt_, d_, n, i % P);
        Builder b;
        for (auto& [j, c] : v.entries()) b.add((i / P) * P + j, c);
        cols.push_back(b.finish());
    }
    return iso_[n] = SparseMatrix::from_columns(static_cast<int>(dim(n)), std::move(cols));
}

const SparseMatrix& Calculus::presentation_iso_inv(int n) {
    auto it = iso_inv_.find(n);
    if (it != iso_inv_.end()) return it->second;
    std::vector<SparseVec> cols;
    long P = pw(n);
    for (long i = 0; i < dim(n); ++i) {
        SparseVec v = slotwise(xti_, d_, n, i % P);
        Builder b;
        for (auto& [j, c] : v.entries()) b.add((i / P) * P + j, c);
        cols.push_back(b.finish());
    }
    return iso_inv_[n] = SparseMatrix::from_columns(static_cast<int>(dim(n)), std::move(cols));
}

const SparseMatrix& Calculus::op(OpKind k, int n) {
    auto key = std::make_pair(k, n);
    auto it = cache_.find(key);
    if (it != cache_.end()) return it->second;
    SparseMatrix m;
    int tgt = n + degree_shift(k);
    switch (k) {
        case OpKind::B:
        case OpKind::Bprime: {
            OpKind kap = k == OpKind::B ? OpKind::kappa : OpKind::kappaprime;
            SparseMatrix acc = op(OpKind::D, n);
            m = acc;
            const SparseMatrix& K = op(kap, n + 1);
            for (int j = 1; j <= n; ++j) {
                acc = K * acc;
                m = m + acc;
            }
            break;
        }
        case OpKind::Lower: {
            if (n == 0) {
                m = SparseMatrix(0, static_cast<int>(dim(0)));
                break;
            }
            SparseMatrix acc = op(OpKind::bprime, n);
            m = acc;
            const SparseMatrix& K = op(OpKind::kappaprime, n - 1);
            for (int j = 1; j <= n - 1; ++j) {
                acc = K * acc;
                m = m + acc;
            }
            break;
        }
        default:
            if (!twisted_ || k == OpKind::Xi || k == OpKind::XiInv) {
                m = native(k, n);
            } else if (tgt < 0) {
                m = native(k, n);
            } else {
                m = presentation_iso(tgt) * native(k, n) * presentation_iso_inv(n);
            }
    }
    return cache_[key] = std::move(m);
}

SparseMatrix Calculus::kappa_from_b(int n) {
    SparseMatrix r = identity(n) - op(OpKind::b, n + 1) * op(OpKind::DPlain, n);
    if (n >= 1) r = r - op(OpKind::DPlain, n - 1) * op(OpKind::b, n);
    return r;
}

FormOperator Calculus::operator_matrix(OpKind k, int n) {
    const SparseMatrix& m = op(k, n);
    if (k == OpKind::kappa && m != kappa_from_b(n))
        throw std::logic_error("kappa closed formula disagrees with 1 - bd - db at grade " + std::to_string(n));
    return {k, n, n + degree_shift(k), twisted_, m};
}

const SparseMatrix& Calculus::coaction_right(int n) {
    auto it = coact_r_.find(n);
    if (it != coact_r_.end()) return it->second;
    std::vector<SparseVec> cols;
    for (long idx = 0; idx < dim(n); ++idx) {
        auto key = decode(n, idx);
        std::vector<std::pair<long, SparseVec>> cur;  // (form index, product of right legs)
        for (auto& t : H_.coproduct_of_basis(key[0])) cur.emplace_back(t.left, t.coef * basis_vec(t.right));
        for (int s = 1; s <= n; ++s) {
            std::vector<std::pair<long, SparseVec>> nxt;
            for (auto& [fi, el] : cur)
                for (auto& t : H_.coproduct_of_basis(key[s])) {
                    if (t.left == 0) continue;
                    nxt.emplace_back(fi * (d_ - 1) + t.left - 1, t.coef * hmul(H_, el, basis_vec(t.right)));
                }
            cur = std::move(nxt);
        }
        Builder b;
        for (auto& [fi, el] : cur)
            for (auto& [h, c] : el.entries()) b.add(fi * d_ + h, c);
        cols.push_back(b.finish());
    }
    return coact_r_[n] = SparseMatrix::from_columns(static_cast<int>(dim(n) * d_), std::move(cols));
}

const SparseMatrix& Calculus::coaction_left(int n) {
    auto it = coact_l_.find(n);
    if (it != coact_l_.end()) return it->second;
    std::vector<SparseVec> cols;
    long D = dim(n);
    for (long idx = 0; idx < D; ++idx) {
        auto key = decode(n, idx);
        std::vector<std::pair<SparseVec, long>> cur;
        for (auto& t : H_.coproduct_of_basis(key[0])) cur.emplace_back(t.coef * basis_vec(t.left), t.right);
        for (int s = 1; s <= n; ++s) {
            std::vector<std::pair<SparseVec, long>> nxt;
            for (auto& [el, fi] : cur)
                for (auto& t : H_.coproduct_of_basis(key[s])) {
                    if (t.right == 0) continue;
                    nxt.emplace_back(t.coef * hmul(H_, el, basis_vec(t.left)), fi * (d_ - 1) + t.right - 1);
                }
            cur = std::move(nxt);
        }
        Builder b;
        for (auto& [el, fi] : cur)
            for (auto& [h, c] : el.entries()) b.add(h * D + fi, c);
        cols.push_back(b.finish());
    }
    return coact_l_[n] = SparseMatrix::from_columns(static_cast<int>(D * d_), std::move(cols));
}

SparseVec Calculus::pi_r(const Element& h) {
    Builder b;
    for (auto& [k, c] : H_.coproduct(h)) {
        if (k[0] == 0) continue;
        SparseVec da = basis_vec(k[0] - 1);
        b.add(plain_.apply(1, da, H_.antipode_columns()[k[1]]), c);
    }
    return b.finish();
}

SparseVec Calculus::pi_r_twisted(const Element& h) {
    Character xinv = inverse(H_, xi_);
    Builder b;
    for (auto& [k, c] : H_.coproduct(h)) {
        Element e = H_.basis(k[0]);
        SparseVec dx = differential(0, xi_extend(0, to_sparse(e)));
        if (dx.empty()) continue;
        b.add(plain_.apply(1, dx, to_sparse(twisted_antipode(H_, xinv, H_.basis(k[1])))), c);
    }
    return b.finish();
}

SparseMatrix Calculus::antipode_on_forms(int n) {
    std::vector<SparseVec> cols;
    Scalar sign = ((n * (n - 1) / 2) % 2 == 0) ? 1 : -1;
    for (long idx = 0; idx < dim(n); ++idx) {
        auto key = decode(n, idx);
        std::vector<Element> slots{H_.unit()};
        for (int i = n; i >= 1; --i) slots.push_back(H_.S(H_.basis(key[i])));
        SparseVec f = from_elements(slots);
        SparseVec r = plain_.apply(n, f, H_.antipode_columns()[key[0]]);
        r *= sign;
        cols.push_back(std::move(r));
    }
    return SparseMatrix::from_columns(static_cast<int>(dim(n)), std::move(cols));
}

namespace {

using Poly = std::vector<Scalar>;  // low degree first

void trim(Poly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

Poly pmul(const Poly& a, const Poly& b) {
    if (a.empty() || b.empty()) return {};
    Poly r(a.size() + b.size() - 1);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    trim(r);
    return r;
}

Poly psub(Poly a, const Poly& b) {
    if (a.size() < b.size()) a.resize(b.size());
    for (std::size_t i = 0; i < b.size(); ++i) a[i] -= b[i];
    trim(a);
    return a;
}

std::pair<Poly, Poly> pdivmod(Poly a, const Poly& b) {
    trim(a);
    if (a.size() < b.size()) return {{}, a};
    Poly q(a.size() - b.size() + 1);
    while (!a.empty() && a.size() >= b.size()) {
        std::size_t s = a.size() - b.size();
        Scalar c = a.back() / b.back();
        q[s] = c;
        for (std::size_t i = 0; i < b.size(); ++i) a[s + i] -= c * b[i];
        trim(a);
    }
    trim(q);
    return {q, a};
}

}  // namespace

std::vector<Scalar> harmonic_polynomial(int n) {
    if (n == 0) return {Scalar(1)};
    Poly q1(n, Scalar(1)), q2(n + 1, Scalar(1));
    Poly q = pmul(q1, q2);
    Poly m{Scalar(1), Scalar(-2), Scalar(1)};
    // extended Euclid on (m, q): find v with v q = 1 mod m
    Poly r0 = m, r1 = q, s0{}, s1{Scalar(1)};
    while (!r1.empty()) {
        auto [qq, rr] = pdivmod(r0, r1);
        Poly s2 = psub(s0, pmul(qq, s1));
        r0 = std::move(r1);
        r1 = std::move(rr);
        s0 = std::move(s1);
        s1 = std::move(s2);
    }
    // r0 is a nonzero constant since gcd = 1
    Scalar inv = Scalar(1) / r0[0];
    Poly v = s0;
    for (auto& c : v) c *= inv;
    Poly h = pmul(v, q);
    return pdivmod(h, pmul(m, q)).second;
}

SparseMatrix Calculus::harmonic_projection(int n) {
    if (twisted_) throw std::logic_error("harmonic projection is defined for the untwisted calculus");
    if (n == 0) return identity(0);
    const SparseMatrix& K = op(OpKind::kappa, n);
    SparseMatrix I = identity(n);
    SparseMatrix Kn = power(K, n);
    if (!((Kn - I) * (Kn * K - I)).is_zero())
        throw AnnihilatorFailure("(kappa^n - 1)(kappa^(n+1) - 1) != 0 at grade " + std::to_string(n));
    return evaluate_polynomial(K, harmonic_polynomial(n));
}

Subspace coinvariant_kernel(Calculus& C, Side side, int n, const Element& sigma) {
    int d = C.d();
    long D = C.dim(n);
    std::vector<SparseVec> cols;
    for (long i = 0; i < D; ++i) {
        Builder b;
        for (int h = 0; h < d; ++h)
            if (sigma[h] != 0) b.add(side == Side::Right ? i * d + h : h * D + i, sigma[h]);
        cols.push_back(b.finish());
    }
    SparseMatrix S = SparseMatrix::from_columns(static_cast<int>(D * d), std::move(cols));
    const SparseMatrix& co = side == Side::Right ? C.coaction_right(n) : C.coaction_left(n);
    return kernel(co - S);
}

CoinvariantData coinvariant_subspace(Calculus& C, int n, const Element& sigma, bool twisted_route) {
    const Hopf& H = C.hopf();
    int d = C.d();
    Subspace ker = coinvariant_kernel(C, Side::Right, n, sigma);
    long expect = powl(d - 1, n);
    if (ker.dim() != expect)
        throw CoinvariantMismatch("coinvariant kernel has dimension " + std::to_string(ker.dim()) + ", expected " +
                                  std::to_string(expect));
    std::vector<SparseVec> pis;
    for (int k = 1; k < d; ++k) {
        Element u = H.basis(k);
        u[0] -= H.counit()[k];
        pis.push_back(twisted_route ? C.pi_r_twisted(u) : C.pi_r(u));
    }
    std::vector<SparseVec> cur{SparseVec::unit(0)};
    for (int m = 1; m <= n; ++m) {
        std::vector<SparseVec> nxt;
        for (auto& f : cur)
            for (auto& p : pis) nxt.push_back(C.form_mul(m - 1, f, 1, p));
        cur = std::move(nxt);
    }
    for (auto& f : cur) f = C.right_mul(n, f, sigma);
    SparseMatrix bm = SparseMatrix::from_columns(static_cast<int>(C.dim(n)), cur);
    if (Subspace::column_space(bm) != ker || rank(bm) != expect)
        throw CoinvariantMismatch("basis map image differs from the coinvariant kernel at degree " + std::to_string(n));
    return {n, sigma, ker, bm, Frame(static_cast<int>(C.dim(n)), std::move(cur))};
}

Subspace biinvariant_subspace(Calculus& C, int n) {
    Element one = C.hopf().unit();
    return intersect(coinvariant_kernel(C, Side::Left, n, one), coinvariant_kernel(C, Side::Right, n, one));
}

SparseMatrix u_embedding(const Hopf& H, int n) {
    int d = H.dim();
    long rows = powl(d, n), cols = powl(d - 1, n);
    std::vector<SparseVec> out;
    for (long c = 0; c < cols; ++c) {
        std::vector<std::pair<long, Scalar>> cur{{0, Scalar(1)}};
        long rest = c;
        std::vector<int> ks(n);
        for (int i = n - 1; i >= 0; --i) {
            ks[i] = static_cast<int>(rest % (d - 1)) + 1;
            rest /= d - 1;
        }
        for (int k : ks) {
            std::vector<std::pair<long, Scalar>> nxt;
            for (auto& [i, v] : cur) {
                nxt.emplace_back(i * d + k, v);
                if (H.counit()[k] != 0) nxt.emplace_back(i * d, -v * H.counit()[k]);
            }
            cur = std::move(nxt);
        }
        Builder b;
        for (auto& [i, v] : cur) b.add(i, v);
        out.push_back(b.finish());
    }
    return SparseMatrix::from_columns(static_cast<int>(rows), std::move(out));
}

namespace {

// Slot map H -> u-coords: x -> coefficients of x - eps(x) t on e_1..e_{d-1}.
std::vector<SparseVec> slot_projection(const Hopf& H, const Element& t) {
    int d = H.dim();
    std::vector<SparseVec> r;
    for (int j = 0; j < d; ++j) {
        Element x = H.basis(j);
        Scalar e = H.counit()[j];
        for (int k = 0; k < d; ++k) x[k] -= e * t[k];
        Builder b;
        for (int k = 1; k < d; ++k) b.add(k - 1, x[k]);
        r.push_back(b.finish());
    }
    return r;
}

SparseMatrix tensor_projection(const Hopf& H, int n, const Element& last) {
    int d = H.dim();
    auto P = slot_projection(H, H.unit());
    auto Pl = slot_projection(H, last);
    long rows = powl(d - 1, n), cols = powl(d, n);
    std::vector<SparseVec> out;
    for (long c = 0; c < cols; ++c) {
        std::vector<int> js(n);
        long rest = c;
        for (int i = n - 1; i >= 0; --i) {
            js[i] = static_cast<int>(rest % d);
            rest /= d;
        }
        std::vector<std::pair<long, Scalar>> cur{{0, Scalar(1)}};
        for (int s = 0; s < n; ++s) {
            const SparseVec& v = (s == n - 1 ? Pl : P)[js[s]];
            std::vector<std::pair<long, Scalar>> nxt;
            for (auto& [i, x] : cur)
                for (auto& [k, y] : v.entries()) nxt.emplace_back(i * (d - 1) + k, x * y);
            cur = std::move(nxt);
        }
        Builder b;
        for (auto& [i, v] : cur) b.add(i, v);
        out.push_back(b.finish());
    }
    return SparseMatrix::from_columns(static_cast<int>(rows), std::move(out));
}

}  // namespace

SparseMatrix u_projection(const Hopf& H, int n) { return tensor_projection(H, n, H.unit()); }

SparseMatrix u_projection_sigma(const Hopf& H, int n, const Element& sigma) {
    return tensor_projection(H, n, sigma);
}

}  // namespace hc
