#include "hopfcyc/builtins.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <numeric>
#include <sstream>

namespace hc {

std::vector<std::string> builtin_names() {
    return {"group:Z2", "group:Z3", "group:Z4", "group:S3", "functions:Z2", "functions:Z3", "sweedler", "trivial"};
}

Hopf builtin(const std::string& name) {
    if (name == "group:Z2") return cyclic_group_algebra(2);
    if (name == "group:Z3") return cyclic_group_algebra(3);
    if (name == "group:Z4") return cyclic_group_algebra(4);
    if (name == "group:S3") return symmetric_group_s3();
    if (name == "functions:Z2") return function_algebra_cyclic(2);
    if (name == "functions:Z3") return function_algebra_cyclic(3);
    if (name == "sweedler") return sweedler();
    if (name == "trivial") return trivial_hopf();
    throw std::invalid_argument("unknown builtin '" + name + "'");
}

Hopf group_algebra(const std::vector<std::vector<int>>& table, const std::vector<std::string>& labels) {
    int n = static_cast<int>(table.size());
    std::vector<SparseVec> mult(static_cast<std::size_t>(n) * n);
    std::vector<int> inv(n, -1);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            mult[static_cast<std::size_t>(i) * n + j] = SparseVec::unit(table[i][j]);
            if (table[i][j] == 0) inv[i] = j;
        }
    std::vector<std::vector<Term2>> comult(n);
    std::vector<Scalar> counit(n, Scalar(1));
    std::vector<SparseVec> antipode(n);
    for (int i = 0; i < n; ++i) {
        comult[i].push_back({i, i, Scalar(1)});
        antipode[i] = SparseVec::unit(inv[i]);
    }
    return Hopf(Algebra(n, labels, std::move(mult)), std::move(comult), std::move(counit), std::move(antipode));
}

Hopf cyclic_group_algebra(int n) {
    std::vector<std::vector<int>> t(n, std::vector<int>(n));
    std::vector<std::string> labels;
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) t[i][j] = (i + j) % n;
        labels.push_back(i == 0 ? "1" : i == 1 ? "g" : "g" + std::to_string(i));
    }
    return group_algebra(t, labels);
}

Hopf symmetric_group_s3() {
    std::vector<std::array<int, 3>> perms;
    std::array<int, 3> p{0, 1, 2};
    do perms.push_back(p);
    while (std::next_permutation(p.begin(), p.end()));
    int n = static_cast<int>(perms.size());
    auto index = [&](const std::array<int, 3>& q) {
        return static_cast<int>(std::find(perms.begin(), perms.end(), q) - perms.begin());
    };
    std::vector<std::vector<int>> t(n, std::vector<int>(n));
    std::vector<std::string> labels;
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            std::array<int, 3> c{};
            for (int x = 0; x < 3; ++x) c[x] = perms[i][perms[j][x]];  // (ij)(x) = i(j(x))
            t[i][j] = index(c);
        }
        std::string l;
        for (int x : perms[i]) l += static_cast<char>('1' + x);
        labels.push_back(l);
    }
    return group_algebra(t, labels);
}

// Functions on Z/n in the basis e_0 = 1 = sum_h p_h, e_i = p_i.
Hopf function_algebra_cyclic(int n) {
    // p-coordinates of e_i, and e-coordinates of p_h.
    auto e_of_p = [&](int h) {
        Element v(n);
        if (h == 0) {
            v[0] = 1;
            for (int k = 1; k < n; ++k) v[k] = -1;
        } else {
            v[h] = 1;
        }
        return v;
    };
    auto p_of_e = [&](int i) {
        std::vector<Scalar> v(n);
        if (i == 0)
            std::fill(v.begin(), v.end(), Scalar(1));
        else
            v[i] = 1;
        return v;
    };
    std::vector<SparseVec> mult(static_cast<std::size_t>(n) * n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            auto a = p_of_e(i), b = p_of_e(j);
            Element r(n);
            for (int h = 0; h < n; ++h) {
                Scalar c = a[h] * b[h];
                if (c == 0) continue;
                auto eh = e_of_p(h);
                for (int k = 0; k < n; ++k) r[k] += c * eh[k];
            }
            mult[static_cast<std::size_t>(i) * n + j] = to_sparse(r);
        }
    std::vector<std::vector<Term2>> comult(n);
    std::vector<Scalar> counit(n);
    std::vector<SparseVec> antipode(n);
    for (int i = 0; i < n; ++i) {
        auto a = p_of_e(i);
        std::map<std::pair<int, int>, Scalar> t;
        Element s(n);
        for (int h = 0; h < n; ++h) {
            if (a[h] == 0) continue;
            for (int x = 0; x < n; ++x) {
                int y = ((h - x) % n + n) % n;
                auto ex = e_of_p(x), ey = e_of_p(y);
                for (int k = 0; k < n; ++k)
                    for (int l = 0; l < n; ++l)
                        if (ex[k] != 0 && ey[l] != 0) t[{k, l}] += a[h] * ex[k] * ey[l];
            }
            if (h == 0) counit[i] += a[h];
            auto em = e_of_p((n - h) % n);
            for (int k = 0; k < n; ++k) s[k] += a[h] * em[k];
        }
        for (auto& [kl, c] : t)
            if (c != 0) comult[i].push_back({kl.first, kl.second, c});
        antipode[i] = to_sparse(s);
    }
    std::vector<std::string> labels{"1"};
    for (int i = 1; i < n; ++i) labels.push_back("p" + std::to_string(i));
    return Hopf(Algebra(n, labels, std::move(mult)), std::move(comult), std::move(counit), std::move(antipode));
}

Hopf sweedler() {
    // basis 1, g, x, gx as g^a x^b
    const int ga[4] = {0, 1, 0, 1}, xb[4] = {0, 0, 1, 1};
    auto idx = [](int a, int b) { return a + 2 * b; };
    std::vector<SparseVec> mult(16);
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) {
            if (xb[i] + xb[j] > 1) continue;
            int sign = (xb[i] == 1 && ga[j] == 1) ? -1 : 1;  // x g = -g x
            mult[i * 4 + j] = SparseVec({{idx((ga[i] + ga[j]) % 2, xb[i] + xb[j]), Scalar(sign)}});
        }
    std::vector<std::vector<Term2>> comult{
        {{0, 0, 1}},
        {{1, 1, 1}},
        {{2, 0, 1}, {1, 2, 1}},  // x⊗1 + g⊗x
        {{3, 1, 1}, {0, 3, 1}},  // gx⊗g + 1⊗gx
    };
    std::vector<Scalar> counit{1, 1, 0, 0};
    std::vector<SparseVec> antipode{SparseVec::unit(0), SparseVec::unit(1), SparseVec({{3, Scalar(-1)}}),
                                    SparseVec::unit(2)};
    return Hopf(Algebra(4, {"1", "g", "x", "gx"}, std::move(mult)), std::move(comult), std::move(counit),
                std::move(antipode));
}

Hopf trivial_hopf() {
    return Hopf(Algebra(1, {"1"}, {SparseVec::unit(0)}), {{{0, 0, 1}}}, {Scalar(1)}, {SparseVec::unit(0)});
}

std::vector<Scalar> parse_coefficients(const std::string& list, int d) {
    std::vector<Scalar> v;
    std::stringstream ss(list);
    std::string item;
    while (std::getline(ss, item, ',')) v.push_back(parse_scalar(item));
    if (static_cast<int>(v.size()) != d)
        throw std::invalid_argument("expected " + std::to_string(d) + " coefficients, got '" + list + "'");
    return v;
}

ModularPair parse_pair(const Hopf& H, const std::string& spec) {
    int d = H.dim();
    if (spec == "eps-1") return {spec, H.counit(), H.unit()};
    if (spec == "eps-g") {
        auto& l = H.labels();
        auto it = std::find(l.begin(), l.end(), "g");
        if (it == l.end()) throw std::invalid_argument("pair eps-g needs a basis element labelled g");
        return {spec, H.counit(), H.basis(static_cast<int>(it - l.begin()))};
    }
    if (spec == "chi-1") {
        if (H.labels() != std::vector<std::string>{"1", "g", "x", "gx"})
            throw std::invalid_argument("pair chi-1 is defined for the Sweedler algebra only");
        return {spec, {1, -1, 0, 0}, H.unit()};
    }
    auto semi = spec.find(';');
    if (semi == std::string::npos) throw std::invalid_argument("unrecognised pair '" + spec + "'");
    return {spec, parse_coefficients(spec.substr(0, semi), d), parse_coefficients(spec.substr(semi + 1), d)};
}

}  // namespace hc
