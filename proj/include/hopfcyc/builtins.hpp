#pragma once

#include <string>
#include <vector>

#include "hopfcyc/hopf.hpp"

namespace hc {

// "group:Z2", "group:Z3", "group:Z4", "group:S3", "functions:Z2", "functions:Z3",
// "sweedler", "trivial".
std::vector<std::string> builtin_names();
Hopf builtin(const std::string& name);

Hopf group_algebra(const std::vector<std::vector<int>>& table, const std::vector<std::string>& labels);
Hopf cyclic_group_algebra(int n);
Hopf symmetric_group_s3();
Hopf function_algebra_cyclic(int n);
Hopf sweedler();
Hopf trivial_hopf();

struct ModularPair {
    std::string name;
    std::vector<Scalar> delta;
    Element sigma;
};

// "eps-1", "eps-g", "chi-1" (Sweedler only), or "d_0,...,d_{n-1};s_0,...,s_{n-1}".
ModularPair parse_pair(const Hopf& H, const std::string& spec);
// Twist argument: "auto" (needs a pair), "eps", or a coefficient list.
std::vector<Scalar> parse_coefficients(const std::string& list, int d);

}  // namespace hc
