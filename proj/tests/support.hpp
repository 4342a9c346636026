#pragma once

#include <sys/wait.h>

#include <cstdio>
#include <string>
#include <vector>

#include "hopfcyc/linalg.hpp"

namespace hc::test {

inline SparseMatrix mat(const std::vector<std::vector<int>>& rows) {
    std::vector<std::vector<Scalar>> r;
    for (auto& row : rows) r.emplace_back(row.begin(), row.end());
    return SparseMatrix::from_dense(r);
}

inline SparseVec vec(const std::vector<int>& v) { return SparseVec::from_dense(std::vector<Scalar>(v.begin(), v.end())); }

inline std::vector<Scalar> el(const std::vector<int>& v) { return std::vector<Scalar>(v.begin(), v.end()); }

struct Run {
    int code = -1;
    std::string out;
};

// Runs a shell command, capturing stdout.
inline Run run(const std::string& cmd) {
    Run r;
    FILE* p = popen(cmd.c_str(), "r");
    if (!p) return r;
    char buf[4096];
    std::size_t n;
    while ((n = fread(buf, 1, sizeof buf, p)) > 0) r.out.append(buf, n);
    int status = pclose(p);
    r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

}  // namespace hc::test
