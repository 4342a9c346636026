#pragma once

#include <stdexcept>
#include <string>

#include "hopfcyc/hopf.hpp"

namespace hc {

struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// {"dim", "labels", "unit": 0, "mult": [[i,j,k,"p/q"]], "comult": [[i,j,k,"p/q"]],
//  "counit": ["p/q", ...], "antipode": [[i,j,"p/q"]]}
// An antipode triple [i,j,v] means S(e_i) has coefficient v on e_j.
// Structural problems raise ParseError; axioms are left to validate_hopf.
Hopf parse_algebra_json(const std::string& text);
Hopf load_algebra_file(const std::string& path);
std::string to_algebra_json(const Hopf& H);

}  // namespace hc
