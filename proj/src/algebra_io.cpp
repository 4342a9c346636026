#include "hopfcyc/algebra_io.hpp"

#include <fstream>
#include <map>
#include <sstream>

#include "json.hpp"

namespace hc {

using nlohmann::json;

namespace {

Scalar scalar_of(const json& v, const std::string& where) {
    try {
        if (v.is_string()) return parse_scalar(v.get<std::string>());
        if (v.is_number_integer()) return Scalar(v.get<long>());
    } catch (const std::invalid_argument& e) {
        throw ParseError(where + ": " + e.what());
    }
    throw ParseError(where + ": scalars must be fraction strings");
}

int index_of(const json& v, int d, const std::string& where) {
    if (!v.is_number_integer()) throw ParseError(where + ": index must be an integer");
    long i = v.get<long>();
    if (i < 0 || i >= d) throw ParseError(where + ": index " + std::to_string(i) + " out of range");
    return static_cast<int>(i);
}

const json& field(const json& doc, const char* name) {
    if (!doc.contains(name)) throw ParseError(std::string("missing field '") + name + "'");
    return doc.at(name);
}

}  // namespace

Hopf parse_algebra_json(const std::string& text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        throw ParseError(std::string("invalid JSON: ") + e.what());
    }
    if (!doc.is_object()) throw ParseError("top level must be an object");
    const json& jd = field(doc, "dim");
    if (!jd.is_number_integer() || jd.get<long>() < 1) throw ParseError("dim must be a positive integer");
    int d = static_cast<int>(jd.get<long>());

    std::vector<std::string> labels;
    const json& jl = field(doc, "labels");
    if (!jl.is_array() || static_cast<int>(jl.size()) != d) throw ParseError("labels must list dim strings");
    for (auto& l : jl) {
        if (!l.is_string()) throw ParseError("labels must be strings");
        labels.push_back(l.get<std::string>());
    }
    const json& ju = field(doc, "unit");
    if (!ju.is_number_integer() || ju.get<long>() != 0) throw ParseError("unit must be 0");

    std::vector<std::map<int, Scalar>> prod(static_cast<std::size_t>(d) * d);
    const json& jm = field(doc, "mult");
    if (!jm.is_array()) throw ParseError("mult must be an array");
    for (auto& t : jm) {
        if (!t.is_array() || t.size() != 4) throw ParseError("mult entries are [i,j,k,value]");
        int i = index_of(t[0], d, "mult"), j = index_of(t[1], d, "mult"), k = index_of(t[2], d, "mult");
        prod[static_cast<std::size_t>(i) * d + j][k] += scalar_of(t[3], "mult");
    }
    std::vector<SparseVec> mult;
    for (auto& m : prod) mult.emplace_back(std::vector<SparseVec::Entry>(m.begin(), m.end()));

    std::vector<std::map<std::pair<int, int>, Scalar>> cop(d);
    const json& jc = field(doc, "comult");
    if (!jc.is_array()) throw ParseError("comult must be an array");
    for (auto& t : jc) {
        if (!t.is_array() || t.size() != 4) throw ParseError("comult entries are [i,j,k,value]");
        int i = index_of(t[0], d, "comult"), j = index_of(t[1], d, "comult"), k = index_of(t[2], d, "comult");
        cop[i][{j, k}] += scalar_of(t[3], "comult");
    }
    std::vector<std::vector<Term2>> comult(d);
    for (int i = 0; i < d; ++i)
        for (auto& [jk, c] : cop[i])
            if (c != 0) comult[i].push_back({jk.first, jk.second, c});

    const json& je = field(doc, "counit");
    if (!je.is_array() || static_cast<int>(je.size()) != d) throw ParseError("counit must list dim scalars");
    std::vector<Scalar> counit;
    for (auto& v : je) counit.push_back(scalar_of(v, "counit"));

    std::vector<std::map<int, Scalar>> ant(d);
    const json& ja = field(doc, "antipode");
    if (!ja.is_array()) throw ParseError("antipode must be an array");
    for (auto& t : ja) {
        if (!t.is_array() || t.size() != 3) throw ParseError("antipode entries are [i,j,value]");
        int i = index_of(t[0], d, "antipode"), j = index_of(t[1], d, "antipode");
        ant[i][j] += scalar_of(t[2], "antipode");
    }
    std::vector<SparseVec> antipode;
    for (auto& m : ant) antipode.emplace_back(std::vector<SparseVec::Entry>(m.begin(), m.end()));

    return Hopf(Algebra(d, labels, std::move(mult)), std::move(comult), std::move(counit), std::move(antipode));
}

Hopf load_algebra_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open '" + path + "'");
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_algebra_json(ss.str());
}

std::string to_algebra_json(const Hopf& H) {
    int d = H.dim();
    json doc;
    doc["dim"] = d;
    doc["labels"] = H.labels();
    doc["unit"] = 0;
    json mult = json::array();
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j)
            for (auto& [k, c] : H.algebra().product(i, j).entries()) mult.push_back({i, j, k, to_string(c)});
    doc["mult"] = mult;
    json comult = json::array();
    for (int i = 0; i < d; ++i) {
        std::map<std::pair<int, int>, Scalar> sorted;
        for (auto& t : H.coproduct_of_basis(i)) sorted[{t.left, t.right}] += t.coef;
        for (auto& [jk, c] : sorted)
            if (c != 0) comult.push_back({i, jk.first, jk.second, to_string(c)});
    }
    doc["comult"] = comult;
    json counit = json::array();
    for (auto& c : H.counit()) counit.push_back(to_string(c));
    doc["counit"] = counit;
    json ant = json::array();
    for (int i = 0; i < d; ++i)
        for (auto& [j, c] : H.antipode_columns()[i].entries()) ant.push_back({i, j, to_string(c)});
    doc["antipode"] = ant;
    return doc.dump(2) + "\n";
}

}  // namespace hc
