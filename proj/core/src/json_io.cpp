#include "liecoh/json_io.hpp"

#include <fstream>

#include "liecoh/errors.hpp"

namespace liecoh {

Json structure_constants_to_json(const StructureConstants& sc) {
    Json j;
    j["dim"] = sc.dim;
    j["basis"] = sc.basis_names;
    if (sc.weights)
        j["weights"] = *sc.weights;
    Json brackets = Json::array();
    for (const auto& [key, vec] : sc.brackets) {
        Json entry;
        entry["i"] = key.first;
        entry["j"] = key.second;
        Json coeffs = Json::object();
        for (const auto& [k, c] : vec.entries())
            coeffs[std::to_string(k)] = to_string(c);
        entry["coeffs"] = std::move(coeffs);
        brackets.push_back(std::move(entry));
    }
    j["brackets"] = std::move(brackets);
    return j;
}

StructureConstants structure_constants_from_json(const Json& j) {
    if (!j.is_object())
        throw input_error("algebra JSON: top level must be an object");
    for (const auto& [key, value] : j.items()) {
        (void)value;
        if (key != "dim" && key != "basis" && key != "weights" && key != "brackets")
            throw input_error("algebra JSON: unknown field '" + key + "'");
    }
    if (!j.contains("dim") || !j["dim"].is_number_integer())
        throw input_error("algebra JSON: missing integer field 'dim'");

    StructureConstants sc;
    sc.dim = j["dim"].get<int>();
    if (sc.dim < 0)
        throw input_error("algebra JSON: dim must be >= 0");

    if (j.contains("basis")) {
        if (!j["basis"].is_array() || static_cast<int>(j["basis"].size()) != sc.dim)
            throw input_error("algebra JSON: 'basis' must be an array of dim strings");
        for (const auto& name : j["basis"])
            sc.basis_names.push_back(name.get<std::string>());
    } else {
        for (int i = 0; i < sc.dim; ++i)
            sc.basis_names.push_back("e" + std::to_string(i + 1));
    }

    if (j.contains("weights")) {
        if (!j["weights"].is_array() || static_cast<int>(j["weights"].size()) != sc.dim)
            throw input_error("algebra JSON: 'weights' must be an array of dim integers");
        std::vector<int> w;
        for (const auto& x : j["weights"]) {
            if (!x.is_number_integer() || x.get<int>() <= 0)
                throw input_error("algebra JSON: weights must be positive integers");
            w.push_back(x.get<int>());
        }
        sc.weights = std::move(w);
    }

    if (j.contains("brackets")) {
        if (!j["brackets"].is_array())
            throw input_error("algebra JSON: 'brackets' must be an array");
        for (const auto& entry : j["brackets"]) {
            if (!entry.is_object() || !entry.contains("i") || !entry.contains("j") ||
                !entry.contains("coeffs"))
                throw input_error("algebra JSON: each bracket needs fields i, j, coeffs");
            int i = entry["i"].get<int>();
            int jj = entry["j"].get<int>();
            if (i < 0 || jj >= sc.dim || i >= jj)
                throw input_error("algebra JSON: bracket indices need 0 <= i < j < dim");
            if (sc.brackets.count({i, jj}))
                throw input_error("algebra JSON: duplicate bracket (" + std::to_string(i) +
                                  "," + std::to_string(jj) + ")");
            SparseVec v;
            for (const auto& [kstr, cstr] : entry["coeffs"].items()) {
                int k;
                try {
                    size_t pos = 0;
                    k = std::stoi(kstr, &pos);
                    if (pos != kstr.size())
                        throw std::invalid_argument(kstr);
                } catch (const std::exception&) {
                    throw input_error("algebra JSON: coefficient key '" + kstr +
                                      "' is not a basis index");
                }
                if (k < 0 || k >= sc.dim)
                    throw input_error("algebra JSON: coefficient index out of range");
                if (!cstr.is_string())
                    throw input_error("algebra JSON: coefficients must be rational strings");
                Rational c = parse_rational(cstr.get<std::string>());
                if (c != 0)
                    v.set_coeff(k, c);
            }
            if (!v.is_zero())
                sc.brackets[{i, jj}] = std::move(v);
        }
    }
    return sc;
}

StructureConstants load_structure_constants(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw input_error("cannot open algebra file '" + path + "'");
    Json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        throw input_error("algebra file '" + path + "': " + e.what());
    }
    return structure_constants_from_json(j);
}

void save_structure_constants(const StructureConstants& sc, const std::string& path) {
    std::ofstream out(path);
    if (!out)
        throw input_error("cannot write algebra file '" + path + "'");
    out << structure_constants_to_json(sc).dump(2) << "\n";
}

} // namespace liecoh
