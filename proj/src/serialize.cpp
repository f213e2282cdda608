#include "currents/serialize.hpp"

#include <fstream>
#include <sstream>

namespace currents {

Json to_json(const Rational& r) { return r.to_string(); }

Json to_json(const Gaussian& g) { return Json::array({g.re().to_string(), g.im().to_string()}); }

Rational rational_from_json(const Json& j, const std::string& context) {
    if (j.is_number_integer()) return Rational(j.get<long>());
    if (!j.is_string()) throw ParseError(context, "expected a rational string, got " + std::string(j.type_name()));
    try {
        return Rational::parse(j.get<std::string>());
    } catch (const ParseError& e) {
        throw ParseError(context, e.message());
    } catch (const DivisionByZero&) {
        throw ParseError(context, "zero denominator in '" + j.get<std::string>() + "'");
    }
}

Gaussian gaussian_from_json(const Json& j, const std::string& context) {
    if (j.is_array()) {
        if (j.size() != 2) throw ParseError(context, "expected [\"re\", \"im\"], got an array of " +
                                                         std::to_string(j.size()) + " elements");
        return {rational_from_json(j[0], context + "[0]"), rational_from_json(j[1], context + "[1]")};
    }
    return rational_from_json(j, context);
}

Json algebra_to_json(const MatrixLieAlgebra& alg) {
    Json basis = Json::array();
    for (const auto& m : alg.basis()) {
        Json rows = Json::array();
        for (std::size_t r = 0; r < m.rows(); ++r) {
            Json row = Json::array();
            for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(to_json(m(r, c)));
            rows.push_back(std::move(row));
        }
        basis.push_back(std::move(rows));
    }
    Json out;
    out["name"] = alg.name();
    out["rep_size"] = alg.rep_size();
    out["labels"] = alg.labels();
    out["basis"] = std::move(basis);
    return out;
}

MatrixLieAlgebra algebra_from_json(const Json& j) {
    if (!j.is_object()) throw ParseError("algebra", "expected a JSON object");
    if (!j.contains("name") || !j["name"].is_string()) throw ParseError("name", "missing or not a string");
    if (!j.contains("rep_size") || !j["rep_size"].is_number_integer() || j["rep_size"].get<long>() <= 0)
        throw ParseError("rep_size", "missing or not a positive integer");
    if (!j.contains("basis") || !j["basis"].is_array()) throw ParseError("basis", "missing or not an array");

    const auto n = static_cast<std::size_t>(j["rep_size"].get<long>());
    std::vector<ComplexMatrix> basis;
    const Json& jb = j["basis"];
    for (std::size_t k = 0; k < jb.size(); ++k) {
        const std::string ctx = "basis[" + std::to_string(k) + "]";
        const Json& jm = jb[k];
        if (!jm.is_array() || jm.size() != n)
            throw ParseError(ctx, "expected " + std::to_string(n) + " rows");
        ComplexMatrix m(n, n);
        for (std::size_t r = 0; r < n; ++r) {
            const std::string rctx = ctx + "[" + std::to_string(r) + "]";
            if (!jm[r].is_array() || jm[r].size() != n)
                throw ParseError(rctx, "ragged matrix: expected " + std::to_string(n) + " entries");
            for (std::size_t c = 0; c < n; ++c)
                m(r, c) = gaussian_from_json(jm[r][c], rctx + "[" + std::to_string(c) + "]");
        }
        basis.push_back(std::move(m));
    }

    std::vector<std::string> labels;
    if (j.contains("labels")) {
        if (!j["labels"].is_array()) throw ParseError("labels", "expected an array of strings");
        for (std::size_t k = 0; k < j["labels"].size(); ++k) {
            if (!j["labels"][k].is_string())
                throw ParseError("labels[" + std::to_string(k) + "]", "expected a string");
            labels.push_back(j["labels"][k].get<std::string>());
        }
    }
    return build_algebra(j["name"].get<std::string>(), std::move(basis), std::move(labels));
}

MatrixLieAlgebra parse_algebra(std::string_view text) {
    Json j;
    try {
        j = Json::parse(text);
    } catch (const Json::parse_error& e) {
        // byte is 1-based and points just past the offending character
        std::size_t line = 1, col = 1;
        for (std::size_t i = 0; i + 1 < e.byte && i < text.size(); ++i) {
            if (text[i] == '\n') {
                ++line;
                col = 1;
            } else {
                ++col;
            }
        }
        throw ParseError("line " + std::to_string(line) + ", column " + std::to_string(col), "invalid JSON");
    }
    return algebra_from_json(j);
}

MatrixLieAlgebra load_algebra(const std::string& name_or_path) {
    if (name_or_path == "su2") return su2();
    if (name_or_path == "sl3") return sl3();
    std::ifstream in(name_or_path);
    if (!in) throw InvalidArgument("unknown algebra '" + name_or_path + "' (not a builtin and not a readable file)");
    std::stringstream buf;
    buf << in.rdbuf();
    try {
        return parse_algebra(buf.str());
    } catch (const ParseError& e) {
        throw ParseError(e.context().empty() ? name_or_path : name_or_path + ": " + e.context(), e.message());
    }
}

}  // namespace currents
