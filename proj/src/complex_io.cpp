#include "equivar/complex_io.hpp"

#include <json.hpp>

namespace equivar {

using ordered_json = nlohmann::ordered_json;

ComplexFile parse_complex_json(const std::string& text) {
    ordered_json j;
    try {
        j = ordered_json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        fail(errc::parse_error, e.what());
    }
    require(j.is_object(), errc::parse_error, "top level must be an object");
    require(j.contains("vertices") && j["vertices"].is_number_integer(),
            errc::parse_error, "field 'vertices' (integer) is required");
    require(j.contains("maximal_simplices") && j["maximal_simplices"].is_array(),
            errc::parse_error, "field 'maximal_simplices' (array) is required");

    ComplexFile file;
    file.vertices = j["vertices"].get<int>();
    require(file.vertices >= 0, errc::parse_error, "'vertices' must be nonnegative");
    for (const auto& entry : j["maximal_simplices"]) {
        require(entry.is_array(), errc::parse_error,
                "'maximal_simplices' entries must be arrays");
        Simplex s;
        for (const auto& v : entry) {
            require(v.is_number_integer(), errc::parse_error,
                    "simplex entries must be integers");
            s.push_back(v.get<int>());
        }
        file.maximal_simplices.push_back(std::move(s));
    }
    if (j.contains("involution") && !j["involution"].is_null()) {
        require(j["involution"].is_array(), errc::parse_error,
                "'involution' must be an array");
        std::vector<int> g;
        for (const auto& v : j["involution"]) {
            require(v.is_number_integer(), errc::parse_error,
                    "involution entries must be integers");
            g.push_back(v.get<int>());
        }
        file.involution = std::move(g);
    }
    return file;
}

std::string complex_file_to_json(const ComplexFile& file) {
    ordered_json j;
    j["vertices"] = file.vertices;
    j["maximal_simplices"] = ordered_json::array();
    for (const Simplex& s : file.maximal_simplices)
        j["maximal_simplices"].push_back(s);
    if (file.involution) j["involution"] = *file.involution;
    return j.dump(2) + "\n";
}

ComplexFile to_complex_file(const InvolutiveComplex& ic) {
    ComplexFile file;
    file.vertices = ic.complex().vertex_count();
    file.maximal_simplices = maximal_simplices(ic.complex());
    file.involution = ic.involution();
    return file;
}

InvolutiveComplex load_involutive(const ComplexFile& file, const LoadOptions& options) {
    SimplicialComplex k = SimplicialComplex::from_maximal(
        file.vertices, file.maximal_simplices, options.simplex_cap);
    std::vector<int> g;
    if (file.involution) {
        g = *file.involution;
    } else {
        g.resize(file.vertices);
        for (int v = 0; v < file.vertices; ++v) g[v] = v;
    }
    InvolutiveComplex ic(std::move(k), std::move(g));
    if (options.auto_regularize) return regularize(ic, options.simplex_cap);
    return ic;
}

}  // namespace equivar
