#pragma once

#include <filesystem>
#include <istream>
#include <string>
#include <vector>

#include "monres/decompose.hpp"
#include "monres/hilbert.hpp"
#include "monres/labeling.hpp"
#include "monres/polytope.hpp"
#include "monres/resolution.hpp"

#include <json.hpp>

namespace monres {

/// Result of parsing an ideal: the minimalized ideal plus human-readable
/// notes about generators dropped during minimalization.
struct LoadedIdeal {
    MonomialIdeal ideal;
    std::vector<std::string> dropped;
};

/// Text format: a header line "vars: x y z" followed by one monomial per
/// line, written as x^2*y*z^3 or x2 y z3.  Blank lines and lines starting
/// with '#' are skipped.
LoadedIdeal parse_ideal_text(std::istream& in);

/// JSON format: {"vars": ["x","y","z"], "generators": [[2,0,3], ...]}.
LoadedIdeal parse_ideal_json(const nlohmann::json& j);

/// Parses either format, sniffing JSON by a leading '{'.
LoadedIdeal parse_ideal(const std::string& content);

LoadedIdeal load_ideal_file(const std::filesystem::path& path);

/// Triangulation fixture: a JSON list of facets with 1-based vertices,
/// e.g. [[1,2,3,7],[1,2,4,5],...]; an object {"facets": [...]} is also
/// accepted.
SimplicialComplex load_triangulation_file(const std::filesystem::path& path);
SimplicialComplex parse_triangulation_json(const nlohmann::json& j);

Face face_to_one_based(const Face& f);

nlohmann::ordered_json ideal_to_json(const MonomialIdeal& ideal);
nlohmann::ordered_json scarf_to_json(const ScarfComplex& scarf);
nlohmann::ordered_json complex_to_json(const FreeChainComplex& complex);
nlohmann::ordered_json resolution_to_json(const Resolution& res);
nlohmann::ordered_json hilbert_to_json(const HilbertNumerator& numerator);
nlohmann::ordered_json decomposition_to_json(const Decomposition& d,
                                             const std::vector<std::string>& var_names);
nlohmann::ordered_json labelings_to_json(const std::vector<Labeling>& labelings,
                                         const std::vector<std::string>& var_names);
nlohmann::ordered_json bounds_to_json(const UpperBoundReport& report);

std::string face_to_string(const Face& f);
std::string hilbert_to_string(const HilbertNumerator& numerator,
                              const std::vector<std::string>& var_names);
std::string decomposition_to_string(const Decomposition& d,
                                    const std::vector<std::string>& var_names);
/// Matrices with monomial entries, one block per differential.
std::string complex_to_string(const FreeChainComplex& complex,
                              const std::vector<std::string>& var_names);

}  // namespace monres
