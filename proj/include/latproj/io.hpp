#pragma once

#include <json.hpp>
#include <string>

#include "latproj/lattice.hpp"
#include "latproj/lifting.hpp"

namespace latproj {
namespace io {

using json = nlohmann::json;

// {"rows": r, "cols": c, "data": [["p/q", ...], ...]}
json matrix_to_json(const RationalMatrix& m);
RationalMatrix matrix_from_json(const json& j);

// {"n": n, "Gstar": matrix, "P": matrix}
json lifting_to_json(const Lifting& l);
Lifting lifting_from_json(const json& j);

// {"n": n, "gram": [[...]], "generator": optional}
json lattice_to_json(const Lattice& l);
Lattice lattice_from_json(const json& j);

json density_to_json(const DensityReport& d);

json convergence_to_json(const ConvergenceReport& r);
// CSV columns: w, c_w, error_exact_num, error_exact_den, error_float
std::string convergence_to_csv(const ConvergenceReport& r);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& content);

}  // namespace io
}  // namespace latproj
