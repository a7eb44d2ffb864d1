#include "latproj/io.hpp"


#include <fstream>
#include <sstream>

namespace latproj {
namespace io {

json matrix_to_json(const RationalMatrix& m) {
    json rows = json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(rat_str(m(i, j)));
        rows.push_back(std::move(row));
    }
    return json{{"rows", m.rows()}, {"cols", m.cols()}, {"data", std::move(rows)}};
}

RationalMatrix matrix_from_json(const json& j) {
    if (!j.contains("rows") || !j.contains("cols") || !j.contains("data"))
        throw parse_error("matrix JSON needs rows/cols/data");
    std::size_t r = j["rows"].get<std::size_t>(), c = j["cols"].get<std::size_t>();
    const json& data = j["data"];
    if (data.size() != r) throw parse_error("matrix JSON row count mismatch");
    RationalMatrix m(r, c);
    for (std::size_t i = 0; i < r; ++i) {
        if (data[i].size() != c) throw parse_error("matrix JSON column count mismatch");
        for (std::size_t k = 0; k < c; ++k) {
            const json& cell = data[i][k];
            if (cell.is_string()) m(i, k) = parse_rat(cell.get<std::string>());
            else if (cell.is_number_integer()) m(i, k) = Rat(Int(cell.get<long>()));
            else throw parse_error("matrix entries must be exact (strings or integers)");
        }
    }
    return m;
}

json lifting_to_json(const Lifting& l) {
    return json{{"n", l.dim()}, {"Gstar", matrix_to_json(l.gstar)}, {"P", matrix_to_json(l.p)}};
}

Lifting lifting_from_json(const json& j) {
    if (!j.contains("Gstar") || !j.contains("P")) throw parse_error("lifting JSON needs Gstar and P");
    return make_lifting(matrix_from_json(j["Gstar"]), matrix_from_json(j["P"]));
}

json lattice_to_json(const Lattice& l) {
    json out{{"n", l.dimension()}, {"gram", matrix_to_json(l.gram_matrix())}};
    if (l.generator()) out["generator"] = matrix_to_json(*l.generator());
    return out;
}

Lattice lattice_from_json(const json& j) {
    if (!j.contains("gram")) throw parse_error("lattice JSON needs gram");
    std::optional<RationalMatrix> gen;
    if (j.contains("generator")) gen = matrix_from_json(j["generator"]);
    return Lattice(matrix_from_json(j["gram"]), std::move(gen));
}

json density_to_json(const DensityReport& d) {
    return json{{"min_norm2", rat_str(d.min_norm2)},
                {"min_dist", d.min_dist},
                {"det", rat_str(d.det)},
                {"center_density_sq", rat_str(d.center_density_sq)},
                {"center_density", d.center_density}};
}

json convergence_to_json(const ConvergenceReport& r) {
    json pts = json::array();
    for (const auto& p : r.points)
        pts.push_back(json{{"w", p.w},
                           {"c_w", rat_str(p.cw)},
                           {"error_num", p.error.get_num().get_str()},
                           {"error_den", p.error.get_den().get_str()},
                           {"error", p.error_f}});
    return json{{"family", r.family_id},
                {"points", std::move(pts)},
                {"slope", r.slope},
                {"claimed_order", r.claimed_order}};
}

std::string convergence_to_csv(const ConvergenceReport& r) {
    std::ostringstream os;
    os << "w,c_w,error_exact_num,error_exact_den,error_float\n";
    for (const auto& p : r.points)
        os << p.w << ',' << rat_str(p.cw) << ',' << p.error.get_num().get_str() << ','
           << p.error.get_den().get_str() << ',' << p.error_f << '\n';
    return os.str();
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw parse_error("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw error("cannot write " + path);
    out << content;
}

}  // namespace io
}  // namespace latproj
