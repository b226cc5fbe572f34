#include "workbench/cli/format.hpp"

#include <cstdio>

namespace workbench::cli {

std::string format_complex(cplx z) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g%+.17gi", z.real(), z.imag());
    return buf;
}

std::string format_real(double x) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

Json complex_json(cplx z) { return format_complex(z); }

Json complex_list_json(const std::vector<cplx>& v) {
    Json out = Json::array();
    for (const cplx& z : v) out.push_back(format_complex(z));
    return out;
}

void write_matrix_csv(std::ostream& out, const Eigen::MatrixXcd& m, const Json& config) {
    out << "# config: " << config.dump() << '\n';
    for (Eigen::Index j = 0; j < m.rows(); ++j) {
        for (Eigen::Index k = 0; k < m.cols(); ++k) {
            if (k) out << ',';
            out << format_complex(m(j, k));
        }
        out << '\n';
    }
}

void write_table_csv(std::ostream& out, const CsvTable& table, const Json& config) {
    out << "# config: " << config.dump() << '\n';
    for (std::size_t c = 0; c < table.columns.size(); ++c) out << (c ? "," : "") << table.columns[c];
    out << '\n';
    for (const auto& row : table.rows) {
        for (std::size_t c = 0; c < row.size(); ++c) out << (c ? "," : "") << format_real(row[c]);
        out << '\n';
    }
    for (const auto& line : table.trailer) out << "# " << line << '\n';
}

Json make_record(const std::string& operation, const Json& params, const Json& value, const Json& tolerance,
                 const Json& holds, const Json& config) {
    Json r;
    r["operation"] = operation;
    r["params"] = params;
    r["value"] = value;
    if (!tolerance.is_null()) r["tolerance"] = tolerance;
    if (!holds.is_null()) r["holds"] = holds;
    r["config"] = config;
    return r;
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace workbench::cli
