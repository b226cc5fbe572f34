#pragma once

// Output helpers shared by the commands and the suites. Nothing written here
// carries a timestamp or a host-dependent value, so identical inputs give
// byte-identical files.

#include <ostream>
#include <string>
#include <vector>

#include <Eigen/Dense>
#include <nlohmann/json.hpp>

#include "workbench/numcore.hpp"

namespace workbench::cli {

using Json = nlohmann::ordered_json;

/// "re+imi" cell with 17 significant digits ("%.17g%+.17gi"), e.g. "0.5-0.25i".
std::string format_complex(cplx z);

/// %.17g.
std::string format_real(double x);

/// Complex values as JSON strings in the cell format.
Json complex_json(cplx z);
Json complex_list_json(const std::vector<cplx>& v);

/// Row-major matrix, one row per line, cells in the complex format, preceded
/// by a "# config: {...}" line.
void write_matrix_csv(std::ostream& out, const Eigen::MatrixXcd& m, const Json& config);

/// Two-column real table with a config line and a header.
struct CsvTable {
    std::vector<std::string> columns;
    std::vector<std::vector<double>> rows;
    std::vector<std::string> trailer;  // extra "# ..." lines after the data
};
void write_table_csv(std::ostream& out, const CsvTable& table, const Json& config);

/// Operation record {operation, params, value, tolerance, holds, config};
/// tolerance and holds are omitted when null.
Json make_record(const std::string& operation, const Json& params, const Json& value, const Json& tolerance,
                 const Json& holds, const Json& config);

/// Pretty JSON with a trailing newline.
std::string dump(const Json& j);

}  // namespace workbench::cli
