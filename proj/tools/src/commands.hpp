#pragma once

#include <cstdint>
#include <istream>
#include <ostream>
#include <string>
#include <vector>

#include "workbench/cli/format.hpp"
#include "workbench/gelfand.hpp"
#include "workbench/liefields.hpp"

namespace workbench::cli {

struct Globals {
    std::uint64_t seed = 0;
    std::string out;     // empty: stdout
    std::string format;  // empty: the command's natural format
};

struct Output {
    std::string text;
    int code = 0;
};

struct GridOpts {
    double alpha = 0.0;
    int n_rad = 64;
    int n_ang = 256;
};

struct ToeplitzOpts {
    std::string symbol;
    int cutoff = 8;
    GridOpts grid;
};
struct BergmanNormOpts {
    std::string f;
    double p = 2.0;
    bool strict_paper = false;
    GridOpts grid;
};
struct BergmanKernelOpts {
    std::string z, u;
};
struct BergmanConvOpts {
    std::string f, g;
    double p = 2.0;
    bool strict_paper = false;
    GridOpts grid;
};
struct BlochOpts {
    double alpha = 1.0;
    std::string poly;
    int n_rad = 128, n_ang = 128;
};
struct HardyNormOpts {
    std::string poly;
    double p = 2.0;
    std::string radii;  // empty: default ladder
    int m = 1024;
};
struct HardyKernelOpts {
    std::string z, xi;
    std::string kind = "szego";
};
struct HardyToeplitzOpts {
    std::string symbol;
    int n = 8;
    int m = 256;
};
struct DiscOpts {
    std::string f;
    int m = 64;
    double tol = 1e-10;
};
struct GelfandOpts {
    std::string group;
    std::string subgroup;
};
struct LieOpts {
    std::string fields;
    std::string point;
    int steps = 64;
};
struct RateOpts {
    std::string f;
    int q = 2;
    int alpha = -1;  // -1: not given
    std::string kind = "exact";
    std::string quantity = "auto";
    int count = 12;
};

Output cmd_toeplitz(const Globals& g, const ToeplitzOpts& o);
Output cmd_bergman_norm(const Globals& g, const BergmanNormOpts& o);
Output cmd_bergman_kernel(const Globals& g, const BergmanKernelOpts& o);
Output cmd_bergman_project(const Globals& g, const ToeplitzOpts& o);
Output cmd_bergman_convolution(const Globals& g, const BergmanConvOpts& o);
Output cmd_bloch(const Globals& g, const BlochOpts& o);
Output cmd_hardy_norm(const Globals& g, const HardyNormOpts& o);
Output cmd_hardy_kernel(const Globals& g, const HardyKernelOpts& o);
Output cmd_hardy_toeplitz(const Globals& g, const HardyToeplitzOpts& o);
Output cmd_hardy_disc(const Globals& g, const DiscOpts& o);
Output cmd_gelfand_check(const Globals& g, const GelfandOpts& o);
Output cmd_gelfand_spherical(const Globals& g, const GelfandOpts& o);
Output cmd_lie_bracket(const Globals& g, const LieOpts& o);
Output cmd_lie_jacobi(const Globals& g, const LieOpts& o);
Output cmd_lie_flows(const Globals& g, const LieOpts& o);
Output cmd_colombeau_rate(const Globals& g, const RateOpts& o);

// File formats.
gelfand::FiniteGroup load_group(const std::string& file_or_name);
std::vector<liefields::PolyVectorField> read_fields(std::istream& in);
Json field_json(const liefields::PolyVectorField& x);

}  // namespace workbench::cli
