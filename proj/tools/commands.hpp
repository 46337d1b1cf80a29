#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "opburgers/scenarios.hpp"

namespace opburgers::cli {

enum ExitCode { kPass = 0, kFail = 1, kUsage = 2 };

struct RunConfig {
    std::string scenario;
    std::vector<int> grid;  // spatial nodes per axis, then time nodes
    std::optional<double> tol;
    double perturb = 0.0;
    std::string format = "json";
    std::string out;
    std::string dump_points;
    std::string candidate;
    std::uint64_t seed = 1;
    int levels = 4;
    CatalogOptions catalog;
};

struct TransformConfig {
    std::string scenario;
    std::string direction;  // forward | backward
    std::optional<int> n;
    std::vector<int> grid;
    std::string candidate;
    std::string out;
    CatalogOptions catalog;
};

struct SpecialConfig {
    std::string function;  // ml | hermite | kernel
    double beta = 1.0;
    double z = 0.0;
    int n = 0;
    double f = 0.0;
    double h = 0.0;
    double eta = 1.0;
    double t = 1.0;
    double t0 = -1.0;
    int count = 0;  // > 0 tabulates the kernel over η instead of one value
};

/// "3x4" → {3, 4}; throws std::invalid_argument on malformed input.
std::vector<int> parse_grid(const std::string& text);

int cmd_list(const std::string& format, std::ostream& out);
int cmd_describe(const std::string& id, const CatalogOptions& options, const std::string& format, std::ostream& out);
int cmd_verify(const RunConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_sweep(const RunConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_transform(const TransformConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_special(const SpecialConfig& cfg, std::ostream& out, std::ostream& err);

}  // namespace opburgers::cli
