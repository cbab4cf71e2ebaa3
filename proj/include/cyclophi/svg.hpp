#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "cyclophi/census.hpp"

namespace cyclophi::svg {

struct PlotOptions {
    int width = 800;
    int height = 600;
    std::string title;  // drawn top-center when nonempty
};

// Self-contained scatter plot of lattice points: c on the horizontal axis
// (domain symmetric about 0), n on the vertical axis increasing upward.
// Output bytes depend only on the inputs — no timestamps, no randomness.
std::string render_scatter(const std::vector<census::Point>& pts, const PlotOptions& opts = {});

void write_scatter(const std::filesystem::path& path, const std::vector<census::Point>& pts,
                   const PlotOptions& opts = {});

}  // namespace cyclophi::svg
