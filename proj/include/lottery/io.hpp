#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

#include "lottery/evalbench.hpp"
#include "lottery/pipeline.hpp"
#include "lottery/tensor.hpp"

namespace lottery::io {

// Network file (JSON):
//
//   {
//     "depth":  l,
//     "widths": [d_0, d_1, ..., d_l],
//     "layers": [[row-major entries of layer 1 (d_1 x d_0)], ...,
//                [row-major entries of layer l (d_l x d_{l-1})]]
//   }
//
// Mask files use the same layout with every entry 0 or 1. Numbers are
// written in the shortest form that parses back to the identical double.

std::string network_to_json(const DenseNetwork& net);
DenseNetwork network_from_json(const std::string& text);

std::string masks_to_json(const MaskSet& masks);
MaskSet masks_from_json(const std::string& text);

DenseNetwork read_network(const std::filesystem::path& path);
void write_network(const std::filesystem::path& path, const DenseNetwork& net);
MaskSet read_masks(const std::filesystem::path& path);
void write_masks(const std::filesystem::path& path, const MaskSet& masks);

/// Reads a whole file; throws ValidationError if it cannot be opened.
std::string read_text(const std::filesystem::path& path);
/// Writes a whole file; throws ValidationError if it cannot be opened.
void write_text(const std::filesystem::path& path, const std::string& text);

/// Shortest round-trip decimal form of a double.
std::string format_double(double x);

// CSV schemas (header line first, '\n' line endings):
//   sweep:      epsilon,delta,n,prob,ci_lo,ci_hi,trials,seed
//               followed by "# fit,slope=..,intercept=..,r2=.." and
//               "# saturated,<count>" footer lines
//   links:      layer,out_idx,in_idx,branch,target,achieved_error,feasible
//   per-weight: layer,out_idx,in_idx,target,achieved_error,subset_size,feasible
void write_sweep_csv(std::ostream& os, const SweepResult& sweep);
void write_link_csv(std::ostream& os, const std::vector<LayerGadgetReport>& layers);
void write_weight_csv(std::ostream& os, const std::vector<WeightRow>& rows);

}  // namespace lottery::io
