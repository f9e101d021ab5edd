#include "lottery/io.hpp"

#include <fstream>
#include <ostream>
#include <sstream>

#include <json.hpp>

#include "lottery/errors.hpp"

namespace lottery::io {
namespace {

using nlohmann::json;

json parse_json(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::exception& e) {
    throw ValidationError(std::string("malformed JSON: ") + e.what());
  }
}

std::vector<std::size_t> read_layout(const json& doc, std::size_t& depth) {
  if (!doc.is_object() || !doc.contains("depth") || !doc.contains("widths") ||
      !doc.contains("layers")) {
    throw ValidationError("network file needs fields depth, widths, layers");
  }
  try {
    depth = doc.at("depth").get<std::size_t>();
    auto widths = doc.at("widths").get<std::vector<std::size_t>>();
    if (depth < 1) throw ValidationError("depth must be at least 1");
    if (widths.size() != depth + 1) {
      throw ValidationError("widths must list depth + 1 = " + std::to_string(depth + 1) +
                            " entries, got " + std::to_string(widths.size()));
    }
    if (!doc.at("layers").is_array() || doc.at("layers").size() != depth) {
      throw ValidationError("layers must be an array of depth = " + std::to_string(depth) +
                            " entries");
    }
    for (std::size_t k = 0; k < depth; ++k) {
      const json& layer = doc.at("layers").at(k);
      if (!layer.is_array() || layer.size() != widths[k + 1] * widths[k]) {
        throw ValidationError("layer " + std::to_string(k) + " must hold " +
                              std::to_string(widths[k + 1]) + "x" + std::to_string(widths[k]) +
                              " entries");
      }
    }
    return widths;
  } catch (const json::exception& e) {
    throw ValidationError(std::string("bad network layout: ") + e.what());
  }
}

json layout(const std::vector<std::size_t>& widths) {
  json doc;
  doc["depth"] = widths.size() - 1;
  doc["widths"] = widths;
  doc["layers"] = json::array();
  return doc;
}

}  // namespace

std::string network_to_json(const DenseNetwork& net) {
  json doc = layout(net.widths());
  for (const auto& l : net.layers()) {
    doc["layers"].push_back(std::vector<double>(l.entries().begin(), l.entries().end()));
  }
  return doc.dump() + "\n";
}

DenseNetwork network_from_json(const std::string& text) {
  const json doc = parse_json(text);
  std::size_t depth = 0;
  const auto widths = read_layout(doc, depth);
  std::vector<DenseMatrix> layers;
  try {
    for (std::size_t k = 0; k < depth; ++k) {
      auto entries = doc["layers"][k].get<std::vector<double>>();
      layers.emplace_back(widths[k + 1], widths[k], std::move(entries));
    }
    return DenseNetwork(std::move(layers));
  } catch (const json::exception& e) {
    throw ValidationError(std::string("layer entries must be numbers: ") + e.what());
  } catch (const Error& e) {
    throw ValidationError(e.what());
  }
}

std::string masks_to_json(const MaskSet& masks) {
  if (masks.empty()) throw ShapeError("mask set is empty");
  std::vector<std::size_t> widths{masks.front().cols()};
  for (const auto& m : masks) widths.push_back(m.rows());
  json doc = layout(widths);
  for (const auto& m : masks) {
    std::vector<int> bits(m.entries().begin(), m.entries().end());
    doc["layers"].push_back(bits);
  }
  return doc.dump() + "\n";
}

MaskSet masks_from_json(const std::string& text) {
  const json doc = parse_json(text);
  std::size_t depth = 0;
  const auto widths = read_layout(doc, depth);
  MaskSet masks;
  for (std::size_t k = 0; k < depth; ++k) {
    std::vector<std::uint8_t> bits;
    for (const json& v : doc["layers"][k]) {
      if (!v.is_number_integer() || (v.get<long long>() != 0 && v.get<long long>() != 1)) {
        throw ValidationError("mask layer " + std::to_string(k) + " has an entry other than 0/1");
      }
      bits.push_back(static_cast<std::uint8_t>(v.get<int>()));
    }
    masks.emplace_back(widths[k + 1], widths[k], std::move(bits));
  }
  return masks;
}

std::string read_text(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ValidationError("cannot open '" + path.string() + "' for reading");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_text(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw ValidationError("cannot open '" + path.string() + "' for writing");
  out << text;
}

DenseNetwork read_network(const std::filesystem::path& path) {
  return network_from_json(read_text(path));
}

void write_network(const std::filesystem::path& path, const DenseNetwork& net) {
  write_text(path, network_to_json(net));
}

MaskSet read_masks(const std::filesystem::path& path) { return masks_from_json(read_text(path)); }

void write_masks(const std::filesystem::path& path, const MaskSet& masks) {
  write_text(path, masks_to_json(masks));
}

std::string format_double(double x) { return json(x).dump(); }

void write_sweep_csv(std::ostream& os, const SweepResult& sweep) {
  os << "epsilon,delta,n,prob,ci_lo,ci_hi,trials,seed\n";
  std::size_t saturated = 0;
  for (const auto& r : sweep.rows) {
    os << format_double(r.epsilon) << ',' << format_double(r.delta) << ',' << r.minimal_n << ','
       << format_double(r.estimate.prob) << ',' << format_double(r.estimate.ci95.lo) << ','
       << format_double(r.estimate.ci95.hi) << ',' << r.estimate.trials << ',' << r.seed << '\n';
    if (r.saturated) ++saturated;
  }
  os << "# fit,slope=" << format_double(sweep.fit.slope)
     << ",intercept=" << format_double(sweep.fit.intercept)
     << ",r2=" << format_double(sweep.fit.r_squared) << '\n';
  os << "# saturated," << saturated << '\n';
}

void write_link_csv(std::ostream& os, const std::vector<LayerGadgetReport>& layers) {
  os << "layer,out_idx,in_idx,branch,target,achieved_error,feasible\n";
  for (std::size_t l = 0; l < layers.size(); ++l) {
    for (const auto& link : layers[l].links) {
      os << l << ',' << link.out_idx << ',' << link.in_idx << ",pos,"
         << format_double(link.target) << ',' << format_double(link.error_positive) << ','
         << (link.feasible_positive() ? 1 : 0) << '\n';
      os << l << ',' << link.out_idx << ',' << link.in_idx << ",neg,"
         << format_double(link.target) << ',' << format_double(link.error_negative) << ','
         << (link.feasible_negative() ? 1 : 0) << '\n';
    }
  }
}

void write_weight_csv(std::ostream& os, const std::vector<WeightRow>& rows) {
  os << "layer,out_idx,in_idx,target,achieved_error,subset_size,feasible\n";
  for (const auto& r : rows) {
    os << r.layer << ',' << r.out_idx << ',' << r.in_idx << ',' << format_double(r.target) << ','
       << format_double(r.achieved_error) << ',' << r.subset_size << ','
       << (r.feasible ? 1 : 0) << '\n';
  }
}

}  // namespace lottery::io
