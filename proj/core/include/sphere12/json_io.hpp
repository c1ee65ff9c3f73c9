#pragma once

#include <json.hpp>

#include <string>

#include "sphere12/balance.hpp"
#include "sphere12/configuration.hpp"
#include "sphere12/moves.hpp"
#include "sphere12/tammes.hpp"

namespace sphere12 {

/// {"n": int, "radius": float|null, "points": [[x,y,z],...]}
nlohmann::json config_to_json(const Configuration& c);

/// Rejects points that fail to renormalize within 1e-6.
Configuration config_from_json(const nlohmann::json& j);

Configuration load_config(const std::string& path);
void save_config(const Configuration& c, const std::string& path);

/// {"balanced": bool, "weights": [[i,j,w],...], "residual": float}
nlohmann::json certificate_to_json(const BalanceCertificate& cert);

nlohmann::json tammes_result_to_json(const TammesResult& r);

nlohmann::json path_report_to_json(const PathReport& r);

/// Per-segment kind and parameters plus keyframes sampled at the requested
/// per-segment resolution.
nlohmann::json path_to_json(const DeformationPath& p, int keyframes_per_segment);

void write_text_file(const std::string& path, const std::string& content);

}  // namespace sphere12
