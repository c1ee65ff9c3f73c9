#include "sphere12/json_io.hpp"

#include <cmath>
#include <fstream>

namespace sphere12 {

using nlohmann::json;

json config_to_json(const Configuration& c) {
  json j;
  j["n"] = c.n();
  j["radius"] = c.radius ? json(*c.radius) : json(nullptr);
  json pts = json::array();
  for (int i = 0; i < c.n(); ++i)
    pts.push_back({c[i].x(), c[i].y(), c[i].z()});
  j["points"] = std::move(pts);
  return j;
}

Configuration config_from_json(const json& j) {
  try {
    const auto& pts = j.at("points");
    std::vector<UnitVector> p;
    p.reserve(pts.size());
    for (const auto& row : pts) {
      if (!row.is_array() || row.size() != 3)
        throw io_error("configuration: each point needs three coordinates");
      const Vec3 v(row[0].get<double>(), row[1].get<double>(), row[2].get<double>());
      if (std::abs(v.norm() - 1.0) > 1e-6)
        throw io_error("configuration: point does not renormalize within 1e-6");
      p.push_back(UnitVector::normalized(v));
    }
    Configuration c(std::move(p));
    if (j.contains("n") && j.at("n").get<int>() != c.n())
      throw io_error("configuration: n does not match the point count");
    if (j.contains("radius") && !j.at("radius").is_null())
      c.radius = j.at("radius").get<double>();
    return c;
  } catch (const json::exception& e) {
    throw io_error(std::string("configuration: malformed JSON: ") + e.what());
  }
}

Configuration load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw io_error("cannot open " + path);
  json j;
  try {
    in >> j;
  } catch (const json::exception& e) {
    throw io_error(std::string("cannot parse ") + path + ": " + e.what());
  }
  return config_from_json(j);
}

void save_config(const Configuration& c, const std::string& path) {
  write_text_file(path, config_to_json(c).dump(2) + "\n");
}

json certificate_to_json(const BalanceCertificate& cert) {
  json j;
  j["balanced"] = cert.balanced;
  json w = json::array();
  if (cert.weights) {
    const auto& s = *cert.weights;
    for (std::size_t e = 0; e < s.graph.edges.size(); ++e)
      w.push_back({s.graph.edges[e].first, s.graph.edges[e].second, s.weights[e]});
  }
  j["weights"] = std::move(w);
  j["residual"] = cert.residual;
  return j;
}

json tammes_result_to_json(const TammesResult& r) {
  json j;
  j["n"] = r.n;
  j["theta"] = r.theta;
  j["theta_degrees"] = r.theta * 180.0 / kPi;
  j["radius"] = r.radius;
  j["restarts_used"] = r.restarts_used;
  j["config"] = config_to_json(r.config);
  j["certificate"] = certificate_to_json(r.certificate);
  return j;
}

json path_report_to_json(const PathReport& r) {
  json j;
  j["min_separation"] = r.min_separation;
  j["violation_times"] = r.violation_times;
  j["samples"] = r.samples;
  j["endpoint_match_rms"] = r.endpoint_match_rms;
  return j;
}

json path_to_json(const DeformationPath& p, int keyframes_per_segment) {
  json j;
  j["radius"] = p.radius();
  json segs = json::array();
  for (int k = 0; k < p.segments(); ++k) {
    json s;
    s["kind"] = p.segment(k).kind();
    s["params"] = p.segment(k).params();
    if (keyframes_per_segment > 1) {
      json frames = json::array();
      for (int i = 0; i < keyframes_per_segment; ++i)
        frames.push_back(config_to_json(
            p.at_segment(k, double(i) / (keyframes_per_segment - 1))));
      s["keyframes"] = std::move(frames);
    }
    segs.push_back(std::move(s));
  }
  j["segments"] = std::move(segs);
  return j;
}

void write_text_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw io_error("cannot write " + path);
  out << content;
}

}  // namespace sphere12
