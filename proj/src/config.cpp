#include "metriclab/config.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace metriclab {

namespace {

std::string trim(const std::string& s) {
  const auto a = s.find_first_not_of(" \t\r");
  if (a == std::string::npos) return "";
  const auto b = s.find_last_not_of(" \t\r");
  return s.substr(a, b - a + 1);
}

}  // namespace

ExperimentConfig ExperimentConfig::from_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open config file: " + path);
  ExperimentConfig cfg;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos)
      throw std::runtime_error(path + ":" + std::to_string(lineno) +
                               ": expected key = value");
    cfg.set(trim(line.substr(0, eq)), trim(line.substr(eq + 1)));
  }
  return cfg;
}

void ExperimentConfig::set(const std::string& key, const std::string& value) {
  auto as_double = [&] {
    size_t used = 0;
    const double v = std::stod(value, &used);
    if (used != value.size())
      throw std::runtime_error("config: bad number for " + key);
    return v;
  };
  auto as_int = [&] {
    size_t used = 0;
    const int v = std::stoi(value, &used);
    if (used != value.size())
      throw std::runtime_error("config: bad integer for " + key);
    return v;
  };

  if (key == "experiment") {
    experiment = value;
  } else if (key == "j_list") {
    j_list.clear();
    std::stringstream ss(value);
    std::string item;
    while (std::getline(ss, item, ',')) {
      item = trim(item);
      if (!item.empty()) j_list.push_back(std::stoi(item));
    }
  } else if (key == "eta") {
    eta = as_double();
  } else if (key == "h0") {
    h0 = as_double();
  } else if (key == "h") {
    h = as_double();
    h_set = true;
  } else if (key == "p") {
    p = as_double();
  } else if (key == "q") {
    q = as_double();
  } else if (key == "nu") {
    nu = as_int();
  } else if (key == "nv") {
    nv = as_int();
  } else if (key == "grid") {
    nu = nv = as_int();
  } else if (key == "stencil") {
    const int s = as_int();
    if (s == 8)
      stencil = Stencil::Eight;
    else if (s == 16)
      stencil = Stencil::Sixteen;
    else
      throw std::runtime_error("config: stencil must be 8 or 16");
  } else if (key == "pairs") {
    pairs = as_int();
  } else if (key == "seed") {
    seed = unsigned(as_int());
  } else if (key == "out") {
    out_dir = value;
  } else if (key.rfind("tol_", 0) == 0 && key.size() > 4) {
    tol[key.substr(4)] = as_double();
  } else {
    throw std::runtime_error("config: unknown key '" + key + "'");
  }
}

void ExperimentConfig::validate() const {
  if (eta <= 0.0 || eta >= 1.0)
    throw std::runtime_error("config: eta in (0,1) required");
  if (h0 <= 0.0 || h0 > 1.0)
    throw std::runtime_error("config: h0 in (0,1] required");
  if (h <= 1.0) throw std::runtime_error("config: h > 1 required");
  if (p < 1.0) throw std::runtime_error("config: p >= 1 required");
  if (q < 1.0) throw std::runtime_error("config: q >= 1 required");
  for (int j : j_list)
    if (j < 1) throw std::runtime_error("config: j >= 1 required");
  if (nu < 0 || nv < 0 || pairs < 0)
    throw std::runtime_error("config: negative grid/pair counts");
  // Resource limit: refuse grids that will not fit in memory, do not crash.
  const long nodes = long(nu > 0 ? nu : 1) * long(nv > 0 ? nv : 1);
  if (nodes > 4L * 1024 * 1024)
    throw std::runtime_error(
        "config: grid too large (limit 4M nodes); reduce nu/nv");
  if (nu > 0 && nu < 8) throw std::runtime_error("config: nu >= 8 required");
  if (nv > 0 && nv < 8) throw std::runtime_error("config: nv >= 8 required");
}

std::map<std::string, std::string> ExperimentConfig::echo() const {
  std::map<std::string, std::string> m;
  m["experiment"] = experiment;
  std::string js;
  for (size_t i = 0; i < j_list.size(); ++i)
    js += (i ? "," : "") + std::to_string(j_list[i]);
  m["j_list"] = js;
  auto num = [](double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.12g", v);
    return std::string(buf);
  };
  m["eta"] = num(eta);
  m["h0"] = num(h0);
  m["h"] = num(h);
  m["p"] = num(p);
  m["q"] = num(q);
  m["nu"] = std::to_string(nu);
  m["nv"] = std::to_string(nv);
  m["stencil"] = stencil == Stencil::Sixteen ? "16" : "8";
  m["pairs"] = std::to_string(pairs);
  m["seed"] = std::to_string(seed);
  m["out"] = out_dir;
  for (const auto& [k, v] : tol) m["tol_" + k] = num(v);
  return m;
}

}  // namespace metriclab
