#include "phigrad/config.hpp"

#include <fstream>
#include <map>
#include <sstream>

namespace phigrad {

namespace {

std::string trim(const std::string& s) {
  const auto a = s.find_first_not_of(" \t\r\n");
  if (a == std::string::npos) return "";
  const auto b = s.find_last_not_of(" \t\r\n");
  return s.substr(a, b - a + 1);
}

double to_double(const std::string& key, const std::string& v) {
  try {
    std::size_t used = 0;
    const double x = std::stod(v, &used);
    if (used != v.size()) throw std::invalid_argument(v);
    return x;
  } catch (const std::exception&) {
    throw config_error("bad numeric value for '" + key + "': " + v);
  }
}

int to_int(const std::string& key, const std::string& v) {
  const double x = to_double(key, v);
  const int i = static_cast<int>(x);
  if (static_cast<double>(i) != x) throw config_error("expected integer for '" + key + "': " + v);
  return i;
}

std::vector<double> to_list(const std::string& key, const std::string& v) {
  std::vector<double> out;
  std::stringstream ss(v);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(to_double(key, trim(item)));
  if (out.empty()) throw config_error("empty list for '" + key + "'");
  return out;
}

// "w:p, w:p, ..." pairs
std::vector<PhiTerm> to_terms(const std::string& key, const std::string& v) {
  std::vector<PhiTerm> out;
  std::stringstream ss(v);
  std::string item;
  while (std::getline(ss, item, ',')) {
    item = trim(item);
    const auto colon = item.find(':');
    if (colon == std::string::npos)
      throw config_error("expected weight:exponent pairs for '" + key + "': " + item);
    out.push_back({to_double(key, trim(item.substr(0, colon))),
                   to_double(key, trim(item.substr(colon + 1)))});
  }
  if (out.empty()) throw config_error("empty term list for '" + key + "'");
  return out;
}

class KeyMap {
 public:
  explicit KeyMap(std::map<std::string, std::string> kv) : kv_(std::move(kv)) {}

  std::optional<std::string> take(const std::string& key) {
    auto it = kv_.find(key);
    if (it == kv_.end()) return std::nullopt;
    std::string v = it->second;
    kv_.erase(it);
    return v;
  }
  std::string require(const std::string& key) {
    auto v = take(key);
    if (!v) throw config_error("missing required key '" + key + "'");
    return *v;
  }
  void reject_leftovers() const {
    if (!kv_.empty()) throw config_error("unknown key '" + kv_.begin()->first + "'");
  }

 private:
  std::map<std::string, std::string> kv_;
};

PhiSpec build_phi(KeyMap& keys) {
  const auto kind = keys.take("phi.kind");
  if (!kind || *kind == "constant_one") return PhiSpec::constant_one();
  if (*kind == "power_law") return PhiSpec::power_law(to_double("phi.p", keys.require("phi.p")));
  if (*kind == "sum_of_powers")
    return PhiSpec::sum_of_powers(to_terms("phi.terms", keys.require("phi.terms")));
  if (*kind == "exponential") return PhiSpec::exponential();
  if (*kind == "mean_curvature") return PhiSpec::mean_curvature();
  throw config_error("unknown phi.kind '" + *kind + "'");
}

PsiSpec build_psi(KeyMap& keys) {
  const auto kind = keys.take("psi.kind");
  if (!kind || *kind == "zero") return PsiSpec::zero();
  if (*kind == "power")
    return PsiSpec::power(to_double("psi.a", keys.require("psi.a")),
                          to_double("psi.q", keys.require("psi.q")));
  if (*kind == "double_power")
    return PsiSpec::double_power(to_double("psi.m", keys.require("psi.m")),
                                 to_double("psi.k", keys.require("psi.k")));
  if (*kind == "log_power")
    return PsiSpec::log_power(to_double("psi.a", keys.require("psi.a")),
                              to_double("psi.q", keys.require("psi.q")),
                              to_double("psi.m", keys.require("psi.m")));
  if (*kind == "general_sum") {
    GeneralSumPsi gs;
    if (auto v = keys.take("psi.A")) gs.A = to_double("psi.A", *v);
    if (auto v = keys.take("psi.P")) gs.P = to_double("psi.P", *v);
    if (auto v = keys.take("psi.B")) gs.B = to_double("psi.B", *v);
    if (auto v = keys.take("psi.Q")) gs.Q = to_double("psi.Q", *v);
    if (auto v = keys.take("psi.C")) gs.C = to_double("psi.C", *v);
    if (auto v = keys.take("psi.D")) gs.D = to_double("psi.D", *v);
    return PsiSpec::general_sum(gs);
  }
  throw config_error("unknown psi.kind '" + *kind + "'");
}

}  // namespace

RunConfig parse_config(const std::string& text) {
  std::map<std::string, std::string> kv;
  std::stringstream ss(text);
  std::string line;
  int lineno = 0;
  while (std::getline(ss, line)) {
    ++lineno;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) {
      std::ostringstream os;
      os << "line " << lineno << ": expected key=value, got '" << line << "'";
      throw config_error(os.str());
    }
    const std::string key = trim(line.substr(0, eq));
    if (kv.count(key)) throw config_error("duplicate key '" + key + "'");
    kv[key] = trim(line.substr(eq + 1));
  }

  KeyMap keys(std::move(kv));
  RunConfig cfg;
  try {
    cfg.phi = build_phi(keys);
    cfg.psi = build_psi(keys);
  } catch (const precondition_error& e) {
    throw config_error(e.what());
  }
  if (auto v = keys.take("n")) cfg.n = to_int("n", *v);
  if (cfg.n < 2) throw config_error("n must be >= 2");
  if (auto v = keys.take("space.k")) cfg.space_k = to_double("space.k", *v);
  if (cfg.space_k < 0.0) throw config_error("space.k must be >= 0");

  if (auto mode = keys.take("scan.mode")) {
    ScanConfig sc;
    sc.mode = *mode;
    if (sc.mode != "pq" && sc.mode != "mk")
      throw config_error("unknown scan.mode '" + sc.mode + "'");
    sc.min1 = to_double("scan.min1", keys.require("scan.min1"));
    sc.max1 = to_double("scan.max1", keys.require("scan.max1"));
    sc.steps1 = to_int("scan.steps1", keys.require("scan.steps1"));
    sc.min2 = to_double("scan.min2", keys.require("scan.min2"));
    sc.max2 = to_double("scan.max2", keys.require("scan.max2"));
    sc.steps2 = to_int("scan.steps2", keys.require("scan.steps2"));
    if (auto v = keys.take("scan.compare")) sc.compare_layer = to_int("scan.compare", *v) != 0;
    if (sc.steps1 < 1 || sc.steps2 < 1) throw config_error("scan steps must be >= 1");
    if (sc.max1 < sc.min1 || sc.max2 < sc.min2) throw config_error("scan range is empty");
    cfg.scan = sc;
  }

  if (auto v = keys.take("solver.u0")) cfg.solver.u0 = to_double("solver.u0", *v);
  if (auto v = keys.take("solver.R")) cfg.solver.R = to_double("solver.R", *v);
  if (auto v = keys.take("solver.h")) cfg.solver.h = to_double("solver.h", *v);
  if (auto v = keys.take("solver.radii")) cfg.solver.radii = to_list("solver.radii", *v);

  keys.reject_leftovers();
  return cfg;
}

RunConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw config_error("cannot open config file: " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_config(ss.str());
}

}  // namespace phigrad
