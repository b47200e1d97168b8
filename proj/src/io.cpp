#include "entrobound/io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

#include "json.hpp"

namespace entrobound {

std::string format_double(double v) {
  char buf[40];
  auto res = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, res.ptr);
}

namespace {

nlohmann::json parse_or_rethrow(const std::string& text, const std::string& where) {
  try {
    return nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ConfigError(where + ": " + e.what());
  }
}

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

HermitianMatrix parse_matrix_json(const std::string& text) {
  nlohmann::json j = parse_or_rethrow(text, "matrix JSON");
  if (!j.is_object() || !j.contains("d") || !j.contains("entries_re"))
    throw ConfigError("matrix JSON needs fields 'd' and 'entries_re'");
  std::size_t d = j.at("d").get<std::size_t>();
  std::vector<double> re = j.at("entries_re").get<std::vector<double>>();
  std::vector<double> im(re.size(), 0.0);
  if (j.contains("entries_im"))
    im = j.at("entries_im").get<std::vector<double>>();
  if (re.size() != d * d || im.size() != d * d)
    throw ConfigError("matrix JSON entries must have length d*d");
  std::vector<cplx> entries(d * d);
  for (std::size_t k = 0; k < entries.size(); ++k)
    entries[k] = cplx(re[k], im[k]);
  return HermitianMatrix(d, std::move(entries));
}

HermitianMatrix load_matrix(const std::string& path) {
  return parse_matrix_json(slurp(path));
}

DensityMatrix load_density(const std::string& path) {
  return DensityMatrix(load_matrix(path));
}

std::string matrix_to_json(const HermitianMatrix& m) {
  nlohmann::json j;
  j["d"] = m.dim();
  std::vector<double> re, im;
  re.reserve(m.entries().size());
  im.reserve(m.entries().size());
  for (const cplx& v : m.entries()) {
    re.push_back(v.real());
    im.push_back(v.imag());
  }
  j["entries_re"] = re;
  j["entries_im"] = im;
  return j.dump();
}

DiscreteDistribution load_distribution(const std::string& path) {
  nlohmann::json j = parse_or_rethrow(slurp(path), "distribution JSON (" + path + ")");
  if (!j.is_array())
    throw ConfigError("distribution file must be a JSON array of reals: " + path);
  return DiscreteDistribution(j.get<std::vector<double>>());
}

std::string report_to_json(const BoundReport& r) {
  nlohmann::json j;
  j["name"] = r.name;
  j["value"] = r.value;
  j["in_validity_domain"] = r.in_validity_domain;
  j["combination"] = r.combination == TermCombination::sum ? "sum" : "product";
  nlohmann::json terms = nlohmann::json::object();
  for (const auto& [k, v] : r.terms) terms[k] = v;
  nlohmann::json params = nlohmann::json::object();
  for (const auto& [k, v] : r.params) params[k] = v;
  j["terms"] = terms;
  j["params"] = params;
  return j.dump(2);
}

}  // namespace entrobound
