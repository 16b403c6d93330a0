#include "sliceforge/io.hpp"

#include <cmath>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace sliceforge::io {
namespace {

std::string shortest(double x) { return json(x).dump(); }

long require_integer(const json& j, const char* what) {
  if (!j.is_number_integer())
    throw std::runtime_error(std::string(what) + " must be an integer");
  return j.get<long>();
}

const json& require_field(const json& j, const char* key) {
  const auto it = j.find(key);
  if (it == j.end())
    throw std::runtime_error(std::string("missing field: ") + key);
  return *it;
}

json params_to_json(const std::map<std::string, double>& m) {
  json out = json::object();
  for (const auto& [k, v] : m) out[k] = number_to_json(v);
  return out;
}

}  // namespace

json number_to_json(double x) {
  if (std::isfinite(x)) return json(x);
  if (std::isnan(x)) return json("nan");
  return json(x > 0 ? "inf" : "-inf");
}

double number_from_json(const json& j) {
  if (j.is_number()) return j.get<double>();
  if (j.is_string()) {
    const std::string s = j.get<std::string>();
    if (s == "inf") return std::numeric_limits<double>::infinity();
    if (s == "-inf") return -std::numeric_limits<double>::infinity();
    if (s == "nan") return std::numeric_limits<double>::quiet_NaN();
  }
  throw std::runtime_error("expected a number");
}

json to_json(const CliffordNumber& a) {
  json comps = json::object();
  for (std::size_t k = 0; k < a.size(); ++k)
    if (a[k] != 0.0) comps[std::to_string(k)] = number_to_json(a[k]);
  return json{{"n", a.n()}, {"coeffs", std::move(comps)}};
}

CliffordNumber clifford_from_json(const json& j) {
  const int n = static_cast<int>(require_integer(require_field(j, "n"), "n"));
  if (n < 0 || n > 8) throw std::runtime_error("n out of range");
  CliffordNumber a(n);
  for (const auto& [key, value] : require_field(j, "coeffs").items()) {
    std::size_t pos = 0;
    const unsigned long mask = std::stoul(key, &pos);
    if (pos != key.size() || mask >= a.size())
      throw std::runtime_error("bad component key: " + key);
    a[mask] = number_from_json(value);
  }
  return a;
}

json to_json(const SliceSeries& f) {
  json coeffs = json::array();
  for (long l = 0; l <= f.truncation(); ++l)
    coeffs.push_back(to_json(f.coeff(l))["coeffs"]);
  return json{{"n", f.n()}, {"N", f.truncation()}, {"coeffs", std::move(coeffs)}};
}

SliceSeries series_from_json(const json& j) {
  const int n = static_cast<int>(require_integer(require_field(j, "n"), "n"));
  const long N = require_integer(require_field(j, "N"), "N");
  const json& coeffs = require_field(j, "coeffs");
  if (!coeffs.is_array() || static_cast<long>(coeffs.size()) != N + 1)
    throw std::runtime_error("coeffs must hold N + 1 entries");
  SliceSeries f(n, N);
  for (long l = 0; l <= N; ++l) {
    json entry{{"n", n}, {"coeffs", coeffs[static_cast<std::size_t>(l)]}};
    f.set_coeff(l, clifford_from_json(entry));
  }
  return f;
}

json to_json(const ProximateOrder& po) {
  json j;
  switch (po.family()) {
    case ProximateOrder::Family::kConstant:
      j = json{{"family", "constant"}, {"rho", po.rho()}};
      break;
    case ProximateOrder::Family::kLogShift:
      j = json{{"family", "log-shift"},
               {"rho", po.rho()},
               {"b", po.b()},
               {"r0", po.r0()}};
      break;
    case ProximateOrder::Family::kTable: {
      json knots = json::array();
      for (const auto& k : po.knots()) knots.push_back({k[0], k[1]});
      j = json{{"family", "table"}, {"rho", po.rho()}, {"knots", std::move(knots)}};
      break;
    }
  }
  if (po.glued()) j["glue_radius"] = po.glue_radius();
  return j;
}

ProximateOrder order_from_json(const json& j) {
  const std::string family = require_field(j, "family").get<std::string>();
  const double rho = number_from_json(require_field(j, "rho"));
  ProximateOrder po = ProximateOrder::constant(1.0);
  if (family == "constant") {
    po = ProximateOrder::constant(rho);
  } else if (family == "log-shift") {
    po = ProximateOrder::log_shift(rho, number_from_json(require_field(j, "b")),
                                   number_from_json(require_field(j, "r0")));
  } else if (family == "table") {
    std::vector<std::array<double, 2>> knots;
    for (const json& k : require_field(j, "knots"))
      knots.push_back({number_from_json(k.at(0)), number_from_json(k.at(1))});
    po = ProximateOrder::table(std::move(knots), rho);
  } else {
    throw std::runtime_error("unknown order family: " + family);
  }
  if (j.contains("glue_radius"))
    po = normalize(po, number_from_json(j["glue_radius"]));
  return po;
}

json to_json(const InfOrderOperator& P) {
  json coeffs = json::array();
  for (const SliceSeries& u : P.coeffs) coeffs.push_back(to_json(u));
  return json{{"n", P.n()},
              {"L", P.truncation()},
              {"rho1", to_json(P.rho1)},
              {"rho2", to_json(P.rho2)},
              {"coeffs", std::move(coeffs)}};
}

InfOrderOperator operator_from_json(const json& j) {
  const long L = require_integer(require_field(j, "L"), "L");
  const json& coeffs = require_field(j, "coeffs");
  if (!coeffs.is_array() || static_cast<long>(coeffs.size()) != L + 1)
    throw std::runtime_error("coeffs must hold L + 1 entries");
  std::vector<SliceSeries> u;
  u.reserve(coeffs.size());
  for (const json& entry : coeffs) u.push_back(series_from_json(entry));
  return InfOrderOperator(std::move(u),
                          order_from_json(require_field(j, "rho1")),
                          order_from_json(require_field(j, "rho2")));
}

json to_json(const BoundCertificate& cert) {
  return json{{"class", cert.cls == OperatorClass::kD ? "D" : "D0"},
              {"lambda", cert.lambda},
              {"sigma", cert.sigma},
              {"log_C", number_to_json(cert.log_C)},
              {"max_ratio_index", cert.max_ratio_index},
              {"pass", cert.pass}};
}

BoundCertificate certificate_from_json(const json& j) {
  BoundCertificate cert;
  const std::string cls = require_field(j, "class").get<std::string>();
  if (cls == "D")
    cert.cls = OperatorClass::kD;
  else if (cls == "D0")
    cert.cls = OperatorClass::kD0;
  else
    throw std::runtime_error("unknown certificate class: " + cls);
  cert.lambda = number_from_json(require_field(j, "lambda"));
  cert.sigma = number_from_json(require_field(j, "sigma"));
  cert.log_C = number_from_json(require_field(j, "log_C"));
  cert.max_ratio_index = require_integer(require_field(j, "max_ratio_index"),
                                         "max_ratio_index");
  cert.pass = require_field(j, "pass").get<bool>();
  return cert;
}

json to_json(const CheckResult& check) {
  return json{{"check", check.name},
              {"pass", check.pass},
              {"empirical_constant", number_to_json(check.empirical_constant)},
              {"max_violation", number_to_json(check.max_violation)},
              {"params", params_to_json(check.params)},
              {"grid", params_to_json(check.grid)},
              {"notes", check.notes}};
}

json to_json(const SuiteReport& report) {
  json checks = json::array();
  for (const CheckResult& c : report.checks) checks.push_back(to_json(c));
  return json{{"suite", report.suite},
              {"seed", report.seed},
              {"all_pass", report.all_pass()},
              {"checks", std::move(checks)}};
}

std::string convergence_csv(const std::vector<ConvergenceRow>& rows) {
  std::ostringstream out;
  out << "n,t,B,d_n\n";
  for (const ConvergenceRow& r : rows)
    out << r.n << ',' << shortest(r.t) << ',' << shortest(r.weight) << ','
        << shortest(r.d) << '\n';
  return out.str();
}

json to_json(const PlotData& plot) {
  return json{{"x", plot.x},
              {"re_psi", plot.re_psi},
              {"im_psi", plot.im_psi},
              {"re_limit", plot.re_limit},
              {"im_limit", plot.im_limit}};
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  json j;
  try {
    in >> j;
  } catch (const json::parse_error& e) {
    throw std::runtime_error(path + ": " + e.what());
  }
  return j;
}

void write_json_file(const std::string& path, const json& j) {
  write_text_file(path, dump(j));
}

void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open " + path + " for writing");
  out << text;
  if (!out) throw std::runtime_error("write failed: " + path);
}

}  // namespace sliceforge::io
