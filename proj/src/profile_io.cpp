#include "polyrad/profile_io.hpp"

#include <cstdio>
#include <fstream>
#include <map>
#include <sstream>
#include <stdexcept>

namespace polyrad {

namespace {

std::string fmt17(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

}  // namespace

void write_profile_csv(const RadialProfile& p, std::ostream& os) {
  const int m = p.spec.m;
  os << "# polyrad profile n=" << p.spec.n << " m=" << m << " alpha=" << p.spec.alpha.str()
     << " alpha_exact=" << (p.spec.alpha.is_exact() ? 1 : 0)
     << " sign=" << (p.spec.sign == RhsSign::plus ? "+" : "-") << " tol=" << fmt17(p.meta.tol)
     << " outcome=" << outcome_kind_name(p.meta.outcome.kind)
     << " r_event=" << fmt17(p.meta.outcome.r_event)
     << " left_positivity=" << (p.meta.left_positivity ? 1 : 0) << "\n";
  os << "r";
  for (int i = 0; i < m; ++i) os << ",v" << i;
  for (int i = 0; i < m; ++i) os << ",v" << i << "p";
  os << "\n";
  for (std::size_t j = 0; j < p.nodes(); ++j) {
    os << fmt17(p.grid[j]);
    for (int i = 0; i < m; ++i) os << "," << fmt17(p.values[static_cast<std::size_t>(i)][j]);
    for (int i = 0; i < m; ++i) os << "," << fmt17(p.slopes[static_cast<std::size_t>(i)][j]);
    os << "\n";
  }
}

void write_profile_csv(const RadialProfile& p, const std::string& path) {
  std::ofstream os(path);
  if (!os) throw std::runtime_error("write_profile_csv: cannot open " + path);
  write_profile_csv(p, os);
}

RadialProfile read_profile_csv(std::istream& is) {
  std::string header;
  if (!std::getline(is, header) || header.rfind("# polyrad profile", 0) != 0)
    throw std::runtime_error("read_profile_csv: missing profile header");

  std::map<std::string, std::string> kv;
  {
    std::istringstream hs(header.substr(2));
    std::string tok;
    while (hs >> tok) {
      const auto eq = tok.find('=');
      if (eq != std::string::npos) kv[tok.substr(0, eq)] = tok.substr(eq + 1);
    }
  }

  RadialProfile p;
  p.spec.n = std::stoi(kv.at("n"));
  p.spec.m = std::stoi(kv.at("m"));
  p.spec.sign = kv.at("sign") == "+" ? RhsSign::plus : RhsSign::minus;
  p.spec.alpha = kv.at("alpha_exact") == "1" ? Exponent::parse(kv.at("alpha"))
                                             : Exponent(std::stod(kv.at("alpha")));
  p.meta.tol = std::stod(kv.at("tol"));
  p.meta.left_positivity = kv.at("left_positivity") == "1";
  p.meta.outcome.r_event = std::stod(kv.at("r_event"));
  const std::string kind = kv.at("outcome");
  for (auto k : {ShootOutcome::Kind::survived, ShootOutcome::Kind::zero_touch,
                 ShootOutcome::Kind::blow_up, ShootOutcome::Kind::step_underflow})
    if (kind == outcome_kind_name(k)) p.meta.outcome.kind = k;

  std::string columns;
  if (!std::getline(is, columns)) throw std::runtime_error("read_profile_csv: missing column row");

  const auto m = static_cast<std::size_t>(p.spec.m);
  p.values.assign(m, {});
  p.slopes.assign(m, {});
  std::string line;
  while (std::getline(is, line)) {
    if (line.empty()) continue;
    std::istringstream ls(line);
    std::string cell;
    std::vector<double> row;
    while (std::getline(ls, cell, ',')) row.push_back(std::stod(cell));
    if (row.size() != 1 + 2 * m) throw std::runtime_error("read_profile_csv: bad row width");
    p.grid.push_back(row[0]);
    for (std::size_t i = 0; i < m; ++i) {
      p.values[i].push_back(row[1 + i]);
      p.slopes[i].push_back(row[1 + m + i]);
    }
  }
  return p;
}

RadialProfile read_profile_csv(const std::string& path) {
  std::ifstream is(path);
  if (!is) throw std::runtime_error("read_profile_csv: cannot open " + path);
  return read_profile_csv(is);
}

}  // namespace polyrad
