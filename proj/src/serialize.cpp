#include "yosp/serialize.hpp"

#include <cstdint>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace yosp {

namespace {

Json rational_json(const Rational& q) { return to_string(q); }

Rational rational_from(const Json& j) {
  if (j.is_number_integer()) return Rational(j.get<long long>());
  if (!j.is_string()) throw ParseError("expected a rational string, got " + j.dump());
  return parse_rational(j.get<std::string>());
}

const char* kKeys[9] = {"11", "12", "13", "21", "22", "23", "31", "32", "33"};

}  // namespace

Json to_json(const UniPoly& p) {
  Json a = Json::array();
  for (const Rational& c : p.coefficients()) a.push_back(rational_json(c));
  return a;
}

UniPoly poly_from_json(const Json& j) {
  std::vector<Rational> c;
  for (const auto& x : j) c.push_back(rational_from(x));
  return UniPoly(std::move(c));
}

Json to_json(const Vec& v) {
  Json a = Json::array();
  for (Index k = 0; k < v.size(); ++k) a.push_back(rational_json(v(k)));
  return a;
}

Json to_json(const ModuleRep& m) {
  Json j;
  Json params = Json::array();
  for (const auto& f : m.factors) params.push_back({rational_json(f.alpha), rational_json(f.beta)});
  j["params"] = params;
  if (auto d = m.depth())
    j["depth"] = *d;
  else
    j["depth"] = nullptr;
  j["denom"] = to_json(m.denom);

  Json basis = Json::array();
  for (Index k = 0; k < m.dim(); ++k) {
    Json b;
    Json labels = Json::array();
    for (const auto& l : m.space.labels[static_cast<std::size_t>(k)]) labels.push_back({l[0], l[1]});
    b["labels"] = labels;
    b["parity"] = m.space.parity[static_cast<std::size_t>(k)];
    b["weight"] = rational_json(m.space.weight[static_cast<std::size_t>(k)]);
    basis.push_back(b);
  }
  j["basis"] = basis;

  const Index n = m.dim();
  Json t;
  for (std::size_t idx = 0; idx < 9; ++idx) {
    Json powers = Json::array();
    for (int p = 0; p <= m.denom.degree(); ++p) {
      const Mat c = Mat(m.T[idx].coefficient(p));
      Json flat = Json::array();
      for (Index r = 0; r < n; ++r)
        for (Index col = 0; col < n; ++col) flat.push_back(rational_json(c(r, col)));
      powers.push_back(flat);
    }
    t[kKeys[idx]] = powers;
  }
  j["T"] = t;
  j["c"] = {{"num", to_json(m.c.num())}, {"den", to_json(m.c.den())}};
  j["highest_index"] = m.highest_index;

  Json factors = Json::array();
  for (const auto& f : m.factors) {
    Json fj;
    fj["kind"] = to_string(f.kind);
    fj["alpha"] = rational_json(f.alpha);
    fj["beta"] = rational_json(f.beta);
    if (f.depth)
      fj["depth"] = *f.depth;
    else
      fj["depth"] = nullptr;
    factors.push_back(fj);
  }
  j["factors"] = factors;
  return j;
}

ModuleRep module_from_json(const Json& j) {
  try {
    ModuleRep m;
    m.denom = poly_from_json(j.at("denom"));
    for (const auto& b : j.at("basis")) {
      BasisLabel label;
      for (const auto& l : b.at("labels")) label.push_back({l.at(0).get<int>(), l.at(1).get<int>()});
      m.space.labels.push_back(std::move(label));
      m.space.parity.push_back(b.at("parity").get<int>());
      m.space.weight.push_back(rational_from(b.at("weight")));
    }
    const Index n = m.dim();
    for (std::size_t idx = 0; idx < 9; ++idx) {
      std::vector<SpMat> coeffs;
      for (const auto& flat : j.at("T").at(kKeys[idx])) {
        if (static_cast<Index>(flat.size()) != n * n) throw ParseError("T matrix has the wrong size");
        std::vector<Eigen::Triplet<Rational>> trips;
        for (Index k = 0; k < n * n; ++k) {
          const Rational v = rational_from(flat[static_cast<std::size_t>(k)]);
          if (v != 0) trips.emplace_back(k / n, k % n, v);
        }
        SpMat c(n, n);
        c.setFromTriplets(trips.begin(), trips.end());
        coeffs.push_back(std::move(c));
      }
      const int i = static_cast<int>(idx) / 3;
      const int jj = static_cast<int>(idx) % 3;
      m.T[idx] = OperatorPoly(std::move(coeffs), n, n, generator_parity(i, jj));
    }
    m.c = RatFunc(poly_from_json(j.at("c").at("num")), poly_from_json(j.at("c").at("den")));
    m.highest_index = j.at("highest_index").get<Index>();

    std::optional<int> depth;
    if (!j.at("depth").is_null()) depth = j.at("depth").get<int>();
    if (j.contains("factors")) {
      for (const auto& fj : j.at("factors")) {
        Factor f;
        f.kind = parse_factor_kind(fj.at("kind").get<std::string>());
        f.alpha = rational_from(fj.at("alpha"));
        f.beta = rational_from(fj.at("beta"));
        if (!fj.at("depth").is_null()) f.depth = fj.at("depth").get<int>();
        m.factors.push_back(f);
      }
    } else {
      for (const auto& p : j.at("params"))
        m.factors.push_back(Factor{FactorKind::Elementary, rational_from(p.at(0)),
                                   rational_from(p.at(1)), depth});
    }
    return m;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("malformed module file: ") + e.what());
  }
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

void write_module(const ModuleRep& m, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write " + path.string());
  out << dump(to_json(m));
}

ModuleRep read_module(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot read " + path.string());
  Json j;
  try {
    j = Json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(path.string() + ": " + e.what());
  }
  return module_from_json(j);
}

std::string module_digest(const ModuleRep& m) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char ch : dump(to_json(m))) {
    h ^= ch;
    h *= 0x100000001b3ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

Json to_json(const CheckReport& report, const ModuleRep& m) {
  Json j;
  j["check"] = report.check;
  j["module_digest"] = module_digest(m);
  j["degree_bound"] = {report.degree_bound_u, report.degree_bound_v};
  j["grid"] = report.grid;
  j["certified"] = report.certified;
  Json samples = Json::array();
  for (const auto& s : report.samples)
    samples.push_back({{"u", rational_json(s.u)}, {"v", rational_json(s.v)}, {"pass", s.pass}});
  j["samples"] = samples;
  j["result"] = report.passed ? "pass" : "fail";
  if (report.witness) {
    const auto& w = *report.witness;
    j["witness"] = {{"u", rational_json(w.u)},
                    {"v", rational_json(w.v)},
                    {"row", w.entry.row},
                    {"col", w.entry.col},
                    {"lhs", rational_json(w.entry.lhs)},
                    {"rhs", rational_json(w.entry.rhs)}};
  }
  return j;
}

}  // namespace yosp
