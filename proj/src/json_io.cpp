#include "hardy/json_io.hpp"

#include "hardy/errors.hpp"

namespace hardy::io {

namespace {

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw InputError(std::string("missing field \"") + key + "\"");
  return j.at(key);
}

double number(const Json& j, const char* what) {
  if (!j.is_number()) throw InputError(std::string(what) + " must be a number");
  return j.get<double>();
}

Index dimension(const Json& j, const char* what) {
  if (!j.is_number_integer() || j.get<long long>() < 0) throw InputError(std::string(what) + " must be a nonnegative integer");
  return static_cast<Index>(j.get<long long>());
}

std::vector<cplx> complex_list(const Json& j) {
  if (!j.is_array()) throw InputError("expected an array of [re, im] pairs");
  std::vector<cplx> out;
  for (const auto& z : j) out.push_back(complex_from_json(z));
  return out;
}

Json complex_list_json(const std::vector<cplx>& zs) {
  Json out = Json::array();
  for (cplx z : zs) out.push_back(to_json(z));
  return out;
}

}  // namespace

Json to_json(cplx z) { return Json::array({z.real(), z.imag()}); }

cplx complex_from_json(const Json& j) {
  if (j.is_number()) return {j.get<double>(), 0.0};
  if (!j.is_array() || j.size() != 2) throw InputError("complex numbers are [re, im] pairs");
  return {number(j[0], "real part"), number(j[1], "imaginary part")};
}

Json to_json(const CMatrix& m) {
  Json data = Json::array();
  for (Index i = 0; i < m.rows(); ++i)
    for (Index k = 0; k < m.cols(); ++k) data.push_back(to_json(m(i, k)));
  return {{"rows", m.rows()}, {"cols", m.cols()}, {"data", data}};
}

CMatrix matrix_from_json(const Json& j) {
  const Index r = dimension(field(j, "rows"), "rows");
  const Index c = dimension(field(j, "cols"), "cols");
  const Json& data = field(j, "data");
  if (!data.is_array() || static_cast<Index>(data.size()) != r * c) throw InputError("matrix data must hold rows*cols entries");
  CMatrix m(r, c);
  for (Index i = 0; i < r; ++i)
    for (Index k = 0; k < c; ++k) m(i, k) = complex_from_json(data[static_cast<std::size_t>(i * c + k)]);
  if (!all_finite(m)) throw InputError("matrix entries must be finite");
  return m;
}

Json to_json(const RationalMatFn& f) {
  Json coeffs = Json::array();
  for (const auto& c : f.numerator().coeffs()) coeffs.push_back(to_json(c));
  return {{"coeffs", coeffs}, {"den_zeros", complex_list_json(f.den_zeros())}, {"grid_log2", f.grid_log2()}};
}

RationalMatFn function_from_json(const Json& j) {
  const Json& cj = field(j, "coeffs");
  if (!cj.is_array() || cj.empty()) throw InputError("coeffs must be a nonempty array");
  std::vector<CMatrix> coeffs;
  for (const auto& c : cj) {
    coeffs.push_back(matrix_from_json(c));
    if (coeffs.back().rows() != coeffs.front().rows() || coeffs.back().cols() != coeffs.front().cols())
      throw InputError("all coefficients must share one shape");
  }
  std::vector<cplx> den = j.contains("den_zeros") ? complex_list(j.at("den_zeros")) : std::vector<cplx>{};
  for (cplx a : den)
    if (!(std::abs(a) < 1.0)) throw InputError("denominator zeros must lie in the open unit disk");
  int g = 0;
  if (j.contains("grid_log2")) {
    g = static_cast<int>(dimension(j.at("grid_log2"), "grid_log2"));
    if (g > 20) throw InputError("grid_log2 too large");
  }
  return {MatPoly(std::move(coeffs)), std::move(den), g};
}

Json to_json(const FiniteBlaschkeProduct& theta) {
  return {{"unimodular", to_json(theta.unimodular)}, {"zeros", complex_list_json(theta.zeros)}};
}

FiniteBlaschkeProduct theta_from_json(const Json& j) {
  FiniteBlaschkeProduct theta;
  if (j.is_array()) {
    theta.zeros = complex_list(j);
  } else {
    theta.zeros = complex_list(field(j, "zeros"));
    if (j.contains("unimodular")) theta.unimodular = complex_from_json(j.at("unimodular"));
  }
  try {
    theta.validate();
  } catch (const std::invalid_argument& e) {
    throw InputError(e.what());
  }
  return theta;
}

Json to_json(const BPFactor& f) { return {{"alpha", to_json(f.alpha)}, {"proj", to_json(f.proj)}}; }

Json to_json(const BPProduct& b) {
  Json factors = Json::array();
  for (const auto& f : b.factors) factors.push_back(to_json(f));
  return {{"unitary", to_json(b.unitary)}, {"factors", factors}};
}

BPProduct product_from_json(const Json& j) {
  BPProduct b{matrix_from_json(field(j, "unitary")), {}};
  const Json& fs = field(j, "factors");
  if (!fs.is_array()) throw InputError("factors must be an array");
  for (const auto& f : fs) b.factors.push_back({complex_from_json(field(f, "alpha")), matrix_from_json(field(f, "proj"))});
  try {
    b.validate();
  } catch (const std::invalid_argument& e) {
    throw InputError(e.what());
  }
  return b;
}

Json to_json(const PeelTrace& t) {
  Json steps = Json::array();
  for (const auto& s : t.steps)
    steps.push_back({{"alpha", to_json(s.alpha)},
                     {"proj", to_json(s.proj)},
                     {"division_residual", s.division_residual},
                     {"inner_residual", s.inner_residual},
                     {"static_proj_distance", s.static_proj_distance}});
  return {{"steps", steps}, {"final_unitary", to_json(t.final_unitary)}};
}

Json to_json(const ZnDivisorCertificate& c) {
  Json coeffs = Json::array(), sub = Json::array(), ran = Json::array();
  for (const auto& m : c.coefficients) coeffs.push_back(to_json(m));
  for (const auto& m : c.subspace_projs) sub.push_back(to_json(m));
  for (const auto& m : c.range_projs) ran.push_back(to_json(m));
  return {{"N", c.N},
          {"alpha", to_json(c.alpha)},
          {"coefficient_form", c.coefficient_form},
          {"coefficients", coeffs},
          {"subspace_projs", sub},
          {"range_projs", ran},
          {"bp", to_json(c.bp)},
          {"residual", c.residual}};
}

Json to_json(const CoprimeReport& r) {
  Json ws = Json::array();
  for (const auto& w : r.witnesses)
    ws.push_back({{"alpha", to_json(w.alpha)},
                  {"defect_dim", w.defect_dim},
                  {"divisor", w.divisor ? to_json(*w.divisor) : Json()},
                  {"residual", w.residual}});
  return {{"side", r.side == Side::left ? "left" : "right"}, {"verdict", r.verdict}, {"witnesses", ws}};
}

Json to_json(const CoprimeFactorization& f) {
  return {{"delta", to_json(f.delta)}, {"a", to_json(f.a)}, {"truncation", f.truncation}, {"residual", f.residual}};
}

Json to_json(const gallery::GaussRational& g) { return g.str(); }

Json to_json(const gallery::Term& t) {
  return {{"target", t.target}, {"power", t.power}, {"weight", to_json(t.weight)}, {"escaped", t.escaped}};
}

Json table_json(const gallery::ShiftSymbol& s) {
  Json out = Json::array();
  for (const auto& [n, t] : s.table()) {
    Json row{{"index", n}};
    if (t) {
      const Json term = to_json(*t);
      for (const auto& [k, v] : term.items()) row[k] = v;
    } else {
      row["zero"] = true;
    }
    out.push_back(row);
  }
  return out;
}

}  // namespace hardy::io
