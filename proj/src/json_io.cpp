#include "sj/json_io.hpp"

namespace sj {

const Json& require(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw MalformedInput(std::string("missing field \"") + key + "\"");
  return j.at(key);
}

Json to_json(const RMat& M) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < M.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < M.cols(); ++j) row.push_back(M(i, j));
    rows.push_back(std::move(row));
  }
  return rows;
}

Json to_json(const CMat& M) { return Json{{"re", to_json(real(M))}, {"im", to_json(imag(M))}}; }
Json to_json(cplx z) { return Json::array({z.real(), z.imag()}); }
Json to_json(const SiegelPoint& p) { return Json{{"X", to_json(p.X())}, {"Y", to_json(p.Y())}}; }

Json to_json(const JacobiPoint& p) {
  return Json{{"X", to_json(p.base().X())}, {"Y", to_json(p.base().Y())}, {"U", to_json(p.U())}, {"V", to_json(p.V())}};
}

Json to_json(const DiskPoint& p) { return Json{{"W", to_json(p.W())}, {"eta", to_json(p.eta())}}; }

Json to_json(const SymplecticMatrix& M) {
  return Json{{"A", to_json(M.A())}, {"B", to_json(M.B())}, {"C", to_json(M.C())}, {"D", to_json(M.D())}};
}

Json to_json(const HeisenbergElement& h) {
  return Json{{"lambda", to_json(h.lambda())}, {"mu", to_json(h.mu())}, {"kappa", to_json(h.kappa())}};
}

Json to_json(const JacobiGroupElement& g) { return Json{{"M", to_json(g.M)}, {"h", to_json(g.h)}}; }

Json to_json(const DiskGroupElement& g) {
  return Json{{"P", to_json(g.P())},
              {"Q", to_json(g.Q())},
              {"lambda", to_json(g.h().lambda)},
              {"mu", to_json(g.h().mu)},
              {"kappa", to_json(g.h().kappa)}};
}

Json to_json(const Condition& c) {
  Json j{{"checked", c.checked}, {"holds", c.holds}};
  j["margin"] = std::isfinite(c.margin) ? Json(c.margin) : Json(nullptr);
  return j;
}

Json to_json(const DomainMembership& m) {
  Json j{{"member", m.member()}};
  const std::pair<const char*, const Condition*> conds[] = {{"M1", &m.M1}, {"M2", &m.M2}, {"S1", &m.S1},
                                                            {"S2", &m.S2}, {"S3", &m.S3}, {"PZ", &m.PZ}};
  for (const auto& [name, c] : conds) {
    if (c->checked) j[name] = to_json(*c);
  }
  return j;
}

Json to_json(const Tolerances& t) {
  return Json{{"sym_tol", t.sym_tol},           {"posdef_tol", t.posdef_tol}, {"symplectic_tol", t.symplectic_tol},
              {"lin_tol", t.lin_tol},           {"pivot_tol", t.pivot_tol},   {"cond_max", t.cond_max},
              {"memb_tol", t.memb_tol},         {"unitary_tol", t.unitary_tol}, {"form_imag_tol", t.form_imag_tol}};
}

RMat rmat_from_json(const Json& j) {
  if (!j.is_array()) throw MalformedInput("matrix must be an array of rows");
  const std::size_t r = j.size();
  std::size_t c = 0;
  std::vector<double> data;
  for (std::size_t i = 0; i < r; ++i) {
    const Json& row = j[i];
    if (!row.is_array()) throw MalformedInput("matrix rows must be arrays");
    if (i == 0) c = row.size();
    if (row.size() != c) throw MalformedInput("matrix rows have different lengths");
    for (const auto& x : row) {
      if (!x.is_number()) throw MalformedInput("matrix entries must be numbers");
      data.push_back(x.get<double>());
    }
  }
  return RMat(r, c, std::move(data));
}

CMat cmat_from_json(const Json& j) {
  if (j.is_array()) return complexify(rmat_from_json(j));
  const RMat re = rmat_from_json(require(j, "re"));
  const RMat im = rmat_from_json(require(j, "im"));
  if (re.rows() != im.rows() || re.cols() != im.cols()) throw MalformedInput("re and im parts differ in shape");
  return complexify(re, im);
}

cplx cplx_from_json(const Json& j) {
  if (j.is_number()) return {j.get<double>(), 0.0};
  if (j.is_array() && j.size() == 2 && j[0].is_number() && j[1].is_number()) return {j[0].get<double>(), j[1].get<double>()};
  throw MalformedInput("complex scalar must be a number or [re, im]");
}

SiegelPoint siegel_point_from_json(const Json& j) {
  if (j.is_object() && j.contains("omega")) return SiegelPoint::from_omega(cmat_from_json(j.at("omega")));
  return SiegelPoint::make(rmat_from_json(require(j, "X")), rmat_from_json(require(j, "Y")));
}

JacobiPoint jacobi_point_from_json(const Json& j) {
  if (j.is_object() && j.contains("omega")) {
    return JacobiPoint::from_complex(cmat_from_json(j.at("omega")), cmat_from_json(require(j, "Z")));
  }
  return JacobiPoint::make(siegel_point_from_json(j), rmat_from_json(require(j, "U")), rmat_from_json(require(j, "V")));
}

DiskPoint disk_point_from_json(const Json& j) {
  return DiskPoint::make(cmat_from_json(require(j, "W")), cmat_from_json(require(j, "eta")));
}

SymplecticMatrix symplectic_from_json(const Json& j) {
  if (j.is_object() && j.contains("M")) return SymplecticMatrix::from_full(rmat_from_json(j.at("M")));
  return SymplecticMatrix::make(rmat_from_json(require(j, "A")), rmat_from_json(require(j, "B")),
                                rmat_from_json(require(j, "C")), rmat_from_json(require(j, "D")));
}

HeisenbergElement heisenberg_from_json(const Json& j) {
  return HeisenbergElement::make(rmat_from_json(require(j, "lambda")), rmat_from_json(require(j, "mu")),
                                 rmat_from_json(require(j, "kappa")));
}

JacobiGroupElement jacobi_element_from_json(const Json& j, std::size_t m_hint) {
  if (!j.is_object()) throw MalformedInput("group element must be an object");
  // Flat form: blocks A, B, C, D and lambda, mu, kappa side by side.
  if (!j.contains("M") && j.contains("A")) {
    const SymplecticMatrix M = symplectic_from_json(j);
    if (j.contains("lambda")) return JacobiGroupElement::make(M, heisenberg_from_json(j));
    return JacobiGroupElement::make(M, HeisenbergElement::zero(M.n(), m_hint));
  }
  const SymplecticMatrix M = symplectic_from_json(require(j, "M"));
  if (j.contains("h")) return JacobiGroupElement::make(M, heisenberg_from_json(j.at("h")));
  return JacobiGroupElement::make(M, HeisenbergElement::zero(M.n(), m_hint));
}

DiskGroupElement disk_element_from_json(const Json& j) {
  DiskHeisenberg h{cmat_from_json(require(j, "lambda")), cmat_from_json(require(j, "mu")), cmat_from_json(require(j, "kappa"))};
  return DiskGroupElement::make(cmat_from_json(require(j, "P")), cmat_from_json(require(j, "Q")), h);
}

Tolerances tolerances_from_json(const Json& j, Tolerances t) {
  if (!j.is_object()) throw MalformedInput("tolerance file must hold an object");
  const std::pair<const char*, double*> fields[] = {
      {"sym_tol", &t.sym_tol},   {"posdef_tol", &t.posdef_tol}, {"symplectic_tol", &t.symplectic_tol},
      {"lin_tol", &t.lin_tol},   {"pivot_tol", &t.pivot_tol},   {"cond_max", &t.cond_max},
      {"memb_tol", &t.memb_tol}, {"unitary_tol", &t.unitary_tol}, {"form_imag_tol", &t.form_imag_tol}};
  for (const auto& [key, dst] : fields) {
    if (!j.contains(key)) continue;
    if (!j.at(key).is_number() || !(j.at(key).get<double>() > 0.0)) throw MalformedInput(std::string(key) + " must be a positive number");
    *dst = j.at(key).get<double>();
  }
  for (const auto& [key, value] : j.items()) {
    bool known = false;
    for (const auto& f : fields) known = known || key == f.first;
    if (!known) throw MalformedInput("unknown tolerance \"" + key + "\"");
  }
  return t;
}

}  // namespace sj
