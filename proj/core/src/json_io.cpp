#include "liegc/json_io.hpp"

namespace liegc {

using nlohmann::json;

json to_json(const CartanType& t) {
  json arr = json::array();
  for (auto& [f, n] : t.factors) arr.push_back(json::array({std::string(1, f), n}));
  return arr;
}

CartanType cartan_type_from_json(const json& j) {
  CartanType t;
  std::string text;
  for (const auto& f : j) {
    text += f.at(0).get<std::string>();
    text += std::to_string(f.at(1).get<int>());
    text += "+";
  }
  if (!text.empty()) text.pop_back();
  return CartanType::parse(text);
}

json to_json(const VoganDiagram& v) {
  return json{{"type", to_json(v.type)}, {"theta", v.theta}, {"painted", v.painted}};
}

VoganDiagram vogan_from_json(const json& j) {
  VoganDiagram v;
  v.type = cartan_type_from_json(j.at("type"));
  if (j.contains("theta")) v.theta = j.at("theta").get<std::vector<int>>();
  else {
    v.theta.resize(v.type.rank());
    for (std::size_t k = 0; k < v.theta.size(); ++k) v.theta[k] = static_cast<int>(k);
  }
  if (j.contains("painted")) v.painted = j.at("painted").get<std::vector<int>>();
  return v;
}

json to_json(const SMatrix& m) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(m.at(i, j).str());
    rows.push_back(row);
  }
  return rows;
}

SMatrix matrix_from_json(const json& j, FieldSpecPtr spec) {
  std::size_t rows = j.size();
  std::size_t cols = rows ? j.at(0).size() : 0;
  SMatrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t c = 0; c < cols; ++c)
      m.at(i, c) = Scalar::parse(j.at(i).at(c).get<std::string>(), spec);
  return m;
}

json to_json(const Certificate& c) {
  json clauses = json::array();
  for (const auto& cl : c.clauses) {
    json e{{"clause", cl.id}};
    switch (cl.status) {
      case ClauseStatus::pass: e["status"] = "pass"; break;
      case ClauseStatus::fail: e["status"] = "fail"; break;
      case ClauseStatus::skipped: e["status"] = "skipped"; break;
    }
    if (cl.witness) {
      if (!cl.witness->indices.empty()) e["witness_indices"] = cl.witness->indices;
      if (cl.witness->value) e["witness_scalar"] = cl.witness->value->str();
      if (!cl.witness->note.empty()) e["note"] = cl.witness->note;
    }
    clauses.push_back(e);
  }
  std::string verdict;
  switch (c.verdict()) {
    case Verdict::pass: verdict = "pass"; break;
    case Verdict::fail: verdict = "fail"; break;
    case Verdict::inconclusive: verdict = "inconclusive"; break;
  }
  return json{{"verdict", verdict}, {"clauses", clauses}};
}

json to_json(const HoloData& h) {
  return json{{"n", h.space.n},
              {"tau_kind", h.kind == Kind::symmetric ? "conjugation" : "identity"},
              {"E", to_json(h.E)},
              {"alpha", to_json(h.alpha)}};
}

HoloData holo_from_json(const json& j, FieldSpecPtr spec) {
  DoubleSpace v(j.at("n").get<std::size_t>());
  std::string tk = j.at("tau_kind").get<std::string>();
  Kind kind;
  if (tk == "conjugation") kind = Kind::symmetric;
  else if (tk == "identity") kind = Kind::skew;
  else throw std::runtime_error("unknown tau_kind: " + tk);
  return HoloData::make(v, kind, matrix_from_json(j.at("E"), spec),
                        matrix_from_json(j.at("alpha"), spec));
}

json root_system_json(const RootSystem& rs) {
  json roots = json::array();
  for (const auto& r : rs.roots()) roots.push_back(r);
  json pairing = json::array();
  for (std::size_t a = 0; a < rs.num_roots(); ++a) {
    json row = json::array();
    for (std::size_t b = 0; b < rs.num_roots(); ++b)
      row.push_back(rs.pair(static_cast<int>(a), static_cast<int>(b)).get_str());
    pairing.push_back(row);
  }
  return json{{"type", to_json(rs.type())},
              {"rank", rs.rank()},
              {"roots", roots},
              {"cartan_matrix", rs.cartan_matrix()},
              {"pairing", pairing}};
}

json algebra_dump(const WeylAlgebra& w) {
  const RootSystem& rs = w.roots();
  json n_table = json::array();
  for (std::size_t a = 0; a < rs.num_roots(); ++a)
    for (std::size_t b = a + 1; b < rs.num_roots(); ++b) {
      const Scalar& n = w.N(static_cast<int>(a), static_cast<int>(b));
      if (n.is_zero()) continue;
      n_table.push_back(json{{"a", a}, {"b", b}, {"value", n.str()}});
    }
  json hduals = json::array();
  for (std::size_t a = 0; a < rs.num_roots(); ++a) hduals.push_back(to_json(w.H_dual(static_cast<int>(a))));
  json radicands = json::array();
  if (w.field())
    for (auto r : w.field()->radicands()) radicands.push_back(r);
  return json{{"root_system", root_system_json(rs)},
              {"radicands", radicands},
              {"N", n_table},
              {"killing_h", to_json(w.killing_h())},
              {"killing", to_json(w.killing_full())},
              {"H_duals", hduals}};
}

TripleSpec triple_from_json(const json& j) {
  TripleSpec t;
  t.vogan = vogan_from_json(j.at("vogan"));
  t.h_k = j.contains("h_k") ? j.at("h_k") : json("full");
  t.R0 = j.at("R0").get<std::vector<int>>();
  t.connection = j.value("connection", "D0");
  std::string kind = j.value("kind", "symmetric");
  if (kind == "skew") t.kind = Kind::skew;
  else if (kind == "symmetric") t.kind = Kind::symmetric;
  else throw std::runtime_error("unknown kind: " + kind);
  t.params = j.value("params", json::object());
  return t;
}

json to_json(const TripleSpec& t) {
  json j{{"vogan", to_json(t.vogan)},
         {"h_k", t.h_k},
         {"R0", t.R0},
         {"connection", t.connection},
         {"kind", t.kind == Kind::symmetric ? "symmetric" : "skew"},
         {"params", t.params}};
  return j;
}

}  // namespace liegc
