#pragma once

#include <json.hpp>

#include "liegc/admissible.hpp"
#include "liegc/certificate.hpp"
#include "liegc/real_form.hpp"

namespace liegc {

nlohmann::json to_json(const CartanType& t);
CartanType cartan_type_from_json(const nlohmann::json& j);

nlohmann::json to_json(const VoganDiagram& v);
VoganDiagram vogan_from_json(const nlohmann::json& j);

nlohmann::json to_json(const SMatrix& m);  // rows of scalar strings
SMatrix matrix_from_json(const nlohmann::json& j, FieldSpecPtr spec = nullptr);

nlohmann::json to_json(const Certificate& c);

nlohmann::json to_json(const HoloData& h);
HoloData holo_from_json(const nlohmann::json& j, FieldSpecPtr spec = nullptr);

nlohmann::json root_system_json(const RootSystem& rs);
nlohmann::json algebra_dump(const WeylAlgebra& w);

/// Triple description: vogan diagram, Cartan part, root part, connection
/// choice, parameters.
struct TripleSpec {
  VoganDiagram vogan;
  nlohmann::json h_k;             // "full" or matrix
  std::vector<int> R0;
  std::string connection;        // "D0" | "Dc"
  Kind kind = Kind::symmetric;
  nlohmann::json params;         // {"epsilon0": ..., "mu": {...}, "nu": {...}}
};

TripleSpec triple_from_json(const nlohmann::json& j);
nlohmann::json to_json(const TripleSpec& t);

}  // namespace liegc
