#pragma once

#include <string>

#include "json.hpp"

#include "eqk/fan.hpp"
#include "eqk/gkm.hpp"
#include "eqk/laurent.hpp"
#include "eqk/lattice_weyl.hpp"
#include "eqk/presentations.hpp"
#include "eqk/regcomp.hpp"
#include "eqk/steinberg.hpp"

namespace eqk {

using Json = nlohmann::ordered_json;

/// Reads a JSON document from a file; InputError on I/O or syntax errors.
Json read_json_file(const std::string& path);

Json to_json(const LatticeVector& v);
LatticeVector lattice_vector_from_json(const Json& j, std::size_t rank);

/// [{"exponent": [..], "coeff": "n"}, ..] in exponent order.
Json to_json(const LaurentPoly& p);
LaurentPoly laurent_from_json(const Json& j, std::size_t rank);

Json to_json(const IntMatrix& m);

Json to_json(const Fan& fan);
Fan fan_from_json(const Json& j);

Json weyl_element_json(const WeylGroup& group, std::size_t w);
std::size_t weyl_element_from_json(const WeylGroup& group, const Json& j);

Json to_json(const CurveModel& m);
CurveModel curve_model_from_json(const Json& j);

/// {"model": "curves"|"wonderful"|"Z", "values": [{"label": .., "poly": ..}]}.
/// Wonderful labels name u, v by reduced words and need the group.
Json to_json(const PiecewiseElement& e, const WeylGroup* group = nullptr);
PiecewiseElement piecewise_from_json(const Json& j, std::size_t rank, const WeylGroup* group = nullptr);

Json to_json(const SteinbergBasis& b, const WeylGroup& group);
Json expansion_json(const Expansion& e, const WeylGroup& group);
/// {"v": {"v'": {"w": poly}}} keyed by reduced words.
Json to_json(const StructureTable& t, const WeylGroup& group);

BaseRingSpec base_from_json(const Json& j);
Json to_json(const BaseRingSpec& b);

Json to_json(const Presentation& p, const WeylGroup* group = nullptr);

Json to_json(const KModuleElement& x, const RegCompModel& model);
KModuleElement kelement_from_json(const Json& j, const RegCompModel& model);
Json to_json(const RegCompModel& model);

Json to_json(const VerifyReport& r);

}  // namespace eqk
