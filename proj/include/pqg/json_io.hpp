#pragma once

// JSON schemas for the value types, plus a serializer that prints floats
// with 17 significant digits so files round-trip exactly.

#include <string>
#include <utility>

#include "json.hpp"

#include "pqg/character.hpp"
#include "pqg/groupoid.hpp"
#include "pqg/intrinsic_algebra.hpp"
#include "pqg/phase_space.hpp"
#include "pqg/polarization.hpp"

namespace pqg {

using Json = nlohmann::json;

// {source: [[re,im],...], action: t, target: [[re,im],...]}
Json arrow_to_json(const Arrow& a);
Arrow arrow_from_json(const Json& j, const PhaseSpaceConfig& cfg);

// {n, hbar, order, nodes: [[[re,im],...],...], weights: [...]}
Json grid_to_json(const QuadratureGrid& g);
QuadratureGrid grid_from_json(const Json& j);

// {n, hbar, cutoff, mode, entries: [{a, b, re, im},...]}
Json element_to_json(const AlgebraElement& e);
AlgebraElement element_from_json(const Json& j);

// {n, hbar, cutoff, entries: [{a, re, im},...]}
Json state_to_json(const PolarizedState& s, const PhaseSpaceConfig& cfg);
std::pair<PolarizedState, PhaseSpaceConfig> state_from_json(const Json& j);

// {n, cutoff, offset_num, offset_den, coeffs: [g_0,...]}
Json series_to_json(const CharacterSeries& s);
CharacterSeries series_from_json(const Json& j);

// Serialize with "%.17g" floats (or another digit count); indent < 0 means
// a single line.
std::string dump_json(const Json& j, int float_digits = 17, int indent = 2);

}  // namespace pqg
