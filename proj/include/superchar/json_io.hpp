#pragma once

#include <json.hpp>

#include "superchar/characters.hpp"
#include "superchar/grassmann.hpp"
#include "superchar/tensor.hpp"
#include "superchar/verify.hpp"

namespace superchar {

using json = nlohmann::json;

json to_json(const Partition& p);
json to_json(const HookTableau& t);
json to_json(const PowerSeries& s);
json to_json(const CharacterResult& r);
json to_json(const SignGroupSpec& spec);
json to_json(const CosetElement& w);
json to_json(const VerificationReport& r);
json to_json(const TensorTable& t);
json to_json(const SuperPoly& p);
json to_json(const HarmonicReport& r);

/// Wrap a payload in the versioned envelope {"schema":"superchar/1", ...}.
json envelope(const std::string& command, json payload);

} // namespace superchar
