#pragma once

// JSON emitters/readers for results and the profile CSV format. Floats are
// rounded to 15 significant digits before emission; non-finite values are
// written as null.

#include <iosfwd>
#include <string>

#include "json.hpp"
#include "wavefront/classify.hpp"
#include "wavefront/cycles.hpp"
#include "wavefront/shoot.hpp"

namespace wavefront {

using Json = nlohmann::ordered_json;

/// Rounds to 15 significant digits.
double round15(double v);

Json to_json(const WaveParams& params);
WaveParams params_from_json(const Json& j);

Json to_json(const CStarResult& r);
/// Reads back the scalar fields (the homoclinic orbit is not part of the
/// JSON form).
CStarResult cstar_from_json(const Json& j);

Json to_json(const CycleResult& r);
CycleResult cycle_from_json(const Json& j);

Json to_json(const TailLaw& law);
TailLaw tail_law_from_json(const Json& j);

Json to_json(const WaveClass& wc);
WaveClass wave_class_from_json(const Json& j);

Json to_json(const VerifyReport& r);
Json to_json(const CalculusReport& r);
Json to_json(const LienardCurves& l);
Json to_json(const TailFit& fit, const TailLaw& law);

/// Profile as {"class", "c", "anchor", "samples": [[xi, f, fprime], ...]}.
Json to_json(const Profile& profile);
Profile profile_from_json(const Json& j);

/// CSV with header `xi,f,fprime`, 15 significant digits.
void write_profile_csv(std::ostream& os, const Profile& profile);
/// Throws std::runtime_error on malformed input.
Profile read_profile_csv(std::istream& is);

}  // namespace wavefront
