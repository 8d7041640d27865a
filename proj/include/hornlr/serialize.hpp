#pragma once

// JSON wire formats for the CLI. Matrices are nested arrays of [re, im]
// pairs; weights are integer arrays.

#include <json.hpp>

#include <string>

#include "hornlr/converse_scan.hpp"
#include "hornlr/horn_realize.hpp"
#include "hornlr/lr.hpp"
#include "hornlr/schur_weyl.hpp"

namespace hornlr {

using Json = nlohmann::ordered_json;

Json to_json(const Matrix& m);
/// Accepts nested arrays whose entries are real numbers or [re, im] pairs.
/// Throws std::invalid_argument on malformed input.
Matrix matrix_from_json(const Json& j);

Json to_json(const DominantWeight& w);
Json to_json(const SpectralTriple& t);
Json to_json(const LRResult& r);
Json to_json(const RealizationResult& r);
/// Outcomes with their probability and the exponential bound for the
/// spectrum of rho.
Json to_json(const MeasurementDistribution& dist, const NormalizedSpectrum& spectrum);
Json to_json(const ScanWitness& w);
Json to_json(const Theorem1Sweep& s);

/// Summary record with the distance-vs-n series of a scan.
Json scan_summary(const std::vector<ScanStep>& steps);

/// CSV rows "n,k,eps,d_mu,d_nu,d_lambda,median,coefficient" for plotting.
std::string scan_csv(const std::vector<ScanStep>& steps);

}  // namespace hornlr
