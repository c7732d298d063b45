// JSON documents for curves and equioptic results, and scene ingestion for
// rendering them back.

#pragma once

#include <json.hpp>

#include "apollonius/apollonius.hpp"
#include "apollonius/equioptic.hpp"
#include "apollonius/render.hpp"

namespace apo {

/// {epsilon, d, k, a, b, c, kind, class, matrix, samples}; the line case
/// carries kind "line" and no c.
nlohmann::json curve_document(const ApolloniusSpec& spec, int n_samples);

/// The curve document of the induced (d, k) spec extended with {circles,
/// frame, valid_samples, max_angle_residual}; matrix and samples are in the
/// original coordinates.
nlohmann::json equioptic_document(const Circle& c1, const Circle& c2,
                                  CurvatureSign sign, int n_samples);

/// Scene for a document produced by either generator.
Scene scene_from_document(const nlohmann::json& doc);

}  // namespace apo
