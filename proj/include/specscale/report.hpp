#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "specscale/geometry.hpp"
#include "specscale/io.hpp"
#include "specscale/verify.hpp"

namespace specscale {

Json to_json(const PencilSpectrum& spec);
Json to_json(const FaceDescriptor& face);
Json to_json(const HorizontalFaceReport& rep);
Json to_json(const ScalePolygon2D& poly);
Json to_json(const std::vector<Segment2D>& segments);
Json to_json(const ScaleBody3D& body);
Json to_json(const VerificationReport& rep);

/// Report envelope: tool version, input digest, command, tolerances, payload.
Json make_report(std::string_view command, std::string_view input_digest, Json tolerances,
                 Json payload);

}  // namespace specscale
