#pragma once

#include <json.hpp>

#include "cycubic/jacobian_ring.hpp"
#include "cycubic/lagrangian.hpp"
#include "cycubic/log_series.hpp"
#include "cycubic/mirror.hpp"
#include "cycubic/period.hpp"

namespace cycubic {

using Json = nlohmann::ordered_json;

/// Series wire format:
///   {"vars": n, "order": d, "terms": [{"exp": [e1..en], "num": "...", "den": "..."}]}
/// Rationals as decimal strings, denominators positive, fractions reduced,
/// terms ordered by exponent.
Json series_to_json(const FormalSeries& s);
FormalSeries series_from_json(const Json& j);

Json log_series_to_json(const LogSeries& s);

/// Standalone rationals travel as strings "n" or "n/d".
Json rat_to_json(const Rational& r);
Rational rat_from_json(const Json& j);

Json rat_matrix_to_json(const RatMatrix& m);
RatMatrix rat_matrix_from_json(const Json& j);

/// Period map file: {"g", "n", "divisors", "entries" (row-major),
/// optional "base_point_imag", optional "frame"}.
Json period_map_to_json(const PeriodMap& p);
PeriodMap period_map_from_json(const Json& j);
AffineFrame frame_from_json(const Json& period_file, const PeriodMap& p);

/// Section file: {"kind": "translation"|"general", "m", "n" | "lift",
/// optional "discrete_class"}.
Json section_to_json(const SectionCandidate& s);
SectionCandidate section_from_json(const Json& j);

/// Mirror fixture file: {"operator": {"order", "coefficients"},
/// "yukawa": {"num", "den"}, "classical_triple", "truncation_order",
/// optional "provenance"}.
MirrorPipelineConfig mirror_config_from_json(const Json& j);

/// Jacobian-ring input file: {"g", "cubic_polynomial" | "fermat": true,
/// optional "degrees", optional "quadrics" (list of g x g matrices)}.
struct JacobianRingInput {
    CubicTensor cubic;
    std::vector<int> degrees;
    std::vector<RatMatrix> quadrics;
};
JacobianRingInput jacobian_ring_input_from_json(const Json& j);

Json load_json_file(const std::string& path);

} // namespace cycubic
