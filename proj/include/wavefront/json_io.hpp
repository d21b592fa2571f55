#pragma once

#include <json.hpp>

#include "wavefront/gl_matrix.hpp"
#include "wavefront/partition.hpp"
#include "wavefront/spectrum.hpp"
#include "wavefront/vanishing.hpp"
#include "wavefront/whittaker.hpp"

namespace wavefront::json {

using nlohmann::json;

/// Partitions render as integer arrays.
json render(const Partition& p);
/// Rational matrices render as nested arrays of "p/q" strings.
json render(const GlMatrix& m);
json render(const DiagonalSemisimple& s);
/// Positions render 1-based as [row, col].
json render(Position p);
json render(const GradedDecomposition& g);
json render(const Sl2Triple& t);
json render(const CharacterSupport& c);
json render_whittaker(const WhittakerPair& pair);
json render(const AssumptionReport& r);
json render(const ColumnArrangement& a);
json render(const GenericityReport& r);
json render(const PipelineOutcome& o);
json render(const LeviInductionDescription& d);
json render(const WeylReport& r);
json render(const CaiPair& p);
json render(const FiniteOracleReport& r);

}  // namespace wavefront::json
