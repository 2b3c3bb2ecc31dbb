// Copyright (c) 2026 biloewner contributors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <json.hpp>
#include <string>

#include "biloewner/pencil.hpp"
#include "biloewner/rom.hpp"
#include "biloewner/sim.hpp"

namespace biloewner {

using Json = nlohmann::ordered_json;

// Complex numbers are [re, im] arrays; matrices are nested row-major arrays
// of such pairs. B is a column (n x 1), C a row (1 x n). Finite values
// round-trip bit-exactly.

Json complex_to_json(Complex z);
Complex complex_from_json(const Json& j, const std::string& where);

Json matrix_to_json(const Matrix& m);
Matrix matrix_from_json(const Json& j, const std::string& where);

/// Flat list of [re, im] pairs.
Json complex_vector_to_json(const Vector& v);
Vector complex_vector_from_json(const Json& j, const std::string& where);

/// System file: keys "E", "A", "N", "B", "C". Extra keys (e.g. "meta" on ROM
/// files) are preserved on read-ignore.
Json system_to_json(const BilinearSystem& sys);
BilinearSystem system_from_json(const Json& j);

/// Generator file: keys "lambda", "R", "mu", "L" as lists of [re, im].
Json generator_to_json(const GeneratorPair& gen);
GeneratorPair generator_from_json(const Json& j);

/// Tuple file: {"left": [[...pairs]], "right": [[...pairs]]}, each tuple in
/// the written (outermost-first) order.
Json tuples_to_json(const MultiTupleSet& tuples);
MultiTupleSet tuples_from_json(const Json& j);

/// Moment-matching ROM file: keys "Lw", "Lws", "T", "V", "W", "kappa",
/// "rho", "generator".
Json mm_rom_to_json(const MomentMatchingROM& rom);
MomentMatchingROM mm_rom_from_json(const Json& j);

Json validation_report_to_json(const ValidationReport& report);
Json equivalence_report_to_json(const EquivalenceReport& report);
Json interpolation_report_to_json(const InterpolationReport& report);
Json bridge_report_to_json(const BridgeReport& report);
Json metrics_to_json(const SteadyStateMetrics& metrics);

Json load_json(const std::string& path);
void save_json(const Json& j, const std::string& path);

/// CSV trace: header "t,u_re,u_im,y_re,y_im", one row per sample, dot decimal
/// separator, LF line endings, round-trip precision.
void write_trace_csv(const SimulationTrace& trace, std::ostream& os);
void save_trace_csv(const SimulationTrace& trace, const std::string& path);
SimulationTrace load_trace_csv(const std::string& path);

}  // namespace biloewner
