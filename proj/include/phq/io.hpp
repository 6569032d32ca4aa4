#pragma once

#include "phq/density.hpp"
#include "phq/fock.hpp"
#include "phq/grid.hpp"
#include "phq/json_writer.hpp"

#include <iosfwd>
#include <span>

namespace phq {

// CSV columns: point, value.
void write_margin_csv(std::ostream& os, const MarginalDensity& margin);

// CSV columns: q, p, value (row-major over the q grid).
void write_density_csv(std::ostream& os, const GriddedDensity& den);

// Raw row-major float64 values, q rows of p columns, no header.
void write_density_binary(std::ostream& os, const GriddedDensity& den);

// CSV columns: point, re, im.
void write_samples_csv(std::ostream& os, const Grid1D& grid, std::span<const Complex> values);

// {"dim": d, "exact_rows": r, "entries": [[re, im], ...]} row-major.
void write_operator_json(JsonWriter& w, const FockOperator& op);

} // namespace phq
