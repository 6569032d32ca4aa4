#include "phq/io.hpp"

#include <cstdio>
#include <ostream>

namespace phq {

namespace {
void put(std::ostream& os, double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    os << buf;
}
} // namespace

void write_margin_csv(std::ostream& os, const MarginalDensity& margin) {
    os << "point,value\n";
    for (int j = 0; j < margin.grid.count; ++j) {
        put(os, margin.grid.point(j));
        os << ',';
        put(os, margin.values[static_cast<std::size_t>(j)]);
        os << '\n';
    }
}

void write_density_csv(std::ostream& os, const GriddedDensity& den) {
    os << "q,p,value\n";
    for (int i = 0; i < den.q_grid.count; ++i) {
        for (int j = 0; j < den.p_grid.count; ++j) {
            put(os, den.q_grid.point(i));
            os << ',';
            put(os, den.p_grid.point(j));
            os << ',';
            put(os, den.value(i, j));
            os << '\n';
        }
    }
}

void write_density_binary(std::ostream& os, const GriddedDensity& den) {
    os.write(reinterpret_cast<const char*>(den.values.data()),
             static_cast<std::streamsize>(den.values.size() * sizeof(double)));
}

void write_samples_csv(std::ostream& os, const Grid1D& grid, std::span<const Complex> values) {
    os << "point,re,im\n";
    for (int j = 0; j < grid.count; ++j) {
        put(os, grid.point(j));
        os << ',';
        put(os, values[static_cast<std::size_t>(j)].real());
        os << ',';
        put(os, values[static_cast<std::size_t>(j)].imag());
        os << '\n';
    }
}

void write_operator_json(JsonWriter& w, const FockOperator& op) {
    w.begin_object();
    w.key("dim").value(op.dim());
    w.key("exact_rows").value(op.exact_rows);
    w.key("entries").begin_array();
    for (int r = 0; r < op.dim(); ++r)
        for (int c = 0; c < op.dim(); ++c) {
            w.begin_array();
            w.value(op.mat(r, c).real());
            w.value(op.mat(r, c).imag());
            w.end_array();
        }
    w.end_array();
    w.end_object();
}

} // namespace phq
