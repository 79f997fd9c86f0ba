#pragma once

#include <string>
#include <vector>

#include "teichlab/extremal.hpp"
#include "teichlab/grunsky.hpp"
#include "teichlab/metrics.hpp"

namespace teichlab {

// Series files: {"domain": "interior"|"exterior", "lo": int, "hi": int,
// "coeffs": [[re, im], ...]} listed from lo to hi; the optional "exact"
// flag marks a series with no discarded tail.
LaurentSeries read_series(const std::string& path);
void write_series(const std::string& path, const LaurentSeries& s);
std::string series_to_json(const LaurentSeries& s);
LaurentSeries series_from_json(const std::string& text);

// Matrix dump: {"N": int, "entries": [[re, im], ...]} row-major.
std::string grunsky_to_json(const GrunskyMatrix& B);

// Quadratic differentials: {"domain": "disk"|"exterior", "terms": [...]}
// with term kinds "monomial" {c, p}, "rho" {c, e | "inf"}, "pole" {c, e},
// "higher_pole" {c, e, order}.
QuadDiff read_quad_diff(const std::string& path);
void write_quad_diff(const std::string& path, const QuadDiff& q);
std::string quad_diff_to_json(const QuadDiff& q);
QuadDiff quad_diff_from_json(const std::string& text);

// Grid fields: {"grid_size": n, "spacing": h, "origin": [x, y],
// "samples": [[re, im], ...]} row-major over a centered square lattice.
BeltramiField read_grid_field(const std::string& path);
void write_grid_field(const std::string& path, const BeltramiField& mu);

// Point lists for the span basis: {"points": [[re, im] | "inf", ...]}.
std::vector<cxd> read_points(const std::string& path);

std::string extremal_solution_to_json(const ExtremalSolution& sol);

std::string metric_samples_to_csv(const std::vector<MetricSample>& rows);
std::string metric_samples_summary_json(const std::vector<MetricSample>& rows);

std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& text);

}  // namespace teichlab
