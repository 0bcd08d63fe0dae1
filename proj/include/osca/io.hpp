#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "osca/linalg.hpp"
#include "osca/model.hpp"

namespace osca {

enum class LoadMode { Data, Matrix, Eigen };
enum class Standardize { Cov, Corr };

/// Loads a problem instance.
///  - data:   CSV of observations (optional header row); covariance or
///            correlation of the columns is eigendecomposed.
///  - matrix: CSV of a symmetric p x p matrix.
///  - eigen:  first line holds k eigenvalues (or variance percentages marked
///            with %), then p rows of k loadings; published tables are
///            accepted under relaxed tolerances.
/// k = 0 keeps every available component.
EigenInput load_input(const std::string& path, LoadMode mode, Standardize standardize, int k);

/// Everything needed to render output for one analysis.
struct Report {
    EigenInput input;
    Tuning tuning;
    std::vector<SolutionCandidate> ranked;
    std::vector<std::optional<Vec>> variance_pct;   // per solution
    std::vector<std::optional<Mat>> correlations;   // per solution
};

/// Ranks the harvested solutions and attaches diagnostics.
Report build_report(EigenInput input, Tuning tuning, std::vector<SolutionCandidate> harvested);

/// Per-solution text tables in rank order: loadings by variable, accuracy and
/// variance rows, star annotation.
std::string render_text(const Report& report);

/// Machine-readable document with every solution, scores, provenance, star
/// data and correlations. Deterministic field and element order.
std::string render_json(const Report& report);

/// Accuracy-simplicity scatterplot as standalone SVG 1.1: x = discr,
/// y = compl, the minimal set joined by line segments, star classes
/// distinguished by marker, lowest-class points unnumbered.
std::string render_svg(const Report& report);

/// Writes the JSON and/or SVG renderings; empty paths are skipped.
void emit_report(const Report& report, const std::string& json_path, const std::string& svg_path);

/// Reads solutions back from a render_json document.
std::vector<SolutionCandidate> load_solutions_json(const std::string& text);

}  // namespace osca
