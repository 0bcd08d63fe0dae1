#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "osca/core.hpp"
#include "osca/linalg.hpp"

namespace osca {

enum class SourceKind { Covariance, Correlation, EigenOnly };

enum class Order { F, B, NF, NB };

std::string order_name(Order o);
std::optional<Order> order_from_name(const std::string& s);

/// The problem instance: the k unit eigenvectors of interest, their
/// eigenvalues (or published variance percentages), and the source matrix
/// when available.
struct EigenInput {
    int p = 0;
    int k = 0;
    Mat vectors;      // p x k, unit columns
    Vec eigenvalues;  // strictly decreasing, k entries
    std::optional<Mat> source;  // p x p when known
    SourceKind source_kind = SourceKind::EigenOnly;
    std::vector<std::string> variable_names;

    /// Validates unit length of the columns within `tol_unit` and pairwise
    /// orthogonality within `tol_orth` (default 2 * tol_unit: rounding errors
    /// compound across a dot product of two published 2-dp columns), requires
    /// strictly decreasing eigenvalues, then normalizes each column and
    /// orients it so its largest-magnitude element is positive.
    static EigenInput make(Mat vectors, Vec eigenvalues, std::optional<Mat> source,
                           SourceKind kind, double tol_unit = 2.5e-2,
                           std::vector<std::string> names = {}, double tol_orth = -1.0);
};

/// Tuning parameters of the sweep.
struct Tuning {
    std::int64_t n_star = 9;          // max complexity N*
    double theta_star = 0.78539816339744830961;  // pi/4
    double epsilon = 0.01;
    std::vector<Order> orders = {Order::F, Order::B, Order::NF, Order::NB};

    void validate() const;
};

/// A coprime integer loading vector in canonical form: hcf of the absolute
/// values of the nonzero elements is 1 and the first nonzero element is
/// positive.
struct IntegerAxis {
    IntVec z;
    std::int64_t complexity = 0;  // max |z_h|
    std::int64_t sq_norm = 0;
    int target_index = 0;   // 1-based eigenaxis it approximates, 0 if unset
    double accuracy = 0.0;  // accu against its target eigenaxis

    bool operator==(const IntegerAxis& o) const { return z == o.z; }
};

/// Divides out the hcf and fixes the sign so the first nonzero element is
/// positive. Throws on the zero vector.
IntegerAxis canonicalize_axis(const IntVec& z);

/// Lexicographic order on canonical vectors, used for deterministic
/// tie-breaking throughout.
bool lex_less(const IntVec& a, const IntVec& b);

enum class StructureType { A, B, C, None };

struct StarRating {
    int stars = 0;  // 0, 1 or 2
    StructureType structure_type = StructureType::None;
    std::vector<std::vector<int>> blocks;  // variable index sets (0-based)
    bool wb_holds = false;
    std::vector<int> n_sharp;  // distinct nonzero values per column
};

/// A complete ordered set of k mutually orthogonal integer axes, reported in
/// eigenvalue order 1..k, with its summary scores.
struct SolutionCandidate {
    std::vector<IntegerAxis> axes;  // index r-1 approximates eigenaxis r
    double ma = 0.0;
    double discr = 0.0;
    std::int64_t n_max = 0;
    double lambda_term = 0.0;
    double compl_score = 0.0;  // n_max + lambda_term
    StarRating star;
    std::vector<std::pair<Order, double>> provenance;  // (order, theta) pairs
    int rank = 0;

    int p() const { return axes.empty() ? 0 : static_cast<int>(axes.front().z.size()); }
    int k() const { return static_cast<int>(axes.size()); }

    /// Recomputes ma, discr, n_max, lambda and compl from the axes.
    void refresh_scores();

    /// Canonical key: the concatenated canonical columns. Equal keys mean
    /// axis-equivalent solutions.
    IntVec canonical_key() const;
};

/// True iff the two solutions agree column-by-column up to overall column
/// signs and scaling. Throws on dimension mismatch.
bool solutions_equivalent(const SolutionCandidate& a, const SolutionCandidate& b);

/// The trace of one (order, theta-schedule) run.
struct SweepRecord {
    Order order = Order::F;
    std::vector<int> approximation_order;  // 1-based eigenaxis indices, k entries
    Vec thetas;                            // strictly decreasing
    std::vector<int> change_indices;       // r_n, 1-based position in the order
    std::vector<bool> complete;            // per step
    std::vector<int> k_tilde;              // axes found per step
    std::vector<int> solution_steps;       // indices into `solutions` per complete step
    std::vector<SolutionCandidate> solutions;
};

}  // namespace osca
