#include "osca/sweep.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <future>
#include <thread>

#include "osca/geometry.hpp"
#include "osca/linalg.hpp"

namespace osca {

int approximation_order_next(const EigenInput& input, Order order,
                             const std::vector<int>& chosen_targets,
                             const std::vector<IntVec>& chosen_axes) {
    const int k = input.k;
    const int done = static_cast<int>(chosen_targets.size());
    if (done >= k) throw ValidationError("approximation_order_next: no axis remaining");
    switch (order) {
        case Order::F: return done + 1;
        case Order::B: return k - done;
        case Order::NF:
            if (done == 0) return 1;
            break;
        case Order::NB:
            if (done == 0) return k;
            break;
    }
    int best = -1;
    double best_acc = -1.0;
    for (int r = 1; r <= k; ++r) {
        if (std::find(chosen_targets.begin(), chosen_targets.end(), r) != chosen_targets.end())
            continue;
        double acc = project_residual(input.vectors.col(r - 1), chosen_axes).max_accuracy;
        if (acc > best_acc + 1e-15) {
            best_acc = acc;
            best = r;
        }
    }
    return best;
}

SweepRecord run_order(const EigenInput& input, const Tuning& tuning, Order order) {
    tuning.validate();
    const int p = input.p;
    const int k = input.k;
    const int k_tilde = std::min(k, p - 1);

    SweepRecord rec;
    rec.order = order;

    std::vector<int> perm;  // targets per position, frozen once chosen (per run)
    std::vector<IntegerAxis> prev_axes;
    int prev_change = 1;

    double cos_req = std::cos(tuning.theta_star);
    const int max_steps = 10000;
    for (int step = 0; step < max_steps; ++step) {
        std::vector<IntegerAxis> axes;
        std::vector<IntVec> basis;
        IntegerProjector proj = projector_init(p);

        const int carry = (step == 0) ? 0 : prev_change - 1;
        bool aborted = false;
        for (int pos = 0; pos < k_tilde; ++pos) {
            if (pos == static_cast<int>(perm.size())) {
                std::vector<int> targets;
                for (const auto& ax : axes) targets.push_back(ax.target_index);
                perm.push_back(approximation_order_next(input, order, targets, basis));
            }
            const int target = perm[static_cast<std::size_t>(pos)];
            IntegerAxis ax;
            if (pos < carry) {
                ax = prev_axes[static_cast<std::size_t>(pos)];
            } else {
                Vec q = input.vectors.col(target - 1);
                auto found = best_simple_axis(q, basis, proj, cos_req, tuning.n_star);
                if (!found) break;
                ax = *found;
                ax.target_index = target;
            }
            try {
                proj = projector_absorb(proj, ax.z);
            } catch (const OverflowError&) {
                aborted = true;
                break;
            }
            basis.push_back(ax.z);
            axes.push_back(std::move(ax));
        }
        if (aborted || axes.empty()) break;

        const int found_count = static_cast<int>(axes.size());
        const bool complete = found_count == k_tilde;
        double ma_tilde = 1.0;
        int change_pos = 1;
        for (int pos = 0; pos < found_count; ++pos) {
            double a = axes[static_cast<std::size_t>(pos)].accuracy;
            if (a < ma_tilde) {
                ma_tilde = a;
                change_pos = pos + 1;
            }
        }

        const double theta_n = std::acos(std::min(1.0, cos_req));
        rec.thetas.push_back(theta_n);
        rec.change_indices.push_back(change_pos);
        rec.complete.push_back(complete);
        rec.k_tilde.push_back(found_count);
        rec.solution_steps.push_back(-1);

        if (complete) {
            std::vector<IntegerAxis> full = axes;
            bool discard = false;
            if (k == p) {
                int forced_target = 0;
                for (int r = 1; r <= k; ++r)
                    if (std::find(perm.begin(), perm.end(), r) == perm.end()) forced_target = r;
                try {
                    IntegerAxis forced = forced_last_axis(basis);
                    forced.target_index = forced_target;
                    forced.accuracy = accuracy(input.vectors.col(forced_target - 1), forced.z);
                    if (forced.complexity > tuning.n_star)
                        discard = true;  // simplicity of the forced axis cannot be controlled
                    else
                        full.push_back(std::move(forced));
                } catch (const OverflowError&) {
                    discard = true;
                }
            }
            if (!discard) {
                SolutionCandidate sol;
                sol.axes.resize(static_cast<std::size_t>(k));
                for (auto& ax : full)
                    sol.axes[static_cast<std::size_t>(ax.target_index - 1)] = std::move(ax);
                sol.refresh_scores();
                sol.provenance.emplace_back(order, theta_n);
                rec.solution_steps.back() = static_cast<int>(rec.solutions.size());
                rec.solutions.push_back(std::move(sol));
            }
        }

        prev_axes = std::move(axes);
        prev_change = change_pos;
        if (ma_tilde >= 1.0 - tuning.epsilon) break;
        if (!(ma_tilde > cos_req)) break;  // theta must strictly decrease
        cos_req = ma_tilde;
    }

    rec.approximation_order = perm;
    if (k == p && static_cast<int>(perm.size()) == k - 1) {
        for (int r = 1; r <= k; ++r)
            if (std::find(perm.begin(), perm.end(), r) == perm.end())
                rec.approximation_order.push_back(r);
    }
    return rec;
}

int worker_count() {
    const char* env = std::getenv("OSCA_THREADS");
    if (env != nullptr) {
        int v = std::atoi(env);
        if (v > 0) return v;
    }
    unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : static_cast<int>(hw);
}

std::vector<SolutionCandidate> harvest(const EigenInput& input, const Tuning& tuning) {
    tuning.validate();
    std::vector<Order> orders;
    for (Order o : {Order::F, Order::B, Order::NF, Order::NB})
        if (std::find(tuning.orders.begin(), tuning.orders.end(), o) != tuning.orders.end())
            orders.push_back(o);

    std::vector<SweepRecord> records(orders.size());
    if (worker_count() > 1 && orders.size() > 1) {
        std::vector<std::future<SweepRecord>> futs;
        futs.reserve(orders.size());
        for (Order o : orders)
            futs.push_back(std::async(std::launch::async,
                                      [&input, &tuning, o] { return run_order(input, tuning, o); }));
        for (std::size_t i = 0; i < futs.size(); ++i) records[i] = futs[i].get();
    } else {
        for (std::size_t i = 0; i < orders.size(); ++i)
            records[i] = run_order(input, tuning, orders[i]);
    }

    std::vector<SolutionCandidate> out;
    for (const auto& rec : records)
        for (const auto& sol : rec.solutions) {
            bool merged = false;
            for (auto& existing : out)
                if (solutions_equivalent(existing, sol)) {
                    existing.provenance.insert(existing.provenance.end(), sol.provenance.begin(),
                                               sol.provenance.end());
                    merged = true;
                    break;
                }
            if (!merged) out.push_back(sol);
        }
    return out;
}

}  // namespace osca
