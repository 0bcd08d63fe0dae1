#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <future>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "osca/evaluate.hpp"
#include "osca/geometry.hpp"
#include "osca/io.hpp"
#include "osca/ranking.hpp"
#include "osca/search.hpp"
#include "osca/sim.hpp"
#include "osca/sweep.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitEmpty = 2;
constexpr int kExitNumeric = 3;

constexpr double kPi = 3.14159265358979323846;

osca::Tuning make_tuning(std::int64_t n_star, double theta_deg, double epsilon,
                         const std::string& orders_csv) {
    osca::Tuning t;
    t.n_star = n_star;
    t.theta_star = theta_deg * kPi / 180.0;
    t.epsilon = epsilon;
    t.orders.clear();
    std::stringstream ss(orders_csv);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        auto o = osca::order_from_name(tok);
        if (!o) throw osca::ValidationError("unknown order '" + tok + "'");
        t.orders.push_back(*o);
    }
    t.validate();
    return t;
}

osca::EigenInput input_from_data_matrix(const osca::Mat& x, int k) {
    const int n = x.rows, p = x.cols;
    osca::Mat c = x;
    for (int j = 0; j < p; ++j) {
        double mean = 0.0;
        for (int i = 0; i < n; ++i) mean += c.at(i, j);
        mean /= n;
        for (int i = 0; i < n; ++i) c.at(i, j) -= mean;
    }
    osca::Mat s(p, p);
    for (int a = 0; a < p; ++a)
        for (int b = a; b < p; ++b) {
            double v = 0.0;
            for (int i = 0; i < n; ++i) v += c.at(i, a) * c.at(i, b);
            v /= (n - 1);
            s.at(a, b) = v;
            s.at(b, a) = v;
        }
    osca::SymMatrix sym(std::move(s));
    auto eig = osca::eigendecompose(sym);
    osca::Mat vectors(p, k);
    osca::Vec values(static_cast<std::size_t>(k));
    for (int j = 0; j < k; ++j) {
        values[static_cast<std::size_t>(j)] = eig.values[static_cast<std::size_t>(j)];
        for (int i = 0; i < p; ++i) vectors.at(i, j) = eig.vectors.at(i, j);
    }
    return osca::EigenInput::make(std::move(vectors), std::move(values), sym.m,
                                  osca::SourceKind::Covariance, 1e-8);
}

int run_analyze(const std::string& input_path, const std::string& mode_s,
                const std::string& standardize_s, int k, const osca::Tuning& tuning,
                const std::string& out_json, const std::string& out_svg) {
    osca::LoadMode mode;
    if (mode_s == "data")
        mode = osca::LoadMode::Data;
    else if (mode_s == "matrix")
        mode = osca::LoadMode::Matrix;
    else if (mode_s == "eigen")
        mode = osca::LoadMode::Eigen;
    else
        throw osca::ValidationError("unknown mode '" + mode_s + "'");
    osca::Standardize st =
        (standardize_s == "corr") ? osca::Standardize::Corr : osca::Standardize::Cov;

    osca::EigenInput input = osca::load_input(input_path, mode, st, k);
    auto solutions = osca::harvest(input, tuning);
    if (solutions.empty()) {
        std::cout << "no complete solutions found\n";
        return kExitEmpty;
    }
    osca::Report rep = osca::build_report(std::move(input), tuning, std::move(solutions));
    std::cout << osca::render_text(rep);
    osca::emit_report(rep, out_json, out_svg);
    return kExitOk;
}

struct RepOutcome {
    double discr = 0.0;
    double compl_score = 0.0;
    double ma = 0.0;
    double millis = 0.0;
    bool found = false;
};

RepOutcome simulate_once(int p, std::uint64_t seed, bool noiseless, const osca::Tuning& tuning) {
    RepOutcome out;
    auto t0 = std::chrono::steady_clock::now();
    osca::EigenInput input = [&] {
        if (noiseless) {
            auto ds = osca::simulate_dataset(p, seed);
            osca::Mat vectors(p, 4);
            osca::Vec values(ds.spectrum.begin(), ds.spectrum.begin() + 4);
            for (int j = 0; j < 4; ++j)
                for (int i = 0; i < p; ++i) vectors.at(i, j) = ds.q_pop.at(i, j);
            return osca::EigenInput::make(std::move(vectors), std::move(values), std::nullopt,
                                          osca::SourceKind::EigenOnly, 1e-8);
        }
        auto ds = osca::simulate_dataset(p, seed);
        return input_from_data_matrix(ds.data, 4);
    }();
    auto solutions = osca::harvest(input, tuning);
    if (!solutions.empty()) {
        auto ranked = osca::total_order(std::move(solutions));
        out.found = true;
        out.discr = ranked.front().discr;
        out.compl_score = ranked.front().compl_score;
        out.ma = ranked.front().ma;
    }
    out.millis = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    return out;
}

int run_simulate(const std::vector<int>& ps, int reps, std::uint64_t seed, bool noiseless,
                 const osca::Tuning& tuning) {
    std::vector<double> mean_ms;
    for (int p : ps) {
        std::vector<RepOutcome> outcomes(static_cast<std::size_t>(reps));
        const int workers = std::min(osca::worker_count(), reps);
        if (workers > 1) {
            std::vector<std::future<void>> futs;
            std::atomic<int> next{0};
            for (int w = 0; w < workers; ++w)
                futs.push_back(std::async(std::launch::async, [&] {
                    int i;
                    while ((i = next.fetch_add(1)) < reps)
                        outcomes[static_cast<std::size_t>(i)] =
                            simulate_once(p, seed + static_cast<std::uint64_t>(i), noiseless, tuning);
                }));
            for (auto& f : futs) f.get();
        } else {
            for (int i = 0; i < reps; ++i)
                outcomes[static_cast<std::size_t>(i)] =
                    simulate_once(p, seed + static_cast<std::uint64_t>(i), noiseless, tuning);
        }

        int hadamard_count = 0, found_count = 0;
        std::vector<double> mas;
        double total_ms = 0.0;
        std::printf("p=%d n=%d reps=%d\n", p, 4 * p - 3, reps);
        std::printf("rep,discr,compl,ma\n");
        for (int i = 0; i < reps; ++i) {
            const auto& o = outcomes[static_cast<std::size_t>(i)];
            total_ms += o.millis;
            if (!o.found) {
                std::printf("%d,,,\n", i);
                continue;
            }
            ++found_count;
            if (std::abs(o.compl_score - 1.5) < 1e-9) ++hadamard_count;
            mas.push_back(o.ma);
            std::printf("%d,%.6f,%.6f,%.6f\n", i, o.discr, o.compl_score, o.ma);
        }
        std::sort(mas.begin(), mas.end());
        std::printf("solutions found: %d/%d\n", found_count, reps);
        std::printf("fraction compl=1.5: %.3f\n",
                    reps > 0 ? static_cast<double>(hadamard_count) / reps : 0.0);
        if (!mas.empty())
            std::printf("MA min/median/max: %.4f %.4f %.4f\n", mas.front(), mas[mas.size() / 2],
                        mas.back());
        double mean = total_ms / std::max(reps, 1);
        mean_ms.push_back(mean);
        std::printf("mean analyze time: %.2f ms\n", mean);
    }
    if (ps.size() > 1) {
        std::printf("relative timings (vs p=%d):", ps.front());
        for (std::size_t i = 0; i < ps.size(); ++i)
            std::printf(" p=%d:%.2fx", ps[i], mean_ms[i] / mean_ms.front());
        std::printf("\n");
    }
    return kExitOk;
}

osca::Vec parse_vec(const std::string& csv) {
    osca::Vec v;
    std::stringstream ss(csv);
    std::string tok;
    while (std::getline(ss, tok, ',')) v.push_back(std::stod(tok));
    return v;
}

int run_oracle(const std::string& q_csv, const std::vector<std::string>& priors_csv,
               double theta_deg, std::int64_t n_cap) {
    osca::Vec q = parse_vec(q_csv);
    double qn = osca::norm(q);
    if (qn == 0.0) throw osca::ValidationError("q must be nonzero");
    for (auto& v : q) v /= qn;
    std::vector<osca::IntVec> priors;
    for (const auto& s : priors_csv) {
        osca::Vec pv = parse_vec(s);
        osca::IntVec z;
        for (double x : pv) z.push_back(static_cast<std::int64_t>(std::llround(x)));
        if (z.size() != q.size()) throw osca::ValidationError("prior dimension mismatch");
        priors.push_back(osca::canonicalize_axis(z).z);
    }
    double cos_theta = std::cos(theta_deg * kPi / 180.0);
    auto ax = osca::oracle_best_axis(q, priors, cos_theta, n_cap);
    if (!ax) {
        std::printf("no theta-accurate simple axis with N <= %lld\n",
                    static_cast<long long>(n_cap));
        return kExitEmpty;
    }
    std::printf("axis:");
    for (auto e : ax->z) std::printf(" %lld", static_cast<long long>(e));
    std::printf("\nN=%lld accuracy=%.6f\n", static_cast<long long>(ax->complexity),
                osca::accuracy(q, ax->z));
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"orthogonal simple component analysis"};
    app.require_subcommand(1);

    std::string input_path, mode_s = "data", standardize_s = "cov";
    std::string orders_csv = "F,B,NF,NB";
    std::string out_json, out_svg;
    int k = 0;
    std::int64_t n_star = 9;
    double theta_deg = 45.0, epsilon = 0.01;

    auto* analyze = app.add_subcommand("analyze", "simplify the components of a data set");
    analyze->add_option("--input", input_path, "input file")->required();
    analyze->add_option("--mode", mode_s, "data|matrix|eigen");
    analyze->add_option("--standardize", standardize_s, "cov|corr");
    analyze->add_option("--k", k, "components of interest (0 = all)");
    analyze->add_option("--orders", orders_csv, "subset of F,B,NF,NB");
    analyze->add_option("--n-star", n_star, "max loading size N*");
    analyze->add_option("--theta-star-deg", theta_deg, "max angle in degrees");
    analyze->add_option("--epsilon", epsilon, "sweep stop threshold");
    analyze->add_option("--out", out_json, "JSON output path");
    analyze->add_option("--svg", out_svg, "SVG scatterplot path");

    std::vector<int> sim_ps{8};
    int reps = 100;
    std::uint64_t seed = 1;
    bool noiseless = false;
    auto* simulate = app.add_subcommand("simulate", "Hadamard population recovery study");
    simulate->add_option("--p", sim_ps, "dimension(s), powers of two");
    simulate->add_option("--reps", reps, "replications");
    simulate->add_option("--seed", seed, "random seed");
    simulate->add_flag("--noiseless", noiseless, "feed the exact population eigenvectors");
    simulate->add_option("--n-star", n_star, "max loading size N*");
    simulate->add_option("--theta-star-deg", theta_deg, "max angle in degrees");
    simulate->add_option("--epsilon", epsilon, "sweep stop threshold");
    simulate->add_option("--orders", orders_csv, "subset of F,B,NF,NB");

    std::string q_csv;
    std::vector<std::string> priors_csv;
    std::int64_t n_cap = 9;
    auto* oracle = app.add_subcommand("oracle", "exact best simple axis for small instances");
    oracle->add_option("--q", q_csv, "target direction, comma separated")->required();
    oracle->add_option("--prior", priors_csv, "prior integer axis, repeatable");
    oracle->add_option("--theta-deg", theta_deg, "angle in degrees");
    oracle->add_option("--n-cap", n_cap, "complexity cap");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (analyze->parsed()) {
            osca::Tuning tuning = make_tuning(n_star, theta_deg, epsilon, orders_csv);
            return run_analyze(input_path, mode_s, standardize_s, k, tuning, out_json, out_svg);
        }
        if (simulate->parsed()) {
            osca::Tuning tuning = make_tuning(n_star, theta_deg, epsilon, orders_csv);
            for (int p : sim_ps)
                if (p < 8 || (p & (p - 1)) != 0)
                    throw osca::ValidationError("simulate: p must be a power of two >= 8");
            return run_simulate(sim_ps, reps, seed, noiseless, tuning);
        }
        if (oracle->parsed()) return run_oracle(q_csv, priors_csv, theta_deg, n_cap);
    } catch (const osca::OverflowError& e) {
        std::cerr << "numeric failure: " << e.what() << "\n";
        return kExitNumeric;
    } catch (const osca::ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
