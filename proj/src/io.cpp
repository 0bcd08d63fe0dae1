#include "osca/io.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "osca/evaluate.hpp"
#include "osca/ranking.hpp"

namespace osca {

namespace {

std::vector<std::string> split_csv_line(const std::string& line) {
    std::vector<std::string> cells;
    std::string cell;
    std::stringstream ss(line);
    while (std::getline(ss, cell, ',')) {
        std::size_t b = cell.find_first_not_of(" \t\r");
        std::size_t e = cell.find_last_not_of(" \t\r");
        cells.push_back(b == std::string::npos ? "" : cell.substr(b, e - b + 1));
    }
    return cells;
}

bool parse_number(const std::string& s, double& out) {
    if (s.empty()) return false;
    char* end = nullptr;
    out = std::strtod(s.c_str(), &end);
    return end != nullptr && *end == '\0';
}

std::vector<std::vector<std::string>> read_csv(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ValidationError("cannot open " + path);
    std::vector<std::vector<std::string>> rows;
    std::string line;
    while (std::getline(in, line)) {
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        rows.push_back(split_csv_line(line));
    }
    if (rows.empty()) throw ValidationError(path + ": empty file");
    return rows;
}

Mat rows_to_matrix(const std::vector<std::vector<std::string>>& rows, std::size_t first,
                   const std::string& path) {
    const std::size_t cols = rows[first].size();
    Mat m(static_cast<int>(rows.size() - first), static_cast<int>(cols));
    for (std::size_t r = first; r < rows.size(); ++r) {
        if (rows[r].size() != cols)
            throw ValidationError(path + ": ragged row " + std::to_string(r + 1));
        for (std::size_t c = 0; c < cols; ++c) {
            double v;
            if (!parse_number(rows[r][c], v))
                throw ValidationError(path + ": non-numeric cell '" + rows[r][c] + "' at row " +
                                      std::to_string(r + 1));
            m.at(static_cast<int>(r - first), static_cast<int>(c)) = v;
        }
    }
    return m;
}

bool is_numeric_row(const std::vector<std::string>& row) {
    double v;
    for (const auto& cell : row)
        if (!parse_number(cell, v)) return false;
    return true;
}

EigenInput from_matrix(Mat s, Standardize standardize, int k, std::vector<std::string> names) {
    if (standardize == Standardize::Corr) {
        for (int i = 0; i < s.rows; ++i)
            if (!(s.at(i, i) > 0.0))
                throw ValidationError("load_input: zero variance on the diagonal");
        Mat c(s.rows, s.cols);
        for (int i = 0; i < s.rows; ++i)
            for (int j = 0; j < s.cols; ++j)
                c.at(i, j) = s.at(i, j) / std::sqrt(s.at(i, i) * s.at(j, j));
        s = std::move(c);
    }
    SymMatrix sym(s);
    EigenDecomposition eig = eigendecompose(sym);
    const int p = sym.p();
    if (k <= 0) k = p;
    if (k > p) throw ValidationError("load_input: k exceeds p");
    Mat vectors(p, k);
    Vec values(static_cast<std::size_t>(k));
    for (int j = 0; j < k; ++j) {
        values[static_cast<std::size_t>(j)] = eig.values[static_cast<std::size_t>(j)];
        for (int i = 0; i < p; ++i) vectors.at(i, j) = eig.vectors.at(i, j);
    }
    return EigenInput::make(std::move(vectors), std::move(values), sym.m,
                            standardize == Standardize::Corr ? SourceKind::Correlation
                                                             : SourceKind::Covariance,
                            1e-8, std::move(names));
}

}  // namespace

EigenInput load_input(const std::string& path, LoadMode mode, Standardize standardize, int k) {
    auto rows = read_csv(path);

    if (mode == LoadMode::Eigen) {
        // First line: k eigenvalues, or variance percentages marked with '%'.
        bool percentages = false;
        Vec values;
        for (auto cell : rows[0]) {
            if (!cell.empty() && cell.back() == '%') {
                percentages = true;
                cell.pop_back();
            }
            double v;
            if (!parse_number(cell, v))
                throw ValidationError(path + ": bad eigenvalue entry '" + cell + "'");
            values.push_back(v);
        }
        (void)percentages;  // only ratios matter downstream
        Mat loadings = rows_to_matrix(rows, 1, path);
        if (loadings.cols != static_cast<int>(values.size()))
            throw ValidationError(path + ": loading columns do not match eigenvalue count");
        int kk = (k <= 0) ? loadings.cols : k;
        if (kk > loadings.cols) throw ValidationError("load_input: k exceeds available components");
        Mat vectors(loadings.rows, kk);
        Vec vals(static_cast<std::size_t>(kk));
        for (int j = 0; j < kk; ++j) {
            vals[static_cast<std::size_t>(j)] = values[static_cast<std::size_t>(j)];
            for (int i = 0; i < loadings.rows; ++i) vectors.at(i, j) = loadings.at(i, j);
        }
        return EigenInput::make(std::move(vectors), std::move(vals), std::nullopt,
                                SourceKind::EigenOnly, 2.5e-2);
    }

    if (mode == LoadMode::Matrix) {
        if (!is_numeric_row(rows[0])) throw ValidationError(path + ": matrix files have no header");
        Mat m = rows_to_matrix(rows, 0, path);
        if (m.rows != m.cols) throw ValidationError(path + ": matrix is not square");
        return from_matrix(std::move(m), standardize, k, {});
    }

    // Data mode: optional header row, observations in rows.
    std::vector<std::string> names;
    std::size_t first = 0;
    if (!is_numeric_row(rows[0])) {
        names = rows[0];
        first = 1;
        if (rows.size() == 1) throw ValidationError(path + ": no data rows");
    }
    Mat x = rows_to_matrix(rows, first, path);
    const int n = x.rows, p = x.cols;
    if (n < 2) throw ValidationError(path + ": need at least two observations");
    for (int j = 0; j < p; ++j) {
        double mean = 0.0;
        for (int i = 0; i < n; ++i) mean += x.at(i, j);
        mean /= n;
        for (int i = 0; i < n; ++i) x.at(i, j) -= mean;
    }
    Mat s(p, p);
    for (int a = 0; a < p; ++a)
        for (int b = a; b < p; ++b) {
            double v = 0.0;
            for (int i = 0; i < n; ++i) v += x.at(i, a) * x.at(i, b);
            v /= (n - 1);
            s.at(a, b) = v;
            s.at(b, a) = v;
        }
    return from_matrix(std::move(s), standardize, k, std::move(names));
}

Report build_report(EigenInput input, Tuning tuning, std::vector<SolutionCandidate> harvested) {
    Report rep;
    rep.ranked = total_order(std::move(harvested));
    rep.input = std::move(input);
    rep.tuning = std::move(tuning);
    for (const auto& s : rep.ranked) {
        rep.variance_pct.push_back(variance_explained(rep.input, s));
        rep.correlations.push_back(component_correlations(rep.input, s));
    }
    return rep;
}

namespace {

std::string fmt(double v, int digits = 3) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*f", digits, v);
    return buf;
}

std::string star_label(const StarRating& star) {
    if (star.stars == 0) return "unstarred";
    std::string s = (star.stars == 2) ? "**" : "*";
    switch (star.structure_type) {
        case StructureType::A: return s + " type A";
        case StructureType::B: return s + " type B";
        case StructureType::C: return s + " type C";
        case StructureType::None: break;
    }
    return s;
}

const char* type_name(StructureType t) {
    switch (t) {
        case StructureType::A: return "A";
        case StructureType::B: return "B";
        case StructureType::C: return "C";
        case StructureType::None: break;
    }
    return "none";
}

}  // namespace

std::string render_text(const Report& rep) {
    std::ostringstream os;
    os << "p=" << rep.input.p << " k=" << rep.input.k << "  N*=" << rep.tuning.n_star
       << "  theta*=" << fmt(rep.tuning.theta_star * 180.0 / 3.14159265358979323846, 2)
       << "deg  epsilon=" << fmt(rep.tuning.epsilon, 3) << "  orders=";
    for (std::size_t i = 0; i < rep.tuning.orders.size(); ++i)
        os << (i ? "," : "") << order_name(rep.tuning.orders[i]);
    os << "\n" << rep.ranked.size() << " solution(s)\n";

    std::size_t name_w = 12;
    for (const auto& n : rep.input.variable_names) name_w = std::max(name_w, n.size() + 1);

    for (std::size_t si = 0; si < rep.ranked.size(); ++si) {
        const auto& s = rep.ranked[si];
        os << "\nSolution " << s.rank << " [" << star_label(s.star) << "]"
           << "  MA=" << fmt(s.ma) << "  discr=" << fmt(s.discr) << "  compl=" << fmt(s.compl_score)
           << "\n";
        os << std::string(name_w, ' ');
        for (int r = 1; r <= s.k(); ++r) {
            std::string h = "z" + std::to_string(r);
            os << std::string(8 - h.size(), ' ') << h;
        }
        os << "\n";
        for (int i = 0; i < s.p(); ++i) {
            const auto& nm = rep.input.variable_names[static_cast<std::size_t>(i)];
            os << nm << std::string(name_w - nm.size(), ' ');
            for (const auto& ax : s.axes) {
                std::string v = std::to_string(ax.z[static_cast<std::size_t>(i)]);
                os << std::string(8 - v.size(), ' ') << v;
            }
            os << "\n";
        }
        os << "Accuracy" << std::string(name_w - 8, ' ');
        for (const auto& ax : s.axes) {
            std::string v = fmt(ax.accuracy);
            os << std::string(8 - v.size(), ' ') << v;
        }
        os << "\n";
        if (rep.variance_pct[si]) {
            os << "Var (%)" << std::string(name_w - 7, ' ');
            for (double v : *rep.variance_pct[si]) {
                std::string t = fmt(v, 1);
                os << std::string(8 - t.size(), ' ') << t;
            }
            os << "\n";
        }
        os << "provenance:";
        for (const auto& [o, theta] : s.provenance)
            os << " " << order_name(o) << "@" << fmt(theta * 180.0 / 3.14159265358979323846, 2) << "deg";
        os << "\n";
    }
    return os.str();
}

std::string render_json(const Report& rep) {
    using json = nlohmann::ordered_json;
    json doc;
    doc["input_summary"] = {{"p", rep.input.p},
                            {"k", rep.input.k},
                            {"source_kind", rep.input.source_kind == SourceKind::Covariance
                                                ? "covariance"
                                                : rep.input.source_kind == SourceKind::Correlation
                                                      ? "correlation"
                                                      : "eigen-only"},
                            {"variable_names", rep.input.variable_names},
                            {"eigenvalues", rep.input.eigenvalues}};
    std::vector<std::string> orders;
    for (Order o : rep.tuning.orders) orders.push_back(order_name(o));
    doc["tuning"] = {{"n_star", rep.tuning.n_star},
                     {"theta_star", rep.tuning.theta_star},
                     {"epsilon", rep.tuning.epsilon},
                     {"orders", orders}};
    doc["solutions"] = json::array();
    for (std::size_t si = 0; si < rep.ranked.size(); ++si) {
        const auto& s = rep.ranked[si];
        json js;
        js["rank"] = s.rank;
        js["stars"] = s.star.stars;
        js["type"] = type_name(s.star.structure_type);
        json axes = json::array();
        json accs = json::array();
        for (const auto& ax : s.axes) {
            axes.push_back(ax.z);
            accs.push_back(ax.accuracy);
        }
        js["axes"] = axes;
        js["accuracies"] = accs;
        js["ma"] = s.ma;
        js["discr"] = s.discr;
        js["compl"] = s.compl_score;
        if (rep.variance_pct[si])
            js["variance_pct"] = *rep.variance_pct[si];
        else
            js["variance_pct"] = nullptr;
        json prov = json::array();
        for (const auto& [o, theta] : s.provenance)
            prov.push_back({{"order", order_name(o)}, {"theta", theta}});
        js["provenance"] = prov;
        if (rep.correlations[si]) {
            json corr = json::array();
            for (int i = 0; i < rep.correlations[si]->rows; ++i) {
                json row = json::array();
                for (int j = 0; j < rep.correlations[si]->cols; ++j)
                    row.push_back(rep.correlations[si]->at(i, j));
                corr.push_back(row);
            }
            js["correlations"] = corr;
        } else {
            js["correlations"] = nullptr;
        }
        doc["solutions"].push_back(js);
    }
    return doc.dump(2) + "\n";
}

namespace {

struct PlotBox {
    double x0, x1, y0, y1;                    // data ranges
    double px0 = 70, px1 = 610, py0 = 420, py1 = 40;  // pixel ranges (y inverted)

    double x(double v) const { return px0 + (v - x0) / (x1 - x0) * (px1 - px0); }
    double y(double v) const { return py0 + (v - y0) / (y1 - y0) * (py1 - py0); }
};

std::string svg_star_path(double cx, double cy, double r, bool filled) {
    std::ostringstream os;
    os << "<path d=\"";
    for (int i = 0; i < 10; ++i) {
        double ang = -1.5707963267948966 + i * 0.6283185307179586;
        double rr = (i % 2 == 0) ? r : 0.45 * r;
        os << (i == 0 ? "M" : "L") << fmt(cx + rr * std::cos(ang), 2) << " "
           << fmt(cy + rr * std::sin(ang), 2);
    }
    os << "Z\" fill=\"" << (filled ? "#1f4e96" : "none") << "\" stroke=\"#1f4e96\" stroke-width=\"1\"/>";
    return os.str();
}

}  // namespace

std::string render_svg(const Report& rep) {
    std::ostringstream os;
    os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
       << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"640\" height=\"480\" "
          "viewBox=\"0 0 640 480\">\n"
       << "<rect x=\"0\" y=\"0\" width=\"640\" height=\"480\" fill=\"white\"/>\n";

    PlotBox box{0.0, 1.0, 0.0, 1.0};
    double xmax = 1e-6, ymax = 1.5;
    for (const auto& s : rep.ranked) {
        xmax = std::max(xmax, s.discr);
        ymax = std::max(ymax, s.compl_score);
    }
    box.x0 = 0.0;
    box.x1 = xmax * 1.15;
    box.y0 = 0.0;
    box.y1 = ymax * 1.15;

    os << "<line x1=\"" << fmt(box.px0, 1) << "\" y1=\"" << fmt(box.py0, 1) << "\" x2=\""
       << fmt(box.px1, 1) << "\" y2=\"" << fmt(box.py0, 1) << "\" stroke=\"black\"/>\n";
    os << "<line x1=\"" << fmt(box.px0, 1) << "\" y1=\"" << fmt(box.py0, 1) << "\" x2=\""
       << fmt(box.px0, 1) << "\" y2=\"" << fmt(box.py1, 1) << "\" stroke=\"black\"/>\n";
    for (int t = 0; t <= 5; ++t) {
        double xv = box.x0 + t * (box.x1 - box.x0) / 5.0;
        double yv = box.y0 + t * (box.y1 - box.y0) / 5.0;
        os << "<line x1=\"" << fmt(box.x(xv), 1) << "\" y1=\"" << fmt(box.py0, 1) << "\" x2=\""
           << fmt(box.x(xv), 1) << "\" y2=\"" << fmt(box.py0 + 5, 1) << "\" stroke=\"black\"/>\n";
        os << "<text x=\"" << fmt(box.x(xv), 1) << "\" y=\"" << fmt(box.py0 + 18, 1)
           << "\" font-size=\"10\" text-anchor=\"middle\">" << fmt(xv, 3) << "</text>\n";
        os << "<line x1=\"" << fmt(box.px0 - 5, 1) << "\" y1=\"" << fmt(box.y(yv), 1) << "\" x2=\""
           << fmt(box.px0, 1) << "\" y2=\"" << fmt(box.y(yv), 1) << "\" stroke=\"black\"/>\n";
        os << "<text x=\"" << fmt(box.px0 - 8, 1) << "\" y=\"" << fmt(box.y(yv) + 3, 1)
           << "\" font-size=\"10\" text-anchor=\"end\">" << fmt(yv, 2) << "</text>\n";
    }
    os << "<text x=\"" << fmt(0.5 * (box.px0 + box.px1), 1)
       << "\" y=\"450\" font-size=\"13\" text-anchor=\"middle\">discr</text>\n";
    os << "<text x=\"18\" y=\"" << fmt(0.5 * (box.py0 + box.py1), 1)
       << "\" font-size=\"13\" text-anchor=\"middle\" transform=\"rotate(-90 18 "
       << fmt(0.5 * (box.py0 + box.py1), 1) << ")\">compl</text>\n";

    // Minimal frontier joined by straight lines.
    std::vector<std::size_t> frontier;
    if (!rep.ranked.empty()) frontier = minimal_set(rep.ranked);
    std::sort(frontier.begin(), frontier.end(), [&](std::size_t a, std::size_t b) {
        return rep.ranked[a].discr < rep.ranked[b].discr;
    });
    if (frontier.size() > 1) {
        os << "<polyline fill=\"none\" stroke=\"#888888\" stroke-width=\"1\" points=\"";
        for (std::size_t i = 0; i < frontier.size(); ++i) {
            const auto& s = rep.ranked[frontier[i]];
            os << (i ? " " : "") << fmt(box.x(s.discr), 2) << "," << fmt(box.y(s.compl_score), 2);
        }
        os << "\"/>\n";
    }

    std::vector<bool> is_minimal(rep.ranked.size(), false);
    for (std::size_t i : frontier) is_minimal[i] = true;
    for (std::size_t i = 0; i < rep.ranked.size(); ++i) {
        const auto& s = rep.ranked[i];
        double cx = box.x(s.discr), cy = box.y(s.compl_score);
        bool lowest_class = s.star.stars == 0 && !is_minimal[i];
        if (s.star.stars == 2)
            os << svg_star_path(cx, cy, 7.0, true) << "\n";
        else if (s.star.stars == 1)
            os << svg_star_path(cx, cy, 7.0, false) << "\n";
        else if (is_minimal[i])
            os << "<circle cx=\"" << fmt(cx, 2) << "\" cy=\"" << fmt(cy, 2)
               << "\" r=\"4\" fill=\"#333333\"/>\n";
        else
            os << "<circle cx=\"" << fmt(cx, 2) << "\" cy=\"" << fmt(cy, 2)
               << "\" r=\"3\" fill=\"none\" stroke=\"#333333\"/>\n";
        if (!lowest_class)
            os << "<text x=\"" << fmt(cx + 8, 2) << "\" y=\"" << fmt(cy - 6, 2)
               << "\" font-size=\"11\">" << s.rank << "</text>\n";
    }
    os << "</svg>\n";
    return os.str();
}

void emit_report(const Report& rep, const std::string& json_path, const std::string& svg_path) {
    auto write_file = [](const std::string& path, const std::string& text) {
        std::ofstream out(path, std::ios::binary);
        if (!out) throw ValidationError("cannot write " + path);
        out << text;
        if (!out) throw ValidationError("write failed for " + path);
    };
    if (!json_path.empty()) write_file(json_path, render_json(rep));
    if (!svg_path.empty()) write_file(svg_path, render_svg(rep));
}

std::vector<SolutionCandidate> load_solutions_json(const std::string& text) {
    using json = nlohmann::json;
    json doc = json::parse(text);
    std::vector<SolutionCandidate> out;
    for (const auto& js : doc.at("solutions")) {
        SolutionCandidate s;
        s.rank = js.at("rank").get<int>();
        const auto& axes = js.at("axes");
        const auto& accs = js.at("accuracies");
        for (std::size_t r = 0; r < axes.size(); ++r) {
            IntegerAxis ax = canonicalize_axis(axes[r].get<IntVec>());
            ax.target_index = static_cast<int>(r) + 1;
            ax.accuracy = accs[r].get<double>();
            s.axes.push_back(std::move(ax));
        }
        for (const auto& pv : js.at("provenance")) {
            auto o = order_from_name(pv.at("order").get<std::string>());
            if (o) s.provenance.emplace_back(*o, pv.at("theta").get<double>());
        }
        s.refresh_scores();
        out.push_back(std::move(s));
    }
    return out;
}

}  // namespace osca
