#include "osca/ranking.hpp"

#include <algorithm>
#include <cmath>
#include <set>

namespace osca {

std::pair<double, double> score(const SolutionCandidate& s) {
    return {s.discr, s.compl_score};
}

namespace {

bool dominates(const SolutionCandidate& a, const SolutionCandidate& b) {
    if (a.discr > b.discr || a.compl_score > b.compl_score) return false;
    return a.discr < b.discr || a.compl_score < b.compl_score;
}

}  // namespace

std::vector<std::size_t> minimal_set(const std::vector<SolutionCandidate>& solutions) {
    if (solutions.empty()) throw ValidationError("minimal_set: empty input");
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < solutions.size(); ++i) {
        bool dominated = false;
        for (std::size_t j = 0; j < solutions.size() && !dominated; ++j)
            if (j != i && dominates(solutions[j], solutions[i])) dominated = true;
        if (!dominated) out.push_back(i);
    }
    return out;
}

StarRating star_rating(const std::vector<IntVec>& columns, int p) {
    StarRating rating;
    rating.n_sharp.reserve(columns.size());
    std::vector<bool> is_block;
    for (const auto& col : columns) {
        std::set<std::int64_t> distinct;
        bool pos = false, neg = false, nonzero = false;
        for (auto v : col) {
            if (v == 0) continue;
            nonzero = true;
            distinct.insert(v);
            (v > 0 ? pos : neg) = true;
        }
        rating.n_sharp.push_back(static_cast<int>(distinct.size()));
        if (!nonzero) return rating;  // a zero column cannot define a structure
        is_block.push_back(pos && !neg);
    }

    // Block supports must be pairwise disjoint (orthogonality of nonnegative
    // columns enforces it) and must cover every variable.
    std::vector<int> owner(static_cast<std::size_t>(p), -1);
    int b = 0;
    for (std::size_t c = 0; c < columns.size(); ++c) {
        if (!is_block[c]) continue;
        std::vector<int> block;
        for (int i = 0; i < p; ++i)
            if (columns[c][static_cast<std::size_t>(i)] != 0) {
                if (owner[static_cast<std::size_t>(i)] != -1)
                    throw ValidationError("star_rating: overlapping single-signed supports");
                owner[static_cast<std::size_t>(i)] = static_cast<int>(c);
                block.push_back(i);
            }
        rating.blocks.push_back(std::move(block));
        ++b;
    }
    if (b == 0 || std::find(owner.begin(), owner.end(), -1) != owner.end()) {
        rating.blocks.clear();
        return rating;  // no partition of the p variables: unstarred
    }

    // W-B: the nonzero elements of each contrast occur within a single block.
    rating.wb_holds = true;
    for (std::size_t c = 0; c < columns.size(); ++c) {
        if (is_block[c]) continue;
        int block_of_contrast = -2;
        for (int i = 0; i < p; ++i) {
            if (columns[c][static_cast<std::size_t>(i)] == 0) continue;
            int o = owner[static_cast<std::size_t>(i)];
            if (block_of_contrast == -2)
                block_of_contrast = o;
            else if (o != block_of_contrast)
                rating.wb_holds = false;
        }
    }

    if (b == 1)
        rating.structure_type = StructureType::A;
    else
        rating.structure_type = rating.wb_holds ? StructureType::B : StructureType::C;

    int block_sharp = 0, contrast_sharp = 0;
    for (std::size_t c = 0; c < columns.size(); ++c)
        (is_block[c] ? block_sharp : contrast_sharp) =
            std::max(is_block[c] ? block_sharp : contrast_sharp, rating.n_sharp[c]);
    const bool parsimonious = block_sharp == 1 && (contrast_sharp == 0 || contrast_sharp == 2);
    rating.stars = parsimonious ? 2 : 1;
    return rating;
}

namespace {

bool rank_less(const SolutionCandidate& a, const SolutionCandidate& b) {
    if (std::abs(a.compl_score - b.compl_score) > 1e-12) return a.compl_score < b.compl_score;
    if (std::abs(a.discr - b.discr) > 1e-12) return a.discr < b.discr;
    return lex_less(a.canonical_key(), b.canonical_key());
}

int class_of(const SolutionCandidate& s, bool in_global_minimal) {
    if (s.star.stars == 2) return 0;
    if (s.star.stars == 1) return 1;
    return in_global_minimal ? 2 : 3;
}

}  // namespace

std::vector<SolutionCandidate> total_order(std::vector<SolutionCandidate> solutions) {
    if (solutions.empty()) return solutions;
    for (auto& s : solutions) {
        std::vector<IntVec> cols;
        cols.reserve(s.axes.size());
        for (const auto& ax : s.axes) cols.push_back(ax.z);
        s.star = star_rating(cols, s.p());
    }
    std::vector<bool> global_minimal(solutions.size(), false);
    for (std::size_t i : minimal_set(solutions)) global_minimal[i] = true;

    std::vector<SolutionCandidate> ranked;
    ranked.reserve(solutions.size());
    for (int cls = 0; cls < 4; ++cls) {
        std::vector<SolutionCandidate> members;
        for (std::size_t i = 0; i < solutions.size(); ++i)
            if (class_of(solutions[i], global_minimal[i]) == cls) members.push_back(solutions[i]);
        while (!members.empty()) {
            std::vector<std::size_t> front = minimal_set(members);
            std::vector<SolutionCandidate> layer;
            for (std::size_t i : front) layer.push_back(members[i]);
            std::sort(layer.begin(), layer.end(), rank_less);
            ranked.insert(ranked.end(), layer.begin(), layer.end());
            std::vector<SolutionCandidate> rest;
            std::set<std::size_t> removed(front.begin(), front.end());
            for (std::size_t i = 0; i < members.size(); ++i)
                if (removed.count(i) == 0) rest.push_back(std::move(members[i]));
            members = std::move(rest);
        }
    }
    for (std::size_t i = 0; i < ranked.size(); ++i) ranked[i].rank = static_cast<int>(i) + 1;
    return ranked;
}

}  // namespace osca
