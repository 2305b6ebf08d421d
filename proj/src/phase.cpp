#include "quenchscape/phase.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace qsc {

std::vector<double> spacing_ratios(const std::vector<double>& energies) {
    if (energies.size() < 3)
        throw std::invalid_argument("spacing_ratios: need at least 3 energies");
    if (!std::is_sorted(energies.begin(), energies.end()))
        throw std::invalid_argument("spacing_ratios: energies must be sorted ascending");
    std::vector<double> r;
    r.reserve(energies.size() - 2);
    for (std::size_t i = 0; i + 2 < energies.size(); ++i) {
        double d0 = energies[i + 1] - energies[i];
        double d1 = energies[i + 2] - energies[i + 1];
        double hi = std::max(d0, d1);
        r.push_back(hi < 1e-12 ? 0.0 : std::min(d0, d1) / hi);
    }
    return r;
}

double goe_pdf(double r) {
    if (r < 0.0 || r > 1.0) throw std::invalid_argument("goe_pdf: r must be in [0,1]");
    return 27.0 / 4.0 * (r + r * r) / std::pow(1.0 + r + r * r, 2.5);
}

double poisson_pdf(double r) {
    if (r < 0.0 || r > 1.0) throw std::invalid_argument("poisson_pdf: r must be in [0,1]");
    return 2.0 / ((1.0 + r) * (1.0 + r));
}

LevelStatistics compute_level_statistics(std::vector<double> ratios, int bins) {
    if (bins < 1) throw std::invalid_argument("compute_level_statistics: bins must be >= 1");
    LevelStatistics stats;
    stats.ratios = std::move(ratios);
    if (stats.ratios.empty())
        throw std::invalid_argument("compute_level_statistics: no ratios");
    double sum = 0.0;
    for (double r : stats.ratios) {
        if (r < 0.0 || r > 1.0)
            throw std::invalid_argument("compute_level_statistics: ratio outside [0,1]");
        sum += r;
    }
    stats.mean_r = sum / static_cast<double>(stats.ratios.size());
    stats.bin_edges.resize(bins + 1);
    for (int b = 0; b <= bins; ++b)
        stats.bin_edges[b] = static_cast<double>(b) / bins;
    std::vector<double> counts(bins, 0.0);
    for (double r : stats.ratios) {
        int b = std::min(static_cast<int>(r * bins), bins - 1);
        counts[b] += 1.0;
    }
    const double width = 1.0 / bins;
    stats.densities.resize(bins);
    for (int b = 0; b < bins; ++b)
        stats.densities[b] = counts[b] / (static_cast<double>(stats.ratios.size()) * width);
    return stats;
}

namespace {

// 16-point Gauss-Legendre nodes/weights on [-1, 1].
constexpr double kGlNodes[8] = {0.0950125098376374, 0.2816035507792589, 0.4580167776572274,
                                0.6178762444026438, 0.7554044083550030, 0.8656312023878318,
                                0.9445750230732326, 0.9894009349916499};
constexpr double kGlWeights[8] = {0.1894506104550685, 0.1826034150449236, 0.1691565193950025,
                                  0.1495959888165767, 0.1246289712555339, 0.0951585116824928,
                                  0.0622535239386479, 0.0271524594117541};

template <typename Pdf>
std::vector<double> bin_probabilities(const std::vector<double>& edges, Pdf pdf) {
    std::vector<double> p(edges.size() - 1, 0.0);
    for (std::size_t b = 0; b + 1 < edges.size(); ++b) {
        double mid = 0.5 * (edges[b] + edges[b + 1]);
        double half = 0.5 * (edges[b + 1] - edges[b]);
        double acc = 0.0;
        for (int k = 0; k < 8; ++k)
            acc += kGlWeights[k] * (pdf(mid - half * kGlNodes[k]) + pdf(mid + half * kGlNodes[k]));
        p[b] = acc * half;
    }
    return p;
}

double tv_distance(const LevelStatistics& stats, const std::vector<double>& ref_probs) {
    double tv = 0.0;
    for (std::size_t b = 0; b < stats.densities.size(); ++b) {
        double width = stats.bin_edges[b + 1] - stats.bin_edges[b];
        tv += std::abs(stats.densities[b] * width - ref_probs[b]);
    }
    return 0.5 * tv;
}

}  // namespace

std::vector<double> goe_bin_probabilities(const std::vector<double>& edges) {
    return bin_probabilities(edges, goe_pdf);
}

std::vector<double> poisson_bin_probabilities(const std::vector<double>& edges) {
    return bin_probabilities(edges, poisson_pdf);
}

std::string phase_name(Phase p) {
    switch (p) {
        case Phase::Thermalized: return "Thermalized";
        case Phase::MBL: return "MBL";
        default: return "Indeterminate";
    }
}

PhaseLabel classify_phase(const LevelStatistics& stats, double tau, std::size_t min_ratios) {
    if (stats.ratios.size() < min_ratios)
        throw std::invalid_argument("classify_phase: too few ratios pooled");
    PhaseLabel label;
    label.mean_r = stats.mean_r;
    label.tv_goe = tv_distance(stats, goe_bin_probabilities(stats.bin_edges));
    label.tv_poisson = tv_distance(stats, poisson_bin_probabilities(stats.bin_edges));
    const bool nearer_goe =
        std::abs(stats.mean_r - kGoeMeanR) < std::abs(stats.mean_r - kPoissonMeanR);
    if (nearer_goe && label.tv_goe < tau) {
        label.phase = Phase::Thermalized;
    } else if (!nearer_goe && label.tv_poisson < tau) {
        label.phase = Phase::MBL;
    } else {
        label.phase = Phase::Indeterminate;
    }
    return label;
}

}  // namespace qsc
