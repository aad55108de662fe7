#include "symband/report.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <map>
#include <sstream>
#include <tuple>

namespace symband {

namespace {

std::string fixed(double v, int digits) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*f", digits, v);
    return buf;
}

std::string sci(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.3g", v);
    return buf;
}

std::string xml_escape(const std::string& s) {
    std::string out;
    for (char c : s) {
        switch (c) {
            case '<': out += "&lt;"; break;
            case '>': out += "&gt;"; break;
            case '&': out += "&amp;"; break;
            case '"': out += "&quot;"; break;
            default: out += c;
        }
    }
    return out;
}

const char* bar_color(Algorithm a) {
    switch (a) {
        case Algorithm::STDM: return "#4e79a7";
        case Algorithm::SPDM: return "#f28e2b";
        case Algorithm::SHDM: return "#e15759";
    }
    return "#888888";
}

}  // namespace

std::vector<AlphaRow> alpha_table(const std::vector<BenchRecord>& records) {
    using Key = std::tuple<StorageKind, Backend, Algorithm>;
    std::map<Key, std::vector<const MeanRow*>> series;
    const auto means = mean_table(records);
    for (const auto& row : means) series[{row.storage, row.backend, row.algorithm}].push_back(&row);
    std::vector<AlphaRow> out;
    for (const auto& [key, rows] : series) {
        const auto& [storage, backend, algorithm] = key;
        if (rows.size() < 2)
            raise(ErrorKind::InsufficientData, std::string(to_string(algorithm)) + " (" +
                                                   std::string(to_string(storage)) + ", " +
                                                   std::string(to_string(backend)) + ") has only one size");
        // mean_table sorts by n within a series.
        const MeanRow& a = *rows[rows.size() - 2];
        const MeanRow& b = *rows.back();
        out.push_back({algorithm, storage, backend,
                       estimate_alpha(a.mean, b.mean, static_cast<double>(a.n), static_cast<double>(b.n))});
    }
    return out;
}

std::string format_mean_table(const std::vector<MeanRow>& rows) {
    std::ostringstream os;
    os << "algorithm  storage  backend         n  reps      mean [s]    median [s]\n";
    for (const auto& r : rows) {
        char line[160];
        std::snprintf(line, sizeof line, "%-9s  %-7s  %-7s  %8zu  %4d  %12s  %12s\n", std::string(to_string(r.algorithm)).c_str(),
                      std::string(to_string(r.storage)).c_str(), std::string(to_string(r.backend)).c_str(), r.n, r.reps,
                      fixed(r.mean, 6).c_str(), fixed(r.median, 6).c_str());
        os << line;
    }
    return os.str();
}

std::string format_alpha_table(const std::vector<AlphaRow>& rows) {
    std::ostringstream os;
    os << "algorithm  storage  backend        n1        n2  alpha        k\n";
    for (const auto& r : rows) {
        char line[160];
        std::snprintf(line, sizeof line, "%-9s  %-7s  %-7s  %8zu  %8zu  %5s  %9s\n", std::string(to_string(r.algorithm)).c_str(),
                      std::string(to_string(r.storage)).c_str(), std::string(to_string(r.backend)).c_str(),
                      r.estimate.n1, r.estimate.n2, fixed(r.estimate.alpha, 2).c_str(), sci(r.estimate.k_fit).c_str());
        os << line;
    }
    return os.str();
}

std::string format_ratio_table(const std::vector<RatioRow>& rows) {
    std::ostringstream os;
    os << "storage  backend         n  HD:TD  PD:TD  TD:TD\n";
    for (const auto& r : rows) {
        char line[160];
        std::snprintf(line, sizeof line, "%-7s  %-7s  %8zu  %5s  %5s  %5s\n", std::string(to_string(r.storage)).c_str(),
                      std::string(to_string(r.backend)).c_str(), r.n, fixed(r.hd_td, 3).c_str(),
                      fixed(r.pd_td, 3).c_str(), "1.000");
        os << line;
    }
    return os.str();
}

std::string render_svg(const std::vector<MeanRow>& rows) {
    using Panel = std::pair<StorageKind, Backend>;
    std::map<Panel, std::map<std::size_t, std::map<Algorithm, double>>> panels;
    double tmin = 0, tmax = 0;
    for (const auto& r : rows) {
        panels[{r.storage, r.backend}][r.n][r.algorithm] = r.mean;
        tmin = tmin == 0 ? r.mean : std::min(tmin, r.mean);
        tmax = std::max(tmax, r.mean);
    }
    // Decades spanning the data; bars start at the lower decade.
    const double lo_dec = rows.empty() ? 0 : std::floor(std::log10(tmin));
    const double hi_dec = rows.empty() ? 1 : std::max(lo_dec + 1, std::ceil(std::log10(tmax)));

    const double bar_w = 18, group_gap = 24, left = 80, right = 140, top = 40, plot_h = 240, panel_gap = 90;
    std::size_t max_groups = 1;
    for (const auto& [panel, groups] : panels) max_groups = std::max(max_groups, groups.size());
    const double plot_w = static_cast<double>(max_groups) * (3 * bar_w + group_gap) + group_gap;
    const double width = left + plot_w + right;
    const double height = top + static_cast<double>(std::max<std::size_t>(1, panels.size())) * (plot_h + panel_gap);
    const auto y_of = [&](double t) { return plot_h * (std::log10(t) - lo_dec) / (hi_dec - lo_dec); };

    std::ostringstream os;
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << fixed(width, 0) << "\" height=\"" << fixed(height, 0)
       << "\" viewBox=\"0 0 " << fixed(width, 0) << ' ' << fixed(height, 0) << "\" font-family=\"sans-serif\" font-size=\"12\">\n";
    os << "  <title>Mean wall-clock time per solve</title>\n";
    os << "  <rect x=\"0\" y=\"0\" width=\"" << fixed(width, 0) << "\" height=\"" << fixed(height, 0) << "\" fill=\"white\"/>\n";

    double y0 = top;
    for (const auto& [panel, groups] : panels) {
        const double base = y0 + plot_h;
        os << "  <g class=\"panel\">\n";
        os << "    <text x=\"" << fixed(left, 0) << "\" y=\"" << fixed(y0 - 12, 0) << "\" font-weight=\"bold\">"
           << xml_escape(std::string(to_string(panel.first)) + " storage, " + std::string(to_string(panel.second)) + " backend")
           << "</text>\n";
        // Axes, decade ticks and labels.
        os << "    <line class=\"axis\" x1=\"" << fixed(left, 0) << "\" y1=\"" << fixed(y0, 0) << "\" x2=\"" << fixed(left, 0)
           << "\" y2=\"" << fixed(base, 0) << "\" stroke=\"black\"/>\n";
        os << "    <line class=\"axis\" x1=\"" << fixed(left, 0) << "\" y1=\"" << fixed(base, 0) << "\" x2=\""
           << fixed(left + plot_w, 0) << "\" y2=\"" << fixed(base, 0) << "\" stroke=\"black\"/>\n";
        for (double d = lo_dec; d <= hi_dec; d += 1) {
            const double y = base - y_of(std::pow(10.0, d));
            os << "    <line x1=\"" << fixed(left - 4, 0) << "\" y1=\"" << fixed(y, 1) << "\" x2=\"" << fixed(left + plot_w, 0)
               << "\" y2=\"" << fixed(y, 1) << "\" stroke=\"#dddddd\"/>\n";
            os << "    <text x=\"" << fixed(left - 8, 0) << "\" y=\"" << fixed(y + 4, 1) << "\" text-anchor=\"end\">1e"
               << static_cast<int>(d) << "</text>\n";
        }
        os << "    <text class=\"axis-label\" transform=\"translate(" << fixed(left - 55, 0) << ',' << fixed(y0 + plot_h / 2, 0)
           << ") rotate(-90)\" text-anchor=\"middle\">time [s] (log scale)</text>\n";
        os << "    <text class=\"axis-label\" x=\"" << fixed(left + plot_w / 2, 0) << "\" y=\"" << fixed(base + 40, 0)
           << "\" text-anchor=\"middle\">N (matrix rows)</text>\n";

        double x = left + group_gap;
        for (const auto& [n, bars] : groups) {
            double bx = x;
            for (Algorithm a : {Algorithm::SHDM, Algorithm::SPDM, Algorithm::STDM}) {
                const auto it = bars.find(a);
                if (it != bars.end()) {
                    const double h = std::max(1.0, y_of(it->second));
                    os << "    <rect class=\"bar\" data-n=\"" << n << "\" data-algorithm=\"" << to_string(a) << "\" x=\""
                       << fixed(bx, 1) << "\" y=\"" << fixed(base - h, 1) << "\" width=\"" << fixed(bar_w, 0)
                       << "\" height=\"" << fixed(h, 1) << "\" fill=\"" << bar_color(a) << "\"><title>"
                       << to_string(a) << " N=" << n << ": " << sci(it->second) << " s</title></rect>\n";
                }
                bx += bar_w;
            }
            os << "    <text x=\"" << fixed(x + 1.5 * bar_w, 1) << "\" y=\"" << fixed(base + 16, 0)
               << "\" text-anchor=\"middle\">" << n << "</text>\n";
            x += 3 * bar_w + group_gap;
        }
        // Legend.
        double ly = y0 + 10;
        for (Algorithm a : {Algorithm::SHDM, Algorithm::SPDM, Algorithm::STDM}) {
            os << "    <rect x=\"" << fixed(left + plot_w + 20, 0) << "\" y=\"" << fixed(ly, 0)
               << "\" width=\"12\" height=\"12\" fill=\"" << bar_color(a) << "\"/>\n";
            os << "    <text x=\"" << fixed(left + plot_w + 38, 0) << "\" y=\"" << fixed(ly + 10, 0) << "\">" << to_string(a)
               << "</text>\n";
            ly += 20;
        }
        os << "  </g>\n";
        y0 += plot_h + panel_gap;
    }
    os << "</svg>\n";
    return os.str();
}

}  // namespace symband
