#include "sqz/io.hpp"

#include <array>
#include <cstdio>
#include <cstdlib>

namespace sqz::io {

std::string format_sig(double x, int digits) {
    char buf[48];
    std::snprintf(buf, sizeof buf, "%.*e", digits - 1, x);
    return buf;
}

double round_sig(double x, int digits) {
    return std::strtod(format_sig(x, digits).c_str(), nullptr);
}

namespace {

void write_header(std::ostream& os, const HeaderFields& header) {
    for (const auto& [key, value] : header) os << "# " << key << " = " << value << "\n";
}

std::string format_m(double m) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.1f", m);
    return buf;
}

nlohmann::json header_json(const HeaderFields& header) {
    nlohmann::json cfg = nlohmann::json::object();
    for (const auto& [key, value] : header) cfg[key] = value;
    return cfg;
}

}  // namespace

void write_timeseries_csv(std::ostream& os, const TimeSeries& series, double j,
                          const HeaderFields& header) {
    write_header(os, header);
    os << "t,xi,theta_min,jx_mean_over_j,A,B,C,field_on\n";
    for (std::size_t i = 0; i < series.size(); ++i) {
        const SqueezingReport& r = series.reports[i];
        os << format_sig(series.times[i]) << ',' << format_sig(r.xi) << ','
           << format_sig(r.theta_min) << ',' << format_sig(r.jx_mean / j) << ','
           << format_sig(r.a_moment) << ',' << format_sig(r.b_moment) << ','
           << format_sig(r.c_moment) << ',' << int(series.field_on[i]) << "\n";
    }
}

void write_histogram_csv(std::ostream& os, const HistogramSnapshot& snap,
                         const HeaderFields& header) {
    write_header(os, header);
    os << "# snapshot_requested_t = " << format_sig(snap.requested_t) << "\n";
    os << "# snapshot_t = " << format_sig(snap.t) << "\n";
    os << "m,prob\n";
    for (const auto& [m, prob] : snap.histogram)
        os << format_m(m) << ',' << format_sig(prob) << "\n";
}

void write_coupling_scan_csv(std::ostream& os, const CouplingScanResult& scan,
                             const HeaderFields& header) {
    write_header(os, header);
    os << "# optimum_coupling = " << format_sig(scan.optimum_coupling) << "\n";
    os << "# optimum_min_xi = " << format_sig(scan.optimum_xi) << "\n";
    os << "# optimum_tau0 = " << format_sig(scan.optimum_tau0) << "\n";
    os << "# plateau_lo = " << format_sig(scan.plateau_lo) << "\n";
    os << "# plateau_hi = " << format_sig(scan.plateau_hi) << "\n";
    os << "coupling,min_xi,tau0\n";
    for (const CouplingScanPoint& p : scan.grid)
        os << format_sig(p.coupling) << ',' << format_sig(p.min_xi) << ','
           << format_sig(p.tau0) << "\n";
}

void write_surface_csv(std::ostream& os,
                       const std::vector<std::array<double, 3>>& rows,
                       const std::array<std::string, 3>& columns,
                       const HeaderFields& header) {
    write_header(os, header);
    os << columns[0] << ',' << columns[1] << ',' << columns[2] << "\n";
    for (const auto& row : rows)
        os << format_sig(row[0]) << ',' << format_sig(row[1]) << ','
           << format_sig(row[2]) << "\n";
}

nlohmann::json timeseries_to_json(const TimeSeries& series, double j,
                                  const HeaderFields& header) {
    nlohmann::json out;
    out["config"] = header_json(header);
    nlohmann::json rows = nlohmann::json::array();
    for (std::size_t i = 0; i < series.size(); ++i) {
        const SqueezingReport& r = series.reports[i];
        rows.push_back({{"t", round_sig(series.times[i])},
                        {"xi", round_sig(r.xi)},
                        {"theta_min", round_sig(r.theta_min)},
                        {"jx_mean_over_j", round_sig(r.jx_mean / j)},
                        {"A", round_sig(r.a_moment)},
                        {"B", round_sig(r.b_moment)},
                        {"C", round_sig(r.c_moment)},
                        {"field_on", bool(series.field_on[i])}});
    }
    out["series"] = std::move(rows);
    nlohmann::json snaps = nlohmann::json::array();
    for (const HistogramSnapshot& snap : series.snapshots) {
        nlohmann::json hist = nlohmann::json::array();
        for (const auto& [m, prob] : snap.histogram)
            hist.push_back({{"m", m}, {"prob", round_sig(prob)}});
        snaps.push_back({{"requested_t", round_sig(snap.requested_t)},
                         {"t", round_sig(snap.t)},
                         {"histogram", std::move(hist)}});
    }
    out["snapshots"] = std::move(snaps);
    return out;
}

nlohmann::json coupling_scan_to_json(const CouplingScanResult& scan,
                                     const HeaderFields& header) {
    nlohmann::json out;
    out["config"] = header_json(header);
    out["optimum"] = {{"coupling", round_sig(scan.optimum_coupling)},
                      {"min_xi", round_sig(scan.optimum_xi)},
                      {"tau0", round_sig(scan.optimum_tau0)}};
    out["plateau"] = {{"lo", round_sig(scan.plateau_lo)}, {"hi", round_sig(scan.plateau_hi)}};
    nlohmann::json rows = nlohmann::json::array();
    for (const CouplingScanPoint& p : scan.grid)
        rows.push_back({{"coupling", round_sig(p.coupling)},
                        {"min_xi", round_sig(p.min_xi)},
                        {"tau0", round_sig(p.tau0)}});
    out["grid"] = std::move(rows);
    return out;
}

nlohmann::json surface_to_json(const std::vector<std::array<double, 3>>& rows,
                               const std::array<std::string, 3>& columns,
                               const HeaderFields& header) {
    nlohmann::json out;
    out["config"] = header_json(header);
    nlohmann::json data = nlohmann::json::array();
    for (const auto& row : rows)
        data.push_back({{columns[0], round_sig(row[0])},
                        {columns[1], round_sig(row[1])},
                        {columns[2], round_sig(row[2])}});
    out["surface"] = std::move(data);
    return out;
}

}  // namespace sqz::io
