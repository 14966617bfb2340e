// SPDX-License-Identifier: MIT
#include "lejalab/report_io.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>
#include <stdexcept>

namespace leja::io {

std::string format_double(double x) {
    if (std::isnan(x)) return "nan";
    if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

json number(double x) { return std::isfinite(x) ? json(x) : json(nullptr); }

json complex_json(Complex z, const std::optional<DyadicAngle>& angle) {
    json j = {{"re", number(z.real())}, {"im", number(z.imag())}};
    if (angle) {
        j["angle_num"] = angle->numerator();
        j["angle_level"] = angle->level();
    }
    return j;
}

json points_json(std::span<const PointRecord> rows, std::span<const std::string> compacts) {
    json out;
    out["command"] = "points";
    out["dim"] = compacts.size();
    out["count"] = rows.size();
    out["compacts"] = std::vector<std::string>(compacts.begin(), compacts.end());
    json pts = json::array();
    for (const auto& r : rows) {
        json coords = json::array();
        for (std::size_t j = 0; j < r.coords.size(); ++j) coords.push_back(complex_json(r.coords[j], r.angles[j]));
        pts.push_back({{"n", r.n}, {"k", r.k.components()}, {"coords", coords}});
    }
    out["points"] = std::move(pts);
    return out;
}

std::string points_csv(std::span<const PointRecord> rows) {
    std::ostringstream os;
    const std::size_t s = rows.empty() ? 0 : rows.front().coords.size();
    os << "n";
    for (std::size_t j = 1; j <= s; ++j) os << ",k_" << j;
    for (std::size_t j = 1; j <= s; ++j) os << ",re_" << j << ",im_" << j << ",angle_num_" << j << ",angle_level_" << j;
    os << '\n';
    for (const auto& r : rows) {
        os << r.n;
        for (std::size_t j = 0; j < s; ++j) os << ',' << r.k[j];
        for (std::size_t j = 0; j < s; ++j) {
            os << ',' << format_double(r.coords[j].real()) << ',' << format_double(r.coords[j].imag()) << ',';
            if (r.angles[j]) os << r.angles[j]->numerator() << ',' << r.angles[j]->level();
            else os << ',';
        }
        os << '\n';
    }
    return os.str();
}

namespace {

double normalized(const LebesgueReport& r) { return r.lambda / std::pow(static_cast<double>(r.N), 1.5); }

double angle_or_nan(const LebesgueReport& r, std::size_t i) {
    return i < r.argmax_angles.size() ? r.argmax_angles[i] : std::nan("");
}

}  // namespace

json lebesgue_row_json(const LebesgueReport& r, const std::string& compact) {
    json row = {{"N", r.N},
                {"d", r.d},
                {"m", r.m},
                {"grid", r.grid_per_axis},
                {"compact", compact},
                {"lambda", number(r.lambda)},
                {"lambda_over_N1_5", number(normalized(r))}};
    json arg = json::array();
    for (const auto& z : r.argmax) arg.push_back(complex_json(z));
    row["argmax"] = std::move(arg);
    json ang = json::array();
    for (double a : r.argmax_angles) ang.push_back(number(a));
    row["argmax_angles"] = std::move(ang);
    json sups = json::array();
    for (const auto& s : r.per_node_sup) sups.push_back({{"p", s.p}, {"q", s.q}, {"sup", number(s.sup)}});
    row["per_node_sup"] = std::move(sups);
    return row;
}

std::string lebesgue_csv_header() { return "N,d,m,grid,lambda,lambda/N^1.5,argmax_z_angle,argmax_w_angle\n"; }

std::string lebesgue_csv_row(const LebesgueReport& r) {
    std::ostringstream os;
    os << r.N << ',' << r.d << ',' << r.m << ',' << r.grid_per_axis << ',' << format_double(r.lambda) << ','
       << format_double(normalized(r)) << ',' << format_double(angle_or_nan(r, 0)) << ','
       << format_double(angle_or_nan(r, 1)) << '\n';
    return os.str();
}

std::string convergence_csv(std::span<const ConvergenceRow> rows) {
    std::ostringstream os;
    os << "d,N,sup_error,fitted_rate\n";
    for (const auto& r : rows)
        os << r.d << ',' << r.N << ',' << format_double(r.sup_error) << ',' << format_double(r.fitted_rate) << '\n';
    return os.str();
}

json convergence_json(std::span<const ConvergenceRow> rows) {
    json arr = json::array();
    for (const auto& r : rows)
        arr.push_back(
            {{"d", r.d}, {"N", r.N}, {"sup_error", number(r.sup_error)}, {"fitted_rate", number(r.fitted_rate)}});
    return arr;
}

namespace {

std::vector<PointS> read_points_json(const std::string& text) {
    const json doc = json::parse(text);
    std::vector<PointS> out;
    for (const auto& p : doc.at("points")) {
        PointS pt;
        for (const auto& c : p.at("coords")) pt.emplace_back(c.at("re").get<double>(), c.at("im").get<double>());
        out.push_back(std::move(pt));
    }
    return out;
}

std::vector<std::string> split(const std::string& line, char sep) {
    std::vector<std::string> cells;
    std::string cell;
    std::istringstream is(line);
    while (std::getline(is, cell, sep)) cells.push_back(cell);
    if (!line.empty() && line.back() == sep) cells.emplace_back();
    return cells;
}

double parse_double(const std::string& s) {
    std::size_t used = 0;
    const double v = std::stod(s, &used);
    if (used != s.size()) throw std::runtime_error("malformed number '" + s + "'");
    return v;
}

std::vector<PointS> read_points_csv(const std::string& text) {
    std::istringstream is(text);
    std::string line;
    if (!std::getline(is, line)) throw std::runtime_error("empty points file");
    const auto header = split(line, ',');
    std::vector<std::size_t> re_cols;
    for (std::size_t c = 0; c < header.size(); ++c)
        if (header[c].rfind("re_", 0) == 0) re_cols.push_back(c);
    if (re_cols.empty()) throw std::runtime_error("points CSV has no re_ columns");
    std::vector<PointS> out;
    while (std::getline(is, line)) {
        if (line.empty()) continue;
        const auto cells = split(line, ',');
        if (cells.size() != header.size()) throw std::runtime_error("points CSV row has the wrong column count");
        PointS pt;
        for (std::size_t c : re_cols) pt.emplace_back(parse_double(cells[c]), parse_double(cells[c + 1]));
        out.push_back(std::move(pt));
    }
    return out;
}

}  // namespace

std::vector<PointS> read_points(const std::string& text) {
    const auto first = text.find_first_not_of(" \t\r\n");
    if (first == std::string::npos) throw std::runtime_error("empty points file");
    try {
        auto pts = text[first] == '{' ? read_points_json(text) : read_points_csv(text);
        if (pts.empty()) throw std::runtime_error("points file lists no points");
        for (const auto& p : pts)
            if (p.size() != pts.front().size()) throw std::runtime_error("points have inconsistent dimensions");
        return pts;
    } catch (const json::exception& e) {
        throw std::runtime_error(std::string("malformed points JSON: ") + e.what());
    } catch (const std::logic_error& e) {  // std::stod failures
        throw std::runtime_error(std::string("malformed points CSV: ") + e.what());
    }
}

}  // namespace leja::io
