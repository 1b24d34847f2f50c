#include "decafsa/instance.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>

namespace decafsa {

namespace {

std::string trim(std::string_view s) {
    size_t a = s.find_first_not_of(" \t\r\n");
    if (a == std::string_view::npos) return {};
    size_t b = s.find_last_not_of(" \t\r\n");
    return std::string(s.substr(a, b - a + 1));
}

// Splits "KEY : value" / "KEY: value" headers; returns false for non-header lines.
bool split_header(const std::string& line, std::string& key, std::string& value) {
    size_t colon = line.find(':');
    if (colon == std::string::npos) return false;
    key = trim(line.substr(0, colon));
    value = trim(line.substr(colon + 1));
    return !key.empty();
}

}  // namespace

TspInstance parse_tsplib(std::string_view text) {
    TspInstance inst;
    int dimension = -1;
    bool saw_edge_weight_type = false;
    bool in_coords = false;
    int coords_read = 0;
    int coord_section_line = 0;

    std::istringstream in{std::string(text)};
    std::string raw;
    int lineno = 0;
    while (std::getline(in, raw)) {
        ++lineno;
        std::string line = trim(raw);
        if (line.empty()) continue;
        if (line == "EOF") break;

        if (!in_coords) {
            if (line == "NODE_COORD_SECTION") {
                if (dimension < 0)
                    throw ParseError(lineno, "NODE_COORD_SECTION before DIMENSION");
                in_coords = true;
                coord_section_line = lineno;
                continue;
            }
            std::string key, value;
            if (!split_header(line, key, value))
                throw ParseError(lineno, "malformed header line: '" + line + "'");
            if (key == "NAME") {
                inst.name = value;
            } else if (key == "DIMENSION") {
                try {
                    dimension = std::stoi(value);
                } catch (const std::exception&) {
                    throw ParseError(lineno, "DIMENSION is not an integer: '" + value + "'");
                }
                if (dimension < 1)
                    throw ParseError(lineno, "DIMENSION must be >= 1");
            } else if (key == "EDGE_WEIGHT_TYPE") {
                if (value != "EUC_2D")
                    throw ParseError(lineno, "unsupported EDGE_WEIGHT_TYPE: '" + value + "'");
                saw_edge_weight_type = true;
            }
            // TYPE, COMMENT and other headers are accepted and ignored.
            continue;
        }

        // Coordinate row: "index x y".
        std::istringstream row(line);
        long long index;
        double x, y;
        if (!(row >> index >> x >> y))
            throw ParseError(lineno, "expected 'index x y', got: '" + line + "'");
        std::string extra;
        if (row >> extra)
            throw ParseError(lineno, "trailing tokens after coordinates: '" + extra + "'");
        inst.coords.push_back({x, y});
        ++coords_read;
        if (coords_read > dimension)
            throw ParseError(lineno, "more coordinate rows than DIMENSION = " +
                                         std::to_string(dimension));
    }

    if (dimension < 0) throw ParseError(lineno, "missing DIMENSION header");
    if (!saw_edge_weight_type)
        throw ParseError(lineno, "missing EDGE_WEIGHT_TYPE header");
    if (!in_coords) throw ParseError(lineno, "missing NODE_COORD_SECTION");
    if (coords_read != dimension)
        throw ParseError(coord_section_line,
                         "DIMENSION = " + std::to_string(dimension) + " but " +
                             std::to_string(coords_read) + " coordinate rows");

    inst.n = dimension;
    inst.metric = Metric::RealEuclidean;
    return inst;
}

TspInstance load_tsplib_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open instance file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_tsplib(buf.str());
}

std::string to_tsplib(const TspInstance& instance) {
    std::ostringstream out;
    out.precision(17);
    out << "NAME: " << instance.name << "\n";
    out << "TYPE: TSP\n";
    out << "DIMENSION: " << instance.n << "\n";
    out << "EDGE_WEIGHT_TYPE: EUC_2D\n";
    out << "NODE_COORD_SECTION\n";
    for (int i = 0; i < instance.n; ++i)
        out << (i + 1) << " " << instance.coords[i].x << " " << instance.coords[i].y << "\n";
    out << "EOF\n";
    return out.str();
}

DistanceMatrix distance_matrix(const TspInstance& instance) {
    const int n = instance.n;
    std::vector<double> d(static_cast<size_t>(n) * n, 0.0);
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            double dx = instance.coords[i].x - instance.coords[j].x;
            double dy = instance.coords[i].y - instance.coords[j].y;
            double dist = std::hypot(dx, dy);
            if (instance.metric == Metric::TsplibRounded) dist = std::round(dist);
            d[static_cast<size_t>(i) * n + j] = dist;
            d[static_cast<size_t>(j) * n + i] = dist;
        }
    }
    return DistanceMatrix(n, std::move(d));
}

}  // namespace decafsa
