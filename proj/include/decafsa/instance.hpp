#ifndef DECAFSA_INSTANCE_HPP
#define DECAFSA_INSTANCE_HPP

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace decafsa {

// How city distances are evaluated for a whole instance.
//   RealEuclidean : plain Euclidean distance, kept as a real value.
//   TsplibRounded : Euclidean distance rounded to nearest integer (the
//                   canonical TSPLIB EUC_2D convention, e.g. eil101 = 629).
enum class Metric { RealEuclidean, TsplibRounded };

struct Point {
    double x = 0.0;
    double y = 0.0;
};

struct TspInstance {
    std::string name;
    int n = 0;
    std::vector<Point> coords;
    Metric metric = Metric::RealEuclidean;
};

// Thrown by parse_tsplib; line is 1-based into the parsed text.
class ParseError : public std::runtime_error {
public:
    ParseError(int line, const std::string& what)
        : std::runtime_error("line " + std::to_string(line) + ": " + what),
          line_(line) {}
    int line() const { return line_; }

private:
    int line_;
};

// Parses the TSPLIB EUC_2D subset: NAME, DIMENSION, EDGE_WEIGHT_TYPE: EUC_2D
// and a NODE_COORD_SECTION of DIMENSION rows "index x y", terminated by EOF
// or end of input. Nodes are re-indexed 0..n-1 in file order.
TspInstance parse_tsplib(std::string_view text);

TspInstance load_tsplib_file(const std::string& path);

// Serializes back to the same TSPLIB subset (round-trips through
// parse_tsplib with identical coordinates).
std::string to_tsplib(const TspInstance& instance);

// Dense symmetric distance matrix with zero diagonal.
class DistanceMatrix {
public:
    DistanceMatrix() = default;
    DistanceMatrix(int n, std::vector<double> values)
        : n_(n), d_(std::move(values)) {}

    int n() const { return n_; }
    double at(int i, int j) const { return d_[static_cast<size_t>(i) * n_ + j]; }

private:
    int n_ = 0;
    std::vector<double> d_;
};

DistanceMatrix distance_matrix(const TspInstance& instance);

}  // namespace decafsa

#endif
