#include "decafsa/afsa.hpp"

#include <stdexcept>

namespace decafsa {

namespace {

double schedule(int k, int max_iters, double current, double initial, double beta) {
    if (max_iters < 2) throw std::invalid_argument("schedule requires K >= 2");
    double weight = 1.0 - static_cast<double>(k - 1) / (max_iters - 1);
    if (weight >= beta) return weight * current;
    return beta * initial;
}

}  // namespace

double schedule_visual(int k, int max_iters, double visual_k, double visual_0,
                       double beta) {
    return schedule(k, max_iters, visual_k, visual_0, beta);
}

double schedule_step(int k, int max_iters, double step_k, double step_0,
                     double beta) {
    return schedule(k, max_iters, step_k, step_0, beta);
}

double logistic_step(double x, double mu) {
    if (x <= 0.0 || x >= 1.0)
        throw std::domain_error("logistic_step requires x in (0,1)");
    return mu * x * (1.0 - x);
}

}  // namespace decafsa
