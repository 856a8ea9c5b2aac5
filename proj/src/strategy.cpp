#include "qrace/strategy.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace qrace {

MixedStrategy::MixedStrategy(std::vector<double> weights)
    : weights_(std::move(weights)) {
    if (weights_.empty()) throw std::invalid_argument("strategy must not be empty");
    double total = 0.0;
    for (std::size_t i = 0; i < weights_.size(); ++i) {
        const double w = weights_[i];
        if (!(w >= 0.0)) {
            throw std::invalid_argument("negative weight at time " + std::to_string(i + 1));
        }
        total += w;
        if (w > 0.0) support_.push_back(static_cast<int>(i + 1));
    }
    if (std::abs(total - 1.0) > 1e-12) {
        throw std::invalid_argument("strategy weights sum to " + std::to_string(total));
    }
}

MixedStrategy MixedStrategy::pure(int t, int k) {
    std::vector<double> w(static_cast<std::size_t>(k), 0.0);
    w.at(static_cast<std::size_t>(t - 1)) = 1.0;
    return MixedStrategy(std::move(w));
}

MixedStrategy MixedStrategy::uniform(int k) {
    std::vector<double> w(static_cast<std::size_t>(k), 1.0 / k);
    return MixedStrategy(std::move(w));
}

}  // namespace qrace
