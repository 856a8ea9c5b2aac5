#pragma once

#include <vector>

namespace qrace {

// Probability distribution over the measuring times 1..K.
// The support is exactly the set of times with positive weight.
class MixedStrategy {
public:
    // Validates nonnegativity and that the weights sum to 1 within 1e-12.
    explicit MixedStrategy(std::vector<double> weights);

    static MixedStrategy pure(int t, int k);
    static MixedStrategy uniform(int k);

    int size() const { return static_cast<int>(weights_.size()); }
    double weight(int t) const { return weights_[t - 1]; }
    const std::vector<double>& weights() const { return weights_; }

    // Times with positive weight, ascending, 1-based.
    const std::vector<int>& support() const { return support_; }

    bool operator==(const MixedStrategy&) const = default;

private:
    std::vector<double> weights_;
    std::vector<int> support_;
};

}  // namespace qrace
