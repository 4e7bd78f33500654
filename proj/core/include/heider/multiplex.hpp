#pragma once

#include <array>
#include <cmath>

#include "heider/matrix.hpp"

namespace heider {

/// Interlayer coupling strengths. beta1 is how strongly layer 2's link
/// weights pull on layer 1's dynamics; beta2 the reverse. Negative values
/// are accepted but lie outside the validated range of the model.
struct CouplingParams {
    double beta1 = 0.0;
    double beta2 = 0.0;
};

/// Two link-weight layers over the same node set. Construction validates
/// matching sizes, n >= 3 and weights in [-1, +1]; symmetry and the zero
/// diagonal are structural properties of WeightMatrix.
class MultiplexState {
public:
    MultiplexState(WeightMatrix layer1, WeightMatrix layer2)
        : layers_{std::move(layer1), std::move(layer2)} {
        if (layers_[0].size() != layers_[1].size())
            throw UsageError("MultiplexState: layers must share the same node set");
        if (layers_[0].size() < 3)
            throw UsageError("MultiplexState: node count must be >= 3");
        for (const auto& layer : layers_)
            for (double w : layer.flat())
                if (!(std::fabs(w) <= 1.0))
                    throw UsageError("MultiplexState: link weights must lie in [-1, +1]");
    }

    int size() const { return layers_[0].size(); }

    const WeightMatrix& layer(int k) const { return layers_[static_cast<std::size_t>(k)]; }
    WeightMatrix& layer(int k) { return layers_[static_cast<std::size_t>(k)]; }

    bool operator==(const MultiplexState&) const = default;

private:
    std::array<WeightMatrix, 2> layers_;
};

}  // namespace heider
