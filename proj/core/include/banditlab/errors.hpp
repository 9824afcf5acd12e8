#pragma once

#include <stdexcept>
#include <string>

namespace banditlab {

struct BanditError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct OutOfRangeProbability : BanditError {
    using BanditError::BanditError;
};

struct EmptyScenario : BanditError {
    using BanditError::BanditError;
};

struct InvalidBudget : BanditError {
    using BanditError::BanditError;
};

struct InvalidShapeParameter : BanditError {
    using BanditError::BanditError;
};

struct UnknownArm : BanditError {
    using BanditError::BanditError;
};

struct InvalidReward : BanditError {
    using BanditError::BanditError;
};

struct UnplayedArm : BanditError {
    using BanditError::BanditError;
};

struct ConfigInvalid : BanditError {
    using BanditError::BanditError;
};

struct MixedConfig : BanditError {
    using BanditError::BanditError;
};

}  // namespace banditlab
