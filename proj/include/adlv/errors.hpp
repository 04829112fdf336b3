#pragma once

#include <stdexcept>

namespace adlv {

// Kottwitz points of mu and b differ; X_mu(b) is empty for that reason.
struct KappaMismatchError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Mazur inequality fails; X_mu(b) is empty.
struct MazurError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

}  // namespace adlv
