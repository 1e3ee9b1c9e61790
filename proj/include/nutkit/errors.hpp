#pragma once

#include <stdexcept>

namespace nutkit {

struct InvalidParams : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct CoverNotSimple : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct NotSquare : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct DimensionMismatch : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct NonMonicDivisor : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct ZeroDivisor : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct ZeroArgument : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

} // namespace nutkit
