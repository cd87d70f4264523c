#pragma once

#include <stdexcept>
#include <string>

namespace ila {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct IndexMismatch : Error {
    using Error::Error;
};
struct BadRename : Error {
    using Error::Error;
};
struct NullSubexpression : Error {
    using Error::Error;
};
struct BadPartition : Error {
    using Error::Error;
};
struct NotGenop : Error {
    using Error::Error;
};
struct BadSeed : Error {
    using Error::Error;
};
struct BadCap : Error {
    using Error::Error;
};
struct NotInvariant : Error {
    using Error::Error;
};
struct NothingToPlace : Error {
    using Error::Error;
};
struct DegreeMismatch : Error {
    using Error::Error;
};
struct UnplaceableFactor : Error {
    using Error::Error;
};
struct NotReachableByFeedback : Error {
    using Error::Error;
};
struct UnknownEdge : Error {
    using Error::Error;
};
struct NotAForest : Error {
    using Error::Error;
};
struct IllPosedNetwork : Error {
    using Error::Error;
};
struct SingularStatic : Error {
    using Error::Error;
};
struct TransferConditionsFail : Error {
    using Error::Error;
};
struct NotLinked : Error {
    using Error::Error;
};
struct DuplicateDevice : Error {
    using Error::Error;
};

struct ParseError : Error {
    int line = 0;
    int column = 0;
    ParseError(const std::string& what, int ln, int col)
        : Error("parse error at " + std::to_string(ln) + ":" + std::to_string(col) + ": " + what),
          line(ln),
          column(col) {}
};

// Internal consistency failure: a theorem-certified identity did not hold.
struct InternalCheck : Error {
    using Error::Error;
};

}  // namespace ila
