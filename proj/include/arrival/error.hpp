#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace arrival {

// Every failure carries a stable machine-readable kind; the CLI maps kinds
// to error.kind in its JSON output and exits 1.
class Error : public std::runtime_error {
public:
    Error(std::string kind, const std::string& what)
        : std::runtime_error(what), kind_(std::move(kind)) {}

    const std::string& kind() const { return kind_; }

private:
    std::string kind_;
};

#define ARRIVAL_ERROR(NAME)                                       \
    struct NAME : Error {                                         \
        explicit NAME(const std::string& w) : Error(#NAME, w) {}  \
    }

ARRIVAL_ERROR(ParseError);
ARRIVAL_ERROR(DomainError);
ARRIVAL_ERROR(EmptyMergeSet);
ARRIVAL_ERROR(NotSuperset);
ARRIVAL_ERROR(StateSpaceExceeded);
ARRIVAL_ERROR(UnreachableTarget);
ARRIVAL_ERROR(NonUniformProbabilities);
ARRIVAL_ERROR(DegreeMismatch);
ARRIVAL_ERROR(OrderViolation);
ARRIVAL_ERROR(NonMonotoneCDF);
ARRIVAL_ERROR(TooManyEdges);
ARRIVAL_ERROR(DivergentDiagonal);
ARRIVAL_ERROR(NotATree);
ARRIVAL_ERROR(IoError);

#undef ARRIVAL_ERROR

}  // namespace arrival
