#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace signet {

// Base class for every error raised by the toolkit. Data/usage errors derive
// from this so callers (and the CLI) can map them to exit codes uniformly.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

#define SIGNET_DEFINE_ERROR(NAME)                                  \
    class NAME : public Error {                                    \
    public:                                                        \
        explicit NAME(const std::string& msg) : Error(msg) {}      \
    }

SIGNET_DEFINE_ERROR(SelfLoop);
SIGNET_DEFINE_ERROR(ConflictingSign);
SIGNET_DEFINE_ERROR(UnknownUser);
SIGNET_DEFINE_ERROR(NegativeCount);
SIGNET_DEFINE_ERROR(OutOfRangeScore);
SIGNET_DEFINE_ERROR(DuplicateRating);
SIGNET_DEFINE_ERROR(InfeasibleConfig);
SIGNET_DEFINE_ERROR(MissingSource);
SIGNET_DEFINE_ERROR(DimensionMismatch);
SIGNET_DEFINE_ERROR(DegenerateDesign);
SIGNET_DEFINE_ERROR(EmptyData);
SIGNET_DEFINE_ERROR(TooFewExamples);
SIGNET_DEFINE_ERROR(SingleClass);
SIGNET_DEFINE_ERROR(LengthMismatch);
SIGNET_DEFINE_ERROR(DegenerateSamples);
SIGNET_DEFINE_ERROR(TooFewObservations);
SIGNET_DEFINE_ERROR(TooFewPairs);
SIGNET_DEFINE_ERROR(TooFewUsers);
SIGNET_DEFINE_ERROR(InfeasibleSubsample);
SIGNET_DEFINE_ERROR(ConfigInvalid);

#undef SIGNET_DEFINE_ERROR

// Parse failure; carries the 1-based line number of the offending record.
class MalformedRecord : public Error {
public:
    MalformedRecord(std::size_t line, const std::string& msg)
        : Error("line " + std::to_string(line) + ": " + msg), line_(line) {}
    std::size_t line() const { return line_; }

private:
    std::size_t line_;
};

class DidNotConverge : public Error {
public:
    DidNotConverge(const std::string& msg, double grad_norm)
        : Error(msg), grad_norm_(grad_norm) {}
    double grad_norm() const { return grad_norm_; }

private:
    double grad_norm_;
};

}  // namespace signet
