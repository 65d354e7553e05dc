#pragma once

#include <stdexcept>
#include <string>

namespace adsgeo {

enum class ErrorKind {
    OffManifold,
    NotTangent,
    NotHorizontal,
    EmptyTrajectory,
    OutOfDomain,
    BranchAmbiguity,
    DegenerateConfiguration,
    ThetaSignLoss,
    IncompatiblePair,
    DomainError,
    UnsupportedCase,
    NormalizationError,
    CaseBoundary,
    StepFailure,
    DiagnosticBreach,
    ChartSingularity,
};

const char* to_string(ErrorKind k);

/// Base of every error raised by the library. `kind()` is stable and is what
/// the CLI prints as the machine-readable reason.
class Error : public std::runtime_error {
public:
    Error(ErrorKind k, const std::string& what)
        : std::runtime_error(what), kind_(k) {}
    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

template <ErrorKind K>
class TypedError : public Error {
public:
    explicit TypedError(const std::string& what) : Error(K, what) {}
};

using OffManifold = TypedError<ErrorKind::OffManifold>;
using NotTangent = TypedError<ErrorKind::NotTangent>;
using NotHorizontal = TypedError<ErrorKind::NotHorizontal>;
using EmptyTrajectory = TypedError<ErrorKind::EmptyTrajectory>;
using OutOfDomain = TypedError<ErrorKind::OutOfDomain>;
using BranchAmbiguity = TypedError<ErrorKind::BranchAmbiguity>;
using DegenerateConfiguration = TypedError<ErrorKind::DegenerateConfiguration>;
using ThetaSignLoss = TypedError<ErrorKind::ThetaSignLoss>;
using IncompatiblePair = TypedError<ErrorKind::IncompatiblePair>;
using DomainError = TypedError<ErrorKind::DomainError>;
using UnsupportedCase = TypedError<ErrorKind::UnsupportedCase>;
using NormalizationError = TypedError<ErrorKind::NormalizationError>;
using CaseBoundary = TypedError<ErrorKind::CaseBoundary>;
using StepFailure = TypedError<ErrorKind::StepFailure>;
using DiagnosticBreach = TypedError<ErrorKind::DiagnosticBreach>;
using ChartSingularity = TypedError<ErrorKind::ChartSingularity>;

}  // namespace adsgeo
