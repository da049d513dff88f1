#ifndef DPC_ERRORS_HPP
#define DPC_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace dpc {

// Root of every error this library throws. Subtypes carry no extra state;
// the message holds the context (row numbers, column names, sizes).
struct DpcError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// --- dataset ingestion ---
struct EmptyFileError : DpcError {
    using DpcError::DpcError;
};
struct MissingColumnError : DpcError {
    using DpcError::DpcError;
};
struct NonNumericCellError : DpcError {
    using DpcError::DpcError;
};
struct DuplicateSampleIdError : DpcError {
    using DpcError::DpcError;
};

// --- splitting / statistics ---
struct TooFewExperimentsError : DpcError {
    using DpcError::DpcError;
};
struct TooFewValuesError : DpcError {
    using DpcError::DpcError;
};

// --- pairing / models ---
struct UnknownPropertyError : DpcError {
    using DpcError::DpcError;
};
struct DimensionMismatchError : DpcError {
    using DpcError::DpcError;
};
struct EmptyDatasetError : DpcError {
    using DpcError::DpcError;
};
struct WrongBackboneKindError : DpcError {
    using DpcError::DpcError;
};

// --- training ---
struct NonFiniteLossError : DpcError {
    using DpcError::DpcError;
};

// --- configuration / evaluation protocol ---
struct InvalidConfigError : DpcError {
    using DpcError::DpcError;
};
struct KTooLargeError : DpcError {
    using DpcError::DpcError;
};

}  // namespace dpc

#endif  // DPC_ERRORS_HPP
