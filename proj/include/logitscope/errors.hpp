#pragma once

#include <stdexcept>
#include <string>

namespace logitscope {

// Error taxonomy shared by all modules. Messages always name the offending
// input (tensor, token, path, layer/position, ...).
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Non-finite or otherwise out-of-domain numeric input.
class InvalidInputError : public Error {
public:
    using Error::Error;
};

// Dimension or layout mismatch between two values.
class ShapeError : public Error {
public:
    using Error::Error;
};

// Malformed file content (vocab, merges, tensor archive, corpus record).
class FormatError : public Error {
public:
    using Error::Error;
};

// Index outside its documented interval.
class RangeError : public Error {
public:
    using Error::Error;
};

// Sequence longer than the model context window.
class ContextOverflowError : public Error {
public:
    using Error::Error;
};

// NaN/Inf produced inside the forward pass or the lens.
class NumericFaultError : public Error {
public:
    using Error::Error;
};

// Corpus filtering left nothing to analyze.
class EmptyCorpusError : public Error {
public:
    using Error::Error;
};

// Filesystem-level failure.
class IoError : public Error {
public:
    using Error::Error;
};

}  // namespace logitscope
