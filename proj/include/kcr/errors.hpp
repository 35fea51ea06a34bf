#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace kcr {

// Base class for every error this library raises on purpose.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class ValidationError : public Error {
public:
    using Error::Error;
};

class JsonFormatError : public Error {
public:
    using Error::Error;
};

class UnknownIonError : public Error {
public:
    using Error::Error;
};

class MissingForceFieldError : public Error {
public:
    using Error::Error;
};

class DuplicatePairError : public Error {
public:
    using Error::Error;
};

// Two discs closer than their diameter allows.
class OverlapError : public Error {
public:
    OverlapError(const std::string& msg, int a, int b) : Error(msg), first(a), second(b) {}
    int first;
    int second;
};

class ScalingMismatchError : public Error {
public:
    using Error::Error;
};

// A constructed instance violates one of its own geometric guarantees.
class BuildError : public Error {
public:
    using Error::Error;
};

class NoBalancedSolutionError : public Error {
public:
    using Error::Error;
};

// Minimality checking refused: some |charge| exceeds the configured bound.
class MinimalityUndecidableError : public Error {
public:
    using Error::Error;
};

class CapExceededError : public Error {
public:
    using Error::Error;
};

// Knapsack capacity >= total weight: every item fits, no instance to build.
class TriviallySatisfiableError : public Error {
public:
    TriviallySatisfiableError(const std::string& msg, std::vector<int> items)
        : Error(msg), packing(std::move(items)) {}
    std::vector<int> packing;  // all item indices
};

}  // namespace kcr
