#pragma once

#include <stdexcept>
#include <string>

namespace flexrig {

// One exception type per documented failure condition, so callers can match
// on the condition instead of parsing message text.

struct DivisionByZero : std::domain_error {
    explicit DivisionByZero(const std::string& what) : std::domain_error(what) {}
};

struct EvaluationPole : std::domain_error {
    explicit EvaluationPole(const std::string& what) : std::domain_error(what) {}
};

struct DegenerateCoupling : std::domain_error {
    explicit DegenerateCoupling(const std::string& what) : std::domain_error(what) {}
};

struct DimensionMismatch : std::invalid_argument {
    explicit DimensionMismatch(const std::string& what) : std::invalid_argument(what) {}
};

struct LoopEdge : std::invalid_argument {
    explicit LoopEdge(const std::string& what) : std::invalid_argument(what) {}
};

struct DuplicateEdge : std::invalid_argument {
    explicit DuplicateEdge(const std::string& what) : std::invalid_argument(what) {}
};

struct UnknownVertex : std::invalid_argument {
    explicit UnknownVertex(const std::string& what) : std::invalid_argument(what) {}
};

struct UnknownEdge : std::invalid_argument {
    explicit UnknownEdge(const std::string& what) : std::invalid_argument(what) {}
};

struct OutOfRange : std::out_of_range {
    explicit OutOfRange(const std::string& what) : std::out_of_range(what) {}
};

struct TooLarge : std::runtime_error {
    explicit TooLarge(const std::string& what) : std::runtime_error(what) {}
};

struct UnknownName : std::invalid_argument {
    explicit UnknownName(const std::string& what) : std::invalid_argument(what) {}
};

struct Disconnected : std::invalid_argument {
    explicit Disconnected(const std::string& what) : std::invalid_argument(what) {}
};

struct BaseListTooShort : std::invalid_argument {
    explicit BaseListTooShort(const std::string& what) : std::invalid_argument(what) {}
};

struct NotAnEdge : std::invalid_argument {
    explicit NotAnEdge(const std::string& what) : std::invalid_argument(what) {}
};

struct IrrationalLength : std::domain_error {
    explicit IrrationalLength(const std::string& what) : std::domain_error(what) {}
};

struct InvalidEmbedding : std::invalid_argument {
    explicit InvalidEmbedding(const std::string& what) : std::invalid_argument(what) {}
};

struct InvalidColoring : std::invalid_argument {
    explicit InvalidColoring(const std::string& what) : std::invalid_argument(what) {}
};

// An edge whose two endpoints coincide as functions of the parameter.
struct DegenerateEdge : std::domain_error {
    explicit DegenerateEdge(const std::string& what) : std::domain_error(what) {}
};

struct IoError : std::runtime_error {
    explicit IoError(const std::string& what) : std::runtime_error(what) {}
};

} // namespace flexrig
