#ifndef SEJC_DIAGNOSTICS_HPP
#define SEJC_DIAGNOSTICS_HPP

#include <stdexcept>
#include <string>

namespace sejc {

// Compilation phases, used to prefix diagnostics and to pick CLI exit codes.
enum class Phase {
    Read,           // S-expression syntax
    Workspace,      // workspace structure, directives, arities, glb closure
    PreTranslation, // simplification, annotation, marking, renaming
    Translation,    // proper translation and unit building
    PostTranslation,
    Interpretation, // source interpreter
    Execution,      // target evaluator
    TestGen,
};

std::string phase_name(Phase p);

// Source position, 1-based; line 0 means unknown.
struct SourcePos {
    int line = 0;
    int col = 0;
};

class Error : public std::runtime_error {
public:
    Error(Phase phase, const std::string& message, SourcePos pos = {});
    Phase phase() const { return phase_; }
    SourcePos pos() const { return pos_; }
    // The message without the phase/position prefix that what() carries.
    const std::string& raw_message() const { return raw_; }

private:
    Phase phase_;
    SourcePos pos_;
    std::string raw_;
};

// Syntax errors from the S-expression reader.
class ReadError : public Error {
public:
    ReadError(const std::string& message, SourcePos pos = {})
        : Error(Phase::Read, message, pos) {}
};

// Semantic errors in a workspace: unknown functions, arity mismatches,
// malformed or failing type directives, duplicate definitions.
class WorkspaceError : public Error {
public:
    WorkspaceError(const std::string& message, SourcePos pos = {})
        : Error(Phase::Workspace, message, pos) {}
};

// A pair of declared input-type tuples has a pointwise glb that is not
// itself declared, so overload selection would be ambiguous.
class MissingGlbType : public WorkspaceError {
public:
    explicit MissingGlbType(const std::string& message) : WorkspaceError(message) {}
};

// Errors raised while evaluating, by either the source interpreter or the
// target evaluator.
class EvalError : public Error {
public:
    EvalError(Phase phase, const std::string& message) : Error(phase, message) {}
};

class CastError : public EvalError {
public:
    explicit CastError(const std::string& message)
        : EvalError(Phase::Execution, message) {}
};

class NoApplicableOverload : public EvalError {
public:
    explicit NoApplicableOverload(const std::string& message)
        : EvalError(Phase::Execution, message) {}
};

class AmbiguousOverload : public EvalError {
public:
    explicit AmbiguousOverload(const std::string& message)
        : EvalError(Phase::Execution, message) {}
};

class DepthExceeded : public EvalError {
public:
    explicit DepthExceeded(const std::string& message)
        : EvalError(Phase::Execution, message) {}
};

// The interpreter's optional step budget ran out; used to bound
// directive-validation and fuzzing samples on possibly-divergent calls.
class StepLimitExceeded : public EvalError {
public:
    explicit StepLimitExceeded(Phase phase)
        : EvalError(phase, "step limit exceeded") {}
};

} // namespace sejc

#endif
