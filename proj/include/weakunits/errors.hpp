#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "weakunits/ids.hpp"

namespace weakunits {

// Malformed input: dangling ids, missing table entries, unreadable files.
class StructuralError : public std::runtime_error {
public:
    explicit StructuralError(const std::string& what, std::vector<std::string> issues = {})
        : std::runtime_error(what), issues_(std::move(issues)) {}
    const std::vector<std::string>& issues() const { return issues_; }

private:
    std::vector<std::string> issues_;
};

class BoundaryError : public std::runtime_error {
public:
    BoundaryError(std::string path, const std::string& what)
        : std::runtime_error(path + ": " + what), path_(std::move(path)) {}
    const std::string& path() const { return path_; }

private:
    std::string path_;
};

// A division or a synthesis step did not have exactly one solution.
class UniquenessError : public std::runtime_error {
public:
    enum class Kind { NoPreimage, MultiplePreimages };

    UniquenessError(Kind kind, std::string step, std::vector<TwoCellId> witnesses = {})
        : std::runtime_error(std::string(kind == Kind::NoPreimage ? "no preimage" : "multiple preimages") +
                             " in " + step),
          kind_(kind), step_(std::move(step)), witnesses_(std::move(witnesses)) {}

    Kind kind() const { return kind_; }
    const std::string& step() const { return step_; }
    const std::vector<TwoCellId>& witnesses() const { return witnesses_; }

private:
    Kind kind_;
    std::string step_;
    std::vector<TwoCellId> witnesses_;
};

// A mathematical precondition failed (e.g. the object is not cancellable).
class CertificationError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace weakunits
