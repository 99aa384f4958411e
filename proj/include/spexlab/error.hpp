#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace spexlab {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Family constructor called with parameters outside its domain.
class InvalidSpec : public Error {
public:
    using Error::Error;
};

/// Caller-supplied data (vectors, vertex sets, partitions) is unusable.
class InvalidInput : public Error {
public:
    using Error::Error;
};

/// A documented precondition of an operation does not hold.
class PreconditionError : public Error {
public:
    using Error::Error;
};

/// The requested exhaustive computation exceeds its size guard.
class FeasibilityError : public Error {
public:
    using Error::Error;
};

/// Numerical routine failed to produce an answer (no root, no bracket).
class NumericError : public Error {
public:
    using Error::Error;
};

class ParseError : public Error {
public:
    ParseError(const std::string& what, std::size_t offset)
        : Error(what + " at byte " + std::to_string(offset)), offset_(offset)
    {
    }

    std::size_t offset() const noexcept { return offset_; }

private:
    std::size_t offset_;
};

class ConvergenceError : public Error {
public:
    ConvergenceError(const std::string& what, double residual, std::size_t iterations)
        : Error(what), residual_(residual), iterations_(iterations)
    {
    }

    double residual() const noexcept { return residual_; }
    std::size_t iterations() const noexcept { return iterations_; }

private:
    double residual_;
    std::size_t iterations_;
};

/// Partition handed to the quotient machinery is not equitable.
class EquitabilityError : public Error {
public:
    EquitabilityError(const std::string& what, std::size_t cell_i, std::size_t cell_j, int vertex_a,
                      int vertex_b)
        : Error(what), cell_i_(cell_i), cell_j_(cell_j), vertex_a_(vertex_a), vertex_b_(vertex_b)
    {
    }

    std::size_t cell_i() const noexcept { return cell_i_; }
    std::size_t cell_j() const noexcept { return cell_j_; }
    int vertex_a() const noexcept { return vertex_a_; }
    int vertex_b() const noexcept { return vertex_b_; }

private:
    std::size_t cell_i_;
    std::size_t cell_j_;
    int vertex_a_;
    int vertex_b_;
};

} // namespace spexlab
