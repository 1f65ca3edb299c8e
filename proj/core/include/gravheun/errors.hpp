#pragma once

#include <stdexcept>
#include <string>

namespace gravheun {

// Base class for failures of a numerical method (as opposed to bad input,
// which is reported with std::invalid_argument).
class NumericalError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// A series or iteration did not reach its tolerance within the term cap.
class ConvergenceError : public NumericalError {
public:
    ConvergenceError(const std::string& what, int terms);
    int terms() const noexcept { return terms_; }

private:
    int terms_;
};

// Evaluation at a pole of a gamma function or a Pochhammer denominator.
class PoleError : public NumericalError {
public:
    using NumericalError::NumericalError;
};

// Frobenius series at a resonant index k where the recurrence leaves
// `obstruction * a_k = 0` with obstruction != 0: a log term is needed.
class ResonanceError : public NumericalError {
public:
    ResonanceError(int index, double obstruction);
    int index() const noexcept { return index_; }
    double obstruction() const noexcept { return obstruction_; }

private:
    int index_;
    double obstruction_;
};

// Division by alpha_n = 0 in the Hermite-expansion recurrence.
class RecurrenceBreakdown : public NumericalError {
public:
    explicit RecurrenceBreakdown(int index);
    int index() const noexcept { return index_; }

private:
    int index_;
};

// Adaptive integrator could not keep the step above its floor.
class StepUnderflow : public NumericalError {
public:
    StepUnderflow(const std::string& what, double x);
    double where() const noexcept { return x_; }

private:
    double x_;
};

}  // namespace gravheun
