#include "gravheun/errors.hpp"

#include <sstream>

namespace gravheun {

ConvergenceError::ConvergenceError(const std::string& what, int terms)
    : NumericalError(what + " (no convergence after " + std::to_string(terms) + " terms)"),
      terms_(terms) {}

namespace {
std::string resonance_message(int index, double obstruction) {
    std::ostringstream os;
    os.precision(17);
    os << "Frobenius resonance at k = " << index << ": obstruction " << obstruction
       << " != 0, a logarithmic solution is required";
    return os.str();
}
}  // namespace

ResonanceError::ResonanceError(int index, double obstruction)
    : NumericalError(resonance_message(index, obstruction)),
      index_(index),
      obstruction_(obstruction) {}

RecurrenceBreakdown::RecurrenceBreakdown(int index)
    : NumericalError("Hermite recurrence divides by alpha_n = 0 at n = " + std::to_string(index)),
      index_(index) {}

StepUnderflow::StepUnderflow(const std::string& what, double x)
    : NumericalError(what), x_(x) {}

}  // namespace gravheun
