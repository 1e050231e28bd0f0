#include "numsg/errors.hpp"

namespace numsg {

ClosureViolation::ClosureViolation(int a, int b)
    : Error("not additively closed: " + std::to_string(a) + " + " + std::to_string(b) + " = " +
            std::to_string(a + b) + " is missing"),
      a_(a),
      b_(b) {}

MissingZero::MissingZero() : Error("element list must start with 0") {}

NotCofinite::NotCofinite(int gcd)
    : Error("generators have gcd " + std::to_string(gcd) + ", complement is infinite"), gcd_(gcd) {}

NotSpecialGap::NotSpecialGap(int h) : Error(std::to_string(h) + " is not a special gap") {}

NotMinimalGenerator::NotMinimalGenerator(int x)
    : Error(std::to_string(x) + " is not a minimal generator") {}

LimitExceeded::LimitExceeded(std::string const& what, std::size_t reached)
    : Error(what), reached_(reached) {}

}  // namespace numsg
